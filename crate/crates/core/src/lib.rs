//! Inferential signatures of French clause-embedding verbs, the factuality
//! values they induce on embedded events, and a lexicon of annotated readings.
//!
//! ```
//! use factualis::{generate_grid, parse_signature, DegreeMapping};
//!
//! let sig = parse_signature("1|-1").unwrap().signature().unwrap();
//! let grid = generate_grid(sig, &DegreeMapping::paper());
//! assert_eq!(grid[0].to_string(), "CT+");
//! ```

pub mod algebra;
pub mod lexicon;
pub mod projection;
pub mod stats;
pub mod types;

pub use algebra::{
    classify, compare_strength, format_grid, generate_grid, grid_columns, is_factive,
    is_implicative, lookup_factuality, strength_level, DegreeMapping, Grid, GridColumn,
    MappingMode, NonMonotoneMapping, NotComparable, StrengthLevel, StrengthOrdering,
};
pub use lexicon::{
    convert_sheet, load_tsv, merge_duplicates, select_slot, validate, write_tsv, Animacy, Aspect,
    Classing, ContextSlots, EventKind, Lexicon, LoadError, PfvUnknownPolicy, Reading, ReadingKey,
    ResolveError, SlotError, Source, SubcatFrame, ValidationReport,
};
pub use projection::{
    parse_clause, project, project_text, render_profiles, ClauseNode, FactualityProfile,
    ProjectionConfig, ProjectionError, SourceChain,
};
pub use stats::{ReportName, StatsConfig};
pub use types::{
    format_signature, parse_signature, CertaintyDegree, ContextKey, FactualityValue,
    InferenceValue, InferentialClass, ParseSignatureError, Polarity, Signature, SignatureSlot,
};
