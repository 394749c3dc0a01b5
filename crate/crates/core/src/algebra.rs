//! Classification, strength scoring and comparison of signatures, and the
//! contextual factuality lookup a signature induces.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::types::{
    CertaintyDegree, FactualityValue, InferenceValue, InferentialClass, Polarity, Signature,
    SignatureSlot,
};

/// Maps a signature to its inferential class. Intermediate magnitudes
/// (0.6 to 0.8) fall in with neutral.
pub fn classify(sig: Signature) -> InferentialClass {
    use InferenceValue::Graded;
    use InferentialClass::*;
    let (p, n) = sig.magnitudes();
    match (sig.pos, sig.neg) {
        (Graded(10), Graded(10)) => Factive,
        (Graded(-10), Graded(-10)) => CounterFactive,
        _ if p == 10 && n == 10 => TwoWayImplicative,
        _ if p == 10 => OneWayPlusImplicative,
        _ if n == 10 => OneWayMinusImplicative,
        _ if p == 9 && n == 9 => TwoWayQuasiImplicative,
        _ if p == 9 || n == 9 => OneWayQuasiImplicative,
        _ => Neutral,
    }
}

/// Same entailment under both polarities: `1|1` or `-1|-1`.
pub fn is_factive(sig: Signature) -> bool {
    sig.pos.is_max() && sig.pos == sig.neg
}

/// Not factive, with an entailment under at least one polarity.
pub fn is_implicative(sig: Signature) -> bool {
    !is_factive(sig) && (sig.pos.is_max() || sig.neg.is_max())
}

/// Inference strength on the 0..=5 colour scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrengthLevel(u8);

impl StrengthLevel {
    pub const UNANNOTATED: StrengthLevel = StrengthLevel(0);
    pub const MAX: StrengthLevel = StrengthLevel(5);

    pub fn new(level: u8) -> Option<StrengthLevel> {
        (level <= 5).then_some(StrengthLevel(level))
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for StrengthLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn strength_level(slot: SignatureSlot) -> StrengthLevel {
    let Some(sig) = slot.signature() else {
        return StrengthLevel::UNANNOTATED;
    };
    let (p, n) = sig.magnitudes();
    StrengthLevel(match (p, n) {
        (10, 10) => 5,
        (10, _) | (_, 10) => 4,
        (9, 9) => 3,
        (9, _) | (_, 9) => 2,
        _ => 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrengthOrdering {
    Weaker,
    Stronger,
    Equal,
    Incomparable,
}

impl fmt::Display for StrengthOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrengthOrdering::Weaker => "weaker",
            StrengthOrdering::Stronger => "stronger",
            StrengthOrdering::Equal => "equal",
            StrengthOrdering::Incomparable => "incomparable",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("cannot compare the strength of an unannotated slot ({0})")]
pub struct NotComparable(pub SignatureSlot);

/// Componentwise comparison of `(|pos|, |neg|)`: `a` is weaker than `b`
/// when no component is larger and one is strictly smaller.
pub fn compare_strength(
    a: SignatureSlot,
    b: SignatureSlot,
) -> Result<StrengthOrdering, NotComparable> {
    let a_sig = a.signature().ok_or(NotComparable(a))?;
    let b_sig = b.signature().ok_or(NotComparable(b))?;
    Ok(compare_magnitudes(a_sig.magnitudes(), b_sig.magnitudes()))
}

pub(crate) fn compare_magnitudes(a: (u8, u8), b: (u8, u8)) -> StrengthOrdering {
    if a == b {
        StrengthOrdering::Equal
    } else if a.0 <= b.0 && a.1 <= b.1 {
        StrengthOrdering::Weaker
    } else if a.0 >= b.0 && a.1 >= b.1 {
        StrengthOrdering::Stronger
    } else {
        StrengthOrdering::Incomparable
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MappingMode {
    /// 1 → CT, 0.9 → PR, everything weaker → U.
    Paper,
    /// 1 → CT, 0.9 → PR, 0.6 to 0.8 → PS.
    Fine,
}

impl FromStr for MappingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(MappingMode::Paper),
            "fine" => Ok(MappingMode::Fine),
            _ => Err(format!("unknown degree mapping {s:?} (expected paper or fine)")),
        }
    }
}

impl fmt::Display for MappingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MappingMode::Paper => "paper",
            MappingMode::Fine => "fine",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("degree mapping is not monotone: magnitude 0.{weaker} maps above magnitude 0.{stronger}")]
pub struct NonMonotoneMapping {
    pub weaker: u8,
    pub stronger: u8,
}

/// Maps inference magnitudes to certainty degrees. Neutral always maps to U.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreeMapping {
    // Indexed by magnitude in tenths minus 6: 0.6, 0.7, 0.8, 0.9, 1.
    degrees: [CertaintyDegree; 5],
}

impl DegreeMapping {
    pub fn paper() -> DegreeMapping {
        use CertaintyDegree::*;
        DegreeMapping {
            degrees: [U, U, U, PR, CT],
        }
    }

    pub fn fine() -> DegreeMapping {
        use CertaintyDegree::*;
        DegreeMapping {
            degrees: [PS, PS, PS, PR, CT],
        }
    }

    pub fn for_mode(mode: MappingMode) -> DegreeMapping {
        match mode {
            MappingMode::Paper => DegreeMapping::paper(),
            MappingMode::Fine => DegreeMapping::fine(),
        }
    }

    /// Custom mapping for magnitudes `[0.6, 0.7, 0.8, 0.9, 1]`.
    pub fn custom(degrees: [CertaintyDegree; 5]) -> Result<DegreeMapping, NonMonotoneMapping> {
        for i in 0..4 {
            if degrees[i] > degrees[i + 1] {
                return Err(NonMonotoneMapping {
                    weaker: i as u8 + 6,
                    stronger: i as u8 + 7,
                });
            }
        }
        Ok(DegreeMapping { degrees })
    }

    /// Degree for a magnitude in tenths (0 = neutral).
    pub fn degree(&self, magnitude: u8) -> CertaintyDegree {
        match magnitude {
            6..=10 => self.degrees[magnitude as usize - 6],
            _ => CertaintyDegree::U,
        }
    }
}

impl Default for DegreeMapping {
    fn default() -> Self {
        DegreeMapping::paper()
    }
}

/// Factuality of the embedded event given the signature of its embedding
/// predicate and the contextual factuality the predicate occurs in.
pub fn lookup_factuality(
    sig: Signature,
    context: FactualityValue,
    mapping: &DegreeMapping,
) -> FactualityValue {
    if context.degree() == CertaintyDegree::U {
        return FactualityValue::UU;
    }
    let selected = match context.polarity() {
        Polarity::Positive => sig.pos,
        Polarity::Negative => sig.neg,
        Polarity::Unknown => {
            if sig.pos.is_neutral() && sig.neg.is_neutral() {
                return FactualityValue::UU;
            }
            let strongest = sig.pos.magnitude().max(sig.neg.magnitude());
            let degree = context.degree().min(mapping.degree(strongest));
            return FactualityValue::saturating(degree, Polarity::Unknown);
        }
    };
    if selected.is_neutral() {
        return FactualityValue::UU;
    }
    let degree = context.degree().min(mapping.degree(selected.magnitude()));
    FactualityValue::saturating(degree, selected.sign())
}

/// One column of a factuality grid. The three U columns all behave as `Uu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridColumn {
    pub degree: CertaintyDegree,
    pub polarity: Polarity,
}

impl GridColumn {
    pub fn context(self) -> FactualityValue {
        FactualityValue::saturating(self.degree, self.polarity)
    }
}

impl fmt::Display for GridColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.degree, self.polarity)
    }
}

/// The 12 context columns in table order: CT+ CT- CTu PR+ ... U+ U- Uu.
pub fn grid_columns() -> [GridColumn; 12] {
    let mut columns = [GridColumn {
        degree: CertaintyDegree::U,
        polarity: Polarity::Unknown,
    }; 12];
    let mut i = 0;
    for degree in CertaintyDegree::ALL {
        for polarity in Polarity::ALL {
            columns[i] = GridColumn { degree, polarity };
            i += 1;
        }
    }
    columns
}

pub type Grid = [FactualityValue; 12];

pub fn generate_grid(sig: Signature, mapping: &DegreeMapping) -> Grid {
    grid_columns().map(|column| lookup_factuality(sig, column.context(), mapping))
}

/// Tab-separated grid row in column order.
pub fn format_grid(grid: &Grid) -> String {
    grid.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\t")
}
