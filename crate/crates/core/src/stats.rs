//! Lexicon-level aggregates: strength distribution, aspect and animacy
//! effects, and subcategorisation patterns of inferentially polysemous verbs.
//!
//! Every report is a pure function of the lexicon contents; entry order
//! never matters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::algebra::{compare_magnitudes, is_factive, is_implicative, strength_level, StrengthOrdering};
use crate::lexicon::{Classing, Lexicon, SubcatFrame};
use crate::types::{ContextKey, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatsConfig {
    /// Which perfective slot classes a reading annotated in both.
    pub classing: Classing,
    pub decimal_separator: char,
}

impl Default for StatsConfig {
    fn default() -> Self {
        StatsConfig {
            classing: Classing::AnimFirst,
            decimal_separator: '.',
        }
    }
}

pub fn percentage(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        0.0
    } else {
        100.0 * part as f64 / whole as f64
    }
}

fn decimal(value: f64, places: usize, separator: char) -> String {
    let text = format!("{value:.places$}");
    if separator == '.' {
        text
    } else {
        text.replace('.', &separator.to_string())
    }
}

/// Plain-text table with left-aligned first column and right-aligned rest.
fn table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            let pad = widths[c] - cell.chars().count();
            if c == 0 {
                line.push_str(cell);
                line.push_str(&" ".repeat(pad));
            } else {
                line.push_str("  ");
                line.push_str(&" ".repeat(pad));
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn tsv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join("\t") + "\n").collect()
}

/// Common rendering for every report.
pub trait Report {
    fn title(&self) -> &'static str;
    /// Header row first.
    fn rows(&self, config: &StatsConfig) -> Vec<Vec<String>>;

    fn render_text(&self, config: &StatsConfig) -> String {
        format!("# {}\n{}", self.title(), table(&self.rows(config)))
    }

    fn render_tsv(&self, config: &StatsConfig) -> String {
        format!("# {}\n{}", self.title(), tsv(&self.rows(config)))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StrengthHistogram {
    pub per_context: BTreeMap<ContextKey, [usize; 6]>,
    pub overall: [usize; 6],
}

impl StrengthHistogram {
    pub fn total(&self) -> usize {
        self.overall.iter().sum()
    }
}

pub fn strength_histogram(lex: &Lexicon) -> StrengthHistogram {
    let mut hist = StrengthHistogram {
        per_context: ContextKey::ALL.into_iter().map(|k| (k, [0; 6])).collect(),
        overall: [0; 6],
    };
    for r in lex.entries() {
        for (key, slot) in r.slots.iter() {
            let level = strength_level(slot).value() as usize;
            hist.per_context.get_mut(&key).unwrap()[level] += 1;
            hist.overall[level] += 1;
        }
    }
    hist
}

impl Report for StrengthHistogram {
    fn title(&self) -> &'static str {
        "strength histogram (signatures per strength level)"
    }

    fn rows(&self, _: &StatsConfig) -> Vec<Vec<String>> {
        let mut rows = vec![vec![
            "level".to_string(),
            "PFV_ANIM".into(),
            "PFV_INANIM".into(),
            "IMP".into(),
            "overall".into(),
        ]];
        for level in (0..6).rev() {
            let mut row = vec![level.to_string()];
            for key in ContextKey::ALL {
                row.push(self.per_context[&key][level].to_string());
            }
            row.push(self.overall[level].to_string());
            rows.push(row);
        }
        rows
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassChange {
    /// Readings of the class with both a perfective and an imperfective signature.
    pub n_with_both: usize,
    /// Those whose imperfective signature differs from the perfective one.
    pub n_changed: usize,
}

impl ClassChange {
    pub fn pct_changed(&self) -> f64 {
        percentage(self.n_changed, self.n_with_both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AspectDependenceReport {
    pub classing: Classing,
    pub factive: ClassChange,
    pub implicative: ClassChange,
}

fn classing_pairs(lex: &Lexicon, classing: Classing) -> impl Iterator<Item = (Signature, Signature)> + '_ {
    lex.entries().iter().filter_map(move |r| {
        let (_, pfv) = r.pfv_signature(classing)?;
        let imp = r.slots.imp.signature()?;
        Some((pfv, imp))
    })
}

pub fn aspect_dependence(lex: &Lexicon, classing: Classing) -> AspectDependenceReport {
    let mut report = AspectDependenceReport {
        classing,
        factive: ClassChange::default(),
        implicative: ClassChange::default(),
    };
    for (pfv, imp) in classing_pairs(lex, classing) {
        let bucket = if is_factive(pfv) {
            &mut report.factive
        } else if is_implicative(pfv) {
            &mut report.implicative
        } else {
            continue;
        };
        bucket.n_with_both += 1;
        if imp != pfv {
            bucket.n_changed += 1;
        }
    }
    report
}

impl Report for AspectDependenceReport {
    fn title(&self) -> &'static str {
        "aspect dependence (IMP vs PFV signature)"
    }

    fn rows(&self, config: &StatsConfig) -> Vec<Vec<String>> {
        let sep = config.decimal_separator;
        let row = |name: &str, c: &ClassChange| {
            vec![
                name.to_string(),
                c.n_with_both.to_string(),
                c.n_changed.to_string(),
                decimal(c.pct_changed(), 1, sep),
            ]
        };
        vec![
            vec![
                format!("class ({})", self.classing),
                "with IMP and PFV".into(),
                "IMP != PFV".into(),
                "%".into(),
            ],
            row("factive under PFV", &self.factive),
            row("implicative under PFV", &self.implicative),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeakeningReport {
    pub classing: Classing,
    pub n_weaker: usize,
    pub n_stronger: usize,
    pub n_unchanged: usize,
    pub n_incomparable: usize,
}

impl WeakeningReport {
    pub fn population(&self) -> usize {
        self.n_weaker + self.n_stronger + self.n_unchanged + self.n_incomparable
    }

    /// Denominator for the percentages: comparable readings only.
    pub fn comparable(&self) -> usize {
        self.n_weaker + self.n_stronger + self.n_unchanged
    }

    pub fn pct(&self, count: usize) -> f64 {
        percentage(count, self.comparable())
    }
}

/// Buckets readings implicative under PFV (with an IMP signature) by how
/// the imperfective signature compares.
pub fn imperfective_weakening(lex: &Lexicon, classing: Classing) -> WeakeningReport {
    let mut report = WeakeningReport {
        classing,
        n_weaker: 0,
        n_stronger: 0,
        n_unchanged: 0,
        n_incomparable: 0,
    };
    for (pfv, imp) in classing_pairs(lex, classing) {
        if !is_implicative(pfv) {
            continue;
        }
        match compare_magnitudes(imp.magnitudes(), pfv.magnitudes()) {
            StrengthOrdering::Weaker => report.n_weaker += 1,
            StrengthOrdering::Stronger => report.n_stronger += 1,
            StrengthOrdering::Equal => report.n_unchanged += 1,
            StrengthOrdering::Incomparable => report.n_incomparable += 1,
        }
    }
    report
}

impl Report for WeakeningReport {
    fn title(&self) -> &'static str {
        "imperfective weakening (readings implicative under PFV)"
    }

    fn rows(&self, config: &StatsConfig) -> Vec<Vec<String>> {
        let sep = config.decimal_separator;
        let row = |name: &str, n: usize, pct: bool| {
            vec![
                name.to_string(),
                n.to_string(),
                if pct {
                    decimal(self.pct(n), 1, sep)
                } else {
                    "-".to_string()
                },
            ]
        };
        vec![
            vec![format!("IMP vs PFV ({})", self.classing), "n".into(), "%".into()],
            row("weaker", self.n_weaker, true),
            row("stronger", self.n_stronger, true),
            row("no change", self.n_unchanged, true),
            row("incomparable", self.n_incomparable, false),
            row("population", self.population(), false),
        ]
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MeanStrength {
    pub sum: usize,
    pub count: usize,
}

impl MeanStrength {
    pub fn mean(&self) -> Option<f64> {
        (self.count > 0).then(|| self.sum as f64 / self.count as f64)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MeanStrengthReport {
    pub per_context: BTreeMap<ContextKey, MeanStrength>,
}

/// Mean strength level over annotated slots (levels 1 to 5) per context.
pub fn mean_strength_by_context(lex: &Lexicon) -> MeanStrengthReport {
    let mut per_context: BTreeMap<ContextKey, MeanStrength> =
        ContextKey::ALL.into_iter().map(|k| (k, MeanStrength::default())).collect();
    for r in lex.entries() {
        for (key, slot) in r.slots.iter() {
            let level = strength_level(slot).value() as usize;
            if level > 0 {
                let m = per_context.get_mut(&key).unwrap();
                m.sum += level;
                m.count += 1;
            }
        }
    }
    MeanStrengthReport { per_context }
}

impl Report for MeanStrengthReport {
    fn title(&self) -> &'static str {
        "mean strength by context (levels 1-5)"
    }

    fn rows(&self, config: &StatsConfig) -> Vec<Vec<String>> {
        let mut rows = vec![vec!["context".to_string(), "signatures".into(), "mean".into()]];
        for (key, m) in &self.per_context {
            rows.push(vec![
                key.to_string(),
                m.count.to_string(),
                m.mean()
                    .map_or("-".to_string(), |v| decimal(v, 2, config.decimal_separator)),
            ]);
        }
        rows
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnimacyVerdict {
    InanimateStronger,
    AnimateStronger,
    Tie,
    Incomparable,
}

impl fmt::Display for AnimacyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AnimacyVerdict::InanimateStronger => "inanimate_stronger",
            AnimacyVerdict::AnimateStronger => "animate_stronger",
            AnimacyVerdict::Tie => "tie",
            AnimacyVerdict::Incomparable => "incomparable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbAnimacy {
    pub lemma: String,
    pub max_animate: u8,
    pub max_inanimate: u8,
    pub verdict: AnimacyVerdict,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnimacyComparison {
    pub verbs: Vec<VerbAnimacy>,
}

impl AnimacyComparison {
    pub fn count(&self, verdict: AnimacyVerdict) -> usize {
        self.verbs.iter().filter(|v| v.verdict == verdict).count()
    }
}

/// Per verb with perfective signatures on both animacy sides, compares the
/// maximum strength level reached on each side. Equal levels are a tie
/// unless the two sides' componentwise maximal magnitudes are incomparable.
pub fn animacy_comparison(lex: &Lexicon) -> AnimacyComparison {
    #[derive(Default)]
    struct Side {
        level: u8,
        sup: (u8, u8),
        seen: bool,
    }
    let mut sides: BTreeMap<&str, (Side, Side)> = BTreeMap::new();
    for r in lex.entries() {
        let (anim, inanim) = sides.entry(r.lemma.as_str()).or_default();
        for (side, slot) in [(anim, r.slots.pfv_anim), (inanim, r.slots.pfv_inanim)] {
            if let Some(sig) = slot.signature() {
                let (p, n) = sig.magnitudes();
                side.seen = true;
                side.level = side.level.max(strength_level(slot).value());
                side.sup = (side.sup.0.max(p), side.sup.1.max(n));
            }
        }
    }
    let verbs = sides
        .into_iter()
        .filter(|(_, (a, i))| a.seen && i.seen)
        .map(|(lemma, (a, i))| {
            let verdict = match i.level.cmp(&a.level) {
                std::cmp::Ordering::Greater => AnimacyVerdict::InanimateStronger,
                std::cmp::Ordering::Less => AnimacyVerdict::AnimateStronger,
                std::cmp::Ordering::Equal => {
                    if compare_magnitudes(a.sup, i.sup) == StrengthOrdering::Incomparable {
                        AnimacyVerdict::Incomparable
                    } else {
                        AnimacyVerdict::Tie
                    }
                }
            };
            VerbAnimacy {
                lemma: lemma.to_string(),
                max_animate: a.level,
                max_inanimate: i.level,
                verdict,
            }
        })
        .collect();
    AnimacyComparison { verbs }
}

impl Report for AnimacyComparison {
    fn title(&self) -> &'static str {
        "animacy comparison (verbs with PFV signatures for both subject types)"
    }

    fn rows(&self, _: &StatsConfig) -> Vec<Vec<String>> {
        let mut rows = vec![vec![
            "verb".to_string(),
            "max anim".into(),
            "max inanim".into(),
            "verdict".into(),
        ]];
        for v in &self.verbs {
            rows.push(vec![
                v.lemma.clone(),
                v.max_animate.to_string(),
                v.max_inanimate.to_string(),
                v.verdict.to_string(),
            ]);
        }
        rows.push(vec!["verbs".into(), String::new(), String::new(), self.verbs.len().to_string()]);
        for verdict in [
            AnimacyVerdict::InanimateStronger,
            AnimacyVerdict::AnimateStronger,
            AnimacyVerdict::Tie,
            AnimacyVerdict::Incomparable,
        ] {
            rows.push(vec![
                verdict.to_string(),
                String::new(),
                String::new(),
                self.count(verdict).to_string(),
            ]);
        }
        rows
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FactiveAnimacyReport {
    /// Readings factive under PFV with an animate subject.
    pub n_factive_animate: usize,
    /// Those that also have an inanimate-subject signature.
    pub n_also_inanimate: usize,
}

pub fn factive_animacy_restriction(lex: &Lexicon) -> FactiveAnimacyReport {
    let mut report = FactiveAnimacyReport::default();
    for r in lex.entries() {
        if r.slots.pfv_anim.signature().is_some_and(is_factive) {
            report.n_factive_animate += 1;
            if r.slots.pfv_inanim.is_annotated() {
                report.n_also_inanimate += 1;
            }
        }
    }
    report
}

impl Report for FactiveAnimacyReport {
    fn title(&self) -> &'static str {
        "factive animacy restriction"
    }

    fn rows(&self, _: &StatsConfig) -> Vec<Vec<String>> {
        vec![
            vec!["readings".to_string(), "n".into()],
            vec!["factive with animate subject".into(), self.n_factive_animate.to_string()],
            vec!["  also with inanimate subject".into(), self.n_also_inanimate.to_string()],
        ]
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CrosstabColumn {
    pub population: usize,
    pub inf: usize,
    pub que: usize,
    pub inf_not_que: usize,
    pub que_not_inf: usize,
}

impl CrosstabColumn {
    fn add(&mut self, subcat: &BTreeSet<SubcatFrame>) {
        let inf = subcat.iter().any(|f| f.is_infinitival());
        let que = subcat.contains(&SubcatFrame::Que);
        self.population += 1;
        self.inf += inf as usize;
        self.que += que as usize;
        self.inf_not_que += (inf && !que) as usize;
        self.que_not_inf += (que && !inf) as usize;
    }

    pub fn pct_inf(&self) -> f64 {
        percentage(self.inf, self.population)
    }

    pub fn pct_que(&self) -> f64 {
        percentage(self.que, self.population)
    }

    pub fn pct_inf_not_que(&self) -> f64 {
        percentage(self.inf_not_que, self.population)
    }

    pub fn pct_que_not_inf(&self) -> f64 {
        percentage(self.que_not_inf, self.population)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrosstabReport {
    pub classing: Classing,
    /// Verbs with both a factive and an implicative reading.
    pub n_verbs: usize,
    pub implicative: CrosstabColumn,
    pub factive: CrosstabColumn,
}

/// Subcategorisation of the factive and implicative readings of verbs that
/// have both kinds.
pub fn subcat_crosstab(lex: &Lexicon, classing: Classing) -> CrosstabReport {
    type Frames<'a> = Vec<&'a BTreeSet<SubcatFrame>>;
    let mut by_verb: BTreeMap<&str, (Frames, Frames)> = BTreeMap::new();
    for r in lex.entries() {
        let Some((_, sig)) = r.pfv_signature(classing) else {
            continue;
        };
        let (implicative, factive) = by_verb.entry(r.lemma.as_str()).or_default();
        if is_factive(sig) {
            factive.push(&r.subcat);
        } else if is_implicative(sig) {
            implicative.push(&r.subcat);
        }
    }
    let mut report = CrosstabReport {
        classing,
        n_verbs: 0,
        implicative: CrosstabColumn::default(),
        factive: CrosstabColumn::default(),
    };
    for (implicative, factive) in by_verb.values() {
        if implicative.is_empty() || factive.is_empty() {
            continue;
        }
        report.n_verbs += 1;
        implicative.iter().for_each(|s| report.implicative.add(s));
        factive.iter().for_each(|s| report.factive.add(s));
    }
    report
}

impl Report for CrosstabReport {
    fn title(&self) -> &'static str {
        "subcategorisation of inferentially polysemous verbs"
    }

    fn rows(&self, config: &StatsConfig) -> Vec<Vec<String>> {
        let sep = config.decimal_separator;
        let (i, f) = (&self.implicative, &self.factive);
        let row = |name: &str, a: f64, b: f64| {
            vec![name.to_string(), decimal(a, 1, sep), decimal(b, 1, sep)]
        };
        vec![
            vec![
                format!("% of readings ({} verbs, {})", self.n_verbs, self.classing),
                format!("implicative ({})", i.population),
                format!("factive ({})", f.population),
            ],
            row("+INF", i.pct_inf(), f.pct_inf()),
            row("+QUE", i.pct_que(), f.pct_que()),
            row("+INF -QUE", i.pct_inf_not_que(), f.pct_inf_not_que()),
            row("-INF +QUE", i.pct_que_not_inf(), f.pct_que_not_inf()),
        ]
    }
}

/// Named reports available from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportName {
    Histogram,
    Aspect,
    Weakening,
    Means,
    Animacy,
    FactiveAnimacy,
    Crosstab,
}

impl ReportName {
    pub const ALL: [ReportName; 7] = [
        ReportName::Histogram,
        ReportName::Aspect,
        ReportName::Weakening,
        ReportName::Means,
        ReportName::Animacy,
        ReportName::FactiveAnimacy,
        ReportName::Crosstab,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReportName::Histogram => "histogram",
            ReportName::Aspect => "aspect",
            ReportName::Weakening => "weakening",
            ReportName::Means => "means",
            ReportName::Animacy => "animacy",
            ReportName::FactiveAnimacy => "factive-animacy",
            ReportName::Crosstab => "crosstab",
        }
    }

    pub fn compute(self, lex: &Lexicon, config: &StatsConfig) -> Box<dyn Report> {
        match self {
            ReportName::Histogram => Box::new(strength_histogram(lex)),
            ReportName::Aspect => Box::new(aspect_dependence(lex, config.classing)),
            ReportName::Weakening => Box::new(imperfective_weakening(lex, config.classing)),
            ReportName::Means => Box::new(mean_strength_by_context(lex)),
            ReportName::Animacy => Box::new(animacy_comparison(lex)),
            ReportName::FactiveAnimacy => Box::new(factive_animacy_restriction(lex)),
            ReportName::Crosstab => Box::new(subcat_crosstab(lex, config.classing)),
        }
    }
}

impl fmt::Display for ReportName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ReportName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ReportName::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<_> = ReportName::ALL.iter().map(|r| r.as_str()).collect();
                format!("unknown report {s:?}; valid names: {}, all", names.join(", "))
            })
    }
}

/// Renders the given reports, blank-line separated.
pub fn render_reports(
    names: &[ReportName],
    lex: &Lexicon,
    config: &StatsConfig,
    as_tsv: bool,
) -> String {
    let mut out = String::new();
    for (i, name) in names.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let report = name.compute(lex, config);
        let text = if as_tsv {
            report.render_tsv(config)
        } else {
            report.render_text(config)
        };
        let _ = write!(out, "{text}");
    }
    out
}
