//! The signature lexicon: readings of clause-embedding verbs with one
//! signature slot per annotation context.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{classify, compare_strength, strength_level, StrengthOrdering};
use crate::types::{ContextKey, InferentialClass, Signature, SignatureSlot};

mod convert;
mod merge;
mod tsv;
mod validate;

pub use convert::{convert_sheet, SHEET_COLUMNS};
pub use merge::merge_duplicates;
pub use tsv::{load_tsv, write_tsv, LineError, LoadError, TSV_COLUMNS};
pub use validate::{validate, Finding, Severity, SlotCounts, ValidationReport};

const SEED_TSV: &str = include_str!("../../data/seed.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    Lvf,
    Lglex,
    Merged,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Lvf => "LVF",
            Source::Lglex => "LGLEX",
            Source::Merged => "MERGED",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Source {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "LVF" => Ok(Source::Lvf),
            "LGLEX" => Ok(Source::Lglex),
            "MERGED" => Ok(Source::Merged),
            _ => Err(format!("unknown source {s:?}")),
        }
    }
}

/// Embedded clause types a reading subcategorises for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubcatFrame {
    /// `à` + infinitive
    AInf,
    /// `de` + infinitive
    DeInf,
    /// bare infinitive
    Inf,
    /// tensed `que` clause
    Que,
}

impl SubcatFrame {
    pub const ALL: [SubcatFrame; 4] = [
        SubcatFrame::AInf,
        SubcatFrame::DeInf,
        SubcatFrame::Inf,
        SubcatFrame::Que,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SubcatFrame::AInf => "aInf",
            SubcatFrame::DeInf => "deInf",
            SubcatFrame::Inf => "inf",
            SubcatFrame::Que => "que",
        }
    }

    pub fn is_infinitival(self) -> bool {
        !matches!(self, SubcatFrame::Que)
    }
}

impl fmt::Display for SubcatFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubcatFrame {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SubcatFrame::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown subcategorisation frame {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    Clause,
    EventNp,
}

impl EventKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::Clause => "clause",
            EventKind::EventNp => "eventNP",
        }
    }
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EventKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "clause" => Ok(EventKind::Clause),
            "eventNP" => Ok(EventKind::EventNp),
            _ => Err(format!("unknown event kind {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Aspect {
    Pfv,
    Imp,
}

impl fmt::Display for Aspect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Aspect::Pfv => "pfv",
            Aspect::Imp => "imp",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Animacy {
    Anim,
    Inanim,
    Unknown,
}

impl fmt::Display for Animacy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Animacy::Anim => "anim",
            Animacy::Inanim => "inanim",
            Animacy::Unknown => "unknown",
        })
    }
}

/// One slot per annotation context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ContextSlots {
    pub pfv_anim: SignatureSlot,
    pub pfv_inanim: SignatureSlot,
    pub imp: SignatureSlot,
}

impl ContextSlots {
    pub fn new(pfv_anim: SignatureSlot, pfv_inanim: SignatureSlot, imp: SignatureSlot) -> Self {
        ContextSlots {
            pfv_anim,
            pfv_inanim,
            imp,
        }
    }

    pub fn get(&self, key: ContextKey) -> SignatureSlot {
        match key {
            ContextKey::PfvAnim => self.pfv_anim,
            ContextKey::PfvInanim => self.pfv_inanim,
            ContextKey::Imp => self.imp,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (ContextKey, SignatureSlot)> + '_ {
        ContextKey::ALL.into_iter().map(|k| (k, self.get(k)))
    }

    pub fn any_annotated(&self) -> bool {
        self.iter().any(|(_, s)| s.is_annotated())
    }
}

impl fmt::Display for ContextSlots {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {} / {}", self.pfv_anim, self.pfv_inanim, self.imp)
    }
}

/// Which perfective slot classes a reading when both are annotated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Classing {
    #[default]
    AnimFirst,
    InanimFirst,
}

impl Classing {
    fn order(self) -> [ContextKey; 2] {
        match self {
            Classing::AnimFirst => [ContextKey::PfvAnim, ContextKey::PfvInanim],
            Classing::InanimFirst => [ContextKey::PfvInanim, ContextKey::PfvAnim],
        }
    }
}

impl fmt::Display for Classing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classing::AnimFirst => "PFV_ANIM first",
            Classing::InanimFirst => "PFV_INANIM first",
        })
    }
}

/// What `select_slot` does for a perfective occurrence of unknown animacy
/// whose two perfective signatures differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PfvUnknownPolicy {
    #[default]
    Weaker,
    Error,
}

impl fmt::Display for PfvUnknownPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PfvUnknownPolicy::Weaker => "weaker",
            PfvUnknownPolicy::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReadingKey {
    pub lemma: String,
    pub reading_id: String,
    pub source: Source,
}

impl fmt::Display for ReadingKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ({})", self.lemma, self.reading_id, self.source)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReadingError {
    #[error("empty lemma")]
    EmptyLemma,
    #[error("empty reading id")]
    EmptyReadingId,
    #[error("all slots unannotated")]
    Unannotated,
    #[error("cogniser slots on a reading that does not introduce a source")]
    CogniserWithoutSip,
    #[error("no embedded event kind")]
    NoEventKind,
}

/// One verb sense/valence entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reading {
    pub lemma: String,
    pub reading_id: String,
    pub source: Source,
    pub gloss: String,
    /// Source-introducing predicate.
    pub sip: bool,
    pub subcat: BTreeSet<SubcatFrame>,
    pub slots: ContextSlots,
    pub cogniser_slots: Option<ContextSlots>,
    pub event_kinds: BTreeSet<EventKind>,
}

impl Reading {
    pub fn key(&self) -> ReadingKey {
        ReadingKey {
            lemma: self.lemma.clone(),
            reading_id: self.reading_id.clone(),
            source: self.source,
        }
    }

    /// Checks the per-reading invariants.
    pub fn check(&self) -> Result<(), ReadingError> {
        if self.lemma.trim().is_empty() {
            return Err(ReadingError::EmptyLemma);
        }
        if self.reading_id.trim().is_empty() {
            return Err(ReadingError::EmptyReadingId);
        }
        if !self.slots.any_annotated() {
            return Err(ReadingError::Unannotated);
        }
        if self.cogniser_slots.is_some() && !self.sip {
            return Err(ReadingError::CogniserWithoutSip);
        }
        if self.event_kinds.is_empty() {
            return Err(ReadingError::NoEventKind);
        }
        Ok(())
    }

    /// True if `id` names this reading, including any component of a
    /// merged `05+06` style id.
    pub fn answers_to(&self, id: &str) -> bool {
        self.reading_id == id || self.reading_id.split('+').any(|part| part == id)
    }

    /// The perfective signature used to class the reading.
    pub fn pfv_signature(&self, classing: Classing) -> Option<(ContextKey, Signature)> {
        classing
            .order()
            .into_iter()
            .find_map(|k| self.slots.get(k).signature().map(|s| (k, s)))
    }

    pub fn pfv_class(&self, classing: Classing) -> Option<InferentialClass> {
        self.pfv_signature(classing).map(|(_, s)| classify(s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SlotError {
    #[error("context {context} is {marker} for this reading")]
    Unannotated {
        context: ContextKey,
        marker: SignatureSlot,
    },
    #[error("perfective signatures differ by animacy ({anim} vs {inanim}) and animacy is unknown")]
    UnknownAnimacy { anim: Signature, inanim: Signature },
}

/// Selects the signature for an occurrence with the given aspect and
/// subject animacy.
pub fn select_slot(
    reading: &Reading,
    aspect: Aspect,
    animacy: Animacy,
    policy: PfvUnknownPolicy,
) -> Result<Signature, SlotError> {
    select_from(&reading.slots, aspect, animacy, policy)
}

pub(crate) fn select_from(
    slots: &ContextSlots,
    aspect: Aspect,
    animacy: Animacy,
    policy: PfvUnknownPolicy,
) -> Result<Signature, SlotError> {
    let annotated = |context: ContextKey| {
        let slot = slots.get(context);
        slot.signature()
            .ok_or(SlotError::Unannotated { context, marker: slot })
    };
    match (aspect, animacy) {
        (Aspect::Imp, _) => annotated(ContextKey::Imp),
        (Aspect::Pfv, Animacy::Anim) => annotated(ContextKey::PfvAnim),
        (Aspect::Pfv, Animacy::Inanim) => annotated(ContextKey::PfvInanim),
        (Aspect::Pfv, Animacy::Unknown) => {
            match (annotated(ContextKey::PfvAnim), annotated(ContextKey::PfvInanim)) {
                (Ok(anim), Ok(inanim)) if anim == inanim => Ok(anim),
                (Ok(anim), Ok(inanim)) => match policy {
                    PfvUnknownPolicy::Error => Err(SlotError::UnknownAnimacy { anim, inanim }),
                    PfvUnknownPolicy::Weaker => Ok(weaker_of(anim, inanim)),
                },
                (Ok(sig), Err(_)) | (Err(_), Ok(sig)) => Ok(sig),
                (Err(e), Err(_)) => Err(e),
            }
        }
    }
}

// Incomparable pairs fall back to the lower strength level, then to the
// animate signature.
fn weaker_of(anim: Signature, inanim: Signature) -> Signature {
    match compare_strength(anim.into(), inanim.into()) {
        Ok(StrengthOrdering::Stronger) => inanim,
        Ok(StrengthOrdering::Incomparable)
            if strength_level(inanim.into()) < strength_level(anim.into()) =>
        {
            inanim
        }
        _ => anim,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("no reading {lemma}:{reading_id} in the lexicon")]
    Unknown { lemma: String, reading_id: String },
    #[error("reading {lemma}:{reading_id} is ambiguous ({candidates})")]
    Ambiguous {
        lemma: String,
        reading_id: String,
        candidates: String,
    },
}

/// Optional filters for [`Lexicon::query`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryFilter {
    pub class: Option<InferentialClass>,
    pub subcat: Option<SubcatFrame>,
    pub sip: Option<bool>,
}

/// Immutable collection of readings indexed by lemma.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: Vec<Reading>,
    index: HashMap<String, Vec<usize>>,
}

impl Lexicon {
    /// Builds a lexicon without checking invariants; see [`validate`].
    pub fn from_readings(entries: Vec<Reading>) -> Lexicon {
        let mut index: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, r) in entries.iter().enumerate() {
            index.entry(r.lemma.clone()).or_default().push(i);
        }
        Lexicon { entries, index }
    }

    /// The bundled seed lexicon of attested readings.
    pub fn seed() -> Lexicon {
        let (lex, errors) = load_tsv(SEED_TSV.as_bytes()).expect("seed lexicon is valid UTF-8");
        assert!(errors.is_empty(), "seed lexicon has row errors: {errors:?}");
        lex
    }

    pub fn seed_tsv() -> &'static str {
        SEED_TSV
    }

    pub fn entries(&self) -> &[Reading] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Reading> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn readings_of<'a>(&'a self, lemma: &str) -> impl Iterator<Item = &'a Reading> + 'a {
        self.index
            .get(lemma)
            .map(Vec::as_slice)
            .unwrap_or(&[])
            .iter()
            .map(move |&i| &self.entries[i])
    }

    pub fn lemmas(&self) -> BTreeSet<&str> {
        self.index.keys().map(String::as_str).collect()
    }

    /// Readings of `lemma` that pass every supplied filter. The class filter
    /// applies to the classing perfective signature (animate preferred).
    pub fn query(&self, lemma: &str, filter: &QueryFilter) -> Vec<&Reading> {
        self.readings_of(lemma)
            .filter(|r| {
                filter
                    .class
                    .is_none_or(|c| r.pfv_class(Classing::AnimFirst) == Some(c))
            })
            .filter(|r| filter.subcat.is_none_or(|f| r.subcat.contains(&f)))
            .filter(|r| filter.sip.is_none_or(|sip| r.sip == sip))
            .collect()
    }

    pub fn resolve(&self, lemma: &str, reading_id: &str) -> Result<&Reading, ResolveError> {
        let matches: Vec<&Reading> = self
            .readings_of(lemma)
            .filter(|r| r.reading_id == reading_id)
            .collect();
        let matches = if matches.is_empty() {
            self.readings_of(lemma)
                .filter(|r| r.answers_to(reading_id))
                .collect()
        } else {
            matches
        };
        match matches.as_slice() {
            [] => Err(ResolveError::Unknown {
                lemma: lemma.to_string(),
                reading_id: reading_id.to_string(),
            }),
            [one] => Ok(one),
            many => Err(ResolveError::Ambiguous {
                lemma: lemma.to_string(),
                reading_id: reading_id.to_string(),
                candidates: many
                    .iter()
                    .map(|r| r.key().to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            }),
        }
    }
}
