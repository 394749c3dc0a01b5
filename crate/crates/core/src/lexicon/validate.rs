use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::merge::merge_key;
use super::{Lexicon, ReadingKey};
use crate::types::{ContextKey, SignatureSlot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub severity: Severity,
    pub entry: ReadingKey,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.severity, self.entry, self.message)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SlotCounts {
    pub signature: usize,
    pub not_applicable: usize,
    pub ungrammatical: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub entries: usize,
    pub findings: Vec<Finding>,
    pub counts: BTreeMap<ContextKey, SlotCounts>,
}

impl ValidationReport {
    pub fn error_count(&self) -> usize {
        self.findings
            .iter()
            .filter(|f| f.severity == Severity::Error)
            .count()
    }

    pub fn warning_count(&self) -> usize {
        self.findings.len() - self.error_count()
    }

    pub fn is_ok(&self) -> bool {
        self.error_count() == 0
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} entries, {} errors, {} warnings",
            self.entries,
            self.error_count(),
            self.warning_count()
        )?;
        writeln!(f, "{:<12}{:>6}{:>6}{:>6}", "context", "sig", "NA", "UNGR")?;
        for (key, c) in &self.counts {
            writeln!(
                f,
                "{:<12}{:>6}{:>6}{:>6}",
                key.as_str(),
                c.signature,
                c.not_applicable,
                c.ungrammatical
            )?;
        }
        for finding in &self.findings {
            writeln!(f, "{finding}")?;
        }
        Ok(())
    }
}

/// Checks reading invariants, key uniqueness and a few corpus-level
/// sanity rules. Errors break an invariant; warnings flag entries worth a
/// second look.
pub fn validate(lex: &Lexicon) -> ValidationReport {
    let mut report = ValidationReport {
        entries: lex.len(),
        counts: ContextKey::ALL
            .into_iter()
            .map(|k| (k, SlotCounts::default()))
            .collect(),
        ..Default::default()
    };
    let mut push = |severity, entry: ReadingKey, message: String| {
        report.findings.push(Finding {
            severity,
            entry,
            message,
        })
    };

    let mut seen_keys = HashMap::new();
    let mut seen_merge_keys = HashMap::new();
    let mut frames: HashMap<_, Vec<usize>> = HashMap::new();
    for (i, r) in lex.entries().iter().enumerate() {
        let key = r.key();
        if let Err(e) = r.check() {
            push(Severity::Error, key.clone(), e.to_string());
        }
        if let Some(first) = seen_keys.insert(key.clone(), i) {
            push(
                Severity::Error,
                key.clone(),
                format!("duplicate key (first seen at entry {})", first + 1),
            );
        }
        if let Some(&first) = seen_merge_keys.get(&merge_key(r)) {
            let other: &super::Reading = &lex.entries()[first];
            push(
                Severity::Warning,
                key.clone(),
                format!("identical to {}; mergeable", other.key()),
            );
        } else {
            seen_merge_keys.insert(merge_key(r), i);
        }
        frames
            .entry((r.lemma.clone(), r.subcat.clone(), r.sip))
            .or_default()
            .push(i);

        let pfv_unannotated =
            !r.slots.pfv_anim.is_annotated() && !r.slots.pfv_inanim.is_annotated();
        if r.slots.imp.is_annotated() && pfv_unannotated {
            push(
                Severity::Warning,
                key.clone(),
                "suspicious: imperfective signature without any perfective signature".into(),
            );
        }
        if r.sip && r.cogniser_slots.is_none() {
            push(
                Severity::Warning,
                key.clone(),
                "source-introducing reading without cogniser signatures".into(),
            );
        }
    }
    for members in frames.values() {
        for (n, &i) in members.iter().enumerate() {
            let a = &lex.entries()[i];
            for &j in &members[n + 1..] {
                let b = &lex.entries()[j];
                if a.slots != b.slots || a.cogniser_slots != b.cogniser_slots {
                    push(
                        Severity::Warning,
                        b.key(),
                        format!("near-duplicate of {} with different signatures", a.key()),
                    );
                }
            }
        }
    }
    report.findings.sort_by(|a, b| {
        (a.severity, &a.entry, &a.message).cmp(&(b.severity, &b.entry, &b.message))
    });

    for r in lex.entries() {
        for (key, slot) in r.slots.iter() {
            let c = report.counts.get_mut(&key).unwrap();
            match slot {
                SignatureSlot::Sig(_) => c.signature += 1,
                SignatureSlot::NotApplicable => c.not_applicable += 1,
                SignatureSlot::Ungrammatical => c.ungrammatical += 1,
            }
        }
    }
    report
}
