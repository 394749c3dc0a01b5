//! Factuality projection through nested clause-embedding predicates.
//!
//! Evaluation is top-down. Each chain of sources carries the contextual
//! factuality of the current clause, starting at `CT+` for the author. An
//! ESP occurrence first combines that context with its own markers
//! (negation multiplies polarity, modality caps the degree), then looks up
//! the embedded clause's factuality through its signature. A
//! source-introducing reading opens a new chain for its cogniser, nested in
//! the deepest chain active at that point.

use std::fmt;

use thiserror::Error;

use crate::algebra::{lookup_factuality, DegreeMapping};
use crate::lexicon::{
    select_from, Animacy, Aspect, EventKind, Lexicon, PfvUnknownPolicy, ResolveError, SlotError,
};
use crate::types::{CertaintyDegree, FactualityValue, Polarity};

mod parse;

pub use parse::{parse_clause, ClauseErrorKind, ClauseParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventNode {
    pub label: String,
    pub kind: EventKind,
}

/// An occurrence of an event-selecting predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EspNode {
    pub lemma: String,
    pub reading_id: String,
    pub negated: bool,
    /// One of CT, PR, PS.
    pub modality: CertaintyDegree,
    pub aspect: Aspect,
    pub animacy: Animacy,
    pub child: Box<ClauseNode>,
}

impl EspNode {
    pub fn name(&self) -> String {
        format!("{}:{}", self.lemma, self.reading_id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClauseNode {
    Event(EventNode),
    Esp(EspNode),
}

impl ClauseNode {
    /// Number of ESP nodes on the path to the event.
    pub fn depth(&self) -> usize {
        match self {
            ClauseNode::Event(_) => 0,
            ClauseNode::Esp(e) => 1 + e.child.depth(),
        }
    }
}

impl fmt::Display for ClauseNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClauseNode::Event(e) => match e.kind {
                EventKind::Clause => write!(f, "E({})", e.label),
                EventKind::EventNp => write!(f, "NP({})", e.label),
            },
            ClauseNode::Esp(e) => {
                if e.negated {
                    f.write_str("neg ")?;
                }
                write!(f, "{}:{}[{}", e.lemma, e.reading_id, e.aspect)?;
                if e.animacy != Animacy::Unknown {
                    write!(f, ",{}", e.animacy)?;
                }
                if e.modality != CertaintyDegree::CT {
                    write!(f, ",mod={}", e.modality.as_str().to_ascii_lowercase())?;
                }
                write!(f, "]({})", e.child)
            }
        }
    }
}

/// Local context of a node: its modality as degree, negative polarity if
/// negated. Bare events sit in an unmarked `CT+` context.
pub fn contextual_factuality(node: &ClauseNode) -> FactualityValue {
    match node {
        ClauseNode::Event(_) => FactualityValue::CT_POS,
        ClauseNode::Esp(e) => {
            let polarity = if e.negated {
                Polarity::Negative
            } else {
                Polarity::Positive
            };
            FactualityValue::saturating(e.modality, polarity)
        }
    }
}

/// Sources behind a factuality assignment, outermost first. Always starts
/// with `author`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SourceChain(Vec<String>);

impl SourceChain {
    pub fn author() -> SourceChain {
        SourceChain(vec!["author".to_string()])
    }

    pub fn extended(&self, cogniser: String) -> SourceChain {
        let mut sources = self.0.clone();
        sources.push(cogniser);
        SourceChain(sources)
    }

    pub fn sources(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SourceChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(">"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactualityProfile {
    pub event_label: String,
    pub assignments: Vec<(SourceChain, FactualityValue)>,
}

impl FactualityProfile {
    /// Value assigned by the author chain.
    pub fn anchor_value(&self) -> FactualityValue {
        self.assignments[0].1
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ProjectionConfig {
    pub mapping: DegreeMapping,
    pub pfv_unknown: PfvUnknownPolicy,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionErrorKind {
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Slot(#[from] SlotError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at {node} (depth {depth}): {kind}")]
pub struct ProjectionError {
    pub node: String,
    pub depth: usize,
    pub kind: ProjectionErrorKind,
}

/// Computes a profile for every node of the tree, outermost first, the
/// embedded event last.
pub fn project(
    lex: &Lexicon,
    tree: &ClauseNode,
    config: &ProjectionConfig,
) -> Result<Vec<FactualityProfile>, ProjectionError> {
    let mut profiles = Vec::with_capacity(tree.depth() + 1);
    let mut chains = vec![(SourceChain::author(), FactualityValue::CT_POS)];
    let mut node = tree;
    let mut depth = 0;
    while let ClauseNode::Esp(esp) = node {
        depth += 1;
        let fail = |kind: ProjectionErrorKind| ProjectionError {
            node: esp.name(),
            depth,
            kind,
        };
        let reading = lex
            .resolve(&esp.lemma, &esp.reading_id)
            .map_err(|e| fail(e.into()))?;
        let signature = select_from(&reading.slots, esp.aspect, esp.animacy, config.pfv_unknown)
            .map_err(|e| fail(e.into()))?;

        let local = contextual_factuality(node);
        let here: Vec<_> = chains
            .iter()
            .map(|(chain, ctx)| (chain.clone(), ctx.combine(local)))
            .collect();
        let mut next: Vec<_> = here
            .iter()
            .map(|(chain, ctx)| (chain.clone(), lookup_factuality(signature, *ctx, &config.mapping)))
            .collect();
        if reading.sip {
            let (deepest, ctx) = here.last().expect("author chain is always present");
            let cogniser_value = reading
                .cogniser_slots
                .as_ref()
                .and_then(|slots| {
                    select_from(slots, esp.aspect, esp.animacy, config.pfv_unknown).ok()
                })
                .map_or(FactualityValue::UU, |sig| {
                    lookup_factuality(sig, *ctx, &config.mapping)
                });
            next.push((deepest.extended(esp.name()), cogniser_value));
        }
        profiles.push(FactualityProfile {
            event_label: esp.name(),
            assignments: here,
        });
        chains = next;
        node = &esp.child;
    }
    let ClauseNode::Event(event) = node else {
        unreachable!("loop exits on an event node")
    };
    profiles.push(FactualityProfile {
        event_label: event.label.clone(),
        assignments: chains,
    });
    Ok(profiles)
}

/// One tab-separated line per assignment: `event  source-chain  value`.
pub fn render_profiles(profiles: &[FactualityProfile]) -> String {
    let mut out = String::new();
    for profile in profiles {
        for (chain, value) in &profile.assignments {
            out.push_str(&format!("{}\t{}\t{}\n", profile.event_label, chain, value));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectTextError {
    #[error(transparent)]
    Parse(#[from] ClauseParseError),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
}

/// Parses and projects an expression, rendering the report.
pub fn project_text(
    lex: &Lexicon,
    text: &str,
    config: &ProjectionConfig,
) -> Result<String, ProjectTextError> {
    let tree = parse_clause(text)?;
    Ok(render_profiles(&project(lex, &tree, config)?))
}
