//! Exhaustive enumeration of clause trees and comparison of the library's
//! projection with the chain-of-grids oracle.

use factualis::projection::{EspNode, EventNode, FactualityProfile};
use factualis::{
    project, Animacy, Aspect, CertaintyDegree, ClauseNode, DegreeMapping, EventKind,
    FactualityValue, Lexicon, PfvUnknownPolicy, Polarity, ProjectionConfig,
};

use super::grid::{self, Node, Subject, Val};
use super::Row;

pub const EVENT: &str = "p";

/// Every ESP node label over `readings`: aspect and subject animacy,
/// negation and modality. With `imp_animacy` false, imperfective nodes
/// leave animacy unspecified, since one slot serves both subject types.
pub fn node_options(rows: &[Row], readings: &[(String, String)], imp_animacy: bool) -> Vec<Node> {
    let subjects = [Subject::Anim, Subject::Inanim, Subject::Unknown];
    let mut out = Vec::new();
    for (lemma, id) in readings {
        let row = rows.iter().position(|r| r.lemma == *lemma && r.id == *id);
        for perfective in [true, false] {
            let subjects = if perfective || imp_animacy {
                &subjects[..]
            } else {
                &subjects[2..]
            };
            for &subject in subjects {
                for negated in [false, true] {
                    for modality in [3, 2, 1] {
                        out.push(Node {
                            lemma: lemma.clone(),
                            id: id.clone(),
                            label: format!("{lemma}:{id}"),
                            row,
                            negated,
                            modality,
                            perfective,
                            subject,
                        });
                    }
                }
            }
        }
    }
    out
}

pub fn to_clause(nodes: &[Node]) -> ClauseNode {
    let mut tree = ClauseNode::Event(EventNode {
        label: EVENT.to_string(),
        kind: EventKind::Clause,
    });
    for node in nodes.iter().rev() {
        tree = ClauseNode::Esp(EspNode {
            lemma: node.lemma.clone(),
            reading_id: node.id.clone(),
            negated: node.negated,
            modality: [CertaintyDegree::U, CertaintyDegree::PS, CertaintyDegree::PR, CertaintyDegree::CT]
                [node.modality as usize],
            aspect: if node.perfective { Aspect::Pfv } else { Aspect::Imp },
            animacy: match node.subject {
                Subject::Anim => Animacy::Anim,
                Subject::Inanim => Animacy::Inanim,
                Subject::Unknown => Animacy::Unknown,
            },
            child: Box::new(tree),
        });
    }
    tree
}

fn same_value(v: FactualityValue, expected: Val) -> bool {
    let degree = match v.degree() {
        CertaintyDegree::U => 0,
        CertaintyDegree::PS => 1,
        CertaintyDegree::PR => 2,
        CertaintyDegree::CT => 3,
    };
    let polarity = match v.polarity() {
        Polarity::Positive => '+',
        Polarity::Negative => '-',
        Polarity::Unknown => 'u',
    };
    (degree, polarity) == expected
}

fn same_profiles(nodes: &[Node], actual: &[FactualityProfile], expected: &grid::Profiles) -> bool {
    actual.len() == expected.len()
        && actual.iter().zip(expected).enumerate().all(|(i, (a, e))| {
            let label = nodes.get(i).map_or(EVENT, |n| n.label.as_str());
            a.event_label == label
                && a.assignments.len() == e.len()
                && a.assignments.iter().zip(e).all(|((chain, value), &(mask, val))| {
                    let sources = chain.sources();
                    let mut cognisers = nodes
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| mask & 1 << j != 0)
                        .map(|(_, n)| n.label.as_str());
                    sources[0] == "author"
                        && sources[1..].iter().all(|s| cognisers.next() == Some(s.as_str()))
                        && cognisers.next().is_none()
                        && same_value(*value, val)
                })
        })
}

pub struct Comparison {
    pub cases: usize,
    pub errors_agreed: usize,
    pub mismatches: Vec<String>,
}

pub fn config(fine: bool, weaker: bool) -> ProjectionConfig {
    ProjectionConfig {
        mapping: if fine {
            DegreeMapping::fine()
        } else {
            DegreeMapping::paper()
        },
        pfv_unknown: if weaker {
            PfvUnknownPolicy::Weaker
        } else {
            PfvUnknownPolicy::Error
        },
    }
}

/// Runs library and oracle on every tree of ESP depth `0..=max_depth`.
pub fn compare_all(
    lex: &Lexicon,
    rows: &[Row],
    options: &[Node],
    max_depth: usize,
    fine: bool,
    weaker: bool,
) -> Comparison {
    let config = config(fine, weaker);
    let mapping = if fine { grid::FINE } else { grid::PAPER };
    let mut result = Comparison {
        cases: 0,
        errors_agreed: 0,
        mismatches: Vec::new(),
    };
    let mut stack: Vec<Node> = Vec::new();
    walk(&mut stack, options, max_depth, &mut |nodes| {
        result.cases += 1;
        let tree = to_clause(nodes);
        let expected = grid::project(rows, nodes, &mapping, weaker);
        let actual = project(lex, &tree, &config);
        let agree = match (&actual, &expected) {
            (Ok(a), Ok(e)) => same_profiles(nodes, a, e),
            (Err(a), Err(depth)) => {
                result.errors_agreed += 1;
                a.depth == *depth && a.node == nodes[depth - 1].label
            }
            _ => false,
        };
        if !agree && result.mismatches.len() < 10 {
            let actual = actual.map(|p| factualis::render_profiles(&p));
            let expected = expected.map(|p| grid::render(nodes, EVENT, &p));
            result
                .mismatches
                .push(format!("{tree}\n  library: {actual:?}\n  oracle:  {expected:?}"));
        }
    });
    result
}

fn walk(stack: &mut Vec<Node>, options: &[Node], remaining: usize, visit: &mut dyn FnMut(&[Node])) {
    visit(stack);
    if remaining == 0 {
        return;
    }
    for option in options {
        stack.push(option.clone());
        walk(stack, options, remaining - 1, visit);
        stack.pop();
    }
}
