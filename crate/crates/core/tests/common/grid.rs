//! Chain-of-grids evaluator: every signature is expanded into its full
//! twelve-cell grid and projection just walks from cell to cell.

use super::{compare, level, Row, Sig};

/// Degree 0 = U, 1 = PS, 2 = PR, 3 = CT; polarity '+', '-' or 'u'.
pub type Val = (u8, char);

pub const UU: Val = (0, 'u');

pub fn show(v: Val) -> String {
    let degree = ["U", "PS", "PR", "CT"][v.0 as usize];
    format!("{degree}{}", v.1)
}

/// Column order: CT+ CT- CTu PR+ PR- PRu PS+ PS- PSu U+ U- Uu.
pub fn columns() -> [Val; 12] {
    let mut out = [UU; 12];
    for (i, degree) in [3u8, 2, 1, 0].into_iter().enumerate() {
        for (j, pol) in ['+', '-', 'u'].into_iter().enumerate() {
            out[i * 3 + j] = (degree, pol);
        }
    }
    out
}

pub fn column_of(v: Val) -> usize {
    let j = match v.1 {
        '+' => 0,
        '-' => 1,
        _ => 2,
    };
    (3 - v.0 as usize) * 3 + j
}

/// `degrees[m - 6]` is the degree for magnitude 0.m (1 for m = 10).
pub type Mapping = [u8; 5];
pub const PAPER: Mapping = [0, 0, 0, 2, 3];
pub const FINE: Mapping = [1, 1, 1, 2, 3];

fn degree_of(magnitude: u8, mapping: &Mapping) -> u8 {
    if magnitude >= 6 {
        mapping[magnitude as usize - 6]
    } else {
        0
    }
}

fn cell(sig: (i8, i8), column: Val, mapping: &Mapping) -> Val {
    if column.0 == 0 {
        return UU;
    }
    let (value, unknown) = match column.1 {
        '+' => (sig.0, false),
        '-' => (sig.1, false),
        _ => (sig.0.abs().max(sig.1.abs()), true),
    };
    if value == 0 {
        return UU;
    }
    let degree = column.0.min(degree_of(value.unsigned_abs(), mapping));
    if degree == 0 {
        UU
    } else if unknown {
        (degree, 'u')
    } else {
        (degree, if value > 0 { '+' } else { '-' })
    }
}

pub fn grid(sig: (i8, i8), mapping: &Mapping) -> [Val; 12] {
    columns().map(|c| cell(sig, c, mapping))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    Anim,
    Inanim,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct Node {
    pub lemma: String,
    pub id: String,
    /// `lemma:id`
    pub label: String,
    /// Position of the reading in the oracle's rows, if any.
    pub row: Option<usize>,
    pub negated: bool,
    /// 1 = PS, 2 = PR, 3 = CT
    pub modality: u8,
    pub perfective: bool,
    pub subject: Subject,
}

/// Signature for an occurrence; `None` when the context has none.
pub fn select(sigs: &[Sig; 3], perfective: bool, subject: Subject, weaker: bool) -> Sig {
    if !perfective {
        return sigs[2];
    }
    match subject {
        Subject::Anim => sigs[0],
        Subject::Inanim => sigs[1],
        Subject::Unknown => match (sigs[0], sigs[1]) {
            (Some(a), Some(i)) if a == i => Some(a),
            (Some(a), Some(i)) if weaker => Some(match compare(a, i) {
                1 => i,
                2 if level(Some(i)) < level(Some(a)) => i,
                _ => a,
            }),
            (Some(_), Some(_)) => None,
            (Some(s), None) | (None, Some(s)) => Some(s),
            (None, None) => None,
        },
    }
}

/// A source chain as the set of node positions whose cogniser it follows;
/// bit `i` is the node at depth `i + 1`. Zero is the author alone.
pub type Chain = u8;

/// Per node, then for the event: the value each active chain assigns.
pub type Profiles = Vec<Vec<(Chain, Val)>>;

/// Evaluates ESP nodes outermost first. `Err(depth)` names the 1-based
/// node that could not be evaluated.
pub fn project(rows: &[Row], nodes: &[Node], mapping: &Mapping, weaker: bool) -> Result<Profiles, usize> {
    let mut chains: Vec<(Chain, Val)> = vec![(0, (3, '+'))];
    let mut out = Vec::with_capacity(nodes.len() + 1);
    for (i, node) in nodes.iter().enumerate() {
        let row = &rows[node.row.ok_or(i + 1)?];
        let sig = select(&row.sigs, node.perfective, node.subject, weaker).ok_or(i + 1)?;
        let here: Vec<(Chain, Val)> = chains
            .iter()
            .map(|&(chain, ctx)| {
                let pol = match (ctx.1, node.negated) {
                    ('+', true) => '-',
                    ('-', true) => '+',
                    (p, _) => p,
                };
                let degree = ctx.0.min(node.modality);
                (chain, if degree == 0 { UU } else { (degree, pol) })
            })
            .collect();
        let table = grid(sig, mapping);
        let mut next: Vec<(Chain, Val)> = here
            .iter()
            .map(|&(chain, ctx)| (chain, table[column_of(ctx)]))
            .collect();
        if row.sip {
            let &(deepest, ctx) = here.last().unwrap();
            let value = row
                .cog
                .and_then(|cog| select(&cog, node.perfective, node.subject, weaker))
                .map_or(UU, |c| grid(c, mapping)[column_of(ctx)]);
            next.push((deepest | 1 << i, value));
        }
        out.push(here);
        chains = next;
    }
    out.push(chains);
    Ok(out)
}

/// Text form of a profile list, for failure messages.
pub fn render(nodes: &[Node], event: &str, profiles: &Profiles) -> String {
    let mut out = String::new();
    for (i, profile) in profiles.iter().enumerate() {
        let label = match nodes.get(i) {
            Some(n) => format!("{}:{}", n.lemma, n.id),
            None => event.to_string(),
        };
        for &(chain, value) in profile {
            let mut sources = vec!["author".to_string()];
            for (j, n) in nodes.iter().enumerate() {
                if chain & 1 << j != 0 {
                    sources.push(format!("{}:{}", n.lemma, n.id));
                }
            }
            out.push_str(&format!("{label}\t{}\t{}\n", sources.join(">"), show(value)));
        }
    }
    out
}
