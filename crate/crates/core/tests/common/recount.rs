//! Brute-force recounts of the lexicon statistics, one loop per number.

use std::collections::BTreeMap;

use super::{compare, factive, implicative, level, mags, Row, Sig};

fn classing_sig(row: &Row, anim_first: bool) -> Sig {
    let (first, second) = if anim_first { (0, 1) } else { (1, 0) };
    row.sigs[first].or(row.sigs[second])
}

pub fn histogram(rows: &[Row]) -> [[usize; 6]; 3] {
    let mut out = [[0; 6]; 3];
    for row in rows {
        for (c, sig) in row.sigs.iter().enumerate() {
            out[c][level(*sig) as usize] += 1;
        }
    }
    out
}

/// ((factive with both, changed), (implicative with both, changed))
pub fn aspect(rows: &[Row], anim_first: bool) -> ((usize, usize), (usize, usize)) {
    let mut fact = (0, 0);
    let mut imp = (0, 0);
    for row in rows {
        let (Some(pfv), Some(imperfective)) = (classing_sig(row, anim_first), row.sigs[2]) else {
            continue;
        };
        let changed = (pfv != imperfective) as usize;
        if factive(pfv) {
            fact.0 += 1;
            fact.1 += changed;
        }
        if implicative(pfv) {
            imp.0 += 1;
            imp.1 += changed;
        }
    }
    (fact, imp)
}

/// (weaker, stronger, unchanged, incomparable)
pub fn weakening(rows: &[Row], anim_first: bool) -> (usize, usize, usize, usize) {
    let mut out = (0, 0, 0, 0);
    for row in rows {
        let (Some(pfv), Some(imperfective)) = (classing_sig(row, anim_first), row.sigs[2]) else {
            continue;
        };
        if !implicative(pfv) {
            continue;
        }
        match compare(imperfective, pfv) {
            -1 => out.0 += 1,
            1 => out.1 += 1,
            0 => out.2 += 1,
            _ => out.3 += 1,
        }
    }
    out
}

/// (sum of levels, number of annotated slots) per context.
pub fn means(rows: &[Row]) -> [(usize, usize); 3] {
    let mut out = [(0, 0); 3];
    for row in rows {
        for (c, sig) in row.sigs.iter().enumerate() {
            if sig.is_some() {
                out[c].0 += level(*sig) as usize;
                out[c].1 += 1;
            }
        }
    }
    out
}

/// lemma -> (max anim level, max inanim level, verdict)
pub fn animacy(rows: &[Row]) -> BTreeMap<String, (u8, u8, &'static str)> {
    let mut lemmas: Vec<&str> = rows.iter().map(|r| r.lemma.as_str()).collect();
    lemmas.sort();
    lemmas.dedup();
    let mut out = BTreeMap::new();
    for lemma in lemmas {
        let mine: Vec<&Row> = rows.iter().filter(|r| r.lemma == lemma).collect();
        let side = |c: usize| {
            let sigs: Vec<(i8, i8)> = mine.iter().filter_map(|r| r.sigs[c]).collect();
            if sigs.is_empty() {
                return None;
            }
            let top = sigs.iter().map(|s| level(Some(*s))).max().unwrap();
            let sup = sigs.iter().map(|s| mags(*s)).fold((0u8, 0u8), |acc, m| {
                (acc.0.max(m.0), acc.1.max(m.1))
            });
            Some((top, sup))
        };
        let (Some((a, a_sup)), Some((i, i_sup))) = (side(0), side(1)) else {
            continue;
        };
        let verdict = if i > a {
            "inanimate_stronger"
        } else if a > i {
            "animate_stronger"
        } else if compare(
            (a_sup.0 as i8, a_sup.1 as i8),
            (i_sup.0 as i8, i_sup.1 as i8),
        ) == 2
        {
            "incomparable"
        } else {
            "tie"
        };
        out.insert(lemma.to_string(), (a, i, verdict));
    }
    out
}

/// (factive under PFV with animate subject, those also annotated for inanimate)
pub fn factive_animacy(rows: &[Row]) -> (usize, usize) {
    let factive_rows: Vec<&Row> = rows
        .iter()
        .filter(|r| r.sigs[0].is_some_and(factive))
        .collect();
    let also = factive_rows.iter().filter(|r| r.sigs[1].is_some()).count();
    (factive_rows.len(), also)
}

/// Per class: (population, +INF, +QUE, +INF-QUE, -INF+QUE).
pub type Column = (usize, usize, usize, usize, usize);

/// (verbs, implicative column, factive column)
pub fn crosstab(rows: &[Row], anim_first: bool) -> (usize, Column, Column) {
    let class = |r: &Row| classing_sig(r, anim_first);
    let mut verbs: Vec<&str> = rows
        .iter()
        .filter(|r| class(r).is_some_and(factive))
        .map(|r| r.lemma.as_str())
        .filter(|l| {
            rows.iter()
                .any(|r| r.lemma == *l && class(r).is_some_and(implicative))
        })
        .collect();
    verbs.sort();
    verbs.dedup();
    let count = |pick: fn((i8, i8)) -> bool| {
        let mut c: Column = (0, 0, 0, 0, 0);
        for r in rows {
            if !verbs.contains(&r.lemma.as_str()) || !class(r).is_some_and(pick) {
                continue;
            }
            let inf = r.subcat.iter().any(|s| s.ends_with("Inf") || s == "inf");
            let que = r.subcat.iter().any(|s| s == "que");
            c.0 += 1;
            c.1 += inf as usize;
            c.2 += que as usize;
            c.3 += (inf && !que) as usize;
            c.4 += (que && !inf) as usize;
        }
        c
    };
    (verbs.len(), count(implicative), count(factive))
}
