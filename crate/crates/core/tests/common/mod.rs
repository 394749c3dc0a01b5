//! Independent reference implementations used by the integration and
//! acceptance tests. The oracles never call into the library: rows are
//! read with a plain tab splitter and every rule is re-derived from
//! scratch. `trees` only builds library inputs and compares outputs.

#![allow(dead_code)]

pub mod grid;
pub mod recount;
pub mod trees;

use std::collections::HashMap;

/// Signature in tenths; `None` for NA and UNGR.
pub type Sig = Option<(i8, i8)>;

pub fn parse_value(text: &str) -> i8 {
    match text {
        "n" => 0,
        "1" => 10,
        "-1" => -10,
        _ => {
            let negative = text.starts_with('-');
            let digits = text.trim_start_matches('-').trim_start_matches("0.");
            let tenths: i8 = digits.parse().expect("oracle: bad value");
            if negative {
                -tenths
            } else {
                tenths
            }
        }
    }
}

pub fn parse_sig(text: &str) -> Sig {
    match text {
        "NA" | "UNGR" => None,
        _ => {
            let (p, n) = text.split_once('|').expect("oracle: no separator");
            Some((parse_value(p), parse_value(n)))
        }
    }
}

pub fn mags(s: (i8, i8)) -> (u8, u8) {
    (s.0.unsigned_abs(), s.1.unsigned_abs())
}

pub fn level(s: Sig) -> u8 {
    match s.map(mags) {
        None => 0,
        Some((10, 10)) => 5,
        Some((10, _)) | Some((_, 10)) => 4,
        Some((9, 9)) => 3,
        Some((9, _)) | Some((_, 9)) => 2,
        Some(_) => 1,
    }
}

pub fn factive(s: (i8, i8)) -> bool {
    s == (10, 10) || s == (-10, -10)
}

pub fn implicative(s: (i8, i8)) -> bool {
    !factive(s) && (s.0.abs() == 10 || s.1.abs() == 10)
}

/// -1: a weaker than b, 1: stronger, 0: equal, 2: incomparable.
pub fn compare(a: (i8, i8), b: (i8, i8)) -> i8 {
    let (a, b) = (mags(a), mags(b));
    if a == b {
        0
    } else if a.0 <= b.0 && a.1 <= b.1 {
        -1
    } else if a.0 >= b.0 && a.1 >= b.1 {
        1
    } else {
        2
    }
}

#[derive(Debug, Clone)]
pub struct Row {
    pub lemma: String,
    pub id: String,
    pub sip: bool,
    pub subcat: Vec<String>,
    /// PFV_ANIM, PFV_INANIM, IMP
    pub sigs: [Sig; 3],
    pub cog: Option<[Sig; 3]>,
}

/// Reads lexicon TSV rows by column name.
pub fn read_rows(text: &str) -> Vec<Row> {
    let mut lines = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
    let header: Vec<&str> = lines.next().expect("oracle: no header").split('\t').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).expect(name);
    let (lemma, id, sip, subcat) = (col("lemma"), col("reading_id"), col("sip"), col("subcat"));
    let sig_cols = [col("sig_pfv_anim"), col("sig_pfv_inanim"), col("sig_imp")];
    let cog_cols = [col("cog_pfv_anim"), col("cog_pfv_inanim"), col("cog_imp")];
    lines
        .map(|line| {
            let f: Vec<&str> = line.split('\t').collect();
            let cog = if f[cog_cols[0]].is_empty() {
                None
            } else {
                Some(cog_cols.map(|c| parse_sig(f[c])))
            };
            Row {
                lemma: f[lemma].to_string(),
                id: f[id].to_string(),
                sip: f[sip] == "true",
                subcat: f[subcat]
                    .split('+')
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect(),
                sigs: sig_cols.map(|c| parse_sig(f[c])),
                cog,
            }
        })
        .collect()
}

pub fn index(rows: &[Row]) -> HashMap<(String, String), Row> {
    rows.iter()
        .map(|r| ((r.lemma.clone(), r.id.clone()), r.clone()))
        .collect()
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}
