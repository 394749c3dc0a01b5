use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::io::{self, Read, Write};

use thiserror::Error;

use super::{ContextSlots, EventKind, Lexicon, Reading, Source, SubcatFrame};
use crate::types::{parse_signature, SignatureSlot};

/// Canonical header, in output order.
pub const TSV_COLUMNS: [&str; 13] = [
    "lemma",
    "reading_id",
    "source",
    "gloss",
    "sip",
    "subcat",
    "sig_pfv_anim",
    "sig_pfv_inanim",
    "sig_imp",
    "cog_pfv_anim",
    "cog_pfv_inanim",
    "cog_imp",
    "event_kinds",
];

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read lexicon: {0}")]
    Io(#[from] io::Error),
    #[error("lexicon is not valid UTF-8")]
    Encoding,
    #[error("lexicon has no header row")]
    MissingHeader,
    #[error("header is missing column {0:?}")]
    MissingColumn(&'static str),
    #[error("header names column {0:?} twice")]
    DuplicateColumn(String),
}

/// A rejected row. Line numbers are 1-based and count the header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub reason: String,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

/// Reads a tab-separated lexicon. Malformed rows are reported, never
/// silently dropped; only an unreadable stream or header is fatal.
/// Blank lines and lines starting with `#` are skipped.
pub fn load_tsv<R: Read>(mut reader: R) -> Result<(Lexicon, Vec<LineError>), LoadError> {
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes)?;
    let text = String::from_utf8(bytes).map_err(|_| LoadError::Encoding)?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(&text);

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));

    let (_, header) = lines.next().ok_or(LoadError::MissingHeader)?;
    let names: Vec<&str> = header.split('\t').map(str::trim).collect();
    let mut seen = HashSet::new();
    for name in &names {
        if !seen.insert(*name) {
            return Err(LoadError::DuplicateColumn(name.to_string()));
        }
    }
    let mut positions = [0usize; 13];
    for (slot, column) in positions.iter_mut().zip(TSV_COLUMNS) {
        *slot = names
            .iter()
            .position(|n| *n == column)
            .ok_or(LoadError::MissingColumn(column))?;
    }

    let mut entries = Vec::new();
    let mut errors = Vec::new();
    let mut keys = HashSet::new();
    for (line, row) in lines {
        let fields: Vec<&str> = row.split('\t').collect();
        if fields.len() != names.len() {
            errors.push(LineError {
                line,
                reason: format!("expected {} fields, found {}", names.len(), fields.len()),
            });
            continue;
        }
        let cells: [&str; 13] = positions.map(|p| fields[p].trim());
        match parse_row(&cells) {
            Ok(reading) => {
                if keys.insert(reading.key()) {
                    entries.push(reading);
                } else {
                    errors.push(LineError {
                        line,
                        reason: format!("duplicate reading {}", reading.key()),
                    });
                }
            }
            Err(reason) => errors.push(LineError { line, reason }),
        }
    }
    Ok((Lexicon::from_readings(entries), errors))
}

fn parse_slot(column: &str, text: &str) -> Result<SignatureSlot, String> {
    parse_signature(text).map_err(|e| format!("{column}: {e}"))
}

fn parse_set<T: Ord>(
    column: &str,
    text: &str,
    parse: impl Fn(&str) -> Result<T, String>,
) -> Result<BTreeSet<T>, String> {
    text.split('+')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse(s).map_err(|e| format!("{column}: {e}")))
        .collect()
}

fn parse_row(cells: &[&str; 13]) -> Result<Reading, String> {
    let [lemma, reading_id, source, gloss, sip, subcat, pa, pi, imp, ca, ci, cimp, kinds] = *cells;
    let source: Source = source.parse().map_err(|e| format!("source: {e}"))?;
    let sip = match sip {
        "true" => true,
        "false" => false,
        other => return Err(format!("sip: expected true or false, found {other:?}")),
    };
    let subcat = parse_set("subcat", subcat, |s| s.parse::<SubcatFrame>())?;
    let slots = ContextSlots::new(
        parse_slot("sig_pfv_anim", pa)?,
        parse_slot("sig_pfv_inanim", pi)?,
        parse_slot("sig_imp", imp)?,
    );
    let cogniser_slots = match (ca.is_empty(), ci.is_empty(), cimp.is_empty()) {
        (true, true, true) => None,
        (false, false, false) => Some(ContextSlots::new(
            parse_slot("cog_pfv_anim", ca)?,
            parse_slot("cog_pfv_inanim", ci)?,
            parse_slot("cog_imp", cimp)?,
        )),
        _ => return Err("cogniser columns must be all filled or all empty".to_string()),
    };
    let event_kinds = parse_set("event_kinds", kinds, |s| s.parse::<EventKind>())?;
    let reading = Reading {
        lemma: lemma.to_string(),
        reading_id: reading_id.to_string(),
        source,
        gloss: gloss.to_string(),
        sip,
        subcat,
        slots,
        cogniser_slots,
        event_kinds,
    };
    reading.check().map_err(|e| e.to_string())?;
    Ok(reading)
}

fn join_set<T: fmt::Display>(set: &BTreeSet<T>) -> String {
    set.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("+")
}

fn clean(text: &str) -> String {
    text.replace(['\t', '\n', '\r'], " ")
}

/// Writes the canonical TSV form, entries in lexicon order.
pub fn write_tsv<W: Write>(lex: &Lexicon, mut out: W) -> io::Result<()> {
    writeln!(out, "{}", TSV_COLUMNS.join("\t"))?;
    for r in lex.entries() {
        let cog = |f: fn(&ContextSlots) -> SignatureSlot| {
            r.cogniser_slots
                .as_ref()
                .map(|c| f(c).to_string())
                .unwrap_or_default()
        };
        let row = [
            clean(&r.lemma),
            clean(&r.reading_id),
            r.source.to_string(),
            clean(&r.gloss),
            r.sip.to_string(),
            join_set(&r.subcat),
            r.slots.pfv_anim.to_string(),
            r.slots.pfv_inanim.to_string(),
            r.slots.imp.to_string(),
            cog(|c| c.pfv_anim),
            cog(|c| c.pfv_inanim),
            cog(|c| c.imp),
            join_set(&r.event_kinds),
        ];
        writeln!(out, "{}", row.join("\t"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Signature;

    const HEADER: &str = "lemma\treading_id\tsource\tgloss\tsip\tsubcat\tsig_pfv_anim\tsig_pfv_inanim\tsig_imp\tcog_pfv_anim\tcog_pfv_inanim\tcog_imp\tevent_kinds";

    fn load(rows: &[&str]) -> (Lexicon, Vec<LineError>) {
        let text = std::iter::once(HEADER)
            .chain(rows.iter().copied())
            .collect::<Vec<_>>()
            .join("\n");
        load_tsv(text.as_bytes()).unwrap()
    }

    #[test]
    fn loads_obliger_row() {
        let (lex, errors) =
            load(&["obliger\t02\tLVF\tforce\tfalse\taInf\t0.9|n\t1|n\tn|n\t\t\t\tclause"]);
        assert!(errors.is_empty(), "{errors:?}");
        let r = &lex.entries()[0];
        assert_eq!(r.slots.to_string(), "0.9|n / 1|n / n|n");
        assert_eq!(r.subcat, [SubcatFrame::AInf].into());
        assert!(r.cogniser_slots.is_none());
    }

    #[test]
    fn reports_bad_rows_with_line_numbers() {
        let (lex, errors) = load(&[
            "a\t01\tLVF\t\tfalse\t\tNA\tNA\tNA\t\t\t\tclause",
            "b\t01\tLVF\t\tfalse\t\t0.95|n\tNA\tn|n\t\t\t\tclause",
            "c\t01\tLVF\t\tfalse\t\t1|1\tNA\t1|1\t\t\t\tclause",
            "c\t01\tLVF\t\tfalse\t\t1|1\tNA\t1|1\t\t\t\tclause",
            "d\t01\tLVF\t\tmaybe\t\t1|1\tNA\t1|1\t\t\t\tclause",
            "e\t01\tLVF\t\tfalse\tfoo\t1|1\tNA\t1|1\t\t\t\tclause",
            "f\t01\tLVF\t\tfalse\t\t1|1\tNA\t1|1\t1|1\t\t\tclause",
            "g\t01\tLVF\t\tfalse\t\t1|1\tNA",
            "h\t01\tLVF\t\tfalse\t\t1|1\tNA\t1|1\t1|1\tNA\tNA\tclause",
        ]);
        assert_eq!(lex.len(), 1);
        let lines: Vec<usize> = errors.iter().map(|e| e.line).collect();
        assert_eq!(lines, [2, 3, 5, 6, 7, 8, 9, 10]);
        assert!(errors[0].reason.contains("all slots unannotated"));
        assert!(errors[1].reason.contains("magnitude off scale"));
        assert!(errors[2].reason.contains("duplicate"));
        assert!(errors[7].reason.contains("cogniser"));
    }

    #[test]
    fn header_problems_are_fatal() {
        assert!(matches!(load_tsv("".as_bytes()), Err(LoadError::MissingHeader)));
        assert!(matches!(
            load_tsv("lemma\treading_id\n".as_bytes()),
            Err(LoadError::MissingColumn("source"))
        ));
        assert!(matches!(load_tsv(&[0xff, 0xfe][..]), Err(LoadError::Encoding)));
    }

    #[test]
    fn column_order_is_free() {
        let text = "reading_id\tlemma\tsource\tgloss\tsip\tsubcat\tsig_imp\tsig_pfv_inanim\tsig_pfv_anim\tcog_pfv_anim\tcog_pfv_inanim\tcog_imp\tevent_kinds\n\
                    07\téchouer\tLVF\t\tfalse\taInf\tn|n\tNA\t-1|1\t\t\t\tclause\n";
        let (lex, errors) = load_tsv(text.as_bytes()).unwrap();
        assert!(errors.is_empty());
        let r = &lex.entries()[0];
        assert_eq!(r.lemma, "échouer");
        assert_eq!(r.slots.pfv_anim, SignatureSlot::Sig("-1|1".parse::<Signature>().unwrap()));
    }

    #[test]
    fn seed_round_trips() {
        let seed = Lexicon::seed();
        let mut out = Vec::new();
        write_tsv(&seed, &mut out).unwrap();
        let (again, errors) = load_tsv(out.as_slice()).unwrap();
        assert!(errors.is_empty());
        assert_eq!(again.entries(), seed.entries());
        let mut out2 = Vec::new();
        write_tsv(&again, &mut out2).unwrap();
        assert_eq!(out, out2);
    }
}
