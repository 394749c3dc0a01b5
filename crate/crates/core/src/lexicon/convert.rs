//! Converter from a spreadsheet CSV export to the canonical lexicon.
//!
//! The first row names the columns; matching ignores case and surrounding
//! spaces. Recognised columns:
//!
//! | column                              | required | content                                   |
//! |-------------------------------------|----------|-------------------------------------------|
//! | `verb` or `lemma`                   | yes      | French lemma                              |
//! | `reading` or `reading_id`           | yes      | LVF number (`02`) or `lemma_V_T_R` label  |
//! | `source`                            | no       | `LVF`/`LGLEX`; inferred from the id       |
//! | `translation` or `gloss`            | no       | free text                                 |
//! | `SIP`                               | no       | yes/no, true/false, 1/0, x or empty       |
//! | `subcat`                            | no       | frames separated by `+ , ; /` or spaces   |
//! | `PFV+anim`, `PFV-anim`, `IMP`       | yes      | signatures                                |
//! | `cog PFV+anim`, `cog PFV-anim`, `cog IMP` | no | cogniser signatures                       |
//! | `event kinds`                       | no       | `clause`, `NP`/`eventNP`; default clause  |
//!
//! Signature cells accept decimal commas (`0,9|n`), Unicode minus signs
//! and inner spaces. An empty signature cell is `NA`; `*` and `ungr` (any
//! case) are `UNGR`. Ids of the form `lemma_V_T_R` are stored as `T_R`
//! with source `LGLEX`.

use std::collections::BTreeSet;
use std::io::Read;

use super::tsv::{LineError, LoadError};
use super::{ContextSlots, EventKind, Lexicon, Reading, Source, SubcatFrame};
use crate::types::{parse_signature, SignatureSlot};

/// Column names understood by [`convert_sheet`], first alias shown.
pub const SHEET_COLUMNS: [&str; 13] = [
    "verb",
    "reading",
    "source",
    "translation",
    "SIP",
    "subcat",
    "PFV+anim",
    "PFV-anim",
    "IMP",
    "cog PFV+anim",
    "cog PFV-anim",
    "cog IMP",
    "event kinds",
];

const ALIASES: [&[&str]; 13] = [
    &["verb", "lemma"],
    &["reading", "reading_id", "reading id"],
    &["source"],
    &["translation", "gloss"],
    &["sip"],
    &["subcat", "subcategorisation", "frames"],
    &["pfv+anim", "sig_pfv_anim"],
    &["pfv-anim", "sig_pfv_inanim"],
    &["imp", "sig_imp"],
    &["cog pfv+anim", "cog_pfv_anim"],
    &["cog pfv-anim", "cog_pfv_inanim"],
    &["cog imp", "cog_imp"],
    &["event kinds", "event_kinds"],
];

const REQUIRED: [usize; 5] = [0, 1, 6, 7, 8];

fn normalise_signature(cell: &str) -> String {
    cell.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            ',' => '.',
            '\u{2212}' | '\u{2013}' => '-',
            other => other,
        })
        .collect()
}

fn sheet_slot(column: &str, cell: &str) -> Result<SignatureSlot, String> {
    let text = normalise_signature(cell);
    match text.to_ascii_lowercase().as_str() {
        "" | "na" | "n/a" => return Ok(SignatureSlot::NotApplicable),
        "*" | "ungr" => return Ok(SignatureSlot::Ungrammatical),
        _ => {}
    }
    parse_signature(&text).map_err(|e| format!("{column}: {e}"))
}

fn sheet_bool(cell: &str) -> Result<bool, String> {
    match cell.trim().to_ascii_lowercase().as_str() {
        "" | "no" | "false" | "0" | "non" | "-" => Ok(false),
        "yes" | "true" | "1" | "x" | "oui" | "+" => Ok(true),
        other => Err(format!("SIP: cannot read {other:?} as yes/no")),
    }
}

fn sheet_subcat(cell: &str) -> Result<BTreeSet<SubcatFrame>, String> {
    cell.split(|c: char| "+,;/".contains(c) || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            SubcatFrame::ALL
                .into_iter()
                .find(|f| f.as_str().eq_ignore_ascii_case(s))
                .ok_or_else(|| format!("subcat: unknown frame {s:?}"))
        })
        .collect()
}

fn sheet_event_kinds(cell: &str) -> Result<BTreeSet<EventKind>, String> {
    let kinds: BTreeSet<EventKind> = cell
        .split(|c: char| "+,;/".contains(c) || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| match s.to_ascii_lowercase().as_str() {
            "clause" | "s" => Ok(EventKind::Clause),
            "np" | "eventnp" => Ok(EventKind::EventNp),
            _ => Err(format!("event kinds: unknown kind {s:?}")),
        })
        .collect::<Result<_, _>>()?;
    if kinds.is_empty() {
        Ok([EventKind::Clause].into())
    } else {
        Ok(kinds)
    }
}

/// Splits `lemma_V_T_R` style ids into `T_R` with source LGLEX.
fn split_reading_id(lemma: &str, id: &str) -> (String, Option<Source>) {
    let prefix = format!("{lemma}_V_");
    match id.strip_prefix(&prefix) {
        Some(rest) if !rest.is_empty() => (rest.to_string(), Some(Source::Lglex)),
        _ if id.contains("_V_") => (id.to_string(), Some(Source::Lglex)),
        _ => (id.to_string(), None),
    }
}

/// Reads a spreadsheet export. Returns the lexicon of well-formed rows and
/// one error per rejected row.
pub fn convert_sheet<R: Read>(reader: R) -> Result<(Lexicon, Vec<LineError>), LoadError> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let mut records = csv.records();

    let header = match records.next() {
        Some(Ok(h)) => h,
        Some(Err(e)) => return Err(csv_error(e)),
        None => return Err(LoadError::MissingHeader),
    };
    let names: Vec<String> = header
        .iter()
        .map(|n| n.trim().trim_start_matches('\u{feff}').to_lowercase())
        .collect();
    let positions: Vec<Option<usize>> = ALIASES
        .iter()
        .map(|aliases| names.iter().position(|n| aliases.contains(&n.as_str())))
        .collect();
    for &i in &REQUIRED {
        if positions[i].is_none() {
            return Err(LoadError::MissingColumn(SHEET_COLUMNS[i]));
        }
    }

    let mut entries = Vec::new();
    let mut errors = Vec::new();
    let mut keys = std::collections::HashSet::new();
    for record in records {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(|c| c.trim().is_empty()) {
            continue;
        }
        let cell = |i: usize| {
            positions[i]
                .and_then(|p| record.get(p))
                .map(str::trim)
                .unwrap_or("")
        };
        match sheet_row(cell) {
            Ok(reading) if !keys.insert(reading.key()) => errors.push(LineError {
                line,
                reason: format!("duplicate reading {}", reading.key()),
            }),
            Ok(reading) => entries.push(reading),
            Err(reason) => errors.push(LineError { line, reason }),
        }
    }
    Ok((Lexicon::from_readings(entries), errors))
}

fn csv_error(e: csv::Error) -> LoadError {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => LoadError::Io(io),
        csv::ErrorKind::Utf8 { .. } => LoadError::Encoding,
        other => LoadError::Io(std::io::Error::new(
            std::io::ErrorKind::InvalidData,
            format!("{other:?}"),
        )),
    }
}

fn sheet_row<'a>(cell: impl Fn(usize) -> &'a str) -> Result<Reading, String> {
    let lemma = cell(0).to_string();
    if lemma.is_empty() {
        return Err("empty lemma".into());
    }
    let (reading_id, inferred) = split_reading_id(&lemma, cell(1));
    let source = match cell(2) {
        "" => inferred.unwrap_or(Source::Lvf),
        s => s
            .to_ascii_uppercase()
            .parse()
            .map_err(|e| format!("source: {e}"))?,
    };
    let slots = ContextSlots::new(
        sheet_slot("PFV+anim", cell(6))?,
        sheet_slot("PFV-anim", cell(7))?,
        sheet_slot("IMP", cell(8))?,
    );
    let cog = [cell(9), cell(10), cell(11)];
    let cogniser_slots = if cog.iter().all(|c| c.is_empty()) {
        None
    } else {
        Some(ContextSlots::new(
            sheet_slot("cog PFV+anim", cog[0])?,
            sheet_slot("cog PFV-anim", cog[1])?,
            sheet_slot("cog IMP", cog[2])?,
        ))
    };
    let reading = Reading {
        lemma,
        reading_id,
        source,
        gloss: cell(3).to_string(),
        sip: sheet_bool(cell(4))?,
        subcat: sheet_subcat(cell(5))?,
        slots,
        cogniser_slots,
        event_kinds: sheet_event_kinds(cell(12))?,
    };
    reading.check().map_err(|e| e.to_string())?;
    Ok(reading)
}
