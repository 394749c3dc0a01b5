//! C ABI over the factualis library.
//!
//! Every fallible function returns a [`FactStatus`]. On failure the message
//! is kept per thread and read with [`fact_last_error`]. Strings handed out
//! through `out` pointers are owned by the caller and released with
//! [`fact_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fs::File;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use factualis::stats::{render_reports, ReportName, StatsConfig};
use factualis::{
    classify, generate_grid, grid_columns, load_tsv, parse_signature, project_text,
    strength_level, Classing, DegreeMapping, Lexicon, MappingMode, PfvUnknownPolicy,
    ProjectionConfig, Signature,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactStatus {
    Ok = 0,
    NullArg = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Io = 4,
    /// The lexicon file had rejected rows or a bad header.
    Load = 5,
    Projection = 6,
    UnknownReport = 7,
    /// The signature is NA or UNGR where a graded one is required.
    NotSignature = 8,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactMapping {
    Paper = 0,
    Fine = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactPfvUnknown {
    Weaker = 0,
    Error = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactClassing {
    AnimFirst = 0,
    InanimFirst = 1,
}

/// Opaque lexicon handle.
pub struct FactLexicon {
    inner: Lexicon,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(FactStatus, String);

type Outcome<T> = Result<T, Failure>;

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn guard(body: impl FnOnce() -> Outcome<()>) -> FactStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FactStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            FactStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(FactStatus::NullArg, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(FactStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn lexicon<'a>(p: *const FactLexicon) -> Outcome<&'a Lexicon> {
    p.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| Failure(FactStatus::NullArg, "lexicon is null".into()))
}

unsafe fn emit<T>(out: *mut T, value: T) -> Outcome<()> {
    if out.is_null() {
        return Err(Failure(FactStatus::NullArg, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    let c = CString::new(s).map_err(|e| Failure(FactStatus::Panic, e.to_string()))?;
    emit(out, c.into_raw())
}

fn signature(text: &str) -> Outcome<Signature> {
    parse_signature(text)
        .map_err(|e| Failure(FactStatus::Parse, e.to_string()))?
        .signature()
        .ok_or_else(|| Failure(FactStatus::NotSignature, format!("{text} carries no signature")))
}

fn mapping(m: FactMapping) -> DegreeMapping {
    DegreeMapping::for_mode(match m {
        FactMapping::Paper => MappingMode::Paper,
        FactMapping::Fine => MappingMode::Fine,
    })
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn fact_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fact_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a handle on the bundled seed lexicon.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fact_lexicon_seed(out: *mut *mut FactLexicon) -> FactStatus {
    guard(|| {
        let handle = Box::new(FactLexicon { inner: Lexicon::seed() });
        emit(out, Box::into_raw(handle))
    })
}

/// Loads a TSV lexicon. Any rejected row fails the load with `Load`.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fact_lexicon_load(
    path: *const c_char,
    out: *mut *mut FactLexicon,
) -> FactStatus {
    guard(|| {
        let path = text(path, "path")?;
        let file = File::open(path).map_err(|e| Failure(FactStatus::Io, format!("{path}: {e}")))?;
        let (lex, errors) = load_tsv(file).map_err(|e| Failure(FactStatus::Load, format!("{path}: {e}")))?;
        if let Some(first) = errors.first() {
            return Err(Failure(
                FactStatus::Load,
                format!("{path}: {first} ({} rows rejected)", errors.len()),
            ));
        }
        emit(out, Box::into_raw(Box::new(FactLexicon { inner: lex })))
    })
}

/// # Safety
/// `lex` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fact_lexicon_free(lex: *mut FactLexicon) {
    if !lex.is_null() {
        drop(Box::from_raw(lex));
    }
}

/// Number of readings, 0 for a null handle.
///
/// # Safety
/// `lex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fact_lexicon_len(lex: *const FactLexicon) -> usize {
    lex.as_ref().map_or(0, |h| h.inner.len())
}

/// Inferential class name of a signature such as `"1|-1"`.
///
/// # Safety
/// `sig` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fact_signature_class(
    sig: *const c_char,
    out: *mut *mut c_char,
) -> FactStatus {
    guard(|| {
        let sig = signature(text(sig, "signature")?)?;
        emit_string(out, classify(sig).to_string())
    })
}

/// Strength level 0..5; NA and UNGR give 0.
///
/// # Safety
/// `sig` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fact_signature_strength(sig: *const c_char, out: *mut u8) -> FactStatus {
    guard(|| {
        let sig = text(sig, "signature")?;
        let slot = parse_signature(sig).map_err(|e| Failure(FactStatus::Parse, e.to_string()))?;
        emit(out, strength_level(slot).value())
    })
}

/// Twelve-column factuality grid as two tab-separated lines: header, values.
///
/// # Safety
/// `sig` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fact_grid(
    sig: *const c_char,
    mapping_mode: FactMapping,
    out: *mut *mut c_char,
) -> FactStatus {
    guard(|| {
        let sig = signature(text(sig, "signature")?)?;
        let header: Vec<String> = grid_columns().iter().map(ToString::to_string).collect();
        let values: Vec<String> = generate_grid(sig, &mapping(mapping_mode))
            .iter()
            .map(ToString::to_string)
            .collect();
        emit_string(out, format!("{}\n{}\n", header.join("\t"), values.join("\t")))
    })
}

/// Projects a clause expression; one `event\tchain\tvalue` line per profile entry.
///
/// # Safety
/// `lex` must be a live handle, `expr` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fact_project(
    lex: *const FactLexicon,
    expr: *const c_char,
    mapping_mode: FactMapping,
    pfv_unknown: FactPfvUnknown,
    out: *mut *mut c_char,
) -> FactStatus {
    guard(|| {
        let lex = lexicon(lex)?;
        let expr = text(expr, "expression")?;
        let config = ProjectionConfig {
            mapping: mapping(mapping_mode),
            pfv_unknown: match pfv_unknown {
                FactPfvUnknown::Weaker => PfvUnknownPolicy::Weaker,
                FactPfvUnknown::Error => PfvUnknownPolicy::Error,
            },
        };
        let report = project_text(lex, expr, &config)
            .map_err(|e| Failure(FactStatus::Projection, e.to_string()))?;
        emit_string(out, report)
    })
}

/// Renders a statistics report by name, or every report for `"all"`.
///
/// # Safety
/// `lex` must be a live handle, `name` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fact_stats(
    lex: *const FactLexicon,
    name: *const c_char,
    classing: FactClassing,
    as_tsv: bool,
    out: *mut *mut c_char,
) -> FactStatus {
    guard(|| {
        let lex = lexicon(lex)?;
        let name = text(name, "report name")?;
        let names = if name == "all" {
            ReportName::ALL.to_vec()
        } else {
            vec![name
                .parse::<ReportName>()
                .map_err(|e| Failure(FactStatus::UnknownReport, e))?]
        };
        let config = StatsConfig {
            classing: match classing {
                FactClassing::AnimFirst => Classing::AnimFirst,
                FactClassing::InanimFirst => Classing::InanimFirst,
            },
            ..StatsConfig::default()
        };
        emit_string(out, render_reports(&names, lex, &config, as_tsv))
    })
}
