use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::ptr;

use factualis_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    fact_string_free(p);
    s
}

fn last_error() -> String {
    let p = fact_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn seed() -> *mut FactLexicon {
    let mut lex = ptr::null_mut();
    assert_eq!(unsafe { fact_lexicon_seed(&mut lex) }, FactStatus::Ok);
    lex
}

fn fixture(name: &str) -> CString {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name);
    c(path.to_str().unwrap())
}

#[test]
fn seed_handle_lifecycle() {
    let lex = seed();
    assert_eq!(unsafe { fact_lexicon_len(lex) }, 11);
    assert!(fact_last_error().is_null());
    unsafe { fact_lexicon_free(lex) };
    unsafe { fact_lexicon_free(ptr::null_mut()) };
    assert_eq!(unsafe { fact_lexicon_len(ptr::null()) }, 0);
}

#[test]
fn load_from_path() {
    let mut lex = ptr::null_mut();
    assert_eq!(unsafe { fact_lexicon_load(fixture("toy.tsv").as_ptr(), &mut lex) }, FactStatus::Ok);
    assert_eq!(unsafe { fact_lexicon_len(lex) }, 5);
    unsafe { fact_lexicon_free(lex) };

    let mut lex = ptr::null_mut();
    let status = unsafe { fact_lexicon_load(fixture("broken.tsv").as_ptr(), &mut lex) };
    assert_eq!(status, FactStatus::Load);
    assert!(lex.is_null());
    assert!(last_error().contains("line 3"));

    let status = unsafe { fact_lexicon_load(c("/nonexistent/x.tsv").as_ptr(), &mut lex) };
    assert_eq!(status, FactStatus::Io);
}

#[test]
fn signatures() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { fact_signature_class(c("1|-1").as_ptr(), &mut out) }, FactStatus::Ok);
    assert_eq!(unsafe { take(out) }, factualis::InferentialClass::TwoWayImplicative.to_string());

    let mut level = 9u8;
    assert_eq!(unsafe { fact_signature_strength(c("0.9|n").as_ptr(), &mut level) }, FactStatus::Ok);
    assert_eq!(level, 2);
    assert_eq!(unsafe { fact_signature_strength(c("NA").as_ptr(), &mut level) }, FactStatus::Ok);
    assert_eq!(level, 0);

    assert_eq!(unsafe { fact_signature_class(c("0.5|n").as_ptr(), &mut out) }, FactStatus::Parse);
    assert_eq!(unsafe { fact_signature_class(c("UNGR").as_ptr(), &mut out) }, FactStatus::NotSignature);
    assert_eq!(unsafe { fact_signature_class(ptr::null(), &mut out) }, FactStatus::NullArg);
    assert_eq!(unsafe { fact_signature_class(c("1|1").as_ptr(), ptr::null_mut()) }, FactStatus::NullArg);
    let bad = [0xffu8, 0];
    assert_eq!(
        unsafe { fact_signature_class(bad.as_ptr().cast(), &mut out) },
        FactStatus::InvalidUtf8
    );
}

#[test]
fn grid_text() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { fact_grid(c("1|-1").as_ptr(), FactMapping::Paper, &mut out) }, FactStatus::Ok);
    assert_eq!(
        unsafe { take(out) },
        "CT+\tCT-\tCTu\tPR+\tPR-\tPRu\tPS+\tPS-\tPSu\tU+\tU-\tUu\n\
         CT+\tCT-\tCTu\tPR+\tPR-\tPRu\tPS+\tPS-\tPSu\tUu\tUu\tUu\n"
    );
    assert_eq!(unsafe { fact_grid(c("0.7|n").as_ptr(), FactMapping::Fine, &mut out) }, FactStatus::Ok);
    let values = unsafe { take(out) };
    assert!(values.ends_with("PS+\tUu\tPSu\tPS+\tUu\tPSu\tPS+\tUu\tPSu\tUu\tUu\tUu\n"), "{values}");
}

#[test]
fn projection_matches_library() {
    let lex = seed();
    let expr = "neg échouer:07[pfv,anim](E(p))";
    let mut out = ptr::null_mut();
    let status = unsafe {
        fact_project(lex, c(expr).as_ptr(), FactMapping::Paper, FactPfvUnknown::Weaker, &mut out)
    };
    assert_eq!(status, FactStatus::Ok);
    let expected = factualis::project_text(
        &factualis::Lexicon::seed(),
        expr,
        &factualis::ProjectionConfig::default(),
    )
    .unwrap();
    assert_eq!(unsafe { take(out) }, expected);

    let status = unsafe {
        fact_project(lex, c("obliger:02[pfv](E(p))").as_ptr(), FactMapping::Paper, FactPfvUnknown::Error, &mut out)
    };
    assert_eq!(status, FactStatus::Projection);
    assert!(last_error().contains("obliger:02"));
    let status = unsafe {
        fact_project(ptr::null(), c("E(p)").as_ptr(), FactMapping::Paper, FactPfvUnknown::Weaker, &mut out)
    };
    assert_eq!(status, FactStatus::NullArg);
    unsafe { fact_lexicon_free(lex) };
}

#[test]
fn stats_reports() {
    let lex = seed();
    let mut out = ptr::null_mut();
    let status = unsafe { fact_stats(lex, c("weakening").as_ptr(), FactClassing::AnimFirst, true, &mut out) };
    assert_eq!(status, FactStatus::Ok);
    assert!(unsafe { take(out) }.starts_with("# "));
    let status = unsafe { fact_stats(lex, c("all").as_ptr(), FactClassing::InanimFirst, false, &mut out) };
    assert_eq!(status, FactStatus::Ok);
    unsafe { fact_string_free(out) };
    let status = unsafe { fact_stats(lex, c("table9").as_ptr(), FactClassing::AnimFirst, false, &mut out) };
    assert_eq!(status, FactStatus::UnknownReport);
    assert!(last_error().contains("histogram"));
    unsafe { fact_lexicon_free(lex) };
}

#[test]
fn errors_are_per_thread() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { fact_signature_class(c("bad").as_ptr(), &mut out) }, FactStatus::Parse);
    std::thread::spawn(|| assert!(fact_last_error().is_null())).join().unwrap();
    assert!(!fact_last_error().is_null());
}
