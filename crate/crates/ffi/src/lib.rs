//! C ABI for the graph-groupoid library: opaque handles, integer
//! status codes, and UTF-8 strings for structured output.
//!
//! Conventions:
//! - Every fallible call returns a [`GtStatus`]; `Ok` (0) means the
//!   out-parameters were written. On any other status the
//!   out-parameters are untouched and [`gt_last_error`] describes
//!   the failure.
//! - Handles (`GtGraph`, `GtWord`) are created by `gt_*` constructors
//!   and must be released with the matching `gt_*_free`. Strings
//!   returned through `char **` out-parameters must be released with
//!   [`gt_string_free`].
//! - All pointer parameters must be either valid or null; null is
//!   reported as `NullPointer` rather than crashing. Strings must be
//!   NUL-terminated UTF-8.
//!
//! The companion header `include/graphtoep.h` is generated by the
//! build script via cbindgen.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use graphtoep::algebra::AlgebraElement;
use graphtoep::matrix::SparseMatrix;
use graphtoep::representation::{matrix_of_element, BasisIndex};
use graphtoep::suites::{
    suite_anti_iso, suite_fock_relations, suite_groupoid_axioms, suite_representation_homomorphism,
    suite_toeplitz_embed, suite_toeplitz_rewrite, suite_tree_fock_correspondence, SuiteReport,
};
use graphtoep::tree_toeplitz::ToeplitzSymbol;
use graphtoep::word::{format_word, parse_word, product, shadow};
use graphtoep::{DirectedGraph, Error, Word};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GtStatus {
    /// The call succeeded and all out-parameters are set.
    Ok = 0,
    /// A verification suite ran to completion and reported failures.
    VerifyFailed = 1,
    /// The input was malformed or the parameters were out of range.
    Usage = 2,
    /// The input referred to unknown vertices/edges or unreadable data.
    Data = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 5,
}

/// Opaque graph handle.
pub struct GtGraph(DirectedGraph);

/// Opaque reduced-word handle.
pub struct GtWord(Word);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean: String = msg.chars().filter(|c| *c != '\0').collect();
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = CString::new(clean).expect("NUL bytes were filtered out");
    });
}

fn status_of(e: &Error) -> GtStatus {
    match e {
        Error::Parse(_)
        | Error::InvalidParameter(_)
        | Error::EmptySteps
        | Error::EmptyWordCoefficient
        | Error::MixedSides
        | Error::DimensionMismatch(_)
        | Error::OutOfTruncation(_) => GtStatus::Usage,
        Error::UnknownVertex(_)
        | Error::UnknownEdge(_)
        | Error::ForeignEdge { .. }
        | Error::ForeignWord(_)
        | Error::GraphData(_)
        | Error::Io(_)
        | Error::Json(_) => GtStatus::Data,
    }
}

fn fail(e: &Error) -> GtStatus {
    set_error(&e.to_string());
    status_of(e)
}

/// Reads a NUL-terminated UTF-8 string argument.
///
/// # Safety
/// `p` must be null or point to a NUL-terminated byte string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, GtStatus> {
    if p.is_null() {
        set_error(&format!("{what} pointer is null"));
        return Err(GtStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        GtStatus::InvalidUtf8
    })
}

/// Reads a handle argument.
///
/// # Safety
/// `p` must be null or a pointer previously returned by this library
/// and not yet freed.
unsafe fn read_handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, GtStatus> {
    if p.is_null() {
        set_error(&format!("{what} pointer is null"));
        return Err(GtStatus::NullPointer);
    }
    Ok(&*p)
}

/// Checks an out-parameter slot.
///
/// # Safety
/// `p` must be null or valid for a single write.
unsafe fn out_slot<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, GtStatus> {
    if p.is_null() {
        set_error(&format!("{what} out-pointer is null"));
        return Err(GtStatus::NullPointer);
    }
    Ok(&mut *p)
}

fn give_string(s: String) -> *mut c_char {
    let clean: String = s.chars().filter(|c| *c != '\0').collect();
    CString::new(clean)
        .expect("NUL bytes were filtered out")
        .into_raw()
}

/// Returns the message for the most recent failure on this thread.
///
/// The pointer stays valid until the next failing call on the same
/// thread; do not free it.
#[no_mangle]
pub extern "C" fn gt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned through a `char **` out-parameter.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn gt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the rooted `degree`-regular tree truncated at `depth`
/// (degree 1 gives the line graph).
///
/// # Safety
/// `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn gt_graph_tree(
    degree: usize,
    depth: usize,
    out: *mut *mut GtGraph,
) -> GtStatus {
    let slot = match out_slot(out, "graph") {
        Ok(s) => s,
        Err(st) => return st,
    };
    match DirectedGraph::regular_tree(degree, depth) {
        Ok(g) => {
            *slot = Box::into_raw(Box::new(GtGraph(g)));
            GtStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Loads a graph from its JSON description.
///
/// # Safety
/// `json` must be a NUL-terminated UTF-8 string; `out` must be valid
/// for a single write.
#[no_mangle]
pub unsafe extern "C" fn gt_graph_from_json(
    json: *const c_char,
    out: *mut *mut GtGraph,
) -> GtStatus {
    let (text, slot) = match (read_str(json, "json"), out_slot(out, "graph")) {
        (Ok(t), Ok(s)) => (t, s),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    match DirectedGraph::from_json(text) {
        Ok(g) => {
            *slot = Box::into_raw(Box::new(GtGraph(g)));
            GtStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Serializes a graph to its JSON description.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be valid for a single
/// write. The returned string is freed with [`gt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gt_graph_to_json(g: *const GtGraph, out: *mut *mut c_char) -> GtStatus {
    let (graph, slot) = match (read_handle(g, "graph"), out_slot(out, "json")) {
        (Ok(h), Ok(s)) => (h, s),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    *slot = give_string(graph.0.to_json());
    GtStatus::Ok
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn gt_graph_vertex_count(g: *const GtGraph) -> usize {
    match read_handle(g, "graph") {
        Ok(h) => h.0.vertex_count(),
        Err(_) => 0,
    }
}

/// Number of unshadowed edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn gt_graph_edge_count(g: *const GtGraph) -> usize {
    match read_handle(g, "graph") {
        Ok(h) => h.0.edge_count(),
        Err(_) => 0,
    }
}

/// Releases a graph handle.
///
/// # Safety
/// `g` must be null or a live graph handle; it must not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn gt_graph_free(g: *mut GtGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses a word literal ("null", "v:LABEL", or steps like
/// "1>2;2<1") and reduces it to canonical form.
///
/// # Safety
/// `g` must be a live graph handle, `literal` a NUL-terminated UTF-8
/// string, `out` valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn gt_word_parse(
    g: *const GtGraph,
    literal: *const c_char,
    out: *mut *mut GtWord,
) -> GtStatus {
    let (graph, text, slot) = match (
        read_handle(g, "graph"),
        read_str(literal, "literal"),
        out_slot(out, "word"),
    ) {
        (Ok(h), Ok(t), Ok(s)) => (h, t, s),
        (Err(st), _, _) | (_, Err(st), _) | (_, _, Err(st)) => return st,
    };
    match parse_word(&graph.0, text) {
        Ok(w) => {
            *slot = Box::into_raw(Box::new(GtWord(w)));
            GtStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Multiplies two words in the groupoid (mismatched endpoints give
/// the absorbing word, not an error).
///
/// # Safety
/// `g`, `a`, `b` must be live handles; `out` valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn gt_word_product(
    g: *const GtGraph,
    a: *const GtWord,
    b: *const GtWord,
    out: *mut *mut GtWord,
) -> GtStatus {
    let (graph, wa, wb, slot) = match (
        read_handle(g, "graph"),
        read_handle(a, "left word"),
        read_handle(b, "right word"),
        out_slot(out, "word"),
    ) {
        (Ok(h), Ok(x), Ok(y), Ok(s)) => (h, x, y, s),
        (Err(st), _, _, _) | (_, Err(st), _, _) | (_, _, Err(st), _) | (_, _, _, Err(st)) => {
            return st
        }
    };
    match product(&graph.0, &wa.0, &wb.0) {
        Ok(w) => {
            *slot = Box::into_raw(Box::new(GtWord(w)));
            GtStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// The shadow (formal adjoint) of a word.
///
/// # Safety
/// `w` must be a live handle; `out` valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn gt_word_shadow(w: *const GtWord, out: *mut *mut GtWord) -> GtStatus {
    let (word, slot) = match (read_handle(w, "word"), out_slot(out, "word")) {
        (Ok(h), Ok(s)) => (h, s),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    *slot = Box::into_raw(Box::new(GtWord(shadow(&word.0))));
    GtStatus::Ok
}

/// Number of steps in a word (vertex words and the absorbing word
/// have length 0); 0 for a null handle.
///
/// # Safety
/// `w` must be null or a live word handle.
#[no_mangle]
pub unsafe extern "C" fn gt_word_length(w: *const GtWord) -> usize {
    match read_handle(w, "word") {
        Ok(h) => h.0.length(),
        Err(_) => 0,
    }
}

/// True when the word is the absorbing (zero) word; false for a null
/// handle.
///
/// # Safety
/// `w` must be null or a live word handle.
#[no_mangle]
pub unsafe extern "C" fn gt_word_is_absorbing(w: *const GtWord) -> bool {
    match read_handle(w, "word") {
        Ok(h) => h.0.is_empty_word(),
        Err(_) => false,
    }
}

/// Formats a word as its canonical literal.
///
/// # Safety
/// `g` and `w` must be live handles; `out` valid for a single write.
/// The returned string is freed with [`gt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gt_word_format(
    g: *const GtGraph,
    w: *const GtWord,
    out: *mut *mut c_char,
) -> GtStatus {
    let (graph, word, slot) = match (
        read_handle(g, "graph"),
        read_handle(w, "word"),
        out_slot(out, "literal"),
    ) {
        (Ok(h), Ok(x), Ok(s)) => (h, x, s),
        (Err(st), _, _) | (_, Err(st), _) | (_, _, Err(st)) => return st,
    };
    match graphtoep::word::validate_word(&graph.0, &word.0) {
        Ok(()) => {
            *slot = give_string(format_word(&graph.0, &word.0));
            GtStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Releases a word handle.
///
/// # Safety
/// `w` must be null or a live word handle; it must not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn gt_word_free(w: *mut GtWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Writes the truncated matrix of a word's generator in coordinate
/// text ("dim N nnz M" header, then "row col re im" lines), over the
/// basis of words of length at most `maxlen`. The absorbing word
/// gives the zero matrix.
///
/// # Safety
/// `g` and `w` must be live handles; `out` valid for a single write.
/// The returned string is freed with [`gt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gt_word_matrix_coord(
    g: *const GtGraph,
    w: *const GtWord,
    maxlen: usize,
    out: *mut *mut c_char,
) -> GtStatus {
    let (graph, word, slot) = match (
        read_handle(g, "graph"),
        read_handle(w, "word"),
        out_slot(out, "matrix"),
    ) {
        (Ok(h), Ok(x), Ok(s)) => (h, x, s),
        (Err(st), _, _) | (_, Err(st), _) | (_, _, Err(st)) => return st,
    };
    let basis = BasisIndex::new(&graph.0, maxlen);
    let m = if word.0.is_empty_word() {
        SparseMatrix::zero(basis.len())
    } else {
        let el = match AlgebraElement::word(word.0.clone()) {
            Ok(el) => el,
            Err(e) => return fail(&e),
        };
        match matrix_of_element(&graph.0, &basis, &el) {
            Ok(m) => m,
            Err(e) => return fail(&e),
        }
    };
    *slot = give_string(m.to_coord_text());
    GtStatus::Ok
}

/// Rewrites a banded symbol literal (e.g. "t-1=3,t0=2,t1=1/2") as
/// shift-power sums plus an exact constant; writes a JSON document
/// with the echoed symbol, the combination, and the constant.
///
/// # Safety
/// `symbol` must be a NUL-terminated UTF-8 string; `out` valid for a
/// single write. The returned string is freed with
/// [`gt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gt_toeplitz_rewrite_json(
    symbol: *const c_char,
    out: *mut *mut c_char,
) -> GtStatus {
    let (text, slot) = match (read_str(symbol, "symbol"), out_slot(out, "json")) {
        (Ok(t), Ok(s)) => (t, s),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    let sym = match ToeplitzSymbol::parse(text) {
        Ok(sym) => sym,
        Err(e) => return fail(&e),
    };
    let combo = sym.rewrite();
    let doc = serde_json::json!({
        "symbol": sym.to_literal(),
        "combo": combo.to_json_value(),
        "s0": format!("{}", combo.identity_coefficient()),
    });
    let rendered = match serde_json::to_string_pretty(&doc) {
        Ok(s) => s,
        Err(e) => return fail(&Error::from(e)),
    };
    *slot = give_string(rendered);
    GtStatus::Ok
}

fn run_suite(name: &str, seed: u64) -> graphtoep::Result<SuiteReport> {
    match name {
        "groupoid-axioms" => suite_groupoid_axioms(2, 3, 3, 4, true),
        "representation-homomorphism" => suite_representation_homomorphism(2, 4, 3, 6, true),
        "toeplitz-embed" => suite_toeplitz_embed(8, 64, 16, 3),
        "toeplitz-rewrite" => suite_toeplitz_rewrite(100, 64, 5, seed),
        "fock-relations" => suite_fock_relations(2, 6, 50, seed),
        "anti-iso" => suite_anti_iso(2, 8, 200, 4, seed),
        "tree-fock-correspondence" => suite_tree_fock_correspondence(2, 5, 3),
        other => Err(Error::InvalidParameter(format!(
            "unknown suite `{other}`; expected one of groupoid-axioms, \
             representation-homomorphism, toeplitz-embed, toeplitz-rewrite, \
             fock-relations, anti-iso, tree-fock-correspondence"
        ))),
    }
}

/// Runs a named verification suite at its default sizes (the seed
/// feeds the sampled suites) and writes its JSON report. Returns
/// `Ok` when the suite passed and `VerifyFailed` when it ran but
/// found failures; the report is written in both cases.
///
/// # Safety
/// `name` must be a NUL-terminated UTF-8 string; `out` valid for a
/// single write. The returned string is freed with
/// [`gt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gt_verify_suite_json(
    name: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> GtStatus {
    let (text, slot) = match (read_str(name, "suite name"), out_slot(out, "report")) {
        (Ok(t), Ok(s)) => (t, s),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    match run_suite(text, seed) {
        Ok(report) => {
            let pass = report.pass;
            *slot = give_string(report.to_json_string());
            if pass {
                GtStatus::Ok
            } else {
                set_error("verification suite reported failures");
                GtStatus::VerifyFailed
            }
        }
        Err(e) => fail(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn own_string(p: *mut c_char) -> String {
        assert!(!p.is_null());
        let s = CStr::from_ptr(p).to_str().expect("UTF-8").to_owned();
        gt_string_free(p);
        s
    }

    #[test]
    fn graph_and_word_round_trip() {
        unsafe {
            let mut g: *mut GtGraph = ptr::null_mut();
            assert_eq!(gt_graph_tree(2, 3, &mut g), GtStatus::Ok);
            assert_eq!(gt_graph_vertex_count(g), 15);
            assert_eq!(gt_graph_edge_count(g), 14);

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(gt_graph_to_json(g, &mut json), GtStatus::Ok);
            let text = own_string(json);
            let mut g2: *mut GtGraph = ptr::null_mut();
            let ctext = CString::new(text).unwrap();
            assert_eq!(gt_graph_from_json(ctext.as_ptr(), &mut g2), GtStatus::Ok);
            assert_eq!(gt_graph_vertex_count(g2), 15);

            let lit = CString::new("∅>1;1<∅").unwrap();
            let mut w: *mut GtWord = ptr::null_mut();
            assert_eq!(gt_word_parse(g, lit.as_ptr(), &mut w), GtStatus::Ok);
            assert_eq!(gt_word_length(w), 0);
            assert!(!gt_word_is_absorbing(w));
            let mut formatted: *mut c_char = ptr::null_mut();
            assert_eq!(gt_word_format(g, w, &mut formatted), GtStatus::Ok);
            assert_eq!(own_string(formatted), "v:∅");

            gt_word_free(w);
            gt_graph_free(g2);
            gt_graph_free(g);
        }
    }

    #[test]
    fn products_and_shadows_work_through_the_abi() {
        unsafe {
            let mut g: *mut GtGraph = ptr::null_mut();
            assert_eq!(gt_graph_tree(2, 3, &mut g), GtStatus::Ok);

            let lit = CString::new("∅>1;1>11").unwrap();
            let mut w: *mut GtWord = ptr::null_mut();
            assert_eq!(gt_word_parse(g, lit.as_ptr(), &mut w), GtStatus::Ok);
            assert_eq!(gt_word_length(w), 2);

            let mut sh: *mut GtWord = ptr::null_mut();
            assert_eq!(gt_word_shadow(w, &mut sh), GtStatus::Ok);
            let mut prod: *mut GtWord = ptr::null_mut();
            assert_eq!(gt_word_product(g, w, sh, &mut prod), GtStatus::Ok);
            let mut formatted: *mut c_char = ptr::null_mut();
            assert_eq!(gt_word_format(g, prod, &mut formatted), GtStatus::Ok);
            // w · w̄ is the unit at the source of w.
            assert_eq!(own_string(formatted), "v:∅");

            // Mismatched junctions absorb instead of erroring.
            let lit2 = CString::new("1>11").unwrap();
            let mut w2: *mut GtWord = ptr::null_mut();
            assert_eq!(gt_word_parse(g, lit2.as_ptr(), &mut w2), GtStatus::Ok);
            let mut bad: *mut GtWord = ptr::null_mut();
            assert_eq!(gt_word_product(g, w, w2, &mut bad), GtStatus::Ok);
            assert!(gt_word_is_absorbing(bad));

            for p in [w, sh, prod, w2, bad] {
                gt_word_free(p);
            }
            gt_graph_free(g);
        }
    }

    #[test]
    fn error_paths_set_status_and_message() {
        unsafe {
            let mut g: *mut GtGraph = ptr::null_mut();
            assert_eq!(gt_graph_tree(2, 2, &mut g), GtStatus::Ok);

            let mut w: *mut GtWord = ptr::null_mut();
            let bad_lit = CString::new("zzz").unwrap();
            assert_eq!(gt_word_parse(g, bad_lit.as_ptr(), &mut w), GtStatus::Usage);
            let unknown = CString::new("7>8").unwrap();
            assert_eq!(gt_word_parse(g, unknown.as_ptr(), &mut w), GtStatus::Data);
            let msg = CStr::from_ptr(gt_last_error()).to_str().unwrap();
            assert!(msg.contains("unknown vertex"), "got `{msg}`");

            assert_eq!(
                gt_word_parse(ptr::null(), bad_lit.as_ptr(), &mut w),
                GtStatus::NullPointer
            );
            assert_eq!(gt_word_parse(g, ptr::null(), &mut w), GtStatus::NullPointer);
            let bad_utf8 = [0xffu8, 0];
            assert_eq!(
                gt_word_parse(g, bad_utf8.as_ptr().cast(), &mut w),
                GtStatus::InvalidUtf8
            );

            let mut bad_graph: *mut GtGraph = ptr::null_mut();
            let bad_json = CString::new("{not json").unwrap();
            assert_eq!(
                gt_graph_from_json(bad_json.as_ptr(), &mut bad_graph),
                GtStatus::Data
            );

            gt_graph_free(g);
        }
    }

    #[test]
    fn word_matrix_and_rewrite_emit_text() {
        unsafe {
            let mut g: *mut GtGraph = ptr::null_mut();
            assert_eq!(gt_graph_tree(2, 2, &mut g), GtStatus::Ok);
            let lit = CString::new("∅>1").unwrap();
            let mut w: *mut GtWord = ptr::null_mut();
            assert_eq!(gt_word_parse(g, lit.as_ptr(), &mut w), GtStatus::Ok);
            let mut coord: *mut c_char = ptr::null_mut();
            assert_eq!(gt_word_matrix_coord(g, w, 2, &mut coord), GtStatus::Ok);
            let text = own_string(coord);
            assert!(text.starts_with("dim 33 nnz "), "got `{text}`");

            let sym = CString::new("t-1=3,t0=2,t1=1/2").unwrap();
            let mut doc: *mut c_char = ptr::null_mut();
            assert_eq!(
                gt_toeplitz_rewrite_json(sym.as_ptr(), &mut doc),
                GtStatus::Ok
            );
            let text = own_string(doc);
            assert!(text.contains("\"s0\": \"-3/2\""), "got `{text}`");

            gt_word_free(w);
            gt_graph_free(g);
        }
    }

    #[test]
    fn verify_suite_reports_through_the_abi() {
        unsafe {
            let mut report: *mut c_char = ptr::null_mut();
            let name = CString::new("toeplitz-rewrite").unwrap();
            assert_eq!(
                gt_verify_suite_json(name.as_ptr(), 7, &mut report),
                GtStatus::Ok
            );
            let a = own_string(report);
            assert!(a.contains("\"pass\": true"));

            let mut again: *mut c_char = ptr::null_mut();
            assert_eq!(
                gt_verify_suite_json(name.as_ptr(), 7, &mut again),
                GtStatus::Ok
            );
            assert_eq!(a, own_string(again), "same seed must give identical bytes");

            let bad = CString::new("no-such-suite").unwrap();
            let mut unused: *mut c_char = ptr::null_mut();
            assert_eq!(
                gt_verify_suite_json(bad.as_ptr(), 0, &mut unused),
                GtStatus::Usage
            );
        }
    }
}
