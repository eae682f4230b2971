//! C ABI for hypermorse.
//!
//! Hypergraphs cross the boundary as opaque [`HmHypergraph`] handles built from
//! JSON documents. Every fallible call returns an [`HmStatus`]; on failure the
//! message is available from [`hm_last_error_message`] on the same thread.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with [`hm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hypermorse::chains::{embedded_homology, CoeffSpec};
use hypermorse::cli::commands::{self, ComplexMode, MorseAction, MorseHost};
use hypermorse::cli::{ExitStatus, HypergraphDocument, LoadedHypergraph};
use hypermorse::morse::ExtensionConfig;
use hypermorse::Error;

/// Status codes. Values 1 to 5 match the exit codes of the command-line tool.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HmStatus {
    Ok = 0,
    Internal = 1,
    Parse = 2,
    InvalidDocument = 3,
    InvalidMorphism = 4,
    SizeCap = 5,
    NullArgument = 10,
    BufferTooSmall = 11,
}

/// Which simplicial complex [`hm_complex_json`] returns.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HmComplexMode {
    Assoc = 0,
    Lower = 1,
}

/// Which hypergraph [`hm_morse_critical_json`] reads the Morse values on.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HmMorseHost {
    Hyper = 0,
    Assoc = 1,
    Lower = 2,
}

/// Opaque handle to a parsed hypergraph document.
pub struct HmHypergraph {
    loaded: LoadedHypergraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> HmStatus {
    match ExitStatus::of(err) {
        ExitStatus::Ok => HmStatus::Ok,
        ExitStatus::Internal => HmStatus::Internal,
        ExitStatus::Parse => HmStatus::Parse,
        ExitStatus::InvalidDocument => HmStatus::InvalidDocument,
        ExitStatus::InvalidMorphism => HmStatus::InvalidMorphism,
        ExitStatus::SizeCap => HmStatus::SizeCap,
    }
}

/// Runs `f`, recording errors and converting panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), (HmStatus, String)>) -> HmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HmStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HmStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (HmStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_arg(name: &str) -> (HmStatus, String) {
    (HmStatus::NullArgument, format!("`{name}` is null"))
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, (HmStatus, String)> {
    if p.is_null() {
        return Err(null_arg(name));
    }
    CStr::from_ptr(p).to_str().map_err(|e| (HmStatus::Parse, format!("`{name}` is not UTF-8: {e}")))
}

unsafe fn handle<'a>(h: *const HmHypergraph) -> Result<&'a HmHypergraph, (HmStatus, String)> {
    h.as_ref().ok_or_else(|| null_arg("hypergraph"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (HmStatus, String)> {
    if out.is_null() {
        return Err(null_arg("out"));
    }
    let c = CString::new(s).map_err(|e| (HmStatus::Internal, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Parses a hypergraph document. On success `*out` owns a new handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hm_hypergraph_from_json(json: *const c_char, out: *mut *mut HmHypergraph) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        *out = ptr::null_mut();
        let text = read_str(json, "json")?;
        let loaded = HypergraphDocument::from_json(text).and_then(|d| d.load()).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(HmHypergraph { loaded }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must come from [`hm_hypergraph_from_json`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hm_hypergraph_free(h: *mut HmHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of distinct hyperedges.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hm_hypergraph_edge_count(h: *const HmHypergraph, out: *mut usize) -> HmStatus {
    guard(|| {
        let h = handle(h)?;
        let out = out.as_mut().ok_or_else(|| null_arg("out"))?;
        *out = h.loaded.hypergraph.len();
        Ok(())
    })
}

/// Embedded Betti numbers in degrees `0..=dim Δℋ`.
///
/// `coeff` is `"z"`, `"q"` or `"zp:<p>"`. `*len` receives the number of
/// degrees; if it exceeds `cap` nothing is written to `out` and the call returns
/// `BUFFER_TOO_SMALL`, so passing `cap = 0` queries the length.
///
/// # Safety
/// `out` must point to `cap` writable `size_t` values (may be null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn hm_embedded_betti(
    h: *const HmHypergraph,
    coeff: *const c_char,
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> HmStatus {
    guard(|| {
        let h = handle(h)?;
        let coeff: CoeffSpec = read_str(coeff, "coeff")?.parse().map_err(lib_err)?;
        let len = len.as_mut().ok_or_else(|| null_arg("len"))?;
        let bettis = embedded_homology(&h.loaded.hypergraph, coeff).map_err(lib_err)?.bettis();
        *len = bettis.len();
        if bettis.len() > cap {
            return Err((HmStatus::BufferTooSmall, format!("{} degrees do not fit in {cap}", bettis.len())));
        }
        if !bettis.is_empty() {
            if out.is_null() {
                return Err(null_arg("out"));
            }
            ptr::copy_nonoverlapping(bettis.as_ptr(), out, bettis.len());
        }
        Ok(())
    })
}

/// The associated or lower-associated complex as a JSON result object.
///
/// # Safety
/// `h` must be a live handle, `out` a valid pointer and `mode` a declared enumerator.
#[no_mangle]
pub unsafe extern "C" fn hm_complex_json(
    h: *const HmHypergraph,
    mode: HmComplexMode,
    out: *mut *mut c_char,
) -> HmStatus {
    guard(|| {
        let h = handle(h)?;
        let mode = match mode {
            HmComplexMode::Assoc => ComplexMode::Assoc,
            HmComplexMode::Lower => ComplexMode::Lower,
        };
        write_string(out, commands::complex(&h.loaded, mode).to_string())
    })
}

/// Critical hyperedges of the document's Morse values on the chosen host, as JSON.
///
/// # Safety
/// `h` must be a live handle, `out` a valid pointer and `on` a declared enumerator.
#[no_mangle]
pub unsafe extern "C" fn hm_morse_critical_json(
    h: *const HmHypergraph,
    on: HmMorseHost,
    out: *mut *mut c_char,
) -> HmStatus {
    guard(|| {
        let h = handle(h)?;
        let on = match on {
            HmMorseHost::Hyper => MorseHost::Hyper,
            HmMorseHost::Assoc => MorseHost::Assoc,
            HmMorseHost::Lower => MorseHost::Lower,
        };
        let outcome =
            commands::morse(&h.loaded, MorseAction::Critical, on, &ExtensionConfig::default()).map_err(lib_err)?;
        write_string(out, outcome.result.to_string())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failed call on this thread, or an empty string.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn hm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hm_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version literal is NUL-terminated"),
    };
    VERSION.as_ptr()
}
