//! C ABI over the stratification library.
//!
//! Every fallible function returns an [`SaStatus`]. On failure a message is
//! kept per thread and can be read with [`sa_last_error_message`]. Strings
//! returned through out-parameters are owned by the caller and must be
//! released with [`sa_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use strata_atlas::admissible::{ekor_set, kr_set};
use strata_atlas::newton::b_set;
use strata_atlas::orders::Notation;
use strata_atlas::report::{self, Artifact, Format, ReportRequest, Session};
use strata_atlas::siegel::component_count;
use strata_atlas::{Error, SiegelLevel};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapExceeded = 3,
    Utf8 = 4,
    Mismatch = 5,
    Internal = 6,
    Panic = 7,
}

/// A group, level and admissible set, ready for queries.
pub struct SaSession {
    inner: Session,
    g: usize,
    level: String,
}

/// Stratum counts of a session.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SaCounts {
    pub admissible: usize,
    pub ekor: usize,
    pub kr: usize,
    pub newton: usize,
    pub components: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> SaStatus {
    match err {
        Error::CapExceeded { .. } => SaStatus::CapExceeded,
        Error::InvalidLevel(_)
        | Error::Parse { .. }
        | Error::InvalidCoweight(_)
        | Error::NotDominant(_)
        | Error::GeneratorOutOfRange { .. }
        | Error::InvalidSigma(_) => SaStatus::InvalidArgument,
        _ => SaStatus::Internal,
    }
}

fn fail(status: SaStatus, msg: impl Into<String>) -> SaStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning panics into [`SaStatus::Panic`] and clearing the error
/// slot on success.
fn guard(f: impl FnOnce() -> SaStatus) -> SaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(SaStatus::Ok) => {
            clear_error();
            SaStatus::Ok
        }
        Ok(status) => status,
        Err(_) => fail(SaStatus::Panic, "internal panic"),
    }
}

/// Reads an optional C string; null maps to `None`.
unsafe fn opt_str<'a>(p: *const c_char) -> Result<Option<&'a str>, SaStatus> {
    if p.is_null() {
        return Ok(None);
    }
    CStr::from_ptr(p)
        .to_str()
        .map(Some)
        .map_err(|_| fail(SaStatus::Utf8, "argument is not valid UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> SaStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            SaStatus::Ok
        }
        Err(_) => fail(SaStatus::Internal, "output contains a NUL byte"),
    }
}

/// Opens a session for GSp(2g) at `level` (comma-separated indices, e.g.
/// `"0,1"`); a null `level` selects the Iwahori level.
///
/// # Safety
/// `level` must be null or a valid C string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sa_session_new(g: u32, level: *const c_char, out: *mut *mut SaSession) -> SaStatus {
    guard(|| {
        if out.is_null() {
            return fail(SaStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let level = match opt_str(level) {
            Ok(l) => l,
            Err(s) => return s,
        };
        let g = g as usize;
        let iwahori = (0..=g).map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        let session = SiegelLevel::parse(g, level.unwrap_or(&iwahori)).and_then(|lvl| {
            let name = lvl.indices().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
            Session::for_level(g, lvl, None, Notation::Word).map(|s| (s, name))
        });
        match session {
            Ok((inner, level)) => {
                *out = Box::into_raw(Box::new(SaSession { inner, g, level }));
                SaStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Releases a session. Null is ignored.
///
/// # Safety
/// `session` must be null or come from [`sa_session_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sa_session_free(session: *mut SaSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// Fills `out` with the stratum counts of the session.
///
/// # Safety
/// `session` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sa_session_counts(session: *const SaSession, out: *mut SaCounts) -> SaStatus {
    guard(|| {
        let (Some(s), false) = (session.as_ref(), out.is_null()) else {
            return fail(SaStatus::NullPointer, "session or out is null");
        };
        let inner = &s.inner;
        let newton = match b_set(&inner.ctx, &inner.adm, &inner.k) {
            Ok(b) => b.len(),
            Err(e) => return fail(status_of(&e), e.to_string()),
        };
        *out = SaCounts {
            admissible: inner.adm.len(),
            ekor: ekor_set(&inner.ctx, &inner.adm, &inner.k).len(),
            kr: kr_set(&inner.ctx, &inner.adm, &inner.k).len(),
            newton,
            components: component_count(&inner.level),
        };
        SaStatus::Ok
    })
}

/// Renders an artifact (`"adm"`, `"ekor"`, `"kr"`, `"hasse-ekor"`,
/// `"hasse-kr"`, `"newton"`, `"zip"`, `"summary"`) in `format` (`"md"`,
/// `"json"` or `"dot"`; null means `"md"`).
///
/// # Safety
/// `session` and `out` must be valid pointers; `artifact` and `format` must be
/// null or valid C strings. Free `*out` with [`sa_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sa_session_render(
    session: *const SaSession,
    artifact: *const c_char,
    format: *const c_char,
    out: *mut *mut c_char,
) -> SaStatus {
    guard(|| {
        let (Some(s), false) = (session.as_ref(), out.is_null()) else {
            return fail(SaStatus::NullPointer, "session or out is null");
        };
        *out = ptr::null_mut();
        let (artifact, format) = match (opt_str(artifact), opt_str(format)) {
            (Ok(Some(a)), Ok(f)) => (a, f.unwrap_or("md")),
            (Ok(None), _) => return fail(SaStatus::NullPointer, "artifact is null"),
            (Err(st), _) | (_, Err(st)) => return st,
        };
        let parsed = artifact
            .parse::<Artifact>()
            .and_then(|a| format.parse::<Format>().map(|f| (a, f)));
        let (artifact, format) = match parsed {
            Ok(p) => p,
            Err(e) => return fail(status_of(&e), e.to_string()),
        };
        let mut req = ReportRequest::new(s.g, Some(&s.level), artifact);
        req.format = format;
        let output = if artifact == Artifact::Selfcheck {
            report::run(&req)
        } else if format == Format::Dot && !matches!(artifact, Artifact::HasseEkor | Artifact::HasseKr) {
            return fail(SaStatus::InvalidArgument, "dot format is only valid for hasse diagrams");
        } else {
            match s.inner.render(&req) {
                Ok(text) => return write_string(out, text),
                Err(e) => return fail(status_of(&e), e.to_string()),
            }
        };
        finish_run(output, out)
    })
}

unsafe fn finish_run(output: report::Output, out: *mut *mut c_char) -> SaStatus {
    match output.code {
        report::EXIT_OK => write_string(out, output.stdout),
        report::EXIT_MISMATCH if !output.stdout.is_empty() => {
            let st = write_string(out, output.stdout);
            if st != SaStatus::Ok {
                return st;
            }
            fail(SaStatus::Mismatch, "selfcheck reported mismatches")
        }
        report::EXIT_CAP => fail(SaStatus::CapExceeded, output.stderr.trim()),
        report::EXIT_USAGE => fail(SaStatus::InvalidArgument, output.stderr.trim()),
        _ => fail(SaStatus::Internal, output.stderr.trim()),
    }
}

/// Runs the full self-check for GSp(2g) and writes its report to `out`.
/// Returns [`SaStatus::Mismatch`] (with the report still written) when any
/// check fails.
///
/// # Safety
/// `out` must be a valid pointer. Free `*out` with [`sa_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sa_selfcheck(g: u32, out: *mut *mut c_char) -> SaStatus {
    guard(|| {
        if out.is_null() {
            return fail(SaStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        finish_run(report::run(&ReportRequest::new(g as usize, None, Artifact::Selfcheck)), out)
    })
}

/// The JSON schema describing every JSON output.
///
/// # Safety
/// `out` must be a valid pointer. Free `*out` with [`sa_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sa_json_schema(out: *mut *mut c_char) -> SaStatus {
    guard(|| {
        if out.is_null() {
            return fail(SaStatus::NullPointer, "out is null");
        }
        write_string(out, report::json_schema())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string produced by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sa_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn sa_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
