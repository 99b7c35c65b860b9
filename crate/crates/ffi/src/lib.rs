//! C ABI over `garside-core`.
//!
//! Systems are opaque handles created by [`garside_system_from_json`] or
//! [`garside_system_bundled`] and released with [`garside_system_free`].
//! Every call returns a [`GarsideStatus`]; on anything but `OK` a message is
//! available from [`garside_last_error`] until the next call on the same
//! thread. Strings handed out through `out` parameters are owned by the
//! caller and must be released with [`garside_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use garside_core::rewrite::verify_presentation;
use garside_core::{bundled, Error, GarsideSystem, LatticeOp, Quiver, Side};
use serde_json::json;

/// Opaque system handle.
pub struct GarsideHandle {
    sys: GarsideSystem,
    quiver: RefCell<Option<Quiver>>,
}

impl GarsideHandle {
    fn quiver(&self) -> Result<std::cell::Ref<'_, Quiver>, Error> {
        if self.quiver.borrow().is_none() {
            let q = self.sys.atom_quiver()?;
            *self.quiver.borrow_mut() = Some(q);
        }
        Ok(std::cell::Ref::map(self.quiver.borrow(), |q| q.as_ref().unwrap()))
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GarsideStatus {
    Ok = 0,
    /// The question has a negative answer (not a ribbon, not a divisor).
    Negative = 1,
    /// A null pointer or a string that is not UTF-8.
    InvalidArgument = 2,
    /// A word, atom or parabolic that does not parse in this system.
    Parse = 3,
    /// The system definition was rejected.
    InvalidSystem = 4,
    /// An internal invariant failed or a panic was caught.
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GarsideSide {
    Left = 0,
    Right = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GarsideLatticeOp {
    Gcd = 0,
    Lcm = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("nul bytes removed")));
}

fn status_of(e: &Error) -> GarsideStatus {
    match e {
        _ if e.is_domain_negative() => GarsideStatus::Negative,
        Error::UnknownAtom(_) | Error::Parse(_) | Error::NotAParabolic(_) | Error::Json(_) => GarsideStatus::Parse,
        Error::InvariantViolation(_) | Error::IterationCapExceeded(_) => GarsideStatus::Internal,
        _ => GarsideStatus::InvalidSystem,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (GarsideStatus, String)>) -> GarsideStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GarsideStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GarsideStatus::Internal
        }
    }
}

fn core(e: Error) -> (GarsideStatus, String) {
    (status_of(&e), e.to_string())
}

fn invalid(msg: &str) -> (GarsideStatus, String) {
    (GarsideStatus::InvalidArgument, msg.to_string())
}

unsafe fn arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, (GarsideStatus, String)> {
    if p.is_null() {
        return Err(invalid(&format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid(&format!("{name} is not UTF-8")))
}

unsafe fn handle<'a>(h: *const GarsideHandle) -> Result<&'a GarsideHandle, (GarsideStatus, String)> {
    h.as_ref().ok_or_else(|| invalid("system handle is null"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (GarsideStatus, String)> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    *out = CString::new(s).map_err(|_| invalid("output contains a nul byte"))?.into_raw();
    Ok(())
}

unsafe fn put_handle(out: *mut *mut GarsideHandle, sys: GarsideSystem) -> Result<(), (GarsideStatus, String)> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    *out = Box::into_raw(Box::new(GarsideHandle { sys, quiver: RefCell::new(None) }));
    Ok(())
}

fn side(s: GarsideSide) -> Side {
    match s {
        GarsideSide::Left => Side::Left,
        GarsideSide::Right => Side::Right,
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call on the same thread.
#[no_mangle]
pub extern "C" fn garside_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Build a system from a JSON definition.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn garside_system_from_json(json: *const c_char, out: *mut *mut GarsideHandle) -> GarsideStatus {
    guard(|| {
        let text = arg(json, "json")?;
        let sys = GarsideSystem::from_json(text).map_err(|e| match e {
            Error::Json(_) => (GarsideStatus::Parse, e.to_string()),
            e => (GarsideStatus::InvalidSystem, e.to_string()),
        })?;
        put_handle(out, sys)
    })
}

/// Load a bundled system by name (`b3`, `b4`, `rank1`, `square_central`,
/// `delta_root`, `delta_root_corrupted`).
///
/// # Safety
/// `name` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn garside_system_bundled(name: *const c_char, out: *mut *mut GarsideHandle) -> GarsideStatus {
    guard(|| {
        let name = arg(name, "name")?;
        let sys = bundled::by_name(name).ok_or_else(|| (GarsideStatus::Parse, format!("no bundled system `{name}`")))?;
        put_handle(out, sys)
    })
}

/// # Safety
/// `h` must come from this library and not have been freed; null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn garside_system_free(h: *mut GarsideHandle) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `s` must come from this library and not have been freed; null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn garside_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of atoms.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn garside_system_rank(h: *const GarsideHandle) -> usize {
    h.as_ref().map_or(0, |h| h.sys.rank())
}

/// Normal form of a positive word, as greedy letters joined by `" . "`.
///
/// # Safety
/// Pointers must be valid; `word` a C string.
#[no_mangle]
pub unsafe extern "C" fn garside_normal_form(
    h: *const GarsideHandle,
    word: *const c_char,
    out: *mut *mut c_char,
) -> GarsideStatus {
    guard(|| {
        let h = handle(h)?;
        let p = h.sys.parse_positive(arg(word, "word")?).map_err(core)?;
        put_string(out, h.sys.render_positive(&p))
    })
}

/// gcd or lcm of two positive words on the given side.
///
/// # Safety
/// Pointers must be valid; words C strings.
#[no_mangle]
pub unsafe extern "C" fn garside_lattice(
    h: *const GarsideHandle,
    op: GarsideLatticeOp,
    s: GarsideSide,
    w1: *const c_char,
    w2: *const c_char,
    out: *mut *mut c_char,
) -> GarsideStatus {
    guard(|| {
        let h = handle(h)?;
        let x = h.sys.parse_positive(arg(w1, "w1")?).map_err(core)?;
        let y = h.sys.parse_positive(arg(w2, "w2")?).map_err(core)?;
        let op = match op {
            GarsideLatticeOp::Gcd => LatticeOp::Meet,
            GarsideLatticeOp::Lcm => LatticeOp::Join,
        };
        put_string(out, h.sys.render_positive(&h.sys.lattice(&x, &y, op, side(s))))
    })
}

/// Least quasi-central multiple of a non-empty positive word.
///
/// # Safety
/// Pointers must be valid; `word` a C string.
#[no_mangle]
pub unsafe extern "C" fn garside_tau(h: *const GarsideHandle, word: *const c_char, out: *mut *mut c_char) -> GarsideStatus {
    guard(|| {
        let h = handle(h)?;
        let p = h.sys.parse_positive(arg(word, "word")?).map_err(core)?;
        if p.is_identity() {
            return Err((GarsideStatus::Parse, "empty word".into()));
        }
        let t = h.sys.tau(&p, h.sys.all_atoms()).map_err(core)?;
        put_string(out, h.sys.render_positive(&t))
    })
}

/// Basis of the quasi-centralizer, one atom word per line.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn garside_qz_basis(h: *const GarsideHandle, out: *mut *mut c_char) -> GarsideStatus {
    guard(|| {
        let h = handle(h)?;
        let qz = h.sys.qz_basis(h.sys.all_atoms()).map_err(core)?;
        let lines: Vec<String> = qz.basis.iter().map(|b| h.sys.render_positive_word(b)).collect();
        put_string(out, lines.join("\n"))
    })
}

/// Groupoid presentation in its JSON form.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn garside_presentation_json(h: *const GarsideHandle, out: *mut *mut c_char) -> GarsideStatus {
    guard(|| {
        let h = handle(h)?;
        let p = h.sys.presentation().map_err(core)?;
        put_string(out, h.sys.presentation_json(&p))
    })
}

/// Split a group word `g` as `a·r` with `a` in `A_X` and `r` a ν-ribbon.
/// The parabolic is comma-separated atom names. Returns `NEGATIVE` when `g`
/// does not conjugate `A_X` onto a standard parabolic; otherwise `out`
/// receives `{"a": ..., "ribbon": ..., "source": [...], "target": [...]}`
/// with group elements as word lists (`x^-1` for inverses, `DELTA`).
///
/// # Safety
/// Pointers must be valid; strings C strings.
#[no_mangle]
pub unsafe extern "C" fn garside_conjugate(
    h: *const GarsideHandle,
    parabolic: *const c_char,
    word: *const c_char,
    out: *mut *mut c_char,
) -> GarsideStatus {
    guard(|| {
        let h = handle(h)?;
        let sys = &h.sys;
        let x = sys.parse_atom_set(arg(parabolic, "parabolic")?).map_err(core)?;
        sys.check_parabolic(x).map_err(core)?;
        let g = sys.parse_group(arg(word, "word")?).map_err(core)?;
        let q = h.quiver().map_err(core)?;
        let d = sys
            .conj_decompose(&q, &g, x)
            .map_err(core)?
            .ok_or_else(|| (GarsideStatus::Negative, format!("{} is not a ribbon out of {}", sys.render_group(&g), sys.render_set(x))))?;
        let doc = json!({
            "a": sys.group_word(&d.a),
            "ribbon": sys.group_word(&d.ribbon.element),
            "source": sys.set_names(d.ribbon.source),
            "target": sys.set_names(d.ribbon.target),
        });
        put_string(out, doc.to_string())
    })
}

/// Check the presentation on all paths up to `level`; `passed` receives the
/// verdict.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn garside_verify_presentation(
    h: *const GarsideHandle,
    level: usize,
    passed: *mut bool,
) -> GarsideStatus {
    guard(|| {
        let h = handle(h)?;
        if passed.is_null() {
            return Err(invalid("output pointer is null"));
        }
        let p = h.sys.presentation().map_err(core)?;
        *passed = verify_presentation(&h.sys, &p, level).passed();
        Ok(())
    })
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn garside_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
