//! C ABI over `euler-medians`.
//!
//! Objects are opaque handles allocated by this library and released with
//! the matching `*_free` function. Every fallible call returns an
//! [`EmStatus`]; results come back through out-pointers, which are only
//! written on `EM_STATUS_OK`. Integers of arbitrary size are exchanged as
//! NUL-terminated decimal strings, with `u64` accessors where values fit.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use euler_medians::construction::{construct, Classification, ConstructionOutcome, Parameters, Route};
use euler_medians::record::parse_sextuple;
use euler_medians::search::{enumerate, SearchBound};
use euler_medians::triangle::{self, Degeneracy, MedianTriangle};
use euler_medians::Integer;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    /// The input does not describe a triangle with integer medians, or a
    /// construction produced no triangle.
    NotAMedianTriangle = 4,
    /// The output buffer is too small; the required size was written.
    BufferTooSmall = 5,
    /// The value does not fit the requested fixed-width type.
    OutOfRange = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmRoute {
    RationalPipeline = 0,
    ClosedForm = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmClassification {
    Valid = 0,
    Degenerate = 1,
    Zero = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmDegeneracy {
    None = 0,
    Collinear = 1,
    ZeroSide = 2,
}

/// Construction intermediates readable through `em_construction_trace`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmTraceField {
    M = 0,
    N = 1,
    PRational = 2,
    QRational = 3,
    P = 4,
    Q = 5,
    T = 6,
    U = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmReport {
    pub identity_x: bool,
    pub identity_y: bool,
    pub identity_z: bool,
    pub derived_identities: bool,
    pub triangle_inequality: bool,
    pub positive: bool,
    pub primitive: bool,
    pub degeneracy: EmDegeneracy,
    pub all_pass: bool,
}

/// A verified triangle: half-sides `a, b, c` (indices 0..3) and medians
/// `x, y, z` (indices 3..6).
pub struct EmTriangle(MedianTriangle);

pub struct EmTriangleList(Vec<MedianTriangle>);

pub struct EmConstruction(ConstructionOutcome);

fn guard<F: FnOnce() -> EmStatus + UnwindSafe>(f: F) -> EmStatus {
    catch_unwind(f).unwrap_or(EmStatus::Internal)
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, EmStatus> {
    if text.is_null() {
        return Err(EmStatus::NullPointer);
    }
    CStr::from_ptr(text).to_str().map_err(|_| EmStatus::ParseError)
}

/// Copies `s` plus a NUL into `buf`. `needed` (optional) receives the size
/// including the NUL.
unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> EmStatus {
    let size = s.len() + 1;
    if !needed.is_null() {
        *needed = size;
    }
    if buf.is_null() || len < size {
        return EmStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    *buf.add(s.len()) = 0;
    EmStatus::Ok
}

fn value_at(t: &MedianTriangle, index: u32) -> Option<&Integer> {
    t.sextuple().iter().nth(index as usize)
}

/// Static description of a status code. Never null.
#[no_mangle]
pub extern "C" fn em_status_message(status: EmStatus) -> *const c_char {
    let s: &'static CStr = match status {
        EmStatus::Ok => c"ok",
        EmStatus::NullPointer => c"null pointer",
        EmStatus::InvalidArgument => c"invalid argument",
        EmStatus::ParseError => c"parse error",
        EmStatus::NotAMedianTriangle => c"not a median triangle",
        EmStatus::BufferTooSmall => c"buffer too small",
        EmStatus::OutOfRange => c"value out of range",
        EmStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Runs the construction for `(f, g)`, both at least 1.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn em_construct(f: u64, g: u64, route: EmRoute, out: *mut *mut EmConstruction) -> EmStatus {
    guard(|| {
        if out.is_null() {
            return EmStatus::NullPointer;
        }
        let Ok(params) = Parameters::new(f, g) else { return EmStatus::InvalidArgument };
        let route = match route {
            EmRoute::RationalPipeline => Route::RationalPipeline,
            EmRoute::ClosedForm => Route::ClosedForm,
        };
        match construct(&params, route) {
            Ok(outcome) => {
                *out = boxed(EmConstruction(outcome));
                EmStatus::Ok
            }
            Err(_) => EmStatus::Internal,
        }
    })
}

/// # Safety
/// `c` must come from `em_construct`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_construction_classification(
    c: *const EmConstruction,
    out: *mut EmClassification,
) -> EmStatus {
    if c.is_null() || out.is_null() {
        return EmStatus::NullPointer;
    }
    *out = match (*c).0.classification {
        Classification::Valid => EmClassification::Valid,
        Classification::Degenerate => EmClassification::Degenerate,
        Classification::Zero => EmClassification::Zero,
    };
    EmStatus::Ok
}

/// The primitive triangle of a valid construction, as a new handle.
/// Returns `EM_STATUS_NOT_A_MEDIAN_TRIANGLE` for degenerate outcomes.
///
/// # Safety
/// `c` must come from `em_construct`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_construction_triangle(c: *const EmConstruction, out: *mut *mut EmTriangle) -> EmStatus {
    if c.is_null() || out.is_null() {
        return EmStatus::NullPointer;
    }
    match &(*c).0.triangle {
        Some(t) => {
            *out = boxed(EmTriangle(t.clone()));
            EmStatus::Ok
        }
        None => EmStatus::NotAMedianTriangle,
    }
}

/// Writes one trace value as a decimal integer or `n/d` fraction.
/// `EM_STATUS_INVALID_ARGUMENT` if the route did not produce the field.
///
/// # Safety
/// `c` must come from `em_construct`; `buf` must hold `len` bytes; `needed`
/// may be null.
#[no_mangle]
pub unsafe extern "C" fn em_construction_trace(
    c: *const EmConstruction,
    field: EmTraceField,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> EmStatus {
    if c.is_null() {
        return EmStatus::NullPointer;
    }
    let tr = &(*c).0.trace;
    let text = match field {
        EmTraceField::M => Some(tr.m.to_string()),
        EmTraceField::N => Some(tr.n.to_string()),
        EmTraceField::PRational => tr.p_rat.as_ref().map(ToString::to_string),
        EmTraceField::QRational => tr.q_rat.as_ref().map(ToString::to_string),
        EmTraceField::P => Some(tr.p.to_string()),
        EmTraceField::Q => Some(tr.q.to_string()),
        EmTraceField::T => Some(tr.t.to_string()),
        EmTraceField::U => Some(tr.u.to_string()),
    };
    match text {
        Some(s) => write_str(&s, buf, len, needed),
        None => EmStatus::InvalidArgument,
    }
}

/// # Safety
/// `c` must come from `em_construct` or be null; it must not be used again.
#[no_mangle]
pub unsafe extern "C" fn em_construction_free(c: *mut EmConstruction) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Parses `"a b c x y z"` (whitespace or comma separated) into a verified
/// triangle, kept in the given order and scale.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_parse(text: *const c_char, out: *mut *mut EmTriangle) -> EmStatus {
    guard(|| {
        if out.is_null() {
            return EmStatus::NullPointer;
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(e) => return e,
        };
        let Ok(s) = parse_sextuple(text) else { return EmStatus::ParseError };
        match MedianTriangle::new(s) {
            Ok(t) => {
                *out = boxed(EmTriangle(t));
                EmStatus::Ok
            }
            Err(_) => EmStatus::NotAMedianTriangle,
        }
    })
}

/// Builds a verified triangle from six values `a, b, c, x, y, z`.
///
/// # Safety
/// `values` must point to six `uint64_t`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_from_u64(values: *const u64, out: *mut *mut EmTriangle) -> EmStatus {
    if values.is_null() || out.is_null() {
        return EmStatus::NullPointer;
    }
    let v = std::slice::from_raw_parts(values, 6);
    let s = euler_medians::Sextuple::new(v[0], v[1], v[2], v[3], v[4], v[5]);
    match MedianTriangle::new(s) {
        Ok(t) => {
            *out = boxed(EmTriangle(t));
            EmStatus::Ok
        }
        Err(_) => EmStatus::NotAMedianTriangle,
    }
}

/// Value `index` (0..6: a, b, c, x, y, z) as `uint64_t`.
///
/// # Safety
/// `t` must be a live triangle handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_get_u64(t: *const EmTriangle, index: u32, out: *mut u64) -> EmStatus {
    if t.is_null() || out.is_null() {
        return EmStatus::NullPointer;
    }
    let Some(v) = value_at(&(*t).0, index) else { return EmStatus::InvalidArgument };
    match u64::try_from(v) {
        Ok(v) => {
            *out = v;
            EmStatus::Ok
        }
        Err(_) => EmStatus::OutOfRange,
    }
}

/// Value `index` (0..6) as a decimal string.
///
/// # Safety
/// `t` must be a live triangle handle; `buf` must hold `len` bytes; `needed`
/// may be null.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_get_string(
    t: *const EmTriangle,
    index: u32,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> EmStatus {
    if t.is_null() {
        return EmStatus::NullPointer;
    }
    match value_at(&(*t).0, index) {
        Some(v) => write_str(&v.to_string(), buf, len, needed),
        None => EmStatus::InvalidArgument,
    }
}

/// The median triangle (half-sides `x, y, z`, medians `3a, 3b, 3c`) in
/// primitive form.
///
/// # Safety
/// `t` must be a live triangle handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_dual(t: *const EmTriangle, out: *mut *mut EmTriangle) -> EmStatus {
    if t.is_null() || out.is_null() {
        return EmStatus::NullPointer;
    }
    let t = &(*t).0;
    guard(move || match triangle::dual(t) {
        Ok(d) => {
            *out = boxed(EmTriangle(d));
            EmStatus::Ok
        }
        Err(_) => EmStatus::Internal,
    })
}

/// Primitive form with pairs sorted by ascending half-side.
///
/// # Safety
/// `t` must be a live triangle handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_canonical(t: *const EmTriangle, out: *mut *mut EmTriangle) -> EmStatus {
    if t.is_null() || out.is_null() {
        return EmStatus::NullPointer;
    }
    *out = boxed(EmTriangle((*t).0.canonical()));
    EmStatus::Ok
}

/// # Safety
/// `a` and `b` must be live triangle handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_similar(a: *const EmTriangle, b: *const EmTriangle, out: *mut bool) -> EmStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return EmStatus::NullPointer;
    }
    *out = triangle::similar(&(*a).0, &(*b).0);
    EmStatus::Ok
}

/// # Safety
/// `t` must come from this library or be null; it must not be used again.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_free(t: *mut EmTriangle) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Checks a sextuple `"a b c x y z"` without requiring it to be valid.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_verify(text: *const c_char, out: *mut EmReport) -> EmStatus {
    guard(|| {
        if out.is_null() {
            return EmStatus::NullPointer;
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(e) => return e,
        };
        let Ok(s) = parse_sextuple(text) else { return EmStatus::ParseError };
        let r = triangle::verify(&s);
        *out = EmReport {
            identity_x: r.identity_x,
            identity_y: r.identity_y,
            identity_z: r.identity_z,
            derived_identities: r.derived_identities,
            triangle_inequality: r.triangle_inequality,
            positive: r.positive,
            primitive: r.primitive,
            degeneracy: match r.degeneracy {
                Degeneracy::None => EmDegeneracy::None,
                Degeneracy::Collinear => EmDegeneracy::Collinear,
                Degeneracy::ZeroSide => EmDegeneracy::ZeroSide,
            },
            all_pass: r.all_pass(),
        };
        EmStatus::Ok
    })
}

/// All primitive median triangles with largest half-side at most
/// `max_half_side`, in canonical form and ascending order.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_search(max_half_side: u64, out: *mut *mut EmTriangleList) -> EmStatus {
    guard(|| {
        if out.is_null() {
            return EmStatus::NullPointer;
        }
        let Ok(bound) = SearchBound::new(max_half_side) else { return EmStatus::InvalidArgument };
        *out = boxed(EmTriangleList(enumerate(bound)));
        EmStatus::Ok
    })
}

/// Number of entries; zero for a null list.
///
/// # Safety
/// `list` must be a live list handle or null.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_list_len(list: *const EmTriangleList) -> usize {
    if list.is_null() {
        0
    } else {
        (&*list).0.len()
    }
}

/// A copy of entry `index` as a new triangle handle.
///
/// # Safety
/// `list` must be a live list handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_list_get(
    list: *const EmTriangleList,
    index: usize,
    out: *mut *mut EmTriangle,
) -> EmStatus {
    if list.is_null() || out.is_null() {
        return EmStatus::NullPointer;
    }
    let list = &*list;
    match list.0.get(index) {
        Some(t) => {
            *out = boxed(EmTriangle(t.clone()));
            EmStatus::Ok
        }
        None => EmStatus::InvalidArgument,
    }
}

/// # Safety
/// `list` must come from `em_search` or be null; it must not be used again.
#[no_mangle]
pub unsafe extern "C" fn em_triangle_list_free(list: *mut EmTriangleList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
