//! C ABI over `segsub`. Strings cross the boundary as opaque `SegsubText`
//! handles; every entry point returns a `SegsubStatus` and writes results
//! through out-pointers. Panics are caught and reported as `Panic`.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use segsub::indseglcs::FamilyChoice;
use segsub::lce::{LcsufIndex, LcsufMode};
use segsub::segmatch::SegeAlgo;
use segsub::{Budget, Error};

/// Status code returned by every function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegsubStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidBudget = 2,
    SizeLimit = 3,
    InvalidInput = 4,
    OutOfRange = 5,
    Panic = 6,
}

impl From<&Error> for SegsubStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidBudget(_) => SegsubStatus::InvalidBudget,
            Error::SizeLimit { .. } => SegsubStatus::SizeLimit,
            Error::NonBinary(_) | Error::InvalidSpec(_) => SegsubStatus::InvalidInput,
            Error::BoundOutOfRange { .. } | Error::IndexOutOfRange { .. } => SegsubStatus::OutOfRange,
        }
    }
}

/// Selects the SegE decision procedure.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegsubSegeAlgo {
    Auto = 0,
    Dp = 1,
    Kmp2 = 2,
}

/// Selects the table family used for each side of IndSegLCS.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegsubFamily {
    Auto = 0,
    Count = 1,
    Score = 2,
}

/// Owned byte string.
pub struct SegsubText {
    bytes: Vec<u8>,
}

/// Longest-common-suffix index over two texts.
pub struct SegsubLcsuf {
    index: LcsufIndex,
}

fn guard(f: impl FnOnce() -> Result<(), SegsubStatus>) -> SegsubStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SegsubStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => SegsubStatus::Panic,
    }
}

unsafe fn text<'a>(t: *const SegsubText) -> Result<&'a [u8], SegsubStatus> {
    t.as_ref().map(|t| t.bytes.as_slice()).ok_or(SegsubStatus::NullPointer)
}

fn budget(f: i64) -> Result<Budget, SegsubStatus> {
    Budget::from_signed(f).map_err(|e| SegsubStatus::from(&e))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), SegsubStatus> {
    if out.is_null() {
        return Err(SegsubStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

fn check_out<T>(out: *mut T) -> Result<(), SegsubStatus> {
    if out.is_null() {
        Err(SegsubStatus::NullPointer)
    } else {
        Ok(())
    }
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn segsub_status_message(status: SegsubStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        SegsubStatus::Ok => b"ok\0",
        SegsubStatus::NullPointer => b"null pointer argument\0",
        SegsubStatus::InvalidBudget => b"segment budget must be positive\0",
        SegsubStatus::SizeLimit => b"input exceeds the size limit\0",
        SegsubStatus::InvalidInput => b"invalid input\0",
        SegsubStatus::OutOfRange => b"index or bound out of range\0",
        SegsubStatus::Panic => b"internal error\0",
    };
    s.as_ptr().cast()
}

/// Copies `len` bytes from `data` into a new text handle.
/// `data` may be null only when `len` is 0.
///
/// # Safety
/// `data` must point to `len` readable bytes and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn segsub_text_new(data: *const u8, len: usize, out: *mut *mut SegsubText) -> SegsubStatus {
    guard(|| {
        check_out(out)?;
        let bytes = if len == 0 {
            Vec::new()
        } else if data.is_null() {
            return Err(SegsubStatus::NullPointer);
        } else {
            std::slice::from_raw_parts(data, len).to_vec()
        };
        write(out, Box::into_raw(Box::new(SegsubText { bytes })))
    })
}

/// # Safety
/// `t` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn segsub_text_free(t: *mut SegsubText) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Length in bytes, 0 for null.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn segsub_text_len(t: *const SegsubText) -> usize {
    t.as_ref().map_or(0, |t| t.bytes.len())
}

/// Borrowed pointer to the bytes, valid until the handle is freed. Not NUL-terminated.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn segsub_text_data(t: *const SegsubText) -> *const u8 {
    t.as_ref().map_or(ptr::null(), |t| t.bytes.as_ptr())
}

/// Minimum number of segments of `p` embedded in `t`. `*found` is false when `p`
/// is not a subsequence of `t`, in which case `*segments` is 0.
///
/// # Safety
/// Handles must be live; out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn segsub_min_segments(
    t: *const SegsubText,
    p: *const SegsubText,
    found: *mut bool,
    segments: *mut usize,
) -> SegsubStatus {
    guard(|| {
        let (t, p) = (text(t)?, text(p)?);
        check_out(found)?;
        check_out(segments)?;
        let k = segsub::segmatch::min_segments(t, p);
        write(found, k.is_some())?;
        write(segments, k.unwrap_or(0))
    })
}

/// Whether `p` is an `f`-segmental subsequence of `t`.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn segsub_sege(
    t: *const SegsubText,
    p: *const SegsubText,
    f: i64,
    algo: SegsubSegeAlgo,
    out: *mut bool,
) -> SegsubStatus {
    guard(|| {
        let (t, p) = (text(t)?, text(p)?);
        check_out(out)?;
        let algo = match algo {
            SegsubSegeAlgo::Auto => SegeAlgo::Auto,
            SegsubSegeAlgo::Dp => SegeAlgo::Dp,
            SegsubSegeAlgo::Kmp2 => SegeAlgo::Kmp2,
        };
        let yes = segsub::segmatch::sege_with(t, p, budget(f)?, algo).map_err(|e| SegsubStatus::from(&e))?;
        write(out, yes)
    })
}

/// Segmental LCS with at most `f` shared segments.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn segsub_slcs(
    t1: *const SegsubText,
    t2: *const SegsubText,
    f: i64,
    out: *mut usize,
) -> SegsubStatus {
    guard(|| {
        let (a, b) = (text(t1)?, text(t2)?);
        check_out(out)?;
        write(out, segsub::seglcs::slcs(a, b, budget(f)?))
    })
}

/// LCS under independent budgets `f1` for `t1` and `f2` for `t2`.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn segsub_indseglcs(
    t1: *const SegsubText,
    t2: *const SegsubText,
    f1: i64,
    f2: i64,
    family: SegsubFamily,
    out: *mut usize,
) -> SegsubStatus {
    guard(|| {
        let (a, b) = (text(t1)?, text(t2)?);
        check_out(out)?;
        let choice = match family {
            SegsubFamily::Auto => FamilyChoice::Auto,
            SegsubFamily::Count => FamilyChoice::Count,
            SegsubFamily::Score => FamilyChoice::Score,
        };
        write(out, segsub::indseglcs::indseglcs_with(a, b, budget(f1)?, budget(f2)?, choice))
    })
}

/// Builds the SegE instance `(text, pattern, budget)` for binary episode matching
/// with window bound `h`. The two new handles are owned by the caller.
///
/// # Safety
/// Handles must be live; out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn segsub_reduce_episode(
    t: *const SegsubText,
    p: *const SegsubText,
    h: usize,
    out_text: *mut *mut SegsubText,
    out_pattern: *mut *mut SegsubText,
    out_budget: *mut usize,
) -> SegsubStatus {
    guard(|| {
        let (t, p) = (text(t)?, text(p)?);
        check_out(out_text)?;
        check_out(out_pattern)?;
        check_out(out_budget)?;
        let r = segsub::reduction::build_episode_reduction(t, p, h).map_err(|e| SegsubStatus::from(&e))?;
        write(out_budget, r.budget)?;
        write(out_text, Box::into_raw(Box::new(SegsubText { bytes: r.text })))?;
        write(out_pattern, Box::into_raw(Box::new(SegsubText { bytes: r.pattern })))
    })
}

/// Builds an index answering `lcsuf(t1[1..i], t2[1..j])` in constant time.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn segsub_lcsuf_new(
    t1: *const SegsubText,
    t2: *const SegsubText,
    out: *mut *mut SegsubLcsuf,
) -> SegsubStatus {
    guard(|| {
        let (a, b) = (text(t1)?, text(t2)?);
        check_out(out)?;
        let index = LcsufIndex::build(a, b, LcsufMode::Auto);
        write(out, Box::into_raw(Box::new(SegsubLcsuf { index })))
    })
}

/// # Safety
/// `idx` must be a live index handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn segsub_lcsuf_query(
    idx: *const SegsubLcsuf,
    i: usize,
    j: usize,
    out: *mut usize,
) -> SegsubStatus {
    guard(|| {
        let idx = idx.as_ref().ok_or(SegsubStatus::NullPointer)?;
        check_out(out)?;
        let v = idx.index.query(i, j).map_err(|e| SegsubStatus::from(&e))?;
        write(out, v)
    })
}

/// # Safety
/// `idx` must be null or a live index handle.
#[no_mangle]
pub unsafe extern "C" fn segsub_lcsuf_free(idx: *mut SegsubLcsuf) {
    if !idx.is_null() {
        drop(Box::from_raw(idx));
    }
}
