//! C ABI over `optseq`.
//!
//! Objects cross the boundary as opaque handles created by `optseq_*_new` /
//! `optseq_*_parse` style functions and released by the matching `_free`.
//! Every fallible function returns an [`OptseqStatus`]; on failure a message
//! is available from [`optseq_last_error_message`] on the same thread.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with [`optseq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use optseq::asds::{classify, symmetric_difference_check, Classification, SubsetPair};
use optseq::cocycles::{is_quasi_orthogonal, row_excess, Cocycle};
use optseq::search::{search_oqs_with, FoundObject, SearchConfig};
use optseq::seqcore::{autocorrelation_spectrum, is_oqs};
use optseq::transforms::{array_to_quat, array_to_sequence, quat_to_array, sequence_to_array};
use optseq::{BinarySeq, Error, QuaternarySeq};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptseqStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed text or non-UTF-8 input.
    Parse = 2,
    /// Well-formed input outside the domain of the operation.
    InvalidArgument = 3,
    /// A mathematical precondition does not hold.
    Precondition = 4,
    BudgetExceeded = 5,
    /// Output buffer too small; the required length is still reported.
    BufferTooSmall = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptseqAsdsKind {
    None = 0,
    Asds = 1,
    Sds = 2,
}

/// Classification of a subset pair; parameters are zero when `kind` is `None`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptseqAsdsParams {
    pub kind: OptseqAsdsKind,
    pub m: usize,
    pub k1: usize,
    pub k2: usize,
    pub mu: usize,
    pub t: usize,
    /// The multiset B − D is closed under negation.
    pub symmetric: bool,
}

/// A quaternary sequence.
pub struct OptseqSequence(QuaternarySeq);

/// The outcome of an OQS search.
pub struct OptseqSearchResults(Vec<QuaternarySeq>);

/// A cocycle over Z2 x Zm.
pub struct OptseqCocycle(Cocycle);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> OptseqStatus {
    match e {
        Error::Empty | Error::InvalidSymbol { .. } | Error::InvalidValue { .. } | Error::Usage(_) => {
            OptseqStatus::Parse
        }
        Error::NotOqs | Error::NotAsds | Error::NotNormalized | Error::Precondition(_) => OptseqStatus::Precondition,
        Error::BudgetExceeded { .. } => OptseqStatus::BudgetExceeded,
        _ => OptseqStatus::InvalidArgument,
    }
}

fn fail(status: OptseqStatus, msg: &str) -> OptseqStatus {
    set_last_error(msg);
    status
}

/// Runs `body`, mapping library errors and panics to status codes.
fn guard(body: impl FnOnce() -> Result<(), (OptseqStatus, String)>) -> OptseqStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => OptseqStatus::Ok,
        Ok(Err((status, msg))) => fail(status, &msg),
        Err(_) => fail(OptseqStatus::Panic, "internal panic"),
    }
}

type FfiResult<T> = Result<T, (OptseqStatus, String)>;

fn lib<T>(r: optseq::Result<T>) -> FfiResult<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (OptseqStatus, String) {
    (OptseqStatus::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(p: *const c_char) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| (OptseqStatus::Parse, "input is not valid UTF-8".into()))
}

unsafe fn read_slice<'a, T>(p: *const T, len: usize) -> FfiResult<&'a [T]> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(null())
    } else {
        Ok(std::slice::from_raw_parts(p, len))
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("rendered text has no NUL").into_raw()
}

unsafe fn handle<'a, T>(p: *const T) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(null)
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn optseq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn optseq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn optseq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a quaternary sequence over the symbols `+ i - j`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn optseq_sequence_parse(text: *const c_char, out: *mut *mut OptseqSequence) -> OptseqStatus {
    guard(|| {
        let s = read_str(text)?;
        let f = lib(s.parse::<QuaternarySeq>())?;
        write_out(out, Box::into_raw(Box::new(OptseqSequence(f))))
    })
}

/// Builds a sequence from exponents e_k, meaning f(k) = i^{e_k}; each must be < 4.
///
/// # Safety
/// `exponents` must point to `len` readable bytes and `out` be valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_sequence_from_exponents(
    exponents: *const u8,
    len: usize,
    out: *mut *mut OptseqSequence,
) -> OptseqStatus {
    guard(|| {
        let exps = read_slice(exponents, len)?;
        if let Some(p) = exps.iter().position(|&e| e > 3) {
            return Err((OptseqStatus::InvalidArgument, format!("exponent at {p} exceeds 3")));
        }
        let f = lib(QuaternarySeq::new(exps.to_vec()))?;
        write_out(out, Box::into_raw(Box::new(OptseqSequence(f))))
    })
}

/// # Safety
/// `seq` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn optseq_sequence_free(seq: *mut OptseqSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Length of the sequence, or 0 for NULL.
///
/// # Safety
/// `seq` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn optseq_sequence_len(seq: *const OptseqSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.0.len())
}

/// Renders the sequence as text; free the result with [`optseq_string_free`].
///
/// # Safety
/// `seq` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_sequence_to_string(seq: *const OptseqSequence, out: *mut *mut c_char) -> OptseqStatus {
    guard(|| {
        let s = handle(seq)?;
        write_out(out, into_c_string(s.0.to_string()))
    })
}

/// Periodic autocorrelation R(w), w = 0..len−1, as real and imaginary parts.
/// Writes `len` entries to each buffer when `capacity` allows; `written`
/// always receives the required length.
///
/// # Safety
/// `re` and `im` must hold `capacity` entries; `seq` and `written` valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_autocorrelation(
    seq: *const OptseqSequence,
    re: *mut i64,
    im: *mut i64,
    capacity: usize,
    written: *mut usize,
) -> OptseqStatus {
    guard(|| {
        let s = handle(seq)?;
        let spectrum = autocorrelation_spectrum(&s.0);
        write_out(written, spectrum.len())?;
        if capacity < spectrum.len() {
            return Err((OptseqStatus::BufferTooSmall, format!("need {} entries", spectrum.len())));
        }
        if re.is_null() || im.is_null() {
            return Err(null());
        }
        for (w, r) in spectrum.iter().enumerate() {
            re.add(w).write(r.re);
            im.add(w).write(r.im);
        }
        Ok(())
    })
}

/// Whether the sequence is an optimal quaternary sequence (odd length only).
///
/// # Safety
/// `seq` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_is_oqs(seq: *const OptseqSequence, out: *mut bool) -> OptseqStatus {
    guard(|| {
        let s = handle(seq)?;
        let v = lib(is_oqs(&s.0))?;
        write_out(out, v)
    })
}

/// Maps a quaternary sequence of odd length m ≥ 3 to its binary sequence of
/// length 2m, written as `+`/`-` text.
///
/// # Safety
/// `seq` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_oqs_to_gobs(seq: *const OptseqSequence, out: *mut *mut c_char) -> OptseqStatus {
    guard(|| {
        let s = handle(seq)?;
        let phi = lib(array_to_sequence(&quat_to_array(&s.0)))?;
        write_out(out, into_c_string(phi.to_string()))
    })
}

/// Inverse of [`optseq_oqs_to_gobs`].
///
/// # Safety
/// `text` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_gobs_to_oqs(text: *const c_char, out: *mut *mut OptseqSequence) -> OptseqStatus {
    guard(|| {
        let phi = lib(read_str(text)?.parse::<BinarySeq>())?;
        let f = array_to_quat(&lib(sequence_to_array(&phi))?);
        write_out(out, Box::into_raw(Box::new(OptseqSequence(f))))
    })
}

/// Exhaustive OQS search at odd length m ≤ 13. `jobs` = 0 uses every core.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_search_oqs(
    m: usize,
    canonical: bool,
    jobs: usize,
    out: *mut *mut OptseqSearchResults,
) -> OptseqStatus {
    guard(|| {
        let config = SearchConfig { jobs: (jobs > 0).then_some(jobs), budget: None };
        let found = lib(search_oqs_with(m, canonical, &config))?;
        let seqs = found
            .into_iter()
            .filter_map(|r| match r.object {
                FoundObject::Sequence(f) => Some(f),
                FoundObject::Pair(_) => None,
            })
            .collect();
        write_out(out, Box::into_raw(Box::new(OptseqSearchResults(seqs))))
    })
}

/// # Safety
/// `results` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn optseq_search_results_len(results: *const OptseqSearchResults) -> usize {
    results.as_ref().map_or(0, |r| r.0.len())
}

/// Copies result `index` into a new sequence handle.
///
/// # Safety
/// `results` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_search_results_get(
    results: *const OptseqSearchResults,
    index: usize,
    out: *mut *mut OptseqSequence,
) -> OptseqStatus {
    guard(|| {
        let r = handle(results)?;
        let f = r
            .0
            .get(index)
            .ok_or_else(|| (OptseqStatus::InvalidArgument, format!("index {index} out of range 0..{}", r.0.len())))?;
        write_out(out, Box::into_raw(Box::new(OptseqSequence(f.clone()))))
    })
}

/// # Safety
/// `results` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn optseq_search_results_free(results: *mut OptseqSearchResults) {
    if !results.is_null() {
        drop(Box::from_raw(results));
    }
}

/// The cocycle λ^{lambda} · ∏ ∂_i over Z2 x Zm for the listed indices 2 ≤ i ≤ 2m−1.
///
/// # Safety
/// `deltas` must point to `len` entries and `out` be valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_cocycle_new(
    m: usize,
    lambda: bool,
    deltas: *const usize,
    len: usize,
    out: *mut *mut OptseqCocycle,
) -> OptseqStatus {
    guard(|| {
        let ds = read_slice(deltas, len)?;
        let psi = lib(Cocycle::new(m, lambda, ds))?;
        write_out(out, Box::into_raw(Box::new(OptseqCocycle(psi))))
    })
}

/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn optseq_cocycle_free(c: *mut OptseqCocycle) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_cocycle_is_quasi_orthogonal(c: *const OptseqCocycle, out: *mut bool) -> OptseqStatus {
    guard(|| write_out(out, is_quasi_orthogonal(&handle(c)?.0)))
}

/// Sum of |row sum| over the non-identity rows of the cocyclic matrix.
///
/// # Safety
/// `c` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_cocycle_row_excess(c: *const OptseqCocycle, out: *mut i64) -> OptseqStatus {
    guard(|| write_out(out, row_excess(&handle(c)?.0.matrix())))
}

/// Classifies (B, D) ⊆ Z_m; elements are reduced mod m and must be distinct.
///
/// # Safety
/// `b` and `d` must point to `b_len` and `d_len` entries; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn optseq_asds_classify(
    m: usize,
    b: *const usize,
    b_len: usize,
    d: *const usize,
    d_len: usize,
    out: *mut OptseqAsdsParams,
) -> OptseqStatus {
    guard(|| {
        let pair = lib(SubsetPair::new(m, read_slice(b, b_len)?, read_slice(d, d_len)?))?;
        let symmetric = symmetric_difference_check(&pair);
        let (kind, p) = match classify(&pair) {
            Classification::Asds(p) => (OptseqAsdsKind::Asds, Some(p)),
            Classification::Sds(p) => (OptseqAsdsKind::Sds, Some(p)),
            Classification::NotAsds => (OptseqAsdsKind::None, None),
        };
        let p = p.unwrap_or(optseq::asds::AsdsParams { m, k1: 0, k2: 0, mu: 0, t: 0 });
        write_out(out, OptseqAsdsParams { kind, m: p.m, k1: p.k1, k2: p.k2, mu: p.mu, t: p.t, symmetric })
    })
}
