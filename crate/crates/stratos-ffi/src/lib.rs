//! C ABI over the stratos library: opaque handles, integer status
//! codes, and caller-freed strings. Every entry point catches panics.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use stratos::complex::{Homology, Variance};
use stratos::error::Error;
use stratos::gottlieb::cat_of_map;
use stratos::homotopy::HomotopySet;
use stratos::order::Proset;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum StratosStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidInput = 2,
    BudgetExceeded = 3,
    Panic = 4,
}

/// Opaque handle to a finite preordered set.
pub struct StratosProset {
    inner: Proset,
}

fn status_of(e: &Error) -> StratosStatus {
    match e {
        Error::BudgetExceeded { .. } => StratosStatus::BudgetExceeded,
        _ => StratosStatus::InvalidInput,
    }
}

fn guarded<F: FnOnce() -> StratosStatus>(f: F) -> StratosStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(StratosStatus::Panic)
}

/// Builds a proset from `n` NUL-terminated labels and `m` generating
/// pairs given as `2m` indices. On success writes a handle that must be
/// released with `stratos_proset_free`.
///
/// # Safety
/// `labels` must point to `n` valid C strings, `pairs` to `2 * m`
/// indices, and `out` to a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn stratos_proset_new(
    labels: *const *const c_char,
    n: usize,
    pairs: *const usize,
    m: usize,
    out: *mut *mut StratosProset,
) -> StratosStatus {
    if labels.is_null() && n > 0 || pairs.is_null() && m > 0 || out.is_null() {
        return StratosStatus::NullArgument;
    }
    guarded(|| {
        let mut names: Vec<String> = Vec::with_capacity(n);
        for i in 0..n {
            let ptr = *labels.add(i);
            if ptr.is_null() {
                return StratosStatus::NullArgument;
            }
            match CStr::from_ptr(ptr).to_str() {
                Ok(s) => names.push(s.to_owned()),
                Err(_) => return StratosStatus::InvalidInput,
            }
        }
        let mut edges: Vec<(String, String)> = Vec::with_capacity(m);
        for k in 0..m {
            let a = *pairs.add(2 * k);
            let b = *pairs.add(2 * k + 1);
            if a >= n || b >= n {
                return StratosStatus::InvalidInput;
            }
            edges.push((names[a].clone(), names[b].clone()));
        }
        match Proset::from_generating_pairs(&names, &edges) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(StratosProset { inner: p }));
                StratosStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// The 4-point circle model.
///
/// # Safety
/// `out` must be a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn stratos_pseudocircle(out: *mut *mut StratosProset) -> StratosStatus {
    if out.is_null() {
        return StratosStatus::NullArgument;
    }
    guarded(|| {
        *out = Box::into_raw(Box::new(StratosProset {
            inner: stratos::alexandroff::pseudocircle(),
        }));
        StratosStatus::Ok
    })
}

/// Releases a proset handle. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn stratos_proset_free(p: *mut StratosProset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of elements; 0 for a null handle.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn stratos_proset_len(p: *const StratosProset) -> usize {
    if p.is_null() {
        return 0;
    }
    (*p).inner.len()
}

/// Writes whether element `i` lies below element `j`.
///
/// # Safety
/// `p` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stratos_proset_leq(
    p: *const StratosProset,
    i: usize,
    j: usize,
    out: *mut bool,
) -> StratosStatus {
    if p.is_null() || out.is_null() {
        return StratosStatus::NullArgument;
    }
    guarded(|| {
        let p = &(*p).inner;
        if i >= p.len() || j >= p.len() {
            return StratosStatus::InvalidInput;
        }
        *out = p.leq(i, j);
        StratosStatus::Ok
    })
}

/// Number of homotopy classes of maps `x -> y` under the given
/// enumeration budget.
///
/// # Safety
/// `x`, `y` must be live handles, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stratos_homset_class_count(
    x: *const StratosProset,
    y: *const StratosProset,
    budget: u64,
    out: *mut usize,
) -> StratosStatus {
    if x.is_null() || y.is_null() || out.is_null() {
        return StratosStatus::NullArgument;
    }
    guarded(
        || match HomotopySet::enumerate(&(*x).inner, &(*y).inner, budget as u128) {
            Ok(hs) => {
                *out = hs.class_count();
                StratosStatus::Ok
            }
            Err(e) => status_of(&e),
        },
    )
}

/// Writes a description of the degree-`degree` homology group, e.g.
/// `"Z + Z/2"`. Free the string with `stratos_string_free`.
///
/// # Safety
/// `p` must be a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stratos_homology_describe(
    p: *const StratosProset,
    degree: usize,
    out: *mut *mut c_char,
) -> StratosStatus {
    if p.is_null() || out.is_null() {
        return StratosStatus::NullArgument;
    }
    guarded(|| {
        let h = Homology::of_proset(&(*p).inner, Variance::Homology);
        let s = h.group(degree).describe();
        match CString::new(s) {
            Ok(c) => {
                *out = c.into_raw();
                StratosStatus::Ok
            }
            Err(_) => StratosStatus::InvalidInput,
        }
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn stratos_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Category of the map given by `assignment` (one target index per
/// source element): least cover size minus one.
///
/// # Safety
/// `x`, `y` live handles; `assignment` holds `stratos_proset_len(x)`
/// indices; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stratos_cat(
    x: *const StratosProset,
    y: *const StratosProset,
    assignment: *const usize,
    budget: u64,
    out: *mut usize,
) -> StratosStatus {
    if x.is_null() || y.is_null() || assignment.is_null() || out.is_null() {
        return StratosStatus::NullArgument;
    }
    guarded(|| {
        let xs = &(*x).inner;
        let f: Vec<usize> = (0..xs.len()).map(|i| *assignment.add(i)).collect();
        if f.iter().any(|&v| v >= (*y).inner.len()) {
            return StratosStatus::InvalidInput;
        }
        match cat_of_map(xs, &(*y).inner, &f, budget as u128) {
            Ok(r) => {
                *out = r.value;
                StratosStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}
