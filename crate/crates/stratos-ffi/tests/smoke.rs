//! Exercises the C entry points from Rust, including the error paths.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use stratos_ffi::*;

fn pseudocircle() -> *mut StratosProset {
    let mut p = ptr::null_mut();
    let st = unsafe { stratos_pseudocircle(&mut p) };
    assert!(st == StratosStatus::Ok);
    p
}

#[test]
fn build_query_and_free() {
    let labels: Vec<CString> = ["a", "b", "c"]
        .iter()
        .map(|s| CString::new(*s).unwrap())
        .collect();
    let ptrs: Vec<*const c_char> = labels.iter().map(|c| c.as_ptr()).collect();
    let pairs = [0usize, 1, 1, 2];
    let mut p = ptr::null_mut();
    let st = unsafe { stratos_proset_new(ptrs.as_ptr(), 3, pairs.as_ptr(), 2, &mut p) };
    assert!(st == StratosStatus::Ok);
    assert_eq!(unsafe { stratos_proset_len(p) }, 3);
    let mut b = false;
    assert!(unsafe { stratos_proset_leq(p, 0, 2, &mut b) } == StratosStatus::Ok);
    assert!(b); // transitive closure
    assert!(unsafe { stratos_proset_leq(p, 2, 0, &mut b) } == StratosStatus::Ok);
    assert!(!b);
    assert!(unsafe { stratos_proset_leq(p, 0, 9, &mut b) } == StratosStatus::InvalidInput);
    unsafe { stratos_proset_free(p) };
}

#[test]
fn null_arguments_are_rejected() {
    let mut p = ptr::null_mut();
    assert!(unsafe { stratos_pseudocircle(ptr::null_mut()) } == StratosStatus::NullArgument);
    assert!(
        unsafe { stratos_proset_new(ptr::null(), 1, ptr::null(), 0, &mut p) }
            == StratosStatus::NullArgument
    );
    unsafe { stratos_proset_free(ptr::null_mut()) }; // no-op
}

#[test]
fn duplicate_labels_are_invalid() {
    let labels: Vec<CString> = ["a", "a"].iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs: Vec<*const c_char> = labels.iter().map(|c| c.as_ptr()).collect();
    let mut p = ptr::null_mut();
    let st = unsafe { stratos_proset_new(ptrs.as_ptr(), 2, ptr::null(), 0, &mut p) };
    assert!(st == StratosStatus::InvalidInput);
}

#[test]
fn pseudocircle_class_count_and_homology() {
    let p = pseudocircle();
    let mut count = 0usize;
    let st = unsafe { stratos_homset_class_count(p, p, 10_000_000, &mut count) };
    assert!(st == StratosStatus::Ok);
    assert_eq!(count, 5);

    let mut s: *mut c_char = ptr::null_mut();
    assert!(unsafe { stratos_homology_describe(p, 1, &mut s) } == StratosStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { stratos_string_free(s) };
    assert_eq!(text, "Z");

    unsafe { stratos_proset_free(p) };
}

#[test]
fn budget_exhaustion_reports() {
    let p = pseudocircle();
    let mut count = 0usize;
    let st = unsafe { stratos_homset_class_count(p, p, 3, &mut count) };
    assert!(st == StratosStatus::BudgetExceeded);
    unsafe { stratos_proset_free(p) };
}

#[test]
fn cat_of_identity_and_constant() {
    let p = pseudocircle();
    let id = [0usize, 1, 2, 3];
    let cst = [2usize, 2, 2, 2];
    let mut v = 99usize;
    assert!(unsafe { stratos_cat(p, p, id.as_ptr(), 10_000_000, &mut v) } == StratosStatus::Ok);
    assert_eq!(v, 1);
    assert!(unsafe { stratos_cat(p, p, cst.as_ptr(), 10_000_000, &mut v) } == StratosStatus::Ok);
    assert_eq!(v, 0);
    unsafe { stratos_proset_free(p) };
}
