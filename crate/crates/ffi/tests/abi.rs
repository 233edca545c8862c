use std::ffi::{CStr, CString};
use std::ptr;

use hoopforge_ffi::*;

const L3: &str =
    "hoop L3\nelements 3\nunit 2\nbottom 0\nmul\n0 0 0\n0 0 1\n0 1 2\nimp\n2 2 2\n1 2 2\n0 1 2\n";

fn last_error() -> String {
    let p = hf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn chain(n: usize, godel: bool) -> *mut HfHoop {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { hf_hoop_chain(n, godel, &mut h) }, HfStatus::Ok);
    h
}

#[test]
fn parse_query_and_free() {
    let src = CString::new(L3).unwrap();
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(hf_hoop_parse(src.as_ptr(), &mut h), HfStatus::Ok);
        assert_eq!(hf_hoop_order(h), 3);
        let mut v = 0;
        assert_eq!(hf_hoop_mul(h, 1, 1, &mut v), HfStatus::Ok);
        assert_eq!(v, 0);
        assert_eq!(hf_hoop_imp(h, 1, 0, &mut v), HfStatus::Ok);
        assert_eq!(v, 1);
        assert_eq!(hf_hoop_mul(h, 3, 0, &mut v), HfStatus::OutOfRange);
        assert!(last_error().contains("out of range"));

        let mut c = HfClassification::default();
        assert_eq!(hf_hoop_classify(h, &mut c), HfStatus::Ok);
        assert!(c.bounded && c.wajsberg && c.involutive && !c.godel);

        let id = CString::new("forall x y : (x -> y) -> y = (y -> x) -> x").unwrap();
        let mut ok = false;
        assert_eq!(
            hf_hoop_check_identity(h, id.as_ptr(), &mut ok),
            HfStatus::Ok
        );
        assert!(ok);

        let name = CString::new("L3").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(hf_hoop_to_text(h, name.as_ptr(), &mut out), HfStatus::Ok);
        assert_eq!(CStr::from_ptr(out).to_str().unwrap(), L3);
        hf_string_free(out);
        hf_hoop_free(h);
    }
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(hf_hoop_parse(ptr::null(), &mut h), HfStatus::NullPointer);
        let garbage = CString::new("hoop\n").unwrap();
        assert_eq!(hf_hoop_parse(garbage.as_ptr(), &mut h), HfStatus::Parse);
        // x*(x->y) differs from y*(y->x) at (0, 1)
        let (mul, imp) = ([0usize, 0, 0, 1], [1usize, 1, 1, 1]);
        assert_eq!(
            hf_hoop_from_tables(2, 1, mul.as_ptr(), imp.as_ptr(), -1, &mut h),
            HfStatus::AxiomViolation
        );
        assert!(last_error().contains("fails"));
        assert!(h.is_null());
        assert_eq!(hf_hoop_chain(0, true, &mut h), HfStatus::InvalidArgument);
        let bad = CString::new("nope").unwrap();
        let (mut json, mut passed) = (ptr::null_mut(), false);
        assert_eq!(
            hf_suite_run(bad.as_ptr(), 0, 1, false, &mut json, &mut passed),
            HfStatus::InvalidArgument
        );
        hf_hoop_free(ptr::null_mut());
    }
}

#[test]
fn decomposition_and_actions() {
    unsafe {
        let g3 = chain(3, true);
        let mut e = ptr::null_mut();
        assert_eq!(hf_extension_decompose(g3, &mut e), HfStatus::Ok);
        let mut strong = false;
        assert_eq!(hf_extension_is_strong(e, &mut strong), HfStatus::Ok);
        assert!(strong);

        let mut act = ptr::null_mut();
        assert_eq!(hf_extension_action(e, &mut act), HfStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(hf_action_extension(act, &mut back), HfStatus::Ok);
        let mut middle = ptr::null_mut();
        assert_eq!(hf_extension_middle(back, &mut middle), HfStatus::Ok);
        assert_eq!(hf_hoop_order(middle), 3);

        let l2 = chain(2, false);
        let mut count = 0;
        assert_eq!(
            hf_action_count(l2, l2, HfVariety::Basic, &mut count),
            HfStatus::Ok
        );
        assert_eq!(count, 2);
        let mut ok = false;
        assert_eq!(
            hf_verify_bijection(l2, l2, HfVariety::Hoop, true, &mut ok),
            HfStatus::Ok
        );
        assert!(ok);

        // the non-trivial action of the two-element chain on itself
        let f = [1usize, 1, 0, 1];
        let mut a2 = ptr::null_mut();
        assert_eq!(
            hf_action_new(l2, l2, f.as_ptr(), f.as_ptr(), HfVariety::Basic, &mut a2),
            HfStatus::Ok
        );
        let (mut fv, mut gv) = (9, 9);
        assert_eq!(hf_action_apply(a2, 0, 0, &mut fv, &mut gv), HfStatus::Ok);
        assert_eq!((fv, gv), (1, 1));
        assert_eq!(
            hf_action_new(l2, l2, f.as_ptr(), f.as_ptr(), HfVariety::Wajsberg, &mut a2),
            HfStatus::AxiomViolation
        );

        for h in [g3, l2, middle] {
            hf_hoop_free(h);
        }
        hf_extension_free(e);
        hf_extension_free(back);
        hf_action_free(act);
        hf_action_free(a2);
    }
}

#[test]
fn suite_through_the_abi() {
    let preset = CString::new("godel").unwrap();
    let (mut json, mut passed) = (ptr::null_mut(), false);
    unsafe {
        assert_eq!(
            hf_suite_run(preset.as_ptr(), 3, 2, false, &mut json, &mut passed),
            HfStatus::Ok
        );
        assert!(passed);
        let text = CStr::from_ptr(json).to_str().unwrap();
        assert!(text.contains("\"suite\": \"godel\""));
        hf_string_free(json);
    }
    let v = unsafe { CStr::from_ptr(hf_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
