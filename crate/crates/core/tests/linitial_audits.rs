use crossfam_core::oracle::audit::{max_cross_audit, size_formula_audit, symmetry_audit};

#[test]
fn size_formulas_agree_with_enumeration() {
    for n in 1..=10 {
        for k in 1..=5.min(n) {
            let a = size_formula_audit(n, k).unwrap();
            assert!(a.ok(), "{:?}", a.examples);
        }
    }
}

#[test]
fn partner_family_is_maximal() {
    for n in 2..=10 {
        for a in 1..n {
            for b in 1..=n - a {
                let r = max_cross_audit(n, a, b).unwrap();
                assert!(r.ok(), "{:?}", r.examples);
            }
        }
    }
}

#[test]
fn threshold_test_is_symmetric() {
    for n in 2..=10 {
        for a in 1..n {
            for b in 1..=(n - a).min(a) {
                let r = symmetry_audit(n, a, b).unwrap();
                assert!(r.ok(), "{:?}", r.examples);
            }
        }
    }
}
