mod common;

use common::{distance, strategies};
use opinion_algebra::{
    averaging_fission, averaging_fuse, cumulative_fission, cumulative_fuse, is_decomposable, Error,
    FissionMode, Opinion, EPSILON,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn cumulative_fission_inverts_fusion((a, b) in strategies::pair()) {
        let c = cumulative_fuse(&a, &b, None).unwrap();
        let back = cumulative_fission(&c, &b, None).unwrap();
        prop_assert!(distance(&back, &a) <= 1e-9, "{back:?} vs {a:?}");
    }

    #[test]
    fn averaging_fission_inverts_fusion((a, b) in strategies::pair()) {
        let c = averaging_fuse(&a, &b, None).unwrap();
        let back = averaging_fission(&c, &b, None).unwrap();
        prop_assert!(distance(&back, &a) <= 1e-9, "{back:?} vs {a:?}");
    }

    /// Whenever a split succeeds, fusing it back reproduces the input and the
    /// probe agrees with the operator.
    #[test]
    fn successful_fission_refuses_to_input((c, b) in strategies::pair_with(1e-3)) {
        for mode in [FissionMode::Cumulative, FissionMode::Averaging] {
            let (split, refuse): (fn(&Opinion, &Opinion, _) -> _, fn(&Opinion, &Opinion, _) -> _) = match mode {
                FissionMode::Cumulative => (cumulative_fission, cumulative_fuse),
                FissionMode::Averaging => (averaging_fission, averaging_fuse),
            };
            let verdict = is_decomposable(&c, &b, mode, None).unwrap();
            match split(&c, &b, None) {
                Ok(a) => {
                    prop_assert!(verdict.is_decomposable());
                    let total = a.uncertainty() + a.belief().iter().sum::<f64>();
                    prop_assert!((total - 1.0).abs() <= EPSILON);
                    let again: Opinion = refuse(&a, &b, None).unwrap();
                    prop_assert!(distance(&again, &c) <= 1e-9);
                }
                Err(Error::NotDecomposable(v)) => prop_assert_eq!(verdict.violation(), Some(v)),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }

    #[test]
    fn averaging_fission_is_idempotent(w in strategies::single()) {
        prop_assume!(w.uncertainty() >= EPSILON);
        let r = averaging_fission(&w, &w, None).unwrap();
        prop_assert_eq!(r.belief(), w.belief());
        prop_assert_eq!(r.uncertainty(), w.uncertainty());
    }

    #[test]
    fn cumulative_fission_raises_uncertainty((a, b) in strategies::pair()) {
        let c = cumulative_fuse(&a, &b, None).unwrap();
        let r = cumulative_fission(&c, &b, None).unwrap();
        prop_assert!(r.uncertainty() >= c.uncertainty());
    }
}

#[test]
fn uncertainty_unchanged_only_for_vacuous_component() {
    let c = Opinion::binomial(0.5, 0.2, 0.3, 0.5).unwrap();
    let vacuous = Opinion::binomial(0.0, 0.0, 1.0, 0.5).unwrap();
    assert_eq!(cumulative_fission(&c, &vacuous, None).unwrap().uncertainty(), 0.3);
    let b = Opinion::binomial(0.3, 0.1, 0.6, 0.5).unwrap();
    assert!(cumulative_fission(&c, &b, None).unwrap().uncertainty() > 0.3);
}

#[test]
fn cumulative_fission_is_not_commutative() {
    let c = Opinion::binomial(0.90, 0.05, 0.05, 0.5).unwrap();
    let b = Opinion::binomial(0.70, 0.10, 0.20, 0.5).unwrap();
    assert!(cumulative_fission(&c, &b, None).is_ok());
    assert!(matches!(cumulative_fission(&b, &c, None), Err(Error::NotDecomposable(_))));
}

#[test]
fn cumulative_fission_is_not_idempotent() {
    let w = Opinion::binomial(0.6, 0.2, 0.2, 0.5).unwrap();
    let r = cumulative_fission(&w, &w, None).unwrap();
    assert_eq!(r.uncertainty(), 1.0);
    assert!(distance(&r, &w) > 0.5);
}
