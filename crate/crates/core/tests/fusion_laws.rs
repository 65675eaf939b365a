mod common;

use common::{distance, strategies};
use opinion_algebra::{averaging_fuse, cumulative_fuse, DogmaticWeights, Opinion, EPSILON};
use proptest::prelude::*;

fn assert_valid(op: &Opinion) {
    let total = op.uncertainty() + op.belief().iter().sum::<f64>();
    assert!((total - 1.0).abs() <= EPSILON, "additivity broken: {op:?}");
    assert!(op.belief().iter().all(|b| (0.0..=1.0).contains(b)));
    assert!((0.0..=1.0).contains(&op.uncertainty()));
}

proptest! {
    #[test]
    fn outputs_are_valid((a, b) in strategies::pair_with(0.0)) {
        assert_valid(&cumulative_fuse(&a, &b, None).unwrap());
        assert_valid(&averaging_fuse(&a, &b, None).unwrap());
    }

    #[test]
    fn cumulative_commutes((a, b) in strategies::pair_with(0.0), gamma in 0.0..=1.0f64) {
        let w = DogmaticWeights::new(gamma).unwrap();
        let ab = cumulative_fuse(&a, &b, Some(w)).unwrap();
        let ba = cumulative_fuse(&b, &a, Some(w.swapped())).unwrap();
        prop_assert!(distance(&ab, &ba) <= 1e-12);
    }

    #[test]
    fn cumulative_associates((a, b, c) in strategies::triple(1e-3)) {
        let left = cumulative_fuse(&cumulative_fuse(&a, &b, None).unwrap(), &c, None).unwrap();
        let right = cumulative_fuse(&a, &cumulative_fuse(&b, &c, None).unwrap(), None).unwrap();
        prop_assert!(distance(&left, &right) <= 1e-9);
    }

    #[test]
    fn cumulative_is_not_idempotent(w in strategies::single()) {
        prop_assume!(w.uncertainty() > 0.0 && w.uncertainty() < 1.0);
        let ww = cumulative_fuse(&w, &w, None).unwrap();
        prop_assert!(ww.uncertainty() < w.uncertainty());
    }

    #[test]
    fn averaging_commutes_and_is_idempotent((a, b) in strategies::pair_with(0.0)) {
        let ab = averaging_fuse(&a, &b, None).unwrap();
        let ba = averaging_fuse(&b, &a, None).unwrap();
        prop_assert!(distance(&ab, &ba) <= 1e-12);
        let aa = averaging_fuse(&a, &a, None).unwrap();
        prop_assert!(distance(&aa, &a) <= 1e-12);
    }

    #[test]
    fn uncertainty_bounds((a, b) in strategies::pair()) {
        let (ua, ub) = (a.uncertainty(), b.uncertainty());
        let cum = cumulative_fuse(&a, &b, None).unwrap();
        prop_assert!(cum.uncertainty() <= ua.min(ub) * (1.0 + 1e-15));
        let avg = averaging_fuse(&a, &b, None).unwrap();
        prop_assert!(avg.uncertainty() >= ua.min(ub) * (1.0 - 1e-15));
        prop_assert!(avg.uncertainty() <= ua.max(ub) * (1.0 + 1e-15));
    }

    #[test]
    fn expectation_is_normalized_and_bounded(w in strategies::single()) {
        let p = w.expectation();
        prop_assert!((p.iter().sum::<f64>() - 1.0).abs() <= EPSILON);
        for i in 0..p.len() {
            prop_assert!(w.base_rate()[i] * w.uncertainty() <= p[i] + 1e-15);
            prop_assert!(p[i] <= w.belief()[i] + w.uncertainty() + 1e-15);
        }
    }
}

#[test]
fn averaging_is_not_associative() {
    let a = Opinion::binomial(0.8, 0.0, 0.2, 0.5).unwrap();
    let b = Opinion::binomial(0.0, 0.8, 0.2, 0.5).unwrap();
    let c = Opinion::binomial(0.0, 0.0, 1.0, 0.5).unwrap();
    let left = averaging_fuse(&averaging_fuse(&a, &b, None).unwrap(), &c, None).unwrap();
    let right = averaging_fuse(&a, &averaging_fuse(&b, &c, None).unwrap(), None).unwrap();
    assert!((left.uncertainty() - 1.0 / 3.0).abs() < 1e-15);
    assert!((right.uncertainty() - 0.25).abs() < 1e-15);
    assert!(distance(&left, &right) > 0.05);
}

#[test]
fn dogmatic_pairs_take_gamma_weighted_average() {
    let a = Opinion::binomial(0.9, 0.1, 0.0, 0.5).unwrap();
    let b = Opinion::binomial(0.2, 0.8, 0.0, 0.5).unwrap();
    for gamma in [0.0, 0.5, 1.0] {
        let w = DogmaticWeights::new(gamma).unwrap();
        for fused in [cumulative_fuse(&a, &b, Some(w)).unwrap(), averaging_fuse(&a, &b, Some(w)).unwrap()] {
            let expected = gamma * 0.9 + (1.0 - gamma) * 0.2;
            assert!((fused.belief()[0] - expected).abs() < 1e-15);
            assert_eq!(fused.uncertainty(), 0.0);
        }
    }
}
