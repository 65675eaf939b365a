#![allow(dead_code)]

use opinion_algebra::{Frame, Opinion};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const FRAME_SIZES: [usize; 3] = [2, 3, 5];
pub const MIN_UNCERTAINTY: f64 = 1e-6;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point on the probability simplex of dimension `k`.
pub fn simplex<R: Rng>(rng: &mut R, k: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..k).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = w.iter().sum();
    w.into_iter().map(|x| x / total).collect()
}

/// Uncertainty in `[MIN_UNCERTAINTY, 1]`: half log-uniform, half uniform.
pub fn uncertainty<R: Rng>(rng: &mut R) -> f64 {
    if rng.random_bool(0.5) {
        let lo = MIN_UNCERTAINTY.ln();
        (lo + rng.random::<f64>() * -lo).exp()
    } else {
        MIN_UNCERTAINTY + rng.random::<f64>() * (1.0 - MIN_UNCERTAINTY)
    }
}

pub fn opinion<R: Rng>(rng: &mut R, frame: &Frame, base_rate: &[f64]) -> Opinion {
    let u = uncertainty(rng);
    let mut belief: Vec<f64> = simplex(rng, frame.len()).into_iter().map(|x| x * (1.0 - u)).collect();
    // Occasionally put all belief on the boundary of the simplex.
    if rng.random_bool(0.1) {
        let zero = rng.random_range(0..frame.len());
        let moved = belief[zero];
        belief[zero] = 0.0;
        belief[(zero + 1) % frame.len()] += moved;
    }
    Opinion::new(frame.clone(), belief, u, base_rate.to_vec()).expect("generator produced invalid opinion")
}

/// A frame, a shared base rate and two opinions over it.
pub fn pair<R: Rng>(rng: &mut R, k: usize) -> (Opinion, Opinion) {
    let frame = Frame::indexed(k).unwrap();
    let a = simplex(rng, k);
    (opinion(rng, &frame, &a), opinion(rng, &frame, &a))
}

pub fn triple<R: Rng>(rng: &mut R, k: usize) -> (Opinion, Opinion, Opinion) {
    let frame = Frame::indexed(k).unwrap();
    let a = simplex(rng, k);
    (opinion(rng, &frame, &a), opinion(rng, &frame, &a), opinion(rng, &frame, &a))
}

/// Largest componentwise difference over beliefs and uncertainty.
pub fn distance(x: &Opinion, y: &Opinion) -> f64 {
    x.belief()
        .iter()
        .zip(y.belief())
        .map(|(a, b)| (a - b).abs())
        .fold((x.uncertainty() - y.uncertainty()).abs(), f64::max)
}

pub mod strategies {
    use super::MIN_UNCERTAINTY;
    use opinion_algebra::{Frame, Opinion};
    use proptest::prelude::*;

    fn normalize(w: Vec<f64>) -> Vec<f64> {
        let total: f64 = w.iter().sum();
        w.into_iter().map(|x| x / total).collect()
    }

    fn weights(k: usize) -> impl Strategy<Value = Vec<f64>> {
        proptest::collection::vec(1e-3..1.0f64, k)
    }

    fn opinion_with(frame: Frame, base_rate: Vec<f64>, min_u: f64) -> impl Strategy<Value = Opinion> {
        (weights(frame.len()), min_u..=1.0f64).prop_map(move |(w, u)| {
            let belief = normalize(w).into_iter().map(|x| x * (1.0 - u)).collect();
            Opinion::new(frame.clone(), belief, u, base_rate.clone()).unwrap()
        })
    }

    fn context() -> impl Strategy<Value = (Frame, Vec<f64>)> {
        prop_oneof![Just(2usize), Just(3), Just(5)]
            .prop_flat_map(|k| weights(k).prop_map(move |w| (Frame::indexed(k).unwrap(), normalize(w))))
    }

    /// Two non-dogmatic opinions over a shared frame and base rate.
    pub fn pair() -> impl Strategy<Value = (Opinion, Opinion)> {
        pair_with(MIN_UNCERTAINTY)
    }

    pub fn pair_with(min_u: f64) -> impl Strategy<Value = (Opinion, Opinion)> {
        context().prop_flat_map(move |(f, a)| {
            (opinion_with(f.clone(), a.clone(), min_u), opinion_with(f, a, min_u))
        })
    }

    pub fn triple(min_u: f64) -> impl Strategy<Value = (Opinion, Opinion, Opinion)> {
        context().prop_flat_map(move |(f, a)| {
            (
                opinion_with(f.clone(), a.clone(), min_u),
                opinion_with(f.clone(), a.clone(), min_u),
                opinion_with(f, a, min_u),
            )
        })
    }

    pub fn single() -> impl Strategy<Value = Opinion> {
        context().prop_flat_map(|(f, a)| opinion_with(f, a, 0.0))
    }
}
