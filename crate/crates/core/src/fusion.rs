//! Cumulative and averaging belief fusion.
//!
//! Cumulative fusion combines opinions built from independent evidence,
//! averaging fusion combines opinions built from the same evidence. When
//! both operands are dogmatic the formulas degenerate to `0/0`, and the
//! result becomes a weighted average whose weight [`DogmaticWeights`] must
//! come from the caller.

use crate::error::{Error, Result};
use crate::opinion::{Opinion, EPSILON};
use crate::owner;

/// Relative weight `gamma` of the first operand when fusing two dogmatic
/// opinions. The second operand gets `1 - gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DogmaticWeights {
    gamma: f64,
}

impl DogmaticWeights {
    pub fn new(gamma: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&gamma) {
            Ok(Self { gamma })
        } else {
            Err(Error::InvalidWeight {
                name: "gamma",
                value: gamma,
            })
        }
    }

    pub fn gamma(self) -> f64 {
        self.gamma
    }

    /// The weights seen from the other operand.
    pub fn swapped(self) -> Self {
        Self {
            gamma: 1.0 - self.gamma,
        }
    }
}

impl Default for DogmaticWeights {
    fn default() -> Self {
        Self { gamma: 0.5 }
    }
}

/// `gamma * b_a + (1 - gamma) * b_b` with zero uncertainty, rescaled so the
/// beliefs sum to exactly one.
fn dogmatic_average(a: &Opinion, b: &Opinion, weights: DogmaticWeights) -> Vec<f64> {
    let g = weights.gamma();
    let mut belief: Vec<f64> = a
        .belief()
        .iter()
        .zip(b.belief())
        .map(|(x, y)| g * x + (1.0 - g) * y)
        .collect();
    let total: f64 = belief.iter().sum();
    if total > 0.0 && total != 1.0 {
        belief.iter_mut().for_each(|x| *x /= total);
    }
    belief
}

fn both_dogmatic(a: &Opinion, b: &Opinion) -> bool {
    a.uncertainty() < EPSILON && b.uncertainty() < EPSILON
}

/// Cumulative fusion `a ⊕ b`.
///
/// ```text
/// b[i] = (b_a[i] u_b + b_b[i] u_a) / (u_a + u_b - u_a u_b)
/// u    =  u_a u_b                  / (u_a + u_b - u_a u_b)
/// ```
pub fn cumulative_fuse(a: &Opinion, b: &Opinion, weights: Option<DogmaticWeights>) -> Result<Opinion> {
    a.check_compatible(b)?;
    let (ua, ub) = (a.uncertainty(), b.uncertainty());
    let (belief, uncertainty) = if both_dogmatic(a, b) {
        (dogmatic_average(a, b, weights.unwrap_or_default()), 0.0)
    } else {
        let denom = ua + ub - ua * ub;
        let belief = a
            .belief()
            .iter()
            .zip(b.belief())
            .map(|(x, y)| (x * ub + y * ua) / denom)
            .collect();
        (belief, ua * ub / denom)
    };
    Opinion::derived(a.frame().clone(), belief, uncertainty, a.base_rate().to_vec())
        .map(|op| op.set_owner(owner::compose(a, b, owner::CUMULATIVE_FUSION)))
}

/// Averaging fusion `a ⊕̲ b`.
///
/// ```text
/// b[i] = (b_a[i] u_b + b_b[i] u_a) / (u_a + u_b)
/// u    = 2 u_a u_b                 / (u_a + u_b)
/// ```
pub fn averaging_fuse(a: &Opinion, b: &Opinion, weights: Option<DogmaticWeights>) -> Result<Opinion> {
    a.check_compatible(b)?;
    let (ua, ub) = (a.uncertainty(), b.uncertainty());
    let (belief, uncertainty) = if both_dogmatic(a, b) {
        (dogmatic_average(a, b, weights.unwrap_or_default()), 0.0)
    } else {
        let denom = ua + ub;
        let belief = a
            .belief()
            .iter()
            .zip(b.belief())
            .map(|(x, y)| (x * ub + y * ua) / denom)
            .collect();
        (belief, 2.0 * ua * ub / denom)
    };
    Opinion::derived(a.frame().clone(), belief, uncertainty, a.base_rate().to_vec())
        .map(|op| op.set_owner(owner::compose(a, b, owner::AVERAGING_FUSION)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opinion::Frame;

    fn bin(b: f64, d: f64, u: f64) -> Opinion {
        Opinion::binomial(b, d, u, 0.5).unwrap()
    }

    fn close(op: &Opinion, belief: &[f64], u: f64, tol: f64) -> bool {
        op.belief().iter().zip(belief).all(|(x, y)| (x - y).abs() <= tol)
            && (op.uncertainty() - u).abs() <= tol
    }

    #[test]
    fn vacuous_is_cumulative_identity() {
        let w = bin(0.3, 0.5, 0.2);
        let v = bin(0.0, 0.0, 1.0);
        let r = cumulative_fuse(&w, &v, None).unwrap();
        assert!(close(&r, w.belief(), w.uncertainty(), 1e-15));
    }

    #[test]
    fn cumulative_opposing_evidence() {
        let r = cumulative_fuse(&bin(0.8, 0.0, 0.2), &bin(0.0, 0.8, 0.2), None).unwrap();
        assert!(close(&r, &[4.0 / 9.0, 4.0 / 9.0], 1.0 / 9.0, 1e-15));
    }

    #[test]
    fn cumulative_reproduces_fused_example() {
        let a = bin(0.90625, 0.03125, 0.0625);
        let b = bin(0.70, 0.10, 0.20);
        let r = cumulative_fuse(&a, &b, None).unwrap();
        assert!(close(&r, &[0.90, 0.05], 0.05, 1e-15), "{r:?}");
    }

    #[test]
    fn dogmatic_cumulative_uses_gamma() {
        let t = bin(1.0, 0.0, 0.0);
        let f = bin(0.0, 1.0, 0.0);
        let r = cumulative_fuse(&t, &f, Some(DogmaticWeights::new(0.5).unwrap())).unwrap();
        assert_eq!(r.belief(), &[0.5, 0.5]);
        assert_eq!(r.uncertainty(), 0.0);
        let r = cumulative_fuse(&t, &f, Some(DogmaticWeights::new(1.0).unwrap())).unwrap();
        assert_eq!(r.belief(), &[1.0, 0.0]);
    }

    #[test]
    fn averaging_examples() {
        let w = bin(0.3, 0.5, 0.2);
        assert_eq!(averaging_fuse(&w, &w, None).unwrap().belief(), w.belief());
        let r = averaging_fuse(&bin(0.8, 0.0, 0.2), &bin(0.0, 0.8, 0.2), None).unwrap();
        assert!(close(&r, &[0.4, 0.4], 0.2, 1e-15));
        let v = bin(0.0, 0.0, 1.0);
        let r = averaging_fuse(&v, &v, None).unwrap();
        assert!(close(&r, &[0.0, 0.0], 1.0, 0.0));
    }

    #[test]
    fn single_dogmatic_operand_dominates() {
        let d = bin(0.7, 0.3, 0.0);
        let r = cumulative_fuse(&d, &bin(0.1, 0.1, 0.8), None).unwrap();
        assert!(close(&r, &[0.7, 0.3], 0.0, 1e-15));
    }

    #[test]
    fn incompatible_operands() {
        let a = bin(0.3, 0.5, 0.2);
        let f3 = Frame::indexed(3).unwrap();
        let c = Opinion::vacuous(f3, vec![0.2, 0.3, 0.5]).unwrap();
        assert_eq!(cumulative_fuse(&a, &c, None).unwrap_err(), Error::FrameMismatch);
        let skew = Opinion::binomial(0.3, 0.5, 0.2, 0.7).unwrap();
        assert!(matches!(
            averaging_fuse(&a, &skew, None),
            Err(Error::BaseRateConflict { index: 0, .. })
        ));
    }

    #[test]
    fn weight_range() {
        assert!(DogmaticWeights::new(-0.1).is_err());
        assert!(DogmaticWeights::new(1.1).is_err());
        assert_eq!(DogmaticWeights::new(0.25).unwrap().swapped().gamma(), 0.75);
    }

    #[test]
    fn owner_labels_compose() {
        let a = bin(0.3, 0.5, 0.2).with_owner("A");
        let b = bin(0.1, 0.5, 0.4).with_owner("B");
        let ab = cumulative_fuse(&a, &b, None).unwrap();
        assert_eq!(ab.owner(), Some("A◇B"));
        let abb = cumulative_fuse(&ab, &b, None).unwrap();
        assert_eq!(abb.owner(), Some("(A◇B)◇B"));
        assert_eq!(cumulative_fuse(&bin(0.1, 0.1, 0.8), &bin(0.1, 0.1, 0.8), None).unwrap().owner(), None);
    }
}
