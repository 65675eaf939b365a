//! Cumulative and averaging belief fission.
//!
//! Given a fused opinion `c` and one of its contributors `b`, fission
//! recovers the other contributor `a` such that fusing `a` with `b` gives
//! back `c`. Not every pair `(c, b)` has such an `a`; the checks below
//! reject pairs whose result would leave the opinion simplex, and report
//! the first condition that fails.
//!
//! Violations no larger than [`EPSILON`] are treated as rounding noise:
//! the offending component is clamped and the result rescaled to exact
//! additivity. A result whose uncertainty would reach or exceed one is the
//! vacuous opinion.

use crate::error::{Error, Result, Violation};
use crate::opinion::{Opinion, EPSILON};
use crate::owner;

/// Weights for splitting two dogmatic opinions.
///
/// The result is `gamma_b * b_c - gamma_c * b_b` with `gamma_b = 1 + gamma_c`,
/// which is the only choice that keeps the result additive.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FissionWeights {
    gamma_c: f64,
}

impl FissionWeights {
    pub fn new(gamma_c: f64) -> Result<Self> {
        if gamma_c.is_finite() && gamma_c >= 0.0 {
            Ok(Self { gamma_c })
        } else {
            Err(Error::InvalidWeight {
                name: "gamma_c",
                value: gamma_c,
            })
        }
    }

    pub fn gamma_c(self) -> f64 {
        self.gamma_c
    }

    pub fn gamma_b(self) -> f64 {
        1.0 + self.gamma_c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FissionMode {
    Cumulative,
    Averaging,
}

/// Outcome of [`is_decomposable`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Decomposition {
    Decomposable,
    NotDecomposable(Violation),
}

impl Decomposition {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, Decomposition::Decomposable)
    }

    pub fn violation(&self) -> Option<Violation> {
        match self {
            Decomposition::Decomposable => None,
            Decomposition::NotDecomposable(v) => Some(*v),
        }
    }
}

/// What the checks decided, before any result is assembled.
enum Plan {
    Vacuous,
    Scaled {
        /// Per-proposition numerators, already clamped at zero.
        numerators: Vec<f64>,
        clamped: bool,
    },
    Dogmatic {
        belief: Vec<f64>,
    },
}

fn first_negative(numerators: &[f64]) -> Option<Violation> {
    numerators
        .iter()
        .position(|&n| n < -EPSILON)
        .map(|index| Violation::NegativeBelief {
            index,
            deficit: -numerators[index],
        })
}

fn clamp_negatives(numerators: Vec<f64>) -> (Vec<f64>, bool) {
    let clamped = numerators.iter().any(|&n| n < 0.0);
    (numerators.into_iter().map(|n| n.max(0.0)).collect(), clamped)
}

fn plan_dogmatic(c: &Opinion, b: &Opinion, weights: FissionWeights) -> Result<Plan, Violation> {
    let (gb, gc) = (weights.gamma_b(), weights.gamma_c());
    let mut belief = Vec::with_capacity(c.dimension());
    for (index, (x, y)) in c.belief().iter().zip(b.belief()).enumerate() {
        let value = gb * x - gc * y;
        if !(-EPSILON..=1.0 + EPSILON).contains(&value) {
            return Err(Violation::NegativeWeight { index, value });
        }
        belief.push(value.clamp(0.0, 1.0));
    }
    Ok(Plan::Dogmatic { belief })
}

fn plan(c: &Opinion, b: &Opinion, mode: FissionMode, weights: FissionWeights) -> Result<Result<Plan, Violation>> {
    c.check_compatible(b)?;
    let (uc, ub) = (c.uncertainty(), b.uncertainty());
    if uc < EPSILON && ub < EPSILON {
        return Ok(plan_dogmatic(c, b, weights));
    }
    let (excess, numerators): (f64, Vec<f64>) = match mode {
        FissionMode::Cumulative => (
            uc - ub,
            c.belief().iter().zip(b.belief()).map(|(x, y)| x * ub - y * uc).collect(),
        ),
        FissionMode::Averaging => (
            uc * (1.0 + ub) - 2.0 * ub,
            c.belief()
                .iter()
                .zip(b.belief())
                .map(|(x, y)| 2.0 * x * ub - y * uc)
                .collect(),
        ),
    };
    if excess > EPSILON {
        return Ok(Err(Violation::UncertaintyOrder { excess }));
    }
    if let Some(v) = first_negative(&numerators) {
        return Ok(Err(v));
    }
    if excess >= 0.0 {
        return Ok(Ok(Plan::Vacuous));
    }
    let (numerators, clamped) = clamp_negatives(numerators);
    Ok(Ok(Plan::Scaled { numerators, clamped }))
}

fn rescale(belief: &mut [f64], uncertainty: &mut f64) {
    let total = *uncertainty + belief.iter().sum::<f64>();
    if total > 0.0 {
        belief.iter_mut().for_each(|x| *x /= total);
        *uncertainty /= total;
    }
}

fn assemble(c: &Opinion, b: &Opinion, mode: FissionMode, plan: Plan) -> Result<Opinion> {
    let k = c.dimension();
    let (belief, uncertainty) = match plan {
        Plan::Vacuous => (vec![0.0; k], 1.0),
        Plan::Dogmatic { mut belief } => {
            let total: f64 = belief.iter().sum();
            if total > 0.0 && total != 1.0 {
                belief.iter_mut().for_each(|x| *x /= total);
            }
            (belief, 0.0)
        }
        Plan::Scaled { numerators, clamped } => {
            let (uc, ub) = (c.uncertainty(), b.uncertainty());
            let (mut belief, mut uncertainty): (Vec<f64>, f64) = match mode {
                FissionMode::Cumulative => {
                    let denom = ub - uc + ub * uc;
                    (numerators.iter().map(|n| n / denom).collect(), ub * uc / denom)
                }
                // Written as a correction to `c` so that `c ⊖̲ c` returns `c`
                // bit for bit.
                FissionMode::Averaging => {
                    let denom = 2.0 * ub - uc;
                    let ratio = uc / denom;
                    let belief = if clamped {
                        numerators.iter().map(|n| n / denom).collect()
                    } else {
                        c.belief()
                            .iter()
                            .zip(b.belief())
                            .map(|(x, y)| x + (x - y) * ratio)
                            .collect()
                    };
                    (belief, uc + (uc - ub) * ratio)
                }
            };
            if clamped {
                rescale(&mut belief, &mut uncertainty);
            }
            (belief, uncertainty)
        }
    };
    Opinion::derived(c.frame().clone(), belief, uncertainty, c.base_rate().to_vec())
}

fn fission(c: &Opinion, b: &Opinion, mode: FissionMode, weights: Option<FissionWeights>) -> Result<Opinion> {
    let plan = plan(c, b, mode, weights.unwrap_or_default())?.map_err(Error::NotDecomposable)?;
    let symbol = match mode {
        FissionMode::Cumulative => owner::CUMULATIVE_FISSION,
        FissionMode::Averaging => owner::AVERAGING_FISSION,
    };
    assemble(c, b, mode, plan).map(|op| op.set_owner(owner::compose(c, b, symbol)))
}

/// Cumulative fission `c ⊖ b`: the opinion `a` with `a ⊕ b = c`.
///
/// ```text
/// b_a[i] = (b_c[i] u_b - b_b[i] u_c) / (u_b - u_c + u_b u_c)
/// u_a    =  u_b u_c                  / (u_b - u_c + u_b u_c)
/// ```
///
/// Requires `u_c <= u_b` and `b_c[i] u_b >= b_b[i] u_c` for every `i`.
pub fn cumulative_fission(c: &Opinion, b: &Opinion, weights: Option<FissionWeights>) -> Result<Opinion> {
    fission(c, b, FissionMode::Cumulative, weights)
}

/// Averaging fission `c ⊖̲ b`: the opinion `a` with `a ⊕̲ b = c`.
///
/// ```text
/// b_a[i] = (2 b_c[i] u_b - b_b[i] u_c) / (2 u_b - u_c)
/// u_a    =  u_b u_c                    / (2 u_b - u_c)
/// ```
///
/// Requires `u_c (1 + u_b) <= 2 u_b` and `2 b_c[i] u_b >= b_b[i] u_c`.
pub fn averaging_fission(c: &Opinion, b: &Opinion, weights: Option<FissionWeights>) -> Result<Opinion> {
    fission(c, b, FissionMode::Averaging, weights)
}

/// Reports whether the corresponding fission of `c` by `b` would succeed,
/// naming the first violated condition otherwise. Frame and base-rate
/// mismatches are errors rather than verdicts.
pub fn is_decomposable(
    c: &Opinion,
    b: &Opinion,
    mode: FissionMode,
    weights: Option<FissionWeights>,
) -> Result<Decomposition> {
    Ok(match plan(c, b, mode, weights.unwrap_or_default())? {
        Ok(_) => Decomposition::Decomposable,
        Err(v) => Decomposition::NotDecomposable(v),
    })
}
