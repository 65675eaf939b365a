//! Reference operators that work directly on Dirichlet evidence counts.
//!
//! Cumulative fusion adds evidence and averaging fusion takes its mean;
//! fission undoes either. None of this shares code with the opinion-space
//! operators in [`crate::fusion`] and [`crate::fission`]: the two are only
//! linked through [`Opinion::to_evidence`](crate::Opinion::to_evidence) and
//! [`EvidenceOpinion::to_opinion`], which is what makes them useful as
//! cross-checks of each other.

use crate::error::{Error, Result, Violation};
use crate::opinion::{check_base_rates, EvidenceOpinion, EPSILON};

fn check_operands(a: &EvidenceOpinion, b: &EvidenceOpinion) -> Result<()> {
    if a.frame() != b.frame() {
        return Err(Error::FrameMismatch);
    }
    let (wa, wb) = (a.prior_weight(), b.prior_weight());
    if (wa - wb).abs() > EPSILON * wa.max(wb) {
        return Err(Error::PriorWeightMismatch { left: wa, right: wb });
    }
    check_base_rates(a.base_rate(), b.base_rate())
}

fn combine(a: &EvidenceOpinion, evidence: Vec<f64>) -> Result<EvidenceOpinion> {
    EvidenceOpinion::new(a.frame().clone(), evidence, a.base_rate().to_vec(), a.prior_weight())
}

/// Removes evidence; components that go negative by no more than
/// `EPSILON * max(1, minuend)` are rounding and clamp to zero.
fn subtract(minuend: Vec<f64>, subtrahend: &[f64]) -> Result<Vec<f64>> {
    minuend
        .into_iter()
        .zip(subtrahend)
        .enumerate()
        .map(|(index, (m, s))| {
            let d = m - s;
            if d >= 0.0 {
                Ok(d)
            } else if -d <= EPSILON * m.max(1.0) {
                Ok(0.0)
            } else {
                Err(Error::NotDecomposable(Violation::NegativeBelief { index, deficit: -d }))
            }
        })
        .collect()
}

/// `r = r_a + r_b`
pub fn oracle_cumulative_fuse(a: &EvidenceOpinion, b: &EvidenceOpinion) -> Result<EvidenceOpinion> {
    check_operands(a, b)?;
    combine(a, a.evidence().iter().zip(b.evidence()).map(|(x, y)| x + y).collect())
}

/// `r = (r_a + r_b) / 2`
pub fn oracle_averaging_fuse(a: &EvidenceOpinion, b: &EvidenceOpinion) -> Result<EvidenceOpinion> {
    check_operands(a, b)?;
    combine(
        a,
        a.evidence().iter().zip(b.evidence()).map(|(x, y)| (x + y) / 2.0).collect(),
    )
}

/// `r_a = r_c - r_b`
pub fn oracle_cumulative_fission(c: &EvidenceOpinion, b: &EvidenceOpinion) -> Result<EvidenceOpinion> {
    check_operands(c, b)?;
    combine(c, subtract(c.evidence().to_vec(), b.evidence())?)
}

/// `r_a = 2 r_c - r_b`
pub fn oracle_averaging_fission(c: &EvidenceOpinion, b: &EvidenceOpinion) -> Result<EvidenceOpinion> {
    check_operands(c, b)?;
    combine(c, subtract(c.evidence().iter().map(|x| 2.0 * x).collect(), b.evidence())?)
}
