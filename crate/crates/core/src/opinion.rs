//! Opinion types, constraint validation and the mapping to Dirichlet
//! evidence space.
//!
//! A multinomial opinion over a frame of `k` propositions is a triple
//! `(b, u, a)`: belief masses `b`, uncertainty mass `u` and base rates `a`,
//! with every component in `[0, 1]`, `u + sum(b) = 1` and `sum(a) = 1`.
//! Binomial opinions are the `k = 2` case with `b = (belief, disbelief)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Constraint, Error, Result};

/// Absolute tolerance on the additivity constraints and on all
/// decomposability checks.
pub const EPSILON: f64 = 1e-9;

/// Non-informative prior weight used when mapping to evidence space.
pub const DEFAULT_PRIOR_WEIGHT: f64 = 2.0;

/// An ordered set of mutually exclusive, exhaustive proposition labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() < 2 {
            return Err(Error::InvalidFrame(format!(
                "a frame needs at least 2 propositions, got {}",
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidFrame(format!("label {i} is empty")));
            }
            if labels[..i].contains(label) {
                return Err(Error::InvalidFrame(format!("duplicate label {label:?}")));
            }
        }
        Ok(Self {
            labels: labels.into(),
        })
    }

    /// The frame `{x, not_x}` used for binomial opinions.
    pub fn binary() -> Self {
        Self {
            labels: vec!["x".to_owned(), "not_x".to_owned()].into(),
        }
    }

    /// Frame `{x1, ..., xk}`.
    pub fn indexed(k: usize) -> Result<Self> {
        Self::new((1..=k).map(|i| format!("x{i}")))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(", "))
    }
}

/// A multinomial subjective opinion `(b, u, a)` over a [`Frame`].
///
/// Constructed values always satisfy the range and additivity constraints
/// within [`EPSILON`]. Inputs are stored as given; nothing is renormalized.
#[derive(Debug, Clone, PartialEq)]
pub struct Opinion {
    frame: Frame,
    belief: Vec<f64>,
    uncertainty: f64,
    base_rate: Vec<f64>,
    owner: Option<String>,
}

impl Opinion {
    /// Validates the raw components and builds an opinion.
    pub fn new(frame: Frame, belief: Vec<f64>, uncertainty: f64, base_rate: Vec<f64>) -> Result<Self> {
        validate_components(frame.len(), &belief, uncertainty, &base_rate)?;
        Ok(Self {
            frame,
            belief,
            uncertainty,
            base_rate,
            owner: None,
        })
    }

    /// Binomial opinion `(b, d, u, a)` over [`Frame::binary`].
    pub fn binomial(belief: f64, disbelief: f64, uncertainty: f64, base_rate: f64) -> Result<Self> {
        Self::new(
            Frame::binary(),
            vec![belief, disbelief],
            uncertainty,
            vec![base_rate, 1.0 - base_rate],
        )
    }

    /// The totally uncertain opinion `(0, 1, a)`.
    pub fn vacuous(frame: Frame, base_rate: Vec<f64>) -> Result<Self> {
        let k = frame.len();
        Self::new(frame, vec![0.0; k], 1.0, base_rate)
    }

    pub fn with_owner(mut self, owner: impl Into<String>) -> Self {
        self.owner = Some(owner.into());
        self
    }

    pub(crate) fn set_owner(mut self, owner: Option<String>) -> Self {
        self.owner = owner;
        self
    }

    /// Builds an operator result. Components within [`EPSILON`] outside
    /// `[0, 1]` are clamped before validation to absorb rounding.
    pub(crate) fn derived(
        frame: Frame,
        mut belief: Vec<f64>,
        uncertainty: f64,
        base_rate: Vec<f64>,
    ) -> Result<Self> {
        let clamp = |x: f64| {
            if (-EPSILON..0.0).contains(&x) {
                0.0
            } else if x > 1.0 && x <= 1.0 + EPSILON {
                1.0
            } else {
                x
            }
        };
        belief.iter_mut().for_each(|b| *b = clamp(*b));
        Self::new(frame, belief, clamp(uncertainty), base_rate)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn belief(&self) -> &[f64] {
        &self.belief
    }

    pub fn uncertainty(&self) -> f64 {
        self.uncertainty
    }

    pub fn base_rate(&self) -> &[f64] {
        &self.base_rate
    }

    pub fn owner(&self) -> Option<&str> {
        self.owner.as_deref()
    }

    /// Number of propositions in the frame.
    pub fn dimension(&self) -> usize {
        self.belief.len()
    }

    /// Disbelief of a binomial opinion, i.e. `belief[1]`.
    pub fn disbelief(&self) -> Option<f64> {
        (self.dimension() == 2).then(|| self.belief[1])
    }

    pub fn is_dogmatic(&self) -> bool {
        self.uncertainty < EPSILON
    }

    pub fn is_vacuous(&self) -> bool {
        (1.0 - self.uncertainty) < EPSILON
    }

    /// Probability expectation `p[i] = b[i] + a[i] * u`.
    pub fn expectation(&self) -> Vec<f64> {
        self.belief
            .iter()
            .zip(&self.base_rate)
            .map(|(b, a)| b + a * self.uncertainty)
            .collect()
    }

    /// Maps the opinion to Dirichlet evidence: `r[i] = W * b[i] / u`.
    pub fn to_evidence(&self, prior_weight: f64) -> Result<EvidenceOpinion> {
        check_prior_weight(prior_weight)?;
        if self.uncertainty == 0.0 {
            return Err(Error::DogmaticOpinion);
        }
        let evidence = self
            .belief
            .iter()
            .map(|b| prior_weight * b / self.uncertainty)
            .collect();
        Ok(EvidenceOpinion {
            frame: self.frame.clone(),
            evidence,
            base_rate: self.base_rate.clone(),
            prior_weight,
        })
    }

    /// Checks that `other` is defined over the same frame with the same base
    /// rates (within [`EPSILON`]).
    pub fn check_compatible(&self, other: &Opinion) -> Result<()> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch);
        }
        check_base_rates(&self.base_rate, &other.base_rate)
    }
}

pub(crate) fn check_base_rates(left: &[f64], right: &[f64]) -> Result<()> {
    for (index, (l, r)) in left.iter().zip(right).enumerate() {
        let difference = (l - r).abs();
        if difference > EPSILON {
            return Err(Error::BaseRateConflict { index, difference });
        }
    }
    Ok(())
}

fn check_prior_weight(w: f64) -> Result<()> {
    if w.is_finite() && w > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidPriorWeight(w))
    }
}

fn violation(constraint: Constraint, residual: f64) -> Error {
    Error::ConstraintViolation {
        constraint,
        residual,
    }
}

/// Distance of `x` from the unit interval; NaN counts as infinitely far.
fn range_residual(x: f64) -> Option<f64> {
    if x.is_nan() {
        Some(f64::INFINITY)
    } else if x < 0.0 {
        Some(-x)
    } else if x > 1.0 {
        Some(x - 1.0)
    } else {
        None
    }
}

fn validate_base_rate(k: usize, base_rate: &[f64]) -> Result<()> {
    if base_rate.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: base_rate.len(),
        });
    }
    for (index, a) in base_rate.iter().enumerate() {
        if let Some(r) = range_residual(*a) {
            return Err(violation(Constraint::BaseRateRange { index }, r));
        }
    }
    let residual = (base_rate.iter().sum::<f64>() - 1.0).abs();
    if residual > EPSILON {
        return Err(violation(Constraint::BaseRateAdditivity, residual));
    }
    Ok(())
}

fn validate_components(k: usize, belief: &[f64], uncertainty: f64, base_rate: &[f64]) -> Result<()> {
    if belief.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: belief.len(),
        });
    }
    for (index, b) in belief.iter().enumerate() {
        if let Some(r) = range_residual(*b) {
            return Err(violation(Constraint::BeliefRange { index }, r));
        }
    }
    if let Some(r) = range_residual(uncertainty) {
        return Err(violation(Constraint::UncertaintyRange, r));
    }
    let residual = (uncertainty + belief.iter().sum::<f64>() - 1.0).abs();
    if residual > EPSILON {
        return Err(violation(Constraint::Additivity, residual));
    }
    validate_base_rate(k, base_rate)
}

/// An opinion expressed as Dirichlet observation counts plus base rates and
/// a non-informative prior weight `W`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvidenceOpinion {
    frame: Frame,
    evidence: Vec<f64>,
    base_rate: Vec<f64>,
    prior_weight: f64,
}

impl EvidenceOpinion {
    pub fn new(frame: Frame, evidence: Vec<f64>, base_rate: Vec<f64>, prior_weight: f64) -> Result<Self> {
        check_prior_weight(prior_weight)?;
        if evidence.len() != frame.len() {
            return Err(Error::DimensionMismatch {
                expected: frame.len(),
                found: evidence.len(),
            });
        }
        for (index, &value) in evidence.iter().enumerate() {
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::InvalidEvidence { index, value });
            }
        }
        validate_base_rate(frame.len(), &base_rate)?;
        Ok(Self {
            frame,
            evidence,
            base_rate,
            prior_weight,
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn evidence(&self) -> &[f64] {
        &self.evidence
    }

    pub fn base_rate(&self) -> &[f64] {
        &self.base_rate
    }

    pub fn prior_weight(&self) -> f64 {
        self.prior_weight
    }

    pub fn total_evidence(&self) -> f64 {
        self.evidence.iter().sum()
    }

    /// Maps back to opinion space: `b[i] = r[i] / (W + sum(r))`,
    /// `u = W / (W + sum(r))`.
    pub fn to_opinion(&self) -> Opinion {
        let total = self.prior_weight + self.total_evidence();
        Opinion {
            frame: self.frame.clone(),
            belief: self.evidence.iter().map(|r| r / total).collect(),
            uncertainty: self.prior_weight / total,
            base_rate: self.base_rate.clone(),
            owner: None,
        }
    }
}

/// Free-function form of [`Opinion::to_evidence`].
pub fn to_evidence(opinion: &Opinion, prior_weight: f64) -> Result<EvidenceOpinion> {
    opinion.to_evidence(prior_weight)
}

/// Free-function form of [`EvidenceOpinion::to_opinion`].
pub fn from_evidence(evidence: &EvidenceOpinion) -> Opinion {
    evidence.to_opinion()
}

/// Free-function form of [`Opinion::expectation`].
pub fn expectation(opinion: &Opinion) -> Vec<f64> {
    opinion.expectation()
}
