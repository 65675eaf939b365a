use std::fmt;

use thiserror::Error;

/// The opinion constraint that failed during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// A belief mass lies outside `[0, 1]`.
    BeliefRange { index: usize },
    /// The uncertainty mass lies outside `[0, 1]`.
    UncertaintyRange,
    /// A base rate lies outside `[0, 1]`.
    BaseRateRange { index: usize },
    /// `u + sum(b) != 1`.
    Additivity,
    /// `sum(a) != 1`.
    BaseRateAdditivity,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::BeliefRange { index } => write!(f, "belief[{index}] outside [0, 1]"),
            Constraint::UncertaintyRange => write!(f, "uncertainty outside [0, 1]"),
            Constraint::BaseRateRange { index } => write!(f, "base_rate[{index}] outside [0, 1]"),
            Constraint::Additivity => write!(f, "uncertainty + sum(belief) must equal 1"),
            Constraint::BaseRateAdditivity => write!(f, "sum(base_rate) must equal 1"),
        }
    }
}

/// Why a fused opinion cannot be split by a given component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Violation {
    /// The fused opinion is too uncertain to contain the component.
    /// `excess` is the amount by which the ordering condition is broken.
    UncertaintyOrder { excess: f64 },
    /// The belief numerator for proposition `index` is negative by `deficit`.
    NegativeBelief { index: usize, deficit: f64 },
    /// A dogmatic (zero-uncertainty) split produced a belief outside `[0, 1]`.
    NegativeWeight { index: usize, value: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UncertaintyOrder { excess } => {
                write!(f, "uncertainty order violated (excess {excess:.3e})")
            }
            Violation::NegativeBelief { index, deficit } => {
                write!(f, "negative belief for proposition {index} (deficit {deficit:.3e})")
            }
            Violation::NegativeWeight { index, value } => {
                write!(f, "dogmatic split gives belief[{index}] = {value} outside [0, 1]")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("expected {expected} components, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("constraint violation: {constraint} (residual {residual:.3e})")]
    ConstraintViolation { constraint: Constraint, residual: f64 },

    #[error("dogmatic opinion (uncertainty 0) has no finite evidence representation")]
    DogmaticOpinion,

    #[error("operands are defined over different frames")]
    FrameMismatch,

    #[error("operands carry different base rates (index {index}, difference {difference:.3e})")]
    BaseRateConflict { index: usize, difference: f64 },

    #[error("evidence operands use different prior weights ({left} vs {right})")]
    PriorWeightMismatch { left: f64, right: f64 },

    #[error("prior weight must be finite and strictly positive, got {0}")]
    InvalidPriorWeight(f64),

    #[error("evidence[{index}] = {value} must be finite and non-negative")]
    InvalidEvidence { index: usize, value: f64 },

    #[error("weight {name} = {value} out of range")]
    InvalidWeight { name: &'static str, value: f64 },

    #[error("not decomposable: {0}")]
    NotDecomposable(Violation),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
