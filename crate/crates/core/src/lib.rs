//! Multinomial subjective-logic opinions and the algebra around them:
//! cumulative and averaging fusion, their inverses (fission), and an
//! evidence-space reference implementation of all four operators.
//!
//! ```
//! use opinion_algebra::{cumulative_fission, cumulative_fuse, Opinion};
//!
//! let fused = Opinion::binomial(0.90, 0.05, 0.05, 0.5)?;
//! let known = Opinion::binomial(0.70, 0.10, 0.20, 0.5)?;
//! let other = cumulative_fission(&fused, &known, None)?;
//! assert!((other.uncertainty() - 0.0625).abs() < 1e-12);
//!
//! let back = cumulative_fuse(&other, &known, None)?;
//! assert!((back.belief()[0] - 0.90).abs() < 1e-12);
//! # Ok::<(), opinion_algebra::Error>(())
//! ```

pub mod error;
pub mod fission;
pub mod fusion;
pub mod opinion;
pub mod oracle;
pub mod owner;

pub use error::{Constraint, Error, Result, Violation};
pub use fission::{
    averaging_fission, cumulative_fission, is_decomposable, Decomposition, FissionMode, FissionWeights,
};
pub use fusion::{averaging_fuse, cumulative_fuse, DogmaticWeights};
pub use opinion::{
    expectation, from_evidence, to_evidence, EvidenceOpinion, Frame, Opinion, DEFAULT_PRIOR_WEIGHT, EPSILON,
};
