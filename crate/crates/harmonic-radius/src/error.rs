//! Error types shared across the library.

use crate::expr::Cplx;
use thiserror::Error;

/// Everything that can go wrong while building or evaluating mappings,
/// solving for radii, or certifying disk regions.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A catalog constructor was given parameters outside its admissible range.
    #[error("invalid catalog parameter: {detail}")]
    InvalidCatalog { detail: String },

    /// Evaluation hit a denominator with modulus below the pole guard.
    #[error("evaluation too close to a pole at z = {z} (|denominator| = {denom_mag:.3e})")]
    PoleProximity { z: Cplx, denom_mag: f64 },

    /// Evaluation produced a non-finite component.
    #[error("evaluation produced a non-finite value at z = {z}")]
    NonFinite { z: Cplx },

    /// The analytic part fails the required normalization h(0) = 0, h'(0) = 1.
    #[error("analytic part is not normalized: {detail}")]
    Normalization { detail: String },

    /// The supplied dilatation exceeds unit modulus on the sampled disk.
    #[error("dilatation exceeds unit modulus: |w({z})| = {magnitude}")]
    DilatationBound { z: Cplx, magnitude: f64 },

    /// The analytic part's derivative vanished where a ratio was requested.
    #[error("derivative of the analytic part vanishes at z = {z}; ratio undefined")]
    DegenerateDerivative { z: Cplx },

    /// A numeric argument is outside its documented domain.
    #[error("invalid parameter: {detail}")]
    InvalidParameter { detail: String },

    /// An operation was invoked on inputs that violate its stated precondition.
    #[error("precondition violated: {detail}")]
    Precondition { detail: String },

    /// A vector image with no curves cannot be emitted.
    #[error("image contains no curves")]
    EmptyImage,

    /// A textual catalog or mapping spec could not be parsed.
    #[error("parse error: {detail}")]
    Parse { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
