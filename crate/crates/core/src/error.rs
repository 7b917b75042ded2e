//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the numeric and group-action layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma evaluated at (or numerically too close to) a non-positive integer.
    #[error("gamma pole: {re}+{im}i is within {tol:.1e} of a non-positive integer")]
    Pole { re: f64, im: f64, tol: f64 },

    /// A hypergeometric or determinant parameter combination diverges.
    #[error("hypergeometric parameter pole in {factor}")]
    ParameterPole { factor: &'static str },

    /// No implemented series/transformation converges for these arguments.
    #[error("hypergeometric evaluation did not converge: {context}")]
    NonConvergence { context: &'static str },

    /// Regularised determinant entries mix plain values with pole residues,
    /// so no common normalisation of the determinant exists.
    #[error("determinant entries mix regularisation orders")]
    MixedEntryOrders,

    /// Lattice parameter x too close to the excluded points 0 and 1.
    #[error("degenerate lattice parameter x = {re}+{im}i (must stay away from 0 and 1)")]
    DegenerateX { re: f64, im: f64 },

    /// A lattice input was NaN or infinite.
    #[error("non-finite numeric input")]
    NonFiniteInput,

    /// A birational map or quotient hit a vanishing denominator.
    #[error("degenerate denominator in {place} (magnitude {magnitude:.3e})")]
    DegenerateDenominator { place: String, magnitude: f64 },

    /// Random state generation kept producing degenerate configurations.
    #[error("resampling exhausted after {attempts} attempts")]
    ResampleExhausted { attempts: u32 },

    /// A weight could not be certified inside the base orbit.
    #[error("weight not certified in the base orbit within search depth {depth}")]
    NotInOrbit { depth: usize },

    /// Parameter vector violates the affine normalisation a0+a1+2a2+a3+a4 = 1.
    #[error("parameter normalisation violated: a0+a1+2a2+a3+a4 = {sum}")]
    ParameterNormalization { sum: String },
}

pub type Result<T> = std::result::Result<T, Error>;
