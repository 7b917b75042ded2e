//! Discrete power function on the Painlevé VI lattice.
//!
//! The crate realises one discrete dynamical object three independent ways
//! and cross-checks them:
//!
//! * an action of the extended affine Weyl group of type D4 on nine
//!   tau-variables ([`weyl_tau`]), from which lattice values arise as
//!   tau-quotients along translation directions ([`subgroup_a1`],
//!   [`power_lattice::weyl_grid`]);
//! * direct iteration of the cross-ratio / similarity system on the lattice
//!   ([`power_lattice::iterate`]);
//! * closed-form tau-quotients built from Gauss hypergeometric determinants
//!   ([`power_lattice::hyper`]).
//!
//! [`root_data`] holds the exact integer weight-lattice bookkeeping
//! (reflections, diagram automorphisms, orbit classification, translation
//! words); [`numerics`] supplies the complex special functions the closed
//! forms need.
//!
//! Everything is generic over the real scalar through the [`Real`] trait;
//! `f64`-specialised aliases are exported at the crate root.

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive};

pub mod error;
pub mod numerics;
pub mod power_lattice;
pub mod report;
pub mod root_data;
pub mod subgroup_a1;
pub mod weyl_tau;

pub use error::{Error, Result};
pub use report::{CheckRecord, Report};

/// Real scalar the complex arithmetic is built over.
///
/// Implemented by `f32` and `f64`; all tolerances are stated as `f64` and
/// converted, so narrower types degrade gracefully in accuracy, not in API.
pub trait Real: Float + FloatConst + FromPrimitive + std::fmt::Debug + 'static {}
impl<T: Float + FloatConst + FromPrimitive + std::fmt::Debug + 'static> Real for T {}

/// Exact rational parameter scalar used wherever group theory demands
/// exactness (simple-root coordinates, translation bookkeeping, exponents).
pub type Rat = Ratio<i64>;

/// Default floating scalar.
pub type Scalar = f64;
/// Default complex value.
pub type C64 = Complex<f64>;
/// Branch data for the default scalar.
pub type BranchContext64 = numerics::BranchContext<f64>;
/// Tau-variable state for the default scalar.
pub type TauState64 = weyl_tau::TauState<f64>;
/// Lattice-value quadruple for the default scalar.
pub type ZQuad64 = subgroup_a1::ZQuad<f64>;
/// Two-dimensional lattice sheet for the default scalar.
pub type Grid2_64 = power_lattice::Grid2<f64>;
/// Three-dimensional lattice block for the default scalar.
pub type Grid3_64 = power_lattice::Grid3<f64>;
/// Closed-form parameter bundle for the default scalar.
pub type HyperParams64 = power_lattice::HyperParams<f64>;

/// Centralised tolerances. Every inexact comparison in the crate routes
/// through one of these so the accepted error budget is visible in one place.
pub mod tol {
    /// Relative accuracy demanded of the complex gamma function.
    pub const GAMMA_REL: f64 = 1e-10;
    /// Relative accuracy demanded of Gauss hypergeometric evaluation.
    pub const HYP_REL: f64 = 1e-10;
    /// Distance to a non-positive integer that counts as a pole.
    pub const POLE_DETECT: f64 = 1e-10;
    /// |x| or |x-1| below this makes the lattice parameter degenerate.
    pub const DEGENERATE_X: f64 = 1e-12;
    /// Magnitude below which a tau-variable or map denominator is degenerate.
    pub const DEGENERATE: f64 = 1e-13;
    /// Smallest magnitude accepted for a derived tau-variable when sampling.
    pub const SAMPLE_MIN: f64 = 1e-3;
    /// Relative tolerance for tau-level group relations.
    pub const TAU_REL: f64 = 1e-9;
    /// Relative tolerance for lattice-value (z-level) identities.
    pub const Z_REL: f64 = 1e-8;
    /// Residual tolerance for lattice cross-ratio / similarity equations.
    pub const LATTICE_RESIDUAL: f64 = 1e-8;
    /// Relative tolerance for closed form vs iteration agreement.
    pub const CLOSED_FORM_REL: f64 = 1e-7;
    /// Absolute tolerance for the exactly known boundary cells.
    pub const CORNER_ABS: f64 = 1e-12;
    /// Absolute tolerance for the exact identity-map lattice.
    pub const IDENTITY_MAP_ABS: f64 = 1e-10;
    /// Relative tolerance for consistency-around-the-cube checks.
    pub const CAC_REL: f64 = 1e-9;
}

/// Converts a tolerance or literal into the working scalar.
pub(crate) fn cvt<S: Real>(v: f64) -> S {
    S::from_f64(v).expect("f64 literal must convert into the scalar type")
}

/// Converts an exact rational into the working scalar.
pub(crate) fn rat_to<S: Real>(r: Rat) -> S {
    cvt::<S>(*r.numer() as f64) / cvt::<S>(*r.denom() as f64)
}

/// Converts an exact rational into a complex value of the working scalar.
pub(crate) fn rat_to_c<S: Real>(r: Rat) -> Complex<S> {
    Complex::new(rat_to(r), S::zero())
}

/// Complex literal helper.
pub(crate) fn c64<S: Real>(re: f64, im: f64) -> Complex<S> {
    Complex::new(cvt(re), cvt(im))
}

/// Lossy conversion back to `f64` for reporting.
pub(crate) fn to_f64<S: Real>(v: S) -> f64 {
    num_traits::cast(v).unwrap_or(f64::NAN)
}

/// Relative deviation |a-b| / max(1, |a|, |b|) as `f64`, for reports.
pub(crate) fn rel_dev<S: Real>(a: Complex<S>, b: Complex<S>) -> f64 {
    let scale = to_f64((a - b).norm());
    let floor = to_f64(a.norm()).max(to_f64(b.norm())).max(1.0);
    scale / floor
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_conversions_round_trip() {
        let v: f64 = cvt::<f64>(0.25);
        assert_eq!(v, 0.25);
        let r: f64 = rat_to::<f64>(Rat::new(2, 3));
        assert!((r - 2.0 / 3.0).abs() < 1e-15);
        let z: C64 = c64(1.5, -0.5);
        assert_eq!(z, Complex::new(1.5, -0.5));
    }

    #[test]
    fn relative_deviation_uses_unit_floor() {
        let a: C64 = Complex::new(1e-12, 0.0);
        let b: C64 = Complex::new(0.0, 0.0);
        assert!(rel_dev(a, b) <= 1e-12);
    }
}
