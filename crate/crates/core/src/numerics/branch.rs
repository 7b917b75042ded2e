//! Fixed branch choices for the multivalued ingredients.
//!
//! Every formula in the crate that mentions a root of `x` or `x - 1` draws it
//! from one shared [`BranchContext`], so all branch decisions are made once:
//! `u` and `v` are the principal fourth roots, and the square roots are their
//! squares — never recomputed through another `sqrt` call, which could land
//! on the opposite sheet.

use crate::{cvt, to_f64, tol, Error, Real, Result};
use num_complex::Complex;

/// Principal fourth roots of `x` and `x - 1` together with the derived
/// square roots. Immutable once built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchContext<S: Real> {
    /// The lattice parameter itself (away from 0 and 1).
    pub x: Complex<S>,
    /// Principal fourth root of `x`.
    pub u: Complex<S>,
    /// Principal fourth root of `x - 1`.
    pub v: Complex<S>,
    /// `u^2`, the coherent square root of `x`.
    pub sqrt_x: Complex<S>,
    /// `v^2`, the coherent square root of `x - 1`.
    pub sqrt_xm1: Complex<S>,
}

/// Builds the branch data, rejecting `x` within [`tol::DEGENERATE_X`] of the
/// excluded points 0 and 1.
pub fn make_branch_context<S: Real>(x: Complex<S>) -> Result<BranchContext<S>> {
    let one = Complex::new(S::one(), S::zero());
    let thresh = cvt::<S>(tol::DEGENERATE_X);
    if x.norm() < thresh || (x - one).norm() < thresh {
        return Err(Error::DegenerateX {
            re: to_f64(x.re),
            im: to_f64(x.im),
        });
    }
    let quarter = cvt::<S>(0.25);
    let u = x.powf(quarter);
    let v = (x - one).powf(quarter);
    Ok(BranchContext {
        x,
        u,
        v,
        sqrt_x: u * u,
        sqrt_xm1: v * v,
    })
}
