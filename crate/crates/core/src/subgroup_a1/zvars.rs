//! Similarity-lattice variables read off from tau-states: the basic
//! functional, shifted quadruples, and the identities tying neighbouring
//! lattice values together.

use super::words::{lattice_route, rho_word};
use crate::report::Report;
use crate::weyl_tau::{apply_word_tau, random_param_state, random_tau_state, TauState, TauVar};
use crate::{c64, rat_to_c, to_f64, tol, Error, Real, Result};
use num_complex::Complex;

use super::a1_params::A1Params;

/// The four lattice values on a unit square, reached by the unsigned shift
/// routes: base, one step in each planar direction, and both.
#[derive(Debug, Clone, Copy)]
pub struct ZQuad<S: Real> {
    pub z0: Complex<S>,
    pub z1: Complex<S>,
    pub z2: Complex<S>,
    pub z12: Complex<S>,
}

impl<S: Real> ZQuad<S> {
    pub fn as_array(&self) -> [Complex<S>; 4] {
        [self.z0, self.z1, self.z2, self.z12]
    }
}

/// The lattice variable attached to a tau-state: the first tau-value after
/// a double transverse shift, divided by its unshifted value.
pub fn z0_functional<S: Real>(st: &TauState<S>) -> Result<Complex<S>> {
    let t0 = st.get(TauVar::T0);
    if to_f64(t0.norm()) < tol::DEGENERATE {
        return Err(Error::DegenerateDenominator {
            place: "lattice functional: tau0".into(),
            magnitude: to_f64(t0.norm()),
        });
    }
    let shifted = apply_word_tau(&rho_word(0).pow(2), st)?;
    Ok(shifted.get(TauVar::T0) / t0)
}

/// The unsigned quadruple `(z0, rho1 z0, rho2 z0, rho1 rho2 z0)`.
pub fn z_quad_from_tau<S: Real>(st: &TauState<S>) -> Result<ZQuad<S>> {
    let s1 = apply_word_tau(&rho_word(1), st)?;
    let s2 = apply_word_tau(&rho_word(2), st)?;
    let s12 = apply_word_tau(&rho_word(2), &s1)?;
    Ok(ZQuad {
        z0: z0_functional(st)?,
        z1: z0_functional(&s1)?,
        z2: z0_functional(&s2)?,
        z12: z0_functional(&s12)?,
    })
}

/// The signed lattice value at site `(l1, l2)`: the shift-route functional
/// times `(-1)^(l1+l2)`.
pub fn z_lattice_value<S: Real>(st: &TauState<S>, l1: i64, l2: i64) -> Result<Complex<S>> {
    let shifted = apply_word_tau(&lattice_route(l1, l2), st)?;
    let value = z0_functional(&shifted)?;
    Ok(if (l1 + l2).rem_euclid(2) == 0 {
        value
    } else {
        -value
    })
}

/// Fourth quadruple value from the other three and the lattice parameter.
pub fn z12_from_three<S: Real>(
    z0: Complex<S>,
    z1: Complex<S>,
    z2: Complex<S>,
    x: Complex<S>,
) -> Result<Complex<S>> {
    let den = x * (z0 + z1) - (z2 + z0);
    if to_f64(den.norm()) < tol::DEGENERATE {
        return Err(Error::DegenerateDenominator {
            place: "square completion".into(),
            magnitude: to_f64(den.norm()),
        });
    }
    Ok(-(x * z2 * (z0 + z1) - z1 * (z2 + z0)) / den)
}

/// Residuals of the quadruple identities on one tau-state, all relative to
/// `max(1, |lhs|, |rhs|)`:
///
/// * the four edge sums of the quadruple against their closed forms in the
///   state's own tau-values,
/// * the square-completion formula for the fourth value,
/// * the inverse-similarity identity relating the base value to its four
///   planar neighbours.
pub fn quad_identity_residuals<S: Real>(st: &TauState<S>) -> Result<[f64; 6]> {
    let i = c64::<S>(0.0, 1.0);
    let ctx = st.ctx;
    let x = ctx.x;
    let quad = z_quad_from_tau(st)?;
    let a1 = A1Params::from_params(&st.params);
    let zeta0 = rat_to_c::<S>(a1.zeta0);

    let q = -i * ctx.sqrt_x * st.get(TauVar::T2Sigma2) / st.get(TauVar::T2);
    let big_r = st.get(TauVar::T1) * st.get(TauVar::T3) / (st.get(TauVar::T0) * st.get(TauVar::T4));
    let one = c64::<S>(1.0, 0.0);
    let pairs = [
        (quad.z0 + quad.z1, i * zeta0 * (q / ctx.sqrt_x) * big_r),
        (
            quad.z12 + quad.z2,
            i * zeta0 * (x - q) / (ctx.sqrt_x * (one - q)) * big_r,
        ),
        (
            quad.z1 + quad.z12,
            i * zeta0 * (x - q) * q / (ctx.sqrt_x * (one - q)) * big_r,
        ),
        (quad.z2 + quad.z0, i * zeta0 * ctx.sqrt_x * big_r),
    ];
    let rel = |l: Complex<S>, r: Complex<S>| {
        to_f64((l - r).norm()) / to_f64(l.norm().max(r.norm())).max(1.0)
    };
    let mut out = [0f64; 6];
    for (k, (l, r)) in pairs.into_iter().enumerate() {
        out[k] = rel(l, r);
    }

    out[4] = rel(quad.z12, z12_from_three(quad.z0, quad.z1, quad.z2, x)?);

    // Inverse-similarity: one inverse step in each planar direction.
    let back1 = z0_functional(&apply_word_tau(&rho_word(1).pow(-1), st)?)?;
    let back2 = z0_functional(&apply_word_tau(&rho_word(2).pow(-1), st)?)?;
    let beta1 = rat_to_c::<S>(a1.beta1);
    let gamma1 = rat_to_c::<S>(a1.gamma1);
    let lhs = zeta0 * quad.z0;
    let rhs = -beta1 * (quad.z1 + quad.z0) * (quad.z0 + back1) / (quad.z1 - back1)
        - gamma1 * (quad.z2 + quad.z0) * (quad.z0 + back2) / (quad.z2 - back2);
    out[5] = rel(lhs, rhs);
    Ok(out)
}

/// Checks the quadruple identities over random tau-states.
pub fn verify_quad_identities<S: Real>(
    samples: u32,
    seed: u64,
    x: Complex<S>,
    tolerance: f64,
) -> Result<Report> {
    const NAMES: [&str; 6] = [
        "edge sum base-1",
        "edge sum 12-2",
        "edge sum 1-12",
        "edge sum 2-base",
        "square completion",
        "inverse similarity",
    ];
    let mut worst = [0f64; 6];
    for sample in 0..samples {
        let params = random_param_state(seed ^ u64::from(sample).wrapping_mul(0x51ed_2701));
        let st = random_tau_state(seed.wrapping_add(u64::from(sample)), &params, x)?;
        for (w, r) in worst.iter_mut().zip(quad_identity_residuals(&st)?) {
            *w = w.max(r);
        }
    }
    let mut report = Report::new("lattice quadruple identities");
    for (name, w) in NAMES.iter().zip(worst) {
        report.push_numeric(*name, w, tolerance, samples as usize);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;

    fn sample(seed: u64, x: C64) -> TauState<f64> {
        random_tau_state(seed, &random_param_state(seed + 1), x).unwrap()
    }

    #[test]
    fn quad_identities_hold_at_three_lattice_parameters() {
        for (k, x) in [C64::new(2.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.5, 0.0)]
            .into_iter()
            .enumerate()
        {
            let report = verify_quad_identities(5, 40 + k as u64, x, 1e-9).unwrap();
            assert!(report.passed(), "x = {x}: {:?}", report.failures());
        }
    }

    #[test]
    fn signed_lattice_value_alternates_against_the_unsigned_route() {
        let st = sample(11, C64::new(2.0, 1.0));
        let quad = z_quad_from_tau(&st).unwrap();
        let z10 = z_lattice_value(&st, 1, 0).unwrap();
        let z11 = z_lattice_value(&st, 1, 1).unwrap();
        assert!((z10 + quad.z1).norm() < 1e-12 * quad.z1.norm());
        assert!((z11 - quad.z12).norm() < 1e-12 * quad.z12.norm());
    }

    #[test]
    fn square_completion_recovers_the_shifted_corner() {
        let st = sample(7, C64::new(0.4, -1.1));
        let quad = z_quad_from_tau(&st).unwrap();
        let rebuilt = z12_from_three(quad.z0, quad.z1, quad.z2, st.ctx.x).unwrap();
        assert!((rebuilt - quad.z12).norm() / quad.z12.norm() < 1e-11);
    }

    #[test]
    fn degenerate_base_tau_is_rejected() {
        let mut st = sample(3, C64::new(2.0, 1.0));
        st.tau[0] = C64::new(0.0, 0.0);
        assert!(matches!(
            z0_functional(&st),
            Err(Error::DegenerateDenominator { .. })
        ));
    }
}
