//! Closed-form lattice values built from determinants of Gauss
//! hypergeometric functions.
//!
//! The body of the quadrant is expressed through determinants whose entries
//! are two-branch combinations `Γ(a)Γ(b)/Γ(c)·F(a,b;c;x)` plus the
//! `x^(1-c)`-twisted companion solution. Whenever a numerator gamma factor
//! sits on a pole the combination is regularised: the entry is replaced by
//! the coefficient of `1/ε` under the joint deformation `(a,b) → (a+ε,b+ε)`,
//! which substitutes the residue `(-1)^k / k!` for the divergent gamma value.
//! Because the regularisation rescales numerator and denominator determinants
//! by the same power of `ε`, their quotient is the finite lattice value.

use super::exact;
use crate::numerics::{complex_gamma, det_complex, gauss_2f1, nonpos_int_index};
use crate::{c64, cvt, to_f64, tol, Error, Rat, Real, Result};
use num_complex::Complex;

/// Parameters selecting one solution of the lattice system on the quadrant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperParams<S: Real> {
    /// Exponent of the power function; must not be an integer.
    pub r: Rat,
    /// Value of the first axis seed `z(1,0)`.
    pub c0: Complex<S>,
    /// Coefficient of the second axis seed: `z(0,1) = c1 · x^r`.
    pub c1: Complex<S>,
    /// Lattice cross-ratio parameter; must stay away from 0 and 1.
    pub x: Complex<S>,
}

impl<S: Real> HyperParams<S> {
    /// Bundles the parameters after rejecting degenerate `x`.
    pub fn new(r: Rat, c0: Complex<S>, c1: Complex<S>, x: Complex<S>) -> Result<Self> {
        check_x(x)?;
        Ok(Self { r, c0, c1, x })
    }
}

pub(crate) fn check_x<S: Real>(x: Complex<S>) -> Result<()> {
    let one = Complex::new(S::one(), S::zero());
    let t = cvt::<S>(tol::DEGENERATE_X);
    if x.norm() < t || (x - one).norm() < t {
        return Err(Error::DegenerateX {
            re: to_f64(x.re),
            im: to_f64(x.im),
        });
    }
    Ok(())
}

/// Residue of the gamma function at the pole `-k`: `(-1)^k / k!`.
fn gamma_residue<S: Real>(k: u32) -> Complex<S> {
    let mut fact = S::one();
    for j in 1..=k {
        fact = fact * cvt::<S>(j as f64);
    }
    let sign = if k % 2 == 0 { S::one() } else { -S::one() };
    Complex::new(sign / fact, S::zero())
}

/// One gamma-weighted branch `coeff · scale · Γ(a)Γ(b)/Γ(c) · F(a,b;c;x)`,
/// regularised when `a` or `b` is a non-positive integer.
///
/// Returns `(order, value)` where order 0 is the plain branch value and
/// order 1 the `1/ε` coefficient under `(a,b) → (a+ε,b+ε)`. Both numerator
/// gammas on poles at once would be a double pole of the deformation and is
/// rejected.
fn branch_leading<S: Real>(
    a: Complex<S>,
    b: Complex<S>,
    c: Complex<S>,
    x: Complex<S>,
    coeff: Complex<S>,
    scale: Complex<S>,
    which: &'static str,
) -> Result<(u32, Complex<S>)> {
    let ka = nonpos_int_index(a, tol::POLE_DETECT);
    let kb = nonpos_int_index(b, tol::POLE_DETECT);
    if ka.is_some() && kb.is_some() {
        return Err(Error::ParameterPole { factor: which });
    }
    let f = gauss_2f1(a, b, c, x)?;
    let gc = complex_gamma(c)?;
    match (ka, kb) {
        (Some(_), Some(_)) => unreachable!("double pole rejected above"),
        (Some(k), None) => Ok((
            1,
            coeff * scale * gamma_residue(k) * complex_gamma(b)? / gc * f,
        )),
        (None, Some(k)) => Ok((
            1,
            coeff * scale * complex_gamma(a)? * gamma_residue(k) / gc * f,
        )),
        (None, None) => Ok((
            0,
            coeff * scale * complex_gamma(a)? * complex_gamma(b)? / gc * f,
        )),
    }
}

/// Leading part of the two-branch determinant entry
/// `c0·Γ(a)Γ(b)/Γ(c)·F(a,b;c;x) + c1·x^(1-c)·Γ(a')Γ(b')/Γ(c')·F(a',b';c';x)`
/// with `(a',b',c') = (a-c+1, b-c+1, 2-c)`.
///
/// Each branch is regularised independently; the result keeps only the
/// branches of maximal deformation order and reports that order.
pub fn phi_leading<S: Real>(
    a: Complex<S>,
    b: Complex<S>,
    c: Complex<S>,
    x: Complex<S>,
    c0: Complex<S>,
    c1: Complex<S>,
) -> Result<(u32, Complex<S>)> {
    let one = Complex::new(S::one(), S::zero());
    let two = Complex::new(S::one() + S::one(), S::zero());
    let first = branch_leading(
        a,
        b,
        c,
        x,
        c0,
        one,
        "both numerator gammas, principal branch",
    )?;
    let twist = x.powc(one - c);
    let second = branch_leading(
        a - c + one,
        b - c + one,
        two - c,
        x,
        c1,
        twist,
        "both numerator gammas, twisted branch",
    )?;
    let order = first.0.max(second.0);
    let mut value = Complex::new(S::zero(), S::zero());
    if first.0 == order {
        value = value + first.1;
    }
    if second.0 == order {
        value = value + second.1;
    }
    Ok((order, value))
}

/// Determinant of the `nu × nu` matrix with regularised entry
/// `phi_leading(a+i, b+j, c)` at row `i`, column `j`; the empty determinant
/// (`nu = 0`) is 1.
///
/// All entries must come out at the same deformation order, otherwise the
/// common `ε`-normalisation of the determinant is meaningless and
/// [`Error::MixedEntryOrders`] is returned.
pub fn tau_det<S: Real>(
    nu: usize,
    a: Complex<S>,
    b: Complex<S>,
    c: Complex<S>,
    x: Complex<S>,
    c0: Complex<S>,
    c1: Complex<S>,
) -> Result<Complex<S>> {
    if nu == 0 {
        return Ok(Complex::new(S::one(), S::zero()));
    }
    let mut common_order = None;
    let mut rows = Vec::with_capacity(nu);
    for i in 0..nu {
        let mut row = Vec::with_capacity(nu);
        for j in 0..nu {
            let ai = a + c64::<S>(i as f64, 0.0);
            let bj = b + c64::<S>(j as f64, 0.0);
            let (order, value) = phi_leading(ai, bj, c, x, c0, c1)?;
            match common_order {
                None => common_order = Some(order),
                Some(o) if o != order => return Err(Error::MixedEntryOrders),
                Some(_) => {}
            }
            row.push(value);
        }
        rows.push(row);
    }
    Ok(det_complex(&rows))
}

/// Closed-form lattice value at quadrant site `(n, m)`.
///
/// The four branch formulas (split by `n ≤ m` and the parity of `n + m`)
/// share the shape `prefactor · det / det` with determinant size
/// `min(n, m)`; the boundary sites reduce to `0`, `c0`-multiples and
/// `c1·x^r`-multiples because the empty determinant is 1.
///
/// The determinants lose far more digits to cancellation than a machine
/// scalar holds, so they are evaluated in exact rational arithmetic and the
/// quotient is rounded once into the working scalar; see the notes on
/// [`crate::power_lattice`]. The machine-precision entry evaluator
/// [`phi_leading`] / [`tau_det`] remains available for direct inspection of
/// the regularised determinants.
pub fn z_closed_form<S: Real>(n: u32, m: u32, p: &HyperParams<S>) -> Result<Complex<S>> {
    check_x(p.x)?;
    if p.r.is_integer() {
        // Both branches of every determinant entry degenerate at once: the
        // principal-branch numerator gammas sit on poles simultaneously.
        return Err(Error::ParameterPole {
            factor: "both numerator gammas, principal branch",
        });
    }
    let x = exact::lift(p.x)?;
    let c0 = exact::lift(p.c0)?;
    let c1 = exact::lift(p.c1)?;
    let sstar = exact::power_value(p.x, &x, p.r)?;
    let value = exact::z_exact(n, m, p.r, &x, &c0, &c1, &sstar)?;
    Ok(exact::round_to_scalar(&value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::pochhammer;
    use crate::{rel_dev, C64};

    fn params(r: Rat, x: C64) -> HyperParams<f64> {
        HyperParams::new(r, C64::new(1.0, 0.0), C64::new(1.0, 0.0), x).unwrap()
    }

    fn z(n: u32, m: u32, p: &HyperParams<f64>) -> C64 {
        z_closed_form(n, m, p).unwrap()
    }

    #[test]
    fn residue_regularisation_pins_the_convention() {
        // Single pole at a = -1 in the principal branch; reference value from
        // 40-digit arithmetic.
        let (order, value) = phi_leading(
            C64::new(-1.0, 0.0),
            C64::new(0.7, 0.0),
            C64::new(0.5, 0.0),
            C64::new(-1.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
        )
        .unwrap();
        assert_eq!(order, 1);
        let want = C64::new(-1.757_638_314_116_087_75, 0.0);
        assert!(rel_dev(value, want) < tol::HYP_REL, "{value} vs {want}");
    }

    #[test]
    fn empty_determinant_is_one() {
        let one = C64::new(1.0, 0.0);
        let got = tau_det(0, one, one, one, one * 0.3, one, one).unwrap();
        assert_eq!(got, one);
    }

    #[test]
    fn boundary_sites_reduce_to_the_seeds() {
        let p = params(Rat::new(2, 3), C64::new(-1.0, 0.0));
        assert_eq!(z(0, 0, &p), C64::new(0.0, 0.0));
        assert!((z(1, 0, &p) - p.c0).norm() < tol::CORNER_ABS);
        // (-1)^(2/3) on the principal branch.
        let want = C64::new(-0.5, 0.866_025_403_784_438_647);
        assert!((z(0, 1, &p) - p.c1 * want).norm() < tol::CORNER_ABS);

        let q = params(Rat::new(2, 5), C64::new(0.5, 0.0));
        let want = C64::new(0.757_858_283_255_199_041, 0.0);
        assert!((z(0, 1, &q) - q.c1 * want).norm() < tol::CORNER_ABS);
    }

    #[test]
    fn interior_sites_match_reference_values() {
        // Reference values from 40-digit arithmetic.
        let cases: [(Rat, C64, u32, u32, C64); 6] = [
            (
                Rat::new(2, 3),
                C64::new(-1.0, 0.0),
                1,
                1,
                C64::new(1.0, 1.732_050_807_568_877_29),
            ),
            (
                Rat::new(2, 3),
                C64::new(-1.0, 0.0),
                2,
                3,
                C64::new(1.683_486_238_532_110_09, 6.236_971_944_686_094_84),
            ),
            (
                Rat::new(2, 3),
                C64::new(-1.0, 0.0),
                4,
                2,
                C64::new(7.097_560_975_609_756_1, 5.069_416_997_762_567_69),
            ),
            (
                Rat::new(1, 3),
                C64::new(-1.0, 0.0),
                3,
                3,
                C64::new(2.157_894_736_842_105_26, 1.245_861_107_198_666_12),
            ),
            (
                Rat::new(2, 5),
                C64::new(0.5, 0.0),
                2,
                3,
                C64::new(2.998_631_793_383_371_54, 0.0),
            ),
            (
                Rat::new(2, 5),
                C64::new(0.5, 0.0),
                4,
                2,
                C64::new(3.720_040_489_284_827_41, 0.0),
            ),
        ];
        for (r, x, n, m, want) in cases {
            let got = z(n, m, &params(r, x));
            assert!(
                rel_dev(got, want) < 1e-12,
                "z({n},{m}) at r={r}, x={x}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn far_sites_survive_the_determinant_cancellation() {
        // Deep in the quadrant the determinants cancel ten or more digits;
        // these references from 40-digit arithmetic certify the exact
        // evaluation path end to end.
        let cases: [(Rat, C64, u32, u32, C64); 3] = [
            (
                Rat::new(2, 5),
                C64::new(0.5, 0.0),
                5,
                6,
                C64::new(5.713_241_616_727_905_23, 0.0),
            ),
            (
                Rat::new(2, 5),
                C64::new(0.5, 0.0),
                6,
                6,
                C64::new(6.198_900_191_258_491_33, 0.0),
            ),
            (
                Rat::new(2, 3),
                C64::new(-1.0, 0.0),
                6,
                6,
                C64::new(10.210_481_732_407_154_6, 17.685_073_130_283_081_4),
            ),
        ];
        for (r, x, n, m, want) in cases {
            let got = z(n, m, &params(r, x));
            assert!(
                rel_dev(got, want) < 1e-14,
                "z({n},{m}) at r={r}, x={x}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn both_diagonal_branch_formulas_agree() {
        // At n = m either half-plane formula applies; they must give the
        // same value, which exercises the determinant structure directly.
        let p = params(Rat::new(2, 3), C64::new(-1.0, 0.0));
        let one = C64::new(1.0, 0.0);
        let ci = |k: i64| C64::new(k as f64, 0.0);
        let r = C64::new(2.0 / 3.0, 0.0);
        for nm in 1..=3u32 {
            let lower = z(nm, nm, &p);
            let nn = nm as i64;
            let big_n = nn;
            let nu = nm as usize;
            let pre = p.c0 * ci(big_n) * pochhammer(r + one, (big_n - 1) as u32)
                / pochhammer(one - r, big_n as u32);
            let num = tau_det(
                nu,
                ci(2 - big_n),
                ci(1 - big_n) - r,
                ci(2) - r,
                p.x,
                p.c0,
                p.c1,
            )
            .unwrap();
            let den = tau_det(
                nu,
                ci(1 - big_n),
                ci(2 - big_n) - r,
                ci(2) - r,
                p.x,
                p.c0,
                p.c1,
            )
            .unwrap();
            let upper = pre * num / den;
            assert!(
                rel_dev(lower, upper) < 1e-11,
                "n=m={nm}: {lower} vs {upper}"
            );
        }
    }

    #[test]
    fn exponent_one_half_gives_the_identity_map() {
        let p = params(Rat::new(1, 2), C64::new(-1.0, 0.0));
        for (n, m) in [(1, 1), (2, 1), (1, 3), (3, 2), (4, 4)] {
            let got = z(n, m, &p);
            let want = C64::new(n as f64, m as f64);
            assert!((got - want).norm() < 1e-11, "z({n},{m}) = {got}");
        }
    }

    #[test]
    fn integral_exponent_is_a_double_pole() {
        let p = HyperParams::new(
            Rat::new(1, 1),
            C64::new(1.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(-1.0, 0.0),
        )
        .unwrap();
        let err = z_closed_form(1, 1, &p).unwrap_err();
        assert!(matches!(err, Error::ParameterPole { .. }), "{err}");
    }

    #[test]
    fn degenerate_lattice_parameter_is_rejected() {
        let one = C64::new(1.0, 0.0);
        let err = HyperParams::new(Rat::new(2, 3), one, one, C64::new(1.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::DegenerateX { .. }));
        let err = HyperParams::new(Rat::new(2, 3), one, one, C64::new(0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::DegenerateX { .. }));
    }

    #[test]
    fn narrower_scalars_instantiate() {
        let p = HyperParams::<f32>::new(
            Rat::new(2, 3),
            Complex::new(1.0f32, 0.0),
            Complex::new(1.0f32, 0.0),
            Complex::new(-1.0f32, 0.0),
        )
        .unwrap();
        let got = z_closed_form(1, 1, &p).unwrap();
        let want = Complex::new(1.0f32, 1.732_050_8);
        assert!((got - want).norm() < 1e-3, "{got}");
    }
}
