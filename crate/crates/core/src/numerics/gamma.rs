//! Complex gamma function via the Lanczos approximation.

use super::nonpos_int_index;
use crate::{c64, cvt, to_f64, tol, Error, Real, Result};
use num_complex::Complex;

/// Lanczos coefficients for g = 7, n = 9 (double precision fit).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma on the complex plane, accurate to roughly 13 significant digits in
/// `f64`. Arguments within [`tol::POLE_DETECT`] of a non-positive integer are
/// rejected as poles; the left half-plane is reached through the reflection
/// formula.
pub fn complex_gamma<S: Real>(z: Complex<S>) -> Result<Complex<S>> {
    if nonpos_int_index(z, tol::POLE_DETECT).is_some() {
        return Err(Error::Pole {
            re: to_f64(z.re),
            im: to_f64(z.im),
            tol: tol::POLE_DETECT,
        });
    }
    let half = cvt::<S>(0.5);
    if z.re < half {
        // Gamma(z) = pi / (sin(pi z) * Gamma(1 - z))
        let pi = Complex::new(S::PI(), S::zero());
        let one = Complex::new(S::one(), S::zero());
        let s = (pi * z).sin();
        return Ok(pi / (s * lanczos(one - z)));
    }
    Ok(lanczos(z))
}

fn lanczos<S: Real>(z: Complex<S>) -> Complex<S> {
    let z = z - Complex::new(S::one(), S::zero());
    let mut acc = c64::<S>(LANCZOS[0], 0.0);
    for (i, &coeff) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + c64::<S>(coeff, 0.0) / (z + c64::<S>(i as f64, 0.0));
    }
    let t = z + c64::<S>(LANCZOS_G + 0.5, 0.0);
    let sqrt_two_pi = c64::<S>((2.0 * std::f64::consts::PI).sqrt(), 0.0);
    sqrt_two_pi * t.powc(z + c64::<S>(0.5, 0.0)) * (-t).exp() * acc
}
