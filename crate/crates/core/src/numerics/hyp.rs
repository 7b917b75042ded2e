//! Gauss hypergeometric function 2F1 on the cut complex plane.

use super::{complex_gamma, nonpos_int_index};
use crate::{c64, cvt, to_f64, tol, Error, Real, Result};
use num_complex::Complex;

const MAX_TERMS: usize = 4000;
/// Primary series radius; beyond it an argument transformation is preferred.
const SERIES_RADIUS: f64 = 0.75;
/// Last-resort series radius (slow but still convergent in double precision).
const FALLBACK_RADIUS: f64 = 0.92;

/// Rising factorial (u)_n = u (u+1) ... (u+n-1), with (u)_0 = 1.
pub fn pochhammer<S: Real>(u: Complex<S>, n: u32) -> Complex<S> {
    let mut acc = Complex::new(S::one(), S::zero());
    for k in 0..n {
        acc = acc * (u + c64::<S>(k as f64, 0.0));
    }
    acc
}

/// 2F1(a, b; c; x).
///
/// Strategy: if `a` or `b` sits on a non-positive integer the series
/// terminates and is summed exactly for any `x` (with `ParameterPole` if a
/// pole of `c` strikes first). Otherwise the argument is moved into a
/// convergent disc via the Pfaff x/(x-1) map or the connection formula at
/// x = 1; arguments near the unit circle that no transformation reaches give
/// `NonConvergence`.
pub fn gauss_2f1<S: Real>(
    a: Complex<S>,
    b: Complex<S>,
    c: Complex<S>,
    x: Complex<S>,
) -> Result<Complex<S>> {
    eval(a, b, c, x, true)
}

fn eval<S: Real>(
    a: Complex<S>,
    b: Complex<S>,
    c: Complex<S>,
    x: Complex<S>,
    allow_transform: bool,
) -> Result<Complex<S>> {
    let ka = nonpos_int_index(a, tol::POLE_DETECT);
    let kb = nonpos_int_index(b, tol::POLE_DETECT);
    let kc = nonpos_int_index(c, tol::POLE_DETECT);
    let terminates_at = match (ka, kb) {
        (Some(p), Some(q)) => Some(p.min(q)),
        (Some(p), None) => Some(p),
        (None, Some(q)) => Some(q),
        (None, None) => None,
    };
    if let Some(k) = terminates_at {
        if kc.map_or(false, |p| p < k) {
            return Err(Error::ParameterPole { factor: "c" });
        }
        return Ok(terminating_sum(a, b, c, x, k));
    }
    if kc.is_some() {
        return Err(Error::ParameterPole { factor: "c" });
    }

    let one = Complex::new(S::one(), S::zero());
    let m_series = to_f64(x.norm());
    if m_series == 0.0 {
        return Ok(one);
    }
    if m_series <= SERIES_RADIUS {
        return series(a, b, c, x);
    }
    if !allow_transform {
        return Err(Error::NonConvergence {
            context: "transformed argument left the series disc",
        });
    }
    let m_one = to_f64((one - x).norm());
    if m_one < tol::DEGENERATE_X {
        return gauss_summation(a, b, c);
    }
    let w = x / (x - one);
    let m_pfaff = to_f64(w.norm());
    if m_pfaff <= SERIES_RADIUS {
        return pfaff(a, b, c, x, w);
    }
    if m_one <= SERIES_RADIUS {
        return connection_at_one(a, b, c, x);
    }
    // Slow-series fallback for the ring between the comfortable discs.
    if m_series <= FALLBACK_RADIUS && m_series <= m_pfaff {
        return series(a, b, c, x);
    }
    if m_pfaff <= FALLBACK_RADIUS {
        return pfaff(a, b, c, x, w);
    }
    Err(Error::NonConvergence {
        context: "argument outside every implemented convergence region",
    })
}

/// Finite sum when the series terminates at order k (a or b = -k).
fn terminating_sum<S: Real>(
    a: Complex<S>,
    b: Complex<S>,
    c: Complex<S>,
    x: Complex<S>,
    k: u32,
) -> Complex<S> {
    let mut term = Complex::new(S::one(), S::zero());
    let mut sum = Complex::new(S::zero(), S::zero());
    for j in 0..=k {
        sum = sum + term;
        if j < k {
            let jf = c64::<S>(j as f64, 0.0);
            let j1 = c64::<S>((j + 1) as f64, 0.0);
            term = term * (a + jf) * (b + jf) / ((c + jf) * j1) * x;
        }
    }
    sum
}

fn series<S: Real>(
    a: Complex<S>,
    b: Complex<S>,
    c: Complex<S>,
    x: Complex<S>,
) -> Result<Complex<S>> {
    let mut term = Complex::new(S::one(), S::zero());
    let mut sum = term;
    let eps = S::epsilon() * cvt::<S>(4.0);
    let mut small_streak = 0;
    for j in 0..MAX_TERMS {
        let jf = c64::<S>(j as f64, 0.0);
        let j1 = c64::<S>((j + 1) as f64, 0.0);
        term = term * (a + jf) * (b + jf) / ((c + jf) * j1) * x;
        sum = sum + term;
        if term.norm() <= eps * sum.norm().max(S::one()) {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::NonConvergence {
        context: "series did not reach tolerance within the term budget",
    })
}

/// Pfaff transformation: F(a,b;c;x) = (1-x)^(-a) F(a, c-b; c; x/(x-1)).
fn pfaff<S: Real>(
    a: Complex<S>,
    b: Complex<S>,
    c: Complex<S>,
    x: Complex<S>,
    w: Complex<S>,
) -> Result<Complex<S>> {
    let one = Complex::new(S::one(), S::zero());
    let f = eval(a, c - b, c, w, false)?;
    finite((one - x).powc(-a) * f)
}

/// Connection formula on |1-x| <= 3/4, valid when c-a-b is not an integer.
fn connection_at_one<S: Real>(
    a: Complex<S>,
    b: Complex<S>,
    c: Complex<S>,
    x: Complex<S>,
) -> Result<Complex<S>> {
    let one = Complex::new(S::one(), S::zero());
    let s = c - a - b;
    if is_near_integer(s) {
        return Err(Error::NonConvergence {
            context: "exponent c-a-b is integral near the x = 1 branch point",
        });
    }
    let y = one - x;
    let gc = complex_gamma(c)?;
    let t1 = gc
        * complex_gamma(s)?
        * recip_gamma(c - a)?
        * recip_gamma(c - b)?
        * eval(a, b, one - s, y, false)?;
    let t2 = y.powc(s)
        * gc
        * complex_gamma(-s)?
        * recip_gamma(a)?
        * recip_gamma(b)?
        * eval(c - a, c - b, s + one, y, false)?;
    finite(t1 + t2)
}

/// Value at x = 1 exactly (Gauss summation); needs Re(c-a-b) > 0.
fn gauss_summation<S: Real>(a: Complex<S>, b: Complex<S>, c: Complex<S>) -> Result<Complex<S>> {
    let s = c - a - b;
    if s.re <= S::zero() {
        return Err(Error::NonConvergence {
            context: "series diverges at x = 1 (Re(c-a-b) <= 0)",
        });
    }
    finite(complex_gamma(c)? * complex_gamma(s)? * recip_gamma(c - a)? * recip_gamma(c - b)?)
}

/// 1/Gamma(z); entire, zero at the poles of Gamma.
fn recip_gamma<S: Real>(z: Complex<S>) -> Result<Complex<S>> {
    if nonpos_int_index(z, tol::POLE_DETECT).is_some() {
        return Ok(Complex::new(S::zero(), S::zero()));
    }
    Ok(complex_gamma(z)?.inv())
}

fn is_near_integer<S: Real>(z: Complex<S>) -> bool {
    let t = cvt::<S>(tol::POLE_DETECT).max(S::epsilon() * cvt::<S>(32.0));
    z.im.abs() <= t && (z.re - z.re.round()).abs() <= t
}

fn finite<S: Real>(v: Complex<S>) -> Result<Complex<S>> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonConvergence {
            context: "overflow during argument transformation",
        })
    }
}
