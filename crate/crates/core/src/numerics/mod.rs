//! Complex special functions and small linear algebra for the closed forms.

mod branch;
mod det;
mod gamma;
mod hyp;

pub use branch::{make_branch_context, BranchContext};
pub use det::det_complex;
pub use gamma::complex_gamma;
pub use hyp::{gauss_2f1, pochhammer};

use crate::{cvt, Real};
use num_complex::Complex;

/// If `z` lies within `tol` of a non-positive integer `-k`, returns `k`.
///
/// Integer-valued parameters assembled by floating arithmetic drift by a few
/// ulps of the working scalar, so the detection width never falls below
/// that even when `tol` does.
pub(crate) fn nonpos_int_index<S: Real>(z: Complex<S>, tol: f64) -> Option<u32> {
    let t = cvt::<S>(tol).max(S::epsilon() * cvt::<S>(32.0));
    if z.im.abs() > t {
        return None;
    }
    let rounded = z.re.round();
    if (z.re - rounded).abs() > t || rounded > t {
        return None;
    }
    num_traits::cast::<S, f64>(-rounded).map(|k| k as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;

    #[test]
    fn nonpos_int_detection() {
        assert_eq!(nonpos_int_index(C64::new(0.0, 0.0), 1e-10), Some(0));
        assert_eq!(nonpos_int_index(C64::new(-3.0, 0.0), 1e-10), Some(3));
        assert_eq!(
            nonpos_int_index(C64::new(-3.0 + 1e-12, 0.0), 1e-10),
            Some(3)
        );
        assert_eq!(nonpos_int_index(C64::new(2.0, 0.0), 1e-10), None);
        assert_eq!(nonpos_int_index(C64::new(-3.5, 0.0), 1e-10), None);
        assert_eq!(nonpos_int_index(C64::new(-3.0, 0.5), 1e-10), None);
    }
}
