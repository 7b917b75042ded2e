//! Determinants of small complex matrices.

use crate::Real;
use num_complex::Complex;

/// Determinant by Gaussian elimination with partial pivoting.
///
/// `rows` must be square with size at most 12 (the closed forms never need
/// more); an empty matrix has determinant 1. A column with no usable pivot
/// yields exactly 0.
pub fn det_complex<S: Real>(rows: &[Vec<Complex<S>>]) -> Complex<S> {
    let n = rows.len();
    assert!(n <= 12, "determinant size capped at 12, got {n}");
    for r in rows {
        assert_eq!(r.len(), n, "matrix must be square");
    }
    let one = Complex::new(S::one(), S::zero());
    let zero = Complex::new(S::zero(), S::zero());
    if n == 0 {
        return one;
    }
    let mut m: Vec<Vec<Complex<S>>> = rows.to_vec();
    let mut det = one;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r1, &r2| {
                m[r1][col]
                    .norm_sqr()
                    .partial_cmp(&m[r2][col].norm_sqr())
                    .expect("pivot magnitudes must be comparable")
            })
            .expect("non-empty pivot range");
        if m[pivot_row][col].norm_sqr() == S::zero() {
            return zero;
        }
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col];
        det = det * pivot;
        for row in col + 1..n {
            let factor = m[row][col] / pivot;
            for k in col..n {
                let sub = factor * m[col][k];
                m[row][k] = m[row][k] - sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rel_dev, C64};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<C64>> {
        (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
                    .collect()
            })
            .collect()
    }

    fn matmul(a: &[Vec<C64>], b: &[Vec<C64>]) -> Vec<Vec<C64>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn reference_three_by_three() {
        // Reference value computed with 30-digit arithmetic.
        let m = vec![
            vec![C64::new(1.2, 0.3), C64::new(-0.7, 1.1), C64::new(0.4, -0.2)],
            vec![C64::new(2.0, -1.0), C64::new(0.5, 0.5), C64::new(-1.3, 0.8)],
            vec![C64::new(-0.2, 0.9), C64::new(1.7, -0.4), C64::new(0.6, 1.5)],
        ];
        let want = C64::new(9.142_000_000_000_000_23, -3.279_000_000_000_000_55);
        assert!(rel_dev(det_complex(&m), want) < 1e-13);
    }

    #[test]
    fn identity_empty_and_singular() {
        assert_eq!(det_complex::<f64>(&[]), C64::new(1.0, 0.0));
        let eye: Vec<Vec<C64>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| C64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
                    .collect()
            })
            .collect();
        assert_eq!(det_complex(&eye), C64::new(1.0, 0.0));
        // Two equal rows: exactly singular after elimination.
        let m = vec![
            vec![C64::new(1.0, 1.0), C64::new(2.0, 0.0)],
            vec![C64::new(1.0, 1.0), C64::new(2.0, 0.0)],
        ];
        assert_eq!(det_complex(&m), C64::new(0.0, 0.0));
    }

    #[test]
    fn row_swap_flips_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_matrix(&mut rng, 3);
        let mut swapped = m.clone();
        swapped.swap(0, 2);
        assert!(rel_dev(det_complex(&swapped), -det_complex(&m)) < 1e-12);
    }

    #[test]
    fn multiplicative_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 4);
            let b = random_matrix(&mut rng, 4);
            let lhs = det_complex(&matmul(&a, &b));
            let rhs = det_complex(&a) * det_complex(&b);
            assert!(rel_dev(lhs, rhs) < 1e-10, "{lhs} vs {rhs}");
        }
    }
}
