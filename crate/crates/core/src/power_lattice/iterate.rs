//! Direct iteration of the cross-ratio / similarity system on the quadrant,
//! and the residual checks shared by every lattice construction.

use super::exact;
use super::hyper::{check_x, HyperParams};
use crate::{rat_to, rat_to_c, to_f64, Rat, Real, Result};
use num_complex::Complex;
use std::collections::HashMap;

/// A sheet of lattice values over integer sites, carrying the parameters its
/// defining equations refer to.
///
/// The sheet satisfies two families of equations: every unit cell has
/// cross-ratio `1/x`, and every interior site satisfies the similarity
/// constraint `zeta0 · z = (n - beta1) D1 + (m - gamma1) D2`, where `D1`,
/// `D2` are the difference quotients along the two axes.
#[derive(Debug, Clone)]
pub struct Grid2<S: Real> {
    /// Cross-ratio parameter of every unit cell.
    pub x: Complex<S>,
    /// Offset of the first lattice coordinate in the similarity constraint.
    pub beta1: Rat,
    /// Offset of the second lattice coordinate in the similarity constraint.
    pub gamma1: Rat,
    /// Scaling weight of the site value in the similarity constraint.
    pub zeta0: Rat,
    values: HashMap<(i64, i64), Complex<S>>,
}

impl<S: Real> Grid2<S> {
    /// Empty sheet with the given equation parameters.
    pub fn new(x: Complex<S>, beta1: Rat, gamma1: Rat, zeta0: Rat) -> Self {
        Self {
            x,
            beta1,
            gamma1,
            zeta0,
            values: HashMap::new(),
        }
    }

    pub fn insert(&mut self, n: i64, m: i64, value: Complex<S>) {
        self.values.insert((n, m), value);
    }

    pub fn get(&self, n: i64, m: i64) -> Option<Complex<S>> {
        self.values.get(&(n, m)).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Stored sites in row-major order (deterministic).
    pub fn sites(&self) -> Vec<(i64, i64)> {
        let mut sites: Vec<_> = self.values.keys().copied().collect();
        sites.sort_unstable();
        sites
    }
}

/// Iterates the lattice system over the quadrant `0..=l` × `0..=l` from the
/// corner seeds `z(0,0) = 0`, `z(1,0) = c0`, `z(0,1) = c1 · x^r`.
///
/// The two boundary rays follow the similarity constraint restricted to the
/// axes (solving `zeta0 · z_k = k · D1` for the forward neighbour), the
/// interior the cross-ratio equation
/// `(p - q)(w - s) / ((q - w)(s - p)) = 1/x` solved for the fourth corner
/// `w`, swept by anti-diagonals so every cell finds its three known
/// corners. Because the sweep amplifies seed rounding by many orders of
/// magnitude, it runs in exact rational arithmetic and each value is
/// rounded once into the working scalar; see the notes on
/// [`crate::power_lattice`].
pub fn iterate_special_quadrant<S: Real>(l: u32, p: &HyperParams<S>) -> Result<Grid2<S>> {
    check_x(p.x)?;
    let zero = Rat::new(0, 1);
    let mut grid = Grid2::new(p.x, zero, zero, p.r);
    let x = exact::lift(p.x)?;
    let c0 = exact::lift(p.c0)?;
    let c1 = exact::lift(p.c1)?;
    let sstar = exact::power_value(p.x, &x, p.r)?;
    for ((n, m), value) in exact::sweep_exact(l as i64, p.r, &x, &c0, &c1, &sstar)? {
        grid.insert(n, m, exact::round_to_scalar(&value));
    }
    Ok(grid)
}

/// Worst residuals `(cross_ratio, similarity)` of the sheet against its
/// defining equations, in denominator-cleared form.
///
/// The cross-ratio residual is evaluated on every stored unit cell, the
/// similarity residual on every stored site whose four neighbours are
/// stored; each residual is normalised by the magnitude of the largest term
/// so the numbers are scale-free.
pub fn residual_system<S: Real>(grid: &Grid2<S>) -> (f64, f64) {
    let zeta0 = rat_to_c::<S>(grid.zeta0);
    let mut worst_cr = 0.0f64;
    let mut worst_sim = 0.0f64;
    for (n, m) in grid.sites() {
        if let (Some(p), Some(q), Some(w), Some(s)) = (
            grid.get(n, m),
            grid.get(n + 1, m),
            grid.get(n + 1, m + 1),
            grid.get(n, m + 1),
        ) {
            let lhs = grid.x * (p - q) * (w - s);
            let rhs = (q - w) * (s - p);
            let scale = to_f64(lhs.norm()).max(to_f64(rhs.norm())).max(1.0);
            worst_cr = worst_cr.max(to_f64((lhs - rhs).norm()) / scale);
        }
        if let (Some(z), Some(ze), Some(zw), Some(zn), Some(zs)) = (
            grid.get(n, m),
            grid.get(n + 1, m),
            grid.get(n - 1, m),
            grid.get(n, m + 1),
            grid.get(n, m - 1),
        ) {
            let cn = Complex::new(S::from_i64(n).unwrap() - rat_to::<S>(grid.beta1), S::zero());
            let cm = Complex::new(
                S::from_i64(m).unwrap() - rat_to::<S>(grid.gamma1),
                S::zero(),
            );
            let lhs = zeta0 * z * (ze - zw) * (zn - zs);
            let t1 = cn * (ze - z) * (z - zw) * (zn - zs);
            let t2 = cm * (zn - z) * (z - zs) * (ze - zw);
            let scale = to_f64(lhs.norm())
                .max(to_f64(t1.norm()))
                .max(to_f64(t2.norm()))
                .max(1.0);
            worst_sim = worst_sim.max(to_f64((lhs - t1 - t2).norm()) / scale);
        }
    }
    (worst_cr, worst_sim)
}
