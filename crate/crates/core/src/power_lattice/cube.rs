//! Three-direction lattice block and consistency around the cube.
//!
//! Extending the sheet by a transverse translation direction embeds every
//! unit cube into a quad-equation system: the faces spanned by the two
//! lattice directions satisfy a cross-ratio equation, the two transverse
//! face families satisfy equations of discrete-wave type whose coupling
//! constant grows with the transverse level. Consistency around the cube
//! (the value at the eighth corner being independent of the route used to
//! reach it) is what makes the three directions coexist on one lattice.

use crate::subgroup_a1::{rho_word, z0_functional, A1Params};
use crate::weyl_tau::{apply_word_tau, TauState};
use crate::{c64, rat_to_c, to_f64, tol, Error, Rat, Real, Report, Result};
use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// A block of lattice values over integer sites `(l1, l2, l0)`, where the
/// third coordinate is the transverse (coupling-shifting) direction.
#[derive(Debug, Clone)]
pub struct Grid3<S: Real> {
    /// Cross-ratio parameter of the planar faces.
    pub x: Complex<S>,
    /// Base coupling; transverse level `l0` couples with
    /// `(zeta0 + l0)(zeta0 + l0 + 1)`.
    pub zeta0: Rat,
    values: HashMap<(i64, i64, i64), Complex<S>>,
}

impl<S: Real> Grid3<S> {
    pub fn new(x: Complex<S>, zeta0: Rat) -> Self {
        Self {
            x,
            zeta0,
            values: HashMap::new(),
        }
    }

    pub fn insert(&mut self, l1: i64, l2: i64, l0: i64, value: Complex<S>) {
        self.values.insert((l1, l2, l0), value);
    }

    pub fn get(&self, l1: i64, l2: i64, l0: i64) -> Option<Complex<S>> {
        self.values.get(&(l1, l2, l0)).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Stored sites in lexicographic order (deterministic).
    pub fn sites(&self) -> Vec<(i64, i64, i64)> {
        let mut sites: Vec<_> = self.values.keys().copied().collect();
        sites.sort_unstable();
        sites
    }

    /// Coupling constant of the transverse faces leaving level `l0`.
    pub fn coupling(&self, l0: i64) -> Rat {
        let shifted = self.zeta0 + Rat::from_integer(l0);
        shifted * (shifted + Rat::from_integer(1))
    }
}

/// Builds the unsigned tau-quotient block over `0..=l` in all three
/// directions, chaining translated states so each site costs one
/// translation word.
pub fn cube_grid<S: Real>(st: &TauState<S>, l: u32) -> Result<Grid3<S>> {
    let fam = A1Params::from_params(&st.params);
    let mut grid = Grid3::new(st.ctx.x, fam.zeta0);
    let rho1 = rho_word(1);
    let rho2 = rho_word(2);
    let rho0 = rho_word(0);
    let mut first = st.clone();
    for l1 in 0..=l {
        let mut second = first.clone();
        for l2 in 0..=l {
            let mut third = second.clone();
            for l0 in 0..=l {
                grid.insert(l1 as i64, l2 as i64, l0 as i64, z0_functional(&third)?);
                if l0 < l {
                    third = apply_word_tau(&rho0, &third)?;
                }
            }
            if l2 < l {
                second = apply_word_tau(&rho2, &second)?;
            }
        }
        if l1 < l {
            first = apply_word_tau(&rho1, &first)?;
        }
    }
    Ok(grid)
}

fn cleared_residual<S: Real>(t1: Complex<S>, t2: Complex<S>) -> f64 {
    let scale = to_f64(t1.norm()).max(to_f64(t2.norm())).max(1.0);
    to_f64((t1 + t2).norm()) / scale
}

/// Checks every stored face of the block against its quad equation.
///
/// Faces spanned by the two lattice directions must have cross-ratio `1/x`
/// (in the sum form the unsigned values satisfy); faces involving the
/// transverse direction must satisfy
/// `(1/u_shift + 1/u)(u_shift_up + u_up) = -coupling(l0) / x` along the
/// first direction, and the same without the `1/x` along the second.
pub fn verify_cube_faces<S: Real>(grid: &Grid3<S>) -> Report {
    let mut report = Report::new("cube face equations");
    let x = grid.x;
    let (mut worst_planar, mut planar) = (0.0f64, 0usize);
    let (mut worst_first, mut first) = (0.0f64, 0usize);
    let (mut worst_second, mut second) = (0.0f64, 0usize);
    for (l1, l2, l0) in grid.sites() {
        let u = grid.get(l1, l2, l0).unwrap();
        if let (Some(ue), Some(uen), Some(un)) = (
            grid.get(l1 + 1, l2, l0),
            grid.get(l1 + 1, l2 + 1, l0),
            grid.get(l1, l2 + 1, l0),
        ) {
            let t1 = x * (u + ue) * (uen + un);
            let t2 = -(ue + uen) * (un + u);
            worst_planar = worst_planar.max(cleared_residual(t1, t2));
            planar += 1;
        }
        let coupling = rat_to_c::<S>(grid.coupling(l0));
        if let (Some(ue), Some(ueu), Some(uu)) = (
            grid.get(l1 + 1, l2, l0),
            grid.get(l1 + 1, l2, l0 + 1),
            grid.get(l1, l2, l0 + 1),
        ) {
            let t1 = x * (u + ue) * (ueu + uu);
            let t2 = coupling * ue * u;
            worst_first = worst_first.max(cleared_residual(t1, t2));
            first += 1;
        }
        if let (Some(un), Some(unu), Some(uu)) = (
            grid.get(l1, l2 + 1, l0),
            grid.get(l1, l2 + 1, l0 + 1),
            grid.get(l1, l2, l0 + 1),
        ) {
            let t1 = (u + un) * (unu + uu);
            let t2 = coupling * un * u;
            worst_second = worst_second.max(cleared_residual(t1, t2));
            second += 1;
        }
    }
    report.push_numeric(
        "planar face cross-ratio",
        worst_planar,
        tol::LATTICE_RESIDUAL,
        planar,
    );
    report.push_numeric(
        "transverse face, first direction",
        worst_first,
        tol::LATTICE_RESIDUAL,
        first,
    );
    report.push_numeric(
        "transverse face, second direction",
        worst_second,
        tol::LATTICE_RESIDUAL,
        second,
    );
    report
}

/// Solves the planar face equation
/// `(u + u1)(w + u2) = ratio · (u1 + w)(u2 + u)` for the fourth corner `w`.
fn planar_solve<S: Real>(
    u: Complex<S>,
    u1: Complex<S>,
    u2: Complex<S>,
    ratio: Complex<S>,
) -> Option<Complex<S>> {
    let den = (u + u1) - ratio * (u2 + u);
    if to_f64(den.norm()) < tol::SAMPLE_MIN {
        return None;
    }
    Some((ratio * u1 * (u2 + u) - u2 * (u + u1)) / den)
}

/// Solves the transverse face equation
/// `(1/u_shift + 1/u)(w + u_up) = -coupling` for the lifted corner `w`.
fn transverse_solve<S: Real>(
    u: Complex<S>,
    u_shift: Complex<S>,
    u_up: Complex<S>,
    coupling: Complex<S>,
) -> Option<Complex<S>> {
    let min = tol::SAMPLE_MIN;
    if to_f64(u.norm()) < min || to_f64(u_shift.norm()) < min {
        return None;
    }
    let den = u_shift.inv() + u.inv();
    if to_f64(den.norm()) < min {
        return None;
    }
    Some(-coupling / den - u_up)
}

/// Residual of one consistency-around-the-cube experiment, or `None` when
/// the drawn configuration is too close to a degenerate one to measure.
fn cube_closure_residual<S: Real>(corners: [Complex<S>; 4], kappa: [Complex<S>; 3]) -> Option<f64> {
    let [u000, u100, u010, u001] = corners;
    let [k1, k2, k3] = kappa;
    if to_f64(k2.norm()) < tol::SAMPLE_MIN {
        return None;
    }
    let ratio = k1 / k2;
    let u110 = planar_solve(u000, u100, u010, ratio)?;
    let u101 = transverse_solve(u000, u100, u001, k1 * k3)?;
    let u011 = transverse_solve(u000, u010, u001, k2 * k3)?;
    let via_top = planar_solve(u001, u101, u011, ratio)?;
    let via_first = transverse_solve(u010, u110, u011, k1 * k3)?;
    let via_second = transverse_solve(u100, u110, u101, k2 * k3)?;
    let scale = to_f64(via_top.norm())
        .max(to_f64(via_first.norm()))
        .max(to_f64(via_second.norm()))
        .max(1.0);
    let spread = to_f64((via_top - via_first).norm())
        .max(to_f64((via_top - via_second).norm()))
        .max(to_f64((via_first - via_second).norm()));
    Some(spread / scale)
}

/// Consistency around the cube for the quad-equation system with free
/// coupling constants.
///
/// Each trial draws four generic corner values and three couplings, builds
/// the three adjacent corners from the face equations through the base
/// corner, and then the opposite corner three different ways; the spread of
/// the three results is the reported residual. Degenerate draws are
/// resampled (bounded attempts).
pub fn cac_check(trials: u32, seed: u64, tolerance: f64) -> Result<Report> {
    const ATTEMPTS: u32 = 64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        let r = rng.gen_range(0.5f64..2.0);
        let th = rng.gen_range(0.0f64..std::f64::consts::TAU);
        c64::<f64>(r * th.cos(), r * th.sin())
    };
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let mut attempt = 0;
        let residual = loop {
            attempt += 1;
            if attempt > ATTEMPTS {
                return Err(Error::ResampleExhausted { attempts: ATTEMPTS });
            }
            let corners = [draw(), draw(), draw(), draw()];
            let kappa = [draw(), draw(), draw()];
            if let Some(res) = cube_closure_residual(corners, kappa) {
                break res;
            }
        };
        worst = worst.max(residual);
    }
    let mut report = Report::new("consistency around the cube");
    report.push_numeric(
        "eighth corner is route independent",
        worst,
        tolerance,
        trials as usize,
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_tau::{random_param_state, random_tau_state};
    use crate::C64;

    #[test]
    fn generic_cube_closes_on_every_route() {
        let report = cac_check(50, 7, tol::CAC_REL).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.worst_residual() < 1e-11, "{report}");
    }

    #[test]
    fn translated_block_satisfies_all_face_equations() {
        let st = random_tau_state(19, &random_param_state(2), C64::new(2.0, 1.0)).unwrap();
        let grid = cube_grid(&st, 2).unwrap();
        assert_eq!(grid.len(), 27);
        let report = verify_cube_faces(&grid);
        assert!(report.passed(), "{report}");
        for check in &report.checks {
            assert_eq!(check.samples, 12, "{}", check.name);
        }
    }

    #[test]
    fn coupling_grows_with_the_transverse_level() {
        let grid = Grid3::<f64>::new(C64::new(-1.0, 0.0), Rat::new(2, 3));
        assert_eq!(grid.coupling(0), Rat::new(10, 9));
        assert_eq!(grid.coupling(1), Rat::new(40, 9));
        assert!(grid.get(0, 0, 0).is_none());
    }
}
