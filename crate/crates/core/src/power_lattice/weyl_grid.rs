//! Lattice sheet realised through the Weyl-group action on tau-variables.

use super::iterate::Grid2;
use crate::subgroup_a1::{rho_word, z0_functional, A1Params};
use crate::weyl_tau::{apply_word_tau, TauState};
use crate::{Real, Result};

/// Builds the signed tau-quotient sheet over `0..=l1_max` × `0..=l2_max`.
///
/// Site `(l1, l2)` carries `(-1)^(l1+l2)` times the tau-quotient of the state
/// translated `l1` steps along the first lattice direction and `l2` along
/// the second. States are chained — each site costs one translation word
/// applied to a neighbour's state — so a whole sheet is linear, not
/// quadratic, in word applications per row.
///
/// The returned sheet carries the equation parameters implied by the state:
/// the sheet satisfies the cross-ratio equation with the state's `x` and the
/// similarity constraint with its `beta1`, `gamma1`, `zeta0` family values.
pub fn z_grid_weyl<S: Real>(st: &TauState<S>, l1_max: u32, l2_max: u32) -> Result<Grid2<S>> {
    let fam = A1Params::from_params(&st.params);
    let mut grid = Grid2::new(st.ctx.x, fam.beta1, fam.gamma1, fam.zeta0);
    let rho1 = rho_word(1);
    let rho2 = rho_word(2);
    let mut row = st.clone();
    for l1 in 0..=l1_max {
        let mut cell = row.clone();
        for l2 in 0..=l2_max {
            let value = z0_functional(&cell)?;
            let sign = if (l1 + l2) % 2 == 0 {
                S::one()
            } else {
                -S::one()
            };
            grid.insert(l1 as i64, l2 as i64, value * sign);
            if l2 < l2_max {
                cell = apply_word_tau(&rho2, &cell)?;
            }
        }
        if l1 < l1_max {
            row = apply_word_tau(&rho1, &row)?;
        }
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::power_lattice::residual_system;
    use crate::subgroup_a1::z_lattice_value;
    use crate::weyl_tau::{random_param_state, random_tau_state, ParamState};
    use crate::{tol, Rat, C64};

    #[test]
    fn chained_sheet_equals_sitewise_translation() {
        let st = random_tau_state(31, &random_param_state(5), C64::new(2.0, 1.0)).unwrap();
        let grid = z_grid_weyl(&st, 3, 3).unwrap();
        for l1 in 0..=3 {
            for l2 in 0..=3 {
                // Same generator applications in the same order, so the
                // values must agree bit for bit.
                let direct = z_lattice_value(&st, l1, l2).unwrap();
                assert_eq!(grid.get(l1, l2).unwrap(), direct, "site ({l1}, {l2})");
            }
        }
    }

    #[test]
    fn sheet_satisfies_cross_ratio_and_similarity() {
        for (seed, x) in [(3u64, C64::new(-1.0, 0.0)), (4, C64::new(2.0, 1.0))] {
            let st = random_tau_state(seed, &random_param_state(seed), x).unwrap();
            let grid = z_grid_weyl(&st, 4, 4).unwrap();
            let (cr, sim) = residual_system(&grid);
            assert!(cr < tol::LATTICE_RESIDUAL, "cross-ratio residual {cr}");
            assert!(sim < tol::LATTICE_RESIDUAL, "similarity residual {sim}");
        }
    }

    #[test]
    fn power_function_parameters_give_the_quadrant_equations() {
        // Parameter point of the power function itself: both lattice offsets
        // vanish and the similarity weight is the exponent.
        let r = Rat::new(2, 3);
        let zero = Rat::new(0, 1);
        let a = ParamState::new([r, zero, zero, Rat::new(1, 1) - r, zero]).unwrap();
        let st = random_tau_state(11, &a, C64::new(0.5, 0.0)).unwrap();
        let grid = z_grid_weyl(&st, 4, 4).unwrap();
        assert_eq!(grid.beta1, Rat::new(0, 1));
        assert_eq!(grid.gamma1, Rat::new(0, 1));
        assert_eq!(grid.zeta0, r);
        let (cr, sim) = residual_system(&grid);
        assert!(
            cr < tol::LATTICE_RESIDUAL && sim < tol::LATTICE_RESIDUAL,
            "{cr}, {sim}"
        );
    }
}
