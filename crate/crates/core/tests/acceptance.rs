//! Acceptance gate: the crate's end-to-end guarantees, one line per
//! criterion.
//!
//! Run `cargo test --test acceptance -- --nocapture` to see every line;
//! under the default harness the lines surface whenever a criterion fails.
//! All tolerances come from the central [`tol`] table so the accepted error
//! budget stays pinned in one place.

use dpower_core::power_lattice::{
    cac_check, compare_three_ways, cube_grid, iterate_special_quadrant, residual_system,
    verify_cube_faces, z_grid_weyl, HyperParams,
};
use dpower_core::root_data::verify_orbit_lemma;
use dpower_core::subgroup_a1::{
    cross_check_z_levels, verify_a1_relations, verify_relations_z, verify_shift_theorem,
};
use dpower_core::weyl_tau::{
    random_param_state, random_tau_state, verify_relations_params, verify_relations_tau,
    verify_relations_weights,
};
use dpower_core::{tol, Error, Rat, Result, C64};
use std::time::{Duration, Instant};

/// Lattice parameters the numeric criteria sample over: one negative real,
/// one generic complex, one inside the unit interval.
const X_VALUES: [(f64, f64); 3] = [(-1.0, 0.0), (2.0, 1.0), (0.5, 0.0)];

struct Outcome {
    label: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
    budget: Option<Duration>,
}

fn run(
    label: &'static str,
    budget_secs: Option<u64>,
    body: impl FnOnce() -> (bool, String),
) -> Outcome {
    let start = Instant::now();
    let (passed, detail) = body();
    Outcome {
        label,
        passed,
        detail,
        elapsed: start.elapsed(),
        budget: budget_secs.map(Duration::from_secs),
    }
}

/// Retries a sampling-based verification a few times when the draw runs
/// into a degenerate configuration; any other error is a real failure.
fn with_resampling<T>(mut body: impl FnMut(u64) -> Result<T>) -> T {
    let mut last = None;
    for offset in 0..8 {
        match body(offset) {
            Ok(v) => return v,
            Err(e @ (Error::DegenerateDenominator { .. } | Error::ResampleExhausted { .. })) => {
                last = Some(e);
            }
            Err(e) => panic!("verification failed: {e}"),
        }
    }
    panic!("every sampling attempt degenerated: {}", last.unwrap());
}

fn criterion_exact_relations() -> Outcome {
    run(
        "defining relations exact on the weight lattice and parameter matrices",
        Some(1),
        || {
            let weights = verify_relations_weights();
            let params = verify_relations_params();
            (
                weights.passed() && params.passed(),
                format!(
                    "{} weight/coroot checks, {} parameter-matrix checks, all exact",
                    weights.checks.len(),
                    params.checks.len()
                ),
            )
        },
    )
}

fn criterion_tau_relations() -> Outcome {
    run(
        "tau-level relations hold up to the tabulated fourth-root phases",
        Some(30),
        || {
            let mut states = 0usize;
            let mut worst = 0f64;
            let mut ok = true;
            for (k, (re, im)) in X_VALUES.iter().enumerate() {
                let x = C64::new(*re, *im);
                let report = with_resampling(|offset| {
                    verify_relations_tau(70, 1_000 + 31 * k as u64 + offset, x, tol::TAU_REL)
                });
                ok &= report.passed();
                worst = worst.max(report.worst_residual());
                states += 70;
            }
            (
                ok && states >= 200,
                format!(
                    "{} states over {} lattice parameters, worst residual {:.2e} (tol {:.0e})",
                    states,
                    X_VALUES.len(),
                    worst,
                    tol::TAU_REL
                ),
            )
        },
    )
}

fn criterion_shift_structure() -> Outcome {
    run(
        "translation shifts: displacements, family action, commutation, path independence",
        Some(10),
        || {
            let mut worst = 0f64;
            let mut ok = true;
            for (k, (re, im)) in X_VALUES.iter().enumerate() {
                let x = C64::new(*re, *im);
                let report = with_resampling(|offset| {
                    verify_shift_theorem(12, 40 + 17 * k as u64 + offset, x, tol::TAU_REL)
                });
                ok &= report.passed();
                worst = worst.max(report.worst_residual());
            }
            (
                ok,
                format!(
                    "12 states per lattice parameter, worst residual {worst:.2e} (tol {:.0e})",
                    tol::TAU_REL
                ),
            )
        },
    )
}

fn criterion_weyl_sheets() -> Outcome {
    run(
        "tau-quotient sheets satisfy the cross-ratio and similarity equations",
        None,
        || {
            let mut sheets = 0usize;
            let mut worst = 0f64;
            let mut seed = 0u64;
            while sheets < 20 && seed < 200 {
                let (re, im) = X_VALUES[(seed % 3) as usize];
                seed += 1;
                let state =
                    match random_tau_state(seed, &random_param_state(seed), C64::new(re, im)) {
                        Ok(state) => state,
                        Err(_) => continue,
                    };
                if let Ok(grid) = z_grid_weyl(&state, 6, 6) {
                    let (cr, sim) = residual_system(&grid);
                    worst = worst.max(cr).max(sim);
                    sheets += 1;
                }
            }
            (
                sheets >= 20 && worst <= tol::LATTICE_RESIDUAL,
                format!(
                    "{sheets} sheets of 49 sites, worst residual {worst:.2e} (tol {:.0e})",
                    tol::LATTICE_RESIDUAL
                ),
            )
        },
    )
}

fn criterion_closed_vs_iteration() -> Outcome {
    run(
        "closed forms match direct iteration on the quadrant",
        Some(10),
        || {
            let one = C64::new(1.0, 0.0);
            let cases = [
                (Rat::new(2, 3), C64::new(-1.0, 0.0)),
                (Rat::new(1, 3), C64::new(-1.0, 0.0)),
                (Rat::new(2, 5), C64::new(0.5, 0.0)),
            ];
            let mut ok = true;
            let mut worst = 0f64;
            for (k, (r, x)) in cases.into_iter().enumerate() {
                let p = HyperParams::new(r, one, one, x).expect("x is non-degenerate");
                let report = with_resampling(|offset| {
                    compare_three_ways(6, &p, 500 + 13 * k as u64 + offset)
                });
                ok &= report.passed();
                worst = worst.max(report.worst_residual());
            }
            (
                ok,
                format!(
                    "3 exponents, 49 sites each; corners within {:.0e}, interior within {:.0e}, worst {worst:.2e}",
                    tol::CORNER_ABS,
                    tol::CLOSED_FORM_REL
                ),
            )
        },
    )
}

fn criterion_cube() -> Outcome {
    run(
        "cube consistency: route independence and the face equations",
        None,
        || {
            let cac = cac_check(100, 77, tol::CAC_REL).expect("sampling must succeed");
            let faces = with_resampling(|offset| {
                let state = random_tau_state(
                    21 + offset,
                    &random_param_state(9 + offset),
                    C64::new(2.0, 1.0),
                )?;
                Ok(verify_cube_faces(&cube_grid(&state, 3)?))
            });
            (
                cac.passed() && faces.passed(),
                format!(
                    "100 random cubes within {:.0e}; 4x4x4 translated block faces within {:.0e} (worst {:.2e})",
                    tol::CAC_REL,
                    tol::LATTICE_RESIDUAL,
                    faces.worst_residual()
                ),
            )
        },
    )
}

fn criterion_z_structure() -> Outcome {
    run(
        "lattice-value subgroup: exact word identities and birational action",
        None,
        || {
            let exact = verify_a1_relations();
            let birational =
                with_resampling(|offset| verify_relations_z(100, 11 + offset, tol::Z_REL));
            let mut ok = exact.passed() && birational.passed();
            let mut worst = birational.worst_residual();
            for (k, (re, im)) in X_VALUES.iter().enumerate() {
                let x = C64::new(*re, *im);
                let report = with_resampling(|offset| {
                    cross_check_z_levels(10, 70 + 19 * k as u64 + offset, x, tol::Z_REL)
                });
                ok &= report.passed();
                worst = worst.max(report.worst_residual());
            }
            (
                ok,
                format!(
                    "{} exact identities; 100 quadruple orbits and 30 tau cross-checks within {:.0e} (worst {worst:.2e})",
                    exact.checks.len(),
                    tol::Z_REL
                ),
            )
        },
    )
}

fn criterion_orbits() -> Outcome {
    run(
        "orbit classification of the weight lattice",
        Some(60),
        || {
            let report = verify_orbit_lemma(8);
            (
                report.passed(),
                format!(
                    "{} structural checks at search depth 8",
                    report.checks.len()
                ),
            )
        },
    )
}

fn criterion_identity_map() -> Outcome {
    run(
        "exponent 1/2 at x = -1 reproduces the integer lattice",
        None,
        || {
            let one = C64::new(1.0, 0.0);
            let p = HyperParams::new(Rat::new(1, 2), one, one, C64::new(-1.0, 0.0))
                .expect("x is non-degenerate");
            let grid = iterate_special_quadrant(8, &p).expect("identity lattice never degenerates");
            let mut worst = 0f64;
            for n in 0..=8 {
                for m in 0..=8 {
                    let want = C64::new(n as f64, m as f64);
                    worst = worst.max((grid.get(n, m).unwrap() - want).norm());
                }
            }
            (
                worst <= tol::IDENTITY_MAP_ABS,
                format!(
                    "81 sites, worst absolute deviation {worst:.2e} (tol {:.0e})",
                    tol::IDENTITY_MAP_ABS
                ),
            )
        },
    )
}

#[test]
fn acceptance() {
    let outcomes = [
        criterion_exact_relations(),
        criterion_tau_relations(),
        criterion_shift_structure(),
        criterion_weyl_sheets(),
        criterion_closed_vs_iteration(),
        criterion_cube(),
        criterion_z_structure(),
        criterion_orbits(),
        criterion_identity_map(),
    ];
    let mut all_ok = true;
    for outcome in &outcomes {
        let within_budget = outcome.budget.map_or(true, |b| outcome.elapsed <= b);
        let ok = outcome.passed && within_budget;
        all_ok &= ok;
        let status = if ok { "PASS" } else { "FAIL" };
        let timing = match outcome.budget {
            Some(b) => format!("{:.2?} of {:.0?}", outcome.elapsed, b),
            None => format!("{:.2?}", outcome.elapsed),
        };
        println!("{status} [{timing}] {} — {}", outcome.label, outcome.detail);
    }
    assert!(all_ok, "at least one acceptance criterion failed");
}
