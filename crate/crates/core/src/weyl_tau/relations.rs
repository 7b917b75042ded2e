//! Defining relations of the symmetry group, checked in three
//! representations: exactly on the weight lattice, exactly on the rational
//! parameters, and numerically on tau-states (where four relations hold
//! only up to fixed fourth-root-of-unity factors per slot).

use super::params::{random_param_state, word_matrix};
use super::tau::{apply_word_tau, random_tau_state, TauVar};
use crate::report::Report;
use crate::root_data::{act_word_coroot, act_word_weight, Coroot, GenSymbol, Weight, Word};
use crate::{c64, to_f64, Real, Result};
use num_complex::Complex;

/// A group relation stated as two words whose actions must agree.
///
/// `quarter_turns[k]` is the power of `i` by which slot `k` of the
/// left-hand tau-state exceeds the right-hand one; all zeros means the
/// relation holds on the nose. Weight and parameter actions agree exactly
/// regardless of the turns.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub lhs: Word,
    pub rhs: Word,
    pub quarter_turns: [u8; 9],
}

const NO_PHASE: [u8; 9] = [0; 9];
/// Slot phases for the square of the order-four automorphism and for its
/// commutator with the involutive automorphism.
const PH_A: [u8; 9] = [3, 1, 2, 3, 1, 2, 2, 2, 2];
/// Slot phases for commuting either non-central automorphism past the
/// central reflection (a sign on the central tau family).
const PH_B: [u8; 9] = [0, 0, 2, 0, 0, 2, 2, 2, 2];

/// `i` raised to the given number of quarter turns.
pub fn phase_factor<S: Real>(quarter_turns: u8) -> Complex<S> {
    match quarter_turns % 4 {
        0 => c64(1.0, 0.0),
        1 => c64(0.0, 1.0),
        2 => c64(-1.0, 0.0),
        _ => c64(0.0, -1.0),
    }
}

/// Relations that hold exactly in every representation: reflection
/// involutions, the braid relations of the star-shaped diagram, the square
/// of the involutive automorphism, and all automorphism-reflection
/// commutations except those twisting the central reflection.
pub fn d4_exact_relations() -> Vec<Relation> {
    use GenSymbol::*;
    let simple = [S0, S1, S2, S3, S4];
    let rel = |name: String, lhs: Word, rhs: Word| Relation {
        name,
        lhs,
        rhs,
        quarter_turns: NO_PHASE,
    };
    let mut out = Vec::new();
    for s in simple {
        out.push(rel(
            format!("{s}^2 = 1"),
            Word::new([s, s]),
            Word::identity(),
        ));
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            // Central node 2 is joined to every other node: braid order 3
            // there, order 2 (commutation) between outer nodes.
            let m = if (i == 2) != (j == 2) { 3 } else { 2 };
            out.push(rel(
                format!("({} {})^{m} = 1", simple[i], simple[j]),
                Word::new([simple[i], simple[j]]).pow(m),
                Word::identity(),
            ));
        }
    }
    out.push(rel(
        "sigma1^2 = 1".into(),
        Word::new([Sigma1, Sigma1]),
        Word::identity(),
    ));
    // Diagram automorphisms permute the reflections. Stated as one-sided
    // commutations so no automorphism square appears on either side.
    let tables: [(GenSymbol, [usize; 5], &[usize]); 3] = [
        (Sigma1, [1, 0, 2, 4, 3], &[0, 1, 3, 4]),
        (Sigma2, [3, 4, 2, 0, 1], &[0, 1, 2, 3, 4]),
        (Sigma3, [4, 3, 2, 1, 0], &[0, 1, 3, 4]),
    ];
    for (sigma, perm, nodes) in tables {
        for &i in nodes {
            out.push(rel(
                format!("{sigma} {} = {} {sigma}", simple[i], simple[perm[i]]),
                Word::new([sigma, simple[i]]),
                Word::new([simple[perm[i]], sigma]),
            ));
        }
    }
    out
}

/// Relations that hold on tau-states only up to the listed quarter-turn
/// factors (they still hold exactly on weights and parameters).
pub fn d4_phased_relations() -> Vec<Relation> {
    use GenSymbol::*;
    vec![
        Relation {
            name: "sigma2^2 = 1".into(),
            lhs: Word::new([Sigma2, Sigma2]),
            rhs: Word::identity(),
            quarter_turns: PH_A,
        },
        Relation {
            name: "sigma1 sigma2 = sigma2 sigma1".into(),
            lhs: Word::new([Sigma1, Sigma2]),
            rhs: Word::new([Sigma2, Sigma1]),
            quarter_turns: PH_A,
        },
        Relation {
            name: "sigma1 s2 = s2 sigma1".into(),
            lhs: Word::new([Sigma1, S2]),
            rhs: Word::new([S2, Sigma1]),
            quarter_turns: PH_B,
        },
        Relation {
            name: "sigma3 s2 = s2 sigma3".into(),
            lhs: Word::new([Sigma3, S2]),
            rhs: Word::new([S2, Sigma3]),
            quarter_turns: PH_B,
        },
    ]
}

fn all_relations() -> Vec<Relation> {
    let mut v = d4_exact_relations();
    v.extend(d4_phased_relations());
    v
}

/// Checks every relation exactly on the weight-lattice basis and on the
/// simple coroots.
pub fn verify_relations_weights() -> Report {
    let mut report = Report::new("relations on weights");
    for rel in all_relations() {
        let on_weights = (0..7).all(|j| {
            let h = Weight::fundamental(j);
            act_word_weight(&rel.lhs, &h) == act_word_weight(&rel.rhs, &h)
        });
        let on_coroots = (0..7).all(|j| {
            let mut c = [0i64; 7];
            c[j] = 1;
            let c = Coroot(c);
            act_word_coroot(&rel.lhs, &c) == act_word_coroot(&rel.rhs, &c)
        });
        report.push_exact(rel.name, on_weights && on_coroots, 14);
    }
    report
}

/// Checks every relation exactly on the rational parameter representation.
pub fn verify_relations_params() -> Report {
    let mut report = Report::new("relations on parameters");
    for rel in all_relations() {
        let ok = word_matrix(&rel.lhs) == word_matrix(&rel.rhs);
        report.push_exact(rel.name, ok, 1);
    }
    report
}

/// Checks every relation on random tau-states at the given lattice
/// parameter, comparing slots after the prescribed quarter-turn twist.
///
/// Residuals are relative: `|l - p r| / max(1, |l|, |p r|)` per slot.
pub fn verify_relations_tau<S: Real>(
    samples: u32,
    seed: u64,
    x: Complex<S>,
    tolerance: f64,
) -> Result<Report> {
    let relations = all_relations();
    let mut worst = vec![0f64; relations.len()];
    for sample in 0..samples {
        let params = random_param_state(seed ^ u64::from(sample).wrapping_mul(0x9e37_79b9));
        let st = random_tau_state(seed.wrapping_add(u64::from(sample)), &params, x)?;
        for (ri, rel) in relations.iter().enumerate() {
            let lhs = apply_word_tau(&rel.lhs, &st)?;
            let rhs = apply_word_tau(&rel.rhs, &st)?;
            debug_assert_eq!(
                lhs.params.as_array(),
                rhs.params.as_array(),
                "{} disagreed on parameters",
                rel.name
            );
            for v in TauVar::ALL {
                let l = lhs.get(v);
                let r = phase_factor::<S>(rel.quarter_turns[v.index()]) * rhs.get(v);
                let scale = to_f64(l.norm().max(r.norm())).max(1.0);
                worst[ri] = worst[ri].max(to_f64((l - r).norm()) / scale);
            }
        }
    }
    let mut report = Report::new("relations on tau-states");
    for (rel, w) in relations.iter().zip(worst) {
        report.push_numeric(&rel.name, w, tolerance, samples as usize);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;

    #[test]
    fn relation_inventory_is_complete() {
        // 5 involutions + 10 braid pairs + sigma1^2 + (4 + 5 + 4) commutations.
        assert_eq!(d4_exact_relations().len(), 29);
        assert_eq!(d4_phased_relations().len(), 4);
    }

    #[test]
    fn weights_and_coroots_satisfy_all_relations() {
        let report = verify_relations_weights();
        assert!(report.passed(), "{:?}", report.failures());
    }

    #[test]
    fn parameter_matrices_satisfy_all_relations() {
        let report = verify_relations_params();
        assert!(report.passed(), "{:?}", report.failures());
    }

    #[test]
    fn tau_states_satisfy_all_relations_up_to_phases() {
        for (k, x) in [C64::new(-1.0, 0.0), C64::new(2.0, 1.0), C64::new(0.5, 0.0)]
            .into_iter()
            .enumerate()
        {
            let report = verify_relations_tau(8, 900 + k as u64, x, 1e-9).unwrap();
            assert!(report.passed(), "x = {x}: {:?}", report.failures());
            assert!(report.worst_residual() < 1e-11, "x = {x}");
        }
    }

    #[test]
    fn phased_relations_fail_without_their_phases() {
        // The automorphism square genuinely moves tau-states: dropping the
        // twist must produce an order-one residual.
        let params = random_param_state(4);
        let st = random_tau_state(17, &params, C64::new(2.0, 1.0)).unwrap();
        let rel = &d4_phased_relations()[0];
        let lhs = apply_word_tau(&rel.lhs, &st).unwrap();
        let rhs = apply_word_tau(&rel.rhs, &st).unwrap();
        let mut untwisted_dev = 0f64;
        for v in TauVar::ALL {
            let (l, r) = (lhs.get(v), rhs.get(v));
            untwisted_dev = untwisted_dev.max((l - r).norm() / l.norm().max(r.norm()).max(1.0));
        }
        assert!(
            untwisted_dev > 0.5,
            "twist should be necessary: {untwisted_dev}"
        );
    }

    #[test]
    fn phase_factor_cycles_through_fourth_roots() {
        let i = C64::new(0.0, 1.0);
        for q in 0u8..8 {
            let expect = i.powi(i32::from(q));
            assert!((phase_factor::<f64>(q) - expect).norm() < 1e-15);
        }
    }
}
