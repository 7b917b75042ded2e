//! The birational action induced on lattice quadruples: nine generators
//! acting by explicit rational maps in the four values, with the family
//! parameters carried along exactly.

use super::a1_params::{apply_a1_gen, A1Params};
use super::words::{a1_word, A1Gen};
use super::zvars::{z_quad_from_tau, ZQuad};
use crate::report::Report;
use crate::weyl_tau::{apply_word_tau, random_param_state, random_tau_state};
use crate::{c64, rat_to_c, to_f64, tol, Error, Rat, Real, Result};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Generators acting on lattice quadruples: the reflections of the three
/// families that move lattice values, and the three swaps pairing each of
/// them with the fourth family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Z3Gen {
    SBeta0,
    SBeta1,
    SGamma0,
    SGamma1,
    SZeta0,
    SZeta1,
    PiBetaMu,
    PiGammaMu,
    PiZetaMu,
}

impl Z3Gen {
    pub const ALL: [Z3Gen; 9] = [
        Z3Gen::SBeta0,
        Z3Gen::SBeta1,
        Z3Gen::SGamma0,
        Z3Gen::SGamma1,
        Z3Gen::SZeta0,
        Z3Gen::SZeta1,
        Z3Gen::PiBetaMu,
        Z3Gen::PiGammaMu,
        Z3Gen::PiZetaMu,
    ];

    /// The same generator as an element of the word-level family.
    pub fn a1_gen(self) -> A1Gen {
        match self {
            Z3Gen::SBeta0 => A1Gen::SBeta0,
            Z3Gen::SBeta1 => A1Gen::SBeta1,
            Z3Gen::SGamma0 => A1Gen::SGamma0,
            Z3Gen::SGamma1 => A1Gen::SGamma1,
            Z3Gen::SZeta0 => A1Gen::SZeta0,
            Z3Gen::SZeta1 => A1Gen::SZeta1,
            Z3Gen::PiBetaMu => A1Gen::PiBetaMu,
            Z3Gen::PiGammaMu => A1Gen::PiGammaMu,
            Z3Gen::PiZetaMu => A1Gen::PiZetaMu,
        }
    }

    pub fn name(self) -> &'static str {
        self.a1_gen().name()
    }
}

fn guard<S: Real>(place: &str, den: Complex<S>) -> Result<Complex<S>> {
    let mag = to_f64(den.norm());
    if mag < tol::DEGENERATE {
        return Err(Error::DegenerateDenominator {
            place: place.into(),
            magnitude: mag,
        });
    }
    Ok(den)
}

/// One generator applied to a quadruple and its family parameters.
///
/// The two index-1 reflections and the zeta–mu swap are realised by
/// conjugation with the matching swap, exactly as at the word level.
pub fn apply_gen_z<S: Real>(
    g: Z3Gen,
    quad: &ZQuad<S>,
    params: &A1Params,
) -> Result<(ZQuad<S>, A1Params)> {
    let (z0, z1, z2, z12) = (quad.z0, quad.z1, quad.z2, quad.z12);
    let r = |q: Rat| rat_to_c::<S>(q);
    let (b0, b1) = (params.beta0, params.beta1);
    let (g0, g1) = (params.gamma0, params.gamma1);
    let ze0 = params.zeta0;
    let (m0, m1) = (params.mu0, params.mu1);
    let two = c64::<S>(2.0, 0.0);

    let new_quad = match g {
        Z3Gen::SBeta0 => {
            let c0 = r(b0 + g0 + ze0 - m0);
            let c1 = r(b0 - g0 + ze0 + m0);
            let c2 = r(b0 - g0 - ze0 + m0);
            let c3 = r(b0 + g0 - ze0 - m0);
            let nz0 = (two * r(b0) * z1 * z12 - c0 * z0 * z1 + c1 * z0 * z12)
                / guard("s_beta0: base value", two * r(b0) * z0 + c2 * z1 - c3 * z12)?;
            let nz2 = (two * r(b0) * z1 * z12 + c0 * z1 * z2 - c1 * z2 * z12)
                / guard(
                    "s_beta0: cross value",
                    two * r(b0) * z2 - c2 * z1 + c3 * z12,
                )?;
            ZQuad {
                z0: nz0,
                z1,
                z2: nz2,
                z12,
            }
        }
        Z3Gen::SGamma0 => {
            let c0 = r(b0 - g0 - ze0 - m0);
            let c1 = r(b0 + g0 + ze0 - m0);
            let c2 = r(b0 + g0 - ze0 - m0);
            let c3 = r(b0 - g0 + ze0 - m0);
            let nz0 = (two * r(g0) * z2 * z12 - c0 * z0 * z12 - c1 * z0 * z2)
                / guard(
                    "s_gamma0: base value",
                    two * r(g0) * z0 - c2 * z12 - c3 * z2,
                )?;
            let nz1 = (two * r(g0) * z2 * z12 + c0 * z1 * z12 + c1 * z1 * z2)
                / guard(
                    "s_gamma0: cross value",
                    two * r(g0) * z1 + c2 * z12 + c3 * z2,
                )?;
            ZQuad {
                z0: nz0,
                z1: nz1,
                z2,
                z12,
            }
        }
        Z3Gen::SZeta0 => ZQuad {
            z0: -guard("s_zeta0: base value", z0)?.inv(),
            z1: -guard("s_zeta0: first shift", z1)?.inv(),
            z2: -guard("s_zeta0: second shift", z2)?.inv(),
            z12: -guard("s_zeta0: double shift", z12)?.inv(),
        },
        Z3Gen::PiBetaMu => ZQuad {
            z0: z1,
            z1: z0,
            z2: z12,
            z12: z2,
        },
        Z3Gen::PiGammaMu => ZQuad {
            z0: z2,
            z1: z12,
            z2: z0,
            z12: z1,
        },
        Z3Gen::PiZetaMu => {
            let den = guard("pi_zeta_mu: edge sums", two * (z0 + z2) * (z1 + z12))?;
            let line = |a: Rat, b: Rat, c: Rat, d: Rat| {
                -r(ze0) * (r(a) * z0 + r(b) * z1 + r(c) * z2 + r(d) * z12) / den
            };
            ZQuad {
                z0: line(
                    b0 - g1 + ze0 - m1,
                    b0 + g1 - ze0 - m1,
                    b1 - g1 - ze0 + m0,
                    b1 + g1 - ze0 + m0,
                ),
                z1: line(
                    b1 + g1 - ze0 - m0,
                    b1 - g1 + ze0 - m0,
                    b0 + g1 - ze0 + m1,
                    b0 - g1 - ze0 + m1,
                ),
                z2: line(
                    b1 - g0 - ze0 + m1,
                    b1 + g0 - ze0 + m1,
                    b0 - g0 + ze0 - m0,
                    b0 + g0 - ze0 - m0,
                ),
                z12: line(
                    b0 + g0 - ze0 + m0,
                    b0 - g0 - ze0 + m0,
                    b1 + g0 - ze0 - m1,
                    b1 - g0 + ze0 - m1,
                ),
            }
        }
        Z3Gen::SBeta1 => {
            let (q, p) = apply_gen_z(Z3Gen::PiBetaMu, quad, params)?;
            let (q, p) = apply_gen_z(Z3Gen::SBeta0, &q, &p)?;
            return apply_gen_z(Z3Gen::PiBetaMu, &q, &p);
        }
        Z3Gen::SGamma1 => {
            let (q, p) = apply_gen_z(Z3Gen::PiGammaMu, quad, params)?;
            let (q, p) = apply_gen_z(Z3Gen::SGamma0, &q, &p)?;
            return apply_gen_z(Z3Gen::PiGammaMu, &q, &p);
        }
        Z3Gen::SZeta1 => {
            let (q, p) = apply_gen_z(Z3Gen::PiZetaMu, quad, params)?;
            let (q, p) = apply_gen_z(Z3Gen::SZeta0, &q, &p)?;
            return apply_gen_z(Z3Gen::PiZetaMu, &q, &p);
        }
    };
    Ok((new_quad, apply_a1_gen(g.a1_gen(), params)))
}

/// A word in the quadruple generators, applied left to right.
pub fn apply_word_z<S: Real>(
    word: &[Z3Gen],
    quad: &ZQuad<S>,
    params: &A1Params,
) -> Result<(ZQuad<S>, A1Params)> {
    let mut state = (*quad, *params);
    for g in word {
        state = apply_gen_z(*g, &state.0, &state.1)?;
    }
    Ok(state)
}

/// Draws a free quadruple (four annulus values) and non-degenerate family
/// parameters: no family parameter is 0 or 1, keeping every generator map
/// and its involution well-defined.
pub fn random_z_quad(seed: u64) -> (ZQuad<f64>, A1Params) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        let r = rng.gen_range(0.5f64..2.0);
        let th = rng.gen_range(0.0f64..std::f64::consts::TAU);
        Complex::new(r * th.cos(), r * th.sin())
    };
    let quad = ZQuad {
        z0: draw(),
        z1: draw(),
        z2: draw(),
        z12: draw(),
    };
    let mut param_seed = seed;
    let params = loop {
        let candidate = A1Params::from_params(&random_param_state(param_seed));
        let zero = Rat::from_integer(0);
        if candidate
            .families()
            .iter()
            .all(|&(x0, x1)| x0 != zero && x1 != zero)
        {
            break candidate;
        }
        param_seed = param_seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    };
    (quad, params)
}

/// Relation inventory of the quadruple action: involutions, order-two
/// cross-family products, and the swap conjugation table. Each relation is
/// checked on free random quadruples; parameters must return exactly,
/// values within tolerance.
pub fn verify_relations_z(samples: u32, seed: u64, tolerance: f64) -> Result<Report> {
    use Z3Gen::*;
    let mut relations: Vec<(String, Vec<Z3Gen>, Vec<Z3Gen>)> = Vec::new();
    for g in Z3Gen::ALL {
        relations.push((format!("{}^2 = 1", g.name()), vec![g, g], vec![]));
    }
    let families: [[Z3Gen; 2]; 3] = [[SBeta0, SBeta1], [SGamma0, SGamma1], [SZeta0, SZeta1]];
    for fi in 0..3 {
        for fj in (fi + 1)..3 {
            for a in families[fi] {
                for b in families[fj] {
                    relations.push((
                        format!("({} {})^2 = 1", a.name(), b.name()),
                        vec![a, b, a, b],
                        vec![],
                    ));
                }
            }
        }
    }
    let swaps = [(PiBetaMu, 0usize), (PiGammaMu, 1), (PiZetaMu, 2)];
    for (pi, own) in swaps {
        for (fi, pair) in families.iter().enumerate() {
            for i in 0..2 {
                let target = if fi == own { pair[1 - i] } else { pair[i] };
                relations.push((
                    format!(
                        "{} {} = {} {}",
                        pi.name(),
                        pair[i].name(),
                        target.name(),
                        pi.name()
                    ),
                    vec![pi, pair[i]],
                    vec![target, pi],
                ));
            }
        }
    }

    let mut worst = vec![0f64; relations.len()];
    for s in 0..samples {
        let (quad, params) = random_z_quad(seed.wrapping_add(u64::from(s)));
        for (k, (name, lhs, rhs)) in relations.iter().enumerate() {
            let (ql, pl) = apply_word_z(lhs, &quad, &params)?;
            let (qr, pr) = apply_word_z(rhs, &quad, &params)?;
            if pl != pr {
                return Err(Error::ParameterNormalization {
                    sum: format!("{name}: family parameters disagree"),
                });
            }
            for (l, r) in ql.as_array().into_iter().zip(qr.as_array()) {
                let scale = l.norm().max(r.norm()).max(1.0);
                worst[k] = worst[k].max((l - r).norm() / scale);
            }
        }
    }
    let mut report = Report::new("quadruple action relations");
    for ((name, _, _), w) in relations.iter().zip(worst) {
        report.push_numeric(name, w, tolerance, samples as usize);
    }
    Ok(report)
}

/// Cross-check of the two routes to a transformed quadruple: transform the
/// tau-state by the generator's word and read the quadruple off, or apply
/// the rational map directly to the quadruple.
pub fn cross_check_z_levels<S: Real>(
    samples: u32,
    seed: u64,
    x: Complex<S>,
    tolerance: f64,
) -> Result<Report> {
    let mut worst = vec![0f64; Z3Gen::ALL.len()];
    for s in 0..samples {
        let params = random_param_state(seed ^ u64::from(s).wrapping_mul(0x7f4a_7c15));
        let st = random_tau_state(seed.wrapping_add(u64::from(s)), &params, x)?;
        let quad = z_quad_from_tau(&st)?;
        let a1 = A1Params::from_params(&st.params);
        for (k, g) in Z3Gen::ALL.into_iter().enumerate() {
            let tau_route = z_quad_from_tau(&apply_word_tau(&a1_word(g.a1_gen()), &st)?)?;
            let (z_route, z_params) = apply_gen_z(g, &quad, &a1)?;
            if A1Params::from_params(&apply_word_tau(&a1_word(g.a1_gen()), &st)?.params) != z_params
            {
                return Err(Error::ParameterNormalization {
                    sum: format!("{}: parameter routes disagree", g.name()),
                });
            }
            for (l, r) in tau_route.as_array().into_iter().zip(z_route.as_array()) {
                let scale = to_f64(l.norm().max(r.norm())).max(1.0);
                worst[k] = worst[k].max(to_f64((l - r).norm()) / scale);
            }
        }
    }
    let mut report = Report::new("quadruple action against the tau route");
    for (g, w) in Z3Gen::ALL.into_iter().zip(worst) {
        report.push_numeric(g.name(), w, tolerance, samples as usize);
    }
    Ok(report)
}
