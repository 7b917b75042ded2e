//! The nine tau-variables and the birational group action on them.

use super::params::{apply_gen_params, ParamState};
use crate::numerics::{make_branch_context, BranchContext};
use crate::root_data::{GenSymbol, Word};
use crate::{c64, cvt, rat_to, to_f64, tol, Error, Real, Result};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Names of the nine tau-variables: the five orbit seeds, the three
/// automorphism companions of the central one, and its reflection companion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TauVar {
    T0,
    T1,
    T2,
    T3,
    T4,
    T2Sigma1,
    T2Sigma2,
    T2Sigma3,
    T2Reflected,
}

impl TauVar {
    pub const ALL: [TauVar; 9] = [
        TauVar::T0,
        TauVar::T1,
        TauVar::T2,
        TauVar::T3,
        TauVar::T4,
        TauVar::T2Sigma1,
        TauVar::T2Sigma2,
        TauVar::T2Sigma3,
        TauVar::T2Reflected,
    ];

    pub fn index(self) -> usize {
        match self {
            TauVar::T0 => 0,
            TauVar::T1 => 1,
            TauVar::T2 => 2,
            TauVar::T3 => 3,
            TauVar::T4 => 4,
            TauVar::T2Sigma1 => 5,
            TauVar::T2Sigma2 => 6,
            TauVar::T2Sigma3 => 7,
            TauVar::T2Reflected => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TauVar::T0 => "tau0",
            TauVar::T1 => "tau1",
            TauVar::T2 => "tau2",
            TauVar::T3 => "tau3",
            TauVar::T4 => "tau4",
            TauVar::T2Sigma1 => "tau2^(sigma1)",
            TauVar::T2Sigma2 => "tau2^(sigma2)",
            TauVar::T2Sigma3 => "tau2^(sigma3)",
            TauVar::T2Reflected => "tau2^(s2)",
        }
    }
}

/// Parameters, branch data, and the nine tau-values.
///
/// Invariant: the three expressions
/// `x tau2 + sqrt_x sqrt_xm1 tau2^(sigma1)`,
/// `-i sqrt_x tau2^(sigma2)` and
/// `tau2 - i sqrt_xm1 tau2^(sigma3)`
/// agree (the linear constraint tying the central tau to its companions);
/// every generator map preserves it.
#[derive(Debug, Clone)]
pub struct TauState<S: Real> {
    pub params: ParamState,
    pub ctx: BranchContext<S>,
    pub tau: [Complex<S>; 9],
}

impl<S: Real> TauState<S> {
    pub fn get(&self, v: TauVar) -> Complex<S> {
        self.tau[v.index()]
    }

    /// The two independent residuals of the linear constraint, absolute.
    pub fn constraint_residuals(&self) -> (S, S) {
        let i = c64::<S>(0.0, 1.0);
        let t = |v: TauVar| self.get(v);
        let e1 =
            self.ctx.x * t(TauVar::T2) + self.ctx.sqrt_x * self.ctx.sqrt_xm1 * t(TauVar::T2Sigma1);
        let e2 = -i * self.ctx.sqrt_x * t(TauVar::T2Sigma2);
        let e3 = t(TauVar::T2) - i * self.ctx.sqrt_xm1 * t(TauVar::T2Sigma3);
        ((e1 - e2).norm(), (e2 - e3).norm())
    }

    /// Largest constraint residual relative to the constraint's own scale.
    pub fn constraint_residual_rel(&self) -> f64 {
        let (r1, r2) = self.constraint_residuals();
        let scale = self
            .get(TauVar::T2)
            .norm()
            .max(self.get(TauVar::T2Sigma1).norm())
            .max(self.get(TauVar::T2Sigma2).norm())
            .max(S::one());
        to_f64(r1.max(r2) / scale)
    }
}

fn check_denominator<S: Real>(gen: GenSymbol, var: TauVar, value: Complex<S>) -> Result<()> {
    let mag = to_f64(value.norm());
    if mag < tol::DEGENERATE {
        return Err(Error::DegenerateDenominator {
            place: format!("{gen}: {}", var.name()),
            magnitude: mag,
        });
    }
    Ok(())
}

/// Product tau0 tau1 tau3 tau4 appearing in every reflection correction.
fn tau0134<S: Real>(t: &[Complex<S>; 9]) -> Complex<S> {
    t[0] * t[1] * t[3] * t[4]
}

/// Value the central reflection would give `tau2^(sigma1)`; shared by the
/// `s2` and `sigma1` rules.
fn s2_image_t2s1<S: Real>(st: &TauState<S>) -> Complex<S> {
    let a2 = rat_to::<S>(st.params.a(2));
    let u = st.ctx.u;
    let v = st.ctx.v;
    let t = &st.tau;
    (t[5] * t[8] + Complex::new(a2, S::zero()) * (u.powi(4) * v.powi(2)).inv() * tau0134(t)) / t[2]
}

/// Value the central reflection would give `tau2^(sigma2)`; shared by the
/// `s2` and `sigma2` rules.
fn s2_image_t2s2<S: Real>(st: &TauState<S>) -> Complex<S> {
    let a2 = rat_to::<S>(st.params.a(2));
    let i = c64::<S>(0.0, 1.0);
    let u = st.ctx.u;
    let t = &st.tau;
    (t[6] * t[8] + i * Complex::new(a2, S::zero()) * u.powi(4).inv() * tau0134(t)) / t[2]
}

fn s2_image_t2s3<S: Real>(st: &TauState<S>) -> Complex<S> {
    let a2 = rat_to::<S>(st.params.a(2));
    let i = c64::<S>(0.0, 1.0);
    let u = st.ctx.u;
    let v = st.ctx.v;
    let t = &st.tau;
    (t[7] * t[8] + i * Complex::new(a2, S::zero()) * (u.powi(2) * v.powi(2)).inv() * tau0134(t))
        / t[2]
}

/// One generator's substitution map on a tau-state.
///
/// Variables not named by a rule are unchanged. All right-hand sides read
/// the incoming state; parameters update alongside through the exact
/// rational action.
pub fn apply_gen_tau<S: Real>(g: GenSymbol, st: &TauState<S>) -> Result<TauState<S>> {
    let ctx = st.ctx;
    let (u, v) = (ctx.u, ctx.v);
    let i = c64::<S>(0.0, 1.0);
    let t = &st.tau;
    let a = |k: usize| Complex::new(rat_to::<S>(st.params.a(k)), S::zero());
    let mut nt = *t;
    match g {
        GenSymbol::S0 => {
            check_denominator(g, TauVar::T0, t[0])?;
            let uv2 = u.powi(2) * v.powi(2);
            nt[0] = uv2 * t[5] / t[0];
            nt[8] = (uv2 * t[5] * t[8] - a(0) * u.powi(2).inv() * tau0134(t)) / t[0].powi(2);
        }
        GenSymbol::S1 => {
            check_denominator(g, TauVar::T1, t[1])?;
            nt[1] = t[2] / t[1];
            nt[8] = t[8] * t[2] / t[1].powi(2);
        }
        GenSymbol::S2 => {
            check_denominator(g, TauVar::T2, t[2])?;
            nt[2] = t[8];
            nt[8] = t[2];
            nt[5] = s2_image_t2s1(st);
            nt[6] = s2_image_t2s2(st);
            nt[7] = s2_image_t2s3(st);
        }
        GenSymbol::S3 => {
            check_denominator(g, TauVar::T3, t[3])?;
            let c = -i * v.powi(2);
            nt[3] = c * t[7] / t[3];
            nt[8] = (c * t[7] * t[8] - a(3) * u.powi(2).inv() * tau0134(t)) / t[3].powi(2);
        }
        GenSymbol::S4 => {
            check_denominator(g, TauVar::T4, t[4])?;
            let c = -i * u.powi(2);
            nt[4] = c * t[6] / t[4];
            nt[8] = (c * t[6] * t[8] - a(4) * u.powi(2).inv() * tau0134(t)) / t[4].powi(2);
        }
        GenSymbol::Sigma1 => {
            check_denominator(g, TauVar::T2, t[2])?;
            nt[0] = u * v * t[1];
            nt[1] = (u * v).inv() * t[0];
            nt[3] = u.inv() * v * t[4];
            nt[4] = u * v.inv() * t[3];
            nt[2] = t[5];
            nt[5] = t[2];
            nt[6] = t[7];
            nt[7] = t[6];
            nt[8] = -s2_image_t2s1(st);
        }
        GenSymbol::Sigma2 => {
            check_denominator(g, TauVar::T2, t[2])?;
            // e^{-i pi/4} and its conjugate
            let h = cvt::<S>(std::f64::consts::FRAC_1_SQRT_2);
            let e = Complex::new(h, -h);
            let ebar = Complex::new(h, h);
            nt[0] = e * u * t[3];
            nt[1] = ebar * u.inv() * t[4];
            nt[3] = e * u.inv() * t[0];
            nt[4] = ebar * u * t[1];
            nt[2] = t[6];
            nt[5] = -t[7];
            nt[6] = -t[2];
            nt[7] = t[5];
            nt[8] = s2_image_t2s2(st);
        }
        GenSymbol::Sigma3 => {
            // Composite: sigma1's substitution first, then sigma2's.
            return apply_gen_tau(GenSymbol::Sigma2, &apply_gen_tau(GenSymbol::Sigma1, st)?);
        }
    }
    let out = TauState {
        params: apply_gen_params(g, &st.params),
        ctx,
        tau: nt,
    };
    debug_assert!(
        out.constraint_residual_rel() < 1e-6,
        "{g} broke the tau constraint: residual {}",
        out.constraint_residual_rel()
    );
    Ok(out)
}

/// A word acting on a tau-state: substitution rules applied in reading
/// order (equivalently, the automorphism composition with the rightmost
/// factor innermost).
pub fn apply_word_tau<S: Real>(w: &Word, st: &TauState<S>) -> Result<TauState<S>> {
    let mut state = st.clone();
    for (step, g) in w.0.iter().enumerate() {
        state = apply_gen_tau(*g, &state).map_err(|e| match e {
            Error::DegenerateDenominator { place, magnitude } => Error::DegenerateDenominator {
                place: format!("word step {step}, {place}"),
                magnitude,
            },
            other => other,
        })?;
    }
    Ok(state)
}

/// Draws a random tau-state at the given parameters and lattice parameter.
///
/// Seven of the nine variables are sampled uniformly on the annulus
/// 0.5 <= |tau| <= 2; the remaining two companions are solved from the
/// linear constraint. Configurations where a solved value falls below
/// [`tol::SAMPLE_MIN`] are resampled (bounded attempts).
pub fn random_tau_state<S: Real>(
    seed: u64,
    params: &ParamState,
    x: Complex<S>,
) -> Result<TauState<S>> {
    const ATTEMPTS: u32 = 64;
    let ctx = make_branch_context(x)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let i = c64::<S>(0.0, 1.0);
    for _ in 0..ATTEMPTS {
        let mut draw = || {
            let r = rng.gen_range(0.5f64..2.0);
            let th = rng.gen_range(0.0f64..std::f64::consts::TAU);
            c64::<S>(r * th.cos(), r * th.sin())
        };
        let t0 = draw();
        let t1 = draw();
        let t2 = draw();
        let t3 = draw();
        let t4 = draw();
        let t2s2 = draw();
        let t2r = draw();
        let t2s1 = (-i * ctx.sqrt_x * t2s2 - ctx.x * t2) / (ctx.sqrt_x * ctx.sqrt_xm1);
        let t2s3 = -i * (t2 + i * ctx.sqrt_x * t2s2) / ctx.sqrt_xm1;
        let min = cvt::<S>(tol::SAMPLE_MIN);
        if t2s1.norm() > min && t2s3.norm() > min {
            return Ok(TauState {
                params: *params,
                ctx,
                tau: [t0, t1, t2, t3, t4, t2s1, t2s2, t2s3, t2r],
            });
        }
    }
    Err(Error::ResampleExhausted { attempts: ATTEMPTS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_tau::params::random_param_state;
    use crate::{rel_dev, C64};
    use GenSymbol::*;

    fn sample(seed: u64) -> TauState<f64> {
        random_tau_state(seed, &random_param_state(13), C64::new(2.0, 1.0)).unwrap()
    }

    #[test]
    fn sampled_states_satisfy_the_constraint() {
        for seed in 0..20 {
            let st = sample(seed);
            assert!(st.constraint_residual_rel() < 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn every_generator_preserves_the_constraint() {
        let st = sample(42);
        for g in [S0, S1, S2, S3, S4, Sigma1, Sigma2, Sigma3] {
            let next = apply_gen_tau(g, &st).unwrap();
            assert!(
                next.constraint_residual_rel() < 1e-12,
                "{g}: {}",
                next.constraint_residual_rel()
            );
        }
    }

    #[test]
    fn composite_automorphism_composes_left_to_right() {
        let st = sample(7);
        // sigma1 then sigma2 moves tau0 to e^{-i pi/4} v tau4.
        let w = Word::new([Sigma1, Sigma2]);
        let got = apply_word_tau(&w, &st).unwrap().get(TauVar::T0);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let want = C64::new(h, -h) * st.ctx.v * st.get(TauVar::T4);
        assert!(rel_dev(got, want) < 1e-13, "{got} vs {want}");
        // And the packaged composite matches the two-step word.
        let via_sigma3 = apply_gen_tau(Sigma3, &st).unwrap();
        let via_word = apply_word_tau(&w, &st).unwrap();
        for v in TauVar::ALL {
            assert!(rel_dev(via_sigma3.get(v), via_word.get(v)) < 1e-14);
        }
    }

    #[test]
    fn central_reflection_swaps_the_companion_pair() {
        let st = sample(3);
        let next = apply_gen_tau(S2, &st).unwrap();
        assert_eq!(next.get(TauVar::T2), st.get(TauVar::T2Reflected));
        assert_eq!(next.get(TauVar::T2Reflected), st.get(TauVar::T2));
        // Parameters flip the central sign.
        assert_eq!(next.params.a(2), -st.params.a(2));
    }

    #[test]
    fn degenerate_denominator_is_reported_with_location() {
        let mut st = sample(5);
        st.tau[0] = C64::new(0.0, 0.0);
        let err = apply_gen_tau(S0, &st).unwrap_err();
        match err {
            Error::DegenerateDenominator { place, .. } => {
                assert!(place.contains("s0") && place.contains("tau0"), "{place}");
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = apply_word_tau(&Word::new([S1, S0]), &st).unwrap_err();
        match err {
            Error::DegenerateDenominator { place, .. } => {
                assert!(place.contains("step 1"), "{place}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let a = sample(11);
        let b = sample(11);
        for v in TauVar::ALL {
            assert_eq!(a.get(v), b.get(v));
        }
    }
}
