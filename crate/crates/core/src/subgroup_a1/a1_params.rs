//! The eight reflection parameters of the four rank-one families, their
//! projection from the root-variable parameters, and the family-level
//! action of every subgroup generator.

use super::words::A1Gen;
use crate::weyl_tau::ParamState;
use crate::Rat;

/// Reflection parameters, one pair per family; each pair sums to one.
///
/// `zeta0` is the exponent of the power function the lattice system
/// discretises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct A1Params {
    pub beta0: Rat,
    pub beta1: Rat,
    pub gamma0: Rat,
    pub gamma1: Rat,
    pub zeta0: Rat,
    pub zeta1: Rat,
    pub mu0: Rat,
    pub mu1: Rat,
}

/// Coefficient vectors expressing the four index-1 family parameters as
/// linear forms in the five root-variable parameters (order: beta, gamma,
/// zeta, mu).
pub const FAMILY_VECTORS: [[i64; 5]; 4] = [
    [0, 0, 1, 0, 0],
    [0, 1, 1, 0, 1],
    [0, 1, 1, 1, 0],
    [0, 0, 1, 1, 1],
];

impl A1Params {
    /// Projection from the five root-variable parameters.
    pub fn from_params(p: &ParamState) -> A1Params {
        let one = Rat::from_integer(1);
        let beta1 = p.a(2);
        let gamma1 = p.a(1) + p.a(2) + p.a(4);
        let zeta1 = p.a(1) + p.a(2) + p.a(3);
        let mu1 = p.a(2) + p.a(3) + p.a(4);
        A1Params {
            beta0: one - beta1,
            beta1,
            gamma0: one - gamma1,
            gamma1,
            zeta0: one - zeta1,
            zeta1,
            mu0: one - mu1,
            mu1,
        }
    }

    /// The four `(index-0, index-1)` pairs in family order beta, gamma,
    /// zeta, mu.
    pub fn families(&self) -> [(Rat, Rat); 4] {
        [
            (self.beta0, self.beta1),
            (self.gamma0, self.gamma1),
            (self.zeta0, self.zeta1),
            (self.mu0, self.mu1),
        ]
    }

    fn from_families(f: [(Rat, Rat); 4]) -> A1Params {
        A1Params {
            beta0: f[0].0,
            beta1: f[0].1,
            gamma0: f[1].0,
            gamma1: f[1].1,
            zeta0: f[2].0,
            zeta1: f[2].1,
            mu0: f[3].0,
            mu1: f[3].1,
        }
    }
}

fn reflect0(pair: (Rat, Rat)) -> (Rat, Rat) {
    (-pair.0, pair.1 + pair.0 + pair.0)
}

fn reflect1(pair: (Rat, Rat)) -> (Rat, Rat) {
    (pair.0 + pair.1 + pair.1, -pair.1)
}

fn swap(pair: (Rat, Rat)) -> (Rat, Rat) {
    (pair.1, pair.0)
}

/// Family-level action of a subgroup generator: a reflection moves only
/// its own family pair, a swap flips the indices of its two families, and
/// a rotation permutes whole families.
pub fn apply_a1_gen(g: A1Gen, p: &A1Params) -> A1Params {
    let [b, ga, z, m] = p.families();
    let f = match g {
        A1Gen::SBeta0 => [reflect0(b), ga, z, m],
        A1Gen::SBeta1 => [reflect1(b), ga, z, m],
        A1Gen::SGamma0 => [b, reflect0(ga), z, m],
        A1Gen::SGamma1 => [b, reflect1(ga), z, m],
        A1Gen::SZeta0 => [b, ga, reflect0(z), m],
        A1Gen::SZeta1 => [b, ga, reflect1(z), m],
        A1Gen::SMu0 => [b, ga, z, reflect0(m)],
        A1Gen::SMu1 => [b, ga, z, reflect1(m)],
        A1Gen::PiBetaGamma => [swap(b), swap(ga), z, m],
        A1Gen::PiBetaZeta => [swap(b), ga, swap(z), m],
        A1Gen::PiBetaMu => [swap(b), ga, z, swap(m)],
        A1Gen::PiGammaZeta => [b, swap(ga), swap(z), m],
        A1Gen::PiGammaMu => [b, swap(ga), z, swap(m)],
        A1Gen::PiZetaMu => [b, ga, swap(z), swap(m)],
        A1Gen::R1 => [ga, b, m, z],
        A1Gen::R2 => [z, m, b, ga],
        A1Gen::R3 => [m, z, ga, b],
    };
    A1Params::from_families(f)
}

/// Family-level action of a lattice shift: the directed family gains one
/// on its index-0 parameter, loses one on index 1, and the fourth family
/// swaps indices.
pub fn apply_rho_a1(k: usize, p: &A1Params) -> A1Params {
    let one = Rat::from_integer(1);
    let step = |pair: (Rat, Rat)| (pair.0 + one, pair.1 - one);
    let [b, ga, z, m] = p.families();
    let f = match k {
        0 => [b, ga, step(z), swap(m)],
        1 => [step(b), ga, z, swap(m)],
        2 => [b, step(ga), z, swap(m)],
        other => panic!("shift index must be 0, 1 or 2, got {other}"),
    };
    A1Params::from_families(f)
}
