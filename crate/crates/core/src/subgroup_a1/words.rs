//! Words realising four commuting rank-one reflection pairs inside the
//! full group, the swap automorphisms permuting them, and the lattice
//! shift elements composed from both.

use crate::root_data::{GenSymbol, Word};
use std::fmt;
use GenSymbol::*;

/// Generators of the four rank-one subgroups (two reflections per family),
/// the six pairwise index swaps, and the three family rotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum A1Gen {
    SBeta0,
    SBeta1,
    SGamma0,
    SGamma1,
    SZeta0,
    SZeta1,
    SMu0,
    SMu1,
    PiBetaGamma,
    PiBetaZeta,
    PiBetaMu,
    PiGammaZeta,
    PiGammaMu,
    PiZetaMu,
    R1,
    R2,
    R3,
}

impl A1Gen {
    pub const ALL: [A1Gen; 17] = [
        A1Gen::SBeta0,
        A1Gen::SBeta1,
        A1Gen::SGamma0,
        A1Gen::SGamma1,
        A1Gen::SZeta0,
        A1Gen::SZeta1,
        A1Gen::SMu0,
        A1Gen::SMu1,
        A1Gen::PiBetaGamma,
        A1Gen::PiBetaZeta,
        A1Gen::PiBetaMu,
        A1Gen::PiGammaZeta,
        A1Gen::PiGammaMu,
        A1Gen::PiZetaMu,
        A1Gen::R1,
        A1Gen::R2,
        A1Gen::R3,
    ];

    pub const REFLECTIONS: [A1Gen; 8] = [
        A1Gen::SBeta0,
        A1Gen::SBeta1,
        A1Gen::SGamma0,
        A1Gen::SGamma1,
        A1Gen::SZeta0,
        A1Gen::SZeta1,
        A1Gen::SMu0,
        A1Gen::SMu1,
    ];

    pub const SWAPS: [A1Gen; 6] = [
        A1Gen::PiBetaGamma,
        A1Gen::PiBetaZeta,
        A1Gen::PiBetaMu,
        A1Gen::PiGammaZeta,
        A1Gen::PiGammaMu,
        A1Gen::PiZetaMu,
    ];

    pub const ROTATIONS: [A1Gen; 3] = [A1Gen::R1, A1Gen::R2, A1Gen::R3];

    pub fn name(self) -> &'static str {
        match self {
            A1Gen::SBeta0 => "s_beta0",
            A1Gen::SBeta1 => "s_beta1",
            A1Gen::SGamma0 => "s_gamma0",
            A1Gen::SGamma1 => "s_gamma1",
            A1Gen::SZeta0 => "s_zeta0",
            A1Gen::SZeta1 => "s_zeta1",
            A1Gen::SMu0 => "s_mu0",
            A1Gen::SMu1 => "s_mu1",
            A1Gen::PiBetaGamma => "pi_beta_gamma",
            A1Gen::PiBetaZeta => "pi_beta_zeta",
            A1Gen::PiBetaMu => "pi_beta_mu",
            A1Gen::PiGammaZeta => "pi_gamma_zeta",
            A1Gen::PiGammaMu => "pi_gamma_mu",
            A1Gen::PiZetaMu => "pi_zeta_mu",
            A1Gen::R1 => "r1",
            A1Gen::R2 => "r2",
            A1Gen::R3 => "r3",
        }
    }
}

impl fmt::Display for A1Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The defining word of each subgroup generator.
pub fn a1_word(g: A1Gen) -> Word {
    match g {
        A1Gen::SBeta0 => Word::new([S4, S3, S1, S0, S2, S4, S3, S1, S0]),
        A1Gen::SBeta1 => Word::new([S2]),
        A1Gen::SGamma0 => Word::new([S0, S3, S2, S0, S3]),
        A1Gen::SGamma1 => Word::new([S1, S4, S2, S1, S4]),
        A1Gen::SZeta0 => Word::new([Sigma2, S1, S3, S2, S1, S3, Sigma2]),
        A1Gen::SZeta1 => Word::new([S1, S3, S2, S1, S3]),
        A1Gen::SMu0 => Word::new([S0, S1, S2, S0, S1]),
        A1Gen::SMu1 => Word::new([S3, S4, S2, S3, S4]),
        A1Gen::PiBetaGamma => Word::new([Sigma2, S4, S3, S1, S0]),
        A1Gen::PiBetaZeta => Word::new([Sigma3, S4, S3, S1, S0]),
        A1Gen::PiBetaMu => Word::new([Sigma1, S4, S3, S1, S0]),
        A1Gen::PiGammaZeta => Word::new([Sigma1]),
        A1Gen::PiGammaMu => Word::new([Sigma3]),
        A1Gen::PiZetaMu => Word::new([Sigma2]),
        A1Gen::R1 => Word::new([S1, S4]),
        A1Gen::R2 => Word::new([S1, S3]),
        A1Gen::R3 => Word::new([S3, S4]),
    }
}

/// Lattice shift words: index 1 and 2 step the two planar lattice
/// directions, index 0 steps the transverse (cube) direction. Each shift is
/// a family reflection followed by the swap pairing that family with the
/// fourth one.
pub fn rho_word(k: usize) -> Word {
    match k {
        0 => a1_word(A1Gen::SZeta0).then(&a1_word(A1Gen::PiZetaMu)),
        1 => a1_word(A1Gen::SBeta0).then(&a1_word(A1Gen::PiBetaMu)),
        2 => a1_word(A1Gen::SGamma0).then(&a1_word(A1Gen::PiGammaMu)),
        other => panic!("shift index must be 0, 1 or 2, got {other}"),
    }
}

/// The word `rho1^l1 rho2^l2` routing from the base point to lattice site
/// `(l1, l2)` (negative exponents via reversal).
pub fn lattice_route(l1: i64, l2: i64) -> Word {
    rho_word(1).pow(l1).then(&rho_word(2).pow(l2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{act_word_weight, tau_label, tau_label_word, Weight};
    use crate::weyl_tau::word_matrix;

    #[test]
    fn all_generators_are_involutions_on_parameters() {
        let id = word_matrix(&Word::identity());
        for g in A1Gen::ALL {
            let w = a1_word(g);
            assert_eq!(word_matrix(&w.then(&w)), id, "{g}");
        }
    }

    #[test]
    fn shift_words_move_the_base_weight_as_frozen() {
        let h0 = Weight::fundamental(0);
        let rho1 = act_word_weight(&rho_word(1), &h0);
        let rho2 = act_word_weight(&rho_word(2), &h0);
        let rho12 = act_word_weight(&rho_word(1).then(&rho_word(2)), &h0);
        assert_eq!(rho1.0, [0, -1, 1, 0, 0, 1, 0]);
        assert_eq!(rho2.0, [0, 0, 0, 0, 1, 1, 1]);
        assert_eq!(rho12.0, [0, 0, 1, -1, 0, 0, 1]);
        let shift = |k: usize| (act_word_weight(&rho_word(k).pow(2), &h0) - h0).0;
        assert_eq!(shift(0), [-1, 1, 0, 1, -1, 0, 0]);
        assert_eq!(shift(1), [-1, -1, 2, -1, -1, 0, 0]);
        assert_eq!(shift(2), [-1, 1, 0, -1, 1, 0, 0]);
    }

    #[test]
    fn site_labels_match_the_shift_route_on_weights() {
        // The translation-monomial labels attached to lattice sites reach
        // the same weights as the corresponding shift-word routes, both for
        // the denominator (the site itself) and the numerator (the site
        // displaced once along the transverse direction, squared).
        let h0 = Weight::fundamental(0);
        for l1 in -2i64..=2 {
            for l2 in -2i64..=2 {
                let label = tau_label(l1, l2);
                let route = lattice_route(l1, l2);
                assert_eq!(
                    act_word_weight(&tau_label_word(&label.denominator), &h0),
                    act_word_weight(&route, &h0),
                    "denominator at ({l1},{l2})"
                );
                assert_eq!(
                    act_word_weight(&tau_label_word(&label.numerator), &h0),
                    act_word_weight(&route.then(&rho_word(0).pow(2)), &h0),
                    "numerator at ({l1},{l2})"
                );
            }
        }
    }

    #[test]
    fn word_lengths_are_as_defined() {
        assert_eq!(a1_word(A1Gen::SBeta0).len(), 9);
        assert_eq!(a1_word(A1Gen::SBeta1).len(), 1);
        assert_eq!(a1_word(A1Gen::SZeta0).len(), 7);
        assert_eq!(rho_word(0).len(), 8);
        assert_eq!(rho_word(1).len(), 14);
        assert_eq!(rho_word(2).len(), 6);
    }
}
