//! Generators of the extended affine Weyl group and their exact linear
//! actions on weights and coroots.

use super::weight::{simple_root, Coroot, Weight};
use std::fmt;

/// One generator: the five simple reflections and the three diagram
/// automorphisms (the third being the product of the first two).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenSymbol {
    S0,
    S1,
    S2,
    S3,
    S4,
    Sigma1,
    Sigma2,
    Sigma3,
}

impl GenSymbol {
    pub const SIMPLE: [GenSymbol; 5] = [
        GenSymbol::S0,
        GenSymbol::S1,
        GenSymbol::S2,
        GenSymbol::S3,
        GenSymbol::S4,
    ];

    /// Node index for a simple reflection; `None` for the automorphisms.
    pub fn node(self) -> Option<usize> {
        match self {
            GenSymbol::S0 => Some(0),
            GenSymbol::S1 => Some(1),
            GenSymbol::S2 => Some(2),
            GenSymbol::S3 => Some(3),
            GenSymbol::S4 => Some(4),
            _ => None,
        }
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GenSymbol::S0 => "s0",
            GenSymbol::S1 => "s1",
            GenSymbol::S2 => "s2",
            GenSymbol::S3 => "s3",
            GenSymbol::S4 => "s4",
            GenSymbol::Sigma1 => "sigma1",
            GenSymbol::Sigma2 => "sigma2",
            GenSymbol::Sigma3 => "sigma3",
        };
        f.write_str(name)
    }
}

/// A group word, stored left to right as written on paper.
///
/// Composition convention: on lattice points the word acts with its
/// rightmost generator first (`w(p) = g1(g2(...gn(p)))`), exactly like
/// reading nested function application. Acting on function-type states
/// (parameters, tau-variables) the same word is realised by substituting
/// generator rules in reading order, which is the field-automorphism
/// composition with the rightmost factor innermost — the two readings agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<GenSymbol>);

impl Word {
    pub fn new(gens: impl Into<Vec<GenSymbol>>) -> Word {
        Word(gens.into())
    }

    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse word: every generator is an involution on the linear level,
    /// so reversing the letters inverts the group element.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Concatenation `self · other` (other acts first on lattice points).
    pub fn then(&self, other: &Word) -> Word {
        let mut gens = self.0.clone();
        gens.extend_from_slice(&other.0);
        Word(gens)
    }

    /// `self^k`; negative exponents use the reversed word.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut gens = Vec::with_capacity(base.0.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            gens.extend_from_slice(&base.0);
        }
        Word(gens)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Action of one generator on a weight.
pub fn act_weight(g: GenSymbol, lambda: &Weight) -> Weight {
    let c = lambda.0;
    match g {
        GenSymbol::S0 | GenSymbol::S1 | GenSymbol::S2 | GenSymbol::S3 | GenSymbol::S4 => {
            let i = g.node().expect("simple reflection has a node");
            let alpha = simple_root(i);
            let mut out = c;
            for (slot, a) in out.iter_mut().zip(alpha.0.iter()) {
                *slot -= c[i] * a;
            }
            Weight(out)
        }
        GenSymbol::Sigma1 => {
            let level = c[0] + c[1] + 2 * c[2] + c[3] + c[4];
            Weight([c[1], c[0], c[2], c[4], c[3], level - c[5], c[6]])
        }
        GenSymbol::Sigma2 => {
            let level = c[0] + c[1] + 2 * c[2] + c[3] + c[4];
            Weight([c[3], c[4], c[2], c[0], c[1], c[5], level - c[6]])
        }
        GenSymbol::Sigma3 => act_weight(GenSymbol::Sigma1, &act_weight(GenSymbol::Sigma2, lambda)),
    }
}

/// Action of one generator on a coroot: the dual of the weight action,
/// characterised by exact invariance of the pairing.
///
/// On the five D4 coroots this is the familiar basis substitution
/// (`coroot_i -> -coroot_i`, `coroot_2 -> coroot_2 + coroot_i`, and the
/// automorphism permutations). Each automorphism reflects its own decoration
/// coroot through the affine combination — `sigma1` sends `coroot_5` to
/// `coroot_0 + coroot_1 + 2 coroot_2 + coroot_3 + coroot_4 - coroot_5` —
/// mirroring how the weight action sends `h_5` to `level - h_5`; the bare
/// sign flip alone would break the pairing against decorated weights.
pub fn act_coroot(g: GenSymbol, gamma: &Coroot) -> Coroot {
    let c = gamma.0;
    match g {
        GenSymbol::S0 | GenSymbol::S1 | GenSymbol::S3 | GenSymbol::S4 => {
            // coroot_i -> -coroot_i, coroot_2 -> coroot_2 + coroot_i
            let i = g.node().expect("simple reflection has a node");
            let mut out = c;
            out[i] = -c[i] + c[2];
            Coroot(out)
        }
        GenSymbol::S2 => {
            // coroot_2 -> -coroot_2, outer coroot_j -> coroot_j + coroot_2
            let mut out = c;
            out[2] = -c[2] + c[0] + c[1] + c[3] + c[4];
            Coroot(out)
        }
        GenSymbol::Sigma1 => Coroot([
            c[1] + c[5],
            c[0] + c[5],
            c[2] + 2 * c[5],
            c[4] + c[5],
            c[3] + c[5],
            -c[5],
            c[6],
        ]),
        GenSymbol::Sigma2 => Coroot([
            c[3] + c[6],
            c[4] + c[6],
            c[2] + 2 * c[6],
            c[0] + c[6],
            c[1] + c[6],
            c[5],
            -c[6],
        ]),
        GenSymbol::Sigma3 => act_coroot(GenSymbol::Sigma1, &act_coroot(GenSymbol::Sigma2, gamma)),
    }
}

/// Word action on a weight, rightmost generator first.
pub fn act_word_weight(w: &Word, lambda: &Weight) -> Weight {
    let mut p = *lambda;
    for g in w.0.iter().rev() {
        p = act_weight(*g, &p);
    }
    p
}

/// Word action on a coroot, rightmost generator first.
pub fn act_word_coroot(w: &Word, gamma: &Coroot) -> Coroot {
    let mut p = *gamma;
    for g in w.0.iter().rev() {
        p = act_coroot(*g, &p);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::weight::{delta_check, pairing};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use GenSymbol::*;

    const ALL: [GenSymbol; 8] = [S0, S1, S2, S3, S4, Sigma1, Sigma2, Sigma3];

    fn random_weight(rng: &mut ChaCha8Rng) -> Weight {
        let mut c = [0i64; 7];
        for slot in &mut c {
            *slot = rng.gen_range(-4..=4);
        }
        Weight(c)
    }

    fn random_coroot(rng: &mut ChaCha8Rng) -> Coroot {
        let mut c = [0i64; 7];
        for slot in &mut c {
            *slot = rng.gen_range(-4..=4);
        }
        Coroot(c)
    }

    #[test]
    fn generators_are_involutions_on_both_lattices() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for g in ALL {
            for _ in 0..20 {
                let w = random_weight(&mut rng);
                assert_eq!(act_weight(g, &act_weight(g, &w)), w, "{g} on weights");
                let c = random_coroot(&mut rng);
                assert_eq!(act_coroot(g, &act_coroot(g, &c)), c, "{g} on coroots");
            }
        }
    }

    #[test]
    fn pairing_is_invariant_under_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let len = rng.gen_range(0..=6);
            let word = Word((0..len).map(|_| ALL[rng.gen_range(0..ALL.len())]).collect());
            let lambda = random_weight(&mut rng);
            let gamma = random_coroot(&mut rng);
            assert_eq!(
                pairing(
                    &act_word_coroot(&word, &gamma),
                    &act_word_weight(&word, &lambda)
                ),
                pairing(&gamma, &lambda),
                "word {word}"
            );
        }
    }

    #[test]
    fn reflection_example_on_a_basis_weight() {
        // s2 h2 = h2 - alpha_2 = h0 + h1 - h2 + h3 + h4
        assert_eq!(
            act_weight(S2, &Weight::fundamental(2)),
            Weight([1, 1, -1, 1, 1, 0, 0])
        );
        // s0 fixes h2 (node 0 coefficient is zero there)
        assert_eq!(
            act_weight(S0, &Weight::fundamental(2)),
            Weight::fundamental(2)
        );
    }

    #[test]
    fn automorphisms_permute_the_outer_basis_weights() {
        assert_eq!(
            act_weight(Sigma1, &Weight::fundamental(0)),
            Weight([0, 1, 0, 0, 0, 1, 0])
        );
        assert_eq!(
            act_weight(Sigma2, &Weight::fundamental(0)),
            Weight([0, 0, 0, 1, 0, 0, 1])
        );
        let via_composite = act_weight(Sigma1, &act_weight(Sigma2, &Weight::fundamental(0)));
        assert_eq!(act_weight(Sigma3, &Weight::fundamental(0)), via_composite);
    }

    #[test]
    fn delta_level_is_preserved() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let d = delta_check();
        for _ in 0..100 {
            let lambda = random_weight(&mut rng);
            let g = ALL[rng.gen_range(0..ALL.len())];
            assert_eq!(pairing(&d, &act_weight(g, &lambda)), pairing(&d, &lambda));
        }
    }

    #[test]
    fn word_algebra() {
        let w = Word::new([S0, Sigma1, S2]);
        assert_eq!(w.inverse().0, vec![S2, Sigma1, S0]);
        assert_eq!(w.pow(2).len(), 6);
        assert_eq!(w.pow(-1), w.inverse());
        assert_eq!(w.pow(0), Word::identity());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let lambda = random_weight(&mut rng);
        // w^-1 w = identity on points
        assert_eq!(act_word_weight(&w.inverse().then(&w), &lambda), lambda);
        assert_eq!(format!("{w}"), "s0 sigma1 s2");
    }
}
