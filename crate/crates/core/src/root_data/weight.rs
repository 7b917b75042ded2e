//! Weight and coroot lattice points with their integer pairing.

use std::ops::{Add, Neg, Sub};

/// Cartan matrix of D4 with node 2 central, rows/columns ordered 0..4.
pub const CARTAN: [[i64; 5]; 5] = [
    [2, 0, -1, 0, 0],
    [0, 2, -1, 0, 0],
    [-1, -1, 2, -1, -1],
    [0, 0, -1, 2, 0],
    [0, 0, -1, 0, 2],
];

/// A point of the weight lattice, written in the basis h0..h6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weight(pub [i64; 7]);

/// A point of the coroot lattice, written in the basis of simple coroots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coroot(pub [i64; 7]);

impl Weight {
    pub const ZERO: Weight = Weight([0; 7]);

    /// The basis weight h_k.
    pub fn fundamental(k: usize) -> Weight {
        let mut c = [0i64; 7];
        c[k] = 1;
        Weight(c)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        let mut c = [0i64; 7];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = self.0[i] + rhs.0[i];
        }
        Weight(c)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        let mut c = [0i64; 7];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = self.0[i] - rhs.0[i];
        }
        Weight(c)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        let mut c = self.0;
        for slot in &mut c {
            *slot = -*slot;
        }
        Weight(c)
    }
}

/// Canonical pairing between a coroot and a weight. The bases are dual
/// (`<coroot_i, h_j> = delta_ij`), so this is the plain dot product.
pub fn pairing(gamma: &Coroot, lambda: &Weight) -> i64 {
    gamma
        .0
        .iter()
        .zip(lambda.0.iter())
        .map(|(g, l)| g * l)
        .sum()
}

/// The simple root alpha_i expressed in the weight basis: for the five D4
/// nodes it is the corresponding Cartan row; the two decorations are
/// alpha_5 = 2 h_5 and alpha_6 = 2 h_6.
pub fn simple_root(i: usize) -> Weight {
    assert!(i <= 6, "simple root index out of range: {i}");
    let mut c = [0i64; 7];
    if i <= 4 {
        c[..5].copy_from_slice(&CARTAN[i]);
    } else {
        c[i] = 2;
    }
    Weight(c)
}

/// The null coroot: pairing with it gives the level that grades the orbits.
pub fn delta_check() -> Coroot {
    Coroot([1, 1, 2, 1, 1, 0, 0])
}
