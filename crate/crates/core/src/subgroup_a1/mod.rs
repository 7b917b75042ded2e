//! Four commuting rank-one reflection families inside the symmetry group,
//! the lattice shift elements built from them, and the induced birational
//! action on similarity-lattice variables.

mod a1_params;
mod theorem;
mod words;
mod zaction;
mod zvars;

pub use a1_params::{apply_a1_gen, apply_rho_a1, A1Params, FAMILY_VECTORS};
pub use theorem::{verify_a1_relations, verify_shift_theorem};
pub use words::{a1_word, lattice_route, rho_word, A1Gen};
pub use zaction::{
    apply_gen_z, apply_word_z, cross_check_z_levels, random_z_quad, verify_relations_z, Z3Gen,
};
pub use zvars::{
    quad_identity_residuals, verify_quad_identities, z0_functional, z12_from_three,
    z_lattice_value, z_quad_from_tau, ZQuad,
};
