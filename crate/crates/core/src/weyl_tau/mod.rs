//! The extended affine Weyl group acting on root-variable parameters and on
//! the nine tau-variables.

mod params;
mod relations;
mod tau;

pub use params::{
    apply_gen_params, apply_word_params, gen_matrix, random_param_state, word_matrix, Mat5,
    ParamState,
};
pub use relations::{
    d4_exact_relations, d4_phased_relations, phase_factor, verify_relations_params,
    verify_relations_tau, verify_relations_weights, Relation,
};
pub use tau::{apply_gen_tau, apply_word_tau, random_tau_state, TauState, TauVar};
