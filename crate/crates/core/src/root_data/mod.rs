//! Exact integer data of the affine D4 root system: weights, coroots, the
//! simple reflections and diagram automorphisms, orbit classification under
//! the extended group, and the distinguished translation words.

mod action;
mod orbit;
mod translation;
mod weight;

pub use action::{act_coroot, act_weight, act_word_coroot, act_word_weight, GenSymbol, Word};
pub use orbit::{
    classify_orbit, orbit_ball, orbit_growth, project_p, verify_orbit_lemma, OrbitLabel,
};
pub use translation::{
    displacement_vector, tau_label, tau_label_word, translation_word, TauLabel, TranslationWord,
};
pub use weight::{delta_check, pairing, simple_root, Coroot, Weight, CARTAN};
