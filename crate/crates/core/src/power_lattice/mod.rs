//! Three constructions of the discrete power function and their
//! cross-checks.
//!
//! * [`weyl_grid`] reads lattice values off translated tau-variable states;
//! * [`iterate`] solves the cross-ratio / similarity system directly on the
//!   quadrant from its corner seeds;
//! * [`hyper`] evaluates the closed forms built from hypergeometric
//!   determinants;
//! * [`cube`] extends the sheet by a transverse direction and checks the
//!   resulting quad-equation system, including consistency around the cube;
//! * [`compare`] cross-validates the constructions against each other.
//!
//! The closed form and the quadrant iteration evaluate internally in exact
//! rational arithmetic (private `exact` module): the determinants cancel
//! more digits than a machine scalar holds, and the sweep amplifies seed
//! rounding by factors beyond `1e9`, so floating point along either path
//! would not reproduce the values the formulas define. Results are rounded
//! once into the requested scalar at the end.

pub mod compare;
pub mod cube;
mod exact;
pub mod hyper;
pub mod iterate;
pub mod weyl_grid;

pub use compare::compare_three_ways;
pub use cube::{cac_check, cube_grid, verify_cube_faces, Grid3};
pub use hyper::{phi_leading, tau_det, z_closed_form, HyperParams};
pub use iterate::{iterate_special_quadrant, residual_system, Grid2};
pub use weyl_grid::z_grid_weyl;
