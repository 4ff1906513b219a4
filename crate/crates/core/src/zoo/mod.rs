//! Constructors for the example families and checks of their explicit isomorphisms.

mod coideal;
mod galois;
mod group_stab;
mod groups;
mod taft;
mod twisted;

pub use coideal::{coideal_subalgebra, coideal_subalgebra_check};
pub use galois::{galois_build, galois_check, galois_relations, sign_graded_extension, GaloisData, HopfInclusion};
pub use group_stab::group_stab_iso_check;
pub use groups::{dual_group_algebra, group_algebra, group_algebra_over, standard_rep, GroupTable};
pub use taft::{sweedler, taft, taft_over};
pub use twisted::{klein_sign_cocycle, klein_simple_module, twisted_group_algebra, Cocycle};
