//! Yan-Zhu stabilizers in both chiralities and the structures around them.

mod checks;
mod dual;
mod duality;
mod heisenberg;
mod hopf_module;
mod stab;

pub use checks::{dim_formula_check, faithfulness_check, stab_coinvariants_check, stabmodhopf_check, tensor_dual_object_check};
pub use dual::{dual_factorization_check, dual_stab_space, hom_s_tensor_h, r_matrix, tensor_h_rep};
pub use duality::{correspondence_map, duality_check, upsilon};
pub use heisenberg::{heisenberg, heisenberg_check, HeisenbergData};
pub use hopf_module::{
    base_end_dual_action, base_end_h_action, dual_end_left_action, dual_end_right_action, hopf_module_checks,
};
pub use stab::{dual_tensor_rep, ell_matrix, hom_k, hom_k_dual_tensor, stab_space, Chirality, StabSpace};
