//! Modules, comodules, comodule algebras and module algebras.

mod comodule;
pub mod ideals;
mod module;
mod smash;

pub use comodule::{module_comodule_dictionary, ComodAlg, ComoduleStr, ModAlg};
pub use ideals::{
    h_ideal_closure, h_indecomposable, h_simplicity, is_h_ideal, DecompositionStatus, DecompositionVerdict,
    IdealSide, SimplicityStatus, SimplicityVerdict,
};
pub use module::{ModuleRep, Side};
pub use smash::{opposite_correspondence, smash_product};
