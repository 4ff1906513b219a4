//! Hopf algebras by structure constants, harpoon actions and the identities between them.

mod algebra;
mod data;
pub mod harpoon;
pub mod hom_module;
pub mod identities;
pub mod tensor;

pub use algebra::{AlgebraData, CoalgebraData};
pub use data::{HopfData, Variant};
pub use harpoon::{harpoon, ActionOperator, HarpoonKind, HarpoonSide, Harpoons};
pub use tensor::Tensor3;
