//! Exact computations with finite-dimensional Hopf algebras given by structure
//! constants: duals and variants, harpoon actions, comodule algebras, Yan-Zhu
//! stabilizers, the Heisenberg double and a catalog of small examples.

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod error;
pub mod exactlin;
pub mod format;
pub mod hopf;
pub mod modcom;
pub mod report;
pub mod yanzhu;
pub mod zoo;

pub use error::{Error, Result};
