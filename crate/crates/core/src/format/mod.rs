//! The on-disk document format.

mod doc;
pub mod json;

pub use doc::{Document, Object, SCHEMA_VERSION};
