//! Document model and rendering for the `finspace` command-line tool.

pub mod document;
pub mod render;

pub use document::{ColoringSpec, GroupSpec, PosetDocument, SchemaError};
