//! Exact-arithmetic homology of finite posets (finite T0-spaces).
//!
//! The crate computes integer homology through chain complexes of chains
//! ("f-homology"), spectral sequences of antichain-induced filtrations,
//! quasicellular and discrete-Morse reductions, Mobius-function formulas
//! and regular covers described by group colorings.

pub mod complex;
pub mod cover;
pub mod error;
pub mod linalg;
pub mod mobius;
pub mod morse;
pub mod poset;
pub mod reduction;
pub mod samples;
pub mod spectral;

pub use error::{Error, Result};
pub use linalg::{AbelianGroup, IntMatrix};
pub use poset::{Chain, Poset};
