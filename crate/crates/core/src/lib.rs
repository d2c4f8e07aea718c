//! Exact machinery for cross t-intersecting families of subsets of `[n]`.
//!
//! Subsets double as lattice walks (an element is an up-step, a missing
//! element a right-step). On top of that the crate provides exact p-weights,
//! shifting, exhaustive up-set search over tiny ground sets, and a registry of
//! scalar bound certificates evaluated in exact rational arithmetic.

pub mod certify;
pub mod error;
pub mod family;
pub mod mask;
pub mod measure;
pub mod rat;
pub mod search;
pub mod shift;
pub mod walk;

pub use error::{Error, Result};
pub use family::Family;
pub use mask::SubsetMask;
pub use rat::Rat;
pub use walk::WalkClass;
