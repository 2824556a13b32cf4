//! Exact graded character computations for modules over Drinfeld doubles of
//! bosonized Nichols algebras: weights, fusion, Verma and projective
//! characters, and graded BGG reciprocity.

// dense matrix code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod bgg;
pub mod error;
pub mod fusion;
pub mod graded;
pub mod group;
pub mod io;
pub mod profile;
pub mod taft;

pub use error::{Error, Result};
pub use fusion::{DoubleGroup, Weight};
pub use graded::{GradedChar, KElement};
