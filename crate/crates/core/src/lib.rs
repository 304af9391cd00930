//! Exact computations with conjugacy classes in inner forms of `GL_n`:
//! elementary-divisor classification, transfer to the quasi-split form,
//! induction, closure order and centralizers, together with Haar-measure
//! constants and Arthur's cone functions on `a_0`.
//!
//! Everything is exact. Rationals are [`num_rational::BigRational`]; π and
//! the discriminant norm appear only as formal symbols with tracked exponents.

pub mod arthur;
pub mod brauer;
pub mod checks;
pub mod classes;
pub mod cli;
pub mod error;
pub mod incidence;
pub mod measures;
pub mod partitions;
pub mod ratio;
pub mod samples;
pub mod split_oracle;

pub use brauer::{BrauerClass, CsaAlgebra, FieldSpec, IrreducibleSpec, LocalInvariant, Place, PlaceKind, Registry};
pub use classes::{CharPoly, ConjClass, LeviShape};
pub use error::{Error, Result};
pub use partitions::Partition;
pub use ratio::Q;
