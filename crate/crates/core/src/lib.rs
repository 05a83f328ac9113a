//! Weyl-group combinatorics of conormal varieties of Schubert varieties in
//! cominuscule Grassmannians.
//!
//! * [`rootsys`]: Dynkin diagrams, roots, the invariant form.
//! * [`weyl`]: finite and affine Weyl group arithmetic.
//! * [`cominuscule`]: the cominuscule context, the diagram involution and `tau_q`.
//! * [`conormal`]: conormal root sets, smoothness criteria, fibre index sets.
//! * [`detvar`]: type-D signed permutations and skew-symmetric determinantal varieties.

pub mod cominuscule;
pub mod conormal;
pub mod detvar;
pub mod error;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{NodeSet, RootVector, Series};
pub use weyl::{AffineWeylElement, WeylGroup, WeylWord};
