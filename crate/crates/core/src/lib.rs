//! Exact tools for monomial subgroups of `SL(n, C)`: cyclotomic arithmetic,
//! group closure, semi-invariants, the weak-exceptionality verdict and a
//! reproducible verification suite.

pub mod classify;
pub mod cyclotomic;
mod error;
pub mod monogroup;
pub mod paperlab;
pub mod semiinv;

pub use error::{Error, Result};
