//! Monomial matrix groups: elements, closure, traces, irreducibility and
//! quasi-reflections.

mod element;
mod group;

pub use element::{DiagonalElement, MonomialElement, Permutation};
pub use group::{generate_closure, MonomialGroup, DEFAULT_CAP};
