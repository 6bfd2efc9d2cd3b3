//! Finite root systems and root data.

mod datum;
mod label;
mod roots;

pub use datum::{Basis, Coweight, LatticeKind, Pi1, RootDatum};
pub use label::{CartanType, Family, SimpleType, TypeLabel};
pub use roots::{Component, Root, RootSystem};
