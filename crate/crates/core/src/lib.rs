//! Quantum Bruhat graphs, admissible sets, reflection lengths and the
//! dimension formula for affine Deligne–Lusztig varieties `X(μ, b)`.

pub mod affine;
pub mod cartan;
pub mod coxeter;
pub mod dimension;
pub mod error;
pub mod linalg;
pub mod newton;
pub mod qbg;
pub mod scalar;

pub use affine::{AdmBudget, AffineElement, AffineGroup};
pub use cartan::{Basis, CartanType, Coweight, LatticeKind, RootDatum, RootSystem, TypeLabel};
pub use coxeter::{Automorphism, CoxeterGroup, EnumeratedGroup, GroupElement};
pub use dimension::DimensionReport;
pub use newton::SigmaConjClass;
pub use qbg::QuantumBruhatGraph;
pub use error::{Error, Result};
pub use scalar::{Zphi, Q};
