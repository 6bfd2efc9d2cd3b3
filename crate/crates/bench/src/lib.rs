//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use wqbg_core::coxeter::DEFAULT_BUDGET;
use wqbg_core::{AffineGroup, EnumeratedGroup, LatticeKind, QuantumBruhatGraph, RootDatum};

pub fn enumerate(label: &str) -> Arc<EnumeratedGroup> {
    Arc::new(EnumeratedGroup::from_label(label, DEFAULT_BUDGET).expect("known label"))
}

pub fn graph(label: &str) -> QuantumBruhatGraph {
    QuantumBruhatGraph::build_generalized(enumerate(label)).expect("graph builds")
}

pub fn affine(label: &str, lattice: LatticeKind) -> AffineGroup {
    let datum = Arc::new(RootDatum::from_label(label, lattice).expect("crystallographic"));
    AffineGroup::new(datum, enumerate(label)).expect("consistent group")
}
