//! Finite Coxeter groups: elements, Bruhat order, automorphisms, twisted classes.

mod automorphism;
mod element;
mod enumerate;
mod twisted;
mod witness;

pub use automorphism::Automorphism;
pub use element::{format_word, parse_word, CoxeterGroup, GroupElement};
pub use enumerate::{EnumeratedGroup, DEFAULT_BUDGET};
pub use twisted::{class_min_reflection_length, max_length_twisted_coset, twisted_class, TwistedClass};
pub use witness::{
    build_witness, check_induction_row, id_witness_word, induction_row, irreducible_witness_word,
    reflection_length_of_class, witness_word, InductionRow, RowCheck, Witness,
};
