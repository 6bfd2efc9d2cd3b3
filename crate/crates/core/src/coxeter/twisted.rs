//! σ-twisted conjugacy classes and the maximum `max{ℓ(x) : x ≤ σ(x)w0}`.

use rayon::prelude::*;
use serde::Serialize;

use super::automorphism::Automorphism;
use super::enumerate::EnumeratedGroup;

/// Orbit of `representative` under `w ↦ x w σ(x)⁻¹`, as sorted element indices.
#[derive(Clone, Debug, Serialize)]
pub struct TwistedClass {
    pub representative: u32,
    pub members: Vec<u32>,
    pub sigma: Automorphism,
}

impl TwistedClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: u32) -> bool {
        self.members.binary_search(&w).is_ok()
    }
}

pub fn twisted_class(e: &EnumeratedGroup, w: u32, sigma: &Automorphism) -> TwistedClass {
    let mut seen = vec![false; e.len()];
    let mut stack = vec![w];
    seen[w as usize] = true;
    let mut members = Vec::new();
    while let Some(v) = stack.pop() {
        members.push(v);
        for i in 0..e.rank() {
            let u = e.mul_simple_left(i, e.mul_simple_right(v, sigma.perm()[i]));
            if !seen[u as usize] {
                seen[u as usize] = true;
                stack.push(u);
            }
        }
    }
    members.sort_unstable();
    TwistedClass {
        representative: w,
        members,
        sigma: sigma.clone(),
    }
}

/// `ℓ_R(O) = min{ℓ_R(w) : w ∈ O}` with a minimizing member.
pub fn class_min_reflection_length(e: &EnumeratedGroup, class: &TwistedClass) -> (usize, u32) {
    class
        .members
        .par_iter()
        .map(|&w| (e.reflection_length(w), w))
        .min()
        .expect("classes are nonempty")
}

/// `max{ℓ(x) : x ≤ σ(x)w0}` by exhaustive scan; the witness is the smallest
/// index of maximal length.
pub fn max_length_twisted_coset(e: &EnumeratedGroup, sigma: &Automorphism) -> (usize, u32) {
    let sig = e.sigma_table(sigma);
    let tw0 = e.times_longest_table();
    (0..e.len() as u32)
        .into_par_iter()
        .filter(|&x| e.bruhat_leq(x, tw0[sig[x as usize] as usize]))
        .map(|x| (e.length(x), std::cmp::Reverse(x)))
        .max()
        .map(|(l, x)| (l, x.0))
        .expect("the identity always qualifies")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::enumerate::DEFAULT_BUDGET;

    fn eg(l: &str) -> EnumeratedGroup {
        EnumeratedGroup::from_label(l, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn a2_class_of_w0() {
        let e = eg("A2");
        let id = Automorphism::identity(2);
        let c = twisted_class(&e, e.longest(), &id);
        assert_eq!(c.len(), 3);
        assert_eq!(class_min_reflection_length(&e, &c).0, 1);
    }

    #[test]
    fn twisted_examples() {
        let e = eg("D4");
        let tri = Automorphism::standard_twist(e.group().roots(), 3).unwrap();
        let c = twisted_class(&e, e.longest(), &tri);
        assert_eq!(class_min_reflection_length(&e, &c).0, 2);
        let f = eg("F4");
        let flip = Automorphism::standard_twist(f.group().roots(), 2).unwrap();
        let c = twisted_class(&f, f.longest(), &flip);
        assert!(c.contains(f.identity()));
        assert_eq!(class_min_reflection_length(&f, &c).0, 0);
    }

    #[test]
    fn max_coset_examples() {
        assert_eq!(max_length_twisted_coset(&eg("A2"), &Automorphism::identity(2)).0, 1);
        assert_eq!(max_length_twisted_coset(&eg("A1"), &Automorphism::identity(1)).0, 0);
        assert_eq!(max_length_twisted_coset(&eg("I6"), &Automorphism::identity(2)).0, 2);
    }
}
