//! Length-preserving automorphisms given by Coxeter-diagram permutations.

use std::fmt;

use serde::{Serialize, Serializer};

use super::element::{CoxeterGroup, GroupElement};
use crate::cartan::{Family, RootSystem};
use crate::error::{Error, Result};

/// `s_i ↦ s_{perm[i]}` (0-based internally).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    perm: Vec<usize>,
}

impl Automorphism {
    pub fn new(rs: &RootSystem, perm: Vec<usize>) -> Result<Self> {
        let r = rs.rank();
        let mut seen = vec![false; r];
        if perm.len() != r {
            return Err(Error::InvalidAutomorphism(format!(
                "permutation has {} entries, rank is {r}",
                perm.len()
            )));
        }
        for &p in &perm {
            if p >= r || seen[p] {
                return Err(Error::InvalidAutomorphism(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let m = rs.coxeter_matrix();
        for i in 0..r {
            for j in 0..r {
                if m[perm[i]][perm[j]] != m[i][j] {
                    return Err(Error::InvalidAutomorphism(format!(
                        "{} does not preserve the Coxeter matrix",
                        one_line(&perm)
                    )));
                }
            }
        }
        Ok(Automorphism { perm })
    }

    pub fn identity(rank: usize) -> Self {
        Automorphism {
            perm: (0..rank).collect(),
        }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.perm.clone();
        while cur.iter().enumerate().any(|(i, &p)| i != p) {
            cur = cur.iter().map(|&p| self.perm[p]).collect();
            k += 1;
        }
        k
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        Automorphism { perm: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Self {
        Automorphism {
            perm: other.perm.iter().map(|&p| self.perm[p]).collect(),
        }
    }

    /// Whether the permutation also preserves the Cartan matrix (needed to act on `X∗`).
    pub fn preserves_cartan(&self, rs: &RootSystem) -> bool {
        match rs.cartan_matrix() {
            None => false,
            Some(a) => {
                let r = rs.rank();
                (0..r).all(|i| (0..r).all(|j| a[self.perm[i]][self.perm[j]] == a[i][j]))
            }
        }
    }

    pub fn apply(&self, g: &CoxeterGroup, w: &GroupElement) -> GroupElement {
        let word: Vec<usize> = g.reduced_word(w).iter().map(|&i| self.perm[i]).collect();
        g.from_word(&word)
    }

    /// The permutation `ψ` with `w0 s_i w0 = s_{ψ(i)}`.
    pub fn ad_w0(g: &CoxeterGroup) -> Self {
        let w0 = g.longest_element();
        let n = g.num_positive();
        let perm = (0..g.rank())
            .map(|i| w0.images[i] as usize - n)
            .collect();
        Automorphism { perm }
    }

    /// Every Coxeter-matrix-preserving permutation, found by backtracking.
    pub fn all(rs: &RootSystem) -> Vec<Automorphism> {
        let r = rs.rank();
        let m = rs.coxeter_matrix();
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; r];
        let mut used = vec![false; r];
        fn go(
            i: usize,
            r: usize,
            m: &[Vec<u32>],
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Automorphism>,
        ) {
            if i == r {
                out.push(Automorphism { perm: perm.clone() });
                return;
            }
            for p in 0..r {
                if used[p] || (0..i).any(|j| m[p][perm[j]] != m[i][j]) {
                    continue;
                }
                perm[i] = p;
                used[p] = true;
                go(i + 1, r, m, perm, used, out);
                used[p] = false;
            }
            perm[i] = usize::MAX;
        }
        go(0, r, m, &mut perm, &mut used, &mut out);
        out
    }

    /// The standard twist of the given order on an irreducible type
    /// (`2A_n`, `2D_n`, `3D4`, `2E6`, `2F4`, `2B2`, `2G2`, `2I_m`).
    pub fn standard_twist(rs: &RootSystem, order: u32) -> Result<Self> {
        let ct = rs.cartan_type();
        let label = format!("{order}{ct}");
        if !ct.is_irreducible() {
            return Err(Error::NoTableEntry(label));
        }
        let t = ct.components()[0];
        let n = t.rank();
        let perm: Vec<usize> = match (order, t.family) {
            (2, Family::A) if n >= 2 => (0..n).rev().collect(),
            (2, Family::D) => {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(n - 2, n - 1);
                p
            }
            (3, Family::D) if n == 4 => vec![2, 1, 3, 0],
            (2, Family::E) if n == 6 => vec![5, 1, 4, 3, 2, 0],
            (2, Family::F) => vec![3, 2, 1, 0],
            (2, Family::B | Family::C) if n == 2 => vec![1, 0],
            (2, Family::G | Family::I) => vec![1, 0],
            _ => return Err(Error::NoTableEntry(label)),
        };
        Automorphism::new(rs, perm)
    }

    /// Parses `id`, `adw0`, `flip`, `triality`, or one-line notation such as `"2 1"`.
    pub fn parse(s: &str, g: &CoxeterGroup) -> Result<Self> {
        let rs = g.roots();
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "" | "id" | "identity" => Ok(Automorphism::identity(g.rank())),
            "adw0" | "ad(w0)" => Ok(Automorphism::ad_w0(g)),
            "triality" => Automorphism::standard_twist(rs, 3),
            "flip" => {
                if rs.cartan_type().is_irreducible() {
                    return Automorphism::standard_twist(rs, 2);
                }
                let comps = rs.components();
                if comps.len() == 2 && comps[0].ty == comps[1].ty {
                    let r = comps[0].ty.rank();
                    let perm = (0..2 * r).map(|i| (i + r) % (2 * r)).collect();
                    return Automorphism::new(rs, perm);
                }
                Err(Error::InvalidAutomorphism(format!(
                    "no canonical flip for {}",
                    rs.cartan_type()
                )))
            }
            _ => {
                let perm = t
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|x| !x.is_empty())
                    .map(|x| {
                        x.parse::<usize>()
                            .ok()
                            .filter(|&v| v >= 1)
                            .map(|v| v - 1)
                            .ok_or_else(|| Error::Parse(format!("bad automorphism `{s}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Automorphism::new(rs, perm)
            }
        }
    }
}

fn one_line(perm: &[usize]) -> String {
    perm.iter()
        .map(|p| (p + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&one_line(&self.perm))
    }
}

impl Serialize for Automorphism {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> CoxeterGroup {
        CoxeterGroup::from_label(s).unwrap()
    }

    #[test]
    fn ad_w0_examples() {
        assert_eq!(Automorphism::ad_w0(&g("A2")).perm(), &[1, 0]);
        assert!(Automorphism::ad_w0(&g("B2")).is_identity());
        let e6 = g("E6");
        let psi = Automorphism::ad_w0(&e6);
        assert_eq!(psi, Automorphism::standard_twist(e6.roots(), 2).unwrap());
        assert!(Automorphism::ad_w0(&g("D4")).is_identity());
        assert_eq!(Automorphism::ad_w0(&g("D5")).perm(), &[0, 1, 2, 4, 3]);
    }

    #[test]
    fn ad_w0_conjugates_generators() {
        for l in ["A4", "D5", "E6", "H3", "I5", "I6"] {
            let grp = g(l);
            let w0 = grp.longest_element();
            let psi = Automorphism::ad_w0(&grp);
            for i in 0..grp.rank() {
                let c = grp.compose(&grp.compose(&w0, &grp.simple(i)), &w0);
                assert_eq!(c, grp.simple(psi.perm()[i]), "{l} s{i}");
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        let count = |l: &str| Automorphism::all(g(l).roots()).len();
        assert_eq!(count("A1"), 1);
        assert_eq!(count("A3"), 2);
        assert_eq!(count("D4"), 6);
        assert_eq!(count("E6"), 2);
        assert_eq!(count("E8"), 1);
        assert_eq!(count("F4"), 2);
        assert_eq!(count("A1xA1"), 2);
        assert_eq!(count("A2xA2"), 8);
    }

    #[test]
    fn twists_and_validation() {
        let f4 = g("F4");
        let flip = Automorphism::standard_twist(f4.roots(), 2).unwrap();
        assert!(!flip.preserves_cartan(f4.roots()));
        let d4 = g("D4");
        let tri = Automorphism::standard_twist(d4.roots(), 3).unwrap();
        assert_eq!(tri.order(), 3);
        assert!(Automorphism::parse("2 1 3", &g("A3")).is_err());
        assert_eq!(Automorphism::parse("2 1", &g("A2")).unwrap().perm(), &[1, 0]);
        let sw = Automorphism::parse("flip", &g("A1xA1")).unwrap();
        assert_eq!(sw.perm(), &[1, 0]);
    }

    #[test]
    fn apply_is_a_homomorphism() {
        let grp = g("D4");
        let tri = Automorphism::standard_twist(grp.roots(), 3).unwrap();
        let a = grp.parse_word("1 2 3 2").unwrap();
        let b = grp.parse_word("4 2 1").unwrap();
        let lhs = tri.apply(&grp, &grp.compose(&a, &b));
        let rhs = grp.compose(&tri.apply(&grp, &a), &tri.apply(&grp, &b));
        assert_eq!(lhs, rhs);
    }
}
