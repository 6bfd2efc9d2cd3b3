//! Elements of a finite Coxeter group as signed permutations of the positive roots.

use std::fmt;
use std::sync::Arc;

use crate::cartan::RootSystem;
use crate::error::{Error, Result};
use crate::linalg::rank_zphi;
use crate::scalar::Zphi;

/// `images[r]` is the signed index of `w(α_r)` for every positive root `α_r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub images: Vec<u16>,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{:?}", self.images)
    }
}

/// A finite Coxeter group realized on its root system.
#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    roots: Arc<RootSystem>,
}

impl CoxeterGroup {
    pub fn new(roots: RootSystem) -> Self {
        CoxeterGroup {
            roots: Arc::new(roots),
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(Self::new(RootSystem::from_label(label)?))
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn roots_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.roots)
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.num_positive()
    }

    pub fn order(&self) -> u128 {
        self.roots.cartan_type().group_order()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            images: (0..self.num_positive() as u16).collect(),
        }
    }

    pub fn simple(&self, i: usize) -> GroupElement {
        GroupElement {
            images: self.roots.simple_action(i)[..self.num_positive()].to_vec(),
        }
    }

    /// Signed image `w(r)` of a signed root index.
    #[inline]
    pub fn apply(&self, w: &GroupElement, r: usize) -> usize {
        let n = self.num_positive();
        if r < n {
            w.images[r] as usize
        } else {
            self.roots.negate(w.images[r - n] as usize)
        }
    }

    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            images: b.images.iter().map(|&r| self.apply(a, r as usize) as u16).collect(),
        }
    }

    pub fn invert(&self, a: &GroupElement) -> GroupElement {
        let n = self.num_positive();
        let mut images = vec![0u16; n];
        for (r, &s) in a.images.iter().enumerate() {
            let s = s as usize;
            if s < n {
                images[s] = r as u16;
            } else {
                images[s - n] = (r + n) as u16;
            }
        }
        GroupElement { images }
    }

    /// `w·s_i`.
    pub fn mul_simple_right(&self, w: &GroupElement, i: usize) -> GroupElement {
        let act = self.roots.simple_action(i);
        GroupElement {
            images: (0..self.num_positive())
                .map(|r| self.apply(w, act[r] as usize) as u16)
                .collect(),
        }
    }

    /// `s_i·w`.
    pub fn mul_simple_left(&self, i: usize, w: &GroupElement) -> GroupElement {
        let act = self.roots.simple_action(i);
        GroupElement {
            images: w.images.iter().map(|&r| act[r as usize]).collect(),
        }
    }

    pub fn length(&self, w: &GroupElement) -> usize {
        let n = self.num_positive() as u16;
        w.images.iter().filter(|&&r| r >= n).count()
    }

    pub fn is_identity(&self, w: &GroupElement) -> bool {
        w.images.iter().enumerate().all(|(i, &r)| i == r as usize)
    }

    #[inline]
    pub fn is_right_descent(&self, w: &GroupElement, i: usize) -> bool {
        w.images[i] as usize >= self.num_positive()
    }

    pub fn is_left_descent(&self, w: &GroupElement, i: usize) -> bool {
        let target = (i + self.num_positive()) as u16;
        w.images.contains(&target)
    }

    pub fn right_descents(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_right_descent(w, i)).collect()
    }

    pub fn left_descents(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_left_descent(w, i)).collect()
    }

    /// Lexicographically first reduced word read from the right, 0-based.
    pub fn reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        let mut cur = w.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| self.is_right_descent(&cur, i)) {
            cur = self.mul_simple_right(&cur, i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// Product of a 0-based word.
    pub fn from_word(&self, word: &[usize]) -> GroupElement {
        word.iter()
            .fold(self.identity(), |w, &i| self.mul_simple_right(&w, i))
    }

    pub fn parse_word(&self, s: &str) -> Result<GroupElement> {
        Ok(self.from_word(&parse_word(s, self.rank())?))
    }

    pub fn format_word(&self, w: &GroupElement) -> String {
        format_word(&self.reduced_word(w))
    }

    pub fn longest_element(&self) -> GroupElement {
        let mut w = self.identity();
        while let Some(i) = (0..self.rank()).find(|&i| !self.is_right_descent(&w, i)) {
            w = self.mul_simple_right(&w, i);
        }
        w
    }

    /// Bruhat order by the left-descent recursion. Each step shortens `w`, so the
    /// recursion is a chain of at most `ℓ(w)` steps.
    pub fn bruhat_leq(&self, u: &GroupElement, w: &GroupElement) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        loop {
            let lu = self.length(&u);
            let lw = self.length(&w);
            if lu > lw {
                return false;
            }
            if lu == 0 {
                return true;
            }
            if lu == lw {
                return u == w;
            }
            let s = (0..self.rank())
                .find(|&i| self.is_left_descent(&w, i))
                .expect("nonidentity has a descent");
            if self.is_left_descent(&u, s) {
                u = self.mul_simple_left(s, &u);
            }
            w = self.mul_simple_left(s, &w);
        }
    }

    /// Carter's `ℓ_R(w) = rank(w − 1)` on the reflection representation,
    /// summed over irreducible components.
    pub fn reflection_length(&self, w: &GroupElement) -> usize {
        let rs = &*self.roots;
        let n = rs.num_positive();
        let mut total = 0;
        let mut matrix_gens: Vec<usize> = Vec::new();
        for (ci, comp) in rs.components().iter().enumerate() {
            let gens = comp.offset..comp.offset + comp.ty.rank();
            if comp.ty.is_dihedral() {
                let inv = (0..n)
                    .filter(|&r| rs.root(r).component == ci && w.images[r] as usize >= n)
                    .count();
                total += match inv {
                    0 => 0,
                    k if k % 2 == 1 => 1,
                    _ => 2,
                };
            } else {
                matrix_gens.extend(gens);
            }
        }
        if !matrix_gens.is_empty() {
            let cols: Vec<Vec<Zphi>> = matrix_gens
                .iter()
                .map(|&j| {
                    let img = rs.signed_coords(w.images[j] as usize);
                    matrix_gens
                        .iter()
                        .map(|&k| if k == j { img[k] - Zphi::ONE } else { img[k] })
                        .collect()
                })
                .collect();
            total += rank_zphi(cols);
        }
        total
    }

    /// Element `s_α` for a positive root.
    pub fn reflection(&self, alpha: usize) -> GroupElement {
        GroupElement {
            images: self.roots.reflection_table(alpha)[..self.num_positive()].to_vec(),
        }
    }
}

/// Parses a 1-based generator word: `"1 2 1"`, `"1,2,1"`, or compact `"121"`
/// when every generator index is a single digit. The empty string is the identity.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let t = s.trim();
    let t = t.strip_prefix('s').unwrap_or(t);
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    let tokens: Vec<&str> = if t.contains(|c: char| c.is_whitespace() || c == ',') {
        t.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|x| !x.is_empty())
            .collect()
    } else if rank <= 9 {
        t.split("").filter(|x| !x.is_empty()).collect()
    } else {
        vec![t]
    };
    tokens
        .iter()
        .map(|tok| {
            let g: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator `{tok}` in word `{s}`")))?;
            if g == 0 || g > rank {
                return Err(Error::Parse(format!(
                    "generator {g} out of range 1..={rank} in word `{s}`"
                )));
            }
            Ok(g - 1)
        })
        .collect()
}

pub fn format_word(word: &[usize]) -> String {
    word.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> CoxeterGroup {
        CoxeterGroup::from_label(s).unwrap()
    }

    #[test]
    fn compose_invert_length() {
        let a2 = g("A2");
        let s1 = a2.simple(0);
        assert!(a2.is_identity(&a2.compose(&s1, &s1)));
        let s12 = a2.parse_word("1 2").unwrap();
        assert_eq!(a2.invert(&s12), a2.parse_word("2 1").unwrap());
        assert_eq!(a2.length(&s12), 2);
        assert_eq!(a2.length(&a2.parse_word("1 2 1").unwrap()), 3);
        assert_eq!(a2.length(&a2.identity()), 0);
        let f4 = g("F4");
        assert_eq!(f4.length(&f4.longest_element()), 24);
    }

    #[test]
    fn longest_element_is_involution() {
        for l in ["A4", "B3", "D5", "E6", "H3", "I7", "G2xA1"] {
            let w = g(l);
            let w0 = w.longest_element();
            assert!(w.is_identity(&w.compose(&w0, &w0)), "{l}");
            assert_eq!(w.length(&w0), w.num_positive());
        }
    }

    #[test]
    fn bruhat_examples() {
        let a2 = g("A2");
        let w0 = a2.longest_element();
        assert!(a2.bruhat_leq(&a2.identity(), &w0));
        assert!(a2.bruhat_leq(&a2.simple(0), &a2.parse_word("1 2").unwrap()));
        assert!(!a2.bruhat_leq(&a2.simple(0), &a2.simple(1)));
    }

    #[test]
    fn reflection_length_examples() {
        let e8 = g("E8");
        assert_eq!(e8.reflection_length(&e8.longest_element()), 8);
        let a3 = g("A3");
        assert_eq!(a3.reflection_length(&a3.longest_element()), 2);
        assert_eq!(a3.reflection_length(&a3.identity()), 0);
        let i5 = g("I5");
        assert_eq!(i5.reflection_length(&i5.longest_element()), 1);
        let i6 = g("I6");
        assert_eq!(i6.reflection_length(&i6.longest_element()), 2);
    }

    #[test]
    fn words_round_trip() {
        assert_eq!(parse_word("1 2 1", 3).unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("121", 3).unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("s43121", 4).unwrap(), vec![3, 2, 0, 1, 0]);
        assert_eq!(parse_word("", 3).unwrap(), Vec::<usize>::new());
        assert!(parse_word("4", 3).is_err());
        assert_eq!(parse_word("10 1", 12).unwrap(), vec![9, 0]);
        let b3 = g("B3");
        let w = b3.parse_word("3 2 3 1").unwrap();
        let back = b3.parse_word(&b3.format_word(&w)).unwrap();
        assert_eq!(w, back);
    }
}
