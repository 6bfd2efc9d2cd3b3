//! Full enumeration of a finite Coxeter group with dense multiplication tables.

use rustc_hash::FxHashMap;

use super::automorphism::Automorphism;
use super::element::{CoxeterGroup, GroupElement};
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Every element of `W0`, indexed in BFS-by-length order (index 0 is `e`).
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    group: CoxeterGroup,
    elements: Vec<GroupElement>,
    index: FxHashMap<GroupElement, u32>,
    lengths: Vec<u16>,
    /// `right[w * rank + i] = w·s_i`.
    right: Vec<u32>,
    /// `left[w * rank + i] = s_i·w`.
    left: Vec<u32>,
    inverse: Vec<u32>,
    /// `w = parent(w)·s_i`; the identity points to itself.
    parent: Vec<(u32, u8)>,
    longest: u32,
}

impl EnumeratedGroup {
    pub fn new(group: CoxeterGroup, budget: u64) -> Result<Self> {
        let order = group.order();
        if order > budget as u128 {
            return Err(Error::budget(
                format!("enumerating {}", group.roots().cartan_type()),
                order.min(u64::MAX as u128) as u64,
                budget,
            ));
        }
        let rank = group.rank();
        let mut elements = vec![group.identity()];
        let mut index: FxHashMap<GroupElement, u32> = FxHashMap::default();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            for i in 0..rank {
                if group.is_right_descent(&w, i) {
                    continue;
                }
                let ws = group.mul_simple_right(&w, i);
                if !index.contains_key(&ws) {
                    index.insert(ws.clone(), elements.len() as u32);
                    elements.push(ws);
                }
            }
            head += 1;
        }
        assert_eq!(elements.len() as u128, order, "enumeration size");
        Ok(Self::assemble(group, elements))
    }

    /// Rebuilds the tables from a stored element list, which must be the full
    /// group in nondecreasing length order starting at `e`.
    pub fn from_elements(group: CoxeterGroup, elements: Vec<GroupElement>) -> Result<Self> {
        let bad = |d: &str| Error::Parse(format!("stored element list: {d}"));
        if elements.len() as u128 != group.order() {
            return Err(bad("wrong number of elements"));
        }
        let npos = group.num_positive();
        if elements.iter().any(|w| w.images.len() != npos) {
            return Err(bad("wrong image length"));
        }
        if elements.first() != Some(&group.identity()) {
            return Err(bad("first element is not the identity"));
        }
        let mut seen: FxHashMap<&GroupElement, ()> = FxHashMap::default();
        for w in &elements {
            if seen.insert(w, ()).is_some() {
                return Err(bad("duplicate element"));
            }
        }
        let lens: Vec<usize> = elements.iter().map(|w| group.length(w)).collect();
        if lens.windows(2).any(|p| p[0] > p[1]) {
            return Err(bad("lengths are not sorted"));
        }
        for w in &elements {
            for i in 0..group.rank() {
                if !seen.contains_key(&group.mul_simple_right(w, i)) {
                    return Err(bad("not closed under multiplication"));
                }
            }
        }
        drop(seen);
        Ok(Self::assemble(group, elements))
    }

    fn assemble(group: CoxeterGroup, elements: Vec<GroupElement>) -> Self {
        let rank = group.rank();
        let index: FxHashMap<GroupElement, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        let lengths: Vec<u16> = elements.iter().map(|w| group.length(w) as u16).collect();
        let n = elements.len();
        let mut right = vec![0u32; n * rank];
        let mut left = vec![0u32; n * rank];
        for (wi, w) in elements.iter().enumerate() {
            for i in 0..rank {
                right[wi * rank + i] = index[&group.mul_simple_right(w, i)];
                left[wi * rank + i] = index[&group.mul_simple_left(i, w)];
            }
        }
        // first discoverer in BFS order
        let parent: Vec<(u32, u8)> = (0..n)
            .map(|wi| {
                (0..rank)
                    .filter(|&i| lengths[right[wi * rank + i] as usize] < lengths[wi])
                    .map(|i| (right[wi * rank + i], i as u8))
                    .min()
                    .unwrap_or((0, 0))
            })
            .collect();
        let inverse = elements.iter().map(|w| index[&group.invert(w)]).collect();
        let longest = (n - 1) as u32;
        debug_assert_eq!(lengths[n - 1] as usize, group.num_positive());
        EnumeratedGroup {
            group,
            elements,
            index,
            lengths,
            right,
            left,
            inverse,
            parent,
            longest,
        }
    }

    pub fn from_label(label: &str, budget: u64) -> Result<Self> {
        Self::new(CoxeterGroup::from_label(label)?, budget)
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, w: u32) -> &GroupElement {
        &self.elements[w as usize]
    }

    pub fn index_of(&self, w: &GroupElement) -> u32 {
        self.index[w]
    }

    #[inline]
    pub fn length(&self, w: u32) -> usize {
        self.lengths[w as usize] as usize
    }

    pub fn lengths(&self) -> &[u16] {
        &self.lengths
    }

    #[inline]
    pub fn mul_simple_right(&self, w: u32, i: usize) -> u32 {
        self.right[w as usize * self.rank() + i]
    }

    #[inline]
    pub fn mul_simple_left(&self, i: usize, w: u32) -> u32 {
        self.left[w as usize * self.rank() + i]
    }

    #[inline]
    pub fn inverse(&self, w: u32) -> u32 {
        self.inverse[w as usize]
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn longest(&self) -> u32 {
        self.longest
    }

    /// A reduced word (0-based) read off the BFS tree.
    pub fn word(&self, w: u32) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while cur != 0 {
            let (p, i) = self.parent[cur as usize];
            out.push(i as usize);
            cur = p;
        }
        out.reverse();
        out
    }

    pub fn from_word(&self, word: &[usize]) -> u32 {
        word.iter().fold(0, |w, &i| self.mul_simple_right(w, i))
    }

    /// `a·b`.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.word(b)
            .into_iter()
            .fold(a, |w, i| self.mul_simple_right(w, i))
    }

    /// Bruhat order by the left-descent recursion on indices.
    pub fn bruhat_leq(&self, u: u32, w: u32) -> bool {
        let (mut u, mut w) = (u, w);
        loop {
            let lu = self.length(u);
            let lw = self.length(w);
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
                .find(|&i| self.length(self.mul_simple_left(i, w)) < lw)
                .expect("descent");
            let su = self.mul_simple_left(s, u);
            if self.length(su) < lu {
                u = su;
            }
            w = self.mul_simple_left(s, w);
        }
    }

    /// Table of `σ(w)` for every element.
    pub fn sigma_table(&self, sigma: &Automorphism) -> Vec<u32> {
        let mut t = vec![0u32; self.len()];
        for w in 1..self.len() {
            let (p, i) = self.parent[w];
            t[w] = self.mul_simple_right(t[p as usize], sigma.perm()[i as usize]);
        }
        t
    }

    /// Table of `w·w0`.
    pub fn times_longest_table(&self) -> Vec<u32> {
        let w0w = self.word(self.longest);
        (0..self.len() as u32)
            .map(|w| w0w.iter().fold(w, |x, &i| self.mul_simple_right(x, i)))
            .collect()
    }

    pub fn reflection_length(&self, w: u32) -> usize {
        self.group.reflection_length(self.element(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (l, n) in [("A2", 6), ("B3", 48), ("H3", 120), ("F4", 1152), ("I6", 12), ("A1xA2", 12)] {
            let e = EnumeratedGroup::from_label(l, DEFAULT_BUDGET).unwrap();
            assert_eq!(e.len(), n, "{l}");
        }
    }

    #[test]
    fn refuses_large_groups() {
        let err = EnumeratedGroup::from_label("E7", DEFAULT_BUDGET).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn tables_agree_with_elements() {
        let e = EnumeratedGroup::from_label("B3", DEFAULT_BUDGET).unwrap();
        let g = e.group();
        for a in 0..e.len() as u32 {
            assert_eq!(g.from_word(&e.word(a)), *e.element(a));
            assert_eq!(e.length(a), e.word(a).len());
            let inv = e.inverse(a);
            assert_eq!(e.mul(a, inv), 0);
            for b in [0u32, 5, 17, 47] {
                let ab = g.compose(e.element(a), e.element(b));
                assert_eq!(e.index_of(&ab), e.mul(a, b));
            }
        }
    }

    #[test]
    fn index_bruhat_matches_element_bruhat() {
        let e = EnumeratedGroup::from_label("A3", DEFAULT_BUDGET).unwrap();
        let g = e.group();
        for u in 0..e.len() as u32 {
            for w in 0..e.len() as u32 {
                assert_eq!(e.bruhat_leq(u, w), g.bruhat_leq(e.element(u), e.element(w)));
            }
        }
    }
}
