//! Root data: a root system together with a cocharacter lattice `X∗ ≅ ℤ^d`.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::roots::RootSystem;
use crate::error::{Error, Result};
use crate::linalg::{inverse_q, smith_normal_form, solve_q, Smith};
use crate::scalar::{fmt_q, q, Q};

/// Which lattice `X∗` is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeKind {
    /// Coroot lattice; basis = simple coroots.
    Sc,
    /// Coweight lattice; basis = fundamental coweights.
    Ad,
    /// `ℤⁿ` over `A_{n−1}` (the `GL_n` datum).
    Gl,
}

impl FromStr for LatticeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sc" | "simply-connected" => Ok(LatticeKind::Sc),
            "ad" | "adjoint" => Ok(LatticeKind::Ad),
            "gl" => Ok(LatticeKind::Gl),
            _ => Err(Error::Parse(format!("unknown lattice `{s}` (sc, ad, gl)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    Lattice,
    SimpleCoroot,
    FundamentalCoweight,
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lattice" => Ok(Basis::Lattice),
            "coroot" | "simple-coroot" => Ok(Basis::SimpleCoroot),
            "fundamental" | "fundamental-coweight" => Ok(Basis::FundamentalCoweight),
            _ => Err(Error::Parse(format!(
                "unknown basis `{s}` (lattice, coroot, fundamental)"
            ))),
        }
    }
}

/// A (possibly rational) coweight with its basis recorded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coweight {
    pub coords: Vec<Q>,
    pub basis: Basis,
}

impl Coweight {
    pub fn new(coords: Vec<Q>, basis: Basis) -> Self {
        Coweight { coords, basis }
    }

    pub fn lattice(coords: Vec<Q>) -> Self {
        Coweight::new(coords, Basis::Lattice)
    }

    pub fn from_ints(coords: &[i64], basis: Basis) -> Self {
        Coweight::new(coords.iter().map(|&x| q(x)).collect(), basis)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|x| x.is_integer())
    }

    /// Integer coordinates, if integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.is_integral()
            .then(|| self.coords.iter().map(|x| x.to_integer()).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(fmt_q).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Coweight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Coweight", 2)?;
        st.serialize_field("basis", &self.basis)?;
        let c: Vec<String> = self.coords.iter().map(fmt_q).collect();
        st.serialize_field("coords", &c)?;
        st.end()
    }
}

/// `π1 = X∗/ℤΦ∨` as `⊕ ℤ/dᵢ ⊕ ℤ^free`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi1 {
    /// Elementary divisors `> 1`.
    pub torsion: Vec<i64>,
    pub free_rank: usize,
}

impl Pi1 {
    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    system: RootSystem,
    kind: LatticeKind,
    dim: usize,
    /// `α_i∨` in lattice coordinates, one per simple coroot.
    coroots: Vec<Vec<i64>>,
    /// Positive roots as functionals on the lattice.
    root_chars: Vec<Vec<i64>>,
    /// Positive coroots in lattice coordinates.
    coroot_vecs: Vec<Vec<i64>>,
    fundamental: Vec<Vec<Q>>,
    smith: Smith,
}

impl RootDatum {
    pub fn new(system: RootSystem, kind: LatticeKind) -> Result<Self> {
        let a = system
            .cartan_matrix()
            .ok_or_else(|| Error::NotCrystallographic("a root datum".into()))?;
        let r = system.rank();
        let (dim, coroots, simple_chars): (usize, Vec<Vec<i64>>, Vec<Vec<i64>>) = match kind {
            LatticeKind::Sc => {
                let co = (0..r)
                    .map(|i| (0..r).map(|k| i64::from(i == k)).collect())
                    .collect();
                let ch = (0..r).map(|j| (0..r).map(|i| a[i][j]).collect()).collect();
                (r, co, ch)
            }
            LatticeKind::Ad => {
                let co = a.clone();
                let ch = (0..r)
                    .map(|j| (0..r).map(|k| i64::from(j == k)).collect())
                    .collect();
                (r, co, ch)
            }
            LatticeKind::Gl => {
                let ct = system.cartan_type();
                let ok = ct.is_irreducible()
                    && ct.components()[0].family == super::label::Family::A;
                if !ok {
                    return Err(Error::BasisMismatch(format!(
                        "the gl lattice is defined for a single type A component, not {ct}"
                    )));
                }
                let d = r + 1;
                let v: Vec<Vec<i64>> = (0..r)
                    .map(|i| {
                        (0..d)
                            .map(|k| {
                                if k == i {
                                    1
                                } else if k == i + 1 {
                                    -1
                                } else {
                                    0
                                }
                            })
                            .collect()
                    })
                    .collect();
                (d, v.clone(), v)
            }
        };
        let root_chars = system
            .positive_roots()
            .iter()
            .map(|root| {
                (0..dim)
                    .map(|k| (0..r).map(|j| root.coords[j].a * simple_chars[j][k]).sum())
                    .collect()
            })
            .collect();
        let coroot_vecs = system
            .positive_roots()
            .iter()
            .map(|root| {
                (0..dim)
                    .map(|k| (0..r).map(|i| root.coroot[i].a * coroots[i][k]).sum())
                    .collect()
            })
            .collect();
        let fundamental = match kind {
            LatticeKind::Gl => (0..r)
                .map(|i| (0..dim).map(|k| q(i64::from(k <= i))).collect())
                .collect(),
            _ => {
                let aq: Vec<Vec<Q>> = a
                    .iter()
                    .map(|row| row.iter().map(|&x| q(x)).collect())
                    .collect();
                let inv = inverse_q(&aq).expect("Cartan matrices are invertible");
                (0..r)
                    .map(|j| {
                        (0..dim)
                            .map(|k| (0..r).map(|i| inv[j][i] * coroots[i][k]).sum())
                            .collect()
                    })
                    .collect()
            }
        };
        let m: Vec<Vec<i64>> = (0..dim)
            .map(|k| (0..r).map(|i| coroots[i][k]).collect())
            .collect();
        let smith = smith_normal_form(&m);
        Ok(RootDatum {
            system,
            kind,
            dim,
            coroots,
            root_chars,
            coroot_vecs,
            fundamental,
            smith,
        })
    }

    pub fn from_label(label: &str, kind: LatticeKind) -> Result<Self> {
        RootDatum::new(RootSystem::from_label(label)?, kind)
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    /// Rank of `X∗`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    /// Positive coroot `α∨` in lattice coordinates.
    pub fn coroot(&self, a: usize) -> &[i64] {
        &self.coroot_vecs[a]
    }

    /// Positive root `α` as a functional on the lattice.
    pub fn root_char(&self, a: usize) -> &[i64] {
        &self.root_chars[a]
    }

    /// Converts to lattice coordinates.
    pub fn to_lattice(&self, cw: &Coweight) -> Result<Coweight> {
        let expect = match cw.basis {
            Basis::Lattice => self.dim,
            _ => self.rank(),
        };
        if cw.coords.len() != expect {
            return Err(Error::BasisMismatch(format!(
                "{:?} coweight needs {expect} coordinates, got {}",
                cw.basis,
                cw.coords.len()
            )));
        }
        let coords = match cw.basis {
            Basis::Lattice => cw.coords.clone(),
            Basis::SimpleCoroot => (0..self.dim)
                .map(|k| {
                    cw.coords
                        .iter()
                        .enumerate()
                        .map(|(i, c)| c * self.coroots[i][k])
                        .sum()
                })
                .collect(),
            Basis::FundamentalCoweight => (0..self.dim)
                .map(|k| {
                    cw.coords
                        .iter()
                        .enumerate()
                        .map(|(i, c)| c * self.fundamental[i][k])
                        .sum()
                })
                .collect(),
        };
        Ok(Coweight::lattice(coords))
    }

    fn lattice_coords(&self, cw: &Coweight) -> Result<Vec<Q>> {
        Ok(self.to_lattice(cw)?.coords)
    }

    /// `⟨λ, α⟩` for a signed root index.
    pub fn pair_root(&self, cw: &Coweight, alpha: usize) -> Result<Q> {
        let l = self.lattice_coords(cw)?;
        Ok(self.pair_root_lattice(&l, alpha))
    }

    pub fn pair_root_lattice(&self, l: &[Q], alpha: usize) -> Q {
        let n = self.system.num_positive();
        let (a, sign) = if alpha < n { (alpha, 1) } else { (alpha - n, -1) };
        let v: Q = l
            .iter()
            .zip(&self.root_chars[a])
            .map(|(x, &c)| x * c)
            .sum();
        v * sign
    }

    /// Integer pairing on lattice vectors.
    #[inline]
    pub fn pair_int(&self, l: &[i64], alpha: usize) -> i64 {
        let n = self.system.num_positive();
        if alpha < n {
            l.iter().zip(&self.root_chars[alpha]).map(|(x, c)| x * c).sum()
        } else {
            -l.iter()
                .zip(&self.root_chars[alpha - n])
                .map(|(x, c)| x * c)
                .sum::<i64>()
        }
    }

    /// `⟨λ, β⟩` for a weight `β` given in simple-root coordinates.
    pub fn pairing(&self, cw: &Coweight, weight: &[Q]) -> Result<Q> {
        if weight.len() != self.rank() {
            return Err(Error::BasisMismatch(format!(
                "weight needs {} simple-root coordinates, got {}",
                self.rank(),
                weight.len()
            )));
        }
        let l = self.lattice_coords(cw)?;
        Ok(weight
            .iter()
            .enumerate()
            .map(|(j, w)| w * self.pair_root_lattice(&l, j))
            .sum())
    }

    pub fn rho(&self) -> Vec<Q> {
        self.system.rho().expect("crystallographic")
    }

    /// `⟨λ, ρ⟩`.
    pub fn pair_rho(&self, cw: &Coweight) -> Result<Q> {
        self.pairing(cw, &self.rho())
    }

    /// `⟨λ, 2ρ⟩` on an integral lattice vector.
    pub fn pair_two_rho_int(&self, l: &[i64]) -> i64 {
        let two_rho = self.system.two_rho();
        (0..self.rank()).map(|j| two_rho[j].a * self.pair_int(l, j)).sum()
    }

    /// `2ρ∨` as a lattice coweight.
    pub fn two_rho_check(&self) -> Coweight {
        let rc = self.system.rho_check().expect("crystallographic");
        let c: Vec<Q> = rc.iter().map(|x| x * 2).collect();
        self.to_lattice(&Coweight::new(c, Basis::SimpleCoroot))
            .expect("rank-length coordinates")
    }

    pub fn is_dominant(&self, cw: &Coweight) -> Result<bool> {
        let l = self.lattice_coords(cw)?;
        Ok((0..self.rank()).all(|j| self.pair_root_lattice(&l, j) >= q(0)))
    }

    /// Coordinates of `λ` in the simple-coroot basis, if `λ` lies in their ℚ-span.
    pub fn coroot_coords(&self, cw: &Coweight) -> Result<Option<Vec<Q>>> {
        let l = self.lattice_coords(cw)?;
        let m: Vec<Vec<Q>> = (0..self.dim)
            .map(|k| (0..self.rank()).map(|i| q(self.coroots[i][k])).collect())
            .collect();
        Ok(solve_q(&m, &l))
    }

    /// `λ ≤ μ`: `μ − λ` is a nonnegative combination of simple coroots,
    /// integral when both inputs are.
    pub fn dominance_leq(&self, lambda: &Coweight, mu: &Coweight) -> Result<bool> {
        let l = self.to_lattice(lambda)?;
        let m = self.to_lattice(mu)?;
        let diff = Coweight::lattice(m.coords.iter().zip(&l.coords).map(|(a, b)| a - b).collect());
        let Some(c) = self.coroot_coords(&diff)? else {
            return Ok(false);
        };
        if c.iter().any(|x| *x < q(0)) {
            return Ok(false);
        }
        if lambda.is_integral() && mu.is_integral() && c.iter().any(|x| !x.is_integer()) {
            return Ok(false);
        }
        Ok(true)
    }

    /// `min ⟨λ, α_i⟩` over simple roots.
    pub fn depth(&self, cw: &Coweight) -> Result<i64> {
        let l = self.lattice_coords(cw)?;
        let pairs: Vec<Q> = (0..self.rank()).map(|j| self.pair_root_lattice(&l, j)).collect();
        if let Some(p) = pairs.iter().find(|p| **p < q(0)) {
            return Err(Error::NotDominant(format!("{cw} pairs to {} with a simple root", fmt_q(p))));
        }
        let m = pairs.into_iter().min().unwrap_or_else(|| q(0));
        if !m.is_integer() {
            return Err(Error::BasisMismatch(format!("depth of non-integral {cw}")));
        }
        Ok(m.to_integer())
    }

    /// Depth restricted to the simple roots of one irreducible component.
    pub fn component_depth(&self, cw: &Coweight, component: usize) -> Result<i64> {
        let l = self.lattice_coords(cw)?;
        let c = &self.system.components()[component];
        let mut best: Option<Q> = None;
        for j in c.offset..c.offset + c.ty.rank() {
            let p = self.pair_root_lattice(&l, j);
            if p < q(0) {
                return Err(Error::NotDominant(format!("{cw}")));
            }
            best = Some(best.map_or(p, |b| b.min(p)));
        }
        Ok(best.unwrap_or_else(|| q(0)).floor().to_integer())
    }

    /// `s_i(λ) = λ − ⟨λ, α_i⟩ α_i∨` on integer lattice vectors.
    pub fn simple_reflect_int(&self, i: usize, l: &[i64]) -> Vec<i64> {
        let p = self.pair_int(l, i);
        l.iter().zip(&self.coroots[i]).map(|(x, c)| x - p * c).collect()
    }

    pub fn simple_reflect_q(&self, i: usize, l: &[Q]) -> Vec<Q> {
        let p = self.pair_root_lattice(l, i);
        l.iter().zip(&self.coroots[i]).map(|(x, &c)| x - p * c).collect()
    }

    /// Dominant representative of `W0·λ` and a 0-based word `u` with `u(λ_dom) = λ`.
    pub fn dominant_rep(&self, l: &[i64]) -> (Vec<i64>, Vec<usize>) {
        let mut cur = l.to_vec();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| self.pair_int(&cur, i) < 0) {
            cur = self.simple_reflect_int(i, &cur);
            word.push(i);
        }
        (cur, word)
    }

    /// Action of a diagram automorphism `i ↦ perm[i]` on lattice coordinates.
    /// Requires `perm` to preserve the Cartan matrix.
    pub fn apply_diagram(&self, perm: &[usize], l: &[Q]) -> Result<Vec<Q>> {
        let a = self.system.cartan_matrix().expect("crystallographic");
        let r = self.rank();
        if perm.len() != r || (0..r).any(|i| (0..r).any(|j| a[perm[i]][perm[j]] != a[i][j])) {
            return Err(Error::InvalidAutomorphism(format!(
                "{perm:?} does not preserve the Cartan matrix"
            )));
        }
        match self.kind {
            LatticeKind::Sc | LatticeKind::Ad => {
                let mut out = vec![q(0); r];
                for i in 0..r {
                    out[perm[i]] = l[i];
                }
                Ok(out)
            }
            LatticeKind::Gl => {
                if perm.iter().enumerate().all(|(i, &p)| i == p) {
                    Ok(l.to_vec())
                } else {
                    Ok(l.iter().rev().map(|x| -x).collect())
                }
            }
        }
    }

    pub fn pi1(&self) -> Pi1 {
        let r = self.rank();
        Pi1 {
            torsion: self.smith.diagonal[..r]
                .iter()
                .copied()
                .filter(|&d| d > 1)
                .collect(),
            free_rank: self.dim - r,
        }
    }

    /// Image of `λ` in `π1`: torsion coordinates reduced mod `dᵢ`, then free coordinates.
    pub fn kappa(&self, cw: &Coweight) -> Result<Vec<i64>> {
        let l = self.lattice_coords(cw)?;
        let r = self.rank();
        let mut out = Vec::new();
        for (k, urow) in self.smith.left.iter().enumerate() {
            let v: Q = urow.iter().zip(&l).map(|(u, x)| x * *u).sum();
            if k < r {
                let d = self.smith.diagonal[k];
                if d > 1 {
                    if !v.is_integer() {
                        return Err(Error::BasisMismatch(format!("κ of non-integral {cw}")));
                    }
                    out.push(v.to_integer().rem_euclid(d));
                }
            } else {
                if !v.is_integer() {
                    return Err(Error::BasisMismatch(format!("κ of non-integral {cw}")));
                }
                out.push(v.to_integer());
            }
        }
        // free part: fix the sign so that GL_n maps λ to Σλ_i
        let free_start = out.len() - (self.dim - r);
        if self.kind == LatticeKind::Gl {
            let ones: Vec<i64> = vec![1; self.dim];
            let probe: i64 = self.smith.left[r].iter().zip(&ones).map(|(u, x)| u * x).sum();
            if probe < 0 {
                for x in &mut out[free_start..] {
                    *x = -*x;
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn pairing_examples() {
        let d = RootDatum::from_label("A2", LatticeKind::Sc).unwrap();
        let a1 = Coweight::from_ints(&[1, 0], Basis::SimpleCoroot);
        assert_eq!(d.pairing(&a1, &qv(&[0, 1])).unwrap(), q(-1));
        let rc = Coweight::new(d.system().rho_check().unwrap(), Basis::SimpleCoroot);
        assert_eq!(d.pair_root(&rc, 0).unwrap(), q(1));
        let theta = Coweight::from_ints(&[1, 1], Basis::SimpleCoroot);
        let two_rho: Vec<Q> = d.rho().iter().map(|x| x * 2).collect();
        assert_eq!(d.pairing(&theta, &two_rho).unwrap(), q(4));
    }

    #[test]
    fn gl2_dominance() {
        let d = RootDatum::from_label("A1", LatticeKind::Gl).unwrap();
        let l = |a, b| Coweight::from_ints(&[a, b], Basis::Lattice);
        assert!(d.dominance_leq(&l(1, 1), &l(2, 0)).unwrap());
        assert!(d.dominance_leq(&l(2, 0), &l(2, 0)).unwrap());
        assert!(!d.dominance_leq(&l(2, 0), &l(1, 1)).unwrap());
        assert!(!d.dominance_leq(&l(1, 0), &l(1, 1)).unwrap());
        let half = Coweight::lattice(vec![Q::new(1, 2), Q::new(1, 2)]);
        assert!(d.dominance_leq(&half, &l(1, 0)).unwrap());
    }

    #[test]
    fn depth_examples() {
        let a2 = RootDatum::from_label("A2", LatticeKind::Sc).unwrap();
        let mu = Coweight::from_ints(&[14, 14], Basis::FundamentalCoweight);
        assert_eq!(a2.depth(&mu).unwrap(), 14);
        assert_eq!(a2.depth(&Coweight::from_ints(&[0, 0], Basis::Lattice)).unwrap(), 0);
        let b2 = RootDatum::from_label("B2", LatticeKind::Sc).unwrap();
        let l = Coweight::from_ints(&[3, 5], Basis::FundamentalCoweight);
        assert_eq!(b2.depth(&l).unwrap(), 3);
        let bad = Coweight::from_ints(&[1, 0], Basis::SimpleCoroot);
        assert!(matches!(a2.depth(&bad), Err(Error::NotDominant(_))));
    }

    #[test]
    fn pi1_examples() {
        let sc = RootDatum::from_label("E6", LatticeKind::Sc).unwrap();
        assert!(sc.pi1().is_trivial());
        let ad = RootDatum::from_label("E6", LatticeKind::Ad).unwrap();
        assert_eq!(ad.pi1().torsion, vec![3]);
        let ad = RootDatum::from_label("D4", LatticeKind::Ad).unwrap();
        assert_eq!(ad.pi1().torsion, vec![2, 2]);
        let gl = RootDatum::from_label("A3", LatticeKind::Gl).unwrap();
        assert_eq!(gl.pi1(), Pi1 { torsion: vec![], free_rank: 1 });
        let k = gl
            .kappa(&Coweight::from_ints(&[1, 1, 0, 0], Basis::Lattice))
            .unwrap();
        assert_eq!(k, vec![2]);
    }

    #[test]
    fn kappa_is_additive_mod_coroots() {
        let ad = RootDatum::from_label("A2", LatticeKind::Ad).unwrap();
        let w1 = Coweight::from_ints(&[1, 0], Basis::Lattice);
        let w2 = Coweight::from_ints(&[0, 1], Basis::Lattice);
        let k1 = ad.kappa(&w1).unwrap()[0];
        let k2 = ad.kappa(&w2).unwrap()[0];
        assert_ne!(k1, 0);
        assert_eq!((k1 + k2) % 3, 0);
        let a1 = Coweight::from_ints(&[1, 0], Basis::SimpleCoroot);
        assert_eq!(ad.kappa(&a1).unwrap(), vec![0]);
    }

    #[test]
    fn gl_flip_permutes_coroots() {
        let gl = RootDatum::from_label("A2", LatticeKind::Gl).unwrap();
        let a1: Vec<Q> = gl.simple_coroot(0).iter().map(|&x| q(x)).collect();
        let img = gl.apply_diagram(&[1, 0], &a1).unwrap();
        let a2: Vec<Q> = gl.simple_coroot(1).iter().map(|&x| q(x)).collect();
        assert_eq!(img, a2);
    }
}
