//! σ-conjugacy class records: `κ`, Newton point, defect, `μ⋄`, and the
//! Newton-polygon description of `B(GL_n, μ)`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cartan::{Coweight, LatticeKind, RootDatum};
use crate::coxeter::Automorphism;
use crate::error::{Error, Result};
use crate::linalg::solve_q;
use crate::scalar::{fmt_q, parse_q, q, Q};

/// A σ-conjugacy class `[b]`: `κ(b) ∈ π1`, dominant Newton point (lattice
/// coordinates) and defect.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaConjClass {
    pub kappa: Vec<i64>,
    pub newton: Vec<Q>,
    pub defect: u32,
}

impl Serialize for SigmaConjClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SigmaConjClass", 3)?;
        st.serialize_field("kappa", &self.kappa)?;
        let nu: Vec<String> = self.newton.iter().map(fmt_q).collect();
        st.serialize_field("nu", &nu)?;
        st.serialize_field("defect", &self.defect)?;
        st.end()
    }
}

impl SigmaConjClass {
    /// The class of `[1]`: `ν = 0`, trivial `κ`, defect 0.
    pub fn basic_unit(datum: &RootDatum) -> Self {
        let pi = datum.pi1();
        SigmaConjClass {
            kappa: vec![0; pi.torsion.len() + pi.free_rank],
            newton: vec![q(0); datum.dim()],
            defect: 0,
        }
    }

    /// The class of `t^μ` for `σ = id`: `ν = μ` dominant, `κ = κ(μ)`, defect 0.
    pub fn of_translation(datum: &RootDatum, mu: &[i64]) -> Result<Self> {
        let cw = Coweight::from_ints(mu, crate::cartan::Basis::Lattice);
        if !datum.is_dominant(&cw)? {
            return Err(Error::NotDominant(format!("{mu:?}")));
        }
        Ok(SigmaConjClass {
            kappa: datum.kappa(&cw)?,
            newton: mu.iter().map(|&x| q(x)).collect(),
            defect: 0,
        })
    }

    /// Parses `nu=…, def=…, kappa=…` (any separator among spaces and `;`).
    /// `nu` is comma-separated lattice coordinates, a single `0` meaning the
    /// zero vector; `kappa` may be omitted when `π1` is trivial.
    pub fn parse(s: &str, datum: &RootDatum) -> Result<Self> {
        let mut nu = None;
        let mut def = None;
        let mut kappa = None;
        for tok in s.split([' ', ';', '\t']).filter(|t| !t.is_empty()) {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{tok}`")))?;
            let list = |v: &str| v.split(',').filter(|x| !x.trim().is_empty()).map(|x| x.trim().to_string()).collect::<Vec<_>>();
            match k.trim() {
                "nu" => {
                    nu = Some(
                        list(v)
                            .iter()
                            .map(|x| parse_q(x).ok_or_else(|| Error::Parse(format!("bad rational `{x}`"))))
                            .collect::<Result<Vec<Q>>>()?,
                    )
                }
                "def" | "defect" => {
                    def = Some(v.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad defect `{v}`")))?)
                }
                "kappa" => {
                    kappa = Some(
                        list(v)
                            .iter()
                            .map(|x| x.parse::<i64>().map_err(|_| Error::Parse(format!("bad kappa `{x}`"))))
                            .collect::<Result<Vec<i64>>>()?,
                    )
                }
                other => return Err(Error::Parse(format!("unknown class field `{other}`"))),
            }
        }
        let dim = datum.dim();
        let mut nu = nu.ok_or_else(|| Error::Parse("class needs nu=…".into()))?;
        if nu.len() == 1 && nu[0] == q(0) {
            nu = vec![q(0); dim];
        }
        if nu.len() != dim {
            return Err(Error::BasisMismatch(format!("nu needs {dim} coordinates, got {}", nu.len())));
        }
        let pi = datum.pi1();
        let klen = pi.torsion.len() + pi.free_rank;
        let mut kappa = kappa.unwrap_or_default();
        if klen == 0 && kappa.iter().all(|&k| k == 0) {
            kappa.clear();
        }
        if kappa.len() != klen {
            return Err(Error::BasisMismatch(format!(
                "kappa needs {klen} coordinates in π1 = {pi:?}, got {}",
                kappa.len()
            )));
        }
        for (k, d) in kappa.iter_mut().zip(&pi.torsion) {
            *k = k.rem_euclid(*d);
        }
        let c = SigmaConjClass {
            kappa,
            newton: nu,
            defect: def.unwrap_or(0),
        };
        if !datum.is_dominant(&Coweight::lattice(c.newton.clone()))? {
            return Err(Error::NotDominant(format!("Newton point {:?}", c.newton.iter().map(fmt_q).collect::<Vec<_>>())));
        }
        Ok(c)
    }

    pub fn is_sigma_invariant(&self, datum: &RootDatum, sigma: &Automorphism) -> Result<bool> {
        Ok(datum.apply_diagram(sigma.perm(), &self.newton)? == self.newton)
    }

    /// `⟨ν, ρ⟩`.
    pub fn pair_rho(&self, datum: &RootDatum) -> Result<Q> {
        datum.pair_rho(&Coweight::lattice(self.newton.clone()))
    }
}

/// Average of the σ-orbit of the dominant representative of `μ`.
pub fn mu_diamond(datum: &RootDatum, mu: &[i64], sigma: &Automorphism) -> Result<Vec<Q>> {
    let (dom, _) = datum.dominant_rep(mu);
    let mut cur: Vec<Q> = dom.iter().map(|&x| q(x)).collect();
    let mut sum = cur.clone();
    let k = sigma.order();
    for _ in 1..k {
        cur = datum.apply_diagram(sigma.perm(), &cur)?;
        for (s, c) in sum.iter_mut().zip(&cur) {
            *s += c;
        }
    }
    Ok(sum.into_iter().map(|x| x / q(k as i64)).collect())
}

/// `κ(b) = κ(μ)` and `ν_b ≤ μ⋄`.
pub fn is_neutrally_acceptable(
    datum: &RootDatum,
    b: &SigmaConjClass,
    mu: &[i64],
    sigma: &Automorphism,
) -> Result<bool> {
    let k = datum.kappa(&Coweight::from_ints(mu, crate::cartan::Basis::Lattice))?;
    if k.len() != b.kappa.len() {
        return Err(Error::BasisMismatch(format!(
            "κ(b) has {} coordinates, κ(μ) has {}",
            b.kappa.len(),
            k.len()
        )));
    }
    if k != b.kappa {
        return Ok(false);
    }
    let md = mu_diamond(datum, mu, sigma)?;
    datum.dominance_leq(&Coweight::lattice(b.newton.clone()), &Coweight::lattice(md))
}

/// Coefficients `c` with `⟨v, α_j⟩ = Σ c_i ⟨α_i∨, α_j⟩`: the simple-coroot
/// coordinates of the projection of `v` to the span of the coroots.
pub fn coroot_projection(datum: &RootDatum, v: &[Q]) -> Vec<Q> {
    let r = datum.rank();
    let m: Vec<Vec<Q>> = (0..r)
        .map(|j| (0..r).map(|i| q(datum.pair_int(datum.simple_coroot(i), j))).collect())
        .collect();
    let rhs: Vec<Q> = (0..r).map(|j| datum.pair_root_lattice(v, j)).collect();
    solve_q(&m, &rhs).expect("Cartan matrix is invertible")
}

/// `μ⋄ − ν_b − 2ρ∨ ≥ 0`, tested on the projection to the coroot span so that
/// central parts of `μ⋄` and `ν_b` do not interfere.
pub fn mazur_margin(
    datum: &RootDatum,
    b: &SigmaConjClass,
    mu: &[i64],
    sigma: &Automorphism,
) -> Result<bool> {
    let md = mu_diamond(datum, mu, sigma)?;
    let tr = datum.two_rho_check();
    let tr = datum.to_lattice(&tr)?.coords;
    let diff: Vec<Q> = md
        .iter()
        .zip(&b.newton)
        .zip(&tr)
        .map(|((m, n), t)| m - n - t)
        .collect();
    Ok(coroot_projection(datum, &diff).iter().all(|c| *c >= q(0)))
}

/// `B(GL_n, μ)` as Newton polygons: nonincreasing `ν ≤ μ` with equal sums whose
/// maximal constant runs have integral totals. A run of slope `p/q` (lowest terms)
/// and length `m·q` contributes `m` to the `F`-rank of `J_b`.
pub fn gln_classes(mu: &[i64]) -> Result<Vec<SigmaConjClass>> {
    let n = mu.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDominant(format!("{mu:?} is not nonincreasing")));
    }
    let mut partial = vec![0i64; n + 1];
    for i in 0..n {
        partial[i + 1] = partial[i] + mu[i];
    }
    let (lo, hi) = (mu[n - 1], mu[0]);
    let mut out = Vec::new();
    let mut runs: Vec<(usize, i64)> = Vec::new();
    polygons(&partial, lo, hi, 0, None, &mut runs, &mut out);
    let mut classes: Vec<SigmaConjClass> = out
        .into_iter()
        .map(|runs| {
            let mut nu = Vec::with_capacity(n);
            let mut rank = 0u32;
            for &(len, total) in &runs {
                let slope = Q::new(total, len as i64);
                nu.extend(std::iter::repeat_n(slope, len));
                rank += (len as i64 / *slope.denom()) as u32;
            }
            SigmaConjClass {
                kappa: vec![partial[n]],
                newton: nu,
                defect: n as u32 - rank,
            }
        })
        .collect();
    classes.sort_by(|a, b| b.newton.cmp(&a.newton));
    Ok(classes)
}

fn polygons(
    partial: &[i64],
    lo: i64,
    hi: i64,
    pos: usize,
    prev: Option<Q>,
    runs: &mut Vec<(usize, i64)>,
    out: &mut Vec<Vec<(usize, i64)>>,
) {
    let n = partial.len() - 1;
    if pos == n {
        out.push(runs.clone());
        return;
    }
    let sum_before: i64 = runs.iter().map(|r| r.1).sum();
    for len in 1..=n - pos {
        for total in lo * len as i64..=hi * len as i64 {
            let slope = Q::new(total, len as i64);
            if prev.is_some_and(|p| slope >= p) {
                continue;
            }
            let end = pos + len;
            if end == n && sum_before + total != partial[n] {
                continue;
            }
            let fits = (1..=len).all(|j| q(sum_before) + slope * q(j as i64) <= q(partial[pos + j]));
            if !fits {
                continue;
            }
            runs.push((len, total));
            polygons(partial, lo, hi, end, Some(slope), runs, out);
            runs.pop();
        }
    }
}

/// Datum for `GL_n` with its standard lattice.
pub fn gl_datum(n: usize) -> Result<RootDatum> {
    RootDatum::from_label(&format!("A{}", n - 1), LatticeKind::Gl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::LatticeKind;

    fn qq(a: i64, b: i64) -> Q {
        Q::new(a, b)
    }

    #[test]
    fn gl2_gl3_defects() {
        let c = gln_classes(&[1, 0]).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!((c[0].newton.clone(), c[0].defect), (vec![q(1), q(0)], 0));
        assert_eq!((c[1].newton.clone(), c[1].defect), (vec![qq(1, 2), qq(1, 2)], 1));
        let c = gln_classes(&[1, 0, 0]).unwrap();
        let basic = c.iter().find(|x| x.newton == vec![qq(1, 3); 3]).unwrap();
        assert_eq!(basic.defect, 2);
        assert_eq!(gln_classes(&[5]).unwrap().len(), 1);
        assert_eq!(gln_classes(&[5]).unwrap()[0].defect, 0);
    }

    #[test]
    fn gl4_polygons() {
        let c = gln_classes(&[1, 1, 0, 0]).unwrap();
        let nus: Vec<Vec<Q>> = c.iter().map(|x| x.newton.clone()).collect();
        assert!(nus.contains(&vec![qq(2, 3), qq(2, 3), qq(2, 3), q(0)]));
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn mu_diamond_examples() {
        let a2 = RootDatum::from_label("A2", LatticeKind::Ad).unwrap();
        let flip = Automorphism::new(a2.system(), vec![1, 0]).unwrap();
        let d = mu_diamond(&a2, &[2, 0], &flip).unwrap();
        assert_eq!(d, vec![q(1), q(1)]);
        let aa = RootDatum::from_label("A1xA1", LatticeKind::Sc).unwrap();
        let swap = Automorphism::new(aa.system(), vec![1, 0]).unwrap();
        assert_eq!(mu_diamond(&aa, &[5, 0], &swap).unwrap(), vec![qq(5, 2), qq(5, 2)]);
        assert_eq!(mu_diamond(&aa, &[5, 0], &Automorphism::identity(2)).unwrap(), vec![q(5), q(0)]);
    }

    #[test]
    fn acceptance_and_margin() {
        let id1 = Automorphism::identity(1);
        let a1 = RootDatum::from_label("A1", LatticeKind::Sc).unwrap();
        let one = SigmaConjClass::basic_unit(&a1);
        assert!(is_neutrally_acceptable(&a1, &one, &[6], &id1).unwrap());
        assert!(mazur_margin(&a1, &one, &[6], &id1).unwrap());
        assert!(mazur_margin(&a1, &one, &[1], &id1).unwrap());
        assert!(!mazur_margin(&a1, &one, &[0], &id1).unwrap());
        let gl2 = gl_datum(2).unwrap();
        let b = SigmaConjClass::parse("nu=1/2,1/2 def=1 kappa=1", &gl2).unwrap();
        assert!(is_neutrally_acceptable(&gl2, &b, &[1, 0], &id1).unwrap());
        assert!(mazur_margin(&gl2, &b, &[14, 0], &id1).unwrap());
        let b = SigmaConjClass::parse("nu=1,0 kappa=1", &gl2).unwrap();
        assert!(is_neutrally_acceptable(&gl2, &b, &[1, 0], &id1).unwrap());
        assert!(SigmaConjClass::parse("nu=2,-1 kappa=1", &gl2).is_ok());
        let b = SigmaConjClass::parse("nu=2,-1 kappa=1", &gl2).unwrap();
        assert!(!is_neutrally_acceptable(&gl2, &b, &[1, 0], &id1).unwrap());
    }

    #[test]
    fn json_shape() {
        let gl2 = gl_datum(2).unwrap();
        let b = SigmaConjClass::parse("nu=1/2,1/2 def=1 kappa=1", &gl2).unwrap();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"kappa":[1],"nu":["1/2","1/2"],"defect":1}"#);
    }
}
