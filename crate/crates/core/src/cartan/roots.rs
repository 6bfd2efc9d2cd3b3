//! Root systems realized exactly: integer or ℤ[φ] coordinates for matrix types,
//! angle indices for dihedral components.

use rustc_hash::FxHashMap;

use super::label::{CartanType, SimpleType};
use crate::error::Result;
use crate::scalar::{Q, Zphi};

/// A positive root. `coords`/`coroot` are in the simple (co)root basis of the
/// whole system; both are empty for roots of dihedral components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub coords: Vec<Zphi>,
    pub coroot: Vec<Zphi>,
    pub component: usize,
    /// Number of simple reflections needed to reach this root from a simple root.
    pub depth: u32,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub ty: SimpleType,
    /// Index of the first simple reflection of this component.
    pub offset: usize,
    pub highest_root: usize,
}

/// Roots are addressed by signed indices: `0..N` are the positive roots
/// (simple roots first, in generator order), `r + N` is `−r`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    components: Vec<Component>,
    coxeter: Vec<Vec<u32>>,
    cartan: Option<Vec<Vec<Zphi>>>,
    roots: Vec<Root>,
    simple_action: Vec<Vec<u16>>,
    reflection: Vec<Vec<u16>>,
    parent: Vec<Option<(u8, u16)>>,
}

fn local_closure(a: &[Vec<Zphi>]) -> Vec<(Vec<Zphi>, Vec<Zphi>)> {
    let r = a.len();
    let unit = |i: usize| {
        let mut v = vec![Zphi::ZERO; r];
        v[i] = Zphi::ONE;
        v
    };
    let mut out: Vec<(Vec<Zphi>, Vec<Zphi>)> = (0..r).map(|i| (unit(i), unit(i))).collect();
    let mut seen: FxHashMap<Vec<Zphi>, usize> =
        out.iter().enumerate().map(|(i, (c, _))| (c.clone(), i)).collect();
    let mut head = 0;
    while head < out.len() {
        let (beta, beta_c) = out[head].clone();
        head += 1;
        for j in 0..r {
            if beta == unit(j) {
                continue;
            }
            let pair = (0..r).fold(Zphi::ZERO, |acc, k| acc + beta[k] * a[j][k]);
            if pair.is_zero() {
                continue;
            }
            let copair = (0..r).fold(Zphi::ZERO, |acc, k| acc + beta_c[k] * a[k][j]);
            let mut nb = beta.clone();
            nb[j] -= pair;
            let mut nc = beta_c.clone();
            nc[j] -= copair;
            if !seen.contains_key(&nb) {
                seen.insert(nb.clone(), out.len());
                out.push((nb, nc));
            }
        }
    }
    out
}

impl RootSystem {
    pub fn from_label(label: &str) -> Result<Self> {
        Ok(Self::new(label.parse()?))
    }

    pub fn new(cartan_type: CartanType) -> Self {
        let rank = cartan_type.rank();
        let ncomp = cartan_type.components().len();

        let mut coxeter = vec![vec![2u32; rank]; rank];
        let mut cartan = if cartan_type.components().iter().any(|c| c.is_dihedral()) {
            None
        } else {
            Some(vec![vec![Zphi::ZERO; rank]; rank])
        };

        // Positive roots per component: simple first, others later.
        let mut simple: Vec<Root> = Vec::with_capacity(rank);
        let mut others: Vec<(usize, Vec<Zphi>, Root)> = Vec::new();
        // Per component: local simple action on local signed indices.
        struct Local {
            global_of_local: Vec<usize>,
            action: Vec<Vec<usize>>,
            n: usize,
        }
        let mut locals: Vec<Local> = Vec::with_capacity(ncomp);
        let mut offset = 0;
        for (ci, ty) in cartan_type.components().iter().enumerate() {
            let r = ty.rank();
            let m = ty.coxeter_matrix();
            for i in 0..r {
                for j in 0..r {
                    coxeter[offset + i][offset + j] = m[i][j];
                }
            }
            for i in 0..rank {
                coxeter[i][i] = 1;
            }
            let embed = |v: &[Zphi]| {
                let mut g = vec![Zphi::ZERO; rank];
                g[offset..offset + r].copy_from_slice(v);
                g
            };
            if let Some(a) = ty.cartan_matrix() {
                if let Some(c) = cartan.as_mut() {
                    for i in 0..r {
                        for j in 0..r {
                            c[offset + i][offset + j] = a[i][j];
                        }
                    }
                }
                let local = local_closure(&a);
                let n = local.len();
                let index: FxHashMap<Vec<Zphi>, usize> = local
                    .iter()
                    .enumerate()
                    .map(|(i, (c, _))| (c.clone(), i))
                    .collect();
                let mut action = vec![vec![0usize; 2 * n]; r];
                for (j, row) in action.iter_mut().enumerate() {
                    for (li, (beta, _)) in local.iter().enumerate() {
                        let pair = (0..r).fold(Zphi::ZERO, |acc, k| acc + beta[k] * a[j][k]);
                        let mut nb = beta.clone();
                        nb[j] -= pair;
                        let img = match index.get(&nb) {
                            Some(&p) => p,
                            None => {
                                let neg: Vec<Zphi> = nb.iter().map(|&x| -x).collect();
                                index[&neg] + n
                            }
                        };
                        row[li] = img;
                        row[li + n] = if img < n { img + n } else { img - n };
                    }
                }
                let mut global_of_local = vec![usize::MAX; n];
                for (li, (c, co)) in local.into_iter().enumerate() {
                    let root = Root {
                        coords: embed(&c),
                        coroot: embed(&co),
                        component: ci,
                        depth: 0,
                    };
                    if li < r {
                        global_of_local[li] = offset + li;
                        simple.push(root);
                    } else {
                        let height = c.iter().fold(Zphi::ZERO, |s, &x| s + x);
                        let mut key = vec![height];
                        key.extend(c);
                        others.push((li, key, root));
                    }
                }
                locals.push(Local {
                    global_of_local,
                    action,
                    n,
                });
            } else {
                // Dihedral I_m: local index k is the root at angle kπ/m.
                let mm = ty.n;
                let local_of_angle = |k: usize| -> usize {
                    if k == 0 {
                        0
                    } else if k == mm - 1 {
                        1
                    } else {
                        k + 1
                    }
                };
                let angle_of_local = |li: usize| -> usize {
                    match li {
                        0 => 0,
                        1 => mm - 1,
                        _ => li - 1,
                    }
                };
                let n = mm;
                let mut action = vec![vec![0usize; 2 * n]; 2];
                for (s, row) in action.iter_mut().enumerate() {
                    let a = if s == 0 { 0 } else { mm - 1 };
                    for signed in 0..2 * n {
                        let (li, neg) = if signed < n { (signed, false) } else { (signed - n, true) };
                        let k = angle_of_local(li) + if neg { mm } else { 0 };
                        let img = (2 * a + 3 * mm - k) % (2 * mm);
                        let (ik, ineg) = if img < mm { (img, false) } else { (img - mm, true) };
                        row[signed] = local_of_angle(ik) + if ineg { n } else { 0 };
                    }
                }
                let mut global_of_local = vec![usize::MAX; n];
                for li in 0..n {
                    let root = Root {
                        coords: Vec::new(),
                        coroot: Vec::new(),
                        component: ci,
                        depth: 0,
                    };
                    if li < 2 {
                        global_of_local[li] = offset + li;
                        simple.push(root);
                    } else {
                        let key = vec![Zphi::int(angle_of_local(li) as i64)];
                        others.push((li, key, root));
                    }
                }
                locals.push(Local {
                    global_of_local,
                    action,
                    n,
                });
            }
            offset += r;
        }

        others.sort_by(|x, y| (x.2.component, &x.1).cmp(&(y.2.component, &y.1)));
        let mut roots = simple;
        for (li, _, root) in others {
            let ci = root.component;
            locals[ci].global_of_local[li] = roots.len();
            roots.push(root);
        }
        let n = roots.len();
        assert!(2 * n < u16::MAX as usize, "root system too large");

        let mut simple_action = vec![vec![0u16; 2 * n]; rank];
        let mut offset = 0;
        for (ci, ty) in cartan_type.components().iter().enumerate() {
            let loc = &locals[ci];
            let lift = |ls: usize| -> usize {
                if ls < loc.n {
                    loc.global_of_local[ls]
                } else {
                    loc.global_of_local[ls - loc.n] + n
                }
            };
            for j in 0..ty.rank() {
                let row = &mut simple_action[offset + j];
                for (g, slot) in row.iter_mut().enumerate() {
                    *slot = g as u16;
                }
                for ls in 0..2 * loc.n {
                    row[lift(ls)] = lift(loc.action[j][ls]) as u16;
                }
            }
            offset += ty.rank();
        }

        // Parents: α = s_j(β) with β of smaller depth.
        let mut parent: Vec<Option<(u8, u16)>> = vec![None; n];
        let mut depth = vec![u32::MAX; n];
        let mut queue: std::collections::VecDeque<usize> = (0..rank).collect();
        for d in depth.iter_mut().take(rank) {
            *d = 0;
        }
        while let Some(b) = queue.pop_front() {
            for (j, row) in simple_action.iter().enumerate() {
                let img = row[b] as usize;
                if img < n && depth[img] == u32::MAX {
                    depth[img] = depth[b] + 1;
                    parent[img] = Some((j as u8, b as u16));
                    queue.push_back(img);
                }
            }
        }
        for (root, d) in roots.iter_mut().zip(&depth) {
            root.depth = *d;
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| depth[a]);
        let mut reflection = vec![Vec::new(); n];
        for &a in &order {
            reflection[a] = match parent[a] {
                None => simple_action[a].clone(),
                Some((j, b)) => {
                    let sj = &simple_action[j as usize];
                    let sb = &reflection[b as usize];
                    (0..2 * n).map(|g| sj[sb[sj[g] as usize] as usize]).collect()
                }
            };
        }

        let mut components = Vec::with_capacity(ncomp);
        let mut offset = 0;
        for (ci, ty) in cartan_type.components().iter().enumerate() {
            let highest_root = (0..n)
                .filter(|&a| roots[a].component == ci)
                .max_by_key(|&a| depth[a])
                .expect("nonempty component");
            components.push(Component {
                ty: *ty,
                offset,
                highest_root,
            });
            offset += ty.rank();
        }

        RootSystem {
            cartan_type,
            rank,
            components,
            coxeter,
            cartan,
            roots,
            simple_action,
            reflection,
            parent,
        }
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Component index owning simple reflection `i`.
    pub fn component_of_generator(&self, i: usize) -> usize {
        self.roots[i].component
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter
    }

    pub fn is_crystallographic(&self) -> bool {
        self.cartan_type.is_crystallographic()
    }

    /// Full Cartan matrix; `None` if some component is dihedral.
    pub fn cartan_zphi(&self) -> Option<&[Vec<Zphi>]> {
        self.cartan.as_deref()
    }

    /// Integer Cartan matrix for crystallographic systems.
    pub fn cartan_matrix(&self) -> Option<Vec<Vec<i64>>> {
        if !self.is_crystallographic() {
            return None;
        }
        let c = self.cartan.as_ref()?;
        Some(c.iter().map(|row| row.iter().map(|x| x.a).collect()).collect())
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, a: usize) -> &Root {
        &self.roots[a % self.roots.len()]
    }

    #[inline]
    pub fn is_positive(&self, r: usize) -> bool {
        r < self.roots.len()
    }

    #[inline]
    pub fn negate(&self, r: usize) -> usize {
        let n = self.roots.len();
        if r < n {
            r + n
        } else {
            r - n
        }
    }

    /// Coordinates of a signed root in the simple-root basis.
    pub fn signed_coords(&self, r: usize) -> Vec<Zphi> {
        let n = self.roots.len();
        if r < n {
            self.roots[r].coords.clone()
        } else {
            self.roots[r - n].coords.iter().map(|&x| -x).collect()
        }
    }

    /// Image of signed root `r` under simple reflection `i`.
    #[inline]
    pub fn simple_reflect(&self, i: usize, r: usize) -> usize {
        self.simple_action[i][r] as usize
    }

    pub fn simple_action(&self, i: usize) -> &[u16] {
        &self.simple_action[i]
    }

    /// `s_α(β)` on signed indices.
    #[inline]
    pub fn reflect_root(&self, beta: usize, alpha: usize) -> usize {
        self.reflection[alpha % self.roots.len()][beta] as usize
    }

    pub fn reflection_table(&self, alpha: usize) -> &[u16] {
        &self.reflection[alpha % self.roots.len()]
    }

    /// A (palindromic, not necessarily reduced) word for `s_α`, 0-based.
    pub fn reflection_word(&self, alpha: usize) -> Vec<usize> {
        let mut a = alpha % self.roots.len();
        let mut left = Vec::new();
        while let Some((j, b)) = self.parent[a] {
            left.push(j as usize);
            a = b as usize;
        }
        let mut w = left.clone();
        w.push(a);
        w.extend(left.iter().rev());
        w
    }

    pub fn height(&self, a: usize) -> Zphi {
        self.roots[a].coords.iter().fold(Zphi::ZERO, |s, &x| s + x)
    }

    /// `⟨α∨, 2ρ⟩` for a positive root of a matrix component.
    pub fn coroot_height2(&self, a: usize) -> Zphi {
        self.roots[a].coroot.iter().fold(Zphi::ZERO, |s, &x| s + x) * 2
    }

    /// `2ρ` in simple-root coordinates.
    pub fn two_rho(&self) -> Vec<Zphi> {
        let mut s = vec![Zphi::ZERO; self.rank];
        for r in &self.roots {
            for (acc, &x) in s.iter_mut().zip(&r.coords) {
                *acc += x;
            }
        }
        s
    }

    /// `ρ` in simple-root coordinates (crystallographic only).
    pub fn rho(&self) -> Option<Vec<Q>> {
        self.is_crystallographic()
            .then(|| self.two_rho().iter().map(|x| Q::new(x.a, 2)).collect())
    }

    /// `ρ∨` in simple-coroot coordinates (crystallographic only).
    pub fn rho_check(&self) -> Option<Vec<Q>> {
        if !self.is_crystallographic() {
            return None;
        }
        let mut s = vec![0i64; self.rank];
        for r in &self.roots {
            for (acc, x) in s.iter_mut().zip(&r.coroot) {
                *acc += x.a;
            }
        }
        Some(s.into_iter().map(|x| Q::new(x, 2)).collect())
    }

    pub fn highest_root(&self, component: usize) -> usize {
        self.components[component].highest_root
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_label(s).unwrap()
    }

    #[test]
    fn root_counts() {
        for (label, n) in [
            ("A1", 1),
            ("A2", 3),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D6", 30),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
            ("H3", 15),
            ("H4", 60),
            ("I5", 5),
            ("I12", 12),
            ("A1xA1", 2),
            ("A2xB2xI5", 12),
        ] {
            assert_eq!(rs(label).num_positive(), n, "{label}");
        }
    }

    #[test]
    fn simple_reflections_permute_all_roots() {
        for label in ["A3", "B4", "C3", "D5", "E6", "F4", "G2", "H3", "H4", "I7", "A1xG2"] {
            let r = rs(label);
            let n = r.num_positive();
            for i in 0..r.rank() {
                let mut img: Vec<usize> = (0..2 * n).map(|g| r.simple_reflect(i, g)).collect();
                assert_eq!(r.simple_reflect(i, i), i + n);
                for g in 0..2 * n {
                    assert_eq!(r.simple_reflect(i, r.simple_reflect(i, g)), g);
                }
                img.sort();
                assert_eq!(img, (0..2 * n).collect::<Vec<_>>(), "{label} s{i}");
            }
        }
    }

    #[test]
    fn h3_golden_coordinates() {
        let r = rs("H3");
        let img = r.simple_reflect(0, 1);
        assert_eq!(r.signed_coords(img), vec![Zphi::PHI, Zphi::ONE, Zphi::ZERO]);
        assert!(r.positive_roots().iter().any(|x| x.coords.iter().any(|c| c.b != 0)));
    }

    #[test]
    fn reflect_root_examples() {
        let r = rs("A2");
        let b = r.reflect_root(1, 0);
        assert_eq!(r.signed_coords(b), vec![Zphi::ONE, Zphi::ONE]);
        for a in 0..3 {
            assert_eq!(r.reflect_root(a, a), a + 3);
        }
    }

    #[test]
    fn reflection_words_act_as_reflections() {
        for label in ["B3", "G2", "H3", "I8", "E6"] {
            let r = rs(label);
            let n = r.num_positive();
            for a in 0..n {
                let w = r.reflection_word(a);
                for g in 0..2 * n {
                    let img = w.iter().rev().fold(g, |x, &j| r.simple_reflect(j, x));
                    assert_eq!(img, r.reflect_root(g, a));
                }
            }
        }
    }

    #[test]
    fn rho_pairings() {
        for label in ["A4", "B3", "C4", "D5", "E7", "F4", "G2"] {
            let r = rs(label);
            let a = r.cartan_matrix().unwrap();
            let rho = r.rho().unwrap();
            let rhoc = r.rho_check().unwrap();
            for i in 0..r.rank() {
                let p: Q = (0..r.rank()).map(|k| rho[k] * a[i][k]).sum();
                assert_eq!(p, Q::from(1), "{label} <a{i}v, rho>");
                let pc: Q = (0..r.rank()).map(|k| rhoc[k] * a[k][i]).sum();
                assert_eq!(pc, Q::from(1), "{label} <rhov, a{i}>");
            }
        }
    }

    #[test]
    fn theta_check_pairing_a2() {
        let r = rs("A2");
        let theta = r.highest_root(0);
        assert_eq!(r.coroot_height2(theta), Zphi::int(4));
    }

    #[test]
    fn highest_roots() {
        let g2 = rs("G2");
        let t = g2.highest_root(0);
        assert_eq!(g2.root(t).coords, vec![Zphi::int(3), Zphi::int(2)]);
        let e8 = rs("E8");
        let t = e8.highest_root(0);
        let c: Vec<i64> = e8.root(t).coords.iter().map(|x| x.a).collect();
        assert_eq!(c, vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }
}
