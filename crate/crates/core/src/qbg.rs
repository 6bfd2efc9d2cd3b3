//! Quantum Bruhat graphs: construction, distances `d_Γ`, weights `wt(x, y)` and
//! exact-weight path search.

use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::coxeter::{Automorphism, EnumeratedGroup};
use crate::error::{Error, Result};
use crate::scalar::Zphi;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub source: u32,
    pub target: u32,
    pub root: u16,
    pub kind: EdgeKind,
}

/// Nonnegative coroot-lattice vector in the simple-coroot basis.
pub type WeightVector = Vec<i64>;

pub const UNREACHED: u16 = u16::MAX;

/// Adjacency in CSR form over the dense indices of an [`EnumeratedGroup`].
#[derive(Clone, Debug)]
pub struct QuantumBruhatGraph {
    group: Arc<EnumeratedGroup>,
    offsets: Vec<u32>,
    targets: Vec<u32>,
    roots: Vec<u16>,
    down: Vec<bool>,
    rev_offsets: Vec<u32>,
    rev_sources: Vec<u32>,
    /// Positive coroots in simple-coroot coordinates; empty for non-crystallographic graphs.
    coroots: Vec<Vec<i64>>,
}

fn csr_reverse(n: usize, offsets: &[u32], targets: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut deg = vec![0u32; n + 1];
    for &t in targets {
        deg[t as usize + 1] += 1;
    }
    for i in 0..n {
        deg[i + 1] += deg[i];
    }
    let mut fill = deg.clone();
    let mut sources = vec![0u32; targets.len()];
    for s in 0..n {
        for e in offsets[s]..offsets[s + 1] {
            let t = targets[e as usize] as usize;
            sources[fill[t] as usize] = s as u32;
            fill[t] += 1;
        }
    }
    (deg, sources)
}

impl QuantumBruhatGraph {
    /// Builds the graph of a finite Weyl group.
    pub fn build(group: Arc<EnumeratedGroup>) -> Result<Self> {
        if !group.group().roots().is_crystallographic() {
            return Err(Error::NotCrystallographic("the quantum Bruhat graph".into()));
        }
        Ok(Self::build_unchecked(group))
    }

    /// Also accepts `H3`/`H4`: down edges use the exact `ℤ[φ]` value of
    /// `⟨α∨, 2ρ⟩` and exist only where the length condition can hold.
    pub fn build_generalized(group: Arc<EnumeratedGroup>) -> Result<Self> {
        if group
            .group()
            .roots()
            .components()
            .iter()
            .any(|c| c.ty.is_dihedral())
        {
            return Err(Error::NotCrystallographic(
                "the quantum Bruhat graph of a dihedral type".into(),
            ));
        }
        Ok(Self::build_unchecked(group))
    }

    fn build_unchecked(group: Arc<EnumeratedGroup>) -> Self {
        let rs = group.group().roots();
        let npos = rs.num_positive();
        let words: Vec<Vec<usize>> = (0..npos).map(|a| rs.reflection_word(a)).collect();
        let heights: Vec<Option<usize>> = (0..npos)
            .map(|a| {
                let h: Zphi = rs.coroot_height2(a);
                (h.is_integer() && h.a > 0).then_some(h.a as usize)
            })
            .collect();
        let n = group.len();
        let per_vertex: Vec<Vec<(u32, u16, bool)>> = (0..n as u32)
            .into_par_iter()
            .map(|w| {
                let lw = group.length(w);
                let mut out = Vec::new();
                for (a, word) in words.iter().enumerate() {
                    let t = word.iter().fold(w, |x, &i| group.mul_simple_right(x, i));
                    let lt = group.length(t);
                    if lt == lw + 1 {
                        out.push((t, a as u16, false));
                    } else if let Some(h) = heights[a] {
                        if lt + h == lw + 1 {
                            out.push((t, a as u16, true));
                        }
                    }
                }
                out
            })
            .collect();
        let mut offsets = Vec::with_capacity(n + 1);
        let total: usize = per_vertex.iter().map(Vec::len).sum();
        let mut targets = Vec::with_capacity(total);
        let mut roots = Vec::with_capacity(total);
        let mut down = Vec::with_capacity(total);
        offsets.push(0u32);
        for v in per_vertex {
            for (t, a, d) in v {
                targets.push(t);
                roots.push(a);
                down.push(d);
            }
            offsets.push(targets.len() as u32);
        }
        let (rev_offsets, rev_sources) = csr_reverse(n, &offsets, &targets);
        let coroots = if rs.is_crystallographic() {
            rs.positive_roots()
                .iter()
                .map(|r| r.coroot.iter().map(|x| x.a).collect())
                .collect()
        } else {
            Vec::new()
        };
        QuantumBruhatGraph {
            group,
            offsets,
            targets,
            roots,
            down,
            rev_offsets,
            rev_sources,
            coroots,
        }
    }

    /// Reassembles a graph from stored edges (sorted by source, then root).
    pub fn from_edges(group: Arc<EnumeratedGroup>, edges: &[Edge]) -> Result<Self> {
        let n = group.len();
        let mut offsets = vec![0u32; n + 1];
        for e in edges {
            if e.source as usize >= n || e.target as usize >= n {
                return Err(Error::Parse("edge endpoint out of range".into()));
            }
            offsets[e.source as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets: Vec<u32> = edges.iter().map(|e| e.target).collect();
        let roots = edges.iter().map(|e| e.root).collect();
        let down = edges.iter().map(|e| e.kind == EdgeKind::Down).collect();
        let (rev_offsets, rev_sources) = csr_reverse(n, &offsets, &targets);
        let rs = group.group().roots();
        let coroots = if rs.is_crystallographic() {
            rs.positive_roots()
                .iter()
                .map(|r| r.coroot.iter().map(|x| x.a).collect())
                .collect()
        } else {
            Vec::new()
        };
        Ok(QuantumBruhatGraph {
            group,
            offsets,
            targets,
            roots,
            down,
            rev_offsets,
            rev_sources,
            coroots,
        })
    }

    pub fn group(&self) -> &EnumeratedGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<EnumeratedGroup> {
        Arc::clone(&self.group)
    }

    pub fn num_vertices(&self) -> usize {
        self.group.len()
    }

    pub fn num_edges(&self) -> usize {
        self.targets.len()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn is_weighted(&self) -> bool {
        !self.coroots.is_empty()
    }

    pub fn out_edges(&self, v: u32) -> impl Iterator<Item = Edge> + '_ {
        let (a, b) = (self.offsets[v as usize], self.offsets[v as usize + 1]);
        (a..b).map(move |e| {
            let e = e as usize;
            Edge {
                source: v,
                target: self.targets[e],
                root: self.roots[e],
                kind: if self.down[e] { EdgeKind::Down } else { EdgeKind::Up },
            }
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.num_vertices() as u32).flat_map(move |v| self.out_edges(v))
    }

    pub fn out_degree(&self, v: u32) -> usize {
        (self.offsets[v as usize + 1] - self.offsets[v as usize]) as usize
    }

    /// Weight of an edge: `0` for up edges, `α∨` for down edges.
    pub fn edge_weight(&self, e: &Edge) -> WeightVector {
        match e.kind {
            EdgeKind::Up => vec![0; self.rank()],
            EdgeKind::Down => self.coroots[e.root as usize].clone(),
        }
    }

    pub fn coroot(&self, root: usize) -> &[i64] {
        &self.coroots[root]
    }

    /// Single-source BFS distances.
    pub fn distances_from(&self, x: u32) -> Vec<u16> {
        let mut dist = vec![UNREACHED; self.num_vertices()];
        let mut queue = Vec::with_capacity(self.num_vertices());
        self.bfs_into(x, &mut dist, &mut queue);
        dist
    }

    fn bfs_into(&self, x: u32, dist: &mut [u16], queue: &mut Vec<u32>) {
        queue.clear();
        dist[x as usize] = 0;
        queue.push(x);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head] as usize;
            head += 1;
            let du = dist[u] + 1;
            for &t in &self.targets[self.offsets[u] as usize..self.offsets[u + 1] as usize] {
                if dist[t as usize] == UNREACHED {
                    dist[t as usize] = du;
                    queue.push(t);
                }
            }
        }
    }

    pub fn distance(&self, x: u32, y: u32) -> usize {
        self.distances_from(x)[y as usize] as usize
    }

    /// BFS from `x` carrying path weights; every shortest-path DAG edge is checked
    /// for consistency, so `unique` certifies that all shortest paths from `x`
    /// to each vertex share one weight.
    pub fn weighted_bfs(&self, x: u32) -> Result<WeightedBfs> {
        if !self.is_weighted() {
            return Err(Error::NotCrystallographic("path weights".into()));
        }
        let n = self.num_vertices();
        let r = self.rank();
        let mut dist = vec![UNREACHED; n];
        let mut weight = vec![0i64; n * r];
        let mut queue = Vec::with_capacity(n);
        let mut conflict = None;
        dist[x as usize] = 0;
        queue.push(x);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u as usize];
            for e in self.out_edges(u) {
                let t = e.target as usize;
                let mut cand: Vec<i64> = weight[u as usize * r..(u as usize + 1) * r].to_vec();
                if e.kind == EdgeKind::Down {
                    for (c, a) in cand.iter_mut().zip(&self.coroots[e.root as usize]) {
                        *c += a;
                    }
                }
                if dist[t] == UNREACHED {
                    dist[t] = du + 1;
                    weight[t * r..(t + 1) * r].copy_from_slice(&cand);
                    queue.push(e.target);
                } else if dist[t] == du + 1
                    && weight[t * r..(t + 1) * r] != cand[..]
                    && conflict.is_none()
                {
                    conflict = Some(e.target);
                }
            }
        }
        Ok(WeightedBfs {
            source: x,
            rank: r,
            dist,
            weight,
            conflict,
        })
    }

    pub fn weight(&self, x: u32, y: u32) -> Result<WeightVector> {
        Ok(self.weighted_bfs(x)?.weight_to(y).to_vec())
    }

    /// Whether some path from `x` to `y` has weight exactly `c`.
    pub fn exists_path_with_weight(&self, x: u32, y: u32, c: &[i64]) -> Result<bool> {
        if !self.is_weighted() {
            return Err(Error::NotCrystallographic("path weights".into()));
        }
        if c.len() != self.rank() || c.iter().any(|&v| v < 0) {
            return Err(Error::Parse(format!("weight {c:?} is not a nonnegative coroot vector")));
        }
        let mut seen: FxHashSet<(u32, Vec<i64>)> = FxHashSet::default();
        let mut stack = vec![(x, c.to_vec())];
        seen.insert((x, c.to_vec()));
        while let Some((v, budget)) = stack.pop() {
            if budget.iter().all(|&b| b == 0) {
                // only up edges remain: reachability is the Bruhat order
                if self.group.bruhat_leq(v, y) {
                    return Ok(true);
                }
                continue;
            }
            for e in self.out_edges(v) {
                let next = match e.kind {
                    EdgeKind::Up => budget.clone(),
                    EdgeKind::Down => {
                        let nb: Vec<i64> = budget
                            .iter()
                            .zip(&self.coroots[e.root as usize])
                            .map(|(b, a)| b - a)
                            .collect();
                        if nb.iter().any(|&b| b < 0) {
                            continue;
                        }
                        nb
                    }
                };
                let key = (e.target, next);
                if !seen.contains(&key) {
                    seen.insert(key.clone());
                    stack.push(key);
                }
            }
        }
        Ok(false)
    }

    /// Exact `d(x, t)` if it is at most `limit`, by meeting forward and backward
    /// balls. `scratch` holds per-vertex stamps and must have length `2·|W0|`.
    fn bounded_distance(
        &self,
        x: u32,
        t: u32,
        limit: usize,
        scratch: &mut BidirScratch,
    ) -> Option<usize> {
        if x == t {
            return Some(0);
        }
        if limit == 0 {
            return None;
        }
        scratch.stamp += 1;
        let stamp = scratch.stamp;
        let fwd_depth = limit.div_ceil(2);
        let bwd_depth = limit - fwd_depth;
        scratch.frontier.clear();
        scratch.frontier.push(x);
        scratch.fmark[x as usize] = stamp;
        scratch.fdist[x as usize] = 0;
        let mut level = 0;
        let mut start = 0;
        while level < fwd_depth {
            let end = scratch.frontier.len();
            for k in start..end {
                let u = scratch.frontier[k] as usize;
                for &v in &self.targets[self.offsets[u] as usize..self.offsets[u + 1] as usize] {
                    if scratch.fmark[v as usize] != stamp {
                        scratch.fmark[v as usize] = stamp;
                        scratch.fdist[v as usize] = (level + 1) as u16;
                        scratch.frontier.push(v);
                    }
                }
            }
            start = end;
            level += 1;
        }
        let mut best = if scratch.fmark[t as usize] == stamp {
            Some(scratch.fdist[t as usize] as usize)
        } else {
            None
        };
        scratch.back.clear();
        scratch.back.push(t);
        scratch.bmark[t as usize] = stamp;
        let mut level = 0;
        let mut start = 0;
        while level < bwd_depth {
            let end = scratch.back.len();
            for k in start..end {
                let u = scratch.back[k] as usize;
                for &v in
                    &self.rev_sources[self.rev_offsets[u] as usize..self.rev_offsets[u + 1] as usize]
                {
                    if scratch.bmark[v as usize] != stamp {
                        scratch.bmark[v as usize] = stamp;
                        scratch.back.push(v);
                        if scratch.fmark[v as usize] == stamp {
                            let d = scratch.fdist[v as usize] as usize + level + 1;
                            best = Some(best.map_or(d, |b: usize| b.min(d)));
                        }
                    }
                }
            }
            start = end;
            level += 1;
        }
        best.filter(|&d| d <= limit)
    }

    /// `min{d_Γ(x, σ(x)w0)}` with the smallest minimizing index.
    pub fn min_twisted_distance(&self, sigma: &Automorphism) -> (usize, u32) {
        let g = &*self.group;
        let sig = g.sigma_table(sigma);
        let tw0 = g.times_longest_table();
        let target = |x: u32| tw0[sig[x as usize] as usize];
        // cap from exact BFS on a deterministic sample
        let mut sample: Vec<u32> = (0..g.len().min(64) as u32).collect();
        let w0_word = g.word(g.longest());
        let mut p = 0u32;
        for &i in &w0_word {
            p = g.mul_simple_right(p, i);
            sample.push(p);
        }
        sample.sort_unstable();
        sample.dedup();
        let (cap, cap_x) = sample
            .par_iter()
            .map(|&x| (self.distances_from(x)[target(x) as usize] as usize, x))
            .min()
            .expect("nonempty sample");
        if cap == 0 {
            return (0, cap_x);
        }
        let n = g.len();
        let found = (0..n as u32)
            .into_par_iter()
            .map_init(
                || BidirScratch::new(n),
                |scratch, x| {
                    self.bounded_distance(x, target(x), cap - 1, scratch)
                        .map(|d| (d, x))
                },
            )
            .flatten()
            .min();
        match found {
            Some(best) => best,
            None => (cap, cap_x),
        }
    }

    /// Distance matrix, row-major; refuses above `max_vertices`.
    pub fn all_pairs_matrix(&self, max_vertices: usize) -> Result<Vec<u16>> {
        let n = self.num_vertices();
        if n > max_vertices {
            return Err(Error::budget("all-pairs distance matrix", n as u64, max_vertices as u64));
        }
        let rows: Vec<Vec<u16>> = (0..n as u32)
            .into_par_iter()
            .map(|x| self.distances_from(x))
            .collect();
        Ok(rows.concat())
    }

    /// Streaming all-pairs BFS: diameter, distance histogram, reachability.
    pub fn all_pairs_summary(&self) -> AllPairsSummary {
        let n = self.num_vertices();
        let hists: Vec<Vec<u64>> = (0..n as u32)
            .into_par_iter()
            .map_init(
                || (vec![UNREACHED; n], Vec::with_capacity(n)),
                |(dist, queue), x| {
                    dist.fill(UNREACHED);
                    self.bfs_into(x, dist, queue);
                    let mut h = vec![0u64; 1];
                    for &d in dist.iter() {
                        let d = if d == UNREACHED { 0 } else { d as usize + 1 };
                        if h.len() <= d {
                            h.resize(d + 1, 0);
                        }
                        h[d] += 1;
                    }
                    h
                },
            )
            .collect();
        let mut hist = vec![0u64; 1];
        for h in hists {
            if hist.len() < h.len() {
                hist.resize(h.len(), 0);
            }
            for (a, b) in hist.iter_mut().zip(h) {
                *a += b;
            }
        }
        let unreachable_pairs = hist[0];
        let histogram: Vec<u64> = hist[1..].to_vec();
        let total: u64 = histogram
            .iter()
            .enumerate()
            .map(|(d, c)| d as u64 * c)
            .sum();
        AllPairsSummary {
            vertices: n,
            edges: self.num_edges(),
            diameter: histogram.len().saturating_sub(1),
            histogram,
            total_distance: total,
            unreachable_pairs,
        }
    }

    /// Adjacency TSV: `src_word, dst_word, kind, weight_coords`.
    pub fn export_tsv(&self) -> String {
        let g = &*self.group;
        let mut out = String::from("src\tdst\tkind\tweight\n");
        for e in self.edges() {
            let w = if self.is_weighted() {
                self.edge_weight(&e)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            } else {
                format!("root{}", e.root)
            };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                crate::coxeter::format_word(&g.word(e.source)),
                crate::coxeter::format_word(&g.word(e.target)),
                if e.kind == EdgeKind::Up { "up" } else { "down" },
                w
            ));
        }
        out
    }
}

struct BidirScratch {
    stamp: u32,
    fmark: Vec<u32>,
    bmark: Vec<u32>,
    fdist: Vec<u16>,
    frontier: Vec<u32>,
    back: Vec<u32>,
}

impl BidirScratch {
    fn new(n: usize) -> Self {
        BidirScratch {
            stamp: 0,
            fmark: vec![0; n],
            bmark: vec![0; n],
            fdist: vec![0; n],
            frontier: Vec::new(),
            back: Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct WeightedBfs {
    pub source: u32,
    rank: usize,
    pub dist: Vec<u16>,
    weight: Vec<i64>,
    /// A vertex reached by two shortest paths of different weight, if any.
    pub conflict: Option<u32>,
}

impl WeightedBfs {
    pub fn weight_to(&self, y: u32) -> &[i64] {
        &self.weight[y as usize * self.rank..(y as usize + 1) * self.rank]
    }

    pub fn is_unique(&self) -> bool {
        self.conflict.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AllPairsSummary {
    pub vertices: usize,
    pub edges: usize,
    pub diameter: usize,
    pub histogram: Vec<u64>,
    pub total_distance: u64,
    pub unreachable_pairs: u64,
}
