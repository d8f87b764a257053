//! Isomorphism, pattern embeddings and canonical forms for small multigraphs.

use alloc::vec;
use alloc::vec::Vec;

use super::{Multigraph, VertexSet};

/// Multiplicity vector of the upper triangle in column order
/// `(0,1), (0,2), (1,2), (0,3), ...`, minimized over all vertex relabellings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub multiplicities: Vec<usize>,
}

impl CanonicalForm {
    /// The representative graph; edges are listed pair by pair in column order.
    pub fn to_graph(&self) -> Multigraph {
        let n = self.vertex_count;
        let mut g = Multigraph::new(n);
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                for _ in 0..self.multiplicities[idx] {
                    g.edges.push([i, j]);
                }
                idx += 1;
            }
        }
        g
    }

    pub fn edge_count(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

pub(crate) fn upper_vector(m: &[Vec<usize>]) -> Vec<usize> {
    let n = m.len();
    let mut v = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            v.push(m[i][j]);
        }
    }
    v
}

/// Canonical form of `g`.
pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form together with a labelling `old vertex -> canonical position`
/// that realizes it.
pub fn canonical_labeling(g: &Multigraph) -> (CanonicalForm, Vec<usize>) {
    let m = g.multiplicity_matrix();
    let n = m.len();
    let mut search = MinSearch {
        m: &m,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        current: Vec::new(),
        best: None,
        best_order: Vec::new(),
    };
    search.run();
    let best = search.best.unwrap_or_default();
    let mut labeling = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        labeling[v] = pos;
    }
    (CanonicalForm { vertex_count: n, multiplicities: best }, labeling)
}

/// Whether a multiplicity matrix is already in canonical position, i.e. no
/// relabelling produces a smaller column vector.
pub(crate) fn is_canonical_matrix(m: &[Vec<usize>]) -> bool {
    let target = upper_vector(m);
    let n = m.len();
    let mut used = vec![false; n];
    let mut order = Vec::with_capacity(n);
    !finds_smaller(m, &target, &mut order, &mut used, false)
}

fn finds_smaller(m: &[Vec<usize>], target: &[usize], order: &mut Vec<usize>, used: &mut [bool], less: bool) -> bool {
    let n = m.len();
    let p = order.len();
    if p == n {
        return less;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        let mut state = if less { core::cmp::Ordering::Less } else { core::cmp::Ordering::Equal };
        if !less {
            let base = if p == 0 { 0 } else { pair_index(0, p) };
            for i in 0..p {
                let x = m[order[i]][v];
                let t = target[base + i];
                if x != t {
                    state = x.cmp(&t);
                    break;
                }
            }
        }
        match state {
            core::cmp::Ordering::Greater => continue,
            core::cmp::Ordering::Less => return true,
            core::cmp::Ordering::Equal => {
                used[v] = true;
                order.push(v);
                let r = finds_smaller(m, target, order, used, false);
                order.pop();
                used[v] = false;
                if r {
                    return true;
                }
            }
        }
    }
    false
}

struct MinSearch<'a> {
    m: &'a [Vec<usize>],
    order: Vec<usize>,
    used: Vec<bool>,
    current: Vec<usize>,
    best: Option<Vec<usize>>,
    best_order: Vec<usize>,
}

impl MinSearch<'_> {
    fn run(&mut self) {
        self.step();
    }

    fn step(&mut self) {
        let n = self.m.len();
        let p = self.order.len();
        if p == n {
            if self.best.as_ref().map_or(true, |b| self.current < *b) {
                self.best = Some(self.current.clone());
                self.best_order = self.order.clone();
            }
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            let start = self.current.len();
            for i in 0..p {
                self.current.push(self.m[self.order[i]][v]);
            }
            let end = self.current.len();
            let prune = self.best.as_ref().is_some_and(|b| self.current[..] > b[..end]);
            if !prune {
                self.used[v] = true;
                self.order.push(v);
                self.step();
                self.order.pop();
                self.used[v] = false;
            }
            self.current.truncate(start);
        }
    }
}

/// Lexicographically least bijection `φ` (as `φ[v]` for `v = 0, 1, ...`) with
/// `μ_H(φu, φv) = μ_G(u, v)` for all pairs, or `None`.
pub fn isomorphic(g: &Multigraph, h: &Multigraph) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (dg, dh) = (g.degrees(), h.degrees());
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    let (mg, mh) = (g.multiplicity_matrix(), h.multiplicity_matrix());
    let mut first = None;
    embed_all(&mg, &mh, Mode::Iso { dp: &dg, dg: &dh }, &mut |phi| {
        first = Some(phi.to_vec());
        false
    });
    first
}

/// All vertex injections `φ: V(P) -> V(G)` in lexicographic order such that
/// `μ_P(a,b) <= μ_G(φa,φb)` for every pair (`induced == false`) or equality
/// holds for every pair (`induced == true`).
pub fn find_pattern(g: &Multigraph, p: &Multigraph, induced: bool) -> Vec<Vec<usize>> {
    let (mg, mp) = (g.multiplicity_matrix(), p.multiplicity_matrix());
    let mut out = Vec::new();
    if mp.len() > mg.len() {
        return out;
    }
    let mode = if induced { Mode::Induced } else { Mode::Subgraph };
    embed_all(&mp, &mg, mode, &mut |phi| {
        out.push(phi.to_vec());
        true
    });
    out
}

/// Automorphisms of `g` in lexicographic order (the identity first).
pub fn automorphisms(g: &Multigraph) -> Vec<Vec<usize>> {
    find_pattern(g, g, true)
}

/// One representative embedding per image vertex set, keeping the first in
/// the given order.
pub fn distinct_images(embeddings: &[Vec<usize>]) -> Vec<(VertexSet, Vec<usize>)> {
    let mut out: Vec<(VertexSet, Vec<usize>)> = Vec::new();
    for phi in embeddings {
        let img = VertexSet::from_vertices(phi.iter().copied());
        if !out.iter().any(|(s, _)| *s == img) {
            out.push((img, phi.clone()));
        }
    }
    out
}

#[derive(Clone, Copy)]
enum Mode<'a> {
    Subgraph,
    Induced,
    Iso { dp: &'a [usize], dg: &'a [usize] },
}

/// Backtracking over injections from the pattern matrix `mp` into `mg`.
/// The callback returns `false` to stop.
fn embed_all(mp: &[Vec<usize>], mg: &[Vec<usize>], mode: Mode<'_>, f: &mut dyn FnMut(&[usize]) -> bool) {
    let k = mp.len();
    let n = mg.len();
    let mut phi = Vec::with_capacity(k);
    let mut used = vec![false; n];
    fn go(
        mp: &[Vec<usize>],
        mg: &[Vec<usize>],
        mode: Mode<'_>,
        phi: &mut Vec<usize>,
        used: &mut [bool],
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let a = phi.len();
        if a == mp.len() {
            return f(phi);
        }
        for x in 0..mg.len() {
            if used[x] {
                continue;
            }
            if let Mode::Iso { dp, dg } = mode {
                if dp[a] != dg[x] {
                    continue;
                }
            }
            let ok = (0..a).all(|b| {
                let want = mp[a][b];
                let have = mg[x][phi[b]];
                match mode {
                    Mode::Subgraph => want <= have,
                    _ => want == have,
                }
            });
            if !ok {
                continue;
            }
            used[x] = true;
            phi.push(x);
            let keep = go(mp, mg, mode, phi, used, f);
            phi.pop();
            used[x] = false;
            if !keep {
                return false;
            }
        }
        true
    }
    go(mp, mg, mode, &mut phi, &mut used, f);
}
