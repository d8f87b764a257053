//! Vertex partitions, the weight function and spanning-tree packing.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{reach, Multigraph, VertexSet};
use crate::{Error, Result};

/// A cover of `{0, ..., n-1}` by pairwise disjoint nonempty parts.
///
/// Parts are stored ordered by least vertex, so two partitions with the same
/// parts compare equal. A single part is allowed; the weight minimizers below
/// only ever range over partitions with at least two parts (or the single
/// vertex of K1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    parts: Vec<VertexSet>,
}

impl VertexPartition {
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        if n > crate::graph::MAX_SET_VERTICES {
            return Err(Error::TooManyVertices { count: n, max: crate::graph::MAX_SET_VERTICES });
        }
        let mut seen = VertexSet::EMPTY;
        for &p in &parts {
            if p.is_empty() {
                return Err(Error::InvalidPartition("empty part"));
            }
            if !p.is_disjoint(seen) {
                return Err(Error::InvalidPartition("parts overlap"));
            }
            seen = seen.union(p);
        }
        if seen != VertexSet::full(n) {
            return Err(Error::InvalidPartition("parts do not cover the vertex set"));
        }
        let mut parts = parts;
        parts.sort_by_key(|p| VertexSet::min(*p));
        Ok(VertexPartition { parts })
    }

    /// Partition from a label per vertex (labels need not be contiguous).
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let mut parts: Vec<(usize, VertexSet)> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            match parts.iter_mut().find(|(x, _)| *x == l) {
                Some((_, s)) => s.insert(v),
                None => parts.push((l, VertexSet::singleton(v))),
            }
        }
        VertexPartition::new(labels.len(), parts.into_iter().map(|(_, s)| s).collect())
    }

    /// All vertices in singleton parts.
    pub fn trivial(n: usize) -> Self {
        VertexPartition { parts: (0..n).map(VertexSet::singleton).collect() }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// Number of parts `t`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    /// Restricted-growth string: `labels[v]` is the index of the part of `v`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.vertex_count()];
        for (i, p) in self.parts.iter().enumerate() {
            for v in *p {
                labels[v] = i;
            }
        }
        labels
    }

    /// Part sizes in decreasing order, the partition's type.
    pub fn part_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.parts.iter().map(|p| p.len()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    fn check_for(&self, g: &Multigraph) -> Result<()> {
        if self.vertex_count() != g.vertex_count() {
            return Err(Error::InvalidPartition("partition does not match the vertex count"));
        }
        Ok(())
    }
}

/// `G/P` with the maps from old vertices to parts and old edges to new edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Multigraph,
    pub part_map: Vec<usize>,
    pub edge_map: Vec<Option<usize>>,
}

pub fn quotient(g: &Multigraph, p: &VertexPartition) -> Result<Quotient> {
    p.check_for(g)?;
    let part_map = p.labels();
    let (graph, edge_map) = g.quotient_by_labels(&part_map, p.len());
    Ok(Quotient { graph, part_map, edge_map })
}

/// Number of edges joining different parts of the labelling.
fn crossing_edges(g: &Multigraph, labels: &[usize]) -> usize {
    g.edges().filter(|&(a, b)| labels[a] != labels[b]).count()
}

fn weight_from(cross: usize, t: usize) -> i64 {
    2 * cross as i64 - 10 * t as i64 + 16
}

/// `w_G(P) = Σ d(V_i) − 10t + 16`.
pub fn partition_weight(g: &Multigraph, p: &VertexPartition) -> Result<i64> {
    p.check_for(g)?;
    let w = weight_from(crossing_edges(g, &p.labels()), p.len());
    assert!(w % 2 == 0, "partition weight must be even");
    Ok(w)
}

/// Minimum weight with the lexicographically least minimizing partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphWeight {
    pub value: i64,
    pub partition: VertexPartition,
}

/// Calls `f` with the restricted-growth string and part count of every
/// partition of `{0, ..., n-1}` into at most `max_parts` parts, in
/// lexicographic order of the strings. Stops when `f` returns `false`.
pub fn for_each_partition(n: usize, max_parts: usize, mut f: impl FnMut(&[usize], usize) -> bool) {
    fn go(
        labels: &mut Vec<usize>,
        n: usize,
        used: usize,
        max_parts: usize,
        f: &mut dyn FnMut(&[usize], usize) -> bool,
    ) -> bool {
        if labels.len() == n {
            return f(labels, used);
        }
        let top = if used < max_parts { used + 1 } else { used };
        for l in 0..top {
            labels.push(l);
            let keep = go(labels, n, used.max(l + 1), max_parts, f);
            labels.pop();
            if !keep {
                return false;
            }
        }
        true
    }
    if n == 0 {
        f(&[], 0);
        return;
    }
    let mut labels = Vec::with_capacity(n);
    go(&mut labels, n, 0, max_parts.max(1), &mut f);
}

fn parts_of(labels: &[usize], t: usize) -> Vec<VertexSet> {
    let mut parts = vec![VertexSet::EMPTY; t];
    for (v, &l) in labels.iter().enumerate() {
        parts[l].insert(v);
    }
    parts
}

/// `w(G)`: the minimum of `w_G(P)` over partitions with at least two parts,
/// all of them inducing connected subgraphs. `w(K1) = 6`.
///
/// Splitting a part that induces a disconnected subgraph into its components
/// lowers the weight by 10 per extra component, so the restriction does not
/// change the minimum.
pub fn graph_weight(g: &Multigraph) -> Result<GraphWeight> {
    g.check_set_capacity()?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::TooFewVertices { count: 0, min: 1 });
    }
    if n == 1 {
        let partition = VertexPartition::trivial(1);
        return Ok(GraphWeight { value: 6, partition });
    }
    let adj = g.adjacency_sets();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best: Option<(i64, Vec<usize>, usize)> = None;
    for_each_partition(n, n, |labels, t| {
        if t < 2 {
            return true;
        }
        let cross = edges.iter().filter(|&&(a, b)| labels[a] != labels[b]).count();
        let w = weight_from(cross, t);
        if best.as_ref().is_some_and(|(bw, _, _)| w >= *bw) {
            return true;
        }
        let connected = parts_of(labels, t).into_iter().all(|p| {
            let start = p.min().unwrap_or(0);
            reach(&adj, p, start) == p
        });
        if connected {
            best = Some((w, labels.to_vec(), t));
        }
        true
    });
    // n >= 2 always admits the all-singletons partition
    let (value, labels, _) = best.expect("singleton partition has connected parts");
    Ok(GraphWeight { value, partition: VertexPartition::from_labels(&labels)? })
}

/// `σ(H) = 6 − w(H)`; zero for K1.
pub fn co_weight(h: &Multigraph) -> Result<i64> {
    Ok(6 - graph_weight(h)?.value)
}

/// The partition of `G` obtained from a partition `p` of `G/H` (where the
/// components of `H` are given by `h_parts`, contracted in the manner of
/// [`Multigraph::contract_sets`]) by re-expanding every contracted vertex.
pub fn restored_partition(g: &Multigraph, h_parts: &[VertexSet], p: &VertexPartition) -> Result<VertexPartition> {
    let c = g.contract_sets(h_parts)?;
    if p.vertex_count() != c.graph.vertex_count() {
        return Err(Error::InvalidPartition("partition does not match the quotient"));
    }
    let labels = p.labels();
    let restored: Vec<usize> = c.vertex_map.iter().map(|&q| labels[q]).collect();
    VertexPartition::from_labels(&restored)
}

/// `w_G(P) − Σ_{i≤ℓ} (6 − w_{H_i}(Q_i)) − w_G(P_ℓ)` where `H_i = G[V_i]`,
/// `Q_i` partitions `H_i` (on its vertices relabelled in ascending order) and
/// `P_ℓ` replaces each of the first `ℓ` parts by the parts of `Q_i`.
pub fn refinement_residual(
    g: &Multigraph,
    p: &VertexPartition,
    refinements: &[VertexPartition],
    ell: usize,
) -> Result<i64> {
    p.check_for(g)?;
    if ell > p.len() || refinements.len() < ell {
        return Err(Error::InvalidParameter("need one refinement for each of the first ell parts"));
    }
    let mut total = partition_weight(g, p)?;
    let mut refined: Vec<VertexSet> = Vec::new();
    for (&part, q) in p.parts().iter().zip(refinements).take(ell) {
        let h = g.induced_subgraph(part)?;
        if q.vertex_count() != h.graph.vertex_count() {
            return Err(Error::InvalidPartition("refinement does not match its part"));
        }
        total -= 6 - partition_weight(&h.graph, q)?;
        for &local in q.parts() {
            refined.push(local.iter().map(|x| h.vertices[x]).collect());
        }
    }
    refined.extend(p.parts().iter().skip(ell).copied());
    let p_ell = VertexPartition::new(g.vertex_count(), refined)?;
    total -= partition_weight(g, &p_ell)?;
    Ok(total)
}

/// A maximum family of edge-disjoint spanning trees, as edge-id lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePacking {
    pub trees: Vec<Vec<usize>>,
}

impl TreePacking {
    pub fn count(&self) -> usize {
        self.trees.len()
    }
}

/// Maximum number of edge-disjoint spanning trees, by matroid-union
/// augmentation along shortest exchange paths.
///
/// Disconnected graphs pack no spanning tree. Graphs with fewer than two
/// vertices are rejected since every number of empty trees would qualify.
pub fn tree_packing(g: &Multigraph) -> Result<TreePacking> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { count: n, min: 2 });
    }
    if !g.is_connected() {
        return Ok(TreePacking { trees: Vec::new() });
    }
    let m = g.edge_count();
    let mut which: Vec<Option<usize>> = vec![None; m];
    let mut best: Vec<Option<usize>> = which.clone();
    let mut k = 0;
    while (k + 1) * (n - 1) <= m {
        k += 1;
        let mut packed = which.iter().filter(|x| x.is_some()).count();
        for e in 0..m {
            if packed == k * (n - 1) {
                break;
            }
            if which[e].is_none() && augment(g, &mut which, k, e) {
                packed += 1;
            }
        }
        if packed < k * (n - 1) {
            k -= 1;
            break;
        }
        best.clone_from(&which);
    }
    let mut trees = vec![Vec::new(); k];
    for (e, w) in best.iter().enumerate() {
        if let Some(i) = *w {
            if i < k {
                trees[i].push(e);
            }
        }
    }
    Ok(TreePacking { trees })
}

/// Tries to insert edge `e` into the union of `k` forests.
fn augment(g: &Multigraph, which: &mut [Option<usize>], k: usize, e: usize) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    // incidence lists per forest
    let mut adj: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![Vec::new(); n]; k];
    for (f, w) in which.iter().enumerate() {
        if let Some(i) = *w {
            let (a, b) = g.endpoints(f);
            adj[i][a].push((b, f));
            adj[i][b].push((a, f));
        }
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; m];
    let mut seen = vec![false; m];
    seen[e] = true;
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(e);
    while let Some(x) = queue.pop_front() {
        let (a, b) = g.endpoints(x);
        for i in 0..k {
            if which[x] == Some(i) {
                continue;
            }
            match forest_path(&adj[i], a, b) {
                None => {
                    // x fits into forest i; shift the exchange chain
                    let (mut cur, mut target) = (x, i);
                    loop {
                        which[cur] = Some(target);
                        match parent[cur] {
                            Some((h, j)) => {
                                cur = h;
                                target = j;
                            }
                            None => return true,
                        }
                    }
                }
                Some(path) => {
                    for f in path {
                        if !seen[f] {
                            seen[f] = true;
                            parent[f] = Some((x, i));
                            queue.push_back(f);
                        }
                    }
                }
            }
        }
    }
    false
}

/// Edge ids of the path from `a` to `b` in a forest, or `None` if they lie in
/// different trees.
fn forest_path(adj: &[Vec<(usize, usize)>], a: usize, b: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut via: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[a] = true;
    let mut stack = vec![a];
    while let Some(v) = stack.pop() {
        if v == b {
            break;
        }
        for &(u, f) in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                via[u] = Some((v, f));
                stack.push(u);
            }
        }
    }
    if !seen[b] {
        return None;
    }
    let mut path = Vec::new();
    let mut v = b;
    while let Some((p, f)) = via[v] {
        path.push(f);
        v = p;
    }
    Some(path)
}
