//! Loopless multigraphs with identity-bearing parallel edges.
//!
//! Edges are numbered densely `0..m`; every edit operation that removes edges
//! renumbers the survivors in their original order and reports the old-to-new
//! correspondence, so orientations and flows can be carried across edits.

mod cut;
mod enumerate;
mod iso;
mod vset;

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

pub use cut::{essential_edge_connectivity, global_min_cut, min_cut_exhaustive, EdgeCutWitness};
pub use enumerate::{enumerate_class, ClassBounds, MAX_ENUMERATION_VERTICES};
pub use iso::{
    automorphisms, canonical_form, canonical_labeling, distinct_images, find_pattern, isomorphic, CanonicalForm,
};
pub use vset::{for_each_k_subset, Iter as VertexSetIter, VertexSet, MAX_SET_VERTICES};

/// A loopless undirected multigraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Result of merging vertex sets into single vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Multigraph,
    /// Old vertex to new vertex.
    pub vertex_map: Vec<usize>,
    /// Old edge to new edge; `None` for edges that became loops and were dropped.
    pub edge_map: Vec<Option<usize>>,
}

/// An induced subgraph together with the maps back into its host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Multigraph,
    /// New vertex to host vertex, ascending.
    pub vertices: Vec<usize>,
    /// New edge to host edge.
    pub edges: Vec<usize>,
}

/// A path `v0 v1 ... vn` given by its vertices and the edge used for each step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiftPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl LiftPath {
    pub fn new(vertices: Vec<usize>, edges: Vec<usize>) -> Self {
        LiftPath { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }
}

/// Result of lifting one path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifted {
    pub graph: Multigraph,
    /// Old edge to new edge; `None` for the removed path edges.
    pub edge_map: Vec<Option<usize>>,
    /// Id of the new edge joining the path ends (always the last id).
    pub new_edge: usize,
}

impl Multigraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from `(u, v, multiplicity)` triples, adding the parallel
    /// edges of each triple consecutively.
    pub fn from_multiplicities(n: usize, pairs: &[(usize, usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v, mult) in pairs {
            for _ in 0..mult {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric multiplicity matrix; pairs are emitted in
    /// row-major order of the upper triangle.
    pub fn from_matrix(matrix: &[Vec<usize>]) -> Self {
        let n = matrix.len();
        let mut g = Multigraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                for _ in 0..matrix[u][v] {
                    g.edges.push([u, v]);
                }
            }
        }
        g
    }

    /// Appends an edge and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop { vertex: u });
        }
        self.edges.push([u, v]);
        Ok(self.edges.len() - 1)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints `(endpoint_a, endpoint_b)` of edge `e`.
    #[inline]
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let [a, b] = self.edges[e];
        (a, b)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&[a, b]| (a, b))
    }

    /// The endpoint of `e` that is not `v`.
    #[inline]
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.n })
        }
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { edge: e, count: self.edges.len() })
        }
    }

    /// Fails when the graph is too large for bitmask vertex sets.
    pub fn check_set_capacity(&self) -> Result<()> {
        if self.n <= MAX_SET_VERTICES {
            Ok(())
        } else {
            Err(Error::TooManyVertices { count: self.n, max: MAX_SET_VERTICES })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|&&[a, b]| a == v || b == v).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &[a, b] in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Number of parallel edges between two distinct vertices.
    pub fn multiplicity(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex { vertex: u });
        }
        Ok(self.edges.iter().filter(|&&[a, b]| (a == u && b == v) || (a == v && b == u)).count())
    }

    /// μ(G), the largest multiplicity over all pairs (0 without edges).
    pub fn max_multiplicity(&self) -> usize {
        let m = self.multiplicity_matrix();
        m.iter().flat_map(|row| row.iter().copied()).max().unwrap_or(0)
    }

    /// Symmetric `n × n` matrix of pair multiplicities.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0usize; self.n]; self.n];
        for &[a, b] in &self.edges {
            m[a][b] += 1;
            m[b][a] += 1;
        }
        m
    }

    /// Edge ids incident with `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| {
                let [a, b] = self.edges[e];
                a == v || b == v
            })
            .collect()
    }

    /// Edge ids joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| {
                let [a, b] = self.edges[e];
                (a == u && b == v) || (a == v && b == u)
            })
            .collect()
    }

    /// Neighbour bitmasks of the simple skeleton.
    pub fn adjacency_sets(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for &[a, b] in &self.edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    /// `d(X)`, the number of edges with exactly one end in `x`.
    pub fn cut_size(&self, x: VertexSet) -> usize {
        self.edges.iter().filter(|&&[a, b]| x.contains(a) != x.contains(b)).count()
    }

    /// Number of edges with both ends in `x`.
    pub fn inner_edge_count(&self, x: VertexSet) -> usize {
        self.edges.iter().filter(|&&[a, b]| x.contains(a) && x.contains(b)).count()
    }

    /// Connected components as vertex sets, ordered by least vertex.
    pub fn components(&self) -> Result<Vec<VertexSet>> {
        self.check_set_capacity()?;
        let adj = self.adjacency_sets();
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let comp = reach(&adj, VertexSet::full(self.n), start);
            seen = seen.union(comp);
            comps.push(comp);
        }
        Ok(comps)
    }

    /// True for graphs with at most one vertex and for connected graphs.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        // union-find keeps this usable beyond 64 vertices
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = self.n;
        for &[a, b] in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps == 1
    }

    /// Whether the subgraph induced by `s` is connected (the empty set is not).
    pub fn induces_connected(&self, s: VertexSet) -> bool {
        match s.min() {
            None => false,
            Some(start) => reach(&self.adjacency_sets(), s, start) == s,
        }
    }

    /// Merges every set in `sets` (pairwise disjoint, nonempty) into one vertex.
    ///
    /// New vertices are numbered by the order of their least original vertex,
    /// so untouched vertices keep their relative order.
    pub fn contract_sets(&self, sets: &[VertexSet]) -> Result<Contraction> {
        self.check_set_capacity()?;
        let all = VertexSet::full(self.n);
        let mut used = VertexSet::EMPTY;
        for &s in sets {
            if s.is_empty() {
                return Err(Error::EmptyVertexSet);
            }
            if !s.is_subset(all) {
                let v = s.difference(all).min().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex: v, count: self.n });
            }
            if !s.is_disjoint(used) {
                return Err(Error::InvalidPartition("contracted sets overlap"));
            }
            used = used.union(s);
        }
        let mut rep: Vec<usize> = (0..self.n).collect();
        for &s in sets {
            let m = s.min().unwrap_or(0);
            for v in s {
                rep[v] = m;
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if rep[v] == v {
                label[v] = next;
                next += 1;
            }
        }
        let vertex_map: Vec<usize> = (0..self.n).map(|v| label[rep[v]]).collect();
        let (graph, edge_map) = self.quotient_by_labels(&vertex_map, next);
        Ok(Contraction { graph, vertex_map, edge_map })
    }

    /// Contracts the vertex set `s` to a single vertex.
    pub fn contract(&self, s: VertexSet) -> Result<Contraction> {
        self.contract_sets(&[s])
    }

    /// Identifies vertices with equal labels (`labels[v] < parts`) and drops
    /// the resulting loops; surviving edges keep their relative order.
    pub fn quotient_by_labels(&self, labels: &[usize], parts: usize) -> (Multigraph, Vec<Option<usize>>) {
        let mut g = Multigraph::new(parts);
        let mut map = Vec::with_capacity(self.edges.len());
        for &[a, b] in &self.edges {
            let (la, lb) = (labels[a], labels[b]);
            if la == lb {
                map.push(None);
            } else {
                g.edges.push([la, lb]);
                map.push(Some(g.edges.len() - 1));
            }
        }
        (g, map)
    }

    /// The subgraph induced by `s`, with vertices relabelled in ascending order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<InducedSubgraph> {
        self.check_set_capacity()?;
        if let Some(v) = s.difference(VertexSet::full(self.n)).min() {
            return Err(Error::VertexOutOfRange { vertex: v, count: self.n });
        }
        let vertices = s.to_vec();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut graph = Multigraph::new(vertices.len());
        let mut edges = Vec::new();
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if s.contains(a) && s.contains(b) {
                graph.edges.push([local[a], local[b]]);
                edges.push(e);
            }
        }
        Ok(InducedSubgraph { graph, vertices, edges })
    }

    /// Lifts a path: deletes its edges and appends one edge joining its ends.
    pub fn lift_path(&self, path: &LiftPath) -> Result<Lifted> {
        self.validate_path(path)?;
        let v0 = path.start();
        let vn = path.end();
        let mut removed = vec![false; self.edges.len()];
        for &e in &path.edges {
            removed[e] = true;
        }
        let mut graph = Multigraph::new(self.n);
        let mut edge_map = Vec::with_capacity(self.edges.len());
        for (e, &pair) in self.edges.iter().enumerate() {
            if removed[e] {
                edge_map.push(None);
            } else {
                graph.edges.push(pair);
                edge_map.push(Some(graph.edges.len() - 1));
            }
        }
        graph.edges.push([v0, vn]);
        let new_edge = graph.edges.len() - 1;
        Ok(Lifted { graph, edge_map, new_edge })
    }

    /// Checks that `path` is a walk along distinct existing edges with distinct ends.
    pub fn validate_path(&self, path: &LiftPath) -> Result<()> {
        if path.edges.is_empty() || path.vertices.len() != path.edges.len() + 1 {
            return Err(Error::InvalidPath("need n >= 1 edges and n + 1 vertices"));
        }
        for &v in &path.vertices {
            self.check_vertex(v)?;
        }
        if path.start() == path.end() {
            return Err(Error::InvalidPath("ends coincide, lifting would create a loop"));
        }
        for (i, &e) in path.edges.iter().enumerate() {
            self.check_edge(e)?;
            let (a, b) = self.endpoints(e);
            let (x, y) = (path.vertices[i], path.vertices[i + 1]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(Error::InvalidPath("edge does not join consecutive path vertices"));
            }
            if path.edges[..i].contains(&e) {
                return Err(Error::InvalidPath("edge used twice"));
            }
        }
        Ok(())
    }

    /// Removes one edge, renumbering the rest.
    pub fn remove_edge(&self, e: usize) -> Result<Multigraph> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.edges.remove(e);
        Ok(g)
    }

    /// Same graph with vertices renamed by `perm` (old `v` becomes `perm[v]`);
    /// edge ids are kept.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        Multigraph { n: self.n, edges: self.edges.iter().map(|&[a, b]| [perm[a], perm[b]]).collect() }
    }

    /// Stable 64-bit FNV-1a digest of the vertex count and edge list.
    pub fn fingerprint(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut feed = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(PRIME);
            }
        };
        feed(self.n as u64);
        feed(self.edges.len() as u64);
        for &[a, b] in &self.edges {
            feed(a as u64);
            feed(b as u64);
        }
        h
    }

    /// Whether the two graphs have the same multiplicity on every pair,
    /// ignoring edge ids and endpoint order.
    pub fn same_multiplicities(&self, other: &Multigraph) -> bool {
        self.n == other.n && self.multiplicity_matrix() == other.multiplicity_matrix()
    }
}

/// Vertices reachable from `start` inside `within`.
pub(crate) fn reach(adj: &[VertexSet], within: VertexSet, start: usize) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(adj[v]);
        }
        next = next.intersection(within).difference(seen);
        seen = seen.union(next);
        frontier = next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cycle, make_named, NamedPattern};

    fn w1() -> Multigraph {
        make_named(&NamedPattern::W1)
    }

    #[test]
    fn degrees_of_named_graphs() {
        assert_eq!(w1().degree(0).unwrap(), 9);
        let five_k2 = make_named(&NamedPattern::AK2(5));
        assert_eq!(five_k2.degree(0).unwrap(), 5);
        assert_eq!(five_k2.degree(1).unwrap(), 5);
        let w2 = make_named(&NamedPattern::W2);
        assert_eq!(w2.degree(2).unwrap(), 5);
        assert_eq!(w2.degree(3).unwrap(), 5);
        assert!(matches!(w1().degree(4), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(w1().multiplicity(0, 2).unwrap(), 3);
        let t = make_named(&NamedPattern::T(1, 3, 3));
        assert_eq!(t.multiplicity(0, 1).unwrap(), 1);
        let p = make_named(&NamedPattern::Path(3));
        assert_eq!(p.multiplicity(0, 3).unwrap(), 0);
        assert!(matches!(t.multiplicity(1, 1), Err(Error::SameVertex { .. })));
        assert_eq!(w1().max_multiplicity(), 3);
    }

    #[test]
    fn loops_are_rejected() {
        assert_eq!(Multigraph::from_edges(2, &[(1, 1)]), Err(Error::Loop { vertex: 1 }));
    }

    #[test]
    fn contraction_examples() {
        let t = make_named(&NamedPattern::T(1, 3, 3));
        let c = t.contract(VertexSet::from_vertices([0, 1])).unwrap();
        assert!(c.graph.same_multiplicities(&make_named(&NamedPattern::AK2(6))));
        assert_eq!(c.edge_map[0], None);
        assert_eq!(c.vertex_map, vec![0, 0, 1]);

        let c = w1().contract(VertexSet::from_vertices([0, 1])).unwrap();
        assert!(isomorphic(&c.graph, &make_named(&NamedPattern::T(1, 4, 4))).is_some());

        let c = w1().contract(VertexSet::singleton(2)).unwrap();
        assert_eq!(c.graph, w1());
    }

    #[test]
    fn contraction_never_creates_loops() {
        let g = cycle(6, 2).unwrap();
        let s = VertexSet::from_vertices([1, 2, 4]);
        let c = g.contract(s).unwrap();
        assert_eq!(c.graph.edge_count(), g.edge_count() - g.inner_edge_count(s));
        for (a, b) in c.graph.edges() {
            assert_ne!(a, b);
        }
    }

    #[test]
    fn lift_examples() {
        // T_{1,1,3}: apex 0, triple pair {1,2}; lift 1-0-2
        let t = make_named(&NamedPattern::T(1, 1, 3));
        let path = LiftPath::new(vec![1, 0, 2], vec![0, 1]);
        let lifted = t.lift_path(&path).unwrap();
        assert_eq!(lifted.graph.multiplicity(1, 2).unwrap(), 4);
        assert_eq!(lifted.graph.degree(0).unwrap(), 0);
        assert_eq!(lifted.new_edge, 3);
        assert_eq!(lifted.edge_map[..2], [None, None]);

        let c5 = cycle(5, 1).unwrap();
        let lifted = c5.lift_path(&LiftPath::new(vec![0, 1, 2], vec![0, 1])).unwrap();
        assert_eq!(lifted.graph.degree(1).unwrap(), 0);
        let sub = lifted.graph.induced_subgraph(VertexSet::from_vertices([0, 2, 3, 4])).unwrap();
        assert!(isomorphic(&sub.graph, &cycle(4, 1).unwrap()).is_some());
    }

    #[test]
    fn lift_errors() {
        let g = cycle(4, 1).unwrap();
        let closed = LiftPath::new(vec![0, 1, 2, 3, 0], vec![0, 1, 2, 3]);
        assert!(matches!(g.lift_path(&closed), Err(Error::InvalidPath(_))));
        let wrong = LiftPath::new(vec![0, 2], vec![0]);
        assert!(matches!(g.lift_path(&wrong), Err(Error::InvalidPath(_))));
        let reused = LiftPath::new(vec![0, 1, 0, 1], vec![0, 0, 0]);
        assert!(g.lift_path(&reused).is_err());
    }

    #[test]
    fn induced_examples() {
        let w2 = make_named(&NamedPattern::W2);
        let top = w2.induced_subgraph(VertexSet::from_vertices([0, 1])).unwrap();
        assert!(top.graph.same_multiplicities(&make_named(&NamedPattern::AK2(3))));
        let all = w1().induced_subgraph(VertexSet::full(4)).unwrap();
        assert_eq!(all.graph, w1());
        let outer = w1().induced_subgraph(VertexSet::from_vertices([1, 2, 3])).unwrap();
        assert!(outer.graph.same_multiplicities(&make_named(&NamedPattern::T(1, 1, 1))));
    }

    #[test]
    fn connectivity_helpers() {
        let mut g = Multigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components().unwrap().len(), 2);
        g.add_edge(1, 2).unwrap();
        assert!(g.is_connected());
        assert!(Multigraph::new(1).is_connected());
        assert!(Multigraph::new(0).is_connected());
    }
}
