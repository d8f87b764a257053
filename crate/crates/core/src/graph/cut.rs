use alloc::vec;
use alloc::vec::Vec;

use super::{Multigraph, VertexSet};
use crate::Result;

/// An edge cut `[X, X^c]` with its size `d(X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeCutWitness {
    pub side: VertexSet,
    pub size: usize,
}

/// Minimum `d(X)` over all `∅ ⊊ X ⊊ V`, by Stoer–Wagner on the weighted
/// simple skeleton.
///
/// Returns `None` when the graph has fewer than two vertices. A disconnected
/// graph yields a size-0 cut whose side is a component. The reported side never
/// contains the last vertex.
pub fn global_min_cut(g: &Multigraph) -> Result<Option<EdgeCutWitness>> {
    g.check_set_capacity()?;
    let n = g.vertex_count();
    if n < 2 {
        return Ok(None);
    }
    let all = VertexSet::full(n);
    if !g.is_connected() {
        let comps = g.components()?;
        let side = normalize(comps[0], n, all);
        return Ok(Some(EdgeCutWitness { side, size: 0 }));
    }

    let mut w = g.multiplicity_matrix();
    let mut groups: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<EdgeCutWitness> = None;

    while active.len() > 1 {
        // maximum adjacency ordering from the first active vertex
        let mut added = vec![false; n];
        let mut conn = vec![0usize; n];
        let mut prev = active[0];
        let mut last = active[0];
        added[last] = true;
        for &v in &active {
            conn[v] = w[last][v];
        }
        for _ in 1..active.len() {
            let mut pick = usize::MAX;
            for &v in &active {
                if !added[v] && (pick == usize::MAX || conn[v] > conn[pick]) {
                    pick = v;
                }
            }
            added[pick] = true;
            prev = last;
            last = pick;
            for &v in &active {
                if !added[v] {
                    conn[v] += w[pick][v];
                }
            }
        }
        let phase = conn[last];
        let side = normalize(groups[last], n, all);
        let better = match best {
            None => true,
            Some(b) => phase < b.size || (phase == b.size && side.bits() < b.side.bits()),
        };
        if better {
            best = Some(EdgeCutWitness { side, size: phase });
        }
        // merge `last` into `prev`
        groups[prev] = groups[prev].union(groups[last]);
        for &v in &active {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
        active.retain(|&v| v != last);
    }
    Ok(best)
}

/// Exhaustive minimum cut over all `2^(n-1) - 1` sides; ties go to the side
/// with the smallest bitmask. Intended as an oracle for small graphs.
pub fn min_cut_exhaustive(g: &Multigraph) -> Result<Option<EdgeCutWitness>> {
    best_cut(g, |_| true)
}

/// Minimum essential edge cut: both sides have at least two vertices.
/// `None` when no such cut exists (fewer than four vertices).
pub fn essential_edge_connectivity(g: &Multigraph) -> Result<Option<EdgeCutWitness>> {
    let n = g.vertex_count();
    best_cut(g, |x| x.len() >= 2 && n - x.len() >= 2)
}

fn best_cut(g: &Multigraph, keep: impl Fn(VertexSet) -> bool) -> Result<Option<EdgeCutWitness>> {
    g.check_set_capacity()?;
    let n = g.vertex_count();
    if n < 2 {
        return Ok(None);
    }
    let mut best: Option<EdgeCutWitness> = None;
    // sides avoiding the last vertex cover every cut exactly once
    let limit = 1u64 << (n - 1);
    for bits in 1..limit {
        let side = VertexSet::from_bits(bits);
        if !keep(side) {
            continue;
        }
        let size = g.cut_size(side);
        if best.map_or(true, |b| size < b.size) {
            best = Some(EdgeCutWitness { side, size });
        }
    }
    Ok(best)
}

fn normalize(side: VertexSet, n: usize, all: VertexSet) -> VertexSet {
    if side.contains(n - 1) {
        all.difference(side)
    } else {
        side
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cycle, make_named, NamedPattern};

    fn named(p: NamedPattern) -> Multigraph {
        make_named(&p)
    }

    #[test]
    fn min_cut_examples() {
        let t = named(NamedPattern::T(2, 3, 3));
        assert_eq!(global_min_cut(&t).unwrap().unwrap().size, 5);
        assert_eq!(global_min_cut(&named(NamedPattern::W1)).unwrap().unwrap().size, 5);
        assert_eq!(global_min_cut(&named(NamedPattern::AK2(3))).unwrap().unwrap().size, 3);
        assert_eq!(global_min_cut(&Multigraph::new(1)).unwrap(), None);
    }

    #[test]
    fn disconnected_cut_is_a_component() {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 1), (2, 3)]).unwrap();
        let cut = global_min_cut(&g).unwrap().unwrap();
        assert_eq!(cut.size, 0);
        assert_eq!(cut.side, VertexSet::from_vertices([0, 1]));
    }

    #[test]
    fn essential_examples() {
        assert_eq!(essential_edge_connectivity(&named(NamedPattern::W2)).unwrap().unwrap().size, 8);
        assert_eq!(essential_edge_connectivity(&named(NamedPattern::AK2(5))).unwrap(), None);
        let k4e = named(NamedPattern::DoubleK4MinusEdge);
        // the 2|2 split separating the thinned pair loses one crossing edge
        assert_eq!(essential_edge_connectivity(&k4e).unwrap().unwrap().size, 7);
    }

    #[test]
    fn stoer_wagner_matches_exhaustive_on_cycles() {
        for n in 3..8 {
            for mult in 1..4 {
                let g = cycle(n, mult).unwrap();
                let sw = global_min_cut(&g).unwrap().unwrap();
                let ex = min_cut_exhaustive(&g).unwrap().unwrap();
                assert_eq!(sw.size, ex.size);
                assert_eq!(g.cut_size(sw.side), sw.size);
            }
        }
    }
}
