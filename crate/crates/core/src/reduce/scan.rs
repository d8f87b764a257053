//! Occurrences of the configurations that cannot appear in a smallest
//! planar graph that is S5-contractible but not strongly Z5-connected.

use alloc::vec;
use alloc::vec::Vec;

use crate::catalog::{make_named, NamedPattern};
use crate::graph::{distinct_images, find_pattern, Multigraph, VertexSet};
use crate::Result;

/// A copy of a small pattern `H` (vertices in pattern order) together with
/// paths whose ends lie in `H` and whose interiors avoid it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPattern {
    pub h: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ForbiddenReport {
    /// One embedding of `T(1,1,3)` per vertex image.
    pub t113: Vec<Vec<usize>>,
    /// Induced `T(2,2,2)` with two internally disjoint 2-paths sharing an end.
    pub t222_two_paths: Vec<PathPattern>,
    /// Induced `Q(2,3,3,3)` with a path of at most 3 edges.
    pub q2333_short_path: Vec<PathPattern>,
    /// Induced `Q(2,2,3,3)` or `Q(2,3,2,3)` with a 2-path and another
    /// internally disjoint path of at most 3 edges.
    pub q2233_paths: Vec<PathPattern>,
    /// Induced `Q(2,2,2,3)` with the three 2-paths `v1 x v2`, `v2 y v3`,
    /// `v3 z v4`, where `y` is doubly joined to both `v2` and `v3`.
    pub q2223_triple: Vec<PathPattern>,
}

impl ForbiddenReport {
    pub fn is_empty(&self) -> bool {
        self.total() == 0
    }

    pub fn total(&self) -> usize {
        self.t113.len()
            + self.t222_two_paths.len()
            + self.q2333_short_path.len()
            + self.q2233_paths.len()
            + self.q2223_triple.len()
    }
}

/// Paths with 2 to `max_len` edges between distinct vertices of `h` through
/// vertices outside `h`, each listed once with its smaller end first.
fn h_paths(adj: &[VertexSet], h: VertexSet, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(adj: &[VertexSet], h: VertexSet, max_len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for w in adj[last].iter() {
            if h.contains(w) {
                if path.len() >= 2 && w > path[0] {
                    let mut p = path.clone();
                    p.push(w);
                    out.push(p);
                }
            } else if path.len() < max_len && !path.contains(&w) {
                path.push(w);
                go(adj, h, max_len, path, out);
                path.pop();
            }
        }
    }
    for a in h.iter() {
        let mut path = vec![a];
        go(adj, h, max_len, &mut path, &mut out);
    }
    out
}

fn interior(p: &[usize]) -> &[usize] {
    &p[1..p.len() - 1]
}

fn internally_disjoint(p: &[usize], q: &[usize]) -> bool {
    interior(p).iter().all(|x| !interior(q).contains(x))
}

fn copies(g: &Multigraph, p: NamedPattern) -> Vec<Vec<usize>> {
    let all = find_pattern(g, &make_named(&p), true);
    distinct_images(&all).into_iter().map(|(_, phi)| phi).collect()
}

/// Scans `g` for the five configurations.
pub fn forbidden_scan(g: &Multigraph) -> Result<ForbiddenReport> {
    g.check_set_capacity()?;
    let adj = g.adjacency_sets();
    let mult = g.multiplicity_matrix();
    let mut report = ForbiddenReport::default();

    let t113 = find_pattern(g, &make_named(&NamedPattern::T(1, 1, 3)), false);
    report.t113 = distinct_images(&t113).into_iter().map(|(_, phi)| phi).collect();

    for h in copies(g, NamedPattern::T(2, 2, 2)) {
        let hs = VertexSet::from_vertices(h.iter().copied());
        let paths = h_paths(&adj, hs, 2);
        'outer: for (i, p) in paths.iter().enumerate() {
            for q in &paths[i + 1..] {
                let share = p[0] == q[0] || p[0] == q[2] || p[2] == q[0] || p[2] == q[2];
                if share && internally_disjoint(p, q) {
                    report.t222_two_paths.push(PathPattern { h: h.clone(), paths: vec![p.clone(), q.clone()] });
                    break 'outer;
                }
            }
        }
    }

    for h in copies(g, NamedPattern::Q(2, 3, 3, 3)) {
        let hs = VertexSet::from_vertices(h.iter().copied());
        if let Some(p) = h_paths(&adj, hs, 3).into_iter().next() {
            report.q2333_short_path.push(PathPattern { h, paths: vec![p] });
        }
    }

    let mut mixed = copies(g, NamedPattern::Q(2, 2, 3, 3));
    mixed.extend(copies(g, NamedPattern::Q(2, 3, 2, 3)));
    for h in mixed {
        let hs = VertexSet::from_vertices(h.iter().copied());
        let paths = h_paths(&adj, hs, 3);
        let hit = paths.iter().filter(|p| p.len() == 3).find_map(|p| {
            paths.iter().find(|q| *q != p && internally_disjoint(p, q)).map(|q| vec![p.clone(), q.clone()])
        });
        if let Some(paths) = hit {
            report.q2233_paths.push(PathPattern { h, paths });
        }
    }

    // every embedding, since the path conditions name the vertices around the cycle
    let q2223 = find_pattern(g, &make_named(&NamedPattern::Q(2, 2, 2, 3)), true);
    let mut seen: Vec<VertexSet> = Vec::new();
    for phi in q2223 {
        let hs = VertexSet::from_vertices(phi.iter().copied());
        if seen.contains(&hs) {
            continue;
        }
        let (v1, v2, v3, v4) = (phi[0], phi[1], phi[2], phi[3]);
        let outside = |x: usize| !hs.contains(x);
        let common =
            |a: usize, b: usize| adj[a].intersection(adj[b]).iter().filter(|&x| outside(x)).collect::<Vec<_>>();
        let ys: Vec<usize> = common(v2, v3).into_iter().filter(|&y| mult[v2][y] == 2 && mult[y][v3] == 2).collect();
        let mut hit = None;
        'search: for &y in &ys {
            for x in common(v1, v2) {
                for z in common(v3, v4) {
                    if x != y && y != z && x != z {
                        hit = Some(vec![vec![v1, x, v2], vec![v2, y, v3], vec![v3, z, v4]]);
                        break 'search;
                    }
                }
            }
        }
        if let Some(paths) = hit {
            seen.push(hs);
            report.q2223_triple.push(PathPattern { h: phi, paths });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::cycle;

    #[test]
    fn wheel_has_three_t113() {
        let r = forbidden_scan(&make_named(&NamedPattern::W1)).unwrap();
        assert_eq!(r.t113.len(), 3);
        assert_eq!(r.total(), 3);
    }

    #[test]
    fn cycle_is_clean() {
        assert!(forbidden_scan(&cycle(4, 5).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn doubled_triangle_with_two_paths() {
        let (x, y, z, u, v) = (0, 1, 2, 3, 4);
        let g = Multigraph::from_multiplicities(
            5,
            &[(x, y, 2), (x, z, 2), (y, z, 2), (u, y, 1), (u, x, 1), (v, z, 1), (v, x, 1)],
        )
        .unwrap();
        let r = forbidden_scan(&g).unwrap();
        assert_eq!(r.t222_two_paths.len(), 1);
        let hit = &r.t222_two_paths[0];
        assert_eq!(hit.h, vec![0, 1, 2]);
        assert_eq!(hit.paths, vec![vec![0, 3, 1], vec![0, 4, 2]]);
        assert!(r.t113.is_empty());
    }

    #[test]
    fn one_path_is_not_enough() {
        let g = Multigraph::from_multiplicities(4, &[(0, 1, 2), (0, 2, 2), (1, 2, 2), (3, 0, 1), (3, 1, 1)]).unwrap();
        assert!(forbidden_scan(&g).unwrap().t222_two_paths.is_empty());
    }

    #[test]
    fn quad_with_short_path() {
        // Q(2,3,3,3) on 0..3 and a 2-path 0 4 2 across it
        let g = Multigraph::from_multiplicities(5, &[(0, 1, 2), (1, 2, 3), (2, 3, 3), (3, 0, 3), (0, 4, 1), (4, 2, 1)])
            .unwrap();
        let r = forbidden_scan(&g).unwrap();
        assert_eq!(r.q2333_short_path.len(), 1);
        assert_eq!(r.q2333_short_path[0].paths, vec![vec![0, 4, 2]]);
    }

    #[test]
    fn mixed_quad_needs_two_paths() {
        let base = [(0, 1, 2), (1, 2, 2), (2, 3, 3), (3, 0, 3)];
        let mut one = base.to_vec();
        one.extend([(0, 4, 1), (4, 2, 1)]);
        let g = Multigraph::from_multiplicities(5, &one).unwrap();
        assert!(forbidden_scan(&g).unwrap().q2233_paths.is_empty());
        let mut two = one.clone();
        two.extend([(1, 5, 1), (5, 3, 1)]);
        let g = Multigraph::from_multiplicities(6, &two).unwrap();
        assert_eq!(forbidden_scan(&g).unwrap().q2233_paths.len(), 1);
    }

    #[test]
    fn quad_triple_paths() {
        // v1..v4 = 0..3, x = 4, y = 5, z = 6
        let mut pairs = vec![(0, 1, 2), (1, 2, 2), (2, 3, 2), (3, 0, 3)];
        pairs.extend([(0, 4, 1), (4, 1, 1), (1, 5, 2), (5, 2, 2), (2, 6, 1), (6, 3, 1)]);
        let g = Multigraph::from_multiplicities(7, &pairs).unwrap();
        let r = forbidden_scan(&g).unwrap();
        assert_eq!(r.q2223_triple.len(), 1);
        assert_eq!(r.q2223_triple[0].paths[1], vec![1, 5, 2]);
        // a single edge from y to v3 breaks the pattern
        pairs[7] = (5, 2, 1);
        let g = Multigraph::from_multiplicities(7, &pairs).unwrap();
        assert!(forbidden_scan(&g).unwrap().q2223_triple.is_empty());
    }
}
