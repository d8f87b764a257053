//! Rotation systems, face tracing and weak adjacency of plane multigraphs.
//!
//! A dart is a directed edge-end: dart `2e` runs from `endpoints(e).0` to
//! `endpoints(e).1` and dart `2e + 1` runs back. Rotations list edge ids in
//! cyclic order around each vertex. The face to the left of a dart continues
//! with the edge following the dart's edge in the rotation at its head.

mod discharge;
mod embed;

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Multigraph;
use crate::{Error, Result};

pub use discharge::{
    discharge, face_config_scan, Charge, ConfigViolation, DischargeTranscript, FaceCondition, FaceConfigReport,
    FaceShape, Rule, Transfer,
};
pub use embed::{embed, is_planar, Embedding, KuratowskiKind, KuratowskiWitness};

/// Cyclic order of incident edge ids around every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    rotations: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Checks that every vertex lists exactly its incident edges, each once.
    pub fn new(g: &Multigraph, rotations: Vec<Vec<usize>>) -> Result<Self> {
        if rotations.len() != g.vertex_count() {
            return Err(Error::InvalidRotation("one cyclic order per vertex required"));
        }
        let m = g.edge_count();
        let mut seen = vec![0u8; m];
        for (v, rot) in rotations.iter().enumerate() {
            for &e in rot {
                g.check_edge(e)?;
                let (a, b) = g.endpoints(e);
                if a != v && b != v {
                    return Err(Error::InvalidRotation("edge listed at a vertex it does not touch"));
                }
                let bit = if a == v { 1 } else { 2 };
                if seen[e] & bit != 0 {
                    return Err(Error::InvalidRotation("edge listed twice at one vertex"));
                }
                seen[e] |= bit;
            }
        }
        if seen.iter().any(|&s| s != 3) {
            return Err(Error::InvalidRotation("edge missing from an endpoint rotation"));
        }
        Ok(RotationSystem { rotations })
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    /// `v - e + f`; equals 2 exactly for embeddings of connected graphs in the sphere.
    pub fn euler_characteristic(&self, g: &Multigraph) -> i64 {
        let f = trace_unchecked(g, self).faces.len();
        g.vertex_count() as i64 - g.edge_count() as i64 + f as i64
    }

    /// Whether this is an embedding of the connected graph `g` in the sphere.
    pub fn is_spherical(&self, g: &Multigraph) -> bool {
        g.is_connected() && self.euler_characteristic(g) == 2
    }
}

#[inline]
pub fn dart_tail(g: &Multigraph, d: usize) -> usize {
    let (a, b) = g.endpoints(d / 2);
    if d % 2 == 0 {
        a
    } else {
        b
    }
}

#[inline]
pub fn dart_head(g: &Multigraph, d: usize) -> usize {
    dart_tail(g, d ^ 1)
}

/// A face given by its boundary walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    darts: Vec<usize>,
    walk: Vec<usize>,
    vertices: Vec<usize>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    pub fn darts(&self) -> &[usize] {
        &self.darts
    }

    /// Tail of every dart, in walk order.
    pub fn walk(&self) -> &[usize] {
        &self.walk
    }

    /// Distinct boundary vertices, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// All faces of an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Face>,
    face_of_dart: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn face_of_dart(&self, d: usize) -> usize {
        self.face_of_dart[d]
    }

    pub fn degree_sum(&self) -> usize {
        self.faces.iter().map(Face::degree).sum()
    }

    /// Number of faces of each degree `0, 1, 2, ...`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let top = self.faces.iter().map(Face::degree).max().unwrap_or(0);
        let mut h = vec![0; top + 1];
        for f in &self.faces {
            h[f.degree()] += 1;
        }
        h
    }
}

/// Traces every boundary walk of `rot`.
pub fn trace_faces(g: &Multigraph, rot: &RotationSystem) -> Result<FaceSet> {
    if rot.vertex_count() != g.vertex_count() {
        return Err(Error::InvalidRotation("rotation belongs to a different graph"));
    }
    // re-validate: the rotation may have been built against another graph
    RotationSystem::new(g, rot.rotations.clone())?;
    Ok(trace_unchecked(g, rot))
}

fn trace_unchecked(g: &Multigraph, rot: &RotationSystem) -> FaceSet {
    let m = g.edge_count();
    // position of edge e in the rotation at each endpoint
    let mut pos = vec![[0usize; 2]; m];
    for (v, r) in rot.rotations.iter().enumerate() {
        for (i, &e) in r.iter().enumerate() {
            let side = if g.endpoints(e).0 == v { 0 } else { 1 };
            pos[e][side] = i;
        }
    }
    let next = |d: usize| -> usize {
        let e = d / 2;
        let h = dart_head(g, d);
        let side = if d % 2 == 0 { 1 } else { 0 };
        let r = &rot.rotations[h];
        let f = r[(pos[e][side] + 1) % r.len()];
        if g.endpoints(f).0 == h {
            2 * f
        } else {
            2 * f + 1
        }
    };
    let mut face_of_dart = vec![usize::MAX; 2 * m];
    let mut faces = Vec::new();
    if m == 0 {
        faces.push(Face { darts: Vec::new(), walk: Vec::new(), vertices: Vec::new() });
    }
    for start in 0..2 * m {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut darts = Vec::new();
        let mut d = start;
        while face_of_dart[d] == usize::MAX {
            face_of_dart[d] = id;
            darts.push(d);
            d = next(d);
        }
        let walk: Vec<usize> = darts.iter().map(|&d| dart_tail(g, d)).collect();
        let mut vertices = walk.clone();
        vertices.sort_unstable();
        vertices.dedup();
        faces.push(Face { darts, walk, vertices });
    }
    FaceSet { faces, face_of_dart }
}

/// Index of the first face having both `u` and `v` on its boundary.
pub fn common_face(faces: &FaceSet, u: usize, v: usize) -> Option<usize> {
    faces.faces.iter().position(|f| f.contains_vertex(u) && f.contains_vertex(v))
}

/// Whether `u` and `v` lie on a common face, so a `u`-`v` path may be lifted
/// without leaving the plane.
pub fn common_face_endpoints(faces: &FaceSet, u: usize, v: usize) -> bool {
    common_face(faces, u, v).is_some()
}

/// A directed chain `from = f_0, f_1, ..., f_t = to` of faces in which every
/// intermediate face is a 2-face and consecutive faces share an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakChain {
    pub from: usize,
    pub to: usize,
    pub t: usize,
    /// The intermediate 2-faces, in order from `from`.
    pub intermediates: Vec<usize>,
    /// The dart of `from` where the chain leaves.
    pub start: usize,
}

/// Every directed chain leaving a 3⁺-face, one per boundary dart, in face and
/// dart order. Each undirected chain therefore appears once from each end.
pub fn weak_adjacency(faces: &FaceSet) -> Vec<WeakChain> {
    let mut out = Vec::new();
    for (fi, f) in faces.faces.iter().enumerate() {
        if f.degree() < 3 {
            continue;
        }
        for &d in &f.darts {
            let mut cur = d ^ 1;
            let mut mids = Vec::new();
            loop {
                let gi = faces.face_of_dart[cur];
                let face = &faces.faces[gi];
                if face.degree() != 2 {
                    out.push(WeakChain { from: fi, to: gi, t: mids.len() + 1, intermediates: mids, start: d });
                    break;
                }
                if mids.len() > faces.len() {
                    break;
                }
                let other = if face.darts[0] == cur { face.darts[1] } else { face.darts[0] };
                if other / 2 == cur / 2 {
                    // a lone bridge bounding a 2-face from both sides
                    break;
                }
                mids.push(gi);
                cur = other ^ 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cycle, make_named, NamedPattern};

    fn embedded(g: &Multigraph) -> RotationSystem {
        match embed(g).unwrap() {
            Embedding::Planar(r) => r,
            Embedding::NonPlanar(_) => panic!("expected a planar graph"),
        }
    }

    #[test]
    fn parallel_class_faces() {
        let g = make_named(&NamedPattern::AK2(5));
        let rot = embedded(&g);
        assert_eq!(rot.rotation(0), &[0, 1, 2, 3, 4]);
        let faces = trace_faces(&g, &rot).unwrap();
        assert_eq!(faces.len(), 5);
        assert!(faces.faces().iter().all(|f| f.degree() == 2));
        assert!(weak_adjacency(&faces).is_empty());
        assert!(common_face_endpoints(&faces, 0, 1));
    }

    #[test]
    fn cycle_faces_and_chains() {
        let g = cycle(4, 5).unwrap();
        let rot = embedded(&g);
        let faces = trace_faces(&g, &rot).unwrap();
        assert_eq!(faces.len(), 18);
        assert_eq!(faces.degree_sum(), 40);
        assert_eq!(faces.degree_histogram(), vec![0, 0, 16, 0, 2]);
        let chains = weak_adjacency(&faces);
        assert_eq!(chains.len(), 8);
        assert!(chains.iter().all(|c| c.t == 5 && c.from != c.to));
        assert!(common_face_endpoints(&faces, 0, 2));
        assert!(common_face_endpoints(&faces, 1, 3));
    }

    #[test]
    fn wheel_faces() {
        let g = make_named(&NamedPattern::W1);
        let faces = trace_faces(&g, &embedded(&g)).unwrap();
        assert_eq!(faces.len(), 10);
        assert_eq!(faces.degree_sum(), 24);
    }

    #[test]
    fn octahedron_opposite_vertices_share_no_face() {
        let mut pairs = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    pairs.push((u, v));
                }
            }
        }
        let g = Multigraph::from_edges(6, &pairs).unwrap();
        let faces = trace_faces(&g, &embedded(&g)).unwrap();
        assert_eq!(faces.len(), 8);
        assert!(!common_face_endpoints(&faces, 0, 3));
        assert!(common_face_endpoints(&faces, 0, 1));
    }

    #[test]
    fn single_edge_and_single_vertex() {
        let k2 = Multigraph::from_edges(2, &[(0, 1)]).unwrap();
        let faces = trace_faces(&k2, &embedded(&k2)).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces.face(0).degree(), 2);
        assert!(weak_adjacency(&faces).is_empty());
        let k1 = Multigraph::new(1);
        let faces = trace_faces(&k1, &embedded(&k1)).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces.face(0).degree(), 0);
    }

    #[test]
    fn ordinary_adjacency_has_unit_chain() {
        let g = cycle(3, 1).unwrap();
        let faces = trace_faces(&g, &embedded(&g)).unwrap();
        let chains = weak_adjacency(&faces);
        assert_eq!(chains.len(), 6);
        assert!(chains.iter().all(|c| c.t == 1 && c.intermediates.is_empty()));
    }

    #[test]
    fn malformed_rotations_are_rejected() {
        let g = cycle(3, 1).unwrap();
        assert!(RotationSystem::new(&g, vec![vec![0, 2], vec![0, 1], vec![1]]).is_err());
        assert!(RotationSystem::new(&g, vec![vec![0, 2], vec![0, 1], vec![1, 1]]).is_err());
        assert!(RotationSystem::new(&g, vec![vec![0, 2], vec![0, 1], vec![1, 0]]).is_err());
        assert!(RotationSystem::new(&g, vec![vec![0, 2], vec![0, 1]]).is_err());
        assert!(RotationSystem::new(&g, vec![vec![2, 0], vec![1, 0], vec![2, 1]]).is_ok());
    }

    #[test]
    fn non_spherical_rotation_is_detected() {
        // K4 with one rotation reversed lands on the torus
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let good = embedded(&g);
        assert!(good.is_spherical(&g));
        let mut rots = good.rotations().to_vec();
        rots[0].reverse();
        let bad = RotationSystem::new(&g, rots).unwrap();
        assert!(!bad.is_spherical(&g));
    }
}
