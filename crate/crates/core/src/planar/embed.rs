//! Planarity testing and embedding by path addition over biconnected blocks.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::RotationSystem;
use crate::graph::Multigraph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside the simple skeleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    /// One edge id (the smallest) per skeleton pair of the subdivision.
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Embedding {
    Planar(RotationSystem),
    NonPlanar(KuratowskiWitness),
}

/// Embeds a connected multigraph in the sphere. Parallel edges sit next to
/// each other in both endpoint rotations, ascending at the smaller endpoint
/// and descending at the larger, so consecutive ones bound 2-faces.
pub fn embed(g: &Multigraph) -> Result<Embedding> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (e, (a, b)) in g.edges().enumerate() {
        classes.entry((a.min(b), a.max(b))).or_default().push(e);
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in classes.keys() {
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    let Some(nbr_rot) = embed_simple(&adj) else {
        let pairs: Vec<(usize, usize)> = classes.keys().copied().collect();
        let (kind, branch, kept) = kuratowski(n, &pairs);
        let edges = kept.iter().map(|p| classes[p][0]).collect();
        return Ok(Embedding::NonPlanar(KuratowskiWitness { kind, branch_vertices: branch, edges }));
    };
    let rotations = nbr_rot
        .iter()
        .enumerate()
        .map(|(v, nbrs)| {
            let mut r = Vec::new();
            for &u in nbrs {
                let class = &classes[&(v.min(u), v.max(u))];
                if v < u {
                    r.extend(class.iter().copied());
                } else {
                    r.extend(class.iter().rev().copied());
                }
            }
            r
        })
        .collect();
    let rot = RotationSystem::new(g, rotations)?;
    debug_assert_eq!(rot.euler_characteristic(g), 2);
    Ok(Embedding::Planar(rot))
}

/// Planarity of the simple skeleton of `g`; components are tested separately.
pub fn is_planar(g: &Multigraph) -> bool {
    let mut pairs: Vec<(usize, usize)> = g.edges().map(|(a, b)| (a.min(b), a.max(b))).collect();
    pairs.sort_unstable();
    pairs.dedup();
    simple_planar(g.vertex_count(), &pairs)
}

fn adjacency(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in pairs {
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    adj
}

fn simple_planar(n: usize, pairs: &[(usize, usize)]) -> bool {
    embed_simple(&adjacency(n, pairs)).is_some()
}

/// Deletes skeleton pairs while the rest stays non-planar, leaving a
/// subdivision of K5 or K3,3 (plus isolated vertices).
fn kuratowski(n: usize, pairs: &[(usize, usize)]) -> (KuratowskiKind, Vec<usize>, Vec<(usize, usize)>) {
    let mut kept: Vec<(usize, usize)> = pairs.to_vec();
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        if simple_planar(n, &trial) {
            i += 1;
        } else {
            kept = trial;
        }
    }
    let mut deg = vec![0usize; n];
    for &(a, b) in &kept {
        deg[a] += 1;
        deg[b] += 1;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    let kind = if branch.len() == 5 { KuratowskiKind::K5 } else { KuratowskiKind::K33 };
    (kind, branch, kept)
}

/// Neighbour rotations of a planar embedding of a simple graph, or `None`.
/// Components are embedded independently.
fn embed_simple(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let mut rot = vec![Vec::new(); n];
    for block in blocks(adj) {
        if block.len() == 1 {
            let (a, b) = block[0];
            rot[a].push(b);
            rot[b].push(a);
            continue;
        }
        let faces = embed_block(&block)?;
        // successor of u around v, read off the face walks u -> v -> w
        let mut succ: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for f in &faces {
            let l = f.len();
            for i in 0..l {
                let (u, v, w) = (f[(i + l - 1) % l], f[i], f[(i + 1) % l]);
                succ.insert((v, u), w);
            }
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
        verts.sort_unstable();
        verts.dedup();
        for v in verts {
            let first = block
                .iter()
                .filter_map(|&(a, b)| {
                    if a == v {
                        Some(b)
                    } else if b == v {
                        Some(a)
                    } else {
                        None
                    }
                })
                .min()?;
            let mut u = first;
            loop {
                rot[v].push(u);
                u = succ[&(v, u)];
                if u == first {
                    break;
                }
            }
        }
    }
    Some(rot)
}

/// Edge sets of the biconnected blocks, in discovery order.
fn blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State<'_>, v: usize, parent: usize) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for i in 0..s.adj[v].len() {
            let w = s.adj[v][i];
            if s.disc[w] == 0 {
                s.stack.push((v, w));
                dfs(s, w, v);
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (v, w) {
                            break;
                        }
                    }
                    block.reverse();
                    s.out.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[v] {
                s.stack.push((v, w));
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }
    let n = adj.len();
    let mut s = State { adj, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.out
}

/// Faces (as vertex cycles) of a planar embedding of a 2-connected simple
/// block with at least three vertices, or `None` if it is not planar.
fn embed_block(block: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let k = verts.len();
    let local = |v: usize| verts.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in block {
        let (a, b) = (local(a), local(b));
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    // quick reject by edge count
    if k >= 3 && block.len() > 3 * k - 6 {
        return None;
    }

    let mut in_v = vec![false; k];
    let mut in_e = vec![vec![false; k]; k];
    let cycle = find_cycle(&adj);
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_v[a] = true;
        in_e[a][b] = true;
        in_e[b][a] = true;
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle.clone(), rev];
    let mut placed = cycle.len();

    while placed < block.len() {
        let frags = fragments(&adj, &in_v, &in_e);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in frags.iter().enumerate() {
            let ok: Vec<usize> =
                (0..faces.len()).filter(|&j| frag.attachments.iter().all(|a| faces[j].contains(a))).collect();
            if ok.is_empty() {
                return None;
            }
            if ok.len() == 1 {
                choice = Some((fi, ok[0]));
                break;
            }
            if choice.is_none() {
                choice = Some((fi, ok[0]));
            }
        }
        let (fi, face_idx) = choice?;
        let path = fragment_path(&adj, &in_v, &frags[fi]);
        for w in path.windows(2) {
            in_e[w[0]][w[1]] = true;
            in_e[w[1]][w[0]] = true;
        }
        for &v in &path {
            in_v[v] = true;
        }
        placed += path.len() - 1;
        let f = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&f, &path);
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces.into_iter().map(|f| f.into_iter().map(|v| verts[v]).collect()).collect())
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    let mut depth = vec![usize::MAX; k];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        if *i == adj[v].len() {
            stack.pop();
            continue;
        }
        let w = adj[v][*i];
        *i += 1;
        if depth[w] == usize::MAX {
            parent[w] = v;
            depth[w] = depth[v] + 1;
            stack.push((w, 0));
        } else if w != parent[v] && depth[w] < depth[v] {
            let mut cyc = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cyc.push(x);
            }
            cyc.reverse();
            return cyc;
        }
    }
    unreachable!("a 2-connected block has a cycle")
}

struct Fragment {
    attachments: Vec<usize>,
    /// Interior vertices; empty for a single chord.
    interior: Vec<usize>,
}

fn fragments(adj: &[Vec<usize>], in_v: &[bool], in_e: &[Vec<bool>]) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for a in 0..k {
        if !in_v[a] {
            continue;
        }
        for &b in &adj[a] {
            if a < b && in_v[b] && !in_e[a][b] {
                out.push(Fragment { attachments: vec![a, b], interior: Vec::new() });
            }
        }
    }
    let mut seen = vec![false; k];
    for s in 0..k {
        if in_v[s] || seen[s] {
            continue;
        }
        let mut interior = vec![s];
        seen[s] = true;
        let mut att = Vec::new();
        let mut i = 0;
        while i < interior.len() {
            let x = interior[i];
            i += 1;
            for &y in &adj[x] {
                if in_v[y] {
                    att.push(y);
                } else if !seen[y] {
                    seen[y] = true;
                    interior.push(y);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        out.push(Fragment { attachments: att, interior });
    }
    out
}

/// A path through the fragment between two distinct attachments.
fn fragment_path(adj: &[Vec<usize>], in_v: &[bool], frag: &Fragment) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let a = frag.attachments[0];
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    let mut queue = Vec::new();
    for &x in &adj[a] {
        if !in_v[x] && frag.interior.contains(&x) && parent[x] == usize::MAX {
            parent[x] = a;
            queue.push(x);
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        if let Some(&b) = adj[x].iter().find(|&&y| in_v[y] && y != a) {
            let mut path = vec![b, x];
            let mut y = x;
            while parent[y] != a {
                y = parent[y];
                path.push(y);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &y in &adj[x] {
            if !in_v[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push(y);
            }
        }
    }
    unreachable!("fragments of a 2-connected block have two attachments")
}

/// Splits face `f` along `path`, whose ends lie on `f` and whose interior is new.
fn split_face(f: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let l = f.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = f.iter().position(|&x| x == a).unwrap();
    let j = f.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut x = i;
    loop {
        f1.push(f[x]);
        if x == j {
            break;
        }
        x = (x + 1) % l;
    }
    f1.extend(inner.iter().rev().copied());
    let mut f2 = Vec::new();
    let mut x = j;
    loop {
        f2.push(f[x]);
        if x == i {
            break;
        }
        x = (x + 1) % l;
    }
    f2.extend(inner.iter().copied());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cycle, make_named, NamedPattern};
    use crate::planar::trace_faces;

    fn complete(n: usize) -> Multigraph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Multigraph::from_edges(n, &pairs).unwrap()
    }

    fn check_planar(g: &Multigraph) {
        match embed(g).unwrap() {
            Embedding::Planar(rot) => {
                let faces = trace_faces(g, &rot).unwrap();
                assert_eq!(faces.len() + g.vertex_count(), g.edge_count() + 2);
                assert_eq!(faces.degree_sum(), 2 * g.edge_count());
            }
            Embedding::NonPlanar(_) => panic!("planar graph rejected"),
        }
    }

    #[test]
    fn kuratowski_graphs() {
        match embed(&complete(5)).unwrap() {
            Embedding::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K5);
                assert_eq!(w.branch_vertices, vec![0, 1, 2, 3, 4]);
                assert_eq!(w.edges.len(), 10);
            }
            Embedding::Planar(_) => panic!("K5 embedded"),
        }
        let mut pairs = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                pairs.push((u, v));
            }
        }
        let k33 = Multigraph::from_edges(6, &pairs).unwrap();
        match embed(&k33).unwrap() {
            Embedding::NonPlanar(w) => assert_eq!(w.kind, KuratowskiKind::K33),
            Embedding::Planar(_) => panic!("K3,3 embedded"),
        }
        assert!(!is_planar(&complete(6)));
        assert!(is_planar(&complete(4)));
    }

    #[test]
    fn petersen_witness_is_k33() {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Multigraph::from_edges(10, &pairs).unwrap();
        match embed(&g).unwrap() {
            Embedding::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K33);
                assert_eq!(w.branch_vertices.len(), 6);
            }
            Embedding::Planar(_) => panic!("Petersen graph embedded"),
        }
    }

    #[test]
    fn planar_examples_satisfy_euler() {
        check_planar(&complete(4));
        check_planar(&cycle(7, 3).unwrap());
        check_planar(&make_named(&NamedPattern::W2));
        check_planar(&make_named(&NamedPattern::DoubleK4));
        check_planar(&make_named(&NamedPattern::Path(4)));
        // two triangles joined at a cut vertex plus a pendant edge
        let g = Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
        check_planar(&g);
        // a 3-dimensional cube
        let mut pairs = Vec::new();
        for v in 0..8usize {
            for b in 0..3 {
                let w = v ^ (1 << b);
                if v < w {
                    pairs.push((v, w));
                }
            }
        }
        check_planar(&Multigraph::from_edges(8, &pairs).unwrap());
    }

    #[test]
    fn disconnected_input_is_rejected() {
        assert_eq!(embed(&Multigraph::new(2)), Err(Error::Disconnected));
    }
}
