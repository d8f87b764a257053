//! Slow, independent reference computations used to check the library.
#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use sz5_core::Multigraph;

pub fn edges(g: &Multigraph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

/// Every set partition of `0..n` as a label vector, built recursively.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=blocks {
            cur.push(b);
            go(i + 1, n, cur, blocks.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

fn parts(labels: &[usize]) -> usize {
    labels.iter().max().map_or(0, |m| m + 1)
}

fn crossing(es: &[(usize, usize)], labels: &[usize]) -> usize {
    es.iter().filter(|&&(a, b)| labels[a] != labels[b]).count()
}

fn connected_parts(g: &Multigraph, labels: &[usize]) -> bool {
    let t = parts(labels);
    (0..t).all(|p| {
        let members: Vec<usize> = (0..labels.len()).filter(|&v| labels[v] == p).collect();
        let mut seen = vec![members[0]];
        let mut i = 0;
        while i < seen.len() {
            let x = seen[i];
            i += 1;
            for (a, b) in g.edges() {
                for (s, t2) in [(a, b), (b, a)] {
                    if s == x && labels[t2] == p && !seen.contains(&t2) {
                        seen.push(t2);
                    }
                }
            }
        }
        seen.len() == members.len()
    })
}

/// `min` over partitions with at least two connected parts of
/// `2·cross − 10t + 16`; 6 for a single vertex.
pub fn weight_oracle(g: &Multigraph) -> i64 {
    let n = g.vertex_count();
    if n == 1 {
        return 6;
    }
    let es = edges(g);
    all_partitions(n)
        .into_iter()
        .filter(|l| parts(l) >= 2 && connected_parts(g, l))
        .map(|l| 2 * crossing(&es, &l) as i64 - 10 * parts(&l) as i64 + 16)
        .min()
        .expect("the all-singleton partition qualifies")
}

/// `min` over partitions with `t >= 2` of `floor(cross / (t − 1))`.
pub fn tree_bound_oracle(g: &Multigraph) -> usize {
    let es = edges(g);
    all_partitions(g.vertex_count())
        .into_iter()
        .filter(|l| parts(l) >= 2)
        .map(|l| crossing(&es, &l) / (parts(&l) - 1))
        .min()
        .unwrap()
}

/// Boundaries (imbalance vectors mod `k`) realized by some orientation, by
/// walking all `2^m` orientations in Gray-code order.
pub fn reachable_boundaries(g: &Multigraph, k: i64) -> HashSet<Vec<i64>> {
    let es = edges(g);
    let n = g.vertex_count();
    let m = es.len();
    assert!(m <= 24, "exhaustive oracle limited to 24 edges");
    let mut imb = vec![0i64; n];
    for &(a, b) in &es {
        imb[a] += 1;
        imb[b] -= 1;
    }
    let key = |imb: &[i64]| imb.iter().map(|x| x.rem_euclid(k)).collect::<Vec<_>>();
    let mut out = HashSet::new();
    out.insert(key(&imb));
    let mut forward = vec![true; m];
    for i in 1u64..(1u64 << m) {
        let e = i.trailing_zeros() as usize;
        let (a, b) = es[e];
        let s = if forward[e] { -2 } else { 2 };
        imb[a] += s;
        imb[b] -= s;
        forward[e] = !forward[e];
        out.insert(key(&imb));
    }
    out
}

/// Number of Z_k-boundaries on `n` vertices.
pub fn boundary_count(n: usize, k: i64) -> usize {
    (k as usize).pow(n as u32 - 1)
}

pub fn szk_oracle(g: &Multigraph, k: i64) -> bool {
    reachable_boundaries(g, k).len() == boundary_count(g.vertex_count(), k)
}

/// Whether some assignment of values in {1, 2} to the arcs `arcs` is a Z_5-flow.
pub fn one_two_flow_oracle(n: usize, arcs: &[(usize, usize)]) -> bool {
    let m = arcs.len();
    (0u64..(1u64 << m)).any(|mask| {
        let mut net = vec![0i64; n];
        for (e, &(t, h)) in arcs.iter().enumerate() {
            let x = 1 + (mask >> e & 1) as i64;
            net[t] += x;
            net[h] -= x;
        }
        net.iter().all(|x| x.rem_euclid(5) == 0)
    })
}

/// Net outflow of `values` along `arcs`, reduced mod `k`.
pub fn net_flow(n: usize, arcs: &[(usize, usize)], values: &[u32], k: i64) -> Vec<i64> {
    let mut net = vec![0i64; n];
    for (&(t, h), &x) in arcs.iter().zip(values) {
        net[t] += x as i64;
        net[h] -= x as i64;
    }
    net.iter().map(|x| x.rem_euclid(k)).collect()
}

/// Random multigraph on `n` vertices with every pair multiplicity in `0..=mu`.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, mu: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let k = rng.gen_range(0..=mu);
            if k > 0 {
                pairs.push((u, v, k));
            }
        }
    }
    Multigraph::from_multiplicities(n, &pairs).unwrap()
}

pub fn random_connected(rng: &mut impl Rng, n: usize, mu: usize) -> Multigraph {
    loop {
        let g = random_multigraph(rng, n, mu);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random label vector with labels `0..t` each used at least once.
pub fn random_labels(rng: &mut impl Rng, n: usize, t: usize) -> Vec<usize> {
    loop {
        let l: Vec<usize> = (0..n).map(|_| rng.gen_range(0..t)).collect();
        if (0..t).all(|p| l.contains(&p)) {
            return l;
        }
    }
}

/// Random Z_k-boundary on `n` vertices.
pub fn random_boundary(rng: &mut impl Rng, n: usize, k: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (0..n - 1).map(|_| rng.gen_range(0..k)).collect();
    let s: u32 = v.iter().sum();
    v.push((k - s % k) % k);
    v
}
