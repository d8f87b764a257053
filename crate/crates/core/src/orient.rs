//! Boundaries, β-orientations, strong Z_k-connectivity and modular flow
//! certificates.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{LiftPath, Multigraph, VertexSet};
use crate::{Budget, Error, Result, SearchOutcome};

/// Rejects even moduli and moduli below 3.
pub fn check_modulus(k: u32) -> Result<()> {
    if k >= 3 && k % 2 == 1 {
        Ok(())
    } else {
        Err(Error::InvalidModulus(k))
    }
}

#[inline]
pub(crate) fn residue(x: i64, k: u32) -> u32 {
    x.rem_euclid(k as i64) as u32
}

/// A Z_k-boundary: one residue per vertex, summing to 0 mod k.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Boundary {
    modulus: u32,
    values: Vec<u32>,
}

impl Boundary {
    pub fn new(modulus: u32, values: Vec<u32>) -> Result<Self> {
        check_modulus(modulus)?;
        if values.iter().any(|&x| x >= modulus) {
            return Err(Error::InvalidBoundary("value not reduced modulo k"));
        }
        let sum: u64 = values.iter().map(|&x| x as u64).sum();
        if sum % modulus as u64 != 0 {
            return Err(Error::InvalidBoundary("values do not sum to 0 modulo k"));
        }
        Ok(Boundary { modulus, values })
    }

    /// Reduces arbitrary integers modulo `k` and then validates.
    pub fn from_integers(modulus: u32, values: &[i64]) -> Result<Self> {
        check_modulus(modulus)?;
        Boundary::new(modulus, values.iter().map(|&x| residue(x, modulus)).collect())
    }

    pub fn zero(n: usize, modulus: u32) -> Result<Self> {
        Boundary::new(modulus, vec![0; n])
    }

    /// The boundary realized by an orientation: `d⁺(v) − d⁻(v) mod k`.
    pub fn of_orientation(g: &Multigraph, d: &Orientation, modulus: u32) -> Result<Self> {
        d.check_for(g)?;
        Boundary::from_integers(modulus, &d.imbalances(g))
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.values[v]
    }

    fn check_for(&self, g: &Multigraph) -> Result<()> {
        if self.values.len() != g.vertex_count() {
            return Err(Error::InvalidBoundary("boundary length differs from the vertex count"));
        }
        Ok(())
    }
}

/// Calls `f` on every Z_k-boundary of an `n`-vertex graph: the first `n − 1`
/// values run through all of `Z_k^(n−1)` in lexicographic order (the
/// last coordinate fastest) and the last value is determined. Stops when `f`
/// returns `false`.
pub fn for_each_boundary(n: usize, k: u32, mut f: impl FnMut(&Boundary) -> bool) -> Result<()> {
    check_modulus(k)?;
    if n == 0 {
        f(&Boundary { modulus: k, values: Vec::new() });
        return Ok(());
    }
    let mut values = vec![0u32; n];
    loop {
        let partial: u64 = values[..n - 1].iter().map(|&x| x as u64).sum();
        values[n - 1] = ((k as u64 - partial % k as u64) % k as u64) as u32;
        if !f(&Boundary { modulus: k, values: values.clone() }) {
            return Ok(());
        }
        // odometer over positions n-2 down to 0
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            values[i] += 1;
            if values[i] < k {
                break;
            }
            values[i] = 0;
        }
    }
}

/// A direction for every edge. `forward[e]` means edge `e` runs from its
/// first stored endpoint to its second.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn from_forward(forward: Vec<bool>) -> Self {
        Orientation { forward }
    }

    /// Every edge oriented from its first endpoint to its second.
    pub fn all_forward(m: usize) -> Self {
        Orientation { forward: vec![true; m] }
    }

    /// Builds an orientation from explicit `(tail, head)` pairs.
    pub fn from_arcs(g: &Multigraph, arcs: &[(usize, usize)]) -> Result<Self> {
        if arcs.len() != g.edge_count() {
            return Err(Error::InvalidOrientation("one arc per edge required"));
        }
        let mut forward = Vec::with_capacity(arcs.len());
        for (e, &(t, h)) in arcs.iter().enumerate() {
            let (a, b) = g.endpoints(e);
            if (t, h) == (a, b) {
                forward.push(true);
            } else if (t, h) == (b, a) {
                forward.push(false);
            } else {
                return Err(Error::InvalidOrientation("arc does not match its edge"));
            }
        }
        Ok(Orientation { forward })
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, g: &Multigraph, e: usize) -> (usize, usize) {
        let (a, b) = g.endpoints(e);
        if self.forward[e] {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn arcs(&self, g: &Multigraph) -> Vec<(usize, usize)> {
        (0..g.edge_count()).map(|e| self.arc(g, e)).collect()
    }

    /// `d⁺(v) − d⁻(v)` for every vertex.
    pub fn imbalances(&self, g: &Multigraph) -> Vec<i64> {
        let mut imb = vec![0i64; g.vertex_count()];
        for e in 0..g.edge_count() {
            let (t, h) = self.arc(g, e);
            imb[t] += 1;
            imb[h] -= 1;
        }
        imb
    }

    pub fn reversed(&self) -> Orientation {
        Orientation { forward: self.forward.iter().map(|&f| !f).collect() }
    }

    fn check_for(&self, g: &Multigraph) -> Result<()> {
        if self.forward.len() != g.edge_count() {
            return Err(Error::InvalidOrientation("orientation length differs from the edge count"));
        }
        Ok(())
    }
}

/// Whether `d⁺(v) − d⁻(v) ≡ β(v) (mod k)` at every vertex.
pub fn verify_beta_orientation(g: &Multigraph, d: &Orientation, beta: &Boundary) -> Result<bool> {
    d.check_for(g)?;
    beta.check_for(g)?;
    let k = beta.modulus;
    Ok(d.imbalances(g).iter().zip(&beta.values).all(|(&x, &b)| residue(x, k) == b))
}

/// Backtracking search for a β-orientation.
///
/// Parallel edges are interchangeable, so the search branches on how many
/// edges of each parallel class run from the smaller endpoint to the larger
/// one; within a class the lowest edge ids take that direction. Classes are
/// visited by decreasing endpoint-degree sum, ties by least edge id. A vertex
/// with current imbalance `c` and `r` undecided incident edges stays feasible
/// only if some `s ∈ {−r, −r+2, …, r}` has `c + s ≡ β(v)`.
pub fn find_beta_orientation(
    g: &Multigraph,
    beta: &Boundary,
    budget: &mut Budget,
) -> Result<SearchOutcome<Orientation>> {
    beta.check_for(g)?;
    let k = beta.modulus as i64;
    let n = g.vertex_count();
    let deg = g.degrees();

    // parallel classes keyed by (min, max) endpoint
    let mut classes: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    {
        let mut index = vec![vec![usize::MAX; n]; n];
        for (e, (a, b)) in g.edges().enumerate() {
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if index[u][v] == usize::MAX {
                index[u][v] = classes.len();
                classes.push((u, v, Vec::new()));
            }
            classes[index[u][v]].2.push(e);
        }
    }
    classes.sort_by(|x, y| {
        let sx = deg[x.0] + deg[x.1];
        let sy = deg[y.0] + deg[y.1];
        sy.cmp(&sx).then(x.2[0].cmp(&y.2[0]))
    });

    let target: Vec<i64> = beta.values.iter().map(|&b| b as i64).collect();
    let mut imb = vec![0i64; n];
    let mut rem = deg.iter().map(|&d| d as i64).collect::<Vec<_>>();
    let feasible = |c: i64, r: i64, t: i64| -> bool {
        if r >= k - 1 {
            return true;
        }
        let mut s = -r;
        while s <= r {
            if (c + s - t).rem_euclid(k) == 0 {
                return true;
            }
            s += 2;
        }
        false
    };
    if !(0..n).all(|v| feasible(0, rem[v], target[v])) {
        return Ok(SearchOutcome::NotFound);
    }

    let mut choice = vec![0usize; classes.len()];
    // explicit stack: depth i means classes[..i] decided
    #[derive(Clone, Copy)]
    enum Step {
        Enter,
        Next,
    }
    let mut depth = 0usize;
    let mut step = Step::Enter;
    loop {
        if depth == classes.len() {
            break;
        }
        let (u, v, ref edges) = classes[depth];
        let mu = edges.len() as i64;
        let start = match step {
            Step::Enter => {
                rem[u] -= mu;
                rem[v] -= mu;
                0
            }
            Step::Next => {
                // undo the previous choice at this depth
                let x = choice[depth] as i64;
                imb[u] -= 2 * x - mu;
                imb[v] += 2 * x - mu;
                choice[depth] + 1
            }
        };
        let mut placed = false;
        for x in start..=edges.len() {
            if !budget.spend() {
                return Ok(SearchOutcome::BudgetExhausted);
            }
            let delta = 2 * x as i64 - mu;
            imb[u] += delta;
            imb[v] -= delta;
            if feasible(imb[u], rem[u], target[u]) && feasible(imb[v], rem[v], target[v]) {
                choice[depth] = x;
                placed = true;
                break;
            }
            imb[u] -= delta;
            imb[v] += delta;
        }
        if placed {
            depth += 1;
            step = Step::Enter;
        } else {
            rem[u] += mu;
            rem[v] += mu;
            if depth == 0 {
                return Ok(SearchOutcome::NotFound);
            }
            depth -= 1;
            step = Step::Next;
        }
    }

    let mut forward = vec![false; g.edge_count()];
    for (i, (u, _, edges)) in classes.iter().enumerate() {
        for (j, &e) in edges.iter().enumerate() {
            let towards_larger = j < choice[i];
            let (a, _) = g.endpoints(e);
            forward[e] = (a == *u) == towards_larger;
        }
    }
    let d = Orientation { forward };
    debug_assert!(verify_beta_orientation(g, &d, beta).unwrap_or(false));
    Ok(SearchOutcome::Found(d))
}

/// Verdict of a strong Z_k-connectivity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SzkVerdict {
    Holds,
    /// The lexicographically least boundary without a β-orientation.
    Fails(Boundary),
    /// The budget ran out while deciding this boundary.
    Unknown(Boundary),
}

impl SzkVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, SzkVerdict::Holds)
    }
}

/// Tests every Z_k-boundary in [`for_each_boundary`] order, sharing one
/// budget across all searches.
pub fn is_strongly_zk(g: &Multigraph, k: u32, budget: &mut Budget) -> Result<SzkVerdict> {
    check_modulus(k)?;
    let mut verdict = SzkVerdict::Holds;
    let mut err = None;
    for_each_boundary(g.vertex_count(), k, |beta| match find_beta_orientation(g, beta, budget) {
        Ok(SearchOutcome::Found(_)) => true,
        Ok(SearchOutcome::NotFound) => {
            verdict = SzkVerdict::Fails(beta.clone());
            false
        }
        Ok(SearchOutcome::BudgetExhausted) => {
            verdict = SzkVerdict::Unknown(beta.clone());
            false
        }
        Err(e) => {
            err = Some(e);
            false
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(verdict),
    }
}

/// A modulo-k orientation: a β-orientation for `β ≡ 0`.
pub fn mod_orientation(g: &Multigraph, k: u32, budget: &mut Budget) -> Result<SearchOutcome<Orientation>> {
    find_beta_orientation(g, &Boundary::zero(g.vertex_count(), k)?, budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlowKind {
    /// Values lie in `{q, …, p − q}` modulo `p`.
    Circular { p: u32, q: u32 },
    /// No value is zero and no two values are mutually inverse.
    Antisymmetric,
}

/// A Z_k-flow relative to an orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularFlowCert {
    pub orientation: Orientation,
    pub modulus: u32,
    pub values: Vec<u32>,
    pub kind: FlowKind,
}

impl ModularFlowCert {
    /// Checks conservation and the kind-specific value constraints.
    pub fn verify(&self, g: &Multigraph) -> bool {
        let k = self.modulus;
        if self.orientation.len() != g.edge_count() || self.values.len() != g.edge_count() {
            return false;
        }
        if self.values.iter().any(|&x| x == 0 || x >= k) {
            return false;
        }
        let mut net = vec![0i64; g.vertex_count()];
        for e in 0..g.edge_count() {
            let (t, h) = self.orientation.arc(g, e);
            net[t] += self.values[e] as i64;
            net[h] -= self.values[e] as i64;
        }
        if net.iter().any(|&x| residue(x, k) != 0) {
            return false;
        }
        match self.kind {
            FlowKind::Circular { p, q } => p == k && self.values.iter().all(|&x| q <= x && x <= p - q),
            FlowKind::Antisymmetric => {
                let mut used = vec![false; k as usize];
                for &x in &self.values {
                    used[x as usize] = true;
                }
                (1..k).all(|x| !(used[x as usize] && used[(k - x) as usize]))
            }
        }
    }

    /// Distinct values in increasing order.
    pub fn value_set(&self) -> Vec<u32> {
        let mut v = self.values.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Modular certificate of a circular `(2t+1)/t`-flow: a modulo-(2t+1)
/// orientation carrying the constant value `t`.
pub fn circular_flow_cert(g: &Multigraph, t: u32, budget: &mut Budget) -> Result<SearchOutcome<ModularFlowCert>> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be positive"));
    }
    let p = 2 * t + 1;
    Ok(mod_orientation(g, p, budget)?.map(|orientation| {
        let cert = ModularFlowCert {
            orientation,
            modulus: p,
            values: vec![t; g.edge_count()],
            kind: FlowKind::Circular { p, q: t },
        };
        assert!(cert.verify(g), "circular certificate failed verification");
        cert
    }))
}

/// A Z_5 antisymmetric flow relative to `d` with values in `{1, 2}`.
///
/// Let `D'` be a β-orientation for `β(v) = 2(d⁺_D(v) − d⁻_D(v)) mod 5` and put
/// `f(e) = 2` where `D'` agrees with `D` and `f(e) = 1` where it does not. The
/// net outflow at `v` is then `(3·imb_D(v) + imb_D'(v)) / 2 ≡ 0 (mod 5)`.
pub fn asf_cert(g: &Multigraph, d: &Orientation, budget: &mut Budget) -> Result<SearchOutcome<ModularFlowCert>> {
    d.check_for(g)?;
    let beta = Boundary::from_integers(5, &d.imbalances(g).iter().map(|&x| 2 * x).collect::<Vec<_>>())?;
    Ok(find_beta_orientation(g, &beta, budget)?.map(|aux| {
        let values = (0..g.edge_count()).map(|e| if aux.forward[e] == d.forward[e] { 2 } else { 1 }).collect();
        let cert = ModularFlowCert { orientation: d.clone(), modulus: 5, values, kind: FlowKind::Antisymmetric };
        assert!(cert.verify(g), "antisymmetric certificate failed verification");
        cert
    }))
}

/// Lifts a β-orientation of `G/H` back to `G`, where `H` is the union of the
/// subgraphs induced by `h_sets` and the contraction follows
/// [`Multigraph::contract_sets`]. Each `G[S]` is oriented by
/// [`find_beta_orientation`] against the boundary left over by the external
/// edges.
pub fn extend_through_contraction(
    g: &Multigraph,
    h_sets: &[VertexSet],
    d_q: &Orientation,
    beta: &Boundary,
    budget: &mut Budget,
) -> Result<SearchOutcome<Orientation>> {
    extend_through_contraction_with(g, h_sets, d_q, beta, |_, h, b| find_beta_orientation(h, b, budget))
}

/// As [`extend_through_contraction`], with a caller-supplied solver for the
/// contracted pieces. The solver receives the index of the piece, the induced
/// subgraph and its boundary.
pub fn extend_through_contraction_with(
    g: &Multigraph,
    h_sets: &[VertexSet],
    d_q: &Orientation,
    beta: &Boundary,
    mut solve: impl FnMut(usize, &Multigraph, &Boundary) -> Result<SearchOutcome<Orientation>>,
) -> Result<SearchOutcome<Orientation>> {
    beta.check_for(g)?;
    let k = beta.modulus;
    let c = g.contract_sets(h_sets)?;
    d_q.check_for(&c.graph)?;
    let beta_q = push_boundary(beta, &c.vertex_map, c.graph.vertex_count())?;
    if !verify_beta_orientation(&c.graph, d_q, &beta_q)? {
        return Err(Error::InvalidOrientation("quotient orientation does not realize the pushed boundary"));
    }
    let mut forward = vec![false; g.edge_count()];
    let mut ext = vec![0i64; g.vertex_count()];
    for (e, mapped) in c.edge_map.iter().enumerate() {
        if let Some(e2) = *mapped {
            // quotient edges keep the endpoint order of their originals
            forward[e] = d_q.forward[e2];
            let (a, b) = g.endpoints(e);
            let (t, h) = if forward[e] { (a, b) } else { (b, a) };
            ext[t] += 1;
            ext[h] -= 1;
        }
    }
    for (i, &s) in h_sets.iter().enumerate() {
        let sub = g.induced_subgraph(s)?;
        let local: Vec<i64> = sub.vertices.iter().map(|&v| beta.values[v] as i64 - ext[v]).collect();
        let sum: i64 = local.iter().sum();
        assert_eq!(residue(sum, k), 0, "pushed boundary is conserved on each contracted piece");
        let b = Boundary::from_integers(k, &local)?;
        match solve(i, &sub.graph, &b)? {
            SearchOutcome::Found(d) => {
                for (le, &ge) in sub.edges.iter().enumerate() {
                    let (la, _) = sub.graph.endpoints(le);
                    let (ga, _) = g.endpoints(ge);
                    let same_order = sub.vertices[la] == ga;
                    forward[ge] = d.forward[le] == same_order;
                }
            }
            SearchOutcome::NotFound => return Ok(SearchOutcome::NotFound),
            SearchOutcome::BudgetExhausted => return Ok(SearchOutcome::BudgetExhausted),
        }
    }
    let d = Orientation { forward };
    if !verify_beta_orientation(g, &d, beta)? {
        return Err(Error::Unsolvable("assembled orientation failed verification"));
    }
    Ok(SearchOutcome::Found(d))
}

/// `β` summed over the classes of `vertex_map`.
pub fn push_boundary(beta: &Boundary, vertex_map: &[usize], parts: usize) -> Result<Boundary> {
    let mut sums = vec![0i64; parts];
    for (v, &q) in vertex_map.iter().enumerate() {
        sums[q] += beta.values[v] as i64;
    }
    Boundary::from_integers(beta.modulus, &sums)
}

/// Replays a sequence of path lifts in reverse: each lifted edge `v0 → vn`
/// becomes the directed path `v0 → v1 → … → vn`. Lift `i` refers to the
/// edge ids of the graph produced by the first `i` lifts.
pub fn extend_through_lifting(
    g: &Multigraph,
    lifts: &[LiftPath],
    d_lifted: &Orientation,
    beta: &Boundary,
) -> Result<Orientation> {
    let mut stages = Vec::with_capacity(lifts.len());
    let mut current = g.clone();
    for path in lifts {
        let lifted = current.lift_path(path)?;
        stages.push((current, lifted.edge_map, lifted.new_edge));
        current = lifted.graph;
    }
    d_lifted.check_for(&current)?;
    let mut d = d_lifted.clone();
    for (path, (before, edge_map, new_edge)) in lifts.iter().zip(stages).rev() {
        let mut forward = vec![false; before.edge_count()];
        for (e, mapped) in edge_map.iter().enumerate() {
            if let Some(e2) = *mapped {
                forward[e] = d.forward[e2];
            }
        }
        // the new edge is stored as (v0, vn)
        let along = d.forward[new_edge];
        for (i, &e) in path.edges.iter().enumerate() {
            let (a, _) = before.endpoints(e);
            let from = if along { path.vertices[i] } else { path.vertices[i + 1] };
            forward[e] = a == from;
        }
        d = Orientation { forward };
    }
    if !verify_beta_orientation(g, &d, beta)? {
        return Err(Error::InvalidOrientation("lifted orientation does not realize the boundary"));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cycle, make_named, NamedPattern};

    fn named(p: NamedPattern) -> Multigraph {
        make_named(&p)
    }

    fn solve(g: &Multigraph, beta: &Boundary) -> SearchOutcome<Orientation> {
        find_beta_orientation(g, beta, &mut Budget::unlimited()).unwrap()
    }

    #[test]
    fn boundary_validation() {
        assert_eq!(Boundary::new(4, vec![0, 0]), Err(Error::InvalidModulus(4)));
        assert!(Boundary::new(5, vec![1, 1]).is_err());
        assert!(Boundary::new(5, vec![6, 4]).is_err());
        assert!(Boundary::new(5, vec![3, 2]).is_ok());
    }

    #[test]
    fn verify_examples() {
        let g = named(NamedPattern::AK2(5));
        let d = Orientation::from_forward(vec![true, true, true, true, false]);
        assert!(verify_beta_orientation(&g, &d, &Boundary::new(5, vec![3, 2]).unwrap()).unwrap());
        let w1 = named(NamedPattern::W1);
        let d = Orientation::from_forward((0..12).map(|e| e % 3 == 0).collect());
        let b = Boundary::of_orientation(&w1, &d, 7).unwrap();
        assert!(verify_beta_orientation(&w1, &d, &b).unwrap());
        let three = named(NamedPattern::AK2(3));
        let zero = Boundary::zero(2, 5).unwrap();
        for mask in 0..8u32 {
            let d = Orientation::from_forward((0..3).map(|i| mask >> i & 1 == 1).collect());
            assert!(!verify_beta_orientation(&three, &d, &zero).unwrap());
        }
        let wrong = Boundary::zero(3, 5).unwrap();
        assert!(verify_beta_orientation(&three, &Orientation::all_forward(3), &wrong).is_err());
    }

    #[test]
    fn search_examples() {
        let five = named(NamedPattern::AK2(5));
        let d = solve(&five, &Boundary::new(5, vec![3, 2]).unwrap()).found().unwrap();
        assert_eq!(d.forward().iter().filter(|&&f| f).count(), 4);
        let three = named(NamedPattern::AK2(3));
        assert_eq!(solve(&three, &Boundary::zero(2, 5).unwrap()), SearchOutcome::NotFound);
        let four = named(NamedPattern::AK2(4));
        for b in 0..5 {
            assert!(solve(&four, &Boundary::new(5, vec![b, (5 - b) % 5]).unwrap()).is_found());
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = cycle(6, 5).unwrap();
        let beta = Boundary::zero(6, 5).unwrap();
        let out = find_beta_orientation(&g, &beta, &mut Budget::new(2)).unwrap();
        assert_eq!(out, SearchOutcome::BudgetExhausted);
    }

    #[test]
    fn boundaries_enumerated_in_order() {
        let mut all = Vec::new();
        for_each_boundary(3, 3, |b| {
            all.push(b.values().to_vec());
            true
        })
        .unwrap();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0, 0]);
        assert_eq!(all[1], vec![0, 1, 2]);
        assert_eq!(all[3], vec![1, 0, 2]);
    }

    #[test]
    fn szk_examples() {
        for a in 1..8 {
            let v = is_strongly_zk(&named(NamedPattern::AK2(a)), 5, &mut Budget::unlimited()).unwrap();
            assert_eq!(v.holds(), a >= 4, "{a}K2");
        }
        let t = is_strongly_zk(&named(NamedPattern::T(1, 3, 3)), 5, &mut Budget::unlimited()).unwrap();
        assert!(matches!(t, SzkVerdict::Fails(_)));
        assert!(is_strongly_zk(&Multigraph::new(1), 5, &mut Budget::unlimited()).unwrap().holds());
    }

    #[test]
    fn mod_orientation_examples() {
        let c4 = cycle(4, 5).unwrap();
        let d = mod_orientation(&c4, 5, &mut Budget::unlimited()).unwrap().found().unwrap();
        assert!(verify_beta_orientation(&c4, &d, &Boundary::zero(4, 5).unwrap()).unwrap());
        let three = named(NamedPattern::AK2(3));
        assert_eq!(mod_orientation(&three, 5, &mut Budget::unlimited()).unwrap(), SearchOutcome::NotFound);
        assert!(mod_orientation(&named(NamedPattern::DoubleK4), 5, &mut Budget::unlimited()).unwrap().is_found());
    }

    #[test]
    fn circular_examples() {
        let c4 = cycle(4, 5).unwrap();
        let cert = circular_flow_cert(&c4, 2, &mut Budget::unlimited()).unwrap().found().unwrap();
        assert_eq!(cert.value_set(), vec![2]);
        let three = named(NamedPattern::AK2(3));
        assert_eq!(circular_flow_cert(&three, 2, &mut Budget::unlimited()).unwrap(), SearchOutcome::NotFound);
        let six = named(NamedPattern::AK2(6));
        let cert = circular_flow_cert(&six, 2, &mut Budget::unlimited()).unwrap().found().unwrap();
        assert_eq!(cert.orientation.forward().iter().filter(|&&f| f).count(), 3);
        assert!(circular_flow_cert(&six, 0, &mut Budget::unlimited()).is_err());
    }

    #[test]
    fn asf_examples() {
        let four = named(NamedPattern::AK2(4));
        let cert = asf_cert(&four, &Orientation::all_forward(4), &mut Budget::unlimited()).unwrap().found().unwrap();
        let mut vals = cert.values.clone();
        vals.sort_unstable();
        assert_eq!(vals, vec![1, 1, 1, 2]);
        let c4 = cycle(4, 5).unwrap();
        let cyclic = Orientation::all_forward(20);
        let cert = asf_cert(&c4, &cyclic, &mut Budget::unlimited()).unwrap().found().unwrap();
        assert!(cert.verify(&c4));
        // 3K2 is not in SZ5, yet the boundaries 2·imb_D are all achievable
        let three = named(NamedPattern::AK2(3));
        for mask in 0..8u32 {
            let d = Orientation::from_forward((0..3).map(|i| mask >> i & 1 == 1).collect());
            let cert = asf_cert(&three, &d, &mut Budget::unlimited()).unwrap().found().unwrap();
            assert!(cert.verify(&three));
        }
        // a boundary outside the reach of 2K2: imbalance 2 needs β = 4, but 2K2 only reaches 0, ±2
        let two = named(NamedPattern::AK2(2));
        let beta = Boundary::from_integers(5, &[4, -4]).unwrap();
        assert_eq!(solve(&two, &beta), SearchOutcome::NotFound);
        let both = Orientation::all_forward(2);
        assert_eq!(asf_cert(&two, &both, &mut Budget::unlimited()).unwrap(), SearchOutcome::NotFound);
    }

    #[test]
    fn contraction_extension() {
        // T_{4,2,2}: pair {0,1} carries 4 edges
        let g = named(NamedPattern::T(4, 2, 2));
        let h = [VertexSet::from_vertices([0, 1])];
        let beta = Boundary::zero(3, 5).unwrap();
        let c = g.contract_sets(&h).unwrap();
        let bq = push_boundary(&beta, &c.vertex_map, 2).unwrap();
        let dq = solve(&c.graph, &bq).found().unwrap();
        let d = extend_through_contraction(&g, &h, &dq, &beta, &mut Budget::unlimited()).unwrap().found().unwrap();
        assert!(verify_beta_orientation(&g, &d, &beta).unwrap());

        // a singleton piece changes nothing
        let one = [VertexSet::singleton(2)];
        let beta = Boundary::new(5, vec![1, 2, 2]).unwrap();
        let dq = solve(&g, &beta).found().unwrap();
        let d = extend_through_contraction(&g, &one, &dq, &beta, &mut Budget::unlimited()).unwrap().found().unwrap();
        assert_eq!(d, dq);
    }

    #[test]
    fn lifting_extension() {
        let t = named(NamedPattern::T(1, 1, 3));
        let path = LiftPath::new(vec![1, 0, 2], vec![0, 1]);
        let lifted = t.lift_path(&path).unwrap();
        let zero = Boundary::zero(3, 5).unwrap();
        let d2 = solve(&lifted.graph, &zero);
        // 4K2 plus an isolated vertex has a mod-5 orientation only if 2x - 4 = 0 mod 5
        let d2 = d2.found().unwrap();
        let d = extend_through_lifting(&t, &[path], &d2, &zero).unwrap();
        assert!(verify_beta_orientation(&t, &d, &zero).unwrap());
        assert_eq!(d.imbalances(&t)[0], 0);

        let empty = extend_through_lifting(&t, &[], &d, &zero).unwrap();
        assert_eq!(empty, d);

        // two disjoint 2-paths on C6 with doubled edges
        let c6 = cycle(6, 2).unwrap();
        let p1 = LiftPath::new(vec![0, 1, 2], vec![0, 2]);
        let first = c6.lift_path(&p1).unwrap();
        let e34 = first.edge_map[6].unwrap();
        let e45 = first.edge_map[8].unwrap();
        let p2 = LiftPath::new(vec![3, 4, 5], vec![e34, e45]);
        let second = first.graph.lift_path(&p2).unwrap();
        let beta = Boundary::zero(6, 3).unwrap();
        let d2 = solve(&second.graph, &beta).found().unwrap();
        let d = extend_through_lifting(&c6, &[p1, p2], &d2, &beta).unwrap();
        assert!(verify_beta_orientation(&c6, &d, &beta).unwrap());
    }
}
