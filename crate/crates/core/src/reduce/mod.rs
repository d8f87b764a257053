//! Reduction of S5-contractible planar graphs to graphs on at most four
//! vertices, and β-orientations assembled by replaying the reduction.
//!
//! A node of a [`ReductionTrace`] is one of
//! * a base graph with at most four vertices, oriented by exhaustive search;
//! * a contraction of an induced contractible subgraph `H` whose quotient is
//!   contractible as well;
//! * a sequence of path lifts, each across a common face of a recorded
//!   embedding, followed by such a contraction in the lifted graph.

mod scan;

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::catalog::is_s5_contractible;
use crate::graph::{for_each_k_subset, LiftPath, Multigraph, VertexSet};
use crate::orient::{
    extend_through_contraction_with, extend_through_lifting, find_beta_orientation, push_boundary,
    verify_beta_orientation, Boundary, Orientation,
};
use crate::planar::{common_face, embed, trace_faces, Embedding, RotationSystem};
use crate::{Budget, Error, Result, SearchOutcome};

pub use scan::{forbidden_scan, ForbiddenReport, PathPattern};

/// Most lifts in one step.
pub const MAX_LIFTS: usize = 3;
/// Longest lifted path, in edges.
pub const MAX_LIFT_LENGTH: usize = 3;

/// Largest graph handled by the base case.
pub const BASE_VERTICES: usize = 4;

/// One lifted path with the embedding that makes it legal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftRecord {
    /// Edge ids refer to the graph produced by the preceding lifts.
    pub path: LiftPath,
    /// Embedding of that graph.
    pub rotation: RotationSystem,
    /// Index of a face of `rotation` containing both ends of `path`.
    pub face: usize,
}

/// Lifts exposing a contractible induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftPlan {
    pub lifts: Vec<LiftRecord>,
    pub lifted: Multigraph,
    pub h: VertexSet,
}

impl LiftPlan {
    pub fn paths(&self) -> Vec<LiftPath> {
        self.lifts.iter().map(|l| l.path.clone()).collect()
    }

    pub fn lifted_edge_count(&self) -> usize {
        self.lifts.iter().map(|l| l.path.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionTrace {
    Base {
        graph: Multigraph,
    },
    Contract {
        graph: Multigraph,
        h: VertexSet,
        /// Trace of `G[H]`.
        sub: Box<ReductionTrace>,
        /// Trace of `G/H`.
        quotient: Box<ReductionTrace>,
    },
    LiftAndContract {
        graph: Multigraph,
        plan: LiftPlan,
        /// Trace of `G'[H]`.
        sub: Box<ReductionTrace>,
        /// Trace of `G'/H`.
        quotient: Box<ReductionTrace>,
    },
}

impl ReductionTrace {
    pub fn graph(&self) -> &Multigraph {
        match self {
            ReductionTrace::Base { graph }
            | ReductionTrace::Contract { graph, .. }
            | ReductionTrace::LiftAndContract { graph, .. } => graph,
        }
    }

    pub fn fingerprint(&self) -> u64 {
        self.graph().fingerprint()
    }

    pub fn is_base(&self) -> bool {
        matches!(self, ReductionTrace::Base { .. })
    }

    /// Longest chain of reduction steps from this node to a base leaf.
    pub fn depth(&self) -> usize {
        match self {
            ReductionTrace::Base { .. } => 0,
            ReductionTrace::Contract { sub, quotient, .. } | ReductionTrace::LiftAndContract { sub, quotient, .. } => {
                1 + sub.depth().max(quotient.depth())
            }
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            ReductionTrace::Base { .. } => 1,
            ReductionTrace::Contract { sub, quotient, .. } | ReductionTrace::LiftAndContract { sub, quotient, .. } => {
                1 + sub.node_count() + quotient.node_count()
            }
        }
    }

    pub fn lift_steps(&self) -> usize {
        match self {
            ReductionTrace::Base { .. } => 0,
            ReductionTrace::Contract { sub, quotient, .. } => sub.lift_steps() + quotient.lift_steps(),
            ReductionTrace::LiftAndContract { sub, quotient, .. } => 1 + sub.lift_steps() + quotient.lift_steps(),
        }
    }

    /// Base graphs in left-to-right order (subgraph before quotient).
    pub fn leaves(&self) -> Vec<&Multigraph> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Multigraph>) {
        match self {
            ReductionTrace::Base { graph } => out.push(graph),
            ReductionTrace::Contract { sub, quotient, .. } | ReductionTrace::LiftAndContract { sub, quotient, .. } => {
                sub.collect_leaves(out);
                quotient.collect_leaves(out);
            }
        }
    }

    /// Re-derives every intermediate graph from `g` and checks it against the
    /// record, together with every premise: contractibility of each `H` and
    /// quotient, and the common face of each lift.
    pub fn replay(&self, g: &Multigraph) -> Result<()> {
        if g.fingerprint() != self.fingerprint() || g != self.graph() {
            return Err(Error::TraceMismatch("graph differs from the recorded one"));
        }
        match self {
            ReductionTrace::Base { graph } => {
                if graph.vertex_count() > BASE_VERTICES {
                    return Err(Error::TraceMismatch("base graph is too large"));
                }
                if !is_s5_contractible(graph)?.is_contractible() {
                    return Err(Error::TraceMismatch("base graph is not contractible"));
                }
                Ok(())
            }
            ReductionTrace::Contract { graph, h, sub, quotient } => replay_contraction(graph, *h, sub, quotient),
            ReductionTrace::LiftAndContract { graph, plan, sub, quotient } => {
                let lifted = replay_lifts(graph, &plan.lifts)?;
                if lifted != plan.lifted {
                    return Err(Error::TraceMismatch("lifted graph differs from the recorded one"));
                }
                replay_contraction(&lifted, plan.h, sub, quotient)
            }
        }
    }
}

fn replay_contraction(g: &Multigraph, h: VertexSet, sub: &ReductionTrace, quotient: &ReductionTrace) -> Result<()> {
    let n = g.vertex_count();
    if h.len() < 2 || h.len() >= n || !g.induces_connected(h) {
        return Err(Error::TraceMismatch("contracted set is not a proper connected set"));
    }
    let hg = g.induced_subgraph(h)?.graph;
    let q = g.contract(h)?.graph;
    if !is_s5_contractible(&hg)?.is_contractible() || !is_s5_contractible(&q)?.is_contractible() {
        return Err(Error::TraceMismatch("contracted subgraph or quotient is not contractible"));
    }
    sub.replay(&hg)?;
    quotient.replay(&q)
}

fn replay_lifts(g: &Multigraph, lifts: &[LiftRecord]) -> Result<Multigraph> {
    let mut cur = g.clone();
    for rec in lifts {
        let faces = trace_faces(&cur, &rec.rotation)?;
        if !rec.rotation.is_spherical(&cur) {
            return Err(Error::TraceMismatch("recorded lift embedding is not planar"));
        }
        let f = faces.faces().get(rec.face).ok_or(Error::TraceMismatch("recorded face does not exist"))?;
        if !f.contains_vertex(rec.path.start()) || !f.contains_vertex(rec.path.end()) {
            return Err(Error::TraceMismatch("lifted path ends do not share the recorded face"));
        }
        cur = cur.lift_path(&rec.path)?.graph;
    }
    Ok(cur)
}

/// First proper connected vertex set (by size, then lexicographically) whose
/// induced subgraph is contractible and, with `with_quotient`, whose quotient is too.
fn first_reducible(g: &Multigraph, budget: &mut Budget, with_quotient: bool) -> Result<Option<VertexSet>> {
    g.check_set_capacity()?;
    let n = g.vertex_count();
    let mut found = None;
    let mut failure = None;
    for size in 2..n {
        for_each_k_subset(n, size, |s| {
            if !g.induces_connected(s) {
                return true;
            }
            if !budget.spend() {
                failure = Some(Error::BudgetExhausted);
                return false;
            }
            match reducible(g, s, with_quotient) {
                Ok(true) => {
                    found = Some(s);
                    false
                }
                Ok(false) => true,
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn reducible(g: &Multigraph, s: VertexSet, with_quotient: bool) -> Result<bool> {
    let hg = g.induced_subgraph(s)?.graph;
    if !is_s5_contractible(&hg)?.is_contractible() {
        return Ok(false);
    }
    if !with_quotient {
        return Ok(true);
    }
    let q = g.contract(s)?.graph;
    if !q.is_connected() {
        return Ok(false);
    }
    Ok(is_s5_contractible(&q)?.is_contractible())
}

/// Smallest proper connected vertex set inducing a contractible subgraph.
/// `Ok(None)` means every candidate was tested; running out of budget is an error.
pub fn find_contractible_subgraph(g: &Multigraph, budget: &mut Budget) -> Result<Option<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    first_reducible(g, budget, false)
}

/// Simple paths with `len` edges whose ends lie on a common face, each
/// listed once with `start < end`, in lexicographic order of vertices. Every
/// step uses the smallest edge id of its pair.
fn liftable_paths(g: &Multigraph, rot: &RotationSystem, len: usize) -> Result<Vec<(LiftPath, usize)>> {
    let faces = trace_faces(g, rot)?;
    let n = g.vertex_count();
    let mut first_edge = vec![vec![usize::MAX; n]; n];
    for (e, (a, b)) in g.edges().enumerate() {
        if first_edge[a][b] == usize::MAX {
            first_edge[a][b] = e;
            first_edge[b][a] = e;
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(len + 1);
    fn extend(first_edge: &[Vec<usize>], len: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() == len + 1 {
            if stack[0] < stack[len] {
                out.push(stack.clone());
            }
            return;
        }
        let last = *stack.last().unwrap();
        for w in 0..first_edge.len() {
            if first_edge[last][w] != usize::MAX && !stack.contains(&w) {
                stack.push(w);
                extend(first_edge, len, stack, out);
                stack.pop();
            }
        }
    }
    let mut seqs = Vec::new();
    for v in 0..n {
        stack.push(v);
        extend(&first_edge, len, &mut stack, &mut seqs);
        stack.pop();
    }
    for vs in seqs {
        if let Some(face) = common_face(&faces, vs[0], vs[len]) {
            let edges = vs.windows(2).map(|w| first_edge[w[0]][w[1]]).collect();
            out.push((LiftPath::new(vs, edges), face));
        }
    }
    Ok(out)
}

/// Ordered lift lengths with `total` edges, at most [`MAX_LIFTS`] parts,
/// each between 2 and [`MAX_LIFT_LENGTH`].
fn compositions(total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(rest: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        if acc.len() == MAX_LIFTS {
            return;
        }
        for l in 2..=MAX_LIFT_LENGTH.min(rest) {
            acc.push(l);
            go(rest - l, acc, out);
            acc.pop();
        }
    }
    go(total, &mut Vec::new(), &mut out);
    out
}

fn search_lifts(
    g: &Multigraph,
    rot: &RotationSystem,
    budget: &mut Budget,
    with_quotient: bool,
) -> Result<Option<LiftPlan>> {
    if !rot.is_spherical(g) {
        return Err(Error::NonPlanar);
    }
    for total in 2..=MAX_LIFTS * MAX_LIFT_LENGTH {
        for lengths in compositions(total) {
            let mut acc = Vec::new();
            if let Some(plan) = plans_with(g, rot.clone(), &lengths, &mut acc, budget, with_quotient)? {
                return Ok(Some(plan));
            }
        }
    }
    Ok(None)
}

fn plans_with(
    cur: &Multigraph,
    rot: RotationSystem,
    lengths: &[usize],
    acc: &mut Vec<LiftRecord>,
    budget: &mut Budget,
    with_quotient: bool,
) -> Result<Option<LiftPlan>> {
    let Some((&len, rest)) = lengths.split_first() else {
        if with_quotient && !cur.is_connected() {
            return Ok(None);
        }
        return Ok(first_reducible(cur, budget, with_quotient)?.map(|h| LiftPlan {
            lifts: acc.clone(),
            lifted: cur.clone(),
            h,
        }));
    };
    for (path, face) in liftable_paths(cur, &rot, len)? {
        if !budget.spend() {
            return Err(Error::BudgetExhausted);
        }
        let lifted = cur.lift_path(&path)?.graph;
        let next_rot = if rest.is_empty() {
            None
        } else {
            // later lifts need an embedding of the lifted graph
            match lifted.is_connected().then(|| embed(&lifted)).transpose()? {
                Some(Embedding::Planar(r)) => Some(r),
                _ => continue,
            }
        };
        acc.push(LiftRecord { path, rotation: rot.clone(), face });
        let found = match next_rot {
            Some(r) => plans_with(&lifted, r, rest, acc, budget, with_quotient)?,
            None => plans_with(&lifted, rot.clone(), rest, acc, budget, with_quotient)?,
        };
        acc.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Lifts (at most [`MAX_LIFTS`] paths of 2 or 3 edges, fewest lifted edges
/// first) after which some proper induced subgraph is contractible. The
/// lifted graph may fall apart.
pub fn find_lift_exposure(g: &Multigraph, rot: &RotationSystem, budget: &mut Budget) -> Result<Option<LiftPlan>> {
    search_lifts(g, rot, budget, false)
}

/// As [`find_lift_exposure`], additionally requiring the lifted graph to be
/// connected with a contractible quotient by the exposed subgraph.
pub fn find_lift_plan(g: &Multigraph, rot: &RotationSystem, budget: &mut Budget) -> Result<Option<LiftPlan>> {
    search_lifts(g, rot, budget, true)
}

/// Builds a reduction trace for a connected, planar, S5-contractible graph
/// embedded by `rot`. Child graphs are re-embedded.
pub fn reduce(g: &Multigraph, rot: &RotationSystem, budget: &mut Budget) -> Result<ReductionTrace> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !rot.is_spherical(g) {
        return Err(Error::NonPlanar);
    }
    if !is_s5_contractible(g)?.is_contractible() {
        return Err(Error::NotContractible);
    }
    reduce_node(g, Some(rot), budget)
}

fn reduce_node(g: &Multigraph, rot: Option<&RotationSystem>, budget: &mut Budget) -> Result<ReductionTrace> {
    if g.vertex_count() <= BASE_VERTICES {
        return Ok(ReductionTrace::Base { graph: g.clone() });
    }
    if let Some(h) = first_reducible(g, budget, true)? {
        let sub = reduce_node(&g.induced_subgraph(h)?.graph, None, budget)?;
        let quotient = reduce_node(&g.contract(h)?.graph, None, budget)?;
        return Ok(ReductionTrace::Contract { graph: g.clone(), h, sub: Box::new(sub), quotient: Box::new(quotient) });
    }
    let owned;
    let rot = match rot {
        Some(r) => r,
        None => match embed(g)? {
            Embedding::Planar(r) => {
                owned = r;
                &owned
            }
            Embedding::NonPlanar(_) => return Err(Error::NonPlanar),
        },
    };
    match find_lift_plan(g, rot, budget)? {
        Some(plan) => {
            let sub = reduce_node(&plan.lifted.induced_subgraph(plan.h)?.graph, None, budget)?;
            let quotient = reduce_node(&plan.lifted.contract(plan.h)?.graph, None, budget)?;
            Ok(ReductionTrace::LiftAndContract {
                graph: g.clone(),
                plan,
                sub: Box::new(sub),
                quotient: Box::new(quotient),
            })
        }
        None => Err(Error::NoReduction { vertices: g.vertex_count() }),
    }
}

/// A β-orientation of the graph of `trace`, assembled bottom-up.
pub fn solve_trace(trace: &ReductionTrace, beta: &Boundary, budget: &mut Budget) -> Result<Orientation> {
    let d = match trace {
        ReductionTrace::Base { graph } => match find_beta_orientation(graph, beta, budget)? {
            SearchOutcome::Found(d) => d,
            SearchOutcome::NotFound => return Err(Error::Unsolvable("base graph has no orientation for the boundary")),
            SearchOutcome::BudgetExhausted => return Err(Error::BudgetExhausted),
        },
        ReductionTrace::Contract { graph, h, sub, quotient } => {
            solve_contraction(graph, *h, sub, quotient, beta, budget)?
        }
        ReductionTrace::LiftAndContract { graph, plan, sub, quotient } => {
            let d_lifted = solve_contraction(&plan.lifted, plan.h, sub, quotient, beta, budget)?;
            extend_through_lifting(graph, &plan.paths(), &d_lifted, beta)?
        }
    };
    // every assembled orientation is checked, whatever its origin
    if !verify_beta_orientation(trace.graph(), &d, beta)? {
        return Err(Error::Unsolvable("assembled orientation failed verification"));
    }
    Ok(d)
}

fn solve_contraction(
    g: &Multigraph,
    h: VertexSet,
    sub: &ReductionTrace,
    quotient: &ReductionTrace,
    beta: &Boundary,
    budget: &mut Budget,
) -> Result<Orientation> {
    let c = g.contract(h)?;
    let beta_q = push_boundary(beta, &c.vertex_map, c.graph.vertex_count())?;
    let d_q = solve_trace(quotient, &beta_q, budget)?;
    let out = extend_through_contraction_with(g, &[h], &d_q, beta, |_, _, b| {
        solve_trace(sub, b, budget).map(SearchOutcome::Found)
    })?;
    match out {
        SearchOutcome::Found(d) => Ok(d),
        SearchOutcome::NotFound => Err(Error::Unsolvable("contracted piece has no orientation")),
        SearchOutcome::BudgetExhausted => Err(Error::BudgetExhausted),
    }
}

/// A β-orientation of a planar S5-contractible graph, by reduction.
pub fn solve_beta(g: &Multigraph, rot: &RotationSystem, beta: &Boundary, budget: &mut Budget) -> Result<Orientation> {
    let trace = reduce(g, rot, budget)?;
    solve_trace(&trace, beta, budget)
}
