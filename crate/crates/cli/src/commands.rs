use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use sz5_core::catalog::{is_s5_contractible, n5_member, ContractibilityWitness};
use sz5_core::graph::{enumerate_class, ClassBounds};
use sz5_core::orient::{
    asf_cert, circular_flow_cert, find_beta_orientation, is_strongly_zk, mod_orientation, verify_beta_orientation,
    Boundary, ModularFlowCert, Orientation, SzkVerdict,
};
use sz5_core::partition::{graph_weight, tree_packing, VertexPartition};
use sz5_core::planar::{discharge, embed, face_config_scan, Embedding, KuratowskiWitness, RotationSystem};
use sz5_core::reduce::{forbidden_scan, reduce, solve_trace, PathPattern, ReductionTrace};
use sz5_core::{Budget, Error as CoreError, Multigraph, SearchOutcome, VertexSet};

use crate::cache::Cache;
use crate::mgf::GraphDocument;
use crate::report::{graph_hash, sha256_hex, Report, Verdict};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cache: {0}")]
    Io(#[from] std::io::Error),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub struct Context {
    pub k: u32,
    pub budget: u64,
    pub cache: Option<Cache>,
}

impl Context {
    fn budget(&self) -> Budget {
        Budget::new(self.budget)
    }
}

fn arcs(g: &Multigraph, d: &Orientation) -> Value {
    json!(d.arcs(g).iter().map(|&(t, h)| [t, h]).collect::<Vec<_>>())
}

fn set(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn labels(p: &VertexPartition) -> Vec<usize> {
    p.labels()
}

fn flow(g: &Multigraph, c: &ModularFlowCert) -> Value {
    json!({
        "modulus": c.modulus,
        "arcs": arcs(g, &c.orientation),
        "values": c.values,
        "verified": c.verify(g),
    })
}

fn kuratowski(w: &KuratowskiWitness) -> Value {
    json!({
        "nonplanar": format!("{:?}", w.kind),
        "branch_vertices": w.branch_vertices,
        "edges": w.edges,
    })
}

/// The document's rotation, or a computed planar embedding, or a Kuratowski witness.
fn rotation(doc: &GraphDocument) -> CliResult<Result<RotationSystem, KuratowskiWitness>> {
    if let Some(r) = &doc.rotation {
        if !r.is_spherical(&doc.graph) {
            return Err(CliError::Input("rotation block is not a planar embedding".into()));
        }
        return Ok(Ok(r.clone()));
    }
    Ok(match embed(&doc.graph)? {
        Embedding::Planar(r) => Ok(r),
        Embedding::NonPlanar(w) => Err(w),
    })
}

pub fn parse_beta(text: &str, n: usize, k: u32) -> CliResult<Boundary> {
    let values: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| CliError::Input(format!("bad boundary value {s:?}"))))
        .collect::<CliResult<_>>()?;
    if values.len() != n {
        return Err(CliError::Input(format!("boundary has {} values, graph has {n} vertices", values.len())));
    }
    let sum: i64 = values.iter().sum();
    if sum.rem_euclid(k as i64) != 0 {
        return Err(CliError::Input(format!("boundary sums to {sum}, not 0 mod {k}")));
    }
    Ok(Boundary::from_integers(k, &values)?)
}

pub fn weight(doc: &GraphDocument, _ctx: &Context) -> CliResult<Report> {
    let g = &doc.graph;
    let w = graph_weight(g)?;
    Ok(Report::new("weight", graph_hash(g), Verdict::Produced).certificate(json!({
        "weight": w.value,
        "partition": labels(&w.partition),
        "parts": w.partition.len(),
    })))
}

fn cached(ctx: &Context, hash: &str, command: &str) -> Option<Verdict> {
    ctx.cache.as_ref()?.get(hash, ctx.k, command).and_then(|v| Verdict::parse(&v))
}

fn remember(ctx: &Context, hash: &str, command: &str, v: Verdict) -> CliResult<()> {
    if let (Some(c), Verdict::Holds | Verdict::Fails) = (&ctx.cache, v) {
        c.put(hash, ctx.k, command, v.as_str())?;
    }
    Ok(())
}

pub fn contractible(doc: &GraphDocument, ctx: &Context) -> CliResult<Report> {
    let g = &doc.graph;
    let hash = graph_hash(g);
    if let Some(v) = cached(ctx, &hash, "contractible") {
        return Ok(Report::new("contractible", hash, v).certificate(json!({ "cached": true })));
    }
    let c = is_s5_contractible(g)?;
    let report = match c.witness {
        None => Report::new("contractible", hash.clone(), Verdict::Holds),
        Some(ContractibilityWitness::NegativeWeight { partition, weight }) => {
            Report::new("contractible", hash.clone(), Verdict::Fails)
                .witness(json!({ "negative_weight": weight, "partition": labels(&partition) }))
        }
        Some(ContractibilityWitness::QuotientInN5 { partition, member }) => {
            Report::new("contractible", hash.clone(), Verdict::Fails)
                .witness(json!({ "quotient": member.name(), "partition": labels(&partition) }))
        }
    };
    remember(ctx, &hash, "contractible", report.verdict)?;
    Ok(report)
}

fn szk_verdict(g: &Multigraph, k: u32, budget: &mut Budget) -> CliResult<(Verdict, Option<Value>)> {
    Ok(match is_strongly_zk(g, k, budget)? {
        SzkVerdict::Holds => (Verdict::Holds, None),
        SzkVerdict::Fails(b) => (Verdict::Fails, Some(json!({ "beta": b.values(), "search": "NotFound" }))),
        SzkVerdict::Unknown(b) => (Verdict::Unknown, Some(json!({ "undecided_beta": b.values() }))),
    })
}

pub fn szk(doc: &GraphDocument, ctx: &Context) -> CliResult<Report> {
    let g = &doc.graph;
    let hash = graph_hash(g);
    if let Some(v) = cached(ctx, &hash, "szk") {
        return Ok(Report::new("szk", hash, v).certificate(json!({ "cached": true })));
    }
    let mut budget = ctx.budget();
    let (v, w) = szk_verdict(g, ctx.k, &mut budget)?;
    remember(ctx, &hash, "szk", v)?;
    let mut r = Report::new("szk", hash, v);
    r.witness = w;
    r.budget_used = budget.used();
    Ok(r)
}

fn orientation_report(
    command: &str,
    g: &Multigraph,
    beta: &Boundary,
    outcome: SearchOutcome<Orientation>,
    budget: &Budget,
) -> CliResult<Report> {
    let hash = graph_hash(g);
    let mut r = match outcome {
        SearchOutcome::Found(d) => {
            let ok = verify_beta_orientation(g, &d, beta)?;
            Report::new(command, hash, Verdict::Holds).certificate(json!({ "arcs": arcs(g, &d), "verified": ok }))
        }
        SearchOutcome::NotFound => {
            Report::new(command, hash, Verdict::Fails).witness(json!({ "search": "NotFound", "beta": beta.values() }))
        }
        SearchOutcome::BudgetExhausted => Report::new(command, hash, Verdict::Unknown),
    };
    r.budget_used = budget.used();
    Ok(r)
}

pub fn orient(doc: &GraphDocument, ctx: &Context, beta: &str) -> CliResult<Report> {
    let g = &doc.graph;
    let beta = parse_beta(beta, g.vertex_count(), ctx.k)?;
    let mut budget = ctx.budget();
    let outcome = find_beta_orientation(g, &beta, &mut budget)?;
    orientation_report("orient", g, &beta, outcome, &budget)
}

pub fn mod_orient(doc: &GraphDocument, ctx: &Context) -> CliResult<Report> {
    let g = &doc.graph;
    let mut budget = ctx.budget();
    let outcome = mod_orientation(g, ctx.k, &mut budget)?;
    orientation_report("mod-orient", g, &Boundary::zero(g.vertex_count(), ctx.k)?, outcome, &budget)
}

pub fn circular(doc: &GraphDocument, ctx: &Context) -> CliResult<Report> {
    let g = &doc.graph;
    if ctx.k < 3 || ctx.k % 2 == 0 {
        return Err(CoreError::InvalidModulus(ctx.k).into());
    }
    let mut budget = ctx.budget();
    let t = (ctx.k - 1) / 2;
    let hash = graph_hash(g);
    let mut r = match circular_flow_cert(g, t, &mut budget)? {
        SearchOutcome::Found(c) => Report::new("circular", hash, Verdict::Holds).certificate(flow(g, &c)),
        SearchOutcome::NotFound => {
            Report::new("circular", hash, Verdict::Fails).witness(json!({ "search": "NotFound", "modulus": ctx.k }))
        }
        SearchOutcome::BudgetExhausted => Report::new("circular", hash, Verdict::Unknown),
    };
    r.budget_used = budget.used();
    Ok(r)
}

/// Antisymmetric Z_5-flow relative to the orientation given by the edge lines.
pub fn asf(doc: &GraphDocument, ctx: &Context) -> CliResult<Report> {
    let g = &doc.graph;
    let d = Orientation::all_forward(g.edge_count());
    let mut budget = ctx.budget();
    let hash = graph_hash(g);
    let mut r = match asf_cert(g, &d, &mut budget)? {
        SearchOutcome::Found(c) => Report::new("asf", hash, Verdict::Holds).certificate(flow(g, &c)),
        SearchOutcome::NotFound => {
            Report::new("asf", hash, Verdict::Fails).witness(json!({ "search": "NotFound", "arcs": arcs(g, &d) }))
        }
        SearchOutcome::BudgetExhausted => Report::new("asf", hash, Verdict::Unknown),
    };
    r.budget_used = budget.used();
    Ok(r)
}

fn trace_json(t: &ReductionTrace) -> Value {
    let g = t.graph();
    let size = json!([g.vertex_count(), g.edge_count()]);
    match t {
        ReductionTrace::Base { .. } => json!({ "step": "base", "size": size }),
        ReductionTrace::Contract { h, sub, quotient, .. } => json!({
            "step": "contract",
            "size": size,
            "h": set(*h),
            "sub": trace_json(sub),
            "quotient": trace_json(quotient),
        }),
        ReductionTrace::LiftAndContract { plan, sub, quotient, .. } => json!({
            "step": "lift",
            "size": size,
            "lifts": plan.lifts.iter().map(|l| json!({
                "path": l.path.vertices,
                "edges": l.path.edges,
                "face": l.face,
            })).collect::<Vec<_>>(),
            "h": set(plan.h),
            "sub": trace_json(sub),
            "quotient": trace_json(quotient),
        }),
    }
}

pub fn reduce_cmd(doc: &GraphDocument, ctx: &Context, beta: Option<&str>) -> CliResult<Report> {
    let g = &doc.graph;
    let hash = graph_hash(g);
    let beta = beta.map(|b| parse_beta(b, g.vertex_count(), ctx.k)).transpose()?;
    if let Some(b) = &beta {
        if b.modulus() != 5 {
            return Err(CliError::Input("the reduction builds Z5 orientations; use --k 5".into()));
        }
    }
    let rot = match rotation(doc)? {
        Ok(r) => r,
        Err(w) => return Ok(Report::new("reduce", hash, Verdict::Fails).witness(kuratowski(&w))),
    };
    let mut budget = ctx.budget();
    let trace = match reduce(g, &rot, &mut budget) {
        Ok(t) => t,
        Err(CoreError::NotContractible) => {
            let mut r = Report::new("reduce", hash, Verdict::Fails);
            if let Some(w) = is_s5_contractible(g)?.witness {
                r = r.witness(json!({ "not_contractible": labels(w.partition()) }));
            }
            r.budget_used = budget.used();
            return Ok(r);
        }
        Err(e @ (CoreError::BudgetExhausted | CoreError::NoReduction { .. })) => {
            let mut r = Report::new("reduce", hash, Verdict::Unknown).witness(json!({ "reason": e.to_string() }));
            r.budget_used = budget.used();
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    let mut cert = json!({
        "depth": trace.depth(),
        "nodes": trace.node_count(),
        "lift_steps": trace.lift_steps(),
        "trace": trace_json(&trace),
    });
    if let Some(b) = &beta {
        let d = match solve_trace(&trace, b, &mut budget) {
            Ok(d) => d,
            Err(CoreError::BudgetExhausted) => {
                let mut r = Report::new("reduce", hash, Verdict::Unknown).certificate(cert);
                r.budget_used = budget.used();
                return Ok(r);
            }
            Err(e) => return Err(e.into()),
        };
        cert["arcs"] = arcs(g, &d);
        cert["verified"] = json!(verify_beta_orientation(g, &d, b)?);
    }
    let mut r = Report::new("reduce", hash, Verdict::Holds).certificate(cert);
    r.budget_used = budget.used();
    Ok(r)
}

pub fn discharge_cmd(doc: &GraphDocument, _ctx: &Context) -> CliResult<Report> {
    let g = &doc.graph;
    let hash = graph_hash(g);
    let rot = match rotation(doc)? {
        Ok(r) => r,
        Err(w) => return Ok(Report::new("discharge", hash, Verdict::Fails).witness(kuratowski(&w))),
    };
    let t = discharge(g, &rot)?;
    let faces: Vec<Value> = t
        .faces
        .faces()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            json!({
                "walk": f.walk(),
                "degree": f.degree(),
                "shape": format!("{:?}", t.shapes[i]),
                "initial": t.ch0[i].to_string(),
                "final": t.ch2[i].to_string(),
            })
        })
        .collect();
    let transfers: Vec<Value> = t
        .transfers
        .iter()
        .map(|x| json!({ "from": x.from, "to": x.to, "amount": x.amount.to_string(), "rule": x.rule.to_string() }))
        .collect();
    Ok(Report::new("discharge", hash, Verdict::Produced).certificate(json!({
        "faces": faces,
        "transfers": transfers,
        "total_initial": t.total0().to_string(),
        "total_final": t.total2().to_string(),
        "negative_faces": t.negative,
        "unit_candidates": t.unit_candidates,
    })))
}

fn path_patterns(ps: &[PathPattern]) -> Value {
    json!(ps.iter().map(|p| json!({ "h": p.h, "paths": p.paths })).collect::<Vec<_>>())
}

pub fn scan(doc: &GraphDocument, _ctx: &Context) -> CliResult<Report> {
    let g = &doc.graph;
    let hash = graph_hash(g);
    let f = forbidden_scan(g)?;
    let mut found = !f.is_empty();
    let mut w = json!({
        "t113": f.t113,
        "t222_two_paths": path_patterns(&f.t222_two_paths),
        "q2333_short_path": path_patterns(&f.q2333_short_path),
        "q2233_paths": path_patterns(&f.q2233_paths),
        "q2223_triple": path_patterns(&f.q2223_triple),
    });
    if g.is_connected() {
        if let Ok(rot) = rotation(doc)? {
            let c = face_config_scan(g, &rot)?;
            found |= !c.passes();
            w["face_conditions"] = json!(c
                .violations
                .iter()
                .map(|v| json!({ "face": v.face, "condition": v.condition.to_string(), "related": v.related }))
                .collect::<Vec<_>>());
        }
    }
    let r = Report::new("scan", hash, if found { Verdict::Fails } else { Verdict::Holds });
    Ok(if found { r.witness(w) } else { r })
}

pub fn trees(doc: &GraphDocument, _ctx: &Context) -> CliResult<Report> {
    let g = &doc.graph;
    let p = tree_packing(g)?;
    Ok(Report::new("trees", graph_hash(g), Verdict::Produced)
        .certificate(json!({ "count": p.count(), "trees": p.trees })))
}

fn pattern_name(g: &Multigraph) -> Option<&'static str> {
    n5_member(g).map(|m| m.name())
}

struct Sweep {
    graph: Multigraph,
    hash: String,
    trees: usize,
    verdict: Option<Verdict>,
    budget_used: u64,
}

/// Connected 4-vertex multigraphs in the given class with at least 4
/// edge-disjoint spanning trees, tested for strong Z_k-connectivity.
pub fn enumerate4v(ctx: &Context, min_edges: usize, max_edges: usize, mu_max: usize) -> CliResult<Report> {
    if min_edges > max_edges {
        return Err(CliError::Input("--min-edges exceeds --max-edges".into()));
    }
    let bounds = ClassBounds::default().edges(min_edges, max_edges).max_multiplicity(mu_max).connected(true);
    let class = enumerate_class(4, bounds)?;
    let rows: Vec<CliResult<Sweep>> = class
        .into_par_iter()
        .map(|g| {
            let trees = tree_packing(&g)?.count();
            let hash = graph_hash(&g);
            let mut row = Sweep { graph: g, hash, trees, verdict: None, budget_used: 0 };
            if trees < 4 {
                return Ok(row);
            }
            if let Some(v) = cached(ctx, &row.hash, "szk") {
                row.verdict = Some(v);
                return Ok(row);
            }
            let mut budget = ctx.budget();
            let (v, _) = szk_verdict(&row.graph, ctx.k, &mut budget)?;
            remember(ctx, &row.hash, "szk", v)?;
            row.verdict = Some(v);
            row.budget_used = budget.used();
            Ok(row)
        })
        .collect();
    let mut rows = rows.into_iter().collect::<CliResult<Vec<_>>>()?;
    rows.sort_by(|a, b| {
        (a.graph.edge_count(), a.graph.multiplicity_matrix())
            .cmp(&(b.graph.edge_count(), b.graph.multiplicity_matrix()))
    });

    let dense: Vec<&Sweep> = rows.iter().filter(|r| r.trees >= 4).collect();
    let describe = |r: &&Sweep| {
        let m = r.graph.multiplicity_matrix();
        json!({
            "name": pattern_name(&r.graph),
            "edges": r.graph.edge_count(),
            "multiplicities": [m[0][1], m[0][2], m[1][2], m[0][3], m[1][3], m[2][3]],
            "hash": r.hash,
        })
    };
    let failing: Vec<Value> = dense.iter().filter(|r| r.verdict == Some(Verdict::Fails)).map(describe).collect();
    let unknown: Vec<Value> = dense.iter().filter(|r| r.verdict == Some(Verdict::Unknown)).map(describe).collect();
    let verdict = if unknown.is_empty() { Verdict::Produced } else { Verdict::Unknown };
    let request = format!("enumerate4v {min_edges} {max_edges} {mu_max} {}", ctx.k);
    let mut r = Report::new("enumerate4v", sha256_hex(request.as_bytes()), verdict).certificate(json!({
        "graphs": rows.len(),
        "with_4_trees": dense.len(),
        "not_szk": failing,
        "undecided": unknown,
    }));
    r.budget_used = rows.iter().map(|r| r.budget_used).sum();
    Ok(r)
}
