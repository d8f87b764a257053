//! Named small multigraphs, the families N5, F1, F2 and S5-contractibility.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{canonical_form, find_pattern, isomorphic, Multigraph};
use crate::partition::{for_each_partition, VertexPartition};
use crate::{Error, Result};

/// Named graphs.
///
/// Vertex conventions:
/// * `AK2(a)`: vertices 0, 1 joined by `a` edges.
/// * `T(a, b, c)`: `μ(0,1) = a`, `μ(0,2) = b`, `μ(1,2) = c`.
/// * `Q(a1, a2, a3, a4)`: 4-cycle `0 1 2 3` with `μ(i, i+1) = a_{i+1}`, indices mod 4.
/// * `W1`: vertex 0 joined to 1, 2, 3 by triple edges, plus the triangle 1 2 3.
/// * `W2`: `μ(0,1) = 3`, `μ(0,2) = μ(0,3) = μ(1,2) = μ(1,3) = 2`, `μ(2,3) = 1`.
/// * `DoubleK4`: every pair doubled; `DoubleK4MinusEdge` drops one edge of pair `{0,1}`.
/// * `FStar`: `DoubleK4` without the pair `{0,1}`, i.e. two `T_{2,2,2}` sharing `{2,3}`.
/// * `Path(k)`: `0 1 ... k` with single edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedPattern {
    AK2(usize),
    T(usize, usize, usize),
    Q(usize, usize, usize, usize),
    W1,
    W2,
    DoubleK4,
    DoubleK4MinusEdge,
    FStar,
    Path(usize),
}

impl fmt::Display for NamedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedPattern::AK2(a) => write!(f, "{a}K2"),
            NamedPattern::T(a, b, c) => write!(f, "T({a},{b},{c})"),
            NamedPattern::Q(a, b, c, d) => write!(f, "Q({a},{b},{c},{d})"),
            NamedPattern::W1 => f.write_str("W1"),
            NamedPattern::W2 => f.write_str("W2"),
            NamedPattern::DoubleK4 => f.write_str("2K4"),
            NamedPattern::DoubleK4MinusEdge => f.write_str("2K4-e"),
            NamedPattern::FStar => f.write_str("F*"),
            NamedPattern::Path(k) => write!(f, "P{k}"),
        }
    }
}

pub fn make_named(p: &NamedPattern) -> Multigraph {
    let build = |n: usize, pairs: &[(usize, usize, usize)]| {
        Multigraph::from_multiplicities(n, pairs).expect("named patterns are loopless")
    };
    match *p {
        NamedPattern::AK2(a) => build(2, &[(0, 1, a)]),
        NamedPattern::T(a, b, c) => build(3, &[(0, 1, a), (0, 2, b), (1, 2, c)]),
        NamedPattern::Q(a, b, c, d) => build(4, &[(0, 1, a), (1, 2, b), (2, 3, c), (3, 0, d)]),
        NamedPattern::W1 => build(4, &[(0, 1, 3), (0, 2, 3), (0, 3, 3), (1, 2, 1), (1, 3, 1), (2, 3, 1)]),
        NamedPattern::W2 => build(4, &[(0, 1, 3), (0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 1)]),
        NamedPattern::DoubleK4 => build(4, &[(0, 1, 2), (0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 2)]),
        NamedPattern::DoubleK4MinusEdge => {
            build(4, &[(0, 1, 1), (0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 2)])
        }
        NamedPattern::FStar => build(4, &[(0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 2)]),
        NamedPattern::Path(k) => {
            let pairs: Vec<(usize, usize, usize)> = (0..k).map(|i| (i, i + 1, 1)).collect();
            build(k + 1, &pairs)
        }
    }
}

/// The cycle `0 1 ... n-1` with every consecutive pair joined by `mult` edges.
pub fn cycle(n: usize, mult: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::TooFewVertices { count: n, min: 3 });
    }
    let pairs: Vec<(usize, usize, usize)> = (0..n).map(|i| (i, (i + 1) % n, mult)).collect();
    Multigraph::from_multiplicities(n, &pairs)
}

/// The six members of N5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum N5Member {
    TwoK2,
    ThreeK2,
    T133,
    T223,
    W1,
    W2,
}

impl N5Member {
    pub const ALL: [N5Member; 6] =
        [N5Member::TwoK2, N5Member::ThreeK2, N5Member::T133, N5Member::T223, N5Member::W1, N5Member::W2];

    pub fn pattern(self) -> NamedPattern {
        match self {
            N5Member::TwoK2 => NamedPattern::AK2(2),
            N5Member::ThreeK2 => NamedPattern::AK2(3),
            N5Member::T133 => NamedPattern::T(1, 3, 3),
            N5Member::T223 => NamedPattern::T(2, 2, 3),
            N5Member::W1 => NamedPattern::W1,
            N5Member::W2 => NamedPattern::W2,
        }
    }

    pub fn graph(self) -> Multigraph {
        make_named(&self.pattern())
    }

    pub fn name(self) -> &'static str {
        match self {
            N5Member::TwoK2 => "2K2",
            N5Member::ThreeK2 => "3K2",
            N5Member::T133 => "T(1,3,3)",
            N5Member::T223 => "T(2,2,3)",
            N5Member::W1 => "W1",
            N5Member::W2 => "W2",
        }
    }
}

/// The member of N5 isomorphic to `g`, if any.
pub fn n5_member(g: &Multigraph) -> Option<N5Member> {
    let candidates: &[N5Member] = match (g.vertex_count(), g.edge_count()) {
        (2, 2) => &[N5Member::TwoK2],
        (2, 3) => &[N5Member::ThreeK2],
        (3, 7) => &[N5Member::T133, N5Member::T223],
        (4, 12) => &[N5Member::W1, N5Member::W2],
        _ => &[],
    };
    candidates.iter().copied().find(|m| isomorphic(g, &m.graph()).is_some())
}

/// Whether `g` contains `T_{1,1,3}` as a subgraph.
pub fn contains_t113(g: &Multigraph) -> bool {
    g.vertex_count() >= 3 && !find_pattern(g, &make_named(&NamedPattern::T(1, 1, 3)), false).is_empty()
}

/// The family `F_k` (k = 1, 2): graphs obtained from 2K2, T_{1,3,3},
/// T_{2,2,3} or 2K4 by deleting `k` edges without leaving a T_{1,1,3}.
/// One representative per isomorphism class, in canonical order.
pub fn f_family(k: usize) -> Result<Vec<Multigraph>> {
    if !(1..=2).contains(&k) {
        return Err(Error::InvalidParameter("the F family is defined for k = 1 or 2"));
    }
    let sources = [NamedPattern::AK2(2), NamedPattern::T(1, 3, 3), NamedPattern::T(2, 2, 3), NamedPattern::DoubleK4];
    let mut forms = Vec::new();
    for src in sources {
        let g = make_named(&src);
        let m = g.multiplicity_matrix();
        let n = m.len();
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        // distribute k deletions over pairs as a multiset
        let mut counts = vec![0usize; pairs.len()];
        fn spread(
            idx: usize,
            left: usize,
            pairs: &[(usize, usize)],
            m: &[Vec<usize>],
            counts: &mut Vec<usize>,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if idx == pairs.len() {
                if left == 0 {
                    let mut mm = m.to_vec();
                    for (p, &(i, j)) in pairs.iter().enumerate() {
                        mm[i][j] -= counts[p];
                        mm[j][i] -= counts[p];
                    }
                    out.push(mm);
                }
                return;
            }
            let (i, j) = pairs[idx];
            for c in 0..=left.min(m[i][j]) {
                counts[idx] = c;
                spread(idx + 1, left - c, pairs, m, counts, out);
            }
            counts[idx] = 0;
        }
        let mut results = Vec::new();
        spread(0, k, &pairs, &m, &mut counts, &mut results);
        for mm in results {
            let h = Multigraph::from_matrix(&mm);
            if !contains_t113(&h) {
                let form = canonical_form(&h);
                if !forms.contains(&form) {
                    forms.push(form);
                }
            }
        }
    }
    forms.sort();
    Ok(forms.iter().map(|f| f.to_graph()).collect())
}

/// Membership in `F_k` by generation from the four sources.
pub fn f_family_member(g: &Multigraph, k: usize) -> Result<bool> {
    Ok(f_family(k)?.iter().any(|h| isomorphic(g, h).is_some()))
}

/// Why a graph fails to be S5-contractible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContractibilityWitness {
    NegativeWeight { partition: VertexPartition, weight: i64 },
    QuotientInN5 { partition: VertexPartition, member: N5Member },
}

impl ContractibilityWitness {
    pub fn partition(&self) -> &VertexPartition {
        match self {
            ContractibilityWitness::NegativeWeight { partition, .. } => partition,
            ContractibilityWitness::QuotientInN5 { partition, .. } => partition,
        }
    }
}

/// Verdict of [`is_s5_contractible`]; `witness` is `None` exactly when the
/// graph is contractible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contractibility {
    pub witness: Option<ContractibilityWitness>,
}

impl Contractibility {
    pub fn is_contractible(&self) -> bool {
        self.witness.is_none()
    }
}

/// S5-contractibility straight from the definition: no partition with at
/// least two parts may have negative weight or a quotient in N5. Every
/// partition is examined, including those with disconnected parts; the
/// witness is the first failing partition in restricted-growth order.
pub fn is_s5_contractible(g: &Multigraph) -> Result<Contractibility> {
    g.check_set_capacity()?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { count: n, min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut witness = None;
    for_each_partition(n, n, |labels, t| {
        if t < 2 {
            return true;
        }
        let cross = edges.iter().filter(|&&(a, b)| labels[a] != labels[b]).count();
        let weight = 2 * cross as i64 - 10 * t as i64 + 16;
        if weight < 0 {
            let partition = VertexPartition::from_labels(labels).expect("rgs labels form a partition");
            witness = Some(ContractibilityWitness::NegativeWeight { partition, weight });
            return false;
        }
        let plausible = matches!((t, cross), (2, 2) | (2, 3) | (3, 7) | (4, 12));
        if plausible {
            let (q, _) = g.quotient_by_labels(labels, t);
            if let Some(member) = n5_member(&q) {
                let partition = VertexPartition::from_labels(labels).expect("rgs labels form a partition");
                witness = Some(ContractibilityWitness::QuotientInN5 { partition, member });
                return false;
            }
        }
        true
    });
    Ok(Contractibility { witness })
}

/// The closed-form characterization of S5-contractible graphs on at most four
/// vertices:
/// * two vertices: at least 4 edges;
/// * three vertices: at least 8 edges and minimum degree at least 4;
/// * four vertices: some spanning subgraph has at least 12 edges, minimum
///   degree at least 4, multiplicity at most 4, and is neither W1 nor W2.
///
/// Graphs on fewer than two vertices are never contractible.
pub fn small_contractible_closed_form(g: &Multigraph) -> Result<bool> {
    let n = g.vertex_count();
    match n {
        0 | 1 => Ok(false),
        2 => Ok(g.edge_count() >= 4),
        3 => Ok(g.edge_count() >= 8 && g.min_degree() >= 4),
        4 => Ok(has_good_spanning_subgraph(g)),
        _ => Err(Error::TooManyVertices { count: n, max: 4 }),
    }
}

fn has_good_spanning_subgraph(g: &Multigraph) -> bool {
    let m = g.multiplicity_matrix();
    let pairs: Vec<(usize, usize)> = (1..4).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let w1 = make_named(&NamedPattern::W1);
    let w2 = make_named(&NamedPattern::W2);
    let mut sub = vec![vec![0usize; 4]; 4];
    fn go(
        idx: usize,
        pairs: &[(usize, usize)],
        m: &[Vec<usize>],
        sub: &mut Vec<Vec<usize>>,
        accept: &dyn Fn(&[Vec<usize>]) -> bool,
    ) -> bool {
        if idx == pairs.len() {
            return accept(sub);
        }
        let (i, j) = pairs[idx];
        for c in (0..=m[i][j].min(4)).rev() {
            sub[i][j] = c;
            sub[j][i] = c;
            if go(idx + 1, pairs, m, sub, accept) {
                return true;
            }
        }
        false
    }
    let accept = |s: &[Vec<usize>]| {
        let e: usize = (0..4).map(|i| s[i].iter().sum::<usize>()).sum::<usize>() / 2;
        let delta = (0..4).map(|i| s[i].iter().sum::<usize>()).min().unwrap_or(0);
        if e < 12 || delta < 4 {
            return false;
        }
        let h = Multigraph::from_matrix(s);
        isomorphic(&h, &w1).is_none() && isomorphic(&h, &w2).is_none()
    };
    go(0, &pairs, &m, &mut sub, &accept)
}
