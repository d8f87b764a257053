use alloc::vec;
use alloc::vec::Vec;

use super::iso::{is_canonical_matrix, upper_vector};
use super::Multigraph;
use crate::{Error, Result};

/// Largest vertex count accepted by [`enumerate_class`].
pub const MAX_ENUMERATION_VERTICES: usize = 5;

/// Bounds describing a class of small multigraphs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassBounds {
    pub min_edges: usize,
    pub max_edges: Option<usize>,
    pub max_multiplicity: Option<usize>,
    pub min_degree: usize,
    pub connected: bool,
}

impl ClassBounds {
    pub fn edges(mut self, min: usize, max: usize) -> Self {
        self.min_edges = min;
        self.max_edges = Some(max);
        self
    }

    pub fn max_multiplicity(mut self, mu: usize) -> Self {
        self.max_multiplicity = Some(mu);
        self
    }

    pub fn min_degree(mut self, delta: usize) -> Self {
        self.min_degree = delta;
        self
    }

    pub fn connected(mut self, yes: bool) -> Self {
        self.connected = yes;
        self
    }
}

/// One canonical representative of every isomorphism class of multigraphs on
/// `n` vertices within `bounds`, sorted by edge count and then by canonical
/// multiplicity vector.
pub fn enumerate_class(n: usize, bounds: ClassBounds) -> Result<Vec<Multigraph>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooManyVertices { count: n, max: MAX_ENUMERATION_VERTICES });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let (cap, max_edges) = match (bounds.max_multiplicity, bounds.max_edges) {
        (Some(mu), Some(e)) => (mu.min(e), e),
        (Some(mu), None) => (mu, mu * pairs),
        (None, Some(e)) => (e, e),
        (None, None) => return Err(Error::InvalidParameter("class is infinite without edge or multiplicity bounds")),
    };
    let mut found: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut matrix = vec![vec![0usize; n]; n];
    let order: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();

    fn fill(
        idx: usize,
        sum: usize,
        order: &[(usize, usize)],
        cap: usize,
        max_edges: usize,
        bounds: &ClassBounds,
        matrix: &mut Vec<Vec<usize>>,
        found: &mut Vec<(usize, Vec<usize>)>,
    ) {
        if idx == order.len() {
            if sum < bounds.min_edges {
                return;
            }
            let n = matrix.len();
            if n > 0 {
                let delta = (0..n).map(|v| matrix[v].iter().sum::<usize>()).min().unwrap_or(0);
                if delta < bounds.min_degree {
                    return;
                }
            }
            if !is_canonical_matrix(matrix) {
                return;
            }
            if bounds.connected && !Multigraph::from_matrix(matrix).is_connected() {
                return;
            }
            found.push((sum, upper_vector(matrix)));
            return;
        }
        let (i, j) = order[idx];
        for mult in 0..=cap {
            if sum + mult > max_edges {
                break;
            }
            matrix[i][j] = mult;
            matrix[j][i] = mult;
            fill(idx + 1, sum + mult, order, cap, max_edges, bounds, matrix, found);
        }
        matrix[i][j] = 0;
        matrix[j][i] = 0;
    }

    fill(0, 0, &order, cap, max_edges, &bounds, &mut matrix, &mut found);
    found.sort();
    Ok(found.into_iter().map(|(_, v)| from_vector(n, &v)).collect())
}

fn from_vector(n: usize, v: &[usize]) -> Multigraph {
    super::iso::CanonicalForm { vertex_count: n, multiplicities: v.to_vec() }.to_graph()
}
