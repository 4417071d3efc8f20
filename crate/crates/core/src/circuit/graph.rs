use crate::f2::AffineMap;

use super::gate::Gate;

/// The bipartite graph with one edge `(k, j)` per nonzero `A[j][k]`.
///
/// Edges are kept in row-major order of `A` (by data index, then address index),
/// which is also the order the scheduler colors them in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteractionGraph {
    n_addr: usize,
    n_data: usize,
    edges: Vec<(usize, usize)>,
}

impl InteractionGraph {
    pub fn new(n_addr: usize, n_data: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(k, j)| k < n_addr && j < n_data));
        Self {
            n_addr,
            n_data,
            edges,
        }
    }

    pub fn from_spec(spec: &AffineMap) -> Self {
        let edges = spec.matrix().iter_ones().map(|(j, k)| (k, j)).collect();
        Self::new(spec.input_len(), spec.output_len(), edges)
    }

    pub fn n_addr(&self) -> usize {
        self.n_addr
    }

    pub fn n_data(&self) -> usize {
        self.n_data
    }

    /// `(address, data)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn addr_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n_addr];
        for &(k, _) in &self.edges {
            d[k] += 1;
        }
        d
    }

    pub fn data_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n_data];
        for &(_, j) in &self.edges {
            d[j] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.addr_degrees()
            .into_iter()
            .chain(self.data_degrees())
            .max()
            .unwrap_or(0)
    }
}

pub fn interaction_graph(spec: &AffineMap) -> InteractionGraph {
    InteractionGraph::from_spec(spec)
}

/// Largest row or column weight of `A`.
pub fn max_degree(spec: &AffineMap) -> usize {
    let a = spec.matrix();
    let rows = a.row_weights().into_iter().max().unwrap_or(0);
    let cols = a.column_weights().into_iter().max().unwrap_or(0);
    rows.max(cols)
}

/// One CNOT per nonzero entry of `A` (row-major), then one X per nonzero entry of `b`.
pub fn build_gates(spec: &AffineMap) -> Vec<Gate> {
    spec.matrix()
        .iter_ones()
        .map(|(j, k)| Gate::cnot(k, j))
        .chain(spec.offset().iter_ones().map(Gate::x))
        .collect()
}
