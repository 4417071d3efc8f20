use crate::circuit::InteractionGraph;
use crate::error::{Error, Result};

use super::graph::HardwareGraph;
use super::locality::{all_distances, UNREACHABLE};

/// Physical vertex of every logical qubit: address qubits first, then data qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QubitMapping {
    n_addr: usize,
    logical_to_physical: Vec<usize>,
}

impl QubitMapping {
    pub fn new(n_addr: usize, logical_to_physical: Vec<usize>) -> Self {
        Self {
            n_addr,
            logical_to_physical,
        }
    }

    pub fn addr(&self, k: usize) -> usize {
        self.logical_to_physical[k]
    }

    pub fn data(&self, j: usize) -> usize {
        self.logical_to_physical[self.n_addr + j]
    }

    pub fn logical_to_physical(&self) -> &[usize] {
        &self.logical_to_physical
    }

    /// Checks size, range and injectivity.
    pub fn validate(&self, n_addr: usize, n_data: usize, num_vertices: usize) -> Result<()> {
        if self.n_addr != n_addr || self.logical_to_physical.len() != n_addr + n_data {
            return Err(Error::DimensionMismatch {
                context: "qubit mapping",
                expected: n_addr + n_data,
                found: self.logical_to_physical.len(),
            });
        }
        let mut used = vec![false; num_vertices];
        for (q, &p) in self.logical_to_physical.iter().enumerate() {
            if p >= num_vertices {
                return Err(Error::InvalidConfig(format!(
                    "logical qubit {q} mapped to vertex {p}, hardware has {num_vertices}"
                )));
            }
            if std::mem::replace(&mut used[p], true) {
                return Err(Error::InvalidConfig(format!(
                    "vertex {p} holds two logical qubits"
                )));
            }
        }
        Ok(())
    }
}

/// Greedy degree-ordered placement of the interaction graph onto hardware.
///
/// Logical qubits are taken by decreasing degree (ties: address register first,
/// then lower index). The first one goes to the vertex of highest hardware degree
/// (lowest id on ties, so vertex 0 on regular hardware). Each later qubit takes the
/// free vertex that, in order of priority,
///
/// 1. is adjacent to the most already-placed logical neighbors,
/// 2. has the smallest total distance to the placed logical neighbors,
/// 3. is adjacent to the fewest placed qubits it does not interact with,
/// 4. has the lowest id.
pub fn greedy_place(graph: &InteractionGraph, hw: &HardwareGraph) -> Result<QubitMapping> {
    let (n, m) = (graph.n_addr(), graph.n_data());
    let total = n + m;
    let v = hw.num_vertices();
    if v < total {
        return Err(Error::Infeasible(format!(
            "hardware has {v} vertices, {total} logical qubits need placing"
        )));
    }

    let mut neighbors = vec![Vec::new(); total];
    for &(k, j) in graph.edges() {
        neighbors[k].push(n + j);
        neighbors[n + j].push(k);
    }
    let mut order: Vec<usize> = (0..total).collect();
    order.sort_by_key(|&q| std::cmp::Reverse(neighbors[q].len()));

    let dist = all_distances(hw);
    let mut placed: Vec<Option<usize>> = vec![None; total];
    let mut occupant: Vec<Option<usize>> = vec![None; v];
    let mut is_neighbor = vec![false; total];

    for (step, &q) in order.iter().enumerate() {
        let vertex = if step == 0 {
            (0..v)
                .max_by_key(|&u| (hw.neighbors(u).len(), std::cmp::Reverse(u)))
                .expect("hardware is non-empty")
        } else {
            for &r in &neighbors[q] {
                is_neighbor[r] = true;
            }
            let placed_neighbors: Vec<usize> =
                neighbors[q].iter().filter_map(|&r| placed[r]).collect();
            let best = (0..v)
                .filter(|&u| occupant[u].is_none())
                .min_by_key(|&u| {
                    let mut adjacent = 0usize;
                    let mut strangers = 0usize;
                    for &w in hw.neighbors(u) {
                        if let Some(r) = occupant[w] {
                            if is_neighbor[r] {
                                adjacent += 1;
                            } else {
                                strangers += 1;
                            }
                        }
                    }
                    let distance: u64 = placed_neighbors
                        .iter()
                        .map(|&p| match dist[u][p] {
                            UNREACHABLE => v as u64,
                            d => u64::from(d),
                        })
                        .sum();
                    (std::cmp::Reverse(adjacent), distance, strangers, u)
                })
                .expect("enough free vertices");
            for &r in &neighbors[q] {
                is_neighbor[r] = false;
            }
            best
        };
        placed[q] = Some(vertex);
        occupant[vertex] = Some(q);
    }

    Ok(QubitMapping::new(
        n,
        placed.into_iter().map(|p| p.expect("all placed")).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::interaction_graph;
    use crate::f2::{AffineMap, BitMatrix};
    use crate::hardware::graph::random_k_regular;
    use crate::hardware::locality::locality_report;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn k22_on_c4_is_optimal() {
        let graph = interaction_graph(&AffineMap::linear(BitMatrix::ones(2, 2)));
        let hw = HardwareGraph::cycle(4).unwrap();
        let optimum = permutations(4)
            .into_iter()
            .map(|p| {
                locality_report(&graph, &hw, &QubitMapping::new(2, p))
                    .unwrap()
                    .max_distance
            })
            .min()
            .unwrap();
        assert_eq!(optimum, 1);
        let map = greedy_place(&graph, &hw).unwrap();
        let r = locality_report(&graph, &hw, &map).unwrap();
        assert_eq!(r.max_distance, 1);
        assert!(r.per_edge.iter().all(|e| e.distance == Some(1)));
    }

    #[test]
    fn complete_hardware_is_always_local() {
        for seed in 0..10 {
            let spec = AffineMap::random(6, 6, 0.6, seed).unwrap();
            let graph = interaction_graph(&spec);
            let hw = HardwareGraph::complete(12);
            let map = greedy_place(&graph, &hw).unwrap();
            map.validate(6, 6, 12).unwrap();
            assert_eq!(locality_report(&graph, &hw, &map).unwrap().max_distance, 1);
        }
    }

    #[test]
    fn single_edge_lands_adjacent() {
        let graph = InteractionGraph::new(3, 3, vec![(2, 1)]);
        for seed in 0..10 {
            let hw = random_k_regular(6, 3, seed, 10_000).unwrap();
            let map = greedy_place(&graph, &hw).unwrap();
            assert!(hw.are_adjacent(map.addr(2), map.data(1)));
            assert_eq!(map.addr(2), 0);
        }
    }

    #[test]
    fn mapping_is_injective_and_deterministic() {
        for seed in 0..20 {
            let spec = AffineMap::random(10, 10, 0.3, seed).unwrap();
            let graph = interaction_graph(&spec);
            let hw = random_k_regular(24, 4, seed, 10_000).unwrap();
            let a = greedy_place(&graph, &hw).unwrap();
            a.validate(10, 10, 24).unwrap();
            assert_eq!(a, greedy_place(&graph, &hw).unwrap());
        }
    }

    #[test]
    fn too_small_hardware() {
        let graph = interaction_graph(&AffineMap::identity(3));
        let hw = HardwareGraph::complete(5);
        assert!(matches!(
            greedy_place(&graph, &hw),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn validate_rejects_collisions() {
        let m = QubitMapping::new(1, vec![2, 2]);
        assert!(m.validate(1, 1, 4).is_err());
        let m = QubitMapping::new(1, vec![0, 9]);
        assert!(m.validate(1, 1, 4).is_err());
    }
}
