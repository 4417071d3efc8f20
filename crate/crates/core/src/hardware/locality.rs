use std::collections::VecDeque;
use std::fmt;

use crate::circuit::InteractionGraph;
use crate::error::{Error, Result};

use super::graph::HardwareGraph;
use super::placement::QubitMapping;

/// Distance value for vertices that cannot be reached.
pub const UNREACHABLE: u32 = u32::MAX;

/// Breadth-first hop counts from `source`; unreachable vertices get [`UNREACHABLE`].
pub fn shortest_distances(hw: &HardwareGraph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; hw.num_vertices()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &v in hw.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Distance table for every source vertex.
pub fn all_distances(hw: &HardwareGraph) -> Vec<Vec<u32>> {
    (0..hw.num_vertices())
        .map(|s| shortest_distances(hw, s))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeDistance {
    pub addr: usize,
    pub data: usize,
    /// `None` when the two physical qubits are in different components.
    pub distance: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalityReport {
    pub per_edge: Vec<EdgeDistance>,
    /// Largest distance over connected CNOT pairs; 0 when there are none.
    pub max_distance: u32,
    /// `max_distance - 1` SWAPs for the worst CNOT.
    pub swap_overhead: u32,
    pub nonlocal_cnot_count: usize,
    /// CNOT pairs `(addr, data)` whose endpoints are disconnected.
    pub infeasible: Vec<(usize, usize)>,
}

impl LocalityReport {
    pub fn is_feasible(&self) -> bool {
        self.infeasible.is_empty()
    }

    /// Errors on the first CNOT whose endpoints are disconnected.
    pub fn ensure_feasible(&self) -> Result<()> {
        match self.infeasible.first() {
            None => Ok(()),
            Some((k, j)) => Err(Error::Infeasible(format!(
                "x{k} and d{j} are placed in disconnected components"
            ))),
        }
    }
}

/// Hardware distance of every logical CNOT under `map`.
pub fn locality_report(
    graph: &InteractionGraph,
    hw: &HardwareGraph,
    map: &QubitMapping,
) -> Result<LocalityReport> {
    map.validate(graph.n_addr(), graph.n_data(), hw.num_vertices())?;
    let mut per_edge = Vec::with_capacity(graph.edges().len());
    let mut cache: Vec<Option<Vec<u32>>> = vec![None; graph.n_addr()];
    for &(k, j) in graph.edges() {
        let dist = cache[k].get_or_insert_with(|| shortest_distances(hw, map.addr(k)));
        let d = dist[map.data(j)];
        per_edge.push(EdgeDistance {
            addr: k,
            data: j,
            distance: (d != UNREACHABLE).then_some(d),
        });
    }
    let max_distance = per_edge
        .iter()
        .filter_map(|e| e.distance)
        .max()
        .unwrap_or(0);
    let nonlocal_cnot_count = per_edge
        .iter()
        .filter(|e| e.distance.is_some_and(|d| d > 1))
        .count();
    let infeasible = per_edge
        .iter()
        .filter(|e| e.distance.is_none())
        .map(|e| (e.addr, e.data))
        .collect();
    Ok(LocalityReport {
        per_edge,
        max_distance,
        swap_overhead: max_distance.saturating_sub(1),
        nonlocal_cnot_count,
        infeasible,
    })
}

impl fmt::Display for LocalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cnots: {}", self.per_edge.len())?;
        writeln!(f, "max_distance: {}", self.max_distance)?;
        writeln!(f, "swap_overhead_per_worst_cnot: {}", self.swap_overhead)?;
        writeln!(f, "nonlocal_cnots: {}", self.nonlocal_cnot_count)?;
        write!(f, "infeasible_cnots: {}", self.infeasible.len())?;
        for (k, j) in &self.infeasible {
            write!(f, "\ninfeasible: x{k} d{j} (disconnected)")?;
        }
        Ok(())
    }
}
