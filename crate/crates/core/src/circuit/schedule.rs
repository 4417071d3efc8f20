use crate::error::{Error, Result};
use crate::f2::AffineMap;

use super::gate::Gate;
use super::graph::InteractionGraph;

const FREE: usize = usize::MAX;

/// Proper edge coloring of a bipartite graph with exactly `max_degree` colors.
///
/// Edges are `(left, right)` pairs and are colored in the given order. Each edge
/// takes the smallest color free at its left endpoint; if that color is busy at the
/// right endpoint, the alternating path of that color and the smallest color free
/// on the right is flipped first. In a bipartite graph this path can never return
/// to the left endpoint, so afterwards the color is free at both ends.
///
/// Returns one color per edge, each in `0..max_degree`.
pub fn color_bipartite_edges(
    n_left: usize,
    n_right: usize,
    edges: &[(usize, usize)],
) -> Vec<usize> {
    let mut left_deg = vec![0usize; n_left];
    let mut right_deg = vec![0usize; n_right];
    for &(u, v) in edges {
        left_deg[u] += 1;
        right_deg[v] += 1;
    }
    let delta = left_deg
        .iter()
        .chain(&right_deg)
        .copied()
        .max()
        .unwrap_or(0);

    // at_left[u * delta + c] = edge index colored c at u, or FREE
    let mut at_left = vec![FREE; n_left * delta];
    let mut at_right = vec![FREE; n_right * delta];
    let mut colors = vec![FREE; edges.len()];
    let mut path = Vec::new();

    for (e, &(u, v)) in edges.iter().enumerate() {
        let alpha = (0..delta)
            .find(|&c| at_left[u * delta + c] == FREE)
            .expect("left vertex has a free color");
        if at_right[v * delta + alpha] != FREE {
            let beta = (0..delta)
                .find(|&c| at_right[v * delta + c] == FREE)
                .expect("right vertex has a free color");

            // Walk v -alpha- w -beta- v' -alpha- ...
            path.clear();
            let mut on_right = true;
            let mut vertex = v;
            let mut color = alpha;
            loop {
                let slot = if on_right {
                    at_right[vertex * delta + color]
                } else {
                    at_left[vertex * delta + color]
                };
                if slot == FREE {
                    break;
                }
                path.push(slot);
                let (a, b) = edges[slot];
                vertex = if on_right { a } else { b };
                on_right = !on_right;
                color = if color == alpha { beta } else { alpha };
            }
            debug_assert!(path.iter().all(|&p| edges[p].0 != u));

            for &p in &path {
                let (a, b) = edges[p];
                at_left[a * delta + colors[p]] = FREE;
                at_right[b * delta + colors[p]] = FREE;
            }
            for &p in &path {
                let (a, b) = edges[p];
                let swapped = if colors[p] == alpha { beta } else { alpha };
                colors[p] = swapped;
                at_left[a * delta + swapped] = p;
                at_right[b * delta + swapped] = p;
            }
        }
        colors[e] = alpha;
        at_left[u * delta + alpha] = e;
        at_right[v * delta + alpha] = e;
    }
    colors
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScheduleOptions {
    /// Move each X gate into the earliest CNOT layer where its data qubit is idle,
    /// instead of a dedicated trailing layer.
    pub merge_x: bool,
}

/// A layered oracle circuit over `n_addr` address and `n_data` data qubits.
///
/// No qubit appears twice in one layer. Layers containing CNOTs come first;
/// `depth()` is the number of layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScheduledCircuit {
    n_addr: usize,
    n_data: usize,
    layers: Vec<Vec<Gate>>,
    cnot_layer_count: usize,
}

impl ScheduledCircuit {
    /// Wraps explicit layers after checking indices and per-layer qubit disjointness.
    /// Empty layers are dropped.
    pub fn from_layers(n_addr: usize, n_data: usize, layers: Vec<Vec<Gate>>) -> Result<Self> {
        let mut addr_seen = vec![usize::MAX; n_addr];
        let mut data_seen = vec![usize::MAX; n_data];
        let layers: Vec<Vec<Gate>> = layers.into_iter().filter(|l| !l.is_empty()).collect();
        for (li, layer) in layers.iter().enumerate() {
            for gate in layer {
                let t = gate.target();
                if t >= n_data {
                    return Err(Error::InvalidCircuit(format!(
                        "layer {li}: target d{t} out of range for {n_data} data qubits"
                    )));
                }
                if data_seen[t] == li {
                    return Err(Error::InvalidCircuit(format!(
                        "layer {li}: data qubit d{t} used twice"
                    )));
                }
                data_seen[t] = li;
                if let Some(c) = gate.control() {
                    if c >= n_addr {
                        return Err(Error::InvalidCircuit(format!(
                            "layer {li}: control x{c} out of range for {n_addr} address qubits"
                        )));
                    }
                    if addr_seen[c] == li {
                        return Err(Error::InvalidCircuit(format!(
                            "layer {li}: address qubit x{c} used twice"
                        )));
                    }
                    addr_seen[c] = li;
                }
            }
        }
        let cnot_layer_count = layers
            .iter()
            .filter(|l| l.iter().any(Gate::is_cnot))
            .count();
        Ok(Self {
            n_addr,
            n_data,
            layers,
            cnot_layer_count,
        })
    }

    pub fn n_addr(&self) -> usize {
        self.n_addr
    }

    pub fn n_data(&self) -> usize {
        self.n_data
    }

    pub fn layers(&self) -> &[Vec<Gate>] {
        &self.layers
    }

    pub fn cnot_layer_count(&self) -> usize {
        self.cnot_layer_count
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn gates(&self) -> impl Iterator<Item = &Gate> {
        self.layers.iter().flatten()
    }

    pub fn cnot_count(&self) -> usize {
        self.gates().filter(|g| g.is_cnot()).count()
    }

    pub fn x_count(&self) -> usize {
        self.gates().filter(|g| !g.is_cnot()).count()
    }
}

/// Schedules the oracle for `spec` into `max_degree` CNOT layers plus one X layer when `b != 0`.
pub fn schedule(spec: &AffineMap) -> ScheduledCircuit {
    schedule_with(spec, ScheduleOptions::default())
}

pub fn schedule_with(spec: &AffineMap, options: ScheduleOptions) -> ScheduledCircuit {
    let graph = InteractionGraph::from_spec(spec);
    let edges = graph.edges();
    let colors = color_bipartite_edges(graph.n_addr(), graph.n_data(), edges);
    let n_colors = colors.iter().map(|&c| c + 1).max().unwrap_or(0);

    let mut layers: Vec<Vec<Gate>> = vec![Vec::new(); n_colors];
    for (&(k, j), &c) in edges.iter().zip(&colors) {
        layers[c].push(Gate::cnot(k, j));
    }
    for layer in &mut layers {
        layer.sort();
    }

    let mut trailing = Vec::new();
    for j in spec.offset().iter_ones() {
        let slot = options
            .merge_x
            .then(|| {
                layers
                    .iter()
                    .position(|l| l.iter().all(|g| g.target() != j))
            })
            .flatten();
        match slot {
            Some(li) => layers[li].push(Gate::x(j)),
            None => trailing.push(Gate::x(j)),
        }
    }
    if options.merge_x {
        for layer in &mut layers {
            layer.sort();
        }
    }
    layers.push(trailing);

    ScheduledCircuit::from_layers(spec.input_len(), spec.output_len(), layers)
        .expect("edge coloring yields valid layers")
}
