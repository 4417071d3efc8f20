use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::f2::rng;

pub const DEFAULT_MAX_RETRIES: usize = 10_000;

/// A simple undirected graph in which every vertex has exactly `k` neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HardwareGraph {
    k: usize,
    adjacency: Vec<Vec<usize>>,
}

impl HardwareGraph {
    /// Builds a graph from an edge list, checking simplicity and regularity.
    pub fn from_edges(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); num_vertices];
        for &(u, v) in edges {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::InvalidConfig(format!(
                    "edge ({u}, {v}) out of range for {num_vertices} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidConfig(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidConfig(format!("repeated edge at vertex {u}")));
            }
        }
        let k = adjacency.first().map_or(0, Vec::len);
        if let Some(u) = adjacency.iter().position(|l| l.len() != k) {
            return Err(Error::InvalidConfig(format!(
                "vertex {u} has degree {}, expected {k}",
                adjacency[u].len()
            )));
        }
        Ok(Self { k, adjacency })
    }

    pub fn complete(num_vertices: usize) -> Self {
        let adjacency = (0..num_vertices)
            .map(|u| (0..num_vertices).filter(|&v| v != u).collect())
            .collect();
        Self {
            k: num_vertices.saturating_sub(1),
            adjacency,
        }
    }

    /// The cycle `0 - 1 - ... - (v-1) - 0`; needs `v >= 3`.
    pub fn cycle(num_vertices: usize) -> Result<Self> {
        if num_vertices < 3 {
            return Err(Error::Infeasible(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        let edges: Vec<_> = (0..num_vertices)
            .map(|u| (u, (u + 1) % num_vertices))
            .collect();
        Self::from_edges(num_vertices, &edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// Uniform degree, no self-loops, no repeated edges, symmetric adjacency.
    pub fn is_simple_regular(&self) -> bool {
        self.adjacency.iter().enumerate().all(|(u, l)| {
            l.len() == self.k
                && l.windows(2).all(|w| w[0] < w[1])
                && l.iter().all(|&v| v != u && self.are_adjacent(v, u))
        })
    }

    fn complement(&self) -> Self {
        let v = self.num_vertices();
        let adjacency = (0..v)
            .map(|u| {
                (0..v)
                    .filter(|&w| w != u && !self.are_adjacent(u, w))
                    .collect()
            })
            .collect();
        Self {
            k: v - 1 - self.k,
            adjacency,
        }
    }

    /// Text edge list: a `# k-regular v=<V> k=<k> seed=<seed>` header, then one `u v` per line.
    pub fn to_edge_list(&self, seed: u64) -> String {
        let mut out = format!(
            "# k-regular v={} k={} seed={seed}\n",
            self.num_vertices(),
            self.k
        );
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut num_vertices = None;
        let mut edges = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(header) = line.strip_prefix('#') {
                for field in header.split_whitespace() {
                    if let Some(v) = field.strip_prefix("v=") {
                        num_vertices = Some(v.parse::<usize>().map_err(|_| Error::Parse {
                            line: i + 1,
                            message: format!("bad vertex count {v:?}"),
                        })?);
                    }
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace().map(str::parse::<usize>);
            match (parts.next(), parts.next(), parts.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
                _ => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("expected \"u v\", got {line:?}"),
                    })
                }
            }
        }
        let num_vertices = num_vertices
            .unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
        Self::from_edges(num_vertices, &edges)
    }
}

/// Random simple `k`-regular graph on `v` vertices from the pairing model.
///
/// Each vertex gets `k` stubs. The stubs are shuffled and paired; pairs that would
/// form a self-loop or repeat an edge go back into the pool, which is reshuffled
/// until it is empty. A pool with no remaining valid pair aborts the attempt and a
/// fresh one starts, up to `max_retries` attempts. For `k > (v - 1) / 2` the
/// complement of a `(v - 1 - k)`-regular graph is generated instead, which keeps
/// dense targets (up to the complete graph) cheap. Deterministic in `(v, k, seed)`.
pub fn random_k_regular(
    v: usize,
    k: usize,
    seed: u64,
    max_retries: usize,
) -> Result<HardwareGraph> {
    if k == 0 || k >= v {
        return Err(Error::Infeasible(format!(
            "degree k={k} must satisfy 1 <= k < v={v}"
        )));
    }
    if (v * k) % 2 == 1 {
        return Err(Error::Infeasible(format!(
            "v*k = {v}*{k} is odd, no {k}-regular graph on {v} vertices"
        )));
    }
    let complement_degree = v - 1 - k;
    if complement_degree < k {
        let sparse = pairing_model(v, complement_degree, seed, max_retries)?;
        return Ok(sparse.complement());
    }
    pairing_model(v, k, seed, max_retries)
}

fn pairing_model(v: usize, k: usize, seed: u64, max_retries: usize) -> Result<HardwareGraph> {
    let mut stream = rng::stream(seed);
    for _ in 0..max_retries.max(1) {
        if let Some(edges) = try_pairing(v, k, &mut stream) {
            return HardwareGraph::from_edges(v, &edges);
        }
    }
    Err(Error::GenerationFailed {
        attempts: max_retries.max(1),
    })
}

fn try_pairing(v: usize, k: usize, stream: &mut rng::Stream) -> Option<Vec<(usize, usize)>> {
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(v * k / 2);
    let mut present: HashSet<(usize, usize)> = HashSet::with_capacity(v * k / 2);
    let mut stubs: Vec<usize> = (0..v).flat_map(|u| std::iter::repeat_n(u, k)).collect();

    while !stubs.is_empty() {
        stubs.shuffle(stream);
        let mut leftover: BTreeMap<usize, usize> = BTreeMap::new();
        for pair in stubs.chunks_exact(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a != b && present.insert((a, b)) {
                edges.push((a, b));
            } else {
                *leftover.entry(a).or_default() += 1;
                *leftover.entry(b).or_default() += 1;
            }
        }
        if !leftover.is_empty() && !has_valid_pair(&leftover, &present) {
            return None;
        }
        stubs = leftover
            .into_iter()
            .flat_map(|(u, c)| std::iter::repeat_n(u, c))
            .collect();
    }
    Some(edges)
}

fn has_valid_pair(leftover: &BTreeMap<usize, usize>, present: &HashSet<(usize, usize)>) -> bool {
    let nodes: Vec<usize> = leftover.keys().copied().collect();
    nodes
        .iter()
        .enumerate()
        .any(|(i, &a)| nodes[i + 1..].iter().any(|&b| !present.contains(&(a, b))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_the_only_cubic_graph_on_four_vertices() {
        for seed in 0..10 {
            let g = random_k_regular(4, 3, seed, DEFAULT_MAX_RETRIES).unwrap();
            assert_eq!(g, HardwareGraph::complete(4));
        }
    }

    #[test]
    fn infeasible_parameters() {
        assert!(matches!(
            random_k_regular(3, 1, 0, 10),
            Err(Error::Infeasible(_))
        ));
        assert!(matches!(
            random_k_regular(5, 5, 0, 10),
            Err(Error::Infeasible(_))
        ));
        assert!(matches!(
            random_k_regular(5, 0, 0, 10),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn sweep_is_simple_and_regular() {
        for seed in 0..100 {
            let g = random_k_regular(50, 4, seed, DEFAULT_MAX_RETRIES).unwrap();
            assert!(g.is_simple_regular());
            assert_eq!(g.degree(), 4);
            assert_eq!(g.edges().len(), 100);
        }
        for k in 1..24 {
            let g = random_k_regular(24, k, 3, DEFAULT_MAX_RETRIES).unwrap();
            assert!(g.is_simple_regular(), "k={k}");
            assert_eq!(g.degree(), k);
        }
        assert_eq!(
            random_k_regular(24, 23, 0, 1).unwrap(),
            HardwareGraph::complete(24)
        );
    }

    #[test]
    fn deterministic_in_seed() {
        let a = random_k_regular(30, 5, 9, DEFAULT_MAX_RETRIES).unwrap();
        let b = random_k_regular(30, 5, 9, DEFAULT_MAX_RETRIES).unwrap();
        let c = random_k_regular(30, 5, 10, DEFAULT_MAX_RETRIES).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = random_k_regular(12, 3, 1, DEFAULT_MAX_RETRIES).unwrap();
        let text = g.to_edge_list(1);
        assert!(text.starts_with("# k-regular v=12 k=3 seed=1\n"));
        assert_eq!(HardwareGraph::parse_edge_list(&text).unwrap(), g);
        assert!(HardwareGraph::parse_edge_list("0 1\n1 x\n").is_err());
        assert!(HardwareGraph::from_edges(3, &[(0, 1), (1, 2)]).is_err());
        assert!(HardwareGraph::from_edges(2, &[(0, 1), (0, 1)]).is_err());
    }

    #[test]
    fn cycles() {
        let c = HardwareGraph::cycle(6).unwrap();
        assert_eq!(c.degree(), 2);
        assert!(c.are_adjacent(0, 5) && !c.are_adjacent(0, 3));
    }
}
