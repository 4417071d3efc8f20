//! Hardware connectivity model: random regular graphs, placement and SWAP distances.

mod graph;
mod locality;
mod placement;

pub use graph::{random_k_regular, HardwareGraph, DEFAULT_MAX_RETRIES};
pub use locality::{
    all_distances, locality_report, shortest_distances, EdgeDistance, LocalityReport, UNREACHABLE,
};
pub use placement::{greedy_place, QubitMapping};
