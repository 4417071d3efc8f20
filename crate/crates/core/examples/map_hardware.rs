//! Place an oracle on random k-regular hardware and report SWAP overhead.
//!
//! Run with `cargo run --example map_hardware`.

use stabqram::circuit::InteractionGraph;
use stabqram::f2::AffineMap;
use stabqram::hardware::{greedy_place, locality_report, random_k_regular, DEFAULT_MAX_RETRIES};

fn main() -> stabqram::Result<()> {
    let spec = AffineMap::random(10, 10, 0.3, 4)?;
    let graph = InteractionGraph::from_spec(&spec);
    println!(
        "interaction graph: {} edges, max degree {}",
        graph.edges().len(),
        graph.max_degree()
    );

    for k in [3, 4, 6, 10, 19] {
        let hw = random_k_regular(20, k, 7, DEFAULT_MAX_RETRIES)?;
        let map = greedy_place(&graph, &hw)?;
        let report = locality_report(&graph, &hw, &map)?;
        println!(
            "k={k:>2}: max distance {}, {} SWAPs for the worst CNOT, {} non-local CNOTs",
            report.max_distance, report.swap_overhead, report.nonlocal_cnot_count
        );
    }
    Ok(())
}
