//! Matrix rank against circuit depth: the two are not tied together.
//!
//! Run with `cargo run --release --example rank_scatter`.

use stabqram::experiments::{rank_vs_depth_scatter, ExperimentConfig, ExperimentKind};

fn main() -> stabqram::Result<()> {
    let config = ExperimentConfig::new(ExperimentKind::RankVsDepth).with_trials(500);
    let data = rank_vs_depth_scatter(&config)?;
    for w in &data.points[..2] {
        println!("witness {}: rank {} depth {}", w.trial, w.rank, w.depth);
    }
    println!(
        "{} points, {} distinct ranks, {} distinct depths, pearson r = {:?}",
        data.points.len(),
        data.distinct_ranks,
        data.distinct_depths,
        data.pearson_r
    );
    Ok(())
}
