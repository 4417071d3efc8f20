//! Mean CNOT count against the expectation `m n p`, written as CSV.
//!
//! Run with `cargo run --release --example cnot_count`.

use stabqram::experiments::{render_csv, run, ExperimentConfig, ExperimentKind};

fn main() -> stabqram::Result<()> {
    for kind in [ExperimentKind::CnotVsDensity, ExperimentKind::CnotVsSize] {
        let config = ExperimentConfig::new(kind).with_trials(100).with_seed(1);
        print!("{}", render_csv(&config, &run(&config)?)?);
        println!();
    }
    Ok(())
}
