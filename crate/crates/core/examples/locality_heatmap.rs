//! Mean worst-case CNOT distance over a density x connectivity grid.
//!
//! Run with `cargo run --release --example locality_heatmap`.

use stabqram::experiments::{locality_vs_density, ExperimentConfig, ExperimentKind};

fn main() -> stabqram::Result<()> {
    let config = ExperimentConfig {
        n: 12,
        k_grid: vec![3, 4, 6, 8, 12, 23],
        ..ExperimentConfig::new(ExperimentKind::LocalityVsDensity).with_trials(20)
    };
    let cells = locality_vs_density(&config)?;
    print!("p \\ k");
    for k in &config.k_grid {
        print!("{k:>7}");
    }
    println!();
    for row in cells.chunks(config.k_grid.len()) {
        print!("{:<5}", row[0].p);
        for cell in row {
            match cell.stats {
                Some(s) => print!("{:>7.2}", s.mean),
                None => print!("{:>7}", "--"),
            }
        }
        println!();
    }
    Ok(())
}
