//! Scheduled depth against density and against register width.
//!
//! Run with `cargo run --release --example depth_scaling`.

use stabqram::experiments::{
    depth_vs_density, depth_vs_size, linear_fit, ExperimentConfig, ExperimentKind,
};

fn main() -> stabqram::Result<()> {
    let config = ExperimentConfig::new(ExperimentKind::DepthVsDensity).with_trials(50);
    println!("n = m = {}", config.n);
    for row in depth_vs_density(&config)? {
        println!(
            "  p={:<4} depth {:6.2} ± {:.2}  (max {})",
            row.p, row.depth.mean, row.depth.std, row.theoretical_max
        );
    }

    let config = ExperimentConfig::new(ExperimentKind::DepthVsSize).with_trials(50);
    let rows = depth_vs_size(&config)?;
    let xs: Vec<f64> = rows.iter().map(|r| r.n as f64).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.depth.mean).collect();
    println!("p = {}", config.p);
    for row in &rows {
        println!("  n={:<4} depth {:6.2}", row.n, row.depth.mean);
    }
    if let Some(fit) = linear_fit(&xs, &ys) {
        println!(
            "  depth ≈ {:.3} n + {:.2}, R² = {:.4}",
            fit.slope, fit.intercept, fit.r_squared
        );
    }
    Ok(())
}
