use rayon::prelude::*;

use crate::circuit::schedule;
use crate::error::Result;
use crate::f2::rng::derive_seed;
use crate::f2::AffineMap;

use super::{ExperimentConfig, Summary};

const TAG: u64 = 0xde97;

/// One cell of a depth sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct DepthRow {
    pub p: f64,
    pub n: usize,
    pub m: usize,
    /// Scheduled layers: CNOT layers plus one X layer when `b != 0`.
    pub depth: Summary,
    pub cnot_layers: Summary,
    /// CNOT layers + 1, the closed form that always reserves an X layer.
    pub paper_depth: Summary,
    /// `max(n, m) + 1`, the depth of the all-ones matrix.
    pub theoretical_max: usize,
}

/// The seed of trial `trial` in a cell of size `n`.
///
/// Independent of `p`, so matrices of one trial are nested across densities.
pub fn trial_seed(base: u64, n: usize, trial: usize) -> u64 {
    derive_seed(base, &[TAG, n as u64, trial as u64])
}

fn cell(config: &ExperimentConfig, n: usize, p: f64) -> Result<DepthRow> {
    let samples: Vec<(usize, usize)> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let spec = AffineMap::random(n, n, p, trial_seed(config.seed, n, t))?;
            let c = schedule(&spec);
            Ok((c.depth(), c.cnot_layer_count()))
        })
        .collect::<Result<_>>()?;
    let depths: Vec<usize> = samples.iter().map(|s| s.0).collect();
    let layers: Vec<usize> = samples.iter().map(|s| s.1).collect();
    let paper: Vec<usize> = layers.iter().map(|l| l + 1).collect();
    let summary = |v: &[usize]| Summary::of_counts(v).expect("trials >= 1");
    Ok(DepthRow {
        p,
        n,
        m: n,
        depth: summary(&depths),
        cnot_layers: summary(&layers),
        paper_depth: summary(&paper),
        theoretical_max: n + 1,
    })
}

/// Depth at fixed `n = m = config.n` over `config.p_grid`.
pub fn depth_vs_density(config: &ExperimentConfig) -> Result<Vec<DepthRow>> {
    config.validate()?;
    config
        .p_grid
        .iter()
        .map(|&p| cell(config, config.n, p))
        .collect()
}

/// Depth at fixed `config.p` over `config.n_grid`, with `m = n`.
pub fn depth_vs_size(config: &ExperimentConfig) -> Result<Vec<DepthRow>> {
    config.validate()?;
    config
        .n_grid
        .iter()
        .map(|&n| cell(config, n, config.p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::ExperimentKind;

    fn density(trials: usize, p_grid: Vec<f64>) -> ExperimentConfig {
        ExperimentConfig {
            p_grid,
            ..ExperimentConfig::new(ExperimentKind::DepthVsDensity).with_trials(trials)
        }
    }

    #[test]
    fn extreme_densities() {
        let rows = depth_vs_density(&density(5, vec![0.0, 1.0])).unwrap();
        assert_eq!(rows[0].depth.mean, 0.0);
        assert_eq!(rows[0].paper_depth.mean, 1.0);
        assert_eq!(rows[1].depth.mean, 51.0);
        assert_eq!(rows[1].depth.std, 0.0);
        assert_eq!(rows[1].theoretical_max, 51);
    }

    #[test]
    fn half_density_sits_between_bounds() {
        let rows = depth_vs_density(&density(20, vec![0.5])).unwrap();
        let mean = rows[0].depth.mean;
        assert!(mean > 26.0 && mean < 51.0, "{mean}");
    }

    #[test]
    fn full_density_size_sweep() {
        let config = ExperimentConfig {
            p: 1.0,
            n_grid: vec![1, 8, 16],
            ..ExperimentConfig::new(ExperimentKind::DepthVsSize).with_trials(2)
        };
        let rows = depth_vs_size(&config).unwrap();
        let d: Vec<f64> = rows.iter().map(|r| r.depth.mean).collect();
        assert_eq!(d, vec![2.0, 9.0, 17.0]);
        assert_eq!(d[2] - 1.0, 2.0 * (d[1] - 1.0));
    }

    #[test]
    fn matrices_are_nested_across_densities() {
        let seed = trial_seed(3, 20, 4);
        let lo = AffineMap::random(20, 20, 0.3, seed).unwrap();
        let hi = AffineMap::random(20, 20, 0.6, seed).unwrap();
        assert!(lo.matrix().iter_ones().all(|(r, c)| hi.matrix().get(r, c)));
    }
}
