use rayon::prelude::*;

use crate::circuit::build_gates;
use crate::error::Result;
use crate::f2::rng::derive_seed;
use crate::f2::AffineMap;

use super::{ExperimentConfig, Summary};

const TAG: u64 = 0xc407;

#[derive(Clone, Debug, PartialEq)]
pub struct CnotRow {
    pub p: f64,
    pub n: usize,
    pub m: usize,
    pub count: Summary,
    /// `m * n * p`.
    pub expected: f64,
}

pub fn trial_seed(base: u64, n: usize, trial: usize) -> u64 {
    derive_seed(base, &[TAG, n as u64, trial as u64])
}

fn cell(config: &ExperimentConfig, n: usize, p: f64) -> Result<CnotRow> {
    let counts: Vec<usize> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let spec = AffineMap::random(n, n, p, trial_seed(config.seed, n, t))?;
            Ok(build_gates(&spec).iter().filter(|g| g.is_cnot()).count())
        })
        .collect::<Result<_>>()?;
    Ok(CnotRow {
        p,
        n,
        m: n,
        count: Summary::of_counts(&counts).expect("trials >= 1"),
        expected: (n * n) as f64 * p,
    })
}

pub fn cnot_count_vs_density(config: &ExperimentConfig) -> Result<Vec<CnotRow>> {
    config.validate()?;
    config
        .p_grid
        .iter()
        .map(|&p| cell(config, config.n, p))
        .collect()
}

pub fn cnot_count_vs_size(config: &ExperimentConfig) -> Result<Vec<CnotRow>> {
    config.validate()?;
    config
        .n_grid
        .iter()
        .map(|&n| cell(config, n, config.p))
        .collect()
}
