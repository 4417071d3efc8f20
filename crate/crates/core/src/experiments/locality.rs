use rayon::prelude::*;

use crate::circuit::InteractionGraph;
use crate::error::{Error, Result};
use crate::f2::rng::derive_seed;
use crate::f2::AffineMap;
use crate::hardware::{greedy_place, locality_report, random_k_regular, DEFAULT_MAX_RETRIES};

use super::{ExperimentConfig, ExperimentKind, Summary};

const MATRIX_TAG: u64 = 0x10ca;
const HARDWARE_TAG: u64 = 0x4a4d;

/// One heatmap cell at `n = m`, on `v = 2n` hardware vertices of degree `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeatmapCell {
    pub p: f64,
    pub n: usize,
    pub v: usize,
    pub k: usize,
    pub feasible_trials: usize,
    /// Trials whose placement left some CNOT across disconnected components.
    pub infeasible_trials: usize,
    /// Max CNOT distance over the feasible trials.
    pub stats: Option<Summary>,
    /// `ok`, or `infeasible` when no trial could be evaluated.
    pub status: String,
}

/// Matrix seed of a trial; shared by every `p` and `k` at the same `n`.
pub fn matrix_seed(base: u64, n: usize, trial: usize) -> u64 {
    derive_seed(base, &[MATRIX_TAG, n as u64, trial as u64])
}

/// Hardware seed of a trial; shared by every `p` at the same `(n, k)`.
pub fn hardware_seed(base: u64, n: usize, k: usize, trial: usize) -> u64 {
    derive_seed(base, &[HARDWARE_TAG, n as u64, k as u64, trial as u64])
}

/// Max CNOT distance of one trial, or `None` if the placement is disconnected.
pub fn locality_trial(base: u64, n: usize, p: f64, k: usize, trial: usize) -> Result<Option<u32>> {
    let spec = AffineMap::random(n, n, p, matrix_seed(base, n, trial))?;
    let graph = InteractionGraph::from_spec(&spec);
    let hw = random_k_regular(
        2 * n,
        k,
        hardware_seed(base, n, k, trial),
        DEFAULT_MAX_RETRIES,
    )?;
    let map = greedy_place(&graph, &hw)?;
    let report = locality_report(&graph, &hw, &map)?;
    Ok(report.is_feasible().then_some(report.max_distance))
}

fn cell(config: &ExperimentConfig, n: usize, p: f64, k: usize) -> Result<HeatmapCell> {
    let v = 2 * n;
    let mut out = HeatmapCell {
        p,
        n,
        v,
        k,
        feasible_trials: 0,
        infeasible_trials: 0,
        stats: None,
        status: "infeasible".into(),
    };
    if k >= v {
        return Ok(out);
    }
    let outcomes: Vec<Option<u32>> = (0..config.trials)
        .into_par_iter()
        .map(|t| locality_trial(config.seed, n, p, k, t))
        .collect::<Result<_>>()
        .or_else(|e| match e {
            Error::Infeasible(_) => Ok(Vec::new()),
            e => Err(e),
        })?;
    let feasible: Vec<f64> = outcomes.iter().flatten().map(|&d| f64::from(d)).collect();
    out.feasible_trials = feasible.len();
    out.infeasible_trials = outcomes.len() - feasible.len();
    out.stats = Summary::of(&feasible);
    if out.stats.is_some() {
        out.status = "ok".into();
    }
    Ok(out)
}

/// Grid over `config.p_grid` x `config.k_grid` at `n = m = config.n`, p-major.
pub fn locality_vs_density(config: &ExperimentConfig) -> Result<Vec<HeatmapCell>> {
    config.validate()?;
    let mut cells = Vec::new();
    for &p in &config.p_grid {
        for &k in &config.k_grid {
            cells.push(cell(config, config.n, p, k)?);
        }
    }
    Ok(cells)
}

/// Grid over `config.n_grid` x `config.k_grid` at density `config.p`, n-major.
pub fn locality_vs_size(config: &ExperimentConfig) -> Result<Vec<HeatmapCell>> {
    config.validate()?;
    let mut cells = Vec::new();
    for &n in &config.n_grid {
        for &k in &config.k_grid {
            cells.push(cell(config, n, config.p, k)?);
        }
    }
    Ok(cells)
}

/// Both default heatmaps for one seed and trial count.
pub fn locality_heatmaps(seed: u64, trials: usize) -> Result<(Vec<HeatmapCell>, Vec<HeatmapCell>)> {
    let a = ExperimentConfig::new(ExperimentKind::LocalityVsDensity)
        .with_seed(seed)
        .with_trials(trials);
    let b = ExperimentConfig::new(ExperimentKind::LocalityVsSize)
        .with_seed(seed)
        .with_trials(trials);
    Ok((locality_vs_density(&a)?, locality_vs_size(&b)?))
}
