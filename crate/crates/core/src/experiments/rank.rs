use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::circuit::schedule;
use crate::error::Result;
use crate::f2::rng::{derive_seed, stream, uniform01};
use crate::f2::{AffineMap, BitMatrix, BitVector};

use super::{pearson, ExperimentConfig};

const TAG: u64 = 0x4a2c;
const DENSITY_TAG: u64 = 0xd3;
const P_MIN: f64 = 0.05;
const P_MAX: f64 = 0.95;

/// Number of constructed witness rows placed before the random trials.
pub const WITNESSES: usize = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct ScatterPoint {
    pub trial: usize,
    /// Matrix seed; 0 for the witnesses.
    pub seed: u64,
    /// Density the matrix was drawn at; `None` for the witnesses.
    pub p: Option<f64>,
    pub rank: usize,
    pub depth: usize,
    pub cnot_layers: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScatterData {
    pub points: Vec<ScatterPoint>,
    /// Pearson correlation of rank and depth over the random trials only.
    pub pearson_r: Option<f64>,
    pub distinct_ranks: usize,
    pub distinct_depths: usize,
}

fn point(trial: usize, seed: u64, p: Option<f64>, spec: &AffineMap) -> ScatterPoint {
    let c = schedule(spec);
    ScatterPoint {
        trial,
        seed,
        p,
        rank: spec.matrix().rank(),
        depth: c.depth(),
        cnot_layers: c.cnot_layer_count(),
    }
}

/// Witness 0 is the identity with `b = 0` (full rank, depth 1). Witness 1 has
/// a single all-ones column and `b = e_0` (rank 1, depth `m + 1`).
fn witnesses(n: usize) -> Vec<AffineMap> {
    let column = BitMatrix::from_fn(n, n, |_, c| c == 0);
    let spec = AffineMap::new(column, BitVector::unit(n, 0)).expect("shapes agree");
    vec![AffineMap::identity(n), spec]
}

/// Rank against depth at `n = m = config.n`, with the density of each random
/// trial drawn uniformly from `[0.05, 0.95]`.
pub fn rank_vs_depth_scatter(config: &ExperimentConfig) -> Result<ScatterData> {
    config.validate()?;
    let n = config.n;
    let mut points: Vec<ScatterPoint> = witnesses(n)
        .iter()
        .enumerate()
        .map(|(i, spec)| point(i, 0, None, spec))
        .collect();
    let random: Vec<ScatterPoint> = (0..config.trials)
        .into_par_iter()
        .map(|i| {
            let seed = derive_seed(config.seed, &[TAG, i as u64]);
            let u = uniform01(&mut stream(derive_seed(seed, &[DENSITY_TAG])));
            let p = P_MIN + (P_MAX - P_MIN) * u;
            let spec = AffineMap::random(n, n, p, seed)?;
            Ok(point(WITNESSES + i, seed, Some(p), &spec))
        })
        .collect::<Result<_>>()?;

    let ranks: Vec<f64> = random.iter().map(|p| p.rank as f64).collect();
    let depths: Vec<f64> = random.iter().map(|p| p.depth as f64).collect();
    let pearson_r = pearson(&ranks, &depths);
    points.extend(random);
    let distinct_ranks = points.iter().map(|p| p.rank).collect::<BTreeSet<_>>().len();
    let distinct_depths = points
        .iter()
        .map(|p| p.depth)
        .collect::<BTreeSet<_>>()
        .len();
    Ok(ScatterData {
        points,
        pearson_r,
        distinct_ranks,
        distinct_depths,
    })
}
