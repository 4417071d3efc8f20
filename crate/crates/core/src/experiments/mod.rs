//! Seeded sweeps behind the depth, rank, CNOT-count and locality studies.
//!
//! Every experiment is a pure function of its [`ExperimentConfig`]. Trials run in
//! parallel, but each trial's randomness comes from a seed derived from the base
//! seed and the trial's indices, and results are reduced in trial order, so output
//! is byte-identical for any worker count.
//!
//! Density sweeps reuse one matrix seed per trial across all densities. Because an
//! entry is set iff its draw falls below `p * 2^64`, the matrices for a given trial
//! are nested: every one present at density `p` is present at all higher densities.
//!
//! | name                  | figure | default grid                                   | trials |
//! |-----------------------|--------|------------------------------------------------|--------|
//! | `depth-vs-density`    | fig1a  | n = m = 50, p = 0, 0.1, ..., 1                 | 200    |
//! | `depth-vs-size`       | fig1b  | p = 0.5, n = m = 10, 20, ..., 100              | 200    |
//! | `rank-vs-depth`       | fig2   | n = m = 30, p ~ U[0.05, 0.95] per trial        | 2000   |
//! | `cnot-vs-density`     | fig3a  | n = m = 50, p = 0, 0.1, ..., 1                 | 200    |
//! | `cnot-vs-size`        | fig3b  | p = 0.5, n = m = 10, 20, ..., 100              | 200    |
//! | `locality-vs-density` | fig4a  | n = m = 25, p = 0.1..0.9, k = 3..8,10,12,16,49 | 50     |
//! | `locality-vs-size`    | fig4b  | p = 0.25, n = m = 5..30, k = 3,4,5,6,8,10      | 50     |

mod cnot;
mod depth;
mod lfsr;
mod locality;
mod rank;
mod stats;

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};

pub use cnot::{cnot_count_vs_density, cnot_count_vs_size, CnotRow};
pub use depth::{depth_vs_density, depth_vs_size, DepthRow};
pub use lfsr::{lfsr_demo, Lfsr, LfsrReport};
pub use locality::{locality_heatmaps, locality_vs_density, locality_vs_size, HeatmapCell};
pub use rank::{rank_vs_depth_scatter, ScatterData, ScatterPoint};
pub use stats::{count_inversions, linear_fit, pearson, r_squared, LinearFit, Summary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExperimentKind {
    DepthVsDensity,
    DepthVsSize,
    RankVsDepth,
    CnotVsDensity,
    CnotVsSize,
    LocalityVsDensity,
    LocalityVsSize,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 7] = [
        ExperimentKind::DepthVsDensity,
        ExperimentKind::DepthVsSize,
        ExperimentKind::RankVsDepth,
        ExperimentKind::CnotVsDensity,
        ExperimentKind::CnotVsSize,
        ExperimentKind::LocalityVsDensity,
        ExperimentKind::LocalityVsSize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::DepthVsDensity => "depth-vs-density",
            ExperimentKind::DepthVsSize => "depth-vs-size",
            ExperimentKind::RankVsDepth => "rank-vs-depth",
            ExperimentKind::CnotVsDensity => "cnot-vs-density",
            ExperimentKind::CnotVsSize => "cnot-vs-size",
            ExperimentKind::LocalityVsDensity => "locality-vs-density",
            ExperimentKind::LocalityVsSize => "locality-vs-size",
        }
    }

    /// Short figure id used by the plotting scripts.
    pub fn figure_id(self) -> &'static str {
        match self {
            ExperimentKind::DepthVsDensity => "fig1a",
            ExperimentKind::DepthVsSize => "fig1b",
            ExperimentKind::RankVsDepth => "fig2",
            ExperimentKind::CnotVsDensity => "fig3a",
            ExperimentKind::CnotVsSize => "fig3b",
            ExperimentKind::LocalityVsDensity => "fig4a",
            ExperimentKind::LocalityVsSize => "fig4b",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s || k.figure_id() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Self::ALL.iter().map(|k| k.name()).collect();
                Error::InvalidConfig(format!(
                    "unknown experiment {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Parameters of one experiment run. Fields unused by a kind are ignored.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub seed: u64,
    pub trials: usize,
    /// Fixed register width (`m = n`) for density sweeps and the rank scatter.
    pub n: usize,
    /// Fixed density for size sweeps.
    pub p: f64,
    pub p_grid: Vec<f64>,
    pub n_grid: Vec<usize>,
    pub k_grid: Vec<usize>,
}

fn tenths(from: u32, to: u32) -> Vec<f64> {
    (from..=to).map(|i| f64::from(i) / 10.0).collect()
}

impl ExperimentConfig {
    pub fn new(kind: ExperimentKind) -> Self {
        let base = Self {
            kind,
            seed: 0,
            trials: 200,
            n: 50,
            p: 0.5,
            p_grid: tenths(0, 10),
            n_grid: (1..=10).map(|i| 10 * i).collect(),
            k_grid: Vec::new(),
        };
        match kind {
            ExperimentKind::DepthVsDensity
            | ExperimentKind::CnotVsDensity
            | ExperimentKind::DepthVsSize
            | ExperimentKind::CnotVsSize => base,
            ExperimentKind::RankVsDepth => Self {
                n: 30,
                trials: 2000,
                ..base
            },
            ExperimentKind::LocalityVsDensity => Self {
                n: 25,
                trials: 50,
                p_grid: tenths(1, 9),
                k_grid: vec![3, 4, 5, 6, 7, 8, 10, 12, 16, 49],
                ..base
            },
            ExperimentKind::LocalityVsSize => Self {
                trials: 50,
                p: 0.25,
                n_grid: vec![5, 10, 15, 20, 25, 30],
                k_grid: vec![3, 4, 5, 6, 8, 10],
                ..base
            },
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if let Some(p) = self
            .p_grid
            .iter()
            .chain([&self.p])
            .find(|p| !(0.0..=1.0).contains(*p))
        {
            return bad(format!("density {p} outside [0, 1]"));
        }
        let uses_p_grid = matches!(
            self.kind,
            ExperimentKind::DepthVsDensity
                | ExperimentKind::CnotVsDensity
                | ExperimentKind::LocalityVsDensity
        );
        let uses_n_grid = matches!(
            self.kind,
            ExperimentKind::DepthVsSize
                | ExperimentKind::CnotVsSize
                | ExperimentKind::LocalityVsSize
        );
        let uses_k_grid = matches!(
            self.kind,
            ExperimentKind::LocalityVsDensity | ExperimentKind::LocalityVsSize
        );
        if uses_p_grid && self.p_grid.is_empty() {
            return bad("density grid is empty".into());
        }
        if uses_n_grid && (self.n_grid.is_empty() || self.n_grid.contains(&0)) {
            return bad("size grid must be non-empty and positive".into());
        }
        if uses_k_grid && (self.k_grid.is_empty() || self.k_grid.contains(&0)) {
            return bad("degree grid must be non-empty and positive".into());
        }
        if !uses_n_grid && self.n == 0 {
            return bad("n must be positive".into());
        }
        Ok(())
    }

    /// One-line description of the parameters this kind actually reads.
    pub fn describe(&self) -> String {
        let join = |v: &[String]| v.join(" ");
        let ps: Vec<String> = self.p_grid.iter().map(f64::to_string).collect();
        let ns: Vec<String> = self.n_grid.iter().map(usize::to_string).collect();
        let ks: Vec<String> = self.k_grid.iter().map(usize::to_string).collect();
        let mut s = format!("trials={}", self.trials);
        match self.kind {
            ExperimentKind::DepthVsDensity | ExperimentKind::CnotVsDensity => {
                let _ = write!(s, " n={} m={} p_grid={}", self.n, self.n, join(&ps));
            }
            ExperimentKind::DepthVsSize | ExperimentKind::CnotVsSize => {
                let _ = write!(s, " p={} n_grid={} m=n", self.p, join(&ns));
            }
            ExperimentKind::RankVsDepth => {
                let _ = write!(s, " n={} m={} p~U[0.05,0.95]", self.n, self.n);
            }
            ExperimentKind::LocalityVsDensity => {
                let _ = write!(
                    s,
                    " n={} m={} v={} p_grid={} k_grid={}",
                    self.n,
                    self.n,
                    2 * self.n,
                    join(&ps),
                    join(&ks)
                );
            }
            ExperimentKind::LocalityVsSize => {
                let _ = write!(
                    s,
                    " p={} n_grid={} m=n v=2n k_grid={}",
                    self.p,
                    join(&ns),
                    join(&ks)
                );
            }
        }
        s
    }
}

/// Typed result of one run.
#[derive(Clone, Debug, PartialEq)]
pub enum ExperimentResult {
    Depth(Vec<DepthRow>),
    Rank(ScatterData),
    Cnot(Vec<CnotRow>),
    Locality(Vec<HeatmapCell>),
}

pub fn run(config: &ExperimentConfig) -> Result<ExperimentResult> {
    config.validate()?;
    Ok(match config.kind {
        ExperimentKind::DepthVsDensity => ExperimentResult::Depth(depth_vs_density(config)?),
        ExperimentKind::DepthVsSize => ExperimentResult::Depth(depth_vs_size(config)?),
        ExperimentKind::RankVsDepth => ExperimentResult::Rank(rank_vs_depth_scatter(config)?),
        ExperimentKind::CnotVsDensity => ExperimentResult::Cnot(cnot_count_vs_density(config)?),
        ExperimentKind::CnotVsSize => ExperimentResult::Cnot(cnot_count_vs_size(config)?),
        ExperimentKind::LocalityVsDensity => {
            ExperimentResult::Locality(locality_vs_density(config)?)
        }
        ExperimentKind::LocalityVsSize => ExperimentResult::Locality(locality_vs_size(config)?),
    })
}

fn fmt_f(x: f64) -> String {
    format!("{x:.6}")
}

/// `2^n` as a decimal for `n <= 63`, otherwise the literal string `2^n`.
pub fn address_space_size(n: usize) -> String {
    if n <= 63 {
        (1u64 << n).to_string()
    } else {
        format!("2^{n}")
    }
}

/// CSV with a `#` header block (experiment, config, seed, tool version, column notes).
pub fn render_csv(config: &ExperimentConfig, result: &ExperimentResult) -> Result<String> {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# experiment: {} ({})",
        config.kind.name(),
        config.kind.figure_id()
    );
    let _ = writeln!(out, "# config: {}", config.describe());
    let _ = writeln!(out, "# seed: {}", config.seed);
    let _ = writeln!(out, "# version: stabqram {}", env!("CARGO_PKG_VERSION"));

    let mut w = csv::Writer::from_writer(Vec::new());
    let mut footer = Vec::new();
    match result {
        ExperimentResult::Depth(rows) => {
            let _ = writeln!(
                out,
                "# depth = scheduled layers (CNOT layers, plus one X layer when b != 0); paper_depth = CNOT layers + 1; b sampled at density p"
            );
            w.write_record([
                "p",
                "n",
                "m",
                "N",
                "trials",
                "mean_depth",
                "std_depth",
                "mean_cnot_layers",
                "mean_paper_depth",
                "std_paper_depth",
                "theoretical_max",
            ])?;
            for r in rows {
                w.write_record([
                    r.p.to_string(),
                    r.n.to_string(),
                    r.m.to_string(),
                    address_space_size(r.n),
                    r.depth.count.to_string(),
                    fmt_f(r.depth.mean),
                    fmt_f(r.depth.std),
                    fmt_f(r.cnot_layers.mean),
                    fmt_f(r.paper_depth.mean),
                    fmt_f(r.paper_depth.std),
                    r.theoretical_max.to_string(),
                ])?;
            }
        }
        ExperimentResult::Rank(data) => {
            let _ = writeln!(out, "# rows 0 and 1 are constructed witnesses (identity; single all-ones column with b = e0)");
            w.write_record(["trial", "seed", "p", "rank", "depth", "cnot_layers"])?;
            for pt in &data.points {
                w.write_record([
                    pt.trial.to_string(),
                    pt.seed.to_string(),
                    pt.p.map_or_else(String::new, fmt_f),
                    pt.rank.to_string(),
                    pt.depth.to_string(),
                    pt.cnot_layers.to_string(),
                ])?;
            }
            footer.push(format!(
                "# pearson_r={}",
                data.pearson_r
                    .map_or_else(|| "undefined".to_string(), fmt_f)
            ));
            footer.push(format!(
                "# abs_pearson_r={}",
                data.pearson_r
                    .map_or_else(|| "undefined".to_string(), |r| fmt_f(r.abs()))
            ));
            footer.push(format!(
                "# distinct_ranks={} distinct_depths={}",
                data.distinct_ranks, data.distinct_depths
            ));
        }
        ExperimentResult::Cnot(rows) => {
            w.write_record([
                "p",
                "n",
                "m",
                "trials",
                "mean_cnot",
                "std_cnot",
                "std_error",
                "expected_mnp",
            ])?;
            for r in rows {
                w.write_record([
                    r.p.to_string(),
                    r.n.to_string(),
                    r.m.to_string(),
                    r.count.count.to_string(),
                    fmt_f(r.count.mean),
                    fmt_f(r.count.std),
                    fmt_f(r.count.std_error()),
                    fmt_f(r.expected),
                ])?;
            }
        }
        ExperimentResult::Locality(cells) => {
            let _ = writeln!(out, "# value = mean over feasible trials of the maximum hardware distance of any CNOT after greedy placement");
            w.write_record([
                "p",
                "n",
                "m",
                "v",
                "k",
                "feasible_trials",
                "infeasible_trials",
                "mean_max_distance",
                "std_max_distance",
                "status",
            ])?;
            for c in cells {
                let (mean, std) = c.stats.map_or((String::new(), String::new()), |s| {
                    (fmt_f(s.mean), fmt_f(s.std))
                });
                w.write_record([
                    c.p.to_string(),
                    c.n.to_string(),
                    c.n.to_string(),
                    c.v.to_string(),
                    c.k.to_string(),
                    c.feasible_trials.to_string(),
                    c.infeasible_trials.to_string(),
                    mean,
                    std,
                    c.status.clone(),
                ])?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    out.push_str(std::str::from_utf8(&bytes).expect("csv output is utf-8"));
    for line in footer {
        let _ = writeln!(out, "{line}");
    }
    Ok(out)
}
