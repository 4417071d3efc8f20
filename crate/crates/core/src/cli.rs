//! The `stabqram` command line.
//!
//! ```text
//! stabqram [--seed N] [--out PATH] [--format text|csv] <command>
//!
//!   schedule <spec.afs> [--merge-x]
//!   verify <spec.afs> [--circuit gates.csv] [--exhaustive-limit N] [--samples N] [--merge-x]
//!   simulate <spec.afs>
//!   map <spec.afs> --k K [--v V] [--edges graph.txt] [--graph-out PATH]
//!   resources <spec.afs>
//!   experiment <name> [--trials N] [--n N] [--p P] [--p-grid ..] [--n-grid ..] [--k-grid ..] [--jobs N]
//!   lfsr --width W --taps T [--offset O] --steps T [--exhaustive-limit N] [--samples N]
//! ```
//!
//! Human-readable text goes to stdout. With `--format csv` the machine form goes
//! to stdout instead; with `--out` it is written to the file and the text summary
//! is still printed.
//!
//! Exit codes:
//!
//! | code | meaning                                      |
//! |------|----------------------------------------------|
//! | 0    | success                                      |
//! | 1    | usage or configuration error                 |
//! | 2    | unreadable or malformed input                |
//! | 3    | verification failure                         |
//! | 4    | infeasible (parity, degree, disconnected map) |

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::circuit::{
    read_csv, schedule_with, verify_oracle, write_csv, write_text, InteractionGraph,
    ResourceReport, ScheduleOptions, ScheduledCircuit, VerifyMode, VerifyOptions,
};
use crate::error::{Error, Result};
use crate::experiments::{self, ExperimentConfig, ExperimentKind, Lfsr};
use crate::f2::{parse_afs, AffineMap};
use crate::hardware::{
    greedy_place, locality_report, random_k_regular, HardwareGraph, DEFAULT_MAX_RETRIES,
};
use crate::stabilizer::{verify_superposed, StabilizerTableau};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "stabqram",
    version,
    about = "All-Clifford QRAM compiler and verifier for affine maps over F2"
)]
pub struct Cli {
    /// Seed for every random choice the command makes.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the machine-readable output to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the layered oracle circuit and its resources.
    Schedule {
        spec: PathBuf,
        /// Place X gates in idle slots of CNOT layers.
        #[arg(long)]
        merge_x: bool,
    },
    /// Check the oracle on basis inputs and on the superposed address state.
    Verify {
        spec: PathBuf,
        /// Verify this gate CSV instead of a freshly scheduled circuit.
        #[arg(long)]
        circuit: Option<PathBuf>,
        #[command(flatten)]
        limits: VerifyArgs,
        #[arg(long)]
        merge_x: bool,
    },
    /// Print the stabilizer generators after H on the addresses and the oracle.
    Simulate { spec: PathBuf },
    /// Place the oracle on a k-regular hardware graph and report CNOT distances.
    Map {
        spec: PathBuf,
        /// Hardware degree.
        #[arg(long)]
        k: Option<usize>,
        /// Hardware vertices; defaults to n + m.
        #[arg(long)]
        v: Option<usize>,
        /// Read the hardware graph from an edge list instead of sampling one.
        #[arg(long, conflicts_with_all = ["k", "v"])]
        edges: Option<PathBuf>,
        /// Save the hardware edge list.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Gate, layer and qubit counts.
    Resources { spec: PathBuf },
    /// Run one experiment sweep.
    Experiment(ExperimentArgs),
    /// Jump a shift register forward by an affine power and verify its oracle.
    Lfsr {
        #[arg(long)]
        width: usize,
        /// Feedback taps as a bit mask (decimal, 0x.. or 0b..).
        #[arg(long, value_parser = parse_u64)]
        taps: u64,
        #[arg(long, value_parser = parse_u64, default_value = "0")]
        offset: u64,
        #[arg(long)]
        steps: u64,
        #[command(flatten)]
        limits: VerifyArgs,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Largest address width checked on every input.
    #[arg(long, default_value_t = 16)]
    pub exhaustive_limit: usize,
    /// Random inputs checked above the exhaustive limit.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
}

#[derive(Args, Debug)]
pub struct ExperimentArgs {
    /// depth-vs-density, depth-vs-size, rank-vs-depth, cnot-vs-density,
    /// cnot-vs-size, locality-vs-density, locality-vs-size (or fig1a..fig4b).
    pub name: String,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pub p_grid: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub n_grid: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    pub k_grid: Option<Vec<usize>>,
    /// Worker threads; output does not depend on it.
    #[arg(long)]
    pub jobs: Option<usize>,
}

fn parse_u64(s: &str) -> std::result::Result<u64, String> {
    let parsed = if let Some(hex) = s.strip_prefix("0x") {
        u64::from_str_radix(hex, 16)
    } else if let Some(bin) = s.strip_prefix("0b") {
        u64::from_str_radix(bin, 2)
    } else {
        s.parse()
    };
    parsed.map_err(|e| e.to_string())
}

/// Text for stdout, the machine form, and the exit code.
struct Outcome {
    text: String,
    csv: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String, csv: String) -> Self {
        Self {
            text,
            csv,
            code: EXIT_OK,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Io(_) | Error::Csv(_) | Error::DimensionMismatch { .. } => {
            EXIT_PARSE
        }
        Error::Infeasible(_) | Error::GenerationFailed { .. } => EXIT_INFEASIBLE,
        Error::InvalidCircuit(_) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = execute(&cli).and_then(|outcome| {
        if let Some(path) = &cli.out {
            fs::write(path, &outcome.csv)?;
            let _ = out.write_all(outcome.text.as_bytes());
        } else if cli.format == Format::Csv {
            let _ = out.write_all(outcome.csv.as_bytes());
        } else {
            let _ = out.write_all(outcome.text.as_bytes());
        }
        Ok(outcome.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read_spec(path: &Path) -> Result<AffineMap> {
    let text = fs::read_to_string(path)?;
    parse_afs(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{message} ({})", path.display()),
        },
        e => e,
    })
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Schedule { spec, merge_x } => cmd_schedule(&read_spec(spec)?, *merge_x),
        Command::Verify {
            spec,
            circuit,
            limits,
            merge_x,
        } => cmd_verify(
            &read_spec(spec)?,
            circuit.as_deref(),
            limits,
            *merge_x,
            cli.seed,
        ),
        Command::Simulate { spec } => cmd_simulate(&read_spec(spec)?),
        Command::Map {
            spec,
            k,
            v,
            edges,
            graph_out,
        } => cmd_map(
            &read_spec(spec)?,
            *k,
            *v,
            edges.as_deref(),
            graph_out.as_deref(),
            cli.seed,
        ),
        Command::Resources { spec } => cmd_resources(&read_spec(spec)?),
        Command::Experiment(args) => cmd_experiment(args, cli.seed, cli.out.as_deref()),
        Command::Lfsr {
            width,
            taps,
            offset,
            steps,
            limits,
        } => cmd_lfsr(*width, *taps, *offset, *steps, limits, cli.seed),
    }
}

fn resources_csv(r: &ResourceReport) -> String {
    format!(
        "qubits,cnot_count,x_count,t_count,cnot_layers,depth,paper_depth\n{},{},{},{},{},{},{}\n",
        r.qubits, r.cnot_count, r.x_count, r.t_count, r.cnot_layers, r.depth, r.paper_depth
    )
}

fn cmd_schedule(spec: &AffineMap, merge_x: bool) -> Result<Outcome> {
    let circuit = schedule_with(spec, ScheduleOptions { merge_x });
    let resources = ResourceReport::of(spec, &circuit);
    let text = format!("{}{resources}\n", write_text(&circuit));
    Ok(Outcome::ok(text, write_csv(&circuit)?))
}

fn cmd_resources(spec: &AffineMap) -> Result<Outcome> {
    let r = crate::circuit::resource_report(spec);
    Ok(Outcome::ok(format!("{r}\n"), resources_csv(&r)))
}

fn cmd_verify(
    spec: &AffineMap,
    circuit_path: Option<&Path>,
    limits: &VerifyArgs,
    merge_x: bool,
    seed: u64,
) -> Result<Outcome> {
    let circuit: ScheduledCircuit = match circuit_path {
        Some(path) => read_csv(fs::File::open(path)?, spec.input_len(), spec.output_len())?,
        None => schedule_with(spec, ScheduleOptions { merge_x }),
    };
    let options = VerifyOptions {
        max_exhaustive_n: limits.exhaustive_limit,
        samples: limits.samples,
        seed,
    };
    let oracle = verify_oracle(spec, &circuit, options);
    let superposed = verify_superposed(spec, &circuit);

    let mut text = String::new();
    let mode = match oracle.mode {
        VerifyMode::Exhaustive => "exhaustive",
        VerifyMode::Sampled => "sampled",
    };
    if let Some(e) = &oracle.shape_error {
        let _ = writeln!(text, "basis check: FAIL ({e})");
    } else if oracle.passed {
        match oracle.mode {
            VerifyMode::Exhaustive => {
                let _ = writeln!(
                    text,
                    "basis check: PASS (exhaustive, 2^{} cases pass)",
                    spec.input_len()
                );
            }
            VerifyMode::Sampled => {
                let _ = writeln!(
                    text,
                    "basis check: PASS (sampled mode, {} random inputs, seed {seed})",
                    oracle.inputs_tested
                );
            }
        }
    } else if let Some(c) = &oracle.counterexample {
        let _ = writeln!(text, "basis check: FAIL ({mode})");
        let _ = writeln!(
            text,
            "counterexample: x={} expected={} actual={}",
            c.input, c.expected, c.actual
        );
    }
    if superposed.passed {
        let _ = writeln!(
            text,
            "superposed check: PASS ({} stabilizer generators)",
            circuit.n_addr() + circuit.n_data()
        );
    } else {
        let reason = superposed
            .error
            .clone()
            .unwrap_or_else(|| "tableau mismatch".into());
        let _ = writeln!(text, "superposed check: FAIL ({reason})");
    }
    let passed = oracle.passed && superposed.passed;
    let _ = writeln!(text, "result: {}", if passed { "PASS" } else { "FAIL" });

    let csv = format!(
        "check,passed,mode,inputs_tested\nbasis,{},{mode},{}\nsuperposed,{},tableau,{}\n",
        oracle.passed,
        oracle.inputs_tested,
        superposed.passed,
        circuit.n_addr() + circuit.n_data()
    );
    Ok(Outcome {
        text,
        csv,
        code: if passed { EXIT_OK } else { EXIT_VERIFY },
    })
}

fn tableau_lines(t: &StabilizerTableau) -> Vec<String> {
    t.rows().iter().map(ToString::to_string).collect()
}

fn cmd_simulate(spec: &AffineMap) -> Result<Outcome> {
    let circuit = schedule_with(spec, ScheduleOptions::default());
    let report = verify_superposed(spec, &circuit);
    let (Some(actual), Some(expected)) = (&report.actual, &report.expected) else {
        return Err(Error::InvalidCircuit(report.error.unwrap_or_default()));
    };
    let actual = tableau_lines(actual);
    let expected = tableau_lines(expected);
    let mut text = format!(
        "# qubits 0..{} address, {}..{} data\n",
        spec.input_len(),
        spec.input_len(),
        spec.input_len() + spec.output_len()
    );
    let mut csv = String::from("row,actual,expected\n");
    for (i, (a, e)) in actual.iter().zip(&expected).enumerate() {
        let _ = writeln!(text, "{a}");
        let _ = writeln!(csv, "{i},{a},{e}");
    }
    let _ = writeln!(
        text,
        "matches expected generators: {}",
        if report.passed { "yes" } else { "no" }
    );
    Ok(Outcome {
        text,
        csv,
        code: if report.passed { EXIT_OK } else { EXIT_VERIFY },
    })
}

fn cmd_map(
    spec: &AffineMap,
    k: Option<usize>,
    v: Option<usize>,
    edges: Option<&Path>,
    graph_out: Option<&Path>,
    seed: u64,
) -> Result<Outcome> {
    let qubits = spec.input_len() + spec.output_len();
    let hw = match edges {
        Some(path) => HardwareGraph::parse_edge_list(&fs::read_to_string(path)?)?,
        None => {
            let k = k.ok_or_else(|| Error::InvalidConfig("map needs --k or --edges".into()))?;
            let v = v.unwrap_or(qubits);
            if v < qubits {
                return Err(Error::InvalidConfig(format!(
                    "--v {v} is below the {qubits} logical qubits"
                )));
            }
            random_k_regular(v, k, seed, DEFAULT_MAX_RETRIES)?
        }
    };
    if let Some(path) = graph_out {
        fs::write(path, hw.to_edge_list(seed))?;
    }
    let graph = InteractionGraph::from_spec(spec);
    let map = greedy_place(&graph, &hw)?;
    let report = locality_report(&graph, &hw, &map)?;

    let mut text = format!(
        "hardware: v={} k={} seed={seed}\nplacement:",
        hw.num_vertices(),
        hw.degree()
    );
    for (q, &phys) in map.logical_to_physical().iter().enumerate() {
        let name = if q < spec.input_len() {
            format!("x{q}")
        } else {
            format!("d{}", q - spec.input_len())
        };
        let _ = write!(text, " {name}->{phys}");
    }
    let _ = writeln!(text, "\n{report}");
    let mut csv = String::from("addr,data,phys_addr,phys_data,distance\n");
    for e in &report.per_edge {
        let d = e.distance.map(|d| d.to_string()).unwrap_or_default();
        let _ = writeln!(
            csv,
            "{},{},{},{},{d}",
            e.addr,
            e.data,
            map.addr(e.addr),
            map.data(e.data)
        );
    }
    Ok(Outcome {
        text,
        csv,
        code: if report.is_feasible() {
            EXIT_OK
        } else {
            EXIT_INFEASIBLE
        },
    })
}

fn experiment_config(args: &ExperimentArgs, seed: u64) -> Result<ExperimentConfig> {
    let kind: ExperimentKind = args.name.parse()?;
    let mut config = ExperimentConfig::new(kind).with_seed(seed);
    if let Some(t) = args.trials {
        config.trials = t;
    }
    if let Some(n) = args.n {
        config.n = n;
    }
    if let Some(p) = args.p {
        config.p = p;
    }
    if let Some(g) = &args.p_grid {
        config.p_grid = g.clone();
    }
    if let Some(g) = &args.n_grid {
        config.n_grid = g.clone();
    }
    if let Some(g) = &args.k_grid {
        config.k_grid = g.clone();
    }
    config.validate()?;
    Ok(config)
}

/// Aligns the CSV body into columns, keeping `#` lines as they are.
fn csv_as_table(csv: &str) -> String {
    let (comments, body): (Vec<&str>, Vec<&str>) = csv.lines().partition(|l| l.starts_with('#'));
    let rows: Vec<Vec<&str>> = body.iter().map(|l| l.split(',').collect()).collect();
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.len())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "{c}");
    }
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  "));
    }
    out
}

fn cmd_experiment(args: &ExperimentArgs, seed: u64, out: Option<&Path>) -> Result<Outcome> {
    let config = experiment_config(args, seed)?;
    let run = || -> Result<String> {
        let result = experiments::run(&config)?;
        experiments::render_csv(&config, &result)
    };
    let csv = match args.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let text = match out {
        Some(path) => {
            let rows = csv
                .lines()
                .filter(|l| !l.starts_with('#'))
                .count()
                .saturating_sub(1);
            format!("{}: wrote {rows} rows to {}\n", config.kind, path.display())
        }
        None => csv_as_table(&csv),
    };
    Ok(Outcome::ok(text, csv))
}

fn cmd_lfsr(
    width: usize,
    taps: u64,
    offset: u64,
    steps: u64,
    limits: &VerifyArgs,
    seed: u64,
) -> Result<Outcome> {
    let lfsr = Lfsr::new(width, taps, offset)?;
    let options = VerifyOptions {
        max_exhaustive_n: limits.exhaustive_limit,
        samples: limits.samples,
        seed,
    };
    let report = experiments::lfsr_demo(&lfsr, steps, options)?;
    let r = &report.resources;
    let csv = format!(
        "width,taps,offset,steps,rank,qubits,cnot_count,x_count,cnot_layers,depth,states_checked,passed\n\
         {width},{taps},{offset},{steps},{},{},{},{},{},{},{},{}\n",
        report.power.matrix().rank(),
        r.qubits,
        r.cnot_count,
        r.x_count,
        r.cnot_layers,
        r.depth,
        report.states_checked,
        report.passed()
    );
    Ok(Outcome {
        text: format!("{report}\n"),
        csv,
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_VERIFY
        },
    })
}
