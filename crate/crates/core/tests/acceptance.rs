//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test --release --test acceptance`.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_force_chromatic_index, dense, naive_apply, naive_max_degree, naive_rank};
use stabqram::circuit::{
    evaluate_basis, interaction_graph, schedule, verify_oracle, Gate, ScheduledCircuit, VerifyMode,
    VerifyOptions,
};
use stabqram::experiments::{
    cnot_count_vs_density, cnot_count_vs_size, depth_vs_density, depth_vs_size, lfsr_demo,
    locality_vs_density, rank_vs_depth_scatter, ExperimentConfig, ExperimentKind, Lfsr,
};
use stabqram::f2::{AffineMap, BitMatrix, BitVector};
use stabqram::stabilizer::{simulate_superposed, verify_superposed, StabilizerTableau};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Independent R² of `ys` against predictions.
fn r2(ys: &[f64], pred: &[f64]) -> f64 {
    let mean = ys.iter().sum::<f64>() / ys.len() as f64;
    let ss_tot: f64 = ys.iter().map(|y| (y - mean).powi(2)).sum();
    let ss_res: f64 = ys.iter().zip(pred).map(|(y, p)| (y - p).powi(2)).sum();
    1.0 - ss_res / ss_tot
}

/// Ordinary least squares line through `(xs, ys)`, returned with its R².
fn ols(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let pred: Vec<f64> = xs.iter().map(|x| slope * x + intercept).collect();
    (slope, intercept, r2(ys, &pred))
}

/// Adjacent pairs that break the requested direction.
fn inversions(values: &[f64], non_decreasing: bool) -> usize {
    values
        .windows(2)
        .filter(|w| {
            if non_decreasing {
                w[1] < w[0]
            } else {
                w[1] > w[0]
            }
        })
        .count()
}

fn random_spec(rng: &mut ChaCha8Rng, dims: std::ops::RangeInclusive<usize>, p: f64) -> AffineMap {
    let m = rng.random_range(dims.clone());
    let n = rng.random_range(dims);
    AffineMap::random(m, n, p, rng.random()).unwrap()
}

fn konig() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..1000 {
        let p = f64::from(rng.random_range(1..=9u32)) / 10.0;
        let spec = random_spec(&mut rng, 2..=12, p);
        let (a, _) = dense(&spec);
        let circuit = schedule(&spec);
        let delta = naive_max_degree(&a);
        check(circuit.cnot_layer_count() == delta, || {
            format!(
                "trial {trial}: {} CNOT layers, max degree {delta}",
                circuit.cnot_layer_count()
            )
        })?;
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for (l, layer) in circuit.layers().iter().enumerate() {
            let mut addr = BTreeSet::new();
            let mut data = BTreeSet::new();
            for g in layer {
                let fresh = match *g {
                    Gate::Cnot { control, target } => {
                        *seen.entry((target, control)).or_default() += 1;
                        addr.insert(control) && data.insert(target)
                    }
                    Gate::X { target } => data.insert(target),
                };
                check(fresh, || {
                    format!("trial {trial}: layer {l} repeats a qubit")
                })?;
            }
        }
        let ones: usize = a.iter().flatten().filter(|&&v| v).count();
        check(
            seen.len() == ones && seen.iter().all(|(&(j, k), &c)| c == 1 && a[j][k]),
            || format!("trial {trial}: CNOT multiset differs from the ones of A"),
        )?;
    }
    for mask in 0u32..512 {
        let a = BitMatrix::from_fn(3, 3, |r, c| mask >> (3 * r + c) & 1 == 1);
        let spec = AffineMap::linear(a);
        let edges = interaction_graph(&spec).edges().to_vec();
        let best = brute_force_chromatic_index(&edges);
        let got = schedule(&spec).cnot_layer_count();
        check(got == best, || {
            format!("3x3 mask {mask:#05x}: {got} layers, optimum {best}")
        })?;
    }
    Ok("1000 random specs at Δ layers; all 512 3x3 matrices optimal".into())
}

fn oracle_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut inputs = 0u64;
    for trial in 0..200 {
        let p = rng.random_range(0.0..=1.0);
        let spec = random_spec(&mut rng, 1..=8, p);
        let (a, b) = dense(&spec);
        let circuit = schedule(&spec);
        for x in 0..1u64 << spec.input_len() {
            let got = evaluate_basis(&circuit, &BitVector::from_u64(spec.input_len(), x)).unwrap();
            let want = naive_apply(&a, &b, x);
            let got: Vec<bool> = (0..got.len()).map(|j| got.get(j)).collect();
            check(got == want, || {
                format!("trial {trial}: input {x:#b} differs")
            })?;
            inputs += 1;
        }
    }
    Ok(format!("200 specs, {inputs} basis inputs bit-exact"))
}

/// Phase of `row` acting on basis state `s` as a power of i, and the image state.
fn pauli_on_basis(row: &stabqram::stabilizer::PauliString, s: usize) -> (u32, usize) {
    let mut phase = if row.is_negative() { 2 } else { 0 };
    let mut image = s;
    for q in 0..row.num_qubits() {
        let (x, z) = (row.x_bits().get(q), row.z_bits().get(q));
        let bit = (s >> q) & 1 == 1;
        if x && z {
            // Y|0> = i|1>, Y|1> = -i|0>
            phase += if bit { 3 } else { 1 };
        } else if z && bit {
            phase += 2;
        }
        if x {
            image ^= 1 << q;
        }
    }
    (phase % 4, image)
}

/// Every generator fixes `sum_x |x>|Ax+b>`, checked on the dense vector.
fn stabilizes_state(t: &StabilizerTableau, spec: &AffineMap) -> bool {
    let (n, nq) = (spec.input_len(), t.num_qubits());
    let (a, b) = dense(spec);
    let mut amp = vec![0i8; 1 << nq];
    for x in 0..1usize << n {
        let y = naive_apply(&a, &b, x as u64);
        let data: usize = y
            .iter()
            .enumerate()
            .map(|(j, &v)| usize::from(v) << j)
            .sum();
        amp[x | data << n] = 1;
    }
    t.rows().iter().all(|row| {
        (0..amp.len()).all(|s| {
            let (phase, image) = pauli_on_basis(row, s);
            match (amp[s], phase) {
                (0, _) => true,
                (v, 0) => amp[image] == v,
                (v, 2) => amp[image] == -v,
                _ => false,
            }
        })
    })
}

fn mutate(circuit: &ScheduledCircuit, rng: &mut ChaCha8Rng) -> ScheduledCircuit {
    let mut gates: Vec<Gate> = circuit.gates().copied().collect();
    let m = circuit.n_data();
    match rng.random_range(0..3) {
        0 if !gates.is_empty() => {
            gates.remove(rng.random_range(0..gates.len()));
        }
        1 if !gates.is_empty() && m > 1 => {
            let i = rng.random_range(0..gates.len());
            let target = (gates[i].target() + rng.random_range(1..m)) % m;
            gates[i] = match gates[i] {
                Gate::Cnot { control, .. } => Gate::cnot(control, target),
                Gate::X { .. } => Gate::x(target),
            };
        }
        _ => gates.push(Gate::x(rng.random_range(0..m))),
    }
    let layers = gates.into_iter().map(|g| vec![g]).collect();
    ScheduledCircuit::from_layers(circuit.n_addr(), circuit.n_data(), layers).unwrap()
}

fn stabilizer_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut signed = 0;
    for trial in 0..500 {
        let p = rng.random_range(0.0..=1.0);
        let spec = random_spec(&mut rng, 1..=6, p);
        let circuit = schedule(&spec);
        let report = verify_superposed(&spec, &circuit);
        check(report.passed, || format!("trial {trial}: tableau mismatch"))?;
        let raw = simulate_superposed(&circuit).unwrap();
        check(stabilizes_state(&raw, &spec), || {
            format!("trial {trial}: a generator does not fix the state vector")
        })?;
        signed += usize::from(!spec.offset().is_zero());
    }
    let mut detected = 0;
    for _ in 0..100 {
        let p = rng.random_range(0.2..=0.8);
        let spec = random_spec(&mut rng, 1..=6, p);
        let broken = mutate(&schedule(&spec), &mut rng);
        detected += usize::from(!verify_superposed(&spec, &broken).passed);
    }
    check(detected >= 99, || {
        format!("only {detected}/100 mutations detected")
    })?;
    Ok(format!(
        "500 specs ({signed} with b != 0) match; {detected}/100 mutations detected"
    ))
}

fn cnot_law() -> Outcome {
    let config = ExperimentConfig {
        p_grid: (1..=9).map(|i| f64::from(i) / 10.0).collect(),
        ..ExperimentConfig::new(ExperimentKind::CnotVsDensity).with_trials(200)
    };
    let rows = cnot_count_vs_density(&config).unwrap();
    let mut worst: f64 = 0.0;
    for r in &rows {
        let mnp = (r.m * r.n) as f64 * r.p;
        let se = ((r.m * r.n) as f64 * r.p * (1.0 - r.p)).sqrt() / (r.count.count as f64).sqrt();
        let z = (r.count.mean - mnp).abs() / se;
        worst = worst.max(z);
        check(z <= 3.0, || {
            format!("p={}: mean {} is {z:.2} SE from {mnp}", r.p, r.count.mean)
        })?;
    }
    let ps: Vec<f64> = rows.iter().map(|r| r.p).collect();
    let means: Vec<f64> = rows.iter().map(|r| r.count.mean).collect();
    let (_, _, r2_p) = ols(&ps, &means);
    check(r2_p >= 0.99, || format!("R² vs p = {r2_p}"))?;

    let config = ExperimentConfig::new(ExperimentKind::CnotVsSize).with_trials(200);
    let rows = cnot_count_vs_size(&config).unwrap();
    let means: Vec<f64> = rows.iter().map(|r| r.count.mean).collect();
    let pred: Vec<f64> = rows.iter().map(|r| (r.n * r.n) as f64 * 0.5).collect();
    let r2_n = r2(&means, &pred);
    check(r2_n >= 0.99, || format!("R² vs n²p = {r2_n}"))?;
    Ok(format!(
        "max |z| = {worst:.2}; R² vs p = {r2_p:.5}; R² vs n²p = {r2_n:.5}"
    ))
}

fn depth_scaling() -> Outcome {
    let config = ExperimentConfig::new(ExperimentKind::DepthVsSize).with_trials(200);
    let rows = depth_vs_size(&config).unwrap();
    for r in &rows {
        check(r.depth.mean <= (r.n + 1) as f64, || {
            format!("n={}: mean depth {}", r.n, r.depth.mean)
        })?;
    }
    let ns: Vec<f64> = rows.iter().map(|r| r.n as f64).collect();
    let ds: Vec<f64> = rows.iter().map(|r| r.depth.mean).collect();
    let (slope, _, r2_n) = ols(&ns, &ds);
    check(r2_n >= 0.98, || format!("R² vs n = {r2_n}"))?;

    let config = ExperimentConfig::new(ExperimentKind::DepthVsDensity).with_trials(200);
    let rows = depth_vs_density(&config).unwrap();
    let ds: Vec<f64> = rows.iter().map(|r| r.depth.mean).collect();
    let inv = inversions(&ds, true);
    check(inv <= 1, || format!("{inv} inversions along p: {ds:?}"))?;
    let half = rows.iter().find(|r| r.p == 0.5).unwrap().depth.mean;
    check(half > 26.0 && half < 51.0, || {
        format!("p=0.5 mean depth {half}")
    })?;
    Ok(format!(
        "slope {slope:.3}/qubit, R² = {r2_n:.5}; {inv} inversions along p; p=0.5 mean {half:.2}"
    ))
}

fn rank_decorrelation() -> Outcome {
    let config = ExperimentConfig::new(ExperimentKind::RankVsDepth).with_trials(2000);
    let data = rank_vs_depth_scatter(&config).unwrap();
    let n = config.n;
    let w0 = &data.points[0];
    let w1 = &data.points[1];
    check((w0.rank, w0.depth) == (n, 1), || {
        format!("identity witness at {:?}", (w0.rank, w0.depth))
    })?;
    check((w1.rank, w1.depth) == (1, n + 1), || {
        format!("column witness at {:?}", (w1.rank, w1.depth))
    })?;
    check(data.points.len() == 2002, || {
        format!("{} points", data.points.len())
    })?;
    for pt in data.points[2..].iter().take(100) {
        let spec = AffineMap::random(n, n, pt.p.unwrap(), pt.seed).unwrap();
        let (a, _) = dense(&spec);
        check(naive_rank(&a) == pt.rank, || {
            format!("trial {}: rank differs", pt.trial)
        })?;
        check(naive_max_degree(&a) == pt.cnot_layers, || {
            format!("trial {}: Δ differs", pt.trial)
        })?;
    }
    let ranks: BTreeSet<usize> = data.points.iter().map(|p| p.rank).collect();
    let depths: BTreeSet<usize> = data.points.iter().map(|p| p.depth).collect();
    check(ranks.len() >= 5 && depths.len() >= 5, || {
        format!(
            "{} distinct ranks, {} distinct depths",
            ranks.len(),
            depths.len()
        )
    })?;
    let r = data
        .pearson_r
        .map_or("undefined".to_string(), |r| format!("{:.4}", r.abs()));
    Ok(format!(
        "witnesses present; {} ranks x {} depths; |pearson r| = {r}",
        ranks.len(),
        depths.len()
    ))
}

fn locality_trends() -> Outcome {
    let n = 12;
    let v = 2 * n;
    let config = ExperimentConfig {
        n,
        k_grid: vec![3, 4, 5, 6, 7, 8, 10, 12, 16, v - 1],
        ..ExperimentConfig::new(ExperimentKind::LocalityVsDensity).with_trials(50)
    };
    let cells = locality_vs_density(&config).unwrap();
    let kk = config.k_grid.len();
    let value = |c: &stabqram::experiments::HeatmapCell| c.stats.map_or(f64::NAN, |s| s.mean);
    let mut worst_k = 0;
    let mut worst_p = 0;
    for (pi, row) in cells.chunks(kk).enumerate() {
        check(row.iter().all(|c| c.status == "ok"), || {
            format!("p row {pi} has infeasible cells")
        })?;
        let vals: Vec<f64> = row.iter().map(value).collect();
        let inv = inversions(&vals, false);
        worst_k = worst_k.max(inv);
        check(inv <= 1, || {
            format!(
                "p={}: {inv} inversions along k: {vals:?}",
                config.p_grid[pi]
            )
        })?;
        let last = row.last().unwrap();
        check(last.k == v - 1 && value(last) == 1.0, || {
            format!("p={}: k=V-1 cell {}", last.p, value(last))
        })?;
    }
    for ki in 0..kk {
        let vals: Vec<f64> = cells.iter().skip(ki).step_by(kk).map(value).collect();
        let inv = inversions(&vals, true);
        worst_p = worst_p.max(inv);
        check(inv <= 1, || {
            format!(
                "k={}: {inv} inversions along p: {vals:?}",
                config.k_grid[ki]
            )
        })?;
    }
    Ok(format!(
        "n=m={n}, {} cells; worst inversions: {worst_k} along k, {worst_p} along p; k=V-1 all 1.0",
        cells.len()
    ))
}

fn lfsr_powers() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut summary = Vec::new();
    for _ in 0..20 {
        let width = rng.random_range(1..=12usize);
        let mask = (1u64 << width) - 1;
        let taps = rng.random::<u64>() & mask;
        let offset = rng.random::<u64>() & mask;
        let t = rng.random_range(1..=64u64);
        let lfsr = Lfsr::new(width, taps, offset).unwrap();
        let power = lfsr.step_map().power(t).unwrap();
        for x in 0..=mask {
            let mut y = x;
            for _ in 0..t {
                let fb = (y & taps).count_ones() as u64 & 1;
                y = (((y << 1) | fb) & mask) ^ offset;
            }
            let got = power
                .apply(&BitVector::from_u64(width, x))
                .unwrap()
                .to_u64();
            check(got == y, || {
                format!("width {width} taps {taps:#x} t={t}: state {x:#x}")
            })?;
        }
        let oracle = verify_oracle(&power, &schedule(&power), VerifyOptions::default());
        check(
            oracle.passed && oracle.mode == VerifyMode::Exhaustive,
            || format!("width {width} t={t}: oracle verification failed"),
        )?;
        check(
            lfsr_demo(&lfsr, t, VerifyOptions::default())
                .unwrap()
                .passed(),
            || format!("width {width} t={t}: demo failed"),
        )?;
        summary.push(format!("{width}/{t}"));
    }
    Ok(format!("width/t: {}", summary.join(" ")))
}

fn cli_output(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = stabqram::cli::run(
        std::iter::once("stabqram").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, out)
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let data = |name: &str| format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let spec = data("rand10.afs");
    let experiments: [&[&str]; 7] = [
        &["experiment", "depth-vs-density", "--trials", "20"],
        &["experiment", "depth-vs-size", "--trials", "20"],
        &["experiment", "rank-vs-depth", "--trials", "200"],
        &["experiment", "cnot-vs-density", "--trials", "20"],
        &["experiment", "cnot-vs-size", "--trials", "20"],
        &[
            "experiment",
            "locality-vs-density",
            "--trials",
            "5",
            "--n",
            "10",
        ],
        &["experiment", "locality-vs-size", "--trials", "5"],
    ];
    let commands: [&[&str]; 6] = [
        &["schedule", &spec],
        &["verify", &spec],
        &["simulate", &spec],
        &["map", &spec, "--k", "4"],
        &["resources", &spec],
        &[
            "lfsr", "--width", "10", "--taps", "0x240", "--offset", "5", "--steps", "99",
        ],
    ];
    let mut runs = 0;
    let mut produce = |args: &[&str], extra: &[&str], tag: &str| -> (Vec<u8>, Vec<u8>) {
        let path = dir.path().join(format!("out-{runs}-{tag}"));
        runs += 1;
        let mut full = vec!["--seed", "17", "--out", path.to_str().unwrap()];
        full.extend_from_slice(args);
        full.extend_from_slice(extra);
        let (code, stdout) = cli_output(&full);
        assert_eq!(code, 0, "{args:?}");
        (fs::read(&path).unwrap(), stdout)
    };
    for args in experiments {
        let a = produce(args, &["--jobs", "1"], "a");
        let b = produce(args, &["--jobs", "4"], "b");
        let c = produce(args, &[], "c");
        check(a.0 == b.0 && a.0 == c.0, || {
            format!("{args:?}: files differ across runs or worker counts")
        })?;
    }
    for args in commands {
        let a = produce(args, &[], "a");
        let b = produce(args, &[], "b");
        check(a == b, || format!("{args:?}: output differs between runs"))?;
    }
    Ok(format!(
        "7 experiments x 3 worker settings, 6 subcommands x 2 runs; {runs} runs byte-identical"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("scheduler optimality (König)", konig),
        ("oracle exactness", oracle_exactness),
        ("stabilizer equivalence", stabilizer_equivalence),
        ("CNOT count law", cnot_law),
        ("depth scaling", depth_scaling),
        ("rank decorrelation", rank_decorrelation),
        ("locality trends", locality_trends),
        ("LFSR affine powers", lfsr_powers),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name} [{secs:.1}s]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name} [{secs:.1}s]: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
