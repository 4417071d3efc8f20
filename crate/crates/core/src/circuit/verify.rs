use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::f2::{rng, AffineMap, BitMatrix, BitVector};

use super::gate::Gate;
use super::schedule::ScheduledCircuit;

/// Classical action of the circuit on `|x>|0...0>`: returns the data register.
///
/// Every CNOT and X here commutes with every other, so layer order does not matter.
pub fn evaluate_basis(circuit: &ScheduledCircuit, x: &BitVector) -> Result<BitVector> {
    if x.len() != circuit.n_addr() {
        return Err(Error::DimensionMismatch {
            context: "address register",
            expected: circuit.n_addr(),
            found: x.len(),
        });
    }
    let mut data = BitVector::zeros(circuit.n_data());
    for gate in circuit.gates() {
        match *gate {
            Gate::Cnot { control, target } => {
                if x.get(control) {
                    data.flip(target);
                }
            }
            Gate::X { target } => data.flip(target),
        }
    }
    Ok(data)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Address widths up to this value are checked on all `2^n` inputs.
    pub max_exhaustive_n: usize,
    /// Number of uniformly random inputs checked above the exhaustive limit.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_exhaustive_n: 16,
            samples: 10_000,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: BitVector,
    pub expected: BitVector,
    pub actual: BitVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub passed: bool,
    pub mode: VerifyMode,
    pub inputs_tested: u64,
    pub counterexample: Option<Counterexample>,
    /// Set when the circuit's register sizes do not match the spec.
    pub shape_error: Option<String>,
}

/// Compares the circuit against `A x + b` on every input (small `n`) or on
/// seeded random inputs. The reported counterexample is the first failing input
/// in enumeration or sample order, whatever the thread count.
pub fn verify_oracle(
    spec: &AffineMap,
    circuit: &ScheduledCircuit,
    options: VerifyOptions,
) -> OracleReport {
    let n = spec.input_len();
    let exhaustive = n <= options.max_exhaustive_n.min(63);
    let mode = if exhaustive {
        VerifyMode::Exhaustive
    } else {
        VerifyMode::Sampled
    };

    if circuit.n_addr() != n || circuit.n_data() != spec.output_len() {
        return OracleReport {
            passed: false,
            mode,
            inputs_tested: 0,
            counterexample: None,
            shape_error: Some(format!(
                "circuit acts on {}+{} qubits, spec needs {}+{}",
                circuit.n_addr(),
                circuit.n_data(),
                n,
                spec.output_len()
            )),
        };
    }

    let check = |x: BitVector| -> Option<Counterexample> {
        let expected = spec.apply(&x).expect("length checked");
        let actual = evaluate_basis(circuit, &x).expect("length checked");
        (expected != actual).then_some(Counterexample {
            input: x,
            expected,
            actual,
        })
    };

    let total = if exhaustive {
        1u64 << n
    } else {
        options.samples as u64
    };
    let counterexample = (0..total).into_par_iter().find_map_first(|i| {
        let x = if exhaustive {
            BitVector::from_u64(n, i)
        } else {
            sample_input(n, options.seed, i)
        };
        check(x)
    });

    OracleReport {
        passed: counterexample.is_none(),
        mode,
        inputs_tested: total,
        counterexample,
        shape_error: None,
    }
}

fn sample_input(n: usize, seed: u64, index: u64) -> BitVector {
    BitMatrix::random(1, n, 0.5, rng::derive_seed(seed, &[index]))
        .expect("0.5 is a valid density")
        .row(0)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::schedule::schedule;
    use crate::f2::BitMatrix;

    fn spec(rows: &[&str], b: &str) -> AffineMap {
        AffineMap::new(
            BitMatrix::from_rows_str(rows).unwrap(),
            BitVector::parse(b).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let c = schedule(&AffineMap::identity(3));
        let x = BitVector::parse("101").unwrap();
        assert_eq!(evaluate_basis(&c, &x).unwrap(), x);

        let c = schedule(&spec(&["00", "00"], "11"));
        for v in 0..4 {
            assert_eq!(
                evaluate_basis(&c, &BitVector::from_u64(2, v))
                    .unwrap()
                    .to_string(),
                "11"
            );
        }

        // A x = 10, plus b = 10 gives 00
        let c = schedule(&spec(&["11", "01"], "10"));
        let out = evaluate_basis(&c, &BitVector::parse("10").unwrap()).unwrap();
        assert_eq!(out.to_string(), "00");

        assert!(evaluate_basis(&c, &BitVector::zeros(3)).is_err());
    }

    #[test]
    fn own_schedule_passes_exhaustively() {
        let s = AffineMap::random(5, 7, 0.5, 1).unwrap();
        let r = verify_oracle(&s, &schedule(&s), VerifyOptions::default());
        assert!(r.passed);
        assert_eq!(r.mode, VerifyMode::Exhaustive);
        assert_eq!(r.inputs_tested, 128);
    }

    #[test]
    fn deleted_cnot_is_caught() {
        let s = AffineMap::identity(2);
        // drop CNOT x1 -> d1
        let broken = ScheduledCircuit::from_layers(2, 2, vec![vec![Gate::cnot(0, 0)]]).unwrap();
        let r = verify_oracle(&s, &broken, VerifyOptions::default());
        assert!(!r.passed);
        let cx = r.counterexample.unwrap();
        assert!(cx.input.get(1));
        assert_eq!(cx.input.to_string(), "01");
    }

    #[test]
    fn wide_spec_is_sampled() {
        let s = AffineMap::random(20, 20, 0.3, 4).unwrap();
        let r = verify_oracle(&s, &schedule(&s), VerifyOptions::default());
        assert!(r.passed);
        assert_eq!(r.mode, VerifyMode::Sampled);
        assert_eq!(r.inputs_tested, 10_000);
    }

    #[test]
    fn shape_mismatch_fails() {
        let s = AffineMap::identity(3);
        let r = verify_oracle(
            &s,
            &schedule(&AffineMap::identity(2)),
            VerifyOptions::default(),
        );
        assert!(!r.passed);
        assert!(r.shape_error.is_some());
    }
}
