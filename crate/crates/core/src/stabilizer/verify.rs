use crate::circuit::ScheduledCircuit;
use crate::error::Result;
use crate::f2::AffineMap;

use super::pauli::PauliString;
use super::tableau::StabilizerTableau;

/// Generators of `2^{-n/2} sum_x |x>|A x + b>` on `n + m` qubits (addresses first).
///
/// - address `k`: `X` on `x_k` and on every `d_j` with `A[j][k] = 1`, sign `+`;
/// - data `j`: `Z` on `d_j` and on every `x_k` with `A[j][k] = 1`, sign `(-1)^{b_j}`.
pub fn expected_oracle_stabilizers(spec: &AffineMap) -> Vec<PauliString> {
    let n = spec.input_len();
    let m = spec.output_len();
    let a = spec.matrix();
    let mut out = Vec::with_capacity(n + m);
    for k in 0..n {
        let mut p = PauliString::identity(n + m);
        p.set_x(k, true);
        for j in 0..m {
            if a.get(j, k) {
                p.set_x(n + j, true);
            }
        }
        out.push(p);
    }
    for j in 0..m {
        let mut p = PauliString::identity(n + m);
        p.set_z(n + j, true);
        for k in a.row(j).iter_ones() {
            p.set_z(k, true);
        }
        p.set_negative(spec.offset().get(j));
        out.push(p);
    }
    out
}

/// Tableau after `H` on every address qubit of `|0...0>` followed by the circuit.
pub fn simulate_superposed(circuit: &ScheduledCircuit) -> Result<StabilizerTableau> {
    let mut t = StabilizerTableau::new(circuit.n_addr() + circuit.n_data())?;
    for k in 0..circuit.n_addr() {
        t.apply_h(k)?;
    }
    t.apply_oracle(circuit)?;
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperposedReport {
    pub passed: bool,
    pub actual: Option<StabilizerTableau>,
    pub expected: Option<StabilizerTableau>,
    pub error: Option<String>,
}

/// Checks the circuit on the uniform address superposition by comparing
/// canonical stabilizer tableaus, signs included.
pub fn verify_superposed(spec: &AffineMap, circuit: &ScheduledCircuit) -> SuperposedReport {
    let fail = |error: String| SuperposedReport {
        passed: false,
        actual: None,
        expected: None,
        error: Some(error),
    };
    if circuit.n_addr() != spec.input_len() || circuit.n_data() != spec.output_len() {
        return fail(format!(
            "circuit acts on {}+{} qubits, spec needs {}+{}",
            circuit.n_addr(),
            circuit.n_data(),
            spec.input_len(),
            spec.output_len()
        ));
    }
    let actual = match simulate_superposed(circuit) {
        Ok(t) => t.canonical_form(),
        Err(e) => return fail(e.to_string()),
    };
    let expected = match StabilizerTableau::from_generators(expected_oracle_stabilizers(spec)) {
        Ok(t) => t.canonical_form(),
        Err(e) => return fail(e.to_string()),
    };
    SuperposedReport {
        passed: actual == expected,
        actual: Some(actual),
        expected: Some(expected),
        error: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::schedule;
    use crate::f2::{BitMatrix, BitVector};

    fn spec(rows: &[&str], b: &str) -> AffineMap {
        AffineMap::new(
            BitMatrix::from_rows_str(rows).unwrap(),
            BitVector::parse(b).unwrap(),
        )
        .unwrap()
    }

    fn names(ps: &[PauliString]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    // Dense state-vector oracle: amplitudes of sum_x |x>|Ax+b>, qubit 0 = lowest bit.
    fn state_vector(s: &AffineMap) -> Vec<f64> {
        let (n, m) = (s.input_len(), s.output_len());
        let mut psi = vec![0.0; 1 << (n + m)];
        for x in 0u64..1 << n {
            let y = s.apply(&BitVector::from_u64(n, x)).unwrap().to_u64();
            psi[(x | y << n) as usize] += 1.0;
        }
        psi
    }

    // Applies a real Pauli string (no Y) to a state vector.
    fn apply_pauli(p: &PauliString, psi: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; psi.len()];
        let xmask = p.x_bits().to_u64() as usize;
        let zmask = p.z_bits().to_u64() as usize;
        assert_eq!(xmask & zmask, 0);
        for (i, &a) in psi.iter().enumerate() {
            let sign = if (i & zmask).count_ones() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            out[i ^ xmask] += a * sign * if p.is_negative() { -1.0 } else { 1.0 };
        }
        out
    }

    #[test]
    fn expected_generators_examples() {
        assert_eq!(
            names(&expected_oracle_stabilizers(&spec(&["1"], "0"))),
            ["+XX", "+ZZ"]
        );
        assert_eq!(
            names(&expected_oracle_stabilizers(&spec(&["0"], "0"))),
            ["+XI", "+IZ"]
        );
        assert_eq!(
            names(&expected_oracle_stabilizers(&spec(&["11"], "1"))),
            ["+XIX", "+IXX", "-ZZZ"]
        );
    }

    #[test]
    fn expected_generators_fix_the_state_vector() {
        for seed in 0..30 {
            let s = AffineMap::random(3, 3, 0.5, seed).unwrap();
            let psi = state_vector(&s);
            for g in expected_oracle_stabilizers(&s) {
                assert_eq!(apply_pauli(&g, &psi), psi, "{g} seed {seed}");
            }
        }
    }

    #[test]
    fn oracle_on_superposition() {
        let t = simulate_superposed(&schedule(&spec(&["1"], "0"))).unwrap();
        assert_eq!(t.canonical_form().to_string(), "+XX\n+ZZ");
        let t = simulate_superposed(&schedule(&spec(&["1"], "1"))).unwrap();
        assert_eq!(t.canonical_form().to_string(), "+XX\n-ZZ");
    }

    #[test]
    fn identity_oracle_leaves_zero_state() {
        let c = schedule(&AffineMap::identity(3));
        let mut t = StabilizerTableau::new(6).unwrap();
        t.apply_oracle(&c).unwrap();
        assert_eq!(
            t.canonical_form(),
            StabilizerTableau::new(6).unwrap().canonical_form()
        );
        let mut small = StabilizerTableau::new(5).unwrap();
        assert!(small.apply_oracle(&c).is_err());
    }

    #[test]
    fn verify_passes_and_catches_sign_errors() {
        for seed in 0..50 {
            let s = AffineMap::random(4, 5, 0.5, seed).unwrap();
            assert!(verify_superposed(&s, &schedule(&s)).passed);
        }
        let s = spec(&["10", "11"], "01");
        let good = schedule(&s);
        assert!(verify_superposed(&s, &good).passed);
        let mut flipped = s.offset().clone();
        flipped.flip(0);
        let wrong = schedule(&AffineMap::new(s.matrix().clone(), flipped).unwrap());
        let r = verify_superposed(&s, &wrong);
        assert!(!r.passed);
        assert_ne!(r.actual, r.expected);
    }

    #[test]
    fn zero_spec_passes() {
        let s = AffineMap::linear(BitMatrix::zeros(3, 2));
        assert!(verify_superposed(&s, &schedule(&s)).passed);
    }

    #[test]
    fn basis_inputs_agree_with_classical_evaluation() {
        for seed in 0..20 {
            let s = AffineMap::random(3, 4, 0.5, seed).unwrap();
            let c = schedule(&s);
            for x in 0u64..16 {
                let mut t = StabilizerTableau::new(7).unwrap();
                for k in 0..4 {
                    if x >> k & 1 == 1 {
                        t.apply_x(k).unwrap();
                    }
                }
                t.apply_oracle(&c).unwrap();
                let bits = t.basis_state_bits().unwrap().to_u64();
                let xv = BitVector::from_u64(4, x);
                let data = crate::circuit::evaluate_basis(&c, &xv).unwrap().to_u64();
                assert_eq!(bits, x | data << 4);
            }
        }
    }
}
