use std::fmt;

use crate::circuit::{Gate, ScheduledCircuit};
use crate::error::{Error, Result};
use crate::f2::BitVector;

use super::pauli::PauliString;

/// Stabilizer generators of an `N`-qubit pure state.
///
/// Only the `N` stabilizer rows are tracked; the gate set here (H, X, CNOT)
/// never needs destabilizers because nothing is measured.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StabilizerTableau {
    num_qubits: usize,
    rows: Vec<PauliString>,
}

impl StabilizerTableau {
    /// `|0...0>`, stabilized by every `Z_q`.
    pub fn new(num_qubits: usize) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::EmptyTableau);
        }
        Ok(Self {
            num_qubits,
            rows: (0..num_qubits)
                .map(|q| PauliString::z_on(num_qubits, q))
                .collect(),
        })
    }

    /// A tableau from explicit generators. Fails unless there are exactly `N`
    /// independent, pairwise commuting `N`-qubit operators.
    pub fn from_generators(rows: Vec<PauliString>) -> Result<Self> {
        let num_qubits = rows.len();
        if num_qubits == 0 {
            return Err(Error::EmptyTableau);
        }
        for r in &rows {
            if r.num_qubits() != num_qubits {
                return Err(Error::DimensionMismatch {
                    context: "generator width",
                    expected: num_qubits,
                    found: r.num_qubits(),
                });
            }
        }
        let t = Self { num_qubits, rows };
        if !t.rows_commute() || t.symplectic_rank() != num_qubits {
            return Err(Error::InvalidConfig(
                "generators must commute and be independent".into(),
            ));
        }
        Ok(t)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn rows(&self) -> &[PauliString] {
        &self.rows
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.num_qubits {
            return Err(Error::QubitOutOfRange {
                index: q,
                num_qubits: self.num_qubits,
            });
        }
        Ok(())
    }

    pub fn apply_h(&mut self, q: usize) -> Result<()> {
        self.check_qubit(q)?;
        for row in &mut self.rows {
            let (x, z) = (row.x_bits().get(q), row.z_bits().get(q));
            if x && z {
                row.toggle_sign();
            }
            row.set_x(q, z);
            row.set_z(q, x);
        }
        self.debug_check();
        Ok(())
    }

    pub fn apply_x(&mut self, q: usize) -> Result<()> {
        self.check_qubit(q)?;
        for row in &mut self.rows {
            if row.z_bits().get(q) {
                row.toggle_sign();
            }
        }
        Ok(())
    }

    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<()> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::SameQubit(control));
        }
        for row in &mut self.rows {
            let xc = row.x_bits().get(control);
            let zc = row.z_bits().get(control);
            let xt = row.x_bits().get(target);
            let zt = row.z_bits().get(target);
            if xc && zt && (xt == zc) {
                row.toggle_sign();
            }
            if xc {
                row.x_bits_mut().flip(target);
            }
            if zt {
                row.z_bits_mut().flip(control);
            }
        }
        self.debug_check();
        Ok(())
    }

    /// Applies the oracle layer by layer. Address qubit `k` is qubit `k`,
    /// data qubit `j` is qubit `n_addr + j`.
    pub fn apply_oracle(&mut self, circuit: &ScheduledCircuit) -> Result<()> {
        let needed = circuit.n_addr() + circuit.n_data();
        if needed != self.num_qubits {
            return Err(Error::DimensionMismatch {
                context: "oracle register",
                expected: self.num_qubits,
                found: needed,
            });
        }
        let offset = circuit.n_addr();
        for gate in circuit.gates() {
            match *gate {
                Gate::Cnot { control, target } => self.apply_cnot(control, offset + target)?,
                Gate::X { target } => self.apply_x(offset + target)?,
            }
        }
        Ok(())
    }

    /// All generator pairs commute.
    pub fn rows_commute(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, a)| self.rows[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Rank over F2 of the `N x 2N` matrix `[x | z]`.
    pub fn symplectic_rank(&self) -> usize {
        let n = self.num_qubits;
        let stacked = self
            .rows
            .iter()
            .map(|r| {
                let mut v = BitVector::zeros(2 * n);
                for q in r.x_bits().iter_ones() {
                    v.set(q, true);
                }
                for q in r.z_bits().iter_ones() {
                    v.set(n + q, true);
                }
                v
            })
            .collect();
        crate::f2::BitMatrix::from_rows(2 * n, stacked)
            .expect("rows have width 2N")
            .rank()
    }

    /// Independent and pairwise commuting generators.
    pub fn is_valid(&self) -> bool {
        self.rows_commute() && self.symplectic_rank() == self.num_qubits
    }

    fn debug_check(&self) {
        #[cfg(test)]
        debug_assert!(self.num_qubits > 16 || self.is_valid());
    }

    /// Reduced row-echelon form of the generators, with signs carried through
    /// the row products.
    ///
    /// Pivot columns are scanned over the X block left to right, then the Z
    /// block; the lowest eligible row becomes the pivot. Two tableaus describe the
    /// same state exactly when their canonical forms are equal.
    pub fn canonical_form(&self) -> StabilizerTableau {
        let n = self.num_qubits;
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..2 * n {
            let bit = |r: &PauliString| {
                if col < n {
                    r.x_bits().get(col)
                } else {
                    r.z_bits().get(col - n)
                }
            };
            let Some(pivot) = (rank..n).find(|&r| bit(&rows[r])) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && bit(row) {
                    row.left_multiply(&pivot_row);
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        StabilizerTableau {
            num_qubits: n,
            rows,
        }
    }

    /// For a computational basis state, the bit value of every qubit.
    pub fn basis_state_bits(&self) -> Option<BitVector> {
        let canon = self.canonical_form();
        let mut bits = BitVector::zeros(self.num_qubits);
        for (q, row) in canon.rows.iter().enumerate() {
            if !row.x_bits().is_zero() || row.z_bits().weight() != 1 || !row.z_bits().get(q) {
                return None;
            }
            bits.set(q, row.is_negative());
        }
        Some(bits)
    }
}

impl fmt::Display for StabilizerTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StabilizerTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StabilizerTableau[")?;
        for row in &self.rows {
            write!(f, " {row}")?;
        }
        write!(f, " ]")
    }
}
