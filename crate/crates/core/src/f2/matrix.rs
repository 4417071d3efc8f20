use std::fmt;

use super::bitvec::BitVector;
use super::rng;
use crate::error::{Error, Result};

/// A dense `rows x cols` matrix over F2 stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::ones(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    /// Builds a matrix from explicit rows. `cols` is needed for the `rows == 0` case.
    pub fn from_rows(cols: usize, data: Vec<BitVector>) -> Result<Self> {
        for row in &data {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: "matrix row",
                    expected: cols,
                    found: row.len(),
                });
            }
        }
        Ok(Self {
            rows: data.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor from `'0'`/`'1'` strings, one per row.
    pub fn from_rows_str(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                BitVector::parse(r).map_err(|e| match e {
                    Error::Parse { message, .. } => Error::Parse {
                        line: i + 1,
                        message,
                    },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, data)
    }

    /// Builds a matrix where entry `(i, j)` is `f(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Entries drawn independently, 1 with probability `p`.
    ///
    /// One 64-bit draw per entry in row-major order from the stream of
    /// [`rng::stream`]; an entry is 1 iff `draw < p * 2^64`. Equal arguments give
    /// bit-identical matrices on every platform.
    pub fn random(rows: usize, cols: usize, p: f64, seed: u64) -> Result<Self> {
        let threshold = rng::bernoulli_threshold(p)?;
        let mut stream = rng::stream(seed);
        Ok(Self::from_fn(rows, cols, |_, _| {
            rng::bernoulli_draw(&mut stream, threshold)
        }))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.data[row].get(col)
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.data[row].set(col, value)
    }

    pub fn row(&self, row: usize) -> &BitVector {
        &self.data[row]
    }

    pub fn row_mut(&mut self, row: usize) -> &mut BitVector {
        &mut self.data[row]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &BitVector> {
        self.data.iter()
    }

    pub fn column(&self, col: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            if row.get(col) {
                v.set(i, true);
            }
        }
        v
    }

    /// Total number of ones.
    pub fn hamming_weight(&self) -> usize {
        self.data.iter().map(BitVector::weight).sum()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.data.iter().map(BitVector::weight).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for row in &self.data {
            for c in row.iter_ones() {
                w[c] += 1;
            }
        }
        w
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    /// `(row, col)` of every one, in row-major order.
    pub fn iter_ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter_ones().map(move |j| (i, j)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j) in self.iter_ones() {
            t.set(j, i, true);
        }
        t
    }

    /// `A x`: bit `j` of the result is the parity of `row_j AND x`.
    pub fn matvec(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matvec input",
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows);
        for (j, row) in self.data.iter().enumerate() {
            if row.dot(x) {
                out.set(j, true);
            }
        }
        Ok(out)
    }

    /// Matrix product over F2.
    pub fn matmul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: "matmul inner dimension",
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(rhs.cols);
                for k in row.iter_ones() {
                    acc.xor_assign(&rhs.data[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    /// Row rank over F2 by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let (top, rest) = rows.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in rest.iter_mut() {
                if row.get(col) {
                    row.xor_assign(pivot_row);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}
