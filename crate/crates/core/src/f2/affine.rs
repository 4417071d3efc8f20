use super::bitvec::BitVector;
use super::matrix::BitMatrix;
use crate::error::{Error, Result};

/// An affine map `x -> A x + b` over F2, with `A` of shape `m x n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    a: BitMatrix,
    b: BitVector,
}

impl AffineMap {
    pub fn new(a: BitMatrix, b: BitVector) -> Result<Self> {
        if b.len() != a.rows() {
            return Err(Error::DimensionMismatch {
                context: "affine offset",
                expected: a.rows(),
                found: b.len(),
            });
        }
        Ok(Self { a, b })
    }

    /// The linear map `A` with zero offset.
    pub fn linear(a: BitMatrix) -> Self {
        let b = BitVector::zeros(a.rows());
        Self { a, b }
    }

    pub fn identity(n: usize) -> Self {
        Self::linear(BitMatrix::identity(n))
    }

    /// Random `m x n` map whose matrix and offset entries are 1 with probability `p`.
    ///
    /// The matrix is drawn with `seed`; the offset uses an independent derived seed,
    /// so `random(.., p, seed).matrix()` equals `BitMatrix::random(m, n, p, seed)`.
    pub fn random(m: usize, n: usize, p: f64, seed: u64) -> Result<Self> {
        let a = BitMatrix::random(m, n, p, seed)?;
        let offset = BitMatrix::random(1, m, p, super::rng::derive_seed(seed, &[0x0ff5e7]))?;
        Ok(Self {
            a,
            b: offset.row(0).clone(),
        })
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.a
    }

    pub fn offset(&self) -> &BitVector {
        &self.b
    }

    pub fn into_parts(self) -> (BitMatrix, BitVector) {
        (self.a, self.b)
    }

    /// Address width `n`.
    pub fn input_len(&self) -> usize {
        self.a.cols()
    }

    /// Data width `m`.
    pub fn output_len(&self) -> usize {
        self.a.rows()
    }

    pub fn is_square(&self) -> bool {
        self.a.rows() == self.a.cols()
    }

    pub fn apply(&self, x: &BitVector) -> Result<BitVector> {
        let mut y = self.a.matvec(x)?;
        y.xor_assign(&self.b);
        Ok(y)
    }

    /// `outer . inner`, i.e. `x -> outer(inner(x))`.
    pub fn compose(outer: &AffineMap, inner: &AffineMap) -> Result<AffineMap> {
        if outer.a.cols() != inner.a.rows() {
            return Err(Error::DimensionMismatch {
                context: "compose inner output",
                expected: outer.a.cols(),
                found: inner.a.rows(),
            });
        }
        let a = outer.a.matmul(&inner.a)?;
        let mut b = outer.a.matvec(&inner.b)?;
        b.xor_assign(&outer.b);
        Ok(AffineMap { a, b })
    }

    /// The `t`-fold self-composition, by repeated squaring of the augmented
    /// `(n+1) x (n+1)` matrix `[[A, b], [0, 1]]`.
    pub fn power(&self, mut t: u64) -> Result<AffineMap> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.a.rows(),
                cols: self.a.cols(),
            });
        }
        let n = self.a.rows();
        let mut result = BitMatrix::identity(n + 1);
        let mut base = self.augmented();
        while t > 0 {
            if t & 1 == 1 {
                result = result.matmul(&base)?;
            }
            t >>= 1;
            if t > 0 {
                base = base.matmul(&base)?;
            }
        }
        Ok(Self::from_augmented(&result))
    }

    fn augmented(&self) -> BitMatrix {
        let n = self.a.rows();
        BitMatrix::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
            (true, true) => self.a.get(i, j),
            (true, false) => self.b.get(i),
            (false, false) => true,
            (false, true) => false,
        })
    }

    fn from_augmented(m: &BitMatrix) -> AffineMap {
        let n = m.rows() - 1;
        let a = BitMatrix::from_fn(n, n, |i, j| m.get(i, j));
        let b = BitVector::from_bools(&(0..n).map(|i| m.get(i, n)).collect::<Vec<_>>());
        AffineMap { a, b }
    }
}
