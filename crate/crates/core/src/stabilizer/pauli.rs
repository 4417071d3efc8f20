use std::fmt;

use crate::error::{Error, Result};
use crate::f2::BitVector;

/// A Hermitian Pauli operator `±P_0 ⊗ ... ⊗ P_{N-1}` in symplectic form.
///
/// Qubit `q` carries `I, X, Z, Y` for `(x, z) = (0,0), (1,0), (0,1), (1,1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitVector,
    z: BitVector,
    negative: bool,
}

impl PauliString {
    pub fn identity(num_qubits: usize) -> Self {
        Self {
            x: BitVector::zeros(num_qubits),
            z: BitVector::zeros(num_qubits),
            negative: false,
        }
    }

    pub fn new(x: BitVector, z: BitVector, negative: bool) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch {
                context: "pauli z part",
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(Self { x, z, negative })
    }

    pub fn z_on(num_qubits: usize, q: usize) -> Self {
        let mut p = Self::identity(num_qubits);
        p.z.set(q, true);
        p
    }

    /// Parses strings such as `"-ZZIZ"`, `"+XX"` or `"XYZ"`.
    pub fn parse(s: &str) -> Result<Self> {
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let n = body.chars().count();
        let mut p = Self::identity(n);
        p.negative = negative;
        for (q, c) in body.chars().enumerate() {
            match c {
                'I' => {}
                'X' => p.x.set(q, true),
                'Z' => p.z.set(q, true),
                'Y' => {
                    p.x.set(q, true);
                    p.z.set(q, true);
                }
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        message: format!("unexpected Pauli letter {other:?}"),
                    })
                }
            }
        }
        Ok(p)
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &BitVector {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVector {
        &self.z
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub(crate) fn x_bits_mut(&mut self) -> &mut BitVector {
        &mut self.x
    }

    pub(crate) fn z_bits_mut(&mut self) -> &mut BitVector {
        &mut self.z
    }

    pub(crate) fn toggle_sign(&mut self) {
        self.negative = !self.negative;
    }

    pub fn set_x(&mut self, q: usize, v: bool) {
        self.x.set(q, v);
    }

    pub fn set_z(&mut self, q: usize, v: bool) {
        self.z.set(q, v);
    }

    pub fn set_negative(&mut self, v: bool) {
        self.negative = v;
    }

    /// True when the two operators commute (symplectic product zero).
    pub fn commutes_with(&self, other: &PauliString) -> bool {
        self.x.dot(&other.z) == self.z.dot(&other.x)
    }

    /// Replaces `self` with `other * self`. The operators must commute, so
    /// the product is again Hermitian with a real sign.
    pub fn left_multiply(&mut self, other: &PauliString) {
        // Sum of the i-exponents picked up qubit by qubit, counted word-wise.
        let mut plus = 0u32;
        let mut minus = 0u32;
        let words = other
            .x
            .words()
            .iter()
            .zip(other.z.words())
            .zip(self.x.words().iter().zip(self.z.words()));
        for ((&x1, &z1), (&x2, &z2)) in words {
            let y1 = x1 & z1;
            let xo1 = x1 & !z1;
            let zo1 = !x1 & z1;
            plus += ((y1 & !x2 & z2) | (xo1 & x2 & z2) | (zo1 & x2 & !z2)).count_ones();
            minus += ((y1 & x2 & !z2) | (xo1 & !x2 & z2) | (zo1 & x2 & z2)).count_ones();
        }
        // minus counts -1 exponents, i.e. +3 mod 4
        let phase =
            (2 * u32::from(self.negative) + 2 * u32::from(other.negative) + plus + 3 * minus) % 4;
        assert!(
            phase.is_multiple_of(2),
            "multiplied anticommuting Pauli operators"
        );
        self.negative = phase == 2;
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        for q in 0..self.num_qubits() {
            let c = match (self.x.get(q), self.z.get(q)) {
                (false, false) => "I",
                (true, false) => "X",
                (false, true) => "Z",
                (true, true) => "Y",
            };
            f.write_str(c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}
