//! Linear algebra over F2.

mod affine;
mod afs;
mod bitvec;
mod matrix;
pub mod rng;

pub use affine::AffineMap;
pub use afs::{parse_afs, write_afs};
pub use bitvec::BitVector;
pub use matrix::BitMatrix;
