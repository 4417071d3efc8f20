//! Compiler and verifier for all-Clifford QRAM oracles over affine Boolean data.
//!
//! An affine function `f(x) = A x + b` over F2 is loaded by a circuit that uses
//! nothing but CNOT and X gates: one `CNOT(x_k -> d_j)` for every `A[j][k] = 1`
//! and one `X(d_j)` for every `b[j] = 1`. The crate covers the whole pipeline:
//!
//! - [`f2`]: bit-packed matrices and vectors over F2, affine maps, seeded sampling
//!   and the `.afs` text format.
//! - [`circuit`]: gate synthesis, the bipartite interaction graph, depth-optimal
//!   layering by bipartite edge coloring, classical verification and resource counts.
//! - [`stabilizer`]: a small stabilizer-tableau simulator that checks the oracle on
//!   the uniform superposition of addresses.
//! - [`hardware`]: random k-regular hardware graphs, greedy placement and
//!   SWAP-distance metrics.
//! - [`experiments`]: seeded, deterministic sweeps that emit CSV.
//! - [`cli`]: the `stabqram` command line front end.
//!
//! ```
//! use stabqram::f2::{AffineMap, BitMatrix, BitVector};
//! use stabqram::circuit::schedule;
//!
//! let a = BitMatrix::from_rows_str(&["11", "11"]).unwrap();
//! let b = BitVector::parse("01").unwrap();
//! let spec = AffineMap::new(a, b).unwrap();
//! let circuit = schedule(&spec);
//! assert_eq!(circuit.cnot_layer_count(), 2);
//! assert_eq!(circuit.depth(), 3);
//! ```

pub mod circuit;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod f2;
pub mod hardware;
pub mod stabilizer;

pub use error::{Error, Result};
