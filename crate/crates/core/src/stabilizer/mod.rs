//! Stabilizer-tableau simulation of the oracle on superposed addresses.

mod pauli;
mod tableau;
mod verify;

pub use pauli::PauliString;
pub use tableau::StabilizerTableau;
pub use verify::{
    expected_oracle_stabilizers, simulate_superposed, verify_superposed, SuperposedReport,
};
