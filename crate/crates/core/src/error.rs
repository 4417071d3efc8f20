use thiserror::Error;

/// Errors produced across the compiler, simulator and hardware model.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{context}: length mismatch (expected {expected}, found {found})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("density {0} is outside [0, 1]")]
    InvalidDensity(f64),

    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("control and target are the same qubit ({0})")]
    SameQubit(usize),

    #[error("a tableau needs at least one qubit")]
    EmptyTableau,

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("no simple regular graph found after {attempts} attempts")]
    GenerationFailed { attempts: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
