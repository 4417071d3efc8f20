use std::fmt;

use crate::f2::AffineMap;

use super::schedule::{schedule, ScheduledCircuit};

/// Gate and depth counts for one oracle.
///
/// `depth` counts the layers actually scheduled (no X layer when `b = 0`);
/// `paper_depth` is the closed form `max_degree + 1` that always reserves one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResourceReport {
    pub qubits: usize,
    pub cnot_count: usize,
    pub x_count: usize,
    pub t_count: usize,
    pub cnot_layers: usize,
    pub depth: usize,
    pub paper_depth: usize,
}

impl ResourceReport {
    pub fn of(spec: &AffineMap, circuit: &ScheduledCircuit) -> Self {
        Self {
            qubits: spec.input_len() + spec.output_len(),
            cnot_count: circuit.cnot_count(),
            x_count: circuit.x_count(),
            t_count: 0,
            cnot_layers: circuit.cnot_layer_count(),
            depth: circuit.depth(),
            paper_depth: circuit.cnot_layer_count() + 1,
        }
    }
}

pub fn resource_report(spec: &AffineMap) -> ResourceReport {
    ResourceReport::of(spec, &schedule(spec))
}

impl fmt::Display for ResourceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits: {}", self.qubits)?;
        writeln!(f, "cnot_count: {}", self.cnot_count)?;
        writeln!(f, "x_count: {}", self.x_count)?;
        writeln!(f, "t_count: {}", self.t_count)?;
        writeln!(f, "cnot_layers: {}", self.cnot_layers)?;
        writeln!(f, "depth: {}", self.depth)?;
        write!(f, "paper_depth: {}", self.paper_depth)
    }
}
