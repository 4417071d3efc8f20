//! Text and CSV renderings of a scheduled circuit.
//!
//! Text:
//! ```text
//! # stabqram circuit n=2 m=2 delta=2 depth=3
//! layer 0: CNOT x0 d1; CNOT x1 d0
//! layer 1: CNOT x0 d0; CNOT x1 d1
//! layer 2: X d1
//! ```
//!
//! CSV: header `layer,kind,control,target`, one gate per row, empty control for X.

use std::fmt::Write as _;
use std::io::Read;

use crate::error::{Error, Result};

use super::gate::Gate;
use super::schedule::ScheduledCircuit;

pub fn write_text(circuit: &ScheduledCircuit) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# stabqram circuit n={} m={} delta={} depth={}",
        circuit.n_addr(),
        circuit.n_data(),
        circuit.cnot_layer_count(),
        circuit.depth()
    );
    for (i, layer) in circuit.layers().iter().enumerate() {
        let gates: Vec<String> = layer.iter().map(Gate::to_string).collect();
        let _ = writeln!(out, "layer {i}: {}", gates.join("; "));
    }
    out
}

pub fn write_csv(circuit: &ScheduledCircuit) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["layer", "kind", "control", "target"])?;
    for (i, layer) in circuit.layers().iter().enumerate() {
        for gate in layer {
            let control = gate.control().map(|c| c.to_string()).unwrap_or_default();
            w.write_record([
                i.to_string(),
                gate.kind().to_string(),
                control,
                gate.target().to_string(),
            ])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is ascii"))
}

/// Rebuilds a circuit from its CSV form. Lines starting with `#` are skipped.
pub fn read_csv(reader: impl Read, n_addr: usize, n_data: usize) -> Result<ScheduledCircuit> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["layer", "kind", "control", "target"] {
        return Err(Error::Parse {
            line: 1,
            message: "expected header layer,kind,control,target".into(),
        });
    }

    let mut layers: Vec<Vec<Gate>> = Vec::new();
    for record in rdr.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let bad = |what: &str| Error::Parse {
            line,
            message: what.to_string(),
        };
        let num = |s: &str, what: &str| s.parse::<usize>().map_err(|_| bad(what));
        let layer = num(&record[0], "bad layer index")?;
        let target = num(&record[3], "bad target index")?;
        let gate = match &record[1] {
            "CNOT" => Gate::cnot(num(&record[2], "bad control index")?, target),
            "X" if record[2].is_empty() => Gate::x(target),
            "X" => return Err(bad("X gate cannot have a control")),
            other => return Err(bad(&format!("unknown gate kind {other:?}"))),
        };
        if layers.len() <= layer {
            layers.resize(layer + 1, Vec::new());
        }
        layers[layer].push(gate);
    }
    ScheduledCircuit::from_layers(n_addr, n_data, layers)
}
