//! Check a random oracle on every basis input and on the uniform superposition
//! of addresses, then show that a single dropped gate is caught.
//!
//! Run with `cargo run --example verify_oracle`.

use stabqram::circuit::{schedule, verify_oracle, ScheduledCircuit, VerifyOptions};
use stabqram::f2::AffineMap;
use stabqram::stabilizer::verify_superposed;

fn main() -> stabqram::Result<()> {
    let spec = AffineMap::random(5, 6, 0.4, 11)?;
    let circuit = schedule(&spec);

    let basis = verify_oracle(&spec, &circuit, VerifyOptions::default());
    let superposed = verify_superposed(&spec, &circuit);
    println!(
        "basis: {} inputs, passed={}",
        basis.inputs_tested, basis.passed
    );
    println!("superposed: passed={}", superposed.passed);
    if let Some(t) = &superposed.actual {
        for row in t.rows() {
            println!("  {row}");
        }
    }

    let mut layers = circuit.layers().to_vec();
    let dropped = layers[0].pop().expect("first layer is non-empty");
    let broken = ScheduledCircuit::from_layers(circuit.n_addr(), circuit.n_data(), layers)?;
    let basis = verify_oracle(&spec, &broken, VerifyOptions::default());
    println!("without {dropped}: basis passed={}", basis.passed);
    if let Some(c) = basis.counterexample {
        println!("  x={} expected={} got={}", c.input, c.expected, c.actual);
    }
    println!(
        "without {dropped}: superposed passed={}",
        verify_superposed(&spec, &broken).passed
    );
    Ok(())
}
