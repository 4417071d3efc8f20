//! Compile `f(x) = A x + b` into layered CNOT/X gates and print resources.
//!
//! Run with `cargo run --example schedule_oracle`.

use stabqram::circuit::{resource_report, schedule, write_text};
use stabqram::f2::{parse_afs, write_afs};

fn main() -> stabqram::Result<()> {
    let spec = parse_afs("4 3\n1100\n0111\n1011\n101\n")?;
    print!("{}", write_afs(&spec));
    let circuit = schedule(&spec);
    print!("{}", write_text(&circuit));
    println!("{}", resource_report(&spec));
    Ok(())
}
