//! Jump a shift register forward `t` steps with a single affine oracle.
//!
//! Run with `cargo run --release --example lfsr_jump`.

use stabqram::circuit::VerifyOptions;
use stabqram::experiments::{lfsr_demo, Lfsr};

fn main() -> stabqram::Result<()> {
    // x^4 + x^3 + 1 has period 15, so 15 steps is the identity
    let small = Lfsr::new(4, 0b1001, 0)?;
    for t in [1, 7, 15] {
        println!("{}\n", lfsr_demo(&small, t, VerifyOptions::default())?);
    }

    let wide = Lfsr::new(16, 0b1101_0000_0000_1000, 0x00ff)?;
    let options = VerifyOptions {
        max_exhaustive_n: 12,
        samples: 2_000,
        seed: 3,
    };
    println!("{}", lfsr_demo(&wide, 1000, options)?);
    Ok(())
}
