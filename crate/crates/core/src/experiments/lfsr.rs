use std::fmt;

use rayon::prelude::*;

use crate::circuit::{evaluate_basis, schedule, ResourceReport, VerifyMode, VerifyOptions};
use crate::error::{Error, Result};
use crate::f2::rng::{derive_seed, stream};
use crate::f2::{AffineMap, BitMatrix, BitVector};

use rand::RngCore;

/// A Fibonacci shift register with an affine offset.
///
/// One step maps `x` to `x'` with `x'_0 = parity(taps & x)`, `x'_i = x_{i-1}`,
/// then XORs in `offset`. Bit `i` of a state is bit `i` of the `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lfsr {
    pub width: usize,
    pub taps: u64,
    pub offset: u64,
}

impl Lfsr {
    pub fn new(width: usize, taps: u64, offset: u64) -> Result<Self> {
        if width == 0 || width > 64 {
            return Err(Error::InvalidConfig(format!(
                "LFSR width {width} outside 1..=64"
            )));
        }
        let mask = Self::mask_for(width);
        if taps & !mask != 0 || offset & !mask != 0 {
            return Err(Error::InvalidConfig(format!(
                "taps {taps:#x} or offset {offset:#x} wider than {width} bits"
            )));
        }
        Ok(Self {
            width,
            taps,
            offset,
        })
    }

    fn mask_for(width: usize) -> u64 {
        if width == 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        }
    }

    /// The step as an affine map.
    pub fn step_map(&self) -> AffineMap {
        let w = self.width;
        let a = BitMatrix::from_fn(w, w, |r, c| {
            if r == 0 {
                self.taps >> c & 1 == 1
            } else {
                c + 1 == r
            }
        });
        AffineMap::new(a, BitVector::from_u64(w, self.offset)).expect("square by construction")
    }

    pub fn step(&self, x: u64) -> u64 {
        let feedback = u64::from((x & self.taps).count_ones() & 1);
        (((x << 1) | feedback) & Self::mask_for(self.width)) ^ self.offset
    }

    pub fn iterate(&self, mut x: u64, steps: u64) -> u64 {
        for _ in 0..steps {
            x = self.step(x);
        }
        x
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LfsrReport {
    pub lfsr: Lfsr,
    pub steps: u64,
    /// `step^steps`.
    pub power: AffineMap,
    pub resources: ResourceReport,
    pub mode: VerifyMode,
    pub states_checked: u64,
    /// First state whose iterate, power-map image and circuit output disagree.
    pub mismatch: Option<u64>,
}

impl LfsrReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Builds `step^t`, schedules its oracle, and checks on every state (or on
/// `options.samples` seeded states above `options.max_exhaustive_n`) that
/// classical iteration, the power map and the scheduled circuit agree.
pub fn lfsr_demo(lfsr: &Lfsr, steps: u64, options: VerifyOptions) -> Result<LfsrReport> {
    let w = lfsr.width;
    let power = lfsr.step_map().power(steps)?;
    let circuit = schedule(&power);
    let exhaustive = w <= options.max_exhaustive_n.min(24);
    let (mode, total) = if exhaustive {
        (VerifyMode::Exhaustive, 1u64 << w)
    } else {
        (VerifyMode::Sampled, options.samples as u64)
    };
    let mask = Lfsr::mask_for(w);
    let mismatch = (0..total).into_par_iter().find_map_first(|i| {
        let x = if exhaustive {
            i
        } else {
            stream(derive_seed(options.seed, &[i])).next_u64() & mask
        };
        let expected = lfsr.iterate(x, steps);
        let input = BitVector::from_u64(w, x);
        let mapped = power.apply(&input).expect("width matches").to_u64();
        let circuit_out = evaluate_basis(&circuit, &input)
            .expect("width matches")
            .to_u64();
        (mapped != expected || circuit_out != expected).then_some(x)
    });
    Ok(LfsrReport {
        lfsr: *lfsr,
        steps,
        resources: ResourceReport::of(&power, &circuit),
        power,
        mode,
        states_checked: total,
        mismatch,
    })
}

impl fmt::Display for LfsrReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "lfsr: width={} taps={:#x} offset={:#x} steps={}",
            self.lfsr.width, self.lfsr.taps, self.lfsr.offset, self.steps
        )?;
        writeln!(f, "power map rank: {}", self.power.matrix().rank())?;
        writeln!(f, "{}", self.resources)?;
        let mode = match self.mode {
            VerifyMode::Exhaustive => "exhaustive",
            VerifyMode::Sampled => "sampled",
        };
        match self.mismatch {
            None => write!(
                f,
                "verification: PASS ({mode}, {} states)",
                self.states_checked
            ),
            Some(x) => write!(f, "verification: FAIL ({mode}) at state {x:#x}"),
        }
    }
}
