//! Wall-clock timing of bit generation.

use std::hint::black_box;
use std::time::{Duration, Instant};

use crate::error::Result;
use crate::rules::{Generator, Rule, RuleSpec};
use crate::state::State;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub spec: RuleSpec,
    pub bits: u64,
    pub elapsed: Duration,
}

impl BenchResult {
    pub fn ns_per_bit(&self) -> f64 {
        self.elapsed.as_nanos() as f64 / self.bits.max(1) as f64
    }
}

impl std::fmt::Display for BenchResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "spec={} bits={} elapsed_ms={:.3} ns_per_bit={:.2}",
            self.spec,
            self.bits,
            self.elapsed.as_secs_f64() * 1e3,
            self.ns_per_bit()
        )
    }
}

/// Generates `bits` bits from `0^n` and times the whole run.
pub fn time_generation(spec: &RuleSpec, bits: u64) -> Result<BenchResult> {
    let rule = Rule::new(spec)?;
    let generator = Generator::new(rule, State::zeros(spec.n())?)?;
    let start = Instant::now();
    let ones = generator
        .take(bits as usize)
        .fold(0u64, |acc, b| acc + u64::from(black_box(b)));
    let elapsed = start.elapsed();
    black_box(ones);
    Ok(BenchResult {
        spec: spec.clone(),
        bits,
        elapsed,
    })
}
