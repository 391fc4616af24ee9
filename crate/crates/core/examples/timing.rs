//! Per-bit generation cost as the order grows.

use prr_debruijn::bench::time_generation;
use prr_debruijn::RuleSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [8, 16, 32, 64] {
        for spec in [
            RuleSpec::sala(n)?,
            RuleSpec::psi2(n, 2)?,
            RuleSpec::upsilon1(n, vec![1, n])?,
        ] {
            println!("{}", time_generation(&spec, 1_000_000)?);
        }
    }
    Ok(())
}
