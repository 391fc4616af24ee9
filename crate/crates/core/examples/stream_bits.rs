//! Stream bits from an order-64 register. The state is a single word, so
//! memory stays constant however far the stream runs.

use prr_debruijn::{Generator, Rule, RuleSpec, State};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = RuleSpec::psi2(64, 2)?;
    let mut bits = Generator::new(Rule::new(&spec)?, State::zeros(64)?)?;
    for _ in 0..8 {
        let line: String = bits
            .by_ref()
            .take(96)
            .map(|b| char::from(b'0' + b))
            .collect();
        println!("{line}");
    }
    // skip ahead a million bits, then show where the register is
    bits.by_ref().take(1_000_000).for_each(drop);
    println!("state after {} more bits: {}", 1_000_000, bits.state());
    Ok(())
}
