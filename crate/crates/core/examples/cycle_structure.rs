//! The cycles of the pure run-length register, with their types and
//! run-lengths, next to the closed-form counts.

use prr_debruijn::registers::{count_cycles, decompose};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(6), |s| s.parse())?;
    let cycles = decompose(n)?;
    for cycle in cycles.cycles() {
        let rep = cycle.representative();
        println!(
            "{} period {:>3}  rep {rep}  run-length {}  ({})",
            cycle.kind(),
            cycle.period(),
            rep.run_length_encode().run_length(),
            cycle.sequence()
        );
    }
    let counts = count_cycles(n)?;
    println!(
        "{} PCR + {} CCR = {} cycles",
        counts.pcr, counts.ccr, counts.total
    );
    Ok(())
}
