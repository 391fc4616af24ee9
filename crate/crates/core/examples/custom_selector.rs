//! Plug a home-made selector into the generic rule shapes and let the
//! tree validator judge it.

use prr_debruijn::canonical::is_necklace;
use prr_debruijn::jointree::CycleIndex;
use prr_debruijn::oracle::is_de_bruijn;
use prr_debruijn::rules::{PsiRule, UpsilonRule};
use prr_debruijn::{Generator, State, SuccessorRule};

fn report<R: SuccessorRule>(name: &str, rule: R) -> Result<(), Box<dyn std::error::Error>> {
    let n = rule.order();
    let index = CycleIndex::new(n)?;
    match index.verify_critical_set(&rule) {
        Ok(r) => println!("{name}: joins all {} cycles", r.cycles),
        Err(e) => println!("{name}: rejected ({e})"),
    }
    let bits: Vec<u8> = Generator::new(&rule, State::zeros(n)?)?
        .take(1 << n)
        .collect();
    println!("  de Bruijn: {}", is_de_bruijn(&bits, n)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 8;
    // The lexicographically largest rotation is unique per cycle too.
    report(
        "largest rotation",
        PsiRule::with_selector(n, |u: State| is_necklace(u.complement()))?,
    )?;
    // Selecting on weight alone picks several states in some cycles.
    report(
        "weight parity",
        PsiRule::with_selector(n, |u: State| u.weight().is_multiple_of(2))?,
    )?;
    // A zero-led selector: the largest rotation that starts with 0.
    report(
        "zero-led largest",
        UpsilonRule::with_selector(n, |w: State| {
            (0..w.len())
                .map(|r| w.rotate_left(r))
                .filter(|r| r.first() == 0)
                .max()
                == Some(w)
        })?,
    )?;
    Ok(())
}
