//! Enumerate every rule of each family for small orders and count the
//! distinct sequences they produce.

use prr_debruijn::oracle::{enumerate_family, family_union};
use prr_debruijn::RuleKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 4..=9 {
        for kind in RuleKind::ALL {
            let report = enumerate_family(kind, n)?;
            println!("{}", report.summary());
        }
    }
    let psi = family_union(&[
        enumerate_family(RuleKind::Psi1, 6)?,
        enumerate_family(RuleKind::Psi2, 6)?,
    ])?;
    println!("psi1 + psi2 at n=6: {} distinct", psi.distinct);
    for (a, b) in &psi.collisions {
        println!("  {a} == {b}");
    }
    Ok(())
}
