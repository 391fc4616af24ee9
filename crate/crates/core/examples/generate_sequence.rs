//! Generate one full period of a rule's de Bruijn sequence and check it.
//!
//! cargo run --example generate_sequence -- "psi1:n=6:kset=1,6"

use prr_debruijn::oracle::is_de_bruijn;
use prr_debruijn::{RuleSpec, SequenceRecord};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "upsilon2:n=6:k=5".into());
    let spec: RuleSpec = text.parse()?;
    let record = SequenceRecord::from_zero(&spec)?;
    println!("{spec}");
    println!("({})", record.to_bit_string());
    println!("de Bruijn: {}", is_de_bruijn(&record.bits, spec.n())?);
    Ok(())
}
