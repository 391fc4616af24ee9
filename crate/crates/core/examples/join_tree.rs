//! Recover the cycle-joining tree a rule induces and print it as DOT.
//!
//! cargo run --example join_tree | dot -Tsvg > tree.svg

use prr_debruijn::jointree::{extract_tree, verify_critical_set};
use prr_debruijn::RuleSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "upsilon2:n=6:k=3".into());
    let spec: RuleSpec = text.parse()?;
    let report = verify_critical_set(&spec)?;
    eprintln!("{report}");
    print!("{}", extract_tree(&spec)?.to_dot());
    Ok(())
}
