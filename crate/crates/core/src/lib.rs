//! Binary de Bruijn sequences from successor rules on the pure run-length
//! register (PRR), the order-`n` LFSR with feedback `c0 + c1 + c(n-1)`.
//!
//! The PRR splits the `2^n` states into the pure cycling and complemented
//! cycling register cycles of order `n - 1`. A successor rule complements
//! the feedback on a small critical set of conjugate pairs, which joins all
//! of those cycles into one: a de Bruijn sequence. Each rule costs `O(n)`
//! time and space per output bit.
//!
//! ```
//! use prr_debruijn::{oracle, RuleSpec, SequenceRecord};
//!
//! let spec: RuleSpec = "psi2:n=6:k=2".parse()?;
//! let record = SequenceRecord::from_zero(&spec)?;
//! assert!(oracle::is_de_bruijn(&record.bits, 6)?);
//! # Ok::<(), prr_debruijn::Error>(())
//! ```

pub mod bench;
pub mod canonical;
mod error;
pub mod jointree;
pub mod oracle;
pub mod registers;
pub mod rules;
pub mod state;
pub mod tables;

pub use error::{Error, Result};
pub use registers::{Cycle, CycleKind, CycleStructure};
pub use rules::{Generator, Rule, RuleKind, RuleSpec, SequenceRecord, SuccessorRule};
pub use state::{RunLengthEncoding, State};
