//! Text reproduction of the two published n = 6 tables, generalised to any
//! order the family enumeration supports.
//!
//! Each part starts with a `# <kind> n=<n>` line followed by one row per
//! spec: `<entry> <parameter> (<sequence>)`, the sequence starting at `0^n`.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle::{all_specs, format_bits};
use crate::rules::{RuleKind, SequenceRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// `psi1` over all ksets, then `psi2` over all k.
    Table1,
    /// `upsilon1` over all ksets, then `upsilon2` over all k.
    Table3,
}

impl Table {
    pub fn kinds(self) -> [RuleKind; 2] {
        match self {
            Table::Table1 => [RuleKind::Psi1, RuleKind::Psi2],
            Table::Table3 => [RuleKind::Upsilon1, RuleKind::Upsilon2],
        }
    }
}

impl FromStr for Table {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table1" => Ok(Table::Table1),
            "table3" => Ok(Table::Table3),
            other => Err(Error::Parse {
                field: "which".into(),
                message: format!("expected table1 or table3, got {other:?}"),
            }),
        }
    }
}

pub fn render_table(table: Table, n: usize) -> Result<String> {
    let mut out = String::new();
    for kind in table.kinds() {
        let _ = writeln!(out, "# {kind} n={n}");
        for (i, spec) in all_specs(kind, n)?.iter().enumerate() {
            let record = SequenceRecord::from_zero(spec)?;
            let _ = writeln!(
                out,
                "{} {} ({})",
                i + 1,
                spec.param_label(),
                format_bits(&record.bits)
            );
        }
    }
    Ok(out)
}
