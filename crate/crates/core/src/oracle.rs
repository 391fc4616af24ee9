//! Independent checks on generated sequences: the de Bruijn property,
//! shift-equivalence canonical forms and family enumeration.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rules::{delta, RuleKind, RuleSpec, SequenceRecord};
use crate::state::State;

/// Largest order the presence-table checks accept.
pub const MAX_ORACLE_ORDER: usize = 24;
/// Order range for exhaustive family enumeration.
pub const FAMILY_ORDERS: std::ops::RangeInclusive<usize> = 3..=11;

/// `lcm(1, 2, ..., m)`.
pub fn lcm_range(m: u64) -> Result<u128> {
    fn gcd(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    let mut acc: u128 = 1;
    for i in 2..=u128::from(m) {
        acc = (acc / gcd(acc, i))
            .checked_mul(i)
            .ok_or(Error::Overflow(m))?;
    }
    Ok(acc)
}

pub fn format_bits(bits: &[u8]) -> String {
    bits.iter()
        .map(|&b| if b == 0 { '0' } else { '1' })
        .collect()
}

/// Reads a `0`/`1` string, skipping whitespace and one optional pair of
/// surrounding parentheses.
pub fn parse_bits(text: &str) -> Result<Vec<u8>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed);
    inner
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::Parse {
                field: "sequence".into(),
                message: format!("unexpected character {c:?}"),
            }),
        })
        .collect()
}

/// Outcome of a de Bruijn check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeBruijnCheck {
    Valid,
    /// The first window seen twice, with the start positions of both
    /// occurrences.
    Repeated {
        window: State,
        first: usize,
        second: usize,
    },
}

fn check_length(bits: &[u8], n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORACLE_ORDER {
        return Err(Error::OrderOutOfRange {
            n,
            min: 1,
            max: MAX_ORACLE_ORDER,
        });
    }
    if bits.len() != 1 << n {
        return Err(Error::LengthMismatch {
            expected: 1 << n,
            actual: bits.len(),
        });
    }
    Ok(())
}

/// Cyclic `n`-windows of `bits`, with their start positions.
fn windows(bits: &[u8], n: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
    let mask = (1u64 << n) - 1;
    let mut w = bits[..n]
        .iter()
        .fold(0u64, |acc, &b| (acc << 1) | u64::from(b & 1));
    (0..bits.len()).map(move |i| {
        let current = w;
        w = ((w << 1) | u64::from(bits[(i + n) % bits.len()] & 1)) & mask;
        (i, current)
    })
}

/// Scans all `2^n` cyclic windows with a presence table.
pub fn check_de_bruijn(bits: &[u8], n: usize) -> Result<DeBruijnCheck> {
    check_length(bits, n)?;
    let mut seen = vec![usize::MAX; 1 << n];
    for (i, w) in windows(bits, n) {
        let slot = &mut seen[w as usize];
        if *slot != usize::MAX {
            return Ok(DeBruijnCheck::Repeated {
                window: State::new(w, n)?,
                first: *slot,
                second: i,
            });
        }
        *slot = i;
    }
    Ok(DeBruijnCheck::Valid)
}

/// True iff every `n`-bit string occurs exactly once as a cyclic window.
pub fn is_de_bruijn(bits: &[u8], n: usize) -> Result<bool> {
    Ok(check_de_bruijn(bits, n)? == DeBruijnCheck::Valid)
}

/// The rotation starting at the unique `0^n` window.
pub fn canonical_form(bits: &[u8], n: usize) -> Result<Vec<u8>> {
    if !is_de_bruijn(bits, n)? {
        return Err(Error::NotDeBruijn(n));
    }
    let start = windows(bits, n)
        .find(|&(_, w)| w == 0)
        .map(|(i, _)| i)
        .expect("de Bruijn");
    let mut out = bits[start..].to_vec();
    out.extend_from_slice(&bits[..start]);
    Ok(out)
}

/// Subsets of `{2, ..., n-2}`, by size and then lexicographically, each
/// extended by `1` and `n`.
pub fn all_ksets(n: usize) -> Vec<Vec<usize>> {
    let middle: Vec<usize> = (2..n.saturating_sub(1)).collect();
    let mut out = Vec::with_capacity(1 << middle.len());
    for size in 0..=middle.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mut kset = vec![1];
            kset.extend(idx.iter().map(|&i| middle[i]));
            kset.push(n);
            out.push(kset);
            // next combination of `size` indices
            let Some(pos) = (0..size).rev().find(|&p| idx[p] != p + middle.len() - size) else {
                break;
            };
            idx[pos] += 1;
            for q in pos + 1..size {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    out
}

/// Largest order [`all_specs`] will list; `lcm(1..14)` specs is already
/// 360360.
pub const MAX_LISTED_ORDER: usize = 16;

fn check_range(n: usize, range: std::ops::RangeInclusive<usize>) -> Result<()> {
    if range.contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange {
            n,
            min: *range.start(),
            max: *range.end(),
        })
    }
}

/// Every valid spec of `kind` at order `n`, in table order.
pub fn all_specs(kind: RuleKind, n: usize) -> Result<Vec<RuleSpec>> {
    check_range(n, 3..=MAX_LISTED_ORDER)?;
    let d = delta(n)?;
    let specs = match kind {
        RuleKind::Sala => vec![RuleSpec::Sala { n }],
        RuleKind::Psi1 => all_ksets(n)
            .into_iter()
            .map(|kset| RuleSpec::Psi1 { n, kset })
            .collect(),
        RuleKind::Upsilon1 => all_ksets(n)
            .into_iter()
            .map(|kset| RuleSpec::Upsilon1 { n, kset })
            .collect(),
        RuleKind::Psi2 => (1..=d).map(|k| RuleSpec::Psi2 { n, k }).collect(),
        RuleKind::Upsilon2 => (0..d).map(|k| RuleSpec::Upsilon2 { n, k }).collect(),
    };
    Ok(specs)
}

/// Number of distinct sequences the family is proven to produce.
pub fn expected_family_size(kind: RuleKind, n: usize) -> Result<u128> {
    Ok(match kind {
        RuleKind::Sala => 1,
        RuleKind::Psi1 | RuleKind::Upsilon1 => 1 << (n - 3),
        RuleKind::Psi2 | RuleKind::Upsilon2 => delta(n)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRow {
    pub spec: RuleSpec,
    /// Canonical form when the output is de Bruijn, raw output otherwise.
    pub sequence: Vec<u8>,
    pub is_de_bruijn: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub kinds: Vec<RuleKind>,
    pub n: usize,
    pub total: usize,
    pub distinct: usize,
    pub expected: Option<u128>,
    /// `(earlier, later)` spec pairs producing the same sequence.
    pub collisions: Vec<(RuleSpec, RuleSpec)>,
    pub rows: Vec<FamilyRow>,
}

impl FamilyReport {
    fn from_rows(
        kinds: Vec<RuleKind>,
        n: usize,
        expected: Option<u128>,
        rows: Vec<FamilyRow>,
    ) -> Self {
        let mut first_seen: HashMap<&[u8], usize> = HashMap::new();
        let mut collisions = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            match first_seen.get(row.sequence.as_slice()) {
                Some(&j) => collisions.push((rows[j].spec.clone(), row.spec.clone())),
                None => {
                    first_seen.insert(&row.sequence, i);
                }
            }
        }
        let distinct = first_seen.len();
        FamilyReport {
            kinds,
            n,
            total: rows.len(),
            distinct,
            expected,
            collisions,
            rows,
        }
    }

    pub fn all_de_bruijn(&self) -> bool {
        self.rows.iter().all(|r| r.is_de_bruijn)
    }

    /// Whether the distinct count equals the proven family size.
    pub fn matches_expected(&self) -> bool {
        self.expected.is_none_or(|e| e == self.distinct as u128)
    }

    /// `spec,sequence,is_de_bruijn` rows followed by a `#` summary line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("spec,sequence,is_de_bruijn\n");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "\"{}\",{},{}",
                row.spec,
                format_bits(&row.sequence),
                row.is_de_bruijn
            );
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }

    pub fn summary(&self) -> String {
        let kinds: Vec<&str> = self.kinds.iter().map(|k| k.name()).collect();
        let expected = self
            .expected
            .map_or_else(|| "-".to_string(), |e| e.to_string());
        format!(
            "# kind={} n={} total={} distinct={} expected={} collisions={}",
            kinds.join("+"),
            self.n,
            self.total,
            self.distinct,
            expected,
            self.collisions.len()
        )
    }
}

fn family_row(spec: RuleSpec) -> Result<FamilyRow> {
    let record = SequenceRecord::from_zero(&spec)?;
    let n = spec.n();
    let is_de_bruijn = is_de_bruijn(&record.bits, n)?;
    let sequence = if is_de_bruijn {
        canonical_form(&record.bits, n)?
    } else {
        record.bits
    };
    Ok(FamilyRow {
        spec,
        sequence,
        is_de_bruijn,
    })
}

/// Runs every spec of the family from `0^n` and counts distinct outputs.
pub fn enumerate_family(kind: RuleKind, n: usize) -> Result<FamilyReport> {
    check_range(n, FAMILY_ORDERS)?;
    let specs = all_specs(kind, n)?;
    let rows = specs
        .into_par_iter()
        .map(family_row)
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyReport::from_rows(
        vec![kind],
        n,
        Some(expected_family_size(kind, n)?),
        rows,
    ))
}

/// Pools several reports of the same order.
pub fn family_union(reports: &[FamilyReport]) -> Result<FamilyReport> {
    let Some(first) = reports.first() else {
        return Err(Error::InvalidSpec("empty union".into()));
    };
    if let Some(other) = reports.iter().find(|r| r.n != first.n) {
        return Err(Error::InvalidSpec(format!(
            "cannot pool orders {} and {}",
            first.n, other.n
        )));
    }
    let kinds = reports
        .iter()
        .flat_map(|r| r.kinds.iter().copied())
        .collect();
    let rows = reports
        .iter()
        .flat_map(|r| r.rows.iter().cloned())
        .collect();
    Ok(FamilyReport::from_rows(kinds, first.n, None, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE1_ENTRY1: &str = "0000001111110000101111011101000110001001110011011001010110101001";

    #[test]
    fn lcm_values() {
        assert_eq!(lcm_range(1).unwrap(), 1);
        assert_eq!(lcm_range(4).unwrap(), 12);
        assert_eq!(lcm_range(9).unwrap(), 2520);
        assert!(lcm_range(88).is_ok());
        assert_eq!(lcm_range(200), Err(Error::Overflow(200)));
    }

    #[test]
    fn lcm_dominates_power_of_two() {
        for n in 4..=40u64 {
            assert!(lcm_range(n - 2).unwrap() >= 1u128 << (n - 3), "n = {n}");
        }
    }

    #[test]
    fn de_bruijn_examples() {
        assert!(is_de_bruijn(&parse_bits(TABLE1_ENTRY1).unwrap(), 6).unwrap());
        assert!(is_de_bruijn(&[0, 0, 1, 1], 2).unwrap());
        assert!(!is_de_bruijn(&[0; 64], 6).unwrap());
        assert_eq!(
            check_de_bruijn(&[0; 64], 6).unwrap(),
            DeBruijnCheck::Repeated {
                window: State::zeros(6).unwrap(),
                first: 0,
                second: 1
            }
        );
        assert_eq!(
            is_de_bruijn(&[0; 63], 6),
            Err(Error::LengthMismatch {
                expected: 64,
                actual: 63
            })
        );
    }

    #[test]
    fn canonical_forms() {
        let bits = parse_bits(TABLE1_ENTRY1).unwrap();
        assert_eq!(canonical_form(&bits, 6).unwrap(), bits);
        let mut rotated = bits.clone();
        rotated.rotate_left(7);
        assert_eq!(canonical_form(&rotated, 6).unwrap(), bits);
        assert_eq!(canonical_form(&[0; 64], 6), Err(Error::NotDeBruijn(6)));
    }

    #[test]
    fn parse_bits_forms() {
        assert_eq!(parse_bits(" (01\n10) ").unwrap(), [0, 1, 1, 0]);
        assert!(parse_bits("012").is_err());
    }

    #[test]
    fn ksets_in_table_order() {
        let got: Vec<String> = all_ksets(6).iter().map(|k| format!("{k:?}")).collect();
        assert_eq!(
            got,
            [
                "[1, 6]",
                "[1, 2, 6]",
                "[1, 3, 6]",
                "[1, 4, 6]",
                "[1, 2, 3, 6]",
                "[1, 2, 4, 6]",
                "[1, 3, 4, 6]",
                "[1, 2, 3, 4, 6]"
            ]
        );
        assert_eq!(all_ksets(3), vec![vec![1, 3]]);
        for n in 3..=11 {
            assert_eq!(all_ksets(n).len(), 1 << (n - 3));
        }
    }

    #[test]
    fn family_sizes_at_six() {
        let psi1 = enumerate_family(RuleKind::Psi1, 6).unwrap();
        assert_eq!((psi1.total, psi1.distinct), (8, 8));
        let psi2 = enumerate_family(RuleKind::Psi2, 6).unwrap();
        assert_eq!((psi2.total, psi2.distinct), (12, 12));
        let union = family_union(&[psi1.clone(), psi2]).unwrap();
        // The published n = 6 table shares five rows between the two parts,
        // not four: {1,2,4,6} and k = 9 coincide as well.
        assert_eq!(union.distinct, 15);
        assert_eq!(union.collisions.len(), 5);
        assert_eq!(
            family_union(&[psi1.clone(), psi1.clone()])
                .unwrap()
                .distinct,
            8
        );
        assert!(psi1
            .to_csv()
            .ends_with("# kind=psi1 n=6 total=8 distinct=8 expected=8 collisions=0\n"));
    }

    #[test]
    fn family_order_bounds() {
        assert!(matches!(
            enumerate_family(RuleKind::Psi1, 12),
            Err(Error::OrderOutOfRange { .. })
        ));
        assert!(matches!(
            enumerate_family(RuleKind::Psi1, 2),
            Err(Error::OrderOutOfRange { .. })
        ));
        let a = enumerate_family(RuleKind::Sala, 5).unwrap();
        let b = enumerate_family(RuleKind::Sala, 6).unwrap();
        assert!(family_union(&[a, b]).is_err());
    }
}
