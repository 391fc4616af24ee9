//! Rule identifiers and their text grammar:
//!
//! ```text
//! sala:n=<N>
//! psi1:n=<N>:kset=<k1,...,kt>      psi2:n=<N>:k=<K>
//! upsilon1:n=<N>:kset=<k1,...,kt>  upsilon2:n=<N>:k=<K>
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle::lcm_range;
use crate::registers::{check_order, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleKind {
    Sala,
    Psi1,
    Psi2,
    Upsilon1,
    Upsilon2,
}

impl RuleKind {
    pub const ALL: [RuleKind; 5] = [
        RuleKind::Sala,
        RuleKind::Psi1,
        RuleKind::Psi2,
        RuleKind::Upsilon1,
        RuleKind::Upsilon2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleKind::Sala => "sala",
            RuleKind::Psi1 => "psi1",
            RuleKind::Psi2 => "psi2",
            RuleKind::Upsilon1 => "upsilon1",
            RuleKind::Upsilon2 => "upsilon2",
        }
    }
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse {
                field: "kind".into(),
                message: format!("unknown rule kind {s:?}"),
            })
    }
}

/// A successor rule together with its parameters.
///
/// Values built through the constructors or [`FromStr`] are validated;
/// a hand-assembled value is checked again by [`RuleSpec::validate`] when
/// it is compiled into a rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RuleSpec {
    Sala { n: usize },
    Psi1 { n: usize, kset: Vec<usize> },
    Psi2 { n: usize, k: u128 },
    Upsilon1 { n: usize, kset: Vec<usize> },
    Upsilon2 { n: usize, k: u128 },
}

/// `lcm(1, ..., n - 2)`, the number of distinct power parameters.
pub fn delta(n: usize) -> Result<u128> {
    lcm_range(n.saturating_sub(2).max(1) as u64)
}

fn check_kset(n: usize, kset: &[usize]) -> Result<()> {
    let bad = |why: &str| {
        Err(Error::InvalidSpec(format!(
            "kset {kset:?} for n={n}: {why}"
        )))
    };
    if kset.len() < 2 || kset.len() > n - 1 {
        return bad("needs between 2 and n-1 entries");
    }
    if kset[0] != 1 {
        return bad("must start with 1");
    }
    if kset[kset.len() - 1] != n {
        return bad("must end with n");
    }
    if kset.windows(2).any(|w| w[0] >= w[1]) {
        return bad("must be strictly increasing");
    }
    if kset[kset.len() - 2] >= n - 1 {
        return bad("second-to-last entry must be below n-1");
    }
    Ok(())
}

impl RuleSpec {
    pub fn sala(n: usize) -> Result<Self> {
        let spec = RuleSpec::Sala { n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn psi1(n: usize, kset: impl Into<Vec<usize>>) -> Result<Self> {
        let spec = RuleSpec::Psi1 {
            n,
            kset: kset.into(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn psi2(n: usize, k: u128) -> Result<Self> {
        let spec = RuleSpec::Psi2 { n, k };
        spec.validate()?;
        Ok(spec)
    }

    pub fn upsilon1(n: usize, kset: impl Into<Vec<usize>>) -> Result<Self> {
        let spec = RuleSpec::Upsilon1 {
            n,
            kset: kset.into(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn upsilon2(n: usize, k: u128) -> Result<Self> {
        let spec = RuleSpec::Upsilon2 { n, k };
        spec.validate()?;
        Ok(spec)
    }

    pub fn kind(&self) -> RuleKind {
        match self {
            RuleSpec::Sala { .. } => RuleKind::Sala,
            RuleSpec::Psi1 { .. } => RuleKind::Psi1,
            RuleSpec::Psi2 { .. } => RuleKind::Psi2,
            RuleSpec::Upsilon1 { .. } => RuleKind::Upsilon1,
            RuleSpec::Upsilon2 { .. } => RuleKind::Upsilon2,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            RuleSpec::Sala { n }
            | RuleSpec::Psi1 { n, .. }
            | RuleSpec::Psi2 { n, .. }
            | RuleSpec::Upsilon1 { n, .. }
            | RuleSpec::Upsilon2 { n, .. } => n,
        }
    }

    /// The parameter part alone: `{1,2,6}` for a kset, `5` for a power,
    /// empty for Sala.
    pub fn param_label(&self) -> String {
        match self {
            RuleSpec::Sala { .. } => String::new(),
            RuleSpec::Psi1 { kset, .. } | RuleSpec::Upsilon1 { kset, .. } => {
                let parts: Vec<String> = kset.iter().map(ToString::to_string).collect();
                format!("{{{}}}", parts.join(","))
            }
            RuleSpec::Psi2 { k, .. } | RuleSpec::Upsilon2 { k, .. } => k.to_string(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        check_order(n, MAX_ORDER).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        match self {
            RuleSpec::Sala { .. } => Ok(()),
            RuleSpec::Psi1 { kset, .. } | RuleSpec::Upsilon1 { kset, .. } => check_kset(n, kset),
            RuleSpec::Psi2 { k, .. } => {
                let d = delta(n)?;
                if (1..=d).contains(k) {
                    Ok(())
                } else {
                    Err(Error::InvalidSpec(format!(
                        "psi2 needs 1 <= k <= {d}, got {k}"
                    )))
                }
            }
            RuleSpec::Upsilon2 { k, .. } => {
                let d = delta(n)?;
                if *k < d {
                    Ok(())
                } else {
                    Err(Error::InvalidSpec(format!(
                        "upsilon2 needs 0 <= k <= {}, got {k}",
                        d - 1
                    )))
                }
            }
        }
    }
}

impl fmt::Display for RuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        write!(f, "{}:n={n}", self.kind())?;
        match self {
            RuleSpec::Sala { .. } => Ok(()),
            RuleSpec::Psi1 { kset, .. } | RuleSpec::Upsilon1 { kset, .. } => {
                let parts: Vec<String> = kset.iter().map(ToString::to_string).collect();
                write!(f, ":kset={}", parts.join(","))
            }
            RuleSpec::Psi2 { k, .. } | RuleSpec::Upsilon2 { k, .. } => write!(f, ":k={k}"),
        }
    }
}

fn parse_err(field: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        field: field.into(),
        message: message.into(),
    }
}

impl FromStr for RuleSpec {
    type Err = Error;

    /// Syntax problems give [`Error::Parse`]; well-formed values that break
    /// a rule's constraints give [`Error::InvalidSpec`].
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(':');
        let kind: RuleKind = parts.next().unwrap_or_default().parse()?;
        let mut n = None;
        let mut kset = None;
        let mut k = None;
        for part in parts {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| parse_err(part, "expected key=value"))?;
            match key {
                "n" => {
                    let v = value
                        .parse::<usize>()
                        .map_err(|e| parse_err("n", e.to_string()))?;
                    n = Some(v);
                }
                "kset" => {
                    let v = value
                        .split(',')
                        .map(|x| x.trim().parse::<usize>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|e| parse_err("kset", e.to_string()))?;
                    kset = Some(v);
                }
                "k" => {
                    let v = value
                        .parse::<u128>()
                        .map_err(|e| parse_err("k", e.to_string()))?;
                    k = Some(v);
                }
                other => return Err(parse_err(other, "unknown field")),
            }
        }
        let n = n.ok_or_else(|| parse_err("n", "missing"))?;
        let need_kset = || kset.clone().ok_or_else(|| parse_err("kset", "missing"));
        let need_k = || k.ok_or_else(|| parse_err("k", "missing"));
        let unexpected = |field: &str| parse_err(field, format!("not used by {kind}"));
        match kind {
            RuleKind::Sala | RuleKind::Psi1 | RuleKind::Upsilon1 if k.is_some() => {
                return Err(unexpected("k"))
            }
            RuleKind::Sala | RuleKind::Psi2 | RuleKind::Upsilon2 if kset.is_some() => {
                return Err(unexpected("kset"))
            }
            _ => {}
        }
        let spec = match kind {
            RuleKind::Sala => RuleSpec::Sala { n },
            RuleKind::Psi1 => RuleSpec::Psi1 {
                n,
                kset: need_kset()?,
            },
            RuleKind::Psi2 => RuleSpec::Psi2 { n, k: need_k()? },
            RuleKind::Upsilon1 => RuleSpec::Upsilon1 {
                n,
                kset: need_kset()?,
            },
            RuleKind::Upsilon2 => RuleSpec::Upsilon2 { n, k: need_k()? },
        };
        spec.validate()?;
        Ok(spec)
    }
}
