//! The pure cycling register (PCR), the complemented cycling register (CCR)
//! and the pure run-length register (PRR), whose order-`n` cycles are
//! exactly the PCR and CCR cycles of order `n - 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::state::{State, MAX_LEN};

/// Smallest register order the successor rules accept.
pub const MIN_ORDER: usize = 3;
/// Largest register order (one machine word).
pub const MAX_ORDER: usize = MAX_LEN;
/// Largest order [`decompose`] will enumerate exhaustively.
pub const MAX_DECOMPOSE_ORDER: usize = 24;

pub(crate) fn check_order(n: usize, max: usize) -> Result<()> {
    if (MIN_ORDER..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange {
            n,
            min: MIN_ORDER,
            max,
        })
    }
}

/// PRR feedback `c0 + c1 + c(n-1)`.
#[inline]
pub fn prr_next_bit(s: State) -> u8 {
    s.first() ^ s.bit(1) ^ s.last()
}

/// PCR feedback `c0`.
#[inline]
pub fn pcr_next_bit(s: State) -> u8 {
    s.first()
}

/// CCR feedback `c0 + 1`.
#[inline]
pub fn ccr_next_bit(s: State) -> u8 {
    s.first() ^ 1
}

#[inline]
pub fn prr_successor(s: State) -> State {
    s.shift_in(prr_next_bit(s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleKind {
    /// A PCR cycle of order `n - 1`; every state has `c0 = c(n-1)`.
    Pcr,
    /// A CCR cycle of order `n - 1`; every state has `c0 != c(n-1)`.
    Ccr,
}

impl fmt::Display for CycleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycleKind::Pcr => "PCR",
            CycleKind::Ccr => "CCR",
        })
    }
}

/// Which of the two cycle families a PRR state belongs to.
pub fn classify_state(s: State) -> CycleKind {
    if s.first() == s.last() {
        CycleKind::Pcr
    } else {
        CycleKind::Ccr
    }
}

/// One cycle of the PRR.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    representative: State,
    kind: CycleKind,
    period: usize,
}

impl Cycle {
    /// Lexicographically least state of the cycle.
    pub fn representative(&self) -> State {
        self.representative
    }

    pub fn kind(&self) -> CycleKind {
        self.kind
    }

    /// Number of distinct states (the least period).
    pub fn period(&self) -> usize {
        self.period
    }

    /// The member states in PRR order, starting at the representative.
    pub fn states(&self) -> impl Iterator<Item = State> + '_ {
        std::iter::successors(Some(self.representative), |&s| Some(prr_successor(s)))
            .take(self.period)
    }

    /// The cycle as a periodic sequence, e.g. `(0001011101)`.
    pub fn sequence(&self) -> String {
        let len = self.representative.len() - 1;
        let period = match self.kind {
            CycleKind::Pcr => len,
            CycleKind::Ccr => 2 * len,
        };
        std::iter::successors(Some(self.representative), |&s| Some(prr_successor(s)))
            .take(period)
            .map(|s| if s.first() == 1 { '1' } else { '0' })
            .collect()
    }
}

/// The full cycle structure of the PRR of a given order.
#[derive(Debug, Clone)]
pub struct CycleStructure {
    order: usize,
    pcr_cycles: Vec<Cycle>,
    ccr_cycles: Vec<Cycle>,
}

impl CycleStructure {
    pub fn order(&self) -> usize {
        self.order
    }

    /// PCR-type cycles in increasing order of representative.
    pub fn pcr_cycles(&self) -> &[Cycle] {
        &self.pcr_cycles
    }

    /// CCR-type cycles in increasing order of representative.
    pub fn ccr_cycles(&self) -> &[Cycle] {
        &self.ccr_cycles
    }

    /// PCR-type cycles followed by CCR-type cycles.
    pub fn cycles(&self) -> impl Iterator<Item = &Cycle> {
        self.pcr_cycles.iter().chain(&self.ccr_cycles)
    }

    pub fn len(&self) -> usize {
        self.pcr_cycles.len() + self.ccr_cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn total_states(&self) -> usize {
        self.cycles().map(Cycle::period).sum()
    }
}

/// One cycle per line: `kind period (representative)`.
impl fmt::Display for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            writeln!(f, "{} {} ({})", c.kind, c.period, c.representative)?;
        }
        Ok(())
    }
}

/// Walks every `n`-bit state once and splits the PRR state graph into cycles.
pub fn decompose(n: usize) -> Result<CycleStructure> {
    check_order(n, MAX_DECOMPOSE_ORDER)?;
    let size = 1usize << n;
    let mut visited = vec![0u64; size.div_ceil(64)];
    let mut pcr_cycles = Vec::new();
    let mut ccr_cycles = Vec::new();
    for start in 0..size {
        if visited[start / 64] >> (start % 64) & 1 == 1 {
            continue;
        }
        let start = State::from_raw(start as u64, n);
        let mut least = start;
        let mut period = 0;
        let mut s = start;
        loop {
            let v = s.value() as usize;
            visited[v / 64] |= 1 << (v % 64);
            least = least.min(s);
            period += 1;
            s = prr_successor(s);
            if s == start {
                break;
            }
        }
        let cycle = Cycle {
            representative: least,
            kind: classify_state(least),
            period,
        };
        match cycle.kind {
            CycleKind::Pcr => pcr_cycles.push(cycle),
            CycleKind::Ccr => ccr_cycles.push(cycle),
        }
    }
    pcr_cycles.sort_by_key(|c| c.representative);
    ccr_cycles.sort_by_key(|c| c.representative);
    Ok(CycleStructure {
        order: n,
        pcr_cycles,
        ccr_cycles,
    })
}

/// Closed-form cycle counts of the order-`n` PRR.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleCounts {
    /// PCR cycles of order `n - 1`.
    pub pcr: u128,
    /// CCR cycles of order `n - 1`.
    pub ccr: u128,
    pub total: u128,
}

fn totient(mut m: u64) -> u64 {
    let mut phi = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// Necklace-counting formulas for the PCR and CCR of order `n - 1`.
pub fn count_cycles(n: usize) -> Result<CycleCounts> {
    check_order(n, MAX_ORDER)?;
    let m = (n - 1) as u64;
    let mut pcr_sum = 0u128;
    let mut ccr_sum = 0u128;
    for d in (1..=m).filter(|d| m.is_multiple_of(*d)) {
        let term = u128::from(totient(d)) << (m / d);
        pcr_sum += term;
        if d % 2 == 1 {
            ccr_sum += term;
        }
    }
    let pcr = pcr_sum / u128::from(m);
    let ccr = ccr_sum / (2 * u128::from(m));
    Ok(CycleCounts {
        pcr,
        ccr,
        total: pcr + ccr,
    })
}
