//! Register contents and the bit-level operations on them.
//!
//! A [`State`] packs up to 64 bits into one word. Bit `c0` (the oldest bit,
//! and the first one a generator emits) is stored as the most significant of
//! the `len` used bits, so comparing the packed words of two equal-length
//! states is the same as comparing them lexicographically.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported state length.
pub const MAX_LEN: usize = 64;

#[inline]
fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// An ordered string of `len` bits, `c0 c1 ... c(len-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    bits: u64,
    len: u8,
}

impl State {
    /// Builds a state from its packed form, `c0` being bit `len - 1`.
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::InvalidLength(len));
        }
        if bits & !mask(len) != 0 {
            return Err(Error::BitsOutOfRange { bits, len });
        }
        Ok(State {
            bits,
            len: len as u8,
        })
    }

    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        debug_assert!((1..=MAX_LEN).contains(&len) && bits & !mask(len) == 0);
        State {
            bits,
            len: len as u8,
        }
    }

    pub fn zeros(len: usize) -> Result<Self> {
        State::new(0, len)
    }

    pub fn ones(len: usize) -> Result<Self> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::InvalidLength(len));
        }
        Ok(State::from_raw(mask(len), len))
    }

    /// Builds a state from an iterator of bits; any nonzero item counts as 1.
    pub fn from_bits<I>(bits: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<u64>,
    {
        let mut word = 0u64;
        let mut len = 0usize;
        for b in bits {
            if len == MAX_LEN {
                return Err(Error::InvalidLength(len + 1));
            }
            word = (word << 1) | u64::from(b.into() != 0);
            len += 1;
        }
        State::new(word, len)
    }

    /// Every state of the given length, in increasing lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = State> {
        assert!(
            (1..=32).contains(&len),
            "exhaustive iteration limited to len <= 32"
        );
        (0..1u64 << len).map(move |b| State::from_raw(b, len))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; states have at least one bit.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Packed form, `c0` in bit `len - 1`.
    #[inline]
    pub fn value(&self) -> u64 {
        self.bits
    }

    /// Bit `c_i`.
    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    #[inline]
    pub fn first(&self) -> u8 {
        self.bit(0)
    }

    #[inline]
    pub fn last(&self) -> u8 {
        (self.bits & 1) as u8
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.bit(i))
    }

    pub fn complement(&self) -> State {
        State::from_raw(!self.bits & mask(self.len()), self.len())
    }

    /// Flips `c0`.
    pub fn conjugate(&self) -> State {
        State::from_raw(self.bits ^ (1 << (self.len() - 1)), self.len())
    }

    /// Flips the last bit.
    pub fn companion(&self) -> State {
        State::from_raw(self.bits ^ 1, self.len())
    }

    pub fn left_shift(&self) -> State {
        self.rotate_left(1)
    }

    /// Cyclic rotation: `c_r, ..., c_(len-1), c_0, ..., c_(r-1)`.
    pub fn rotate_left(&self, r: usize) -> State {
        let len = self.len();
        let r = r % len;
        if r == 0 {
            return *self;
        }
        let bits = ((self.bits << r) | (self.bits >> (len - r))) & mask(len);
        State::from_raw(bits, len)
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Drops `c0`, giving the `len - 1` bits `c1 ... c(len-1)`.
    pub fn tail(&self) -> Option<State> {
        let len = self.len();
        (len > 1).then(|| State::from_raw(self.bits & mask(len - 1), len - 1))
    }

    /// Drops the last bit.
    pub fn init(&self) -> Option<State> {
        let len = self.len();
        (len > 1).then(|| State::from_raw(self.bits >> 1, len - 1))
    }

    /// Shift-register step: drop `c0` and append `bit`.
    #[inline]
    pub fn shift_in(&self, bit: u8) -> State {
        let bits = ((self.bits << 1) | u64::from(bit & 1)) & mask(self.len());
        State::from_raw(bits, self.len())
    }

    /// One bit longer, with `bit` appended at the end.
    pub fn append(&self, bit: u8) -> Result<State> {
        State::new((self.bits << 1) | u64::from(bit & 1), self.len() + 1)
            .map_err(|_| Error::InvalidLength(self.len() + 1))
    }

    /// One bit longer, with `bit` placed in front.
    pub fn prepend(&self, bit: u8) -> Result<State> {
        let len = self.len() + 1;
        if len > MAX_LEN {
            return Err(Error::InvalidLength(len));
        }
        Ok(State::from_raw(
            (u64::from(bit & 1) << self.len()) | self.bits,
            len,
        ))
    }

    pub fn run_length_encode(&self) -> RunLengthEncoding {
        let mut runs = Vec::new();
        let mut current = self.bit(0);
        let mut length = 0;
        for b in self.iter() {
            if b == current {
                length += 1;
            } else {
                runs.push(length);
                current = b;
                length = 1;
            }
        }
        runs.push(length);
        RunLengthEncoding { runs }
    }

    /// Applies the operator that rotates a state just past its first 1, `r`
    /// times.
    ///
    /// The first application lands on a rotation ending in 1; from there the
    /// orbit visits the `w` rotations that end in a 1 and has period `w`
    /// (the weight). So `r >= 1` reduces to the `((r - 1) mod w) + 1`-th one
    /// of the original state, and the result is the rotation just past it.
    pub fn lambda_rotate(&self, r: u128) -> Result<State> {
        let w = self.weight();
        if w == 0 {
            return Err(Error::ZeroState);
        }
        if r == 0 {
            return Ok(*self);
        }
        let nth = ((r - 1) % w as u128) as usize;
        let pos = self.nth_position(1, nth).expect("weight counted");
        Ok(self.rotate_left(pos + 1))
    }

    /// Applies the operator that rotates a state to its first 0 at index
    /// >= 1, `r` times. `1^m` and `0 1^(m-1)` are fixed points.
    ///
    /// For a state starting with 0 and holding `z` zeros, the orbit cycles
    /// through the `z` zero-led rotations with period `z`. A state starting
    /// with 1 enters that cycle after one step.
    pub fn theta_rotate(&self, r: u128) -> State {
        let len = self.len();
        let zeros = len - self.weight();
        if zeros == 0 || (self.first() == 0 && zeros == 1) || r == 0 {
            return *self;
        }
        let pos = if self.first() == 0 {
            let nth = (r % zeros as u128) as usize;
            self.nth_position(0, nth)
        } else {
            let nth = ((r - 1) % zeros as u128) as usize;
            self.nth_position(0, nth)
        };
        self.rotate_left(pos.expect("zero counted"))
    }

    /// Index of the `nth` (0-based) occurrence of `bit`.
    fn nth_position(&self, bit: u8, nth: usize) -> Option<usize> {
        (0..self.len()).filter(|&i| self.bit(i) == bit).nth(nth)
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "State({self})")
    }
}

impl FromStr for State {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.len() > MAX_LEN {
            return Err(Error::InvalidLength(s.len()));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            let b = match c {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::InvalidState(s.to_string())),
            };
            bits = (bits << 1) | b;
        }
        State::new(bits, s.len())
    }
}

/// Lengths of the maximal runs of a state, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunLengthEncoding {
    runs: Vec<usize>,
}

impl RunLengthEncoding {
    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    /// Number of runs.
    pub fn run_length(&self) -> usize {
        self.runs.len()
    }

    /// Sum of the runs, i.e. the length of the encoded state.
    pub fn total(&self) -> usize {
        self.runs.iter().sum()
    }

    /// Rebuilds the state, given the value of its first bit.
    pub fn decode(&self, first: u8) -> Result<State> {
        let mut bit = first & 1;
        let bits = self.runs.iter().flat_map(|&r| {
            let out = std::iter::repeat_n(bit, r);
            bit ^= 1;
            out
        });
        State::from_bits(bits.collect::<Vec<_>>())
    }
}

impl fmt::Display for RunLengthEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.runs.iter().map(|r| r.to_string()).collect();
        f.write_str(&parts.join(if self.runs.iter().all(|&r| r < 10) {
            ""
        } else {
            ","
        }))
    }
}
