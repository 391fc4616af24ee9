//! Cycle-representative predicates: necklaces (least rotation) and
//! co-necklaces (least state of a complemented cycle).

use crate::state::State;

/// Linear-time prenecklace scan over `len` bits read through `bit`.
///
/// Tracks the period `p` of the longest Lyndon prefix; the word is a
/// necklace iff it never drops below its own prefix and `p` divides `len`.
fn necklace_scan(len: usize, bit: impl Fn(usize) -> u8) -> bool {
    let mut p = 1;
    for i in 1..len {
        let (a, b) = (bit(i - p), bit(i));
        if a > b {
            return false;
        }
        if a < b {
            p = i + 1;
        }
    }
    len.is_multiple_of(p)
}

/// True iff `u` is lexicographically no larger than any of its rotations.
pub fn is_necklace(u: State) -> bool {
    necklace_scan(u.len(), |i| u.bit(i))
}

/// True iff `u` is the least length-`m` window of the `2m`-periodic word
/// `u ū`, i.e. the representative of its complemented-cycle class.
///
/// Every rotation of `u ū` has the form `x x̄`, so rotations compare exactly
/// as their first halves do, and the test reduces to `u ū` being a necklace.
pub fn is_conecklace(u: State) -> bool {
    let m = u.len();
    necklace_scan(2 * m, |i| if i < m { u.bit(i) } else { 1 - u.bit(i - m) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> State {
        text.parse().unwrap()
    }

    #[test]
    fn necklace_examples() {
        assert!(is_necklace(s("00101")));
        assert!(!is_necklace(s("01101")));
        assert!(is_necklace(s("01011")));
        assert!(is_necklace(s("000000")));
        assert!(is_necklace(s("111111")));
        assert!(is_necklace(s("0101")));
        assert!(!is_necklace(s("0010")));
    }

    #[test]
    fn conecklace_examples() {
        assert!(is_conecklace(s("00010")));
        assert!(is_conecklace(s("00000")));
        assert!(!is_conecklace(s("00101")));
        assert!(is_conecklace(s("01010")));
        assert!(!is_conecklace(s("11111")));
    }

    #[test]
    fn single_bit() {
        assert!(is_necklace(s("0")));
        assert!(is_necklace(s("1")));
        assert!(is_conecklace(s("0")));
        assert!(!is_conecklace(s("1")));
    }
}
