//! Brute-force reference implementations. Deliberately naive: bit vectors,
//! explicit rotations, no shared code with the library.

#![allow(dead_code)]

use std::collections::HashSet;

pub fn bits_of(value: u64, len: usize) -> Vec<u8> {
    (0..len)
        .map(|i| ((value >> (len - 1 - i)) & 1) as u8)
        .collect()
}

pub fn parse(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

pub fn show(bits: &[u8]) -> String {
    bits.iter().map(|b| char::from(b'0' + b)).collect()
}

pub fn rotations(u: &[u8]) -> Vec<Vec<u8>> {
    (0..u.len()).map(|r| [&u[r..], &u[..r]].concat()).collect()
}

/// Least among all rotations.
pub fn is_necklace(u: &[u8]) -> bool {
    rotations(u).iter().all(|r| u <= r.as_slice())
}

/// Least among the length-`m` windows of the doubled complemented cycle.
pub fn is_conecklace(u: &[u8]) -> bool {
    let cycle: Vec<u8> = u.iter().copied().chain(u.iter().map(|b| 1 - b)).collect();
    rotations(&cycle).iter().all(|r| u <= &r[..u.len()])
}

/// Every cyclic window of width `n` occurs exactly once.
pub fn is_de_bruijn(bits: &[u8], n: usize) -> bool {
    if bits.len() != 1 << n {
        return false;
    }
    let mut seen = HashSet::new();
    (0..bits.len()).all(|i| {
        let window: Vec<u8> = (0..n).map(|j| bits[(i + j) % bits.len()]).collect();
        seen.insert(window)
    })
}

pub fn prr_successor(c: &[u8]) -> Vec<u8> {
    let n = c.len();
    let mut next = c[1..].to_vec();
    next.push(c[0] ^ c[1] ^ c[n - 1]);
    next
}

/// Cycles of the order-`n` PRR, each as its list of states in orbit order.
pub fn prr_cycles(n: usize) -> Vec<Vec<Vec<u8>>> {
    let mut seen = vec![false; 1 << n];
    let mut cycles = Vec::new();
    for v in 0..1u64 << n {
        if seen[v as usize] {
            continue;
        }
        let start = bits_of(v, n);
        let mut cycle = Vec::new();
        let mut c = start.clone();
        loop {
            let idx = c.iter().fold(0usize, |acc, &b| acc << 1 | b as usize);
            seen[idx] = true;
            cycle.push(c.clone());
            c = prr_successor(&c);
            if c == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    cycles
}

pub fn runs(v: &[u8]) -> usize {
    1 + v.windows(2).filter(|w| w[0] != w[1]).count()
}

fn totient(m: u64) -> u64 {
    (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Closed-form cycle count of the order-`n` PRR: PCR plus CCR cycles of
/// order `n - 1`.
pub fn zbar(n: usize) -> u128 {
    let m = (n - 1) as u64;
    let divisors: Vec<u64> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    let term = |d: u64| u128::from(totient(d)) << (m / d);
    let pcr: u128 = divisors.iter().map(|&d| term(d)).sum::<u128>() / u128::from(m);
    let ccr: u128 = divisors
        .iter()
        .filter(|&&d| d % 2 == 1)
        .map(|&d| term(d))
        .sum::<u128>()
        / u128::from(2 * m);
    pcr + ccr
}

/// Literal Λ: rotate so the state starts just after its first `1`.
pub fn lambda_once(u: &[u8]) -> Vec<u8> {
    let i = u.iter().position(|&b| b == 1).expect("nonzero");
    [&u[i + 1..], &u[..=i]].concat()
}

/// Literal Θ: for a state with a zero beyond position 0, rotate to start at
/// the first such zero; `1^m` and `0 1^(m-1)` stay put.
pub fn theta_once(w: &[u8]) -> Vec<u8> {
    match (1..w.len()).find(|&i| w[i] == 0) {
        Some(i) => [&w[i..], &w[..i]].concat(),
        None => w.to_vec(),
    }
}

pub fn lcm_range(m: u64) -> u128 {
    (1..=m.max(1)).fold(1u128, |acc, k| acc / gcd_u128(acc, k as u128) * k as u128)
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}
