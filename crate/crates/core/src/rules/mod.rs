//! Successor rules on the pure run-length register.
//!
//! Every rule here outputs the PRR feedback `c0 + c1 + c(n-1)` except on a
//! critical set of states, where it outputs the complement. The rules differ
//! only in how that set is chosen:
//!
//! * [`SalaRule`]: `c1 ... c(n-1)` is a necklace or a co-necklace.
//! * [`PsiRule`]: co-necklace test when `c1 = 0`, otherwise a
//!   [`PcrSelector`] that picks one `1`-led state per PCR cycle.
//! * [`UpsilonRule`]: co-necklace test on `c̄1 ... c̄(n-2) 0` when
//!   `c(n-1) = 1`, otherwise a [`ZeroLedSelector`] that picks one `0`-led
//!   state per PCR cycle.
//!
//! The four shipped selectors give the rule families `psi1`, `psi2`,
//! `upsilon1` and `upsilon2`. The power families number their members so
//! that parameter `k` applies the rotation operator `k - 1` times (cyclically
//! in `1..=Δ` for `psi2`, in `0..Δ` for `upsilon2`, `Δ = lcm(1..n-2)`);
//! this is the numbering of the published n = 6 tables.
//!
//! Other selectors can be plugged in; a selector that accepts exactly one
//! qualifying state per cycle yields a de Bruijn sequence, which
//! [`crate::jointree::verify_critical_set`] can confirm.

mod spec;

pub use spec::{delta, RuleKind, RuleSpec};

use crate::canonical::{is_conecklace, is_necklace};
use crate::error::{Error, Result};
use crate::registers::prr_next_bit;
use crate::state::State;

/// How a rule pairs its critical states with cycles, which decides how the
/// join tree is oriented and rooted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleClass {
    Sala,
    Psi,
    Upsilon,
}

pub trait SuccessorRule {
    /// Register order `n`.
    fn order(&self) -> usize;

    fn class(&self) -> RuleClass;

    /// Whether the feedback is complemented at `c`.
    fn in_critical_set(&self, c: State) -> bool;

    #[inline]
    fn next_bit(&self, c: State) -> u8 {
        prr_next_bit(c) ^ u8::from(self.in_critical_set(c))
    }

    #[inline]
    fn successor(&self, c: State) -> State {
        c.shift_in(self.next_bit(c))
    }
}

impl<R: SuccessorRule + ?Sized> SuccessorRule for &R {
    fn order(&self) -> usize {
        (**self).order()
    }
    fn class(&self) -> RuleClass {
        (**self).class()
    }
    fn in_critical_set(&self, c: State) -> bool {
        (**self).in_critical_set(c)
    }
}

/// Picks one state `u = c1 ... c(n-1)` with `c1 = 1` in every nonzero PCR
/// cycle of order `n - 1`.
pub trait PcrSelector {
    fn select(&self, u: State) -> bool;
}

/// Picks one state `w = 0 c1 ... c(n-2)` in every PCR cycle of order
/// `n - 1` other than `(1^(n-1))`.
pub trait ZeroLedSelector {
    fn select(&self, w: State) -> bool;
}

impl<F: Fn(State) -> bool> PcrSelector for F {
    fn select(&self, u: State) -> bool {
        self(u)
    }
}

impl<F: Fn(State) -> bool> ZeroLedSelector for F {
    fn select(&self, w: State) -> bool {
        self(w)
    }
}

/// Largest `k_i <= weight`; the last entry of a valid kset is `n`, so it
/// brackets every weight below `n`.
fn bracket(kset: &[usize], weight: usize) -> usize {
    kset.iter()
        .copied()
        .take_while(|&k| k <= weight)
        .last()
        .unwrap_or(kset[0])
}

/// `Λ^(k_i) u` is a necklace, with `k_i <= wt(u) < k_(i+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaBracket {
    kset: Vec<usize>,
}

impl PcrSelector for LambdaBracket {
    fn select(&self, u: State) -> bool {
        let k = bracket(&self.kset, u.weight());
        u.lambda_rotate(k as u128).is_ok_and(is_necklace)
    }
}

/// `Λ^e u` is a necklace, for a fixed exponent `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaPower {
    exponent: u128,
}

impl LambdaPower {
    pub fn new(exponent: u128) -> Self {
        LambdaPower { exponent }
    }

    /// The selector behind `psi2:k=<k>`: exponent `k - 1`, taken in `1..=Δ`.
    pub fn for_parameter(n: usize, k: u128) -> Result<Self> {
        let d = delta(n)?;
        Ok(LambdaPower {
            exponent: (k % d + 2 * d - 2) % d + 1,
        })
    }

    pub fn exponent(&self) -> u128 {
        self.exponent
    }
}

impl PcrSelector for LambdaPower {
    fn select(&self, u: State) -> bool {
        u.lambda_rotate(self.exponent).is_ok_and(is_necklace)
    }
}

/// `Θ^(k_i - 1) w` is a necklace, with `k_i <= wt(w̄) < k_(i+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaBracket {
    kset: Vec<usize>,
}

impl ZeroLedSelector for ThetaBracket {
    fn select(&self, w: State) -> bool {
        let zeros = w.len() - w.weight();
        let k = bracket(&self.kset, zeros);
        is_necklace(w.theta_rotate(k as u128 - 1))
    }
}

/// `Θ^e w` is a necklace, for a fixed exponent `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaPower {
    exponent: u128,
}

impl ThetaPower {
    pub fn new(exponent: u128) -> Self {
        ThetaPower { exponent }
    }

    /// The selector behind `upsilon2:k=<k>`: exponent `k - 1`, taken in
    /// `0..Δ`.
    pub fn for_parameter(n: usize, k: u128) -> Result<Self> {
        let d = delta(n)?;
        Ok(ThetaPower {
            exponent: (k % d + d - 1) % d,
        })
    }

    pub fn exponent(&self) -> u128 {
        self.exponent
    }
}

impl ZeroLedSelector for ThetaPower {
    fn select(&self, w: State) -> bool {
        is_necklace(w.theta_rotate(self.exponent))
    }
}

/// `u_c = c1 ... c(n-1)`.
#[inline]
fn u_of(c: State) -> State {
    c.tail().expect("order >= 3")
}

/// `w_c = 0 c1 ... c(n-2)`.
#[inline]
fn w_of(c: State) -> State {
    let head = c.init().expect("order >= 3");
    State::from_raw(head.value() & ((1u64 << (head.len() - 1)) - 1), head.len())
}

/// `y_c = c̄1 ... c̄(n-2) 0`.
#[inline]
fn y_of(c: State) -> State {
    let mid = c.init().and_then(|h| h.tail()).expect("order >= 3");
    State::from_raw(mid.complement().value() << 1, mid.len() + 1)
}

pub fn in_critical_set_sala(c: State) -> bool {
    let u = u_of(c);
    is_necklace(u) || is_conecklace(u)
}

fn psi_critical(c: State, selector: &impl PcrSelector) -> bool {
    let u = u_of(c);
    if c.bit(1) == 0 {
        is_conecklace(u)
    } else {
        selector.select(u)
    }
}

fn upsilon_critical(c: State, selector: &impl ZeroLedSelector) -> bool {
    if c.last() == 1 {
        is_conecklace(y_of(c))
    } else {
        selector.select(w_of(c))
    }
}

pub fn in_critical_set_psi1(kset: &[usize], c: State) -> bool {
    psi_critical(c, &|u: State| {
        u.lambda_rotate(bracket(kset, u.weight()) as u128)
            .is_ok_and(is_necklace)
    })
}

/// `k` is the family parameter; see [`LambdaPower::for_parameter`].
pub fn in_critical_set_psi2(k: u128, c: State) -> bool {
    let selector = LambdaPower::for_parameter(c.len(), k).expect("order checked by caller");
    psi_critical(c, &selector)
}

pub fn in_critical_set_upsilon1(kset: &[usize], c: State) -> bool {
    upsilon_critical(c, &|w: State| {
        let k = bracket(kset, w.len() - w.weight());
        is_necklace(w.theta_rotate(k as u128 - 1))
    })
}

/// `k` is the family parameter; see [`ThetaPower::for_parameter`].
pub fn in_critical_set_upsilon2(k: u128, c: State) -> bool {
    let selector = ThetaPower::for_parameter(c.len(), k).expect("order checked by caller");
    upsilon_critical(c, &selector)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SalaRule {
    n: usize,
}

impl SalaRule {
    pub fn new(n: usize) -> Result<Self> {
        RuleSpec::sala(n)?;
        Ok(SalaRule { n })
    }
}

impl SuccessorRule for SalaRule {
    fn order(&self) -> usize {
        self.n
    }
    fn class(&self) -> RuleClass {
        RuleClass::Sala
    }
    fn in_critical_set(&self, c: State) -> bool {
        in_critical_set_sala(c)
    }
}

/// The first generic class: the designated state of a cycle is
/// `v_c = c1 ... c(n-1) 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiRule<S> {
    n: usize,
    selector: S,
}

impl<S: PcrSelector> PsiRule<S> {
    /// Wraps any selector. The selector's uniqueness is not checked here.
    pub fn with_selector(n: usize, selector: S) -> Result<Self> {
        RuleSpec::sala(n)?;
        Ok(PsiRule { n, selector })
    }

    pub fn selector(&self) -> &S {
        &self.selector
    }
}

impl<S: PcrSelector> SuccessorRule for PsiRule<S> {
    fn order(&self) -> usize {
        self.n
    }
    fn class(&self) -> RuleClass {
        RuleClass::Psi
    }
    fn in_critical_set(&self, c: State) -> bool {
        psi_critical(c, &self.selector)
    }
}

/// The second generic class: the designated state is `0 c1 ... c(n-1)`
/// when `c(n-1) = 0` and `c̄1 ... c̄(n-2) 0 c1` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpsilonRule<S> {
    n: usize,
    selector: S,
}

impl<S: ZeroLedSelector> UpsilonRule<S> {
    pub fn with_selector(n: usize, selector: S) -> Result<Self> {
        RuleSpec::sala(n)?;
        Ok(UpsilonRule { n, selector })
    }

    pub fn selector(&self) -> &S {
        &self.selector
    }
}

impl<S: ZeroLedSelector> SuccessorRule for UpsilonRule<S> {
    fn order(&self) -> usize {
        self.n
    }
    fn class(&self) -> RuleClass {
        RuleClass::Upsilon
    }
    fn in_critical_set(&self, c: State) -> bool {
        upsilon_critical(c, &self.selector)
    }
}

/// A validated [`RuleSpec`], ready to evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Sala(SalaRule),
    Psi1(PsiRule<LambdaBracket>),
    Psi2(PsiRule<LambdaPower>),
    Upsilon1(UpsilonRule<ThetaBracket>),
    Upsilon2(UpsilonRule<ThetaPower>),
}

impl Rule {
    pub fn new(spec: &RuleSpec) -> Result<Self> {
        spec.validate()?;
        Ok(match *spec {
            RuleSpec::Sala { n } => Rule::Sala(SalaRule { n }),
            RuleSpec::Psi1 { n, ref kset } => Rule::Psi1(PsiRule {
                n,
                selector: LambdaBracket { kset: kset.clone() },
            }),
            RuleSpec::Psi2 { n, k } => Rule::Psi2(PsiRule {
                n,
                selector: LambdaPower::for_parameter(n, k)?,
            }),
            RuleSpec::Upsilon1 { n, ref kset } => Rule::Upsilon1(UpsilonRule {
                n,
                selector: ThetaBracket { kset: kset.clone() },
            }),
            RuleSpec::Upsilon2 { n, k } => Rule::Upsilon2(UpsilonRule {
                n,
                selector: ThetaPower::for_parameter(n, k)?,
            }),
        })
    }
}

impl SuccessorRule for Rule {
    fn order(&self) -> usize {
        match self {
            Rule::Sala(r) => r.order(),
            Rule::Psi1(r) => r.order(),
            Rule::Psi2(r) => r.order(),
            Rule::Upsilon1(r) => r.order(),
            Rule::Upsilon2(r) => r.order(),
        }
    }

    fn class(&self) -> RuleClass {
        match self {
            Rule::Sala(_) => RuleClass::Sala,
            Rule::Psi1(_) | Rule::Psi2(_) => RuleClass::Psi,
            Rule::Upsilon1(_) | Rule::Upsilon2(_) => RuleClass::Upsilon,
        }
    }

    #[inline]
    fn in_critical_set(&self, c: State) -> bool {
        match self {
            Rule::Sala(r) => r.in_critical_set(c),
            Rule::Psi1(r) => r.in_critical_set(c),
            Rule::Psi2(r) => r.in_critical_set(c),
            Rule::Upsilon1(r) => r.in_critical_set(c),
            Rule::Upsilon2(r) => r.in_critical_set(c),
        }
    }
}

/// Next bit of `spec`'s sequence after state `s`.
pub fn next_bit(spec: &RuleSpec, s: State) -> Result<u8> {
    let rule = Rule::new(spec)?;
    check_start(&rule, s)?;
    Ok(rule.next_bit(s))
}

fn check_start(rule: &impl SuccessorRule, start: State) -> Result<()> {
    if start.len() == rule.order() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected: rule.order(),
            actual: start.len(),
        })
    }
}

/// Endless bit stream of a rule. The first `n` bits are the start state;
/// each later bit is the rule applied to the window before it. Only the
/// current window is kept.
#[derive(Debug, Clone)]
pub struct Generator<R> {
    rule: R,
    state: State,
}

impl<R: SuccessorRule> Generator<R> {
    pub fn new(rule: R, start: State) -> Result<Self> {
        check_start(&rule, start)?;
        Ok(Generator { rule, state: start })
    }

    /// The window whose first bit is emitted next.
    pub fn state(&self) -> State {
        self.state
    }

    pub fn rule(&self) -> &R {
        &self.rule
    }
}

impl<R: SuccessorRule> Iterator for Generator<R> {
    type Item = u8;

    #[inline]
    fn next(&mut self) -> Option<u8> {
        let bit = self.state.first();
        self.state = self.rule.successor(self.state);
        Some(bit)
    }
}

/// `count` bits of `spec`'s sequence starting from `start`.
pub fn generate(spec: &RuleSpec, start: State, count: usize) -> Result<impl Iterator<Item = u8>> {
    Ok(Generator::new(Rule::new(spec)?, start)?.take(count))
}

/// Largest order for which full periods are materialised in memory.
pub const MAX_RECORD_ORDER: usize = 32;

/// One full period of a rule's output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub bits: Vec<u8>,
    pub spec: RuleSpec,
    pub start: State,
}

impl SequenceRecord {
    /// Generates `2^n` bits from `start`.
    pub fn generate(spec: &RuleSpec, start: State) -> Result<Self> {
        let n = spec.n();
        if n > MAX_RECORD_ORDER {
            return Err(Error::OrderOutOfRange {
                n,
                min: 3,
                max: MAX_RECORD_ORDER,
            });
        }
        let bits = generate(spec, start, 1 << n)?.collect();
        Ok(SequenceRecord {
            bits,
            spec: spec.clone(),
            start,
        })
    }

    /// Generates from `0^n`.
    pub fn from_zero(spec: &RuleSpec) -> Result<Self> {
        SequenceRecord::generate(spec, State::zeros(spec.n())?)
    }

    pub fn to_bit_string(&self) -> String {
        crate::oracle::format_bits(&self.bits)
    }
}
