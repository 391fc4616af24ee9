//! Acceptance suite. One line per criterion, then a nonzero exit if any
//! criterion failed outside its documented gap.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::Instant;

use prr_debruijn::bench::time_generation;
use prr_debruijn::canonical::{is_conecklace, is_necklace};
use prr_debruijn::jointree::CycleIndex;
use prr_debruijn::oracle::{all_specs, enumerate_family, expected_family_size, family_union};
use prr_debruijn::registers::decompose;
use prr_debruijn::rules::{RuleClass, SuccessorRule};
use prr_debruijn::tables::{render_table, Table};
use prr_debruijn::{CycleKind, Rule, RuleKind, RuleSpec, SequenceRecord, State};
use rayon::prelude::*;

enum Verdict {
    Pass,
    Fail,
    /// Fails exactly the way the reference data forces it to; anything else
    /// is a real failure.
    KnownGap,
}

struct Outcome {
    verdict: Verdict,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        detail: detail.into(),
    }
}

fn zeros_start(n: usize) -> String {
    "0".repeat(n)
}

fn sequence(spec: &RuleSpec) -> Vec<u8> {
    SequenceRecord::from_zero(spec).expect("valid spec").bits
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("golden file")
}

fn c1_golden_tables() -> Outcome {
    let t0 = Instant::now();
    let mut mismatches = Vec::new();
    for (table, file) in [
        (Table::Table1, "table1_n6.txt"),
        (Table::Table3, "table3_n6.txt"),
    ] {
        let ours = render_table(table, 6).expect("n = 6 renders");
        let want = golden(file);
        for (i, (a, b)) in ours.lines().zip(want.lines()).enumerate() {
            if a != b {
                mismatches.push(format!("{file}:{}", i + 1));
            }
        }
        if ours.lines().count() != want.lines().count() {
            mismatches.push(format!("{file}: row count"));
        }
    }
    // The generator itself starts from 000000 and emits the whole cycle.
    let first = common::show(&sequence(&"psi1:n=6:kset=1,6".parse().unwrap()));
    let start_ok = first.starts_with(&zeros_start(6));
    let elapsed = t0.elapsed();
    check(
        mismatches.is_empty() && start_ok && elapsed.as_secs_f64() < 1.0,
        format!(
            "40 rows compared, mismatches={mismatches:?}, {:.0} ms",
            elapsed.as_secs_f64() * 1e3
        ),
    )
}

fn c2_de_bruijn() -> Outcome {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for n in 3..=11 {
        for kind in RuleKind::ALL {
            let specs = all_specs(kind, n).expect("order in range");
            checked += specs.len();
            failures.extend(
                specs
                    .par_iter()
                    .filter(|s| !common::is_de_bruijn(&sequence(s), n))
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>(),
            );
        }
    }
    check(
        failures.is_empty(),
        format!("{checked} specs over n=3..11, failures={failures:?}"),
    )
}

fn c3_family_sizes() -> Outcome {
    let mut bad = Vec::new();
    let kinds = [
        RuleKind::Psi1,
        RuleKind::Psi2,
        RuleKind::Upsilon1,
        RuleKind::Upsilon2,
    ];
    for n in 4..=10 {
        for kind in kinds {
            let want = match kind {
                RuleKind::Psi1 | RuleKind::Upsilon1 => 1u128 << (n - 3),
                _ => common::lcm_range(n as u64 - 2),
            };
            let report = enumerate_family(kind, n).expect("order in range");
            // Every sequence starts at 0^n, so raw equality is shift equality.
            let raw: BTreeSet<Vec<u8>> = all_specs(kind, n)
                .unwrap()
                .par_iter()
                .map(sequence)
                .collect::<Vec<_>>()
                .into_iter()
                .collect();
            if report.distinct as u128 != want
                || raw.len() as u128 != want
                || expected_family_size(kind, n).unwrap() != want
            {
                bad.push(format!("{kind} n={n}: {} vs {want}", report.distinct));
            }
        }
    }
    check(
        bad.is_empty(),
        format!("psi1/psi2/upsilon1/upsilon2 for n=4..10, mismatches={bad:?}"),
    )
}

/// Row index (1-based, in table order) of each spec.
fn table_rows(kind: RuleKind, n: usize) -> Vec<(usize, Vec<u8>)> {
    all_specs(kind, n)
        .unwrap()
        .iter()
        .enumerate()
        .map(|(i, s)| (i + 1, sequence(s)))
        .collect()
}

fn c4_union_counts() -> Outcome {
    let mut lines = Vec::new();
    let mut pattern_ok = true;
    let mut distinct = Vec::new();
    for (a, b) in [
        (RuleKind::Psi1, RuleKind::Psi2),
        (RuleKind::Upsilon1, RuleKind::Upsilon2),
    ] {
        let union = family_union(&[
            enumerate_family(a, 6).unwrap(),
            enumerate_family(b, 6).unwrap(),
        ])
        .unwrap();
        distinct.push(union.distinct);
        let second: HashMap<Vec<u8>, usize> =
            table_rows(b, 6).into_iter().map(|(i, s)| (s, i)).collect();
        let pairs: Vec<(usize, usize)> = table_rows(a, 6)
            .into_iter()
            .filter_map(|(i, s)| second.get(&s).map(|&j| (i, j)))
            .collect();
        // Claimed overlap: first-part rows 1,2,3,8 equal second-part rows 2,3,4,1.
        for want in [(1, 2), (2, 3), (3, 4), (8, 1)] {
            pattern_ok &= pairs.contains(&want);
        }
        lines.push(format!(
            "{a}+{b}: distinct={} overlaps={pairs:?}",
            union.distinct
        ));
    }
    let detail = lines.join("; ");
    if distinct == [16, 16] && pattern_ok {
        return Outcome {
            verdict: Verdict::Pass,
            detail,
        };
    }
    // The published n = 6 tables hold 15 distinct rows per table: row 6 of
    // the first part also equals row 9 of the second. Matching those tables
    // byte for byte (criterion 1) forces 15 here.
    let published = |file: &str| {
        golden(file)
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| l.rsplit(' ').next().unwrap().to_string())
            .collect::<BTreeSet<_>>()
            .len()
    };
    let forced = [published("table1_n6.txt"), published("table3_n6.txt")];
    let verdict = if pattern_ok && distinct == forced {
        Verdict::KnownGap
    } else {
        Verdict::Fail
    };
    Outcome {
        verdict,
        detail: format!(
            "{detail}; claimed 16 each, the published tables themselves contain {forced:?} distinct rows"
        ),
    }
}

fn c5_cycle_counts() -> Outcome {
    let mut bad = Vec::new();
    for n in 3..=16 {
        let ours = decompose(n).unwrap();
        let brute = common::prr_cycles(n).len() as u128;
        let formula = common::zbar(n);
        if ours.len() as u128 != formula || brute != formula || ours.total_states() != 1 << n {
            bad.push(format!("n={n}: {} / {brute} / {formula}", ours.len()));
        }
    }
    let want = [
        "000000", "000010", "000110", "001010", "001110", "010110", "011110", "111111", "000001",
        "000101", "001001", "010101",
    ];
    let six = decompose(6).unwrap();
    let reps: Vec<String> = six
        .cycles()
        .map(|c| c.representative().to_string())
        .collect();
    let kinds_ok = six.pcr_cycles().len() == 8 && six.ccr_cycles().len() == 4;
    check(
        bad.is_empty() && reps == want && kinds_ok,
        format!(
            "n=3..16 vs closed form and brute force, mismatches={bad:?}; n=6 representatives {}",
            if reps == want { "match" } else { "differ" }
        ),
    )
}

fn c6_cycle_invariants() -> Outcome {
    let mut violations = 0usize;
    let mut cycles = 0usize;
    for n in 3..=14 {
        for cycle in decompose(n).unwrap().cycles() {
            cycles += 1;
            let states: Vec<Vec<u8>> = cycle
                .states()
                .map(|s| common::bits_of(s.value(), n))
                .collect();
            let pcr = states.iter().all(|c| c[0] == c[n - 1]);
            let ccr = states.iter().all(|c| c[0] != c[n - 1]);
            let kind_ok = match cycle.kind() {
                CycleKind::Pcr => pcr,
                CycleKind::Ccr => ccr,
            };
            let r = common::runs(&states[0]);
            let uniform = states.iter().all(|c| common::runs(c) == r)
                && cycle
                    .states()
                    .all(|s| s.run_length_encode().run_length() == r);
            violations += usize::from(!kind_ok) + usize::from(!uniform);
        }
    }
    let c2: BTreeSet<String> = decompose(6)
        .unwrap()
        .cycles()
        .find(|c| c.representative().to_string() == "000101")
        .unwrap()
        .states()
        .filter(|s| s.run_length_encode().run_length() == 4)
        .map(|s| s.to_string())
        .collect();
    let listed: BTreeSet<String> =
        "000101 001011 010111 101110 011101 111010 110100 101000 010001 100010"
            .split(' ')
            .map(String::from)
            .collect();
    check(
        violations == 0 && c2 == listed,
        format!("{cycles} cycles over n=3..14, violations={violations}; C2 at n=6 has {} states of run-length 4", c2.len()),
    )
}

/// Complements the feedback at one extra state.
struct Flip<'a> {
    inner: &'a Rule,
    state: State,
}

impl SuccessorRule for Flip<'_> {
    fn order(&self) -> usize {
        self.inner.order()
    }
    fn class(&self) -> RuleClass {
        self.inner.class()
    }
    fn in_critical_set(&self, c: State) -> bool {
        self.inner.in_critical_set(c) ^ (c == self.state)
    }
}

fn verify_orders(
    orders: std::ops::RangeInclusive<usize>,
    kinds: &[RuleKind],
) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in orders {
        let index = CycleIndex::new(n).unwrap();
        let deviation = 2 * (common::zbar(n) as usize - 1);
        for &kind in kinds {
            let specs = all_specs(kind, n).unwrap();
            checked += specs.len();
            bad.extend(
                specs
                    .par_iter()
                    .filter_map(|spec| {
                        let rule = Rule::new(spec).unwrap();
                        let root_bit = if rule.class() == RuleClass::Upsilon {
                            "1"
                        } else {
                            "0"
                        };
                        match index.verify_critical_set(&rule) {
                            Ok(r)
                                if r.deviation_states == deviation
                                    && r.edges + 1 == r.cycles
                                    && r.root.to_string() == root_bit.repeat(n) =>
                            {
                                None
                            }
                            Ok(r) => Some(format!("{spec}: {r}")),
                            Err(e) => Some(format!("{spec}: {e}")),
                        }
                    })
                    .collect::<Vec<_>>(),
            );
        }
    }
    (checked, bad)
}

fn c7_critical_sets() -> Outcome {
    let (checked, bad) = verify_orders(3..=12, &RuleKind::ALL);
    // Negative control: flipping any single state must break the tree.
    let mut survived = Vec::new();
    for spec in [
        "sala:n=6",
        "psi1:n=6:kset=1,3,6",
        "psi2:n=7:k=3",
        "upsilon1:n=6:kset=1,3,6",
        "upsilon2:n=6:k=5",
    ] {
        let spec: RuleSpec = spec.parse().unwrap();
        let n = spec.n();
        let rule = Rule::new(&spec).unwrap();
        let index = CycleIndex::new(n).unwrap();
        for state in State::all(n) {
            if index
                .verify_critical_set(&Flip {
                    inner: &rule,
                    state,
                })
                .is_ok()
            {
                survived.push(format!("{spec}@{state}"));
            }
        }
    }
    check(
        bad.is_empty() && survived.is_empty(),
        format!("{checked} specs over n=3..12, failures={bad:?}; single-state mutants accepted={survived:?}"),
    )
}

fn c8_canonical_predicates() -> Outcome {
    let mut disagreements = 0usize;
    let mut total = 0usize;
    for len in 1..=16 {
        for v in 0..1u64 << len {
            let s = State::new(v, len).unwrap();
            let bits = common::bits_of(v, len);
            total += 1;
            disagreements += usize::from(is_necklace(s) != common::is_necklace(&bits));
            disagreements += usize::from(is_conecklace(s) != common::is_conecklace(&bits));
        }
    }
    check(
        disagreements == 0,
        format!("{total} states of length 1..16, disagreements={disagreements}"),
    )
}

fn c9_complexity() -> Outcome {
    let per_bit = |spec: &str, bits: u64| -> f64 {
        let spec: RuleSpec = spec.parse().unwrap();
        (0..7)
            .map(|_| time_generation(&spec, bits).unwrap().ns_per_bit())
            .fold(f64::INFINITY, f64::min)
    };
    let mut ratios = Vec::new();
    for family in ["sala:n={n}", "psi2:n={n}:k=2"] {
        let at = |n: usize| per_bit(&family.replace("{n}", &n.to_string()), 400_000);
        let t: Vec<f64> = [8, 16, 32, 64].iter().map(|&n| at(n)).collect();
        ratios.push((family.split(':').next().unwrap(), t[3] / t[0], t));
    }
    let ok = ratios.iter().all(|(_, r, _)| *r <= 16.0);
    let detail = ratios
        .iter()
        .map(|(f, r, t)| {
            format!(
                "{f}: ns/bit n=8,16,32,64 = {:.1},{:.1},{:.1},{:.1} ratio {r:.2}",
                t[0], t[1], t[2], t[3]
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    check(ok, format!("{detail} (limit 16)"))
}

fn c10_sala() -> Outcome {
    let mut bad = Vec::new();
    for n in 3..=12 {
        let spec = RuleSpec::sala(n).unwrap();
        if !common::is_de_bruijn(&sequence(&spec), n) {
            bad.push(format!("{spec}: not de Bruijn"));
        }
    }
    let (checked, tree_bad) = verify_orders(3..=12, &[RuleKind::Sala]);
    bad.extend(tree_bad);
    check(
        bad.is_empty(),
        format!("n=3..12, {checked} join trees, failures={bad:?}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden n=6 tables", c1_golden_tables),
        ("de Bruijn property", c2_de_bruijn),
        ("family sizes", c3_family_sizes),
        ("n=6 union counts", c4_union_counts),
        ("cycle counts", c5_cycle_counts),
        ("cycle type and run-length invariants", c6_cycle_invariants),
        ("critical sets and join trees", c7_critical_sets),
        ("canonical predicates", c8_canonical_predicates),
        ("per-bit cost growth", c9_complexity),
        ("sala rule", c10_sala),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = run();
        let tag = match outcome.verdict {
            Verdict::Pass => "PASS",
            Verdict::KnownGap => "FAIL (known gap, reference data)",
            Verdict::Fail => {
                failed += 1;
                "FAIL"
            }
        };
        println!(
            "criterion {:>2} {tag}: {name} [{:.2}s] {}",
            i + 1,
            t0.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
