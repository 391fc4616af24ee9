//! Recovers the tree of cycle joins a successor rule performs, by scanning
//! every state against the rule's critical-set predicate.
//!
//! Each critical state must come with its conjugate. A pair links two PRR
//! cycles; the cycle holding the rule's designated state for that pair is
//! the child, the other is the parent. The deviation set is a critical set
//! of spanning conjugate pairs exactly when these links form a rooted tree
//! over all cycles.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::registers::{decompose, prr_successor, Cycle, CycleKind};
use crate::rules::{Rule, RuleClass, RuleSpec, SuccessorRule};
use crate::state::State;

/// Largest order the exhaustive scan accepts.
pub const MAX_TREE_ORDER: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeEdge {
    pub child: usize,
    pub parent: usize,
    /// The pair member lying in the child cycle.
    pub child_state: State,
    /// Its conjugate, lying in the parent cycle.
    pub parent_state: State,
}

/// Cycles of the PRR joined into a rooted tree. Node `i` is `cycles()[i]`.
#[derive(Debug, Clone)]
pub struct CycleTree {
    cycles: Vec<Cycle>,
    edges: Vec<TreeEdge>,
    parent: Vec<Option<usize>>,
    root: usize,
}

impl CycleTree {
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn root_cycle(&self) -> &Cycle {
        &self.cycles[self.root]
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    /// Node whose representative is `rep`.
    pub fn find(&self, rep: State) -> Option<usize> {
        self.cycles.iter().position(|c| c.representative() == rep)
    }

    /// DOT digraph; nodes are labelled by representative, edges by the
    /// child-side state of their conjugate pair.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph join_tree {\n    rankdir=BT;\n");
        for c in &self.cycles {
            let shape = match c.kind() {
                CycleKind::Pcr => "box",
                CycleKind::Ccr => "ellipse",
            };
            let _ = writeln!(out, "    \"{}\" [shape={shape}];", c.representative());
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "    \"{}\" -> \"{}\" [label=\"{}\"];",
                self.cycles[e.child].representative(),
                self.cycles[e.parent].representative(),
                e.child_state
            );
        }
        out.push_str("}\n");
        out
    }
}

/// What [`verify_critical_set`] established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalSetReport {
    pub n: usize,
    pub class: RuleClass,
    pub cycles: usize,
    pub deviation_states: usize,
    pub edges: usize,
    pub root: State,
}

impl fmt::Display for CriticalSetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} class={:?} cycles={} deviation_states={} edges={} root={}",
            self.n, self.class, self.cycles, self.deviation_states, self.edges, self.root
        )
    }
}

/// Decomposition of one order plus a state-to-cycle lookup table, reusable
/// across many rules of that order.
#[derive(Debug, Clone)]
pub struct CycleIndex {
    n: usize,
    cycles: Vec<Cycle>,
    cycle_of: Vec<u32>,
}

fn not_spanning(cycle: &Cycle, reason: impl Into<String>) -> Error {
    Error::NotSpanning {
        cycle: cycle.representative().to_string(),
        reason: reason.into(),
    }
}

impl CycleIndex {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_TREE_ORDER {
            return Err(Error::OrderOutOfRange {
                n,
                min: 3,
                max: MAX_TREE_ORDER,
            });
        }
        let structure = decompose(n)?;
        let cycles: Vec<Cycle> = structure.cycles().cloned().collect();
        let mut cycle_of = vec![u32::MAX; 1 << n];
        for (i, c) in cycles.iter().enumerate() {
            for s in c.states() {
                cycle_of[s.value() as usize] = i as u32;
            }
        }
        Ok(CycleIndex {
            n,
            cycles,
            cycle_of,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn cycle_of(&self, s: State) -> usize {
        self.cycle_of[s.value() as usize] as usize
    }

    /// Picks the child cycle of the pair `(a, b)` (`a` has `c0 = 0`).
    fn child_of_pair(&self, class: RuleClass, a: State, b: State) -> Result<usize> {
        let (ca, cb) = (self.cycle_of(a), self.cycle_of(b));
        let n = self.n;
        let designated = match class {
            RuleClass::Psi => {
                // v = c1 ... c(n-1) 1
                Some(State::from_raw(((a.value() << 1) | 1) & mask(n), n))
            }
            RuleClass::Upsilon => {
                if a.last() == 0 {
                    // 0 c1 ... c(n-1)
                    Some(a)
                } else {
                    // c̄1 ... c̄(n-2) 0 c1
                    let mid = (a.value() >> 1) & mask(n - 2);
                    let bits = ((!mid & mask(n - 2)) << 2) | u64::from(a.bit(1));
                    Some(State::from_raw(bits, n))
                }
            }
            RuleClass::Sala => None,
        };
        match designated {
            Some(v) => {
                let cv = self.cycle_of(v);
                if cv == ca || cv == cb {
                    Ok(cv)
                } else {
                    Err(not_spanning(
                        &self.cycles[ca],
                        format!("designated state {v} of pair ({a}, {b}) lies in neither cycle"),
                    ))
                }
            }
            None => {
                // The PRR successor of one pair member is the representative
                // of the cycle being attached.
                let reps = [prr_successor(a), prr_successor(b)];
                let candidates: Vec<usize> = [ca, cb]
                    .into_iter()
                    .filter(|&c| reps.contains(&self.cycles[c].representative()))
                    .collect();
                candidates
                    .into_iter()
                    .max_by_key(|&c| self.cycles[c].representative())
                    .ok_or_else(|| {
                        not_spanning(
                            &self.cycles[ca],
                            format!("pair ({a}, {b}) does not meet a cycle representative"),
                        )
                    })
            }
        }
    }

    /// Scans all `2^n` states and builds the join tree of `rule`.
    pub fn extract_tree<R: SuccessorRule + ?Sized>(&self, rule: &R) -> Result<CycleTree> {
        self.extract(rule).map(|(tree, _)| tree)
    }

    fn extract<R: SuccessorRule + ?Sized>(&self, rule: &R) -> Result<(CycleTree, usize)> {
        let n = self.n;
        if rule.order() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: rule.order(),
            });
        }
        let class = rule.class();
        let mut deviation_states = 0;
        let mut edges = Vec::new();
        let mut parent: Vec<Option<usize>> = vec![None; self.cycles.len()];
        for s in (0..1u64 << n).map(|v| State::from_raw(v, n)) {
            if !rule.in_critical_set(s) {
                continue;
            }
            deviation_states += 1;
            let t = s.conjugate();
            if !rule.in_critical_set(t) {
                return Err(Error::NotPaired {
                    state: s.to_string(),
                    conjugate: t.to_string(),
                });
            }
            if s.first() == 1 {
                continue;
            }
            let (ca, cb) = (self.cycle_of(s), self.cycle_of(t));
            if ca == cb {
                return Err(not_spanning(
                    &self.cycles[ca],
                    format!("conjugate pair ({s}, {t}) lies inside one cycle"),
                ));
            }
            let child = self.child_of_pair(class, s, t)?;
            let (par, child_state, parent_state) =
                if child == ca { (cb, s, t) } else { (ca, t, s) };
            if let Some(existing) = parent[child] {
                return Err(not_spanning(
                    &self.cycles[child],
                    format!(
                        "two designated pairs, towards ({}) and ({})",
                        self.cycles[existing].representative(),
                        self.cycles[par].representative()
                    ),
                ));
            }
            parent[child] = Some(par);
            edges.push(TreeEdge {
                child,
                parent: par,
                child_state,
                parent_state,
            });
        }
        let roots: Vec<usize> = (0..self.cycles.len())
            .filter(|&i| parent[i].is_none())
            .collect();
        if roots.len() != 1 {
            let at = roots.get(1).copied().unwrap_or(0);
            return Err(not_spanning(
                &self.cycles[at],
                format!("{} cycles have no outgoing join", roots.len()),
            ));
        }
        // Every node must reach the root without revisiting a node.
        let mut reaches = vec![false; self.cycles.len()];
        reaches[roots[0]] = true;
        for start in 0..self.cycles.len() {
            let mut path = Vec::new();
            let mut node = start;
            while !reaches[node] {
                if path.len() > self.cycles.len() {
                    return Err(not_spanning(&self.cycles[start], "joins form a loop"));
                }
                path.push(node);
                node = parent[node].expect("only the root lacks a parent");
            }
            for p in path {
                reaches[p] = true;
            }
        }
        let tree = CycleTree {
            cycles: self.cycles.clone(),
            edges,
            parent,
            root: roots[0],
        };
        Ok((tree, deviation_states))
    }

    /// Extracts the tree and checks the root and the cycle order the rule's
    /// class promises.
    pub fn verify_critical_set<R: SuccessorRule + ?Sized>(
        &self,
        rule: &R,
    ) -> Result<CriticalSetReport> {
        let (tree, deviation_states) = self.extract(rule)?;
        let n = self.n;
        let class = rule.class();
        let expected_root = match class {
            RuleClass::Sala | RuleClass::Psi => State::from_raw(0, n),
            RuleClass::Upsilon => State::from_raw(mask(n), n),
        };
        let root = tree.root_cycle();
        if root.representative() != expected_root {
            return Err(not_spanning(
                root,
                format!("tree is rooted here, expected ({expected_root})"),
            ));
        }
        match class {
            RuleClass::Sala | RuleClass::Psi => {
                for e in &tree.edges {
                    let (child, parent) = (&tree.cycles[e.child], &tree.cycles[e.parent]);
                    if parent.representative() >= child.representative() {
                        return Err(not_spanning(
                            child,
                            format!(
                                "parent ({}) is not lexicographically smaller",
                                parent.representative()
                            ),
                        ));
                    }
                }
            }
            RuleClass::Upsilon => self.check_interleaved_order(&tree)?,
        }
        Ok(CriticalSetReport {
            n,
            class,
            cycles: tree.cycles.len(),
            deviation_states,
            edges: tree.edges.len(),
            root: root.representative(),
        })
    }

    /// `(1^(n-1)) < C1 < (PCR cycles hanging off C1) < C2 < ...`, with CCR
    /// cycles in lexicographic order. Only the forced constraints are
    /// checked; PCR cycles sharing a CCR parent are left unordered.
    fn check_interleaved_order(&self, tree: &CycleTree) -> Result<()> {
        let mut rank = vec![0usize; tree.cycles.len()];
        let mut ccr_seen = 0;
        for (i, c) in tree.cycles.iter().enumerate() {
            if c.kind() == CycleKind::Ccr {
                rank[i] = 2 * ccr_seen + 1;
                ccr_seen += 1;
            }
        }
        for (i, c) in tree.cycles.iter().enumerate() {
            if c.kind() != CycleKind::Pcr || i == tree.root {
                continue;
            }
            let p = tree.parent[i].expect("non-root");
            if tree.cycles[p].kind() != CycleKind::Ccr {
                return Err(not_spanning(c, "PCR cycle is not attached to a CCR cycle"));
            }
            rank[i] = rank[p] + 1;
        }
        for e in &tree.edges {
            if rank[e.parent] >= rank[e.child] {
                let (child, parent) = (&tree.cycles[e.child], &tree.cycles[e.parent]);
                return Err(not_spanning(
                    child,
                    format!(
                        "parent ({}) does not precede it in the cycle order",
                        parent.representative()
                    ),
                ));
            }
        }
        Ok(())
    }
}

#[inline]
fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Join tree of a validated spec.
pub fn extract_tree(spec: &RuleSpec) -> Result<CycleTree> {
    let rule = Rule::new(spec)?;
    CycleIndex::new(spec.n())?.extract_tree(&rule)
}

/// Checks that the spec's deviation set is a critical set of spanning
/// conjugate pairs under the cycle order its class promises.
pub fn verify_critical_set(spec: &RuleSpec) -> Result<CriticalSetReport> {
    let rule = Rule::new(spec)?;
    CycleIndex::new(spec.n())?.verify_critical_set(&rule)
}
