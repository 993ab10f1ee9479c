//! Exact twin-width by depth-first search over contraction sequences.
//!
//! A state is a trigraph whose red degree is within the budget. Children are
//! all single contractions that keep it within budget, tried cheapest first.
//! States are memoized under their canonical key, so isomorphic states
//! reached along different sequences are searched once.

use std::collections::{HashMap, VecDeque};
use std::time::{Duration, Instant};

use crate::canon::{canonical_labeling, CanonicalKey};
use crate::certificate::{record_certificate, ContractionCertificate};
use crate::structure;
use crate::trigraph::{Bits, ContractionStep, Trigraph};

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Maximum memo entries; the oldest insertions are evicted first.
    pub memo_cap: Option<usize>,
    /// When a pair of vertices are twins (same colored neighborhood outside
    /// the pair), contract only that pair. The result is the trigraph minus
    /// one twin, an induced subtrigraph, so no solution is lost.
    pub twin_shortcut: bool,
    /// Cross-check the incremental red-degree test against a full recount.
    pub check_incremental: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { memo_cap: None, twin_shortcut: true, check_incremental: cfg!(debug_assertions) }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub states_expanded: u64,
    pub memo_hits: u64,
    pub elapsed: Duration,
    /// The input already had red edges, so the result is the width of the
    /// trigraph rather than of a graph.
    pub generalized: bool,
    /// Smallest bound from the structural recognizers, for plain inputs.
    pub structural_bound: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub twin_width: u32,
    pub certificate: ContractionCertificate,
    pub stats: SolveStats,
}

impl SolveResult {
    /// The search found a larger value than a structural rule allows.
    pub fn violates_structural_bound(&self) -> bool {
        self.stats.structural_bound.is_some_and(|b| self.twin_width > b)
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct MemoEntry {
    /// No sequence exists at this budget, hence none at any smaller one.
    impossible_at: Option<u32>,
    /// A sequence exists at this budget; first step in canonical positions.
    possible: Option<(u32, [u8; 2])>,
}

/// Search outcomes per canonical state.
#[derive(Debug, Default)]
pub struct MemoTable {
    entries: HashMap<CanonicalKey, MemoEntry>,
    order: VecDeque<CanonicalKey>,
    cap: Option<usize>,
}

impl MemoTable {
    pub fn with_cap(cap: Option<usize>) -> Self {
        MemoTable { cap, ..Default::default() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn get(&self, key: &CanonicalKey) -> Option<MemoEntry> {
        self.entries.get(key).copied()
    }

    fn update(&mut self, key: CanonicalKey, f: impl FnOnce(&mut MemoEntry)) {
        if let Some(e) = self.entries.get_mut(&key) {
            f(e);
            return;
        }
        if let Some(cap) = self.cap {
            if cap == 0 {
                return;
            }
            while self.entries.len() >= cap {
                let Some(old) = self.order.pop_front() else { break };
                self.entries.remove(&old);
            }
            self.order.push_back(key.clone());
        }
        let mut e = MemoEntry::default();
        f(&mut e);
        self.entries.insert(key, e);
    }
}

pub struct Solver {
    config: SolverConfig,
    memo: MemoTable,
    stats: SolveStats,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new(SolverConfig::default())
    }
}

type SlotPair = (usize, usize);

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        let memo = MemoTable::with_cap(config.memo_cap);
        Solver { config, memo, stats: SolveStats::default() }
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    pub fn memo(&self) -> &MemoTable {
        &self.memo
    }

    /// A contraction sequence of `g` down to one vertex in which every
    /// trigraph, `g` included, has red degree at most `budget`.
    pub fn decide(&mut self, g: &Trigraph, budget: u32) -> Option<Vec<ContractionStep>> {
        if g.max_red_degree() as u32 > budget {
            return None;
        }
        self.search(g, budget).map(|path| to_steps(g, &path))
    }

    /// Smallest budget for which [`Solver::decide`] succeeds, found by trying
    /// budgets upward from the input's own red degree.
    pub fn twin_width(&mut self, g: &Trigraph) -> SolveResult {
        let start = Instant::now();
        self.stats.generalized = !g.is_plain();
        self.stats.structural_bound = if g.is_plain() {
            structure::best_bound(g).expect("plain input")
        } else {
            None
        };
        let mut budget = g.max_red_degree() as u32;
        let path = loop {
            if let Some(path) = self.search(g, budget) {
                break path;
            }
            budget += 1;
            debug_assert!(budget < g.vertex_count().max(1) as u32, "a (k-1)-sequence always exists");
        };
        let certificate = record_certificate(g, &to_steps(g, &path), String::new())
            .expect("solver paths replay");
        debug_assert_eq!(certificate.width, budget);
        self.stats.elapsed += start.elapsed();
        SolveResult { twin_width: budget, certificate, stats: self.stats.clone() }
    }

    fn search(&mut self, g: &Trigraph, budget: u32) -> Option<Vec<SlotPair>> {
        let k = g.vertex_count();
        if k <= 1 {
            return Some(Vec::new());
        }
        if k == 2 {
            let mut s = g.slots();
            return Some(vec![(s.next().unwrap(), s.next().unwrap())]);
        }
        let (key, order) = canonical_labeling(g);
        if let Some(entry) = self.memo.get(&key) {
            if entry.impossible_at.is_some_and(|d| d >= budget) {
                self.stats.memo_hits += 1;
                return None;
            }
            if let Some((d, [i, j])) = entry.possible {
                if d <= budget {
                    self.stats.memo_hits += 1;
                    return Some(self.follow_memo(g, (order[i as usize], order[j as usize]), budget));
                }
            }
        }

        self.stats.states_expanded += 1;
        for (pair, child) in self.children(g, budget) {
            if let Some(mut rest) = self.search(&child, budget) {
                let pos = |s: usize| order.iter().position(|&x| x == s).unwrap() as u8;
                let step = [pos(pair.0), pos(pair.1)];
                self.memo.update(key, |e| {
                    if e.possible.map_or(true, |(d, _)| budget < d) {
                        e.possible = Some((budget, step));
                    }
                });
                rest.insert(0, pair);
                return Some(rest);
            }
        }
        self.memo.update(key, |e| e.impossible_at = Some(e.impossible_at.map_or(budget, |d| d.max(budget))));
        None
    }

    /// Rebuilds a sequence from stored first steps, searching again wherever
    /// an entry was evicted.
    fn follow_memo(&mut self, g: &Trigraph, first: SlotPair, budget: u32) -> Vec<SlotPair> {
        let mut path = vec![first];
        let mut state = g.contract_slots(first.0, first.1);
        while state.vertex_count() > 2 {
            let (key, order) = canonical_labeling(&state);
            match self.memo.get(&key).and_then(|e| e.possible).filter(|&(d, _)| d <= budget) {
                Some((_, [i, j])) => {
                    let pair = (order[i as usize], order[j as usize]);
                    path.push(pair);
                    state = state.contract_slots(pair.0, pair.1);
                }
                None => {
                    path.extend(self.search(&state, budget).expect("state was proven solvable"));
                    return path;
                }
            }
        }
        path.extend(self.search(&state, budget).expect("two vertices always contract"));
        path
    }

    /// Contractions of `g` that stay within `budget`, cheapest first.
    fn children(&self, g: &Trigraph, budget: u32) -> Vec<(SlotPair, Trigraph)> {
        let slots: Vec<usize> = g.slots().collect();
        if self.config.twin_shortcut {
            for (i, &a) in slots.iter().enumerate() {
                for &b in &slots[i + 1..] {
                    let rest = !(1u64 << a | 1u64 << b);
                    if g.black_row(a) & rest == g.black_row(b) & rest && g.red_row(a) & rest == g.red_row(b) & rest {
                        return vec![((a, b), g.contract_slots(a, b))];
                    }
                }
            }
        }
        let mut out = Vec::new();
        for (i, &a) in slots.iter().enumerate() {
            for &b in &slots[i + 1..] {
                let child = g.contract_slots(a, b);
                let within = within_budget(g, &child, a, b, budget);
                if self.config.check_incremental {
                    assert_eq!(within, child.max_red_degree() as u32 <= budget, "incremental red-degree check");
                }
                if within {
                    out.push((child.red_degree_slot(a) as u32, (a, b), child));
                }
            }
        }
        out.sort_by(|x, y| {
            x.0.cmp(&y.0)
                .then_with(|| g.label_of_slot(x.1 .0).cmp(&g.label_of_slot(y.1 .0)))
                .then_with(|| g.label_of_slot(x.1 .1).cmp(&g.label_of_slot(y.1 .1)))
        });
        out.into_iter().map(|(_, pair, child)| (pair, child)).collect()
    }
}

/// Only the merged vertex and former neighbors of the pair can change red
/// degree, and the parent was already within budget.
fn within_budget(parent: &Trigraph, child: &Trigraph, a: usize, b: usize, budget: u32) -> bool {
    let w = a.min(b);
    let affected = (parent.neighbors_slot(a) | parent.neighbors_slot(b)) & child.live_mask() & !(1u64 << w);
    child.red_degree_slot(w) as u32 <= budget && Bits(affected).all(|x| child.red_degree_slot(x) as u32 <= budget)
}

fn to_steps(g: &Trigraph, path: &[SlotPair]) -> Vec<ContractionStep> {
    let mut state = g.clone();
    path.iter()
        .map(|&(a, b)| {
            let step = ContractionStep::new(state.label_of_slot(a), state.label_of_slot(b));
            state = state.contract_slots(a, b);
            step
        })
        .collect()
}

/// A witnessing certificate if `g` has a `budget`-sequence.
pub fn decide_tww(g: &Trigraph, budget: u32) -> Option<ContractionCertificate> {
    let steps = Solver::default().decide(g, budget)?;
    Some(record_certificate(g, &steps, String::new()).expect("solver paths replay"))
}

pub fn twin_width(g: &Trigraph) -> SolveResult {
    Solver::default().twin_width(g)
}
