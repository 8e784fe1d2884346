//! Exact k-realizer search.
//!
//! Each of the `k` buckets holds a partial order (the base order plus the
//! placements assigned to it, transitively closed). The search branches on
//! critical pairs only: a family of extensions placing every critical pair
//! `(x, y)` with `x` below `y` somewhere is already a realizer.

use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::dimension::orientation::splitmix;
use crate::poset::Poset;

/// Ordered incomparable pairs `(x, y)` such that every `z < y` lies below `x`
/// and every `w > x` lies above `y`.
pub fn critical_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..p.len() {
        for y in p.incomparable_to(x).iter() {
            let mut strict_down_y = p.down_set(y).clone();
            strict_down_y.remove(y);
            let mut strict_up_x = p.up_set(x).clone();
            strict_up_x.remove(x);
            if strict_down_y.is_subset(p.down_set(x)) && strict_up_x.is_subset(p.up_set(y)) {
                out.push((x, y));
            }
        }
    }
    out
}

#[derive(Clone)]
struct Bucket {
    /// `up[a]` = elements known to follow `a` (reflexive)
    up: Vec<BitSet>,
    used: bool,
}

impl Bucket {
    #[inline]
    fn before(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// Adds `x < y` and closes transitively. Caller checks `!before(y, x)`.
    fn place(&mut self, x: usize, y: usize) {
        let above = self.up[y].clone();
        for a in 0..self.up.len() {
            if self.up[a].contains(x) {
                self.up[a].union_with(&above);
            }
        }
        self.used = true;
    }
}

pub(crate) enum SearchOutcome {
    Found(Vec<Vec<(usize, usize)>>),
    Exhausted,
    BudgetHit,
}

pub(crate) struct ExactSearch {
    pairs: Vec<(usize, usize)>,
    priority: Vec<u64>,
    buckets: Vec<Bucket>,
    assigned: Vec<Vec<(usize, usize)>>,
    budget: u64,
    pub nodes: u64,
    seed: u64,
}

impl ExactSearch {
    pub fn new(p: &Poset, k: usize, budget: u64, seed: u64, conflict_degree: impl Fn((usize, usize)) -> usize) -> Self {
        let pairs = critical_pairs(p);
        let priority = pairs
            .iter()
            .enumerate()
            .map(|(i, &pair)| {
                let tie = if seed == 0 { u64::MAX - i as u64 } else { splitmix(seed ^ i as u64) >> 8 };
                ((conflict_degree(pair) as u64) << 40) | (tie & ((1 << 40) - 1))
            })
            .collect();
        let base = Bucket { up: (0..p.len()).map(|x| p.up_set(x).clone()).collect(), used: false };
        Self {
            pairs,
            priority,
            buckets: alloc::vec![base; k],
            assigned: alloc::vec![Vec::new(); k],
            budget,
            nodes: 0,
            seed,
        }
    }

    /// Places `x` below `y` in bucket `b` before the search starts.
    pub fn preassign(&mut self, b: usize, x: usize, y: usize) -> bool {
        if self.buckets[b].before(y, x) {
            return false;
        }
        self.buckets[b].place(x, y);
        self.assigned[b].push((x, y));
        true
    }

    pub fn run(mut self) -> (SearchOutcome, u64) {
        let outcome = match self.descend() {
            Some(true) => SearchOutcome::Found(core::mem::take(&mut self.assigned)),
            Some(false) => SearchOutcome::Exhausted,
            None => SearchOutcome::BudgetHit,
        };
        (outcome, self.nodes)
    }

    /// `Some(true)` found, `Some(false)` subtree exhausted, `None` budget spent.
    fn descend(&mut self) -> Option<bool> {
        // most constrained unsatisfied pair first
        let mut best: Option<(usize, usize, u64)> = None;
        for (i, &(x, y)) in self.pairs.iter().enumerate() {
            if self.buckets.iter().any(|b| b.before(x, y)) {
                continue;
            }
            let feasible = self.buckets.iter().filter(|b| !b.before(y, x)).count();
            if feasible == 0 {
                return Some(false);
            }
            let better = match best {
                None => true,
                Some((_, f, pr)) => feasible < f || (feasible == f && self.priority[i] > pr),
            };
            if better {
                best = Some((i, feasible, self.priority[i]));
            }
        }
        let Some((i, _, _)) = best else {
            return Some(true);
        };
        let (x, y) = self.pairs[i];
        let k = self.buckets.len();
        let rotate = if self.seed == 0 { 0 } else { (splitmix(self.seed ^ (self.nodes << 1)) as usize) % k };
        let mut tried_fresh = false;
        for step in 0..k {
            let b = (step + rotate) % k;
            if self.buckets[b].before(y, x) {
                continue;
            }
            // untouched buckets are interchangeable
            if !self.buckets[b].used {
                if tried_fresh {
                    continue;
                }
                tried_fresh = true;
            }
            if self.nodes >= self.budget {
                return None;
            }
            self.nodes += 1;
            let saved = self.buckets[b].clone();
            self.buckets[b].place(x, y);
            self.assigned[b].push((x, y));
            match self.descend() {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            self.assigned[b].pop();
            self.buckets[b] = saved;
        }
        Some(false)
    }
}
