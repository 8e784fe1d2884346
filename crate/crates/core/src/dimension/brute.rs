//! Exhaustive dimension oracle over all linear extensions.
//!
//! A family of linear extensions realizes a poset iff every critical pair
//! `(a, b)` is reversed (`b` before `a`) by some member. Each linear
//! extension is encoded by the set of critical pairs it reverses; only the
//! maximal sets matter. Extensions are built bottom up, and the pairs still
//! to be reversed depend only on the down-set already placed, so the maximal
//! sets are collected per down-set. Families are searched by picking the
//! rarest unreversed pair and branching over the maximal sets that reverse it.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Largest poset accepted by [`brute_force_dimension`].
pub const BRUTE_FORCE_MAX_ELEMENTS: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BruteForce {
    Exactly(usize),
    ExceedsMax,
}

impl BruteForce {
    pub fn value(self) -> Option<usize> {
        match self {
            BruteForce::Exactly(d) => Some(d),
            BruteForce::ExceedsMax => None,
        }
    }
}

/// Up to 192 critical pairs (12 elements give at most 132).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
struct Mask([u64; 3]);

impl Mask {
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn or(self, o: Mask) -> Mask {
        Mask([self.0[0] | o.0[0], self.0[1] | o.0[1], self.0[2] | o.0[2]])
    }
    fn and_not(self, o: Mask) -> Mask {
        Mask([self.0[0] & !o.0[0], self.0[1] & !o.0[1], self.0[2] & !o.0[2]])
    }
    fn is_subset(self, o: Mask) -> bool {
        self.and_not(o).is_empty()
    }
    fn is_empty(self) -> bool {
        self.0 == [0; 3]
    }
    fn count(self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn has(self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
}

/// `(a, b)` incomparable with everything below `a` below `b` and everything
/// above `b` above `a`.
fn critical(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || p.comparable(a, b) {
                continue;
            }
            let below = (0..n).all(|z| z == a || !p.leq(z, a) || p.leq(z, b));
            let above = (0..n).all(|z| z == b || !p.leq(b, z) || p.leq(a, z));
            if below && above {
                out.push((a, b));
            }
        }
    }
    out
}

/// Maximal reversal sets over all linear extensions.
fn reversal_sets(p: &Poset, crit: &[(usize, usize)]) -> Vec<Mask> {
    let n = p.len();
    let preds: Vec<u16> = (0..n)
        .map(|x| p.down_set(x).iter().filter(|&y| y != x).fold(0u16, |m, y| m | 1 << y))
        .collect();
    // pairs indexed by their second element, reversed once it is placed before the first
    let mut by_b: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new(); n];
    for (i, &(a, b)) in crit.iter().enumerate() {
        by_b[b].push((i, a));
    }
    let mut memo: Vec<Option<Vec<Mask>>> = alloc::vec![None; 1 << n];
    completions(n, &preds, &by_b, 0, &mut memo)
}

/// Maximal sets of pairs reversed while extending the down-set `placed`.
fn completions(
    n: usize,
    preds: &[u16],
    by_b: &[Vec<(usize, usize)>],
    placed: u16,
    memo: &mut [Option<Vec<Mask>>],
) -> Vec<Mask> {
    if placed.count_ones() as usize == n {
        return alloc::vec![Mask::default()];
    }
    if let Some(known) = &memo[placed as usize] {
        return known.clone();
    }
    let mut all = Vec::new();
    for v in 0..n {
        if placed >> v & 1 == 1 || preds[v] & !placed != 0 {
            continue;
        }
        let mut now = Mask::default();
        for &(i, a) in &by_b[v] {
            if placed >> a & 1 == 0 {
                now.set(i);
            }
        }
        all.extend(completions(n, preds, by_b, placed | 1 << v, memo).into_iter().map(|m| m.or(now)));
    }
    let maximal = maximal_sets(all);
    memo[placed as usize] = Some(maximal.clone());
    maximal
}

fn maximal_sets(mut sets: Vec<Mask>) -> Vec<Mask> {
    sets.sort_unstable_by_key(|&m| (core::cmp::Reverse(m.count()), m));
    sets.dedup();
    // a proper superset has a larger count, so only those kept before the
    // current count class need checking
    let mut maximal: Vec<Mask> = Vec::new();
    let mut larger = 0;
    for (i, &m) in sets.iter().enumerate() {
        if i > 0 && sets[i - 1].count() != m.count() {
            larger = maximal.len();
        }
        if !maximal[..larger].iter().any(|&k| m.is_subset(k)) {
            maximal.push(m);
        }
    }
    maximal
}

/// Least `t <= k_max` such that some `t` linear extensions realize `p`.
///
/// Accepts at most [`BRUTE_FORCE_MAX_ELEMENTS`] elements.
pub fn brute_force_dimension(p: &Poset, k_max: usize) -> Result<BruteForce> {
    if p.len() > BRUTE_FORCE_MAX_ELEMENTS {
        return Err(Error::InvalidArgument(format!(
            "brute force dimension supports at most {BRUTE_FORCE_MAX_ELEMENTS} elements, got {}",
            p.len()
        )));
    }
    let crit = critical(p);
    if crit.is_empty() {
        // chains (and the empty poset) are realized by one extension
        return Ok(if k_max >= 1 { BruteForce::Exactly(1) } else { BruteForce::ExceedsMax });
    }
    let maximal = reversal_sets(p, &crit);
    let mut full = Mask::default();
    for i in 0..crit.len() {
        full.set(i);
    }
    let cover = Cover::new(maximal, crit.len());
    // one extension never reverses every critical pair of a non-chain
    for t in 2..=k_max {
        if cover.covers(full, t) {
            return Ok(BruteForce::Exactly(t));
        }
    }
    Ok(BruteForce::ExceedsMax)
}

struct Cover {
    sets: Vec<Mask>,
    exact: BTreeSet<Mask>,
    /// indices of the sets containing each pair
    with_bit: Vec<Vec<usize>>,
}

impl Cover {
    fn new(sets: Vec<Mask>, bits: usize) -> Self {
        let with_bit = (0..bits).map(|b| (0..sets.len()).filter(|&i| sets[i].has(b)).collect()).collect();
        Self { exact: sets.iter().copied().collect(), sets, with_bit }
    }

    /// Can `left` sets cover `missing`? Branches on the rarest missing pair.
    fn covers(&self, missing: Mask, left: usize) -> bool {
        if missing.is_empty() {
            return true;
        }
        if left == 0 {
            return false;
        }
        if left == 1 && self.exact.contains(&missing) {
            return true;
        }
        let rarest = (0..self.with_bit.len())
            .filter(|&b| missing.has(b))
            .min_by_key(|&b| self.with_bit[b].len())
            .expect("nonempty");
        let candidates = &self.with_bit[rarest];
        if left == 1 {
            return candidates.iter().any(|&i| missing.is_subset(self.sets[i]));
        }
        candidates.iter().any(|&i| self.covers(missing.and_not(self.sets[i]), left - 1))
    }
}
