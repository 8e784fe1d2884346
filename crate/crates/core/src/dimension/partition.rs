//! Transitive orderings by vertex partitioning.
//!
//! For a vertex `v`, refining `({v}, V - {v})` until every part is a module
//! yields the maximal modules not containing `v`. They are ordered
//! recursively. The strong modules containing `v` form a chain whose layers
//! are the strongly connected components of "`Z` distinguishes `v` from
//! `Y`" over those parts; layers are wrapped around `v` from the inside out.
//! A layer of one part is a degenerate node and may go on either side. A
//! layer of several parts has a prime quotient, ordered by a second kind of
//! refinement: from a source `s`, a pivot `x` splits each other part into
//! neighbours and non-neighbours of `x`, neighbours on the side facing `x`,
//! which keeps every edge between parts pointing left to right in some
//! transitive orientation. The source is the last vertex of a preliminary
//! run from an arbitrary start.
//!
//! Each vertex pair is separated by a bounded number of refinements, so the
//! whole ordering costs `O(n²)` adjacency tests.
//!
//! The result is only a candidate: on a graph that is not a comparability
//! graph it is some ordering, and callers must verify it.

use alloc::vec;
use alloc::vec::Vec;

use super::orientation::{splitmix, UndirectedGraph};

/// Vertex order whose left-to-right orientation is transitive whenever `g`
/// is a comparability graph. A nonzero `seed` varies the start vertices and
/// mirrors a pseudo-random subset of the quotients.
pub fn transitive_ordering(g: &UndirectedGraph, seed: u64) -> Vec<usize> {
    enum Frame {
        Enter(Vec<usize>),
        Exit { v: usize, reps: Vec<usize> },
    }
    let mut refiner = Refiner::new(g.len());
    let mut coin = Coin { seed, count: 0 };
    let mut frames = vec![Frame::Enter((0..g.len()).collect())];
    let mut done: Vec<Vec<usize>> = Vec::new();
    while let Some(frame) = frames.pop() {
        match frame {
            Frame::Enter(set) if set.len() <= 1 => done.push(set),
            Frame::Enter(set) => {
                let v = set[coin.pick(set.len())];
                let parts = refiner.run(g, &set, v);
                let reps = parts[1..].iter().map(|p| p[0]).collect();
                frames.push(Frame::Exit { v, reps });
                frames.extend(parts.into_iter().skip(1).rev().map(Frame::Enter));
            }
            Frame::Exit { v, reps } => {
                let children = done.split_off(done.len() - reps.len());
                done.push(wrap_layers(g, v, &reps, children, &mut coin));
            }
        }
    }
    done.pop().unwrap_or_default()
}

struct Coin {
    seed: u64,
    count: u64,
}

impl Coin {
    fn pick(&mut self, len: usize) -> usize {
        self.count += 1;
        if self.seed == 0 { 0 } else { (splitmix(self.seed ^ self.count) % len as u64) as usize }
    }

    fn flip(&mut self) -> bool {
        self.pick(2) == 1
    }
}

/// Orders the module spanned by `v` and the parts, given each part's own
/// ordering; `reps[i]` is a vertex of part `i`.
fn wrap_layers(g: &UndirectedGraph, v: usize, reps: &[usize], children: Vec<Vec<usize>>, coin: &mut Coin) -> Vec<usize> {
    // rows of `v` and `reps[y]` stay fixed while `z` varies
    let distinguishes = |y: usize, z: usize| y != z && g.has_edge(v, reps[z]) != g.has_edge(reps[y], reps[z]);
    let mut children: Vec<Option<Vec<usize>>> = children.into_iter().map(Some).collect();
    let mut inner = vec![v];
    for layer in components_sinks_first(reps.len(), distinguishes) {
        let mut blocks = vec![core::mem::take(&mut inner)];
        blocks.extend(layer.iter().map(|&i| children[i].take().expect("part in one layer")));
        let order: Vec<usize> = if blocks.len() == 2 {
            if coin.flip() { vec![1, 0] } else { vec![0, 1] }
        } else {
            let block_reps: Vec<usize> = core::iter::once(v).chain(layer.iter().map(|&i| reps[i])).collect();
            let k = block_reps.len();
            let mut quotient = UndirectedGraph::new(k);
            for a in 0..k {
                for b in a + 1..k {
                    if g.has_edge(block_reps[a], block_reps[b]) {
                        quotient.add_edge(a, b);
                    }
                }
            }
            prime_order(&quotient, coin)
        };
        for i in order {
            inner.append(&mut blocks[i]);
        }
    }
    inner
}

/// Transitive ordering of a prime comparability graph.
fn prime_order(q: &UndirectedGraph, coin: &mut Coin) -> Vec<usize> {
    let all: Vec<usize> = (0..q.len()).collect();
    let mut refiner = Refiner::new(q.len());
    let first = refiner.run(q, &all, coin.pick(q.len()));
    let source = *first.last().and_then(|p| p.last()).expect("nonempty quotient");
    let mut order: Vec<usize> = refiner.run(q, &all, source).into_iter().flatten().collect();
    if coin.flip() {
        order.reverse();
    }
    order
}

/// Strongly connected components of the digraph `edge` on `0..k`, each
/// emitted after every component it reaches.
fn components_sinks_first(k: usize, edge: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    const NONE: usize = usize::MAX;
    let (mut index, mut low, mut on_stack) = (vec![NONE; k], vec![0; k], vec![false; k]);
    let (mut stack, mut out, mut counter) = (Vec::new(), Vec::new(), 0);
    for root in 0..k {
        if index[root] != NONE {
            continue;
        }
        let mut calls = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (u, ref mut next)) = calls.last_mut() {
            if *next < k {
                let w = *next;
                *next += 1;
                if !edge(u, w) {
                    continue;
                }
                if index[w] == NONE {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    calls.push((w, 0));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
                continue;
            }
            calls.pop();
            if let Some(&(parent, _)) = calls.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                let mut comp = Vec::new();
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    comp.push(w);
                    if w == u {
                        break;
                    }
                }
                out.push(comp);
            }
        }
    }
    out
}

/// Ordered partition refinement over a subset of the vertices.
struct Refiner {
    seq: Vec<usize>,
    part_of: Vec<usize>,
    /// `[start, end)` ranges of `seq`
    parts: Vec<(usize, usize)>,
    stamp: Vec<u64>,
    clock: u64,
}

impl Refiner {
    fn new(n: usize) -> Self {
        Self { seq: Vec::new(), part_of: vec![0; n], parts: Vec::new(), stamp: Vec::new(), clock: 0 }
    }

    /// Coarsest refinement of `({v}, set - {v})` into modules of `g[set]`,
    /// as vertex lists in left-to-right order; `[v]` comes first.
    fn run(&mut self, g: &UndirectedGraph, set: &[usize], v: usize) -> Vec<Vec<usize>> {
        self.seq.clear();
        self.seq.push(v);
        self.seq.extend(set.iter().copied().filter(|&u| u != v));
        for (i, &u) in self.seq.iter().enumerate() {
            self.part_of[u] = usize::from(i > 0);
        }
        self.parts.clear();
        self.parts.push((0, 1));
        self.parts.push((1, set.len()));
        // a task `(a, b)` lets every vertex of piece `a` split whatever parts
        // now cover piece `b`; a piece is dropped once no task needs it
        let mut pieces: Vec<Vec<usize>> = vec![vec![v], self.seq[1..].to_vec()];
        let mut pending = vec![1usize, 1];
        let mut tasks: Vec<(usize, usize)> = vec![(0, 1)];
        while let Some((pa, pb)) = tasks.pop() {
            for i in 0..pieces[pa].len() {
                let x = pieces[pa][i];
                self.clock += 1;
                self.stamp.resize(self.parts.len(), 0);
                let mut hit = Vec::new();
                for &s in &pieces[pb] {
                    let y = self.part_of[s];
                    if self.stamp[y] != self.clock {
                        self.stamp[y] = self.clock;
                        hit.push(y);
                    }
                }
                for y in hit {
                    if let Some((a, b)) = self.split(g, x, y) {
                        let (ia, ib) = (pieces.len(), pieces.len() + 1);
                        let (ta, tb) = (usize::from(b.len() > 1), usize::from(a.len() > 1));
                        if ta == 1 {
                            tasks.push((ia, ib));
                        }
                        if tb == 1 {
                            tasks.push((ib, ia));
                        }
                        pending.push(ta + tb);
                        pending.push(ta + tb);
                        pieces.push(a);
                        pieces.push(b);
                    }
                }
            }
            for p in [pa, pb] {
                pending[p] -= 1;
                if pending[p] == 0 {
                    pieces[p] = Vec::new();
                }
            }
        }
        let mut order: Vec<usize> = (0..self.parts.len()).collect();
        order.sort_unstable_by_key(|&p| self.parts[p].0);
        order.into_iter().map(|p| self.seq[self.parts[p].0..self.parts[p].1].to_vec()).collect()
    }

    /// Splits part `y` by the neighbourhood of `x`; returns both pieces in
    /// their new left-to-right order.
    fn split(&mut self, g: &UndirectedGraph, x: usize, y: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let (start, end) = self.parts[y];
        let adj = g.neighbors(x);
        let count = self.seq[start..end].iter().filter(|&&u| adj.contains(u)).count();
        if count == 0 || count == end - start {
            return None;
        }
        let (near, far): (Vec<usize>, Vec<usize>) = self.seq[start..end].iter().partition(|&&u| adj.contains(u));
        let right_of_x = start > self.parts[self.part_of[x]].0;
        let (a, b) = if right_of_x { (far, near) } else { (near, far) };
        let mid = start + a.len();
        for (i, &u) in a.iter().chain(&b).enumerate() {
            self.seq[start + i] = u;
        }
        let id = self.parts.len();
        self.parts[y] = (start, mid);
        self.parts.push((mid, end));
        for &u in &b {
            self.part_of[u] = id;
        }
        Some((a, b))
    }
}
