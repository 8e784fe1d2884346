//! Transitive orientation by implication classes (Γ-forcing).
//!
//! Edges are removed class by class: the implication class of an arbitrary
//! remaining edge is explored in the current edge set, oriented, and deleted.
//! The graph is a comparability graph iff no class contains an edge in both
//! directions, and the union of the oriented classes is then transitive.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::poset::Poset;

/// Simple undirected graph with bit-row adjacency.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UndirectedGraph {
    adj: Vec<BitSet>,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        Self { adj: (0..n).map(|_| BitSet::new(n)).collect() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Incomparability (cocomparability) graph of `p`.
    pub fn incomparability(p: &Poset) -> Self {
        Self { adj: (0..p.len()).map(|x| p.incomparable_to(x)).collect() }
    }

    /// Ignores self-loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &BitSet {
        &self.adj[u]
    }
}

/// Result of [`transitive_orientation`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Orientation {
    /// `out[u]` holds every `v` with the edge oriented `u -> v`.
    Transitive { out: Vec<BitSet> },
    /// A chain of Γ-forcings from one edge orientation to its reverse.
    Failed { forcing_cycle: Vec<(usize, usize)> },
}

impl Orientation {
    pub fn is_transitive(&self) -> bool {
        matches!(self, Orientation::Transitive { .. })
    }

    /// Oriented edges `(u, v)` meaning `u -> v`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        match self {
            Orientation::Transitive { out } => out
                .iter()
                .enumerate()
                .flat_map(|(u, row)| row.iter().map(move |v| (u, v)))
                .collect(),
            Orientation::Failed { .. } => Vec::new(),
        }
    }
}

struct ClassExplorer {
    /// arcs of the class under construction, by tail and by head
    cls: Vec<BitSet>,
    cls_in: Vec<BitSet>,
    touched: Vec<usize>,
    is_touched: Vec<bool>,
    parents: Option<BTreeMap<(usize, usize), (usize, usize)>>,
}

enum ClassResult {
    Ok,
    Contradiction((usize, usize)),
}

impl ClassExplorer {
    fn new(n: usize) -> Self {
        Self {
            cls: (0..n).map(|_| BitSet::new(n)).collect(),
            cls_in: (0..n).map(|_| BitSet::new(n)).collect(),
            touched: Vec::new(),
            is_touched: vec![false; n],
            parents: None,
        }
    }

    fn touch(&mut self, a: usize) {
        if !self.is_touched[a] {
            self.is_touched[a] = true;
            self.touched.push(a);
        }
    }

    fn add(&mut self, a: usize, b: usize, from: (usize, usize), stack: &mut Vec<(usize, usize)>) {
        self.cls[a].insert(b);
        self.cls_in[b].insert(a);
        self.touch(a);
        self.touch(b);
        if let Some(p) = self.parents.as_mut() {
            p.insert((a, b), from);
        }
        stack.push((a, b));
    }

    fn explore(&mut self, cur: &[BitSet], start: (usize, usize)) -> ClassResult {
        let mut stack = Vec::new();
        let mut fresh = Vec::new();
        self.add(start.0, start.1, start, &mut stack);
        while let Some((a, b)) = stack.pop() {
            // a -> b forces a -> c for every c adjacent to a but not to b;
            // a forced c -> a already in the class is a contradiction
            if let Some(c) = forced(&cur[a], &cur[b], b, &self.cls_in[a], &self.cls[a], &mut fresh) {
                self.note_parent((a, c), (a, b));
                return ClassResult::Contradiction((a, c));
            }
            for c in fresh.drain(..) {
                self.add(a, c, (a, b), &mut stack);
            }
            // and c -> b for every c adjacent to b but not to a
            if let Some(c) = forced(&cur[b], &cur[a], a, &self.cls[b], &self.cls_in[b], &mut fresh) {
                self.note_parent((c, b), (a, b));
                return ClassResult::Contradiction((c, b));
            }
            for c in fresh.drain(..) {
                self.add(c, b, (a, b), &mut stack);
            }
        }
        ClassResult::Ok
    }

    fn note_parent(&mut self, arc: (usize, usize), from: (usize, usize)) {
        if let Some(p) = self.parents.as_mut() {
            p.entry(arc).or_insert(from);
        }
    }

    fn chain_to(&self, mut arc: (usize, usize)) -> Vec<(usize, usize)> {
        let parents = self.parents.as_ref().expect("parent tracking enabled");
        let mut chain = vec![arc];
        while let Some(&p) = parents.get(&arc) {
            if p == arc {
                break;
            }
            chain.push(p);
            arc = p;
        }
        chain.reverse();
        chain
    }

    fn reset(&mut self) {
        for &a in &self.touched {
            self.cls[a].clear();
            self.cls_in[a].clear();
            self.is_touched[a] = false;
        }
        self.touched.clear();
    }
}

/// Scans `mine \ theirs \ {skip}` word by word. Returns the first member of
/// `reversed` met there, else leaves the members missing from `known` in `fresh`.
fn forced(
    mine: &BitSet,
    theirs: &BitSet,
    skip: usize,
    reversed: &BitSet,
    known: &BitSet,
    fresh: &mut Vec<usize>,
) -> Option<usize> {
    let words = mine.words().iter().zip(theirs.words()).zip(reversed.words().iter().zip(known.words()));
    for (i, ((&m, &t), (&r, &k))) in words.enumerate() {
        let mut diff = m & !t;
        if i == skip / 64 {
            diff &= !(1u64 << (skip % 64));
        }
        if diff & r != 0 {
            return Some(i * 64 + (diff & r).trailing_zeros() as usize);
        }
        let mut new = diff & !k;
        while new != 0 {
            fresh.push(i * 64 + new.trailing_zeros() as usize);
            new &= new - 1;
        }
    }
    None
}

/// Transitive orientation of `g`, or a forcing cycle proving none exists.
pub fn transitive_orientation(g: &UndirectedGraph) -> Orientation {
    transitive_orientation_seeded(g, 0)
}

/// As [`transitive_orientation`]; a nonzero `seed` flips the direction of a
/// pseudo-random subset of implication classes, giving another valid orientation.
pub fn transitive_orientation_seeded(g: &UndirectedGraph, seed: u64) -> Orientation {
    let n = g.len();
    let mut cur = g.adj.clone();
    let mut out: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
    let mut explorer = ClassExplorer::new(n);
    let mut u = 0;
    let mut class_no = 0u64;
    while u < n {
        let Some(v) = cur[u].first() else {
            u += 1;
            continue;
        };
        if let ClassResult::Contradiction(arc) = explorer.explore(&cur, (u, v)) {
            // replay with parent tracking to report the forcing chain
            explorer.reset();
            explorer.parents = Some(BTreeMap::new());
            let _ = explorer.explore(&cur, (u, v));
            // arc <- .. <- start -> .. -> reversed arc
            let mut forcing_cycle = explorer.chain_to(arc);
            forcing_cycle.reverse();
            forcing_cycle.extend(explorer.chain_to((arc.1, arc.0)).into_iter().skip(1));
            return Orientation::Failed { forcing_cycle };
        }
        let flip = seed != 0 && splitmix(seed ^ class_no) & 1 == 1;
        class_no += 1;
        for &a in &explorer.touched {
            for b in explorer.cls[a].iter() {
                if flip {
                    out[b].insert(a);
                } else {
                    out[a].insert(b);
                }
                cur[a].remove(b);
                cur[b].remove(a);
            }
        }
        explorer.reset();
    }
    Orientation::Transitive { out }
}

pub(crate) fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}
