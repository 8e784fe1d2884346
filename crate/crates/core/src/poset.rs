//! Finite partial orders stored as dense up-set/down-set bit rows.

use alloc::collections::{BTreeMap, BTreeSet, BinaryHeap};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::bits::BitSet;
use crate::context::{concepts, FormalContext};
use crate::error::{Error, Result};

/// Where an element of an (extended) Euler-poset comes from.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ElementKind {
    Plain,
    Object(usize),
    Attribute(usize),
    ObjectCopy1(usize),
    ObjectCopy2(usize),
    /// Frame element `a_i`, `i` in `1..=4`.
    FrameA(u8),
    /// Frame element `b_i`, `i` in `1..=4`.
    FrameB(u8),
}

impl ElementKind {
    pub fn is_object(self) -> bool {
        matches!(self, ElementKind::Object(_))
    }

    pub fn is_attribute(self) -> bool {
        matches!(self, ElementKind::Attribute(_))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    kinds: Vec<ElementKind>,
    index: BTreeMap<String, usize>,
    /// `up[x]` = `{ y | x <= y }`
    up: Vec<BitSet>,
    /// `down[x]` = `{ y | y <= x }`
    down: Vec<BitSet>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("len", &self.len())
            .field("covers", &self.covers())
            .finish()
    }
}

/// Adjacency list of the covering relation, one line per element.
impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers = self.covers();
        for x in 0..self.len() {
            write!(f, "{} <:", self.names[x])?;
            for &(_, y) in covers.iter().filter(|(a, _)| *a == x) {
                write!(f, " {}", self.names[y])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn transpose(rows: &[BitSet]) -> Vec<BitSet> {
    let n = rows.len();
    let mut out: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
    for (x, row) in rows.iter().enumerate() {
        for y in row {
            out[y].insert(x);
        }
    }
    out
}

fn build_index(names: &[String]) -> Result<BTreeMap<String, usize>> {
    let mut index = BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(Error::DuplicateName { what: "element", name: n.clone() });
        }
    }
    Ok(index)
}

impl Poset {
    /// Assembles a poset from up-set rows that are already reflexive and
    /// transitive. Antisymmetry is not rechecked here.
    fn from_up_rows(names: Vec<String>, kinds: Vec<ElementKind>, up: Vec<BitSet>) -> Result<Self> {
        let index = build_index(&names)?;
        let down = transpose(&up);
        Ok(Self { names, kinds, index, up, down })
    }

    /// Transitive, reflexive closure of the strict relation `pairs` (`x < y`).
    pub fn from_relation(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let kinds = vec![ElementKind::Plain; names.len()];
        Self::from_relation_with_kinds(names, kinds, pairs)
    }

    pub fn from_relation_with_kinds(
        names: Vec<String>,
        kinds: Vec<ElementKind>,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let n = names.len();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(x, y) in pairs {
            for v in [x, y] {
                if v >= n {
                    return Err(Error::OutOfRange { what: "elements", index: v, len: n });
                }
            }
            if x == y {
                continue;
            }
            succ[x].push(y);
            indegree[y] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &succ[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() < n {
            let (a, b) = cycle_witness(&succ, &indegree);
            return Err(Error::NotAntisymmetric(names[a].clone(), names[b].clone()));
        }
        let mut up: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for &v in order.iter().rev() {
            let mut row = BitSet::new(n);
            row.insert(v);
            for &w in &succ[v] {
                row.union_with(&up[w]);
            }
            up[v] = row;
        }
        Self::from_up_rows(names, kinds, up)
    }

    /// Convenience constructor over element names.
    pub fn from_named_relation(names: &[&str], pairs: &[(&str, &str)]) -> Result<Self> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let index = build_index(&owned)?;
        let mut idx = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            let a = *index.get(*x).ok_or_else(|| Error::UnknownElement(x.to_string()))?;
            let b = *index.get(*y).ok_or_else(|| Error::UnknownElement(y.to_string()))?;
            idx.push((a, b));
        }
        Self::from_relation(owned, &idx)
    }

    /// Antichain on `n` elements named `0..n`.
    pub fn antichain(n: usize) -> Self {
        Self::from_relation((0..n).map(|i| i.to_string()).collect(), &[]).expect("antichain")
    }

    /// Chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relation((0..n).map(|i| i.to_string()).collect(), &pairs).expect("chain")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn kind(&self, x: usize) -> ElementKind {
        self.kinds[x]
    }

    pub fn kinds(&self) -> &[ElementKind] {
        &self.kinds
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// First element of the given kind.
    pub fn find_kind(&self, kind: ElementKind) -> Option<usize> {
        self.kinds.iter().position(|&k| k == kind)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{ y | x <= y }`
    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    /// `{ y | y <= x }`
    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    /// Elements incomparable to `x` (excluding `x`).
    pub fn incomparable_to(&self, x: usize) -> BitSet {
        let mut s = self.up[x].clone();
        s.union_with(&self.down[x]);
        s.complement()
    }

    /// Reflexivity, antisymmetry and transitivity of the stored relation.
    pub fn check_order_axioms(&self) -> Result<()> {
        for x in 0..self.len() {
            if !self.leq(x, x) {
                return Err(Error::Verification(format!("`{}` is not reflexive", self.names[x])));
            }
            for y in self.up[x].iter() {
                if y != x && self.leq(y, x) {
                    return Err(Error::NotAntisymmetric(self.names[x].clone(), self.names[y].clone()));
                }
                if !self.up[y].is_subset(&self.up[x]) {
                    return Err(Error::Verification(format!(
                        "relation is not transitive through `{}`",
                        self.names[y]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let mut between = self.up[x].clone();
                between.intersect_with(&self.down[y]);
                if between.len() == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// All ordered incomparable pairs `(x, y)`, each unordered pair listed both ways.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.incomparable_to(x).iter() {
                out.push((x, y));
            }
        }
        out
    }

    /// Induced suborder on `keep`, in that order.
    pub fn restrict(&self, keep: &[usize]) -> Poset {
        let mut remap = vec![usize::MAX; self.len()];
        for (i, &x) in keep.iter().enumerate() {
            remap[x] = i;
        }
        let up = keep
            .iter()
            .map(|&x| {
                BitSet::from_indices(
                    keep.len(),
                    self.up[x].iter().filter(|&y| remap[y] != usize::MAX).map(|y| remap[y]),
                )
            })
            .collect();
        let names = keep.iter().map(|&x| self.names[x].clone()).collect();
        let kinds = keep.iter().map(|&x| self.kinds[x]).collect();
        Self::from_up_rows(names, kinds, up).expect("restriction keeps names distinct")
    }

    /// Same order with every relation reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            names: self.names.clone(),
            kinds: self.kinds.clone(),
            index: self.index.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// A linear extension of this order plus the extra strict constraints
    /// `extra` (`x` before `y`), or `None` when they create a cycle.
    /// Among available elements, the one with the smallest `key` goes first.
    pub fn linear_extension_with<K: Ord + Copy>(
        &self,
        extra: &[(usize, usize)],
        key: impl Fn(usize) -> K,
    ) -> Option<LinearExtension> {
        let n = self.len();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for x in 0..n {
            for y in self.up[x].iter().filter(|&y| y != x) {
                succ[x].push(y);
                indegree[y] += 1;
            }
        }
        for &(x, y) in extra {
            succ[x].push(y);
            indegree[y] += 1;
        }
        let mut heap: BinaryHeap<Reverse<(K, usize)>> =
            (0..n).filter(|&v| indegree[v] == 0).map(|v| Reverse((key(v), v))).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse((_, v))) = heap.pop() {
            order.push(v);
            for &w in &succ[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    heap.push(Reverse((key(w), w)));
                }
            }
        }
        (order.len() == n).then_some(LinearExtension { order })
    }

    /// Index-order linear extension.
    pub fn some_linear_extension(&self) -> LinearExtension {
        self.linear_extension_with(&[], |v| v).expect("a poset is acyclic")
    }

    /// True iff `order` lists every element once and respects `<=`.
    pub fn is_linear_extension(&self, order: &[usize]) -> Result<bool> {
        let pos = self.positions(order)?;
        Ok(self.respects(&pos))
    }

    fn positions(&self, order: &[usize]) -> Result<Vec<usize>> {
        let n = self.len();
        if order.len() != n {
            return Err(Error::NotAPermutation);
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in order.iter().enumerate() {
            if x >= n || pos[x] != usize::MAX {
                return Err(Error::NotAPermutation);
            }
            pos[x] = i;
        }
        Ok(pos)
    }

    fn respects(&self, pos: &[usize]) -> bool {
        (0..self.len()).all(|x| self.up[x].iter().all(|y| pos[x] <= pos[y]))
    }

    /// True iff every extension is linear and their intersection is exactly `<=`.
    pub fn realizes(&self, realizer: &Realizer) -> Result<bool> {
        let mut all_pos = Vec::with_capacity(realizer.extensions.len());
        for ext in &realizer.extensions {
            let pos = self.positions(&ext.order)?;
            if !self.respects(&pos) {
                return Ok(false);
            }
            all_pos.push(pos);
        }
        // every incomparable (x, y) needs an extension placing y below x
        for x in 0..self.len() {
            for y in self.incomparable_to(x).iter() {
                if !all_pos.iter().any(|pos| pos[y] < pos[x]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn cycle_witness(succ: &[Vec<usize>], indegree: &[usize]) -> (usize, usize) {
    // every leftover vertex has a leftover predecessor; walk backwards from any one
    let stuck: BTreeSet<usize> = (0..succ.len()).filter(|&v| indegree[v] > 0).collect();
    let start = *stuck.iter().next().expect("cycle exists");
    let mut next = start;
    for &v in &stuck {
        if succ[start].contains(&v) {
            next = v;
            break;
        }
    }
    (start, next)
}

/// A total order on a poset's elements, smallest first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearExtension {
    pub order: Vec<usize>,
}

impl LinearExtension {
    pub fn new(order: Vec<usize>) -> Self {
        Self { order }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `pos[x]` is the rank of element `x`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &x) in self.order.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }

    pub fn reversed(&self) -> Self {
        Self { order: self.order.iter().rev().copied().collect() }
    }

    /// Keeps the elements in `keep` (old indices), renumbered by their position in `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let mut remap = BTreeMap::new();
        for (i, &x) in keep.iter().enumerate() {
            remap.insert(x, i);
        }
        Self { order: self.order.iter().filter_map(|x| remap.get(x).copied()).collect() }
    }

    pub fn names<'a>(&self, p: &'a Poset) -> Vec<&'a str> {
        self.order.iter().map(|&x| p.name(x)).collect()
    }
}

/// A family of linear extensions over one poset.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Realizer {
    pub extensions: Vec<LinearExtension>,
}

impl Realizer {
    pub fn new(extensions: Vec<LinearExtension>) -> Self {
        Self { extensions }
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }
}

const RESERVED: [&str; 8] = ["a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"];

/// Makes `name` distinct from everything in `taken` and from the reserved
/// frame and copy names by prefixing backslashes.
fn escape_name(name: &str, taken: &BTreeSet<String>) -> String {
    let mut out = String::from(name);
    if RESERVED.contains(&name) || name.ends_with("#1") || name.ends_with("#2") || name.starts_with('\\') {
        out.insert(0, '\\');
    }
    while taken.contains(&out) {
        out.insert(0, '\\');
    }
    out
}

fn element_names(ctx: &FormalContext) -> (Vec<String>, Vec<String>) {
    let mut taken = BTreeSet::new();
    let mut objs = Vec::new();
    for g in ctx.objects() {
        let n = escape_name(g, &taken);
        taken.insert(n.clone());
        objs.push(n);
    }
    let mut attrs = Vec::new();
    for m in ctx.attributes() {
        let n = escape_name(m, &taken);
        taken.insert(n.clone());
        attrs.push(n);
    }
    (objs, attrs)
}

/// Object–attribute order: objects first (indices `0..|G|`), then attributes.
///
/// `g < m` iff `g` has `m`; `m1 <= m2` iff `m1' ⊆ m2'`; objects are pairwise
/// incomparable and never above an attribute. The context must be clarified.
pub fn euler_poset(ctx: &FormalContext) -> Result<Poset> {
    ctx.check_clarified()?;
    let ng = ctx.n_objects();
    let nm = ctx.n_attributes();
    let n = ng + nm;
    let mut up = Vec::with_capacity(n);
    for g in 0..ng {
        let mut row = BitSet::new(n);
        row.insert(g);
        for m in ctx.object_row(g) {
            row.insert(ng + m);
        }
        up.push(row);
    }
    // largest extents first, so every row above is finished before it is
    // merged; a merged row settles all the pairs it implies
    let mut by_size: Vec<usize> = (0..nm).collect();
    by_size.sort_by_key(|&m| Reverse(ctx.attribute_extent(m).len()));
    let mut rows = vec![BitSet::new(n); nm];
    for (i, &m1) in by_size.iter().enumerate() {
        let e1 = ctx.attribute_extent(m1);
        let mut row = BitSet::new(n);
        row.insert(ng + m1);
        for &m2 in by_size[..i].iter().rev() {
            if !row.contains(ng + m2) && e1.is_subset(ctx.attribute_extent(m2)) {
                row.union_with(&rows[m2]);
            }
        }
        rows[m1] = row;
    }
    up.extend(rows);
    let (objs, attrs) = element_names(ctx);
    let names = objs.into_iter().chain(attrs).collect();
    let kinds = (0..ng).map(ElementKind::Object).chain((0..nm).map(ElementKind::Attribute)).collect();
    Poset::from_up_rows(names, kinds, up)
}

/// Index layout of an extended Euler-poset built from a context with `ng`
/// objects and `nm` attributes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExtendedLayout {
    pub ng: usize,
    pub nm: usize,
}

impl ExtendedLayout {
    pub fn object(&self, g: usize) -> usize {
        g
    }
    pub fn copy1(&self, g: usize) -> usize {
        self.ng + g
    }
    pub fn copy2(&self, g: usize) -> usize {
        2 * self.ng + g
    }
    pub fn attribute(&self, m: usize) -> usize {
        3 * self.ng + m
    }
    /// `a_i` for `i` in `1..=4`.
    pub fn frame_a(&self, i: usize) -> usize {
        3 * self.ng + self.nm + i - 1
    }
    /// `b_i` for `i` in `1..=4`.
    pub fn frame_b(&self, i: usize) -> usize {
        3 * self.ng + self.nm + 4 + i - 1
    }
    pub fn len(&self) -> usize {
        3 * self.ng + self.nm + 8
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    /// Indices of `G ∪ M` in the order objects, attributes; this matches the
    /// element order of [`euler_poset`].
    pub fn base_elements(&self) -> Vec<usize> {
        (0..self.ng).chain((0..self.nm).map(|m| self.attribute(m))).collect()
    }
}

/// Strict generating pairs of the extended Euler-poset.
fn extended_generators(ctx: &FormalContext, lay: ExtendedLayout) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for g in 0..lay.ng {
        for m in ctx.object_row(g) {
            pairs.push((lay.object(g), lay.attribute(m)));
        }
        pairs.push((lay.object(g), lay.copy1(g)));
        pairs.push((lay.object(g), lay.copy2(g)));
        pairs.push((lay.frame_a(1), lay.copy1(g)));
        pairs.push((lay.frame_a(2), lay.copy1(g)));
        pairs.push((lay.frame_a(3), lay.copy2(g)));
        pairs.push((lay.frame_a(4), lay.copy2(g)));
    }
    for m1 in 0..lay.nm {
        for m2 in 0..lay.nm {
            if m1 != m2 && ctx.attribute_extent(m1).is_subset(ctx.attribute_extent(m2)) {
                pairs.push((lay.attribute(m1), lay.attribute(m2)));
            }
        }
    }
    for i in 1..=4 {
        for j in 1..=4 {
            if i != j {
                pairs.push((lay.frame_a(i), lay.frame_b(j)));
            }
        }
        for x in lay.base_elements() {
            pairs.push((x, lay.frame_b(i)));
        }
    }
    pairs
}

/// Euler-poset extended by two copies of every object and a four-element
/// standard-example frame `a1..a4`, `b1..b4`.
///
/// Layout: `G`, `G₁`, `G₂`, `M`, `a1..a4`, `b1..b4` (see [`ExtendedLayout`]).
/// The relation is the reflexive-transitive closure of the generating
/// conditions; construction fails if that closure relates any pair the
/// definition declares incomparable.
pub fn extended_euler_poset(ctx: &FormalContext) -> Result<Poset> {
    ctx.check_clarified()?;
    let lay = ExtendedLayout { ng: ctx.n_objects(), nm: ctx.n_attributes() };
    let (objs, attrs) = element_names(ctx);
    let mut names = Vec::with_capacity(lay.len());
    let mut kinds = Vec::with_capacity(lay.len());
    names.extend(objs.iter().cloned());
    kinds.extend((0..lay.ng).map(ElementKind::Object));
    names.extend(objs.iter().map(|g| format!("{g}#1")));
    kinds.extend((0..lay.ng).map(ElementKind::ObjectCopy1));
    names.extend(objs.iter().map(|g| format!("{g}#2")));
    kinds.extend((0..lay.ng).map(ElementKind::ObjectCopy2));
    names.extend(attrs);
    kinds.extend((0..lay.nm).map(ElementKind::Attribute));
    for i in 1..=4u8 {
        names.push(format!("a{i}"));
        kinds.push(ElementKind::FrameA(i));
    }
    for i in 1..=4u8 {
        names.push(format!("b{i}"));
        kinds.push(ElementKind::FrameB(i));
    }
    let generators = extended_generators(ctx, lay);
    let poset = Poset::from_relation_with_kinds(names, kinds, &generators)?;
    // the closure must not relate anything beyond the generating pairs
    let mut explicit: Vec<BitSet> = (0..lay.len()).map(|x| BitSet::from_indices(lay.len(), [x])).collect();
    for &(x, y) in &generators {
        explicit[x].insert(y);
    }
    for x in 0..lay.len() {
        if let Some(y) = poset.up_set(x).first_not_in(&explicit[x]) {
            return Err(Error::Verification(format!(
                "closure adds `{}` < `{}`, which the definition leaves incomparable",
                poset.name(x),
                poset.name(y)
            )));
        }
    }
    Ok(poset)
}

/// Standard example `S_n`: `a_i < b_j` iff `i != j`.
pub fn make_standard_example(n: usize) -> Result<Poset> {
    if n < 2 {
        return Err(Error::InvalidArgument("standard example needs n >= 2".into()));
    }
    let names = (1..=n).map(|i| format!("a{i}")).chain((1..=n).map(|i| format!("b{i}"))).collect();
    let pairs: Vec<_> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))).collect();
    Poset::from_relation(names, &pairs)
}

/// Concepts ordered by extent inclusion, in lectic order of intents.
pub fn concept_lattice_poset(ctx: &FormalContext) -> Poset {
    let cs = concepts(ctx);
    let n = cs.len();
    let up = (0..n)
        .map(|i| BitSet::from_indices(n, (0..n).filter(|&j| cs[i].extent.is_subset(&cs[j].extent))))
        .collect();
    let names = (0..n).map(|i| format!("c{i}")).collect();
    Poset::from_up_rows(names, vec![ElementKind::Plain; n], up).expect("concept names are distinct")
}

/// Searches for an induced standard example `S_k` (`a_i < b_j` iff `i != j`,
/// `a_i || b_i`). Returns `(a, b)` index lists, lexicographically first by `a`.
pub fn find_standard_example(p: &Poset, k: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut a = Vec::with_capacity(k);
    let mut b = Vec::with_capacity(k);
    if extend_standard_example(p, k, &mut a, &mut b) {
        Some((a, b))
    } else {
        None
    }
}

fn extend_standard_example(p: &Poset, k: usize, a: &mut Vec<usize>, b: &mut Vec<usize>) -> bool {
    if a.len() == k {
        return true;
    }
    let lo = a.last().map_or(0, |&x| x + 1);
    for x in lo..p.len() {
        // new a must be below every chosen b and incomparable-free with chosen a's tops
        if b.iter().any(|&y| !p.lt(x, y)) || a.iter().any(|&y| p.comparable(x, y)) {
            continue;
        }
        for y in p.incomparable_to(x).iter() {
            if a.iter().any(|&z| !p.lt(z, y)) || b.contains(&y) {
                continue;
            }
            a.push(x);
            b.push(y);
            if extend_standard_example(p, k, a, b) {
                return true;
            }
            a.pop();
            b.pop();
        }
    }
    false
}
