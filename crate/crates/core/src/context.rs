//! Formal contexts, derivation operators, clarification and concept enumeration.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Objects, attributes and a binary incidence relation between them.
///
/// Incidence is kept twice, once per object (its intent row) and once per
/// attribute (its extent column), so both derivations are word-parallel.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<BitSet>,
    cols: Vec<BitSet>,
}

fn check_distinct(names: &[String], what: &'static str) -> Result<()> {
    let mut seen = BTreeMap::new();
    for name in names {
        if seen.insert(name.as_str(), ()).is_some() {
            return Err(Error::DuplicateName {
                what,
                name: name.clone(),
            });
        }
    }
    Ok(())
}

impl FormalContext {
    /// Builds a context from a dense matrix indexed `[object][attribute]`.
    pub fn new(objects: Vec<String>, attributes: Vec<String>, incidence: &[Vec<bool>]) -> Result<Self> {
        if incidence.len() != objects.len() || incidence.iter().any(|r| r.len() != attributes.len()) {
            return Err(Error::ShapeMismatch {
                rows: incidence.len(),
                cols: incidence.first().map_or(0, Vec::len),
                objects: objects.len(),
                attributes: attributes.len(),
            });
        }
        let pairs = incidence.iter().enumerate().flat_map(|(g, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &x)| x)
                .map(move |(m, _)| (g, m))
        });
        Self::from_pairs(objects, attributes, pairs)
    }

    /// Builds a context from `(object index, attribute index)` incidences.
    pub fn from_pairs<I>(objects: Vec<String>, attributes: Vec<String>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_distinct(&objects, "object")?;
        check_distinct(&attributes, "attribute")?;
        let mut rows: Vec<BitSet> = (0..objects.len()).map(|_| BitSet::new(attributes.len())).collect();
        let mut cols: Vec<BitSet> = (0..attributes.len()).map(|_| BitSet::new(objects.len())).collect();
        for (g, m) in pairs {
            if g >= objects.len() {
                return Err(Error::OutOfRange { what: "objects", index: g, len: objects.len() });
            }
            if m >= attributes.len() {
                return Err(Error::OutOfRange { what: "attributes", index: m, len: attributes.len() });
            }
            rows[g].insert(m);
            cols[m].insert(g);
        }
        Ok(Self { objects, attributes, rows, cols })
    }

    pub fn empty() -> Self {
        Self { objects: Vec::new(), attributes: Vec::new(), rows: Vec::new(), cols: Vec::new() }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.attributes.len()
    }

    #[inline]
    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    /// Attributes of object `g` (its object intent `{g}'`).
    pub fn object_row(&self, g: usize) -> &BitSet {
        &self.rows[g]
    }

    /// Objects having attribute `m` (its attribute extent `{m}'`).
    pub fn attribute_extent(&self, m: usize) -> &BitSet {
        &self.cols[m]
    }

    pub fn incidence_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == name)
    }

    /// Dense copy of the incidence matrix.
    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        self.rows
            .iter()
            .map(|r| (0..self.n_attributes()).map(|m| r.contains(m)).collect())
            .collect()
    }

    /// `B'`: objects having every attribute of `attrs`.
    pub fn extent_bits(&self, attrs: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.n_objects());
        for m in attrs {
            out.intersect_with(&self.cols[m]);
        }
        out
    }

    /// `A'`: attributes shared by every object of `objs`.
    pub fn intent_bits(&self, objs: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.n_attributes());
        for g in objs {
            out.intersect_with(&self.rows[g]);
        }
        out
    }

    pub fn extent_of(&self, attrs: &[usize]) -> Result<BitSet> {
        let set = index_set(attrs, self.n_attributes(), "attributes")?;
        Ok(self.extent_bits(&set))
    }

    pub fn intent_of(&self, objs: &[usize]) -> Result<BitSet> {
        let set = index_set(objs, self.n_objects(), "objects")?;
        Ok(self.intent_bits(&set))
    }

    /// `B''` for an attribute set.
    pub fn attribute_closure(&self, attrs: &BitSet) -> BitSet {
        self.intent_bits(&self.extent_bits(attrs))
    }

    /// True when no two rows and no two columns coincide.
    pub fn is_clarified(&self) -> bool {
        first_duplicate(&self.rows).is_none() && first_duplicate(&self.cols).is_none()
    }

    /// Returns an explanation if two objects or two attributes share a derivation.
    pub fn check_clarified(&self) -> Result<()> {
        if let Some((a, b)) = first_duplicate(&self.rows) {
            return Err(Error::NotClarified(format!(
                "objects `{}` and `{}` have identical intents",
                self.objects[a], self.objects[b]
            )));
        }
        if let Some((a, b)) = first_duplicate(&self.cols) {
            return Err(Error::NotClarified(format!(
                "attributes `{}` and `{}` have identical extents",
                self.attributes[a], self.attributes[b]
            )));
        }
        Ok(())
    }

    /// Subcontext on the listed objects (in the given order) and all attributes.
    pub fn restrict_objects(&self, keep: &[usize]) -> Self {
        let objects = keep.iter().map(|&g| self.objects[g].clone()).collect();
        let pairs = keep
            .iter()
            .enumerate()
            .flat_map(|(new, &g)| self.rows[g].iter().map(move |m| (new, m)));
        Self::from_pairs(objects, self.attributes.clone(), pairs.collect::<Vec<_>>())
            .expect("restriction of a valid context")
    }

    /// Subcontext on the listed attributes (in the given order) and all objects.
    pub fn restrict_attributes(&self, keep: &[usize]) -> Self {
        let attributes = keep.iter().map(|&m| self.attributes[m].clone()).collect();
        let pairs = keep
            .iter()
            .enumerate()
            .flat_map(|(new, &m)| self.cols[m].iter().map(move |g| (g, new)));
        Self::from_pairs(self.objects.clone(), attributes, pairs.collect::<Vec<_>>())
            .expect("restriction of a valid context")
    }

    /// The context without the named object, if present.
    pub fn without_object(&self, name: &str) -> Self {
        let keep: Vec<usize> = (0..self.n_objects()).filter(|&g| self.objects[g] != name).collect();
        self.restrict_objects(&keep)
    }

    /// Pointwise intersection of two incidence relations over the same labels.
    pub fn intersect(&self, other: &FormalContext) -> Result<Self> {
        if self.objects != other.objects || self.attributes != other.attributes {
            return Err(Error::LabelMismatch("contexts have different labels".into()));
        }
        let pairs: Vec<_> = (0..self.n_objects())
            .flat_map(|g| {
                let mut row = self.rows[g].clone();
                row.intersect_with(&other.rows[g]);
                row.iter().map(move |m| (g, m)).collect::<Vec<_>>()
            })
            .collect();
        Self::from_pairs(self.objects.clone(), self.attributes.clone(), pairs)
    }
}

fn index_set(indices: &[usize], len: usize, what: &'static str) -> Result<BitSet> {
    let mut set = BitSet::new(len);
    for &i in indices {
        if i >= len {
            return Err(Error::OutOfRange { what, index: i, len });
        }
        set.insert(i);
    }
    Ok(set)
}

fn first_duplicate(sets: &[BitSet]) -> Option<(usize, usize)> {
    let mut seen: BTreeMap<&BitSet, usize> = BTreeMap::new();
    for (i, s) in sets.iter().enumerate() {
        if let Some(&j) = seen.get(s) {
            return Some((j, i));
        }
        seen.insert(s, i);
    }
    None
}

/// A context without repeated rows or columns, plus the names each survivor stands for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClarifiedContext {
    context: FormalContext,
    object_groups: Vec<Vec<String>>,
    attribute_groups: Vec<Vec<String>>,
}

impl ClarifiedContext {
    /// Wraps an already clarified context with singleton groups.
    pub fn from_clarified(context: FormalContext) -> Result<Self> {
        context.check_clarified()?;
        let object_groups = context.objects.iter().map(|o| alloc::vec![o.clone()]).collect();
        let attribute_groups = context.attributes.iter().map(|a| alloc::vec![a.clone()]).collect();
        Ok(Self { context, object_groups, attribute_groups })
    }

    pub fn context(&self) -> &FormalContext {
        &self.context
    }

    pub fn into_context(self) -> FormalContext {
        self.context
    }

    /// Original object names merged into surviving object `g` (representative first).
    pub fn object_group(&self, g: usize) -> &[String] {
        &self.object_groups[g]
    }

    pub fn attribute_group(&self, m: usize) -> &[String] {
        &self.attribute_groups[m]
    }

    pub fn object_groups(&self) -> &[Vec<String>] {
        &self.object_groups
    }

    pub fn attribute_groups(&self) -> &[Vec<String>] {
        &self.attribute_groups
    }
}

/// Merges identical rows, then identical columns, keeping the first name of each group.
pub fn clarify(ctx: &FormalContext) -> ClarifiedContext {
    let (keep_g, object_groups) = group_duplicates(&ctx.rows, &ctx.objects);
    let rows_done = ctx.restrict_objects(&keep_g);
    let (keep_m, attribute_groups) = group_duplicates(&rows_done.cols, &rows_done.attributes);
    let context = rows_done.restrict_attributes(&keep_m);
    ClarifiedContext { context, object_groups, attribute_groups }
}

fn group_duplicates(sets: &[BitSet], names: &[String]) -> (Vec<usize>, Vec<Vec<String>>) {
    let mut first: BTreeMap<&BitSet, usize> = BTreeMap::new();
    let mut keep = Vec::new();
    let mut groups: Vec<Vec<String>> = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        match first.get(s) {
            Some(&slot) => groups[slot].push(names[i].clone()),
            None => {
                first.insert(s, groups.len());
                keep.push(i);
                groups.push(alloc::vec![names[i].clone()]);
            }
        }
    }
    (keep, groups)
}

impl ClarifiedContext {
    pub fn new(ctx: &FormalContext) -> Self {
        clarify(ctx)
    }
}

/// An (extent, intent) pair closed under both derivations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FormalConcept {
    pub extent: BitSet,
    pub intent: BitSet,
}

/// All formal concepts, listed in lectic order of their intents (NextClosure).
pub fn concepts(ctx: &FormalContext) -> Vec<FormalConcept> {
    let n = ctx.n_attributes();
    let mut out = Vec::new();
    let mut intent = ctx.attribute_closure(&BitSet::new(n));
    loop {
        out.push(FormalConcept { extent: ctx.extent_bits(&intent), intent: intent.clone() });
        match next_intent(ctx, &intent) {
            Some(next) => intent = next,
            None => return out,
        }
    }
}

fn next_intent(ctx: &FormalContext, current: &BitSet) -> Option<BitSet> {
    let n = ctx.n_attributes();
    let mut prefix = current.clone();
    for i in (0..n).rev() {
        if prefix.contains(i) {
            prefix.remove(i);
            continue;
        }
        let mut candidate = prefix.clone();
        candidate.insert(i);
        let closed = ctx.attribute_closure(&candidate);
        // accept when the closure adds nothing below i
        if closed.iter_difference(&prefix).all(|m| m >= i) {
            return Some(closed);
        }
    }
    None
}

/// Contranominal scale: `n` objects and attributes, `g_i I m_j` iff `i != j`.
pub fn make_contranominal(n: usize) -> Result<FormalContext> {
    if n == 0 {
        return Err(Error::InvalidArgument("contranominal scale needs n >= 1".into()));
    }
    let objects = (1..=n).map(|i| format!("g{i}")).collect();
    let attributes = (1..=n).map(|i| format!("m{i}")).collect();
    let pairs = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)));
    FormalContext::from_pairs(objects, attributes, pairs.collect::<Vec<_>>())
}
