//! One-dimensional Euler diagrams: one closed interval per attribute, one
//! point per object, incidence shown by containment.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::context::{concepts, ClarifiedContext, FormalContext};
use crate::dimension::{
    brute_force_dimension, transitive_orientation, two_dim_realizer_seeded, Orientation, UndirectedGraph,
};
use crate::error::{Error, Result};
use crate::poset::{euler_poset, LinearExtension};

/// Closed integer interval `[start, end]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Interval {
    pub start: i64,
    pub end: i64,
}

impl Interval {
    pub fn new(start: i64, end: i64) -> Self {
        Self { start, end }
    }

    #[inline]
    pub fn contains(&self, p: i64) -> bool {
        self.start <= p && p <= self.end
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let start = self.start.max(other.start);
        let end = self.end.min(other.end);
        (start <= end).then_some(Interval { start, end })
    }

    pub fn is_degenerate(&self) -> bool {
        self.start == self.end
    }
}

/// Intervals and points, both listed in the order of their labels.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EulerDiagram1D {
    pub attributes: Vec<String>,
    pub intervals: Vec<Interval>,
    pub objects: Vec<String>,
    pub points: Vec<i64>,
}

impl EulerDiagram1D {
    pub fn interval(&self, attribute: &str) -> Option<Interval> {
        self.attributes.iter().position(|a| a == attribute).map(|i| self.intervals[i])
    }

    pub fn point(&self, object: &str) -> Option<i64> {
        self.objects.iter().position(|o| o == object).map(|i| self.points[i])
    }

    /// All interval endpoints, sorted and deduplicated.
    pub fn boundaries(&self) -> Vec<i64> {
        let mut b: Vec<i64> = self.intervals.iter().flat_map(|iv| [iv.start, iv.end]).collect();
        b.sort_unstable();
        b.dedup();
        b
    }

    /// The incidence this diagram displays, over its own labels.
    pub fn read_context(&self) -> Result<FormalContext> {
        let pairs: Vec<(usize, usize)> = (0..self.objects.len())
            .flat_map(|g| {
                (0..self.attributes.len())
                    .filter(move |&m| self.intervals[m].contains(self.points[g]))
                    .map(move |m| (g, m))
            })
            .collect();
        FormalContext::from_pairs(self.objects.clone(), self.attributes.clone(), pairs)
    }
}

/// Sweeps two linear extensions of an Euler-poset into a diagram.
///
/// Element indices follow [`euler_poset`]: `0..|G|` are the objects of
/// `ctx`, `|G|..|G|+|M|` its attributes. Reading `L₁` from the top down
/// assigns interval starts, reading `L₂` from the bottom up assigns interval
/// ends; between consecutive objects all boundaries share one even coordinate
/// `k` and the object sits at `k + 1`. The object orders of `L₁` and `L₂`
/// must be mutually inverse.
///
/// The point of `g` lies in the interval of `m` iff `g` is below `m` in both
/// extensions.
pub fn euler_from_linear_extensions(
    ctx: &FormalContext,
    l1: &LinearExtension,
    l2: &LinearExtension,
) -> Result<EulerDiagram1D> {
    let ng = ctx.n_objects();
    let n = ng + ctx.n_attributes();
    for l in [l1, l2] {
        let mut seen = alloc::vec![false; n];
        if l.order.len() != n || l.order.iter().any(|&x| x >= n || core::mem::replace(&mut seen[x], true)) {
            return Err(Error::NotAPermutation);
        }
    }
    let top_down: Vec<usize> = l1.order.iter().rev().copied().collect();
    let bottom_up = &l2.order;
    let objects_td: Vec<usize> = top_down.iter().copied().filter(|&x| x < ng).collect();
    let objects_bu: Vec<usize> = bottom_up.iter().copied().filter(|&x| x < ng).collect();
    if let Some(i) = (0..ng).find(|&i| objects_td[i] != objects_bu[i]) {
        // objects_bu[i] precedes objects_td[i] in L₂ and, reading L₁ upwards, too
        return Err(Error::NotInverseObjectOrders(
            ctx.objects()[objects_bu[i]].clone(),
            ctx.objects()[objects_td[i]].clone(),
        ));
    }

    let mut start = alloc::vec![0i64; ctx.n_attributes()];
    let mut end = alloc::vec![0i64; ctx.n_attributes()];
    let mut points = alloc::vec![0i64; ng];
    let (mut i, mut j, mut k) = (0usize, 0usize, 0i64);
    loop {
        while i < n && top_down[i] >= ng {
            start[top_down[i] - ng] = k;
            i += 1;
        }
        while j < n && bottom_up[j] >= ng {
            end[bottom_up[j] - ng] = k;
            j += 1;
        }
        if i == n && j == n {
            break;
        }
        debug_assert_eq!(top_down[i], bottom_up[j]);
        points[top_down[i]] = k + 1;
        k += 2;
        i += 1;
        j += 1;
    }
    Ok(EulerDiagram1D {
        attributes: ctx.attributes().to_vec(),
        // Outside a 2-realizer an attribute can sit below every object in
        // both extensions; it then holds no point and collapses onto its end.
        intervals: start.into_iter().zip(end).map(|(s, e)| Interval::new(s.min(e), e)).collect(),
        objects: ctx.objects().to_vec(),
        points,
    })
}

/// Outcome of [`euler1d`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OneDimOutcome {
    Diagram(EulerDiagram1D),
    NotRealizable {
        /// Γ-forcing chain (element names) showing the incomparability graph
        /// of the Euler-poset has no transitive orientation.
        forcing_cycle: Vec<(String, String)>,
        /// Exact dimension of the Euler-poset when it has at most nine elements.
        dimension: Option<usize>,
    },
}

impl OneDimOutcome {
    pub fn diagram(&self) -> Option<&EulerDiagram1D> {
        match self {
            OneDimOutcome::Diagram(d) => Some(d),
            OneDimOutcome::NotRealizable { .. } => None,
        }
    }

    pub fn is_realizable(&self) -> bool {
        matches!(self, OneDimOutcome::Diagram(_))
    }
}

/// Poset size up to which a not-realizable verdict carries the exact dimension.
pub const DIAGNOSTIC_BRUTE_FORCE_LIMIT: usize = 9;

/// Interval diagram for a clarified context, if one exists.
pub fn euler1d(ctx: &ClarifiedContext) -> Result<OneDimOutcome> {
    euler1d_seeded(ctx, 0)
}

pub fn euler1d_seeded(ctx: &ClarifiedContext, seed: u64) -> Result<OneDimOutcome> {
    let ctx = ctx.context();
    let poset = euler_poset(ctx)?;
    match two_dim_realizer_seeded(&poset, seed)? {
        Some((l1, l2)) => Ok(OneDimOutcome::Diagram(euler_from_linear_extensions(ctx, &l1, &l2)?)),
        None => {
            let forcing_cycle = match transitive_orientation(&UndirectedGraph::incomparability(&poset)) {
                Orientation::Failed { forcing_cycle } => forcing_cycle
                    .into_iter()
                    .map(|(a, b)| (String::from(poset.name(a)), String::from(poset.name(b))))
                    .collect(),
                Orientation::Transitive { .. } => Vec::new(),
            };
            let dimension = if poset.len() <= DIAGNOSTIC_BRUTE_FORCE_LIMIT {
                brute_force_dimension(&poset, poset.len().max(2))?.value()
            } else {
                None
            };
            Ok(OneDimOutcome::NotRealizable { forcing_cycle, dimension })
        }
    }
}

/// Every two distinct boundary values have a point strictly between them.
pub fn is_conceptual(d: &EulerDiagram1D) -> bool {
    let mut pts = d.points.clone();
    pts.sort_unstable();
    d.boundaries().windows(2).all(|w| {
        let first_above = pts.partition_point(|&p| p <= w[0]);
        first_above < pts.len() && pts[first_above] < w[1]
    })
}

/// `(object index in d, attribute index in d)` for each context label.
fn align(d: &EulerDiagram1D, ctx: &FormalContext) -> Result<(Vec<usize>, Vec<usize>)> {
    let obj = label_map(&d.objects, ctx.objects(), "objects")?;
    let att = label_map(&d.attributes, ctx.attributes(), "attributes")?;
    Ok((obj, att))
}

pub(crate) fn label_map(have: &[String], want: &[String], what: &str) -> Result<Vec<usize>> {
    if have.len() != want.len() {
        return Err(Error::LabelMismatch(format!("{what}: {} vs {}", have.len(), want.len())));
    }
    let index: BTreeMap<&str, usize> = have.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    want.iter()
        .map(|w| {
            index
                .get(w.as_str())
                .copied()
                .ok_or_else(|| Error::LabelMismatch(format!("{what}: `{w}` missing from diagram")))
        })
        .collect()
}

/// Containment in `d` reproduces the incidence of `ctx` exactly.
pub fn verify_correspondence_1d(d: &EulerDiagram1D, ctx: &FormalContext) -> Result<bool> {
    let (obj, att) = align(d, ctx)?;
    for g in 0..ctx.n_objects() {
        let p = d.points[obj[g]];
        for m in 0..ctx.n_attributes() {
            if d.intervals[att[m]].contains(p) != ctx.incident(g, m) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that concepts map one-to-one onto the nonempty interval intersections.
///
/// Each concept `(A, B)` is sent to the intersection of the intervals of `B`
/// (the whole line for `B = ∅`). The map must be injective, each image must
/// contain exactly the points of `A`, and every intersection of a nonempty
/// family of intervals that contains an object point must be an image.
/// Any family intersection equals the intersection of its member with the
/// largest start and its member with the smallest end, so single intervals
/// and pairwise intersections are all the candidates there are.
/// Intersections without any object point (single shared boundary
/// coordinates) are not counted as regions.
pub fn verify_chi(d: &EulerDiagram1D, ctx: &FormalContext) -> Result<bool> {
    if !is_conceptual(d) {
        return Err(Error::Precondition("diagram is not conceptual".into()));
    }
    if !verify_correspondence_1d(d, ctx)? {
        return Err(Error::Precondition("diagram does not correspond to the context".into()));
    }
    let (obj, att) = align(d, ctx)?;
    // None = whole line, Some(None) = empty
    let mut images: BTreeMap<Option<Option<Interval>>, usize> = BTreeMap::new();
    for (ci, c) in concepts(ctx).iter().enumerate() {
        let image: Option<Option<Interval>> = c.intent.iter().fold(None, |acc, m| {
            let iv = d.intervals[att[m]];
            Some(match acc {
                None => Some(iv),
                Some(None) => None,
                Some(Some(cur)) => cur.intersect(&iv),
            })
        });
        for g in 0..ctx.n_objects() {
            let p = d.points[obj[g]];
            let inside = match image {
                None => true,
                Some(None) => false,
                Some(Some(iv)) => iv.contains(p),
            };
            if inside != c.extent.contains(g) {
                return Ok(false);
            }
        }
        if images.insert(image, ci).is_some() {
            return Ok(false);
        }
    }
    let ivs = &d.intervals;
    let mut candidates: Vec<Interval> = ivs.clone();
    for a in 0..ivs.len() {
        for b in a + 1..ivs.len() {
            if let Some(iv) = ivs[a].intersect(&ivs[b]) {
                candidates.push(iv);
            }
        }
    }
    for iv in candidates {
        let has_point = d.points.iter().any(|&p| iv.contains(p));
        if has_point && !images.contains_key(&Some(Some(iv))) {
            return Ok(false);
        }
    }
    Ok(true)
}
