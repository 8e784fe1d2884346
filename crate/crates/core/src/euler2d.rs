//! Two-dimensional Euler diagrams: axis-aligned rectangles and points,
//! assembled as the product of two interval diagrams.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::context::{ClarifiedContext, FormalContext};
use crate::dimension::{k_realizer, SearchOptions, Verdict};
use crate::error::{Error, Result};
use crate::euler1d::{euler_from_linear_extensions, label_map, EulerDiagram1D, Interval};
use crate::poset::{extended_euler_poset, ExtendedLayout, LinearExtension, Poset, Realizer};

/// Rectangle diagram; component `x` gives the horizontal intervals and
/// coordinates, component `y` the vertical ones. Both components list labels
/// in the same order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EulerDiagram2D {
    pub x: EulerDiagram1D,
    pub y: EulerDiagram1D,
}

impl EulerDiagram2D {
    pub fn attributes(&self) -> &[String] {
        &self.x.attributes
    }

    pub fn objects(&self) -> &[String] {
        &self.x.objects
    }

    /// `(x-interval, y-interval)` of attribute `m`.
    pub fn rectangle(&self, m: usize) -> (Interval, Interval) {
        (self.x.intervals[m], self.y.intervals[m])
    }

    pub fn point(&self, g: usize) -> (i64, i64) {
        (self.x.points[g], self.y.points[g])
    }

    pub fn contains(&self, m: usize, g: usize) -> bool {
        self.x.intervals[m].contains(self.x.points[g]) && self.y.intervals[m].contains(self.y.points[g])
    }

    /// The incidence this diagram displays.
    pub fn read_context(&self) -> Result<FormalContext> {
        let pairs: Vec<(usize, usize)> = (0..self.objects().len())
            .flat_map(|g| (0..self.attributes().len()).filter(move |&m| self.contains(m, g)).map(move |m| (g, m)))
            .collect();
        FormalContext::from_pairs(self.objects().to_vec(), self.attributes().to_vec(), pairs)
    }
}

/// Product of two interval diagrams over the same labels. Labels follow `e1`.
pub fn combine_1d(e1: &EulerDiagram1D, e2: &EulerDiagram1D) -> Result<EulerDiagram2D> {
    let obj = label_map(&e2.objects, &e1.objects, "objects")?;
    let att = label_map(&e2.attributes, &e1.attributes, "attributes")?;
    let y = EulerDiagram1D {
        attributes: e1.attributes.clone(),
        intervals: att.iter().map(|&i| e2.intervals[i]).collect(),
        objects: e1.objects.clone(),
        points: obj.iter().map(|&i| e2.points[i]).collect(),
    };
    Ok(EulerDiagram2D { x: e1.clone(), y })
}

/// Containment in `d` reproduces the incidence of `ctx` exactly.
pub fn verify_correspondence_2d(d: &EulerDiagram2D, ctx: &FormalContext) -> Result<bool> {
    let obj = label_map(d.objects(), ctx.objects(), "objects")?;
    let att = label_map(d.attributes(), ctx.attributes(), "attributes")?;
    for g in 0..ctx.n_objects() {
        for m in 0..ctx.n_attributes() {
            if d.contains(att[m], obj[g]) != ctx.incident(g, m) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub enum TwoDimOutcome {
    Diagram {
        diagram: EulerDiagram2D,
        /// `L₁..L₄` over the extended Euler-poset; `Lᵢ` is the one placing `bᵢ` below `aᵢ`.
        extensions: [LinearExtension; 4],
        nodes: u64,
    },
    NotRealizable { certificate: String, nodes: u64 },
    Unknown { nodes: u64 },
}

impl TwoDimOutcome {
    pub fn diagram(&self) -> Option<&EulerDiagram2D> {
        match self {
            TwoDimOutcome::Diagram { diagram, .. } => Some(diagram),
            _ => None,
        }
    }
}

/// Rectangle diagram from a 4-realizer of the extended Euler-poset.
///
/// `L₁, L₂` restricted to objects and attributes give the horizontal
/// component, `L₃, L₄` the vertical one. The result is checked against the
/// context before it is returned.
pub fn euler2d(ctx: &ClarifiedContext, opts: SearchOptions) -> Result<TwoDimOutcome> {
    let ctx = ctx.context();
    let poset = extended_euler_poset(ctx)?;
    let witness = k_realizer(&poset, 4, opts)?;
    match witness.verdict {
        Verdict::Realizable => {
            let realizer = witness.realizer.expect("realizable verdict carries a realizer");
            let (diagram, extensions) = diagram_from_realizer(ctx, &poset, &realizer)?;
            Ok(TwoDimOutcome::Diagram { diagram, extensions, nodes: witness.nodes })
        }
        Verdict::NotRealizable => Ok(TwoDimOutcome::NotRealizable {
            certificate: witness.certificate.unwrap_or_default(),
            nodes: witness.nodes,
        }),
        Verdict::Unknown => Ok(TwoDimOutcome::Unknown { nodes: witness.nodes }),
    }
}

/// Orders a 4-realizer so that `Lᵢ` is the unique extension with `bᵢ < aᵢ`.
pub fn order_by_frame(poset: &Poset, layout: ExtendedLayout, realizer: &Realizer) -> Result<[LinearExtension; 4]> {
    if realizer.len() != 4 {
        return Err(Error::Verification(format!("expected 4 extensions, got {}", realizer.len())));
    }
    let mut slots: [Option<LinearExtension>; 4] = Default::default();
    for ext in &realizer.extensions {
        let pos = ext.positions();
        let flipped: Vec<usize> =
            (1..=4).filter(|&i| pos[layout.frame_b(i)] < pos[layout.frame_a(i)]).collect();
        let [i] = flipped[..] else {
            return Err(Error::Verification(format!(
                "an extension places {} frame pairs b_i below a_i",
                flipped.len()
            )));
        };
        if slots[i - 1].replace(ext.clone()).is_some() {
            return Err(Error::Verification(format!("two extensions place b{i} below a{i}")));
        }
    }
    let _ = poset;
    Ok(slots.map(|s| s.expect("each frame pair flipped exactly once")))
}

fn diagram_from_realizer(
    ctx: &FormalContext,
    poset: &Poset,
    realizer: &Realizer,
) -> Result<(EulerDiagram2D, [LinearExtension; 4])> {
    let layout = ExtendedLayout { ng: ctx.n_objects(), nm: ctx.n_attributes() };
    let ext = order_by_frame(poset, layout, realizer)?;
    let base = layout.base_elements();
    let r: Vec<LinearExtension> = ext.iter().map(|l| l.restrict(&base)).collect();
    let component = |a: &LinearExtension, b: &LinearExtension| {
        euler_from_linear_extensions(ctx, a, b).map_err(|e| Error::Verification(format!("restricted pair: {e}")))
    };
    let horizontal = component(&r[0], &r[1])?;
    let vertical = component(&r[2], &r[3])?;
    let diagram = combine_1d(&horizontal, &vertical)?;
    if !verify_correspondence_2d(&diagram, ctx)? {
        return Err(Error::Verification("rectangle diagram does not match the context".into()));
    }
    Ok((diagram, ext))
}

/// Four linear extensions of the extended Euler-poset of `ctx`, built from a
/// 2-realizer `(L₁, L₂)` of the first component and `(L₃, L₄)` of the second.
///
/// Input extensions are over objects and attributes in Euler-poset layout.
/// Each output is `aaa · L̃ᵢ · b a · bbb · G̃ᵢ` where `L̃ᵢ` follows every object
/// with its copy (first copy for `i = 1, 2`, second for `i = 3, 4`) and `G̃ᵢ`
/// holds the other copies in the object order of `Lᵢ`. The result is checked
/// with [`Poset::realizes`].
pub fn synthesize_four_extensions(
    first: (&LinearExtension, &LinearExtension),
    second: (&LinearExtension, &LinearExtension),
    ctx: &FormalContext,
) -> Result<Realizer> {
    let poset = extended_euler_poset(ctx)?;
    let lay = ExtendedLayout { ng: ctx.n_objects(), nm: ctx.n_attributes() };
    let base = lay.base_elements();
    let inputs = [first.0, first.1, second.0, second.1];
    for l in inputs {
        if l.len() != base.len() {
            return Err(Error::NotAPermutation);
        }
    }
    // (prefix a's, b between, a between, suffix b's)
    let frames: [([usize; 3], usize, usize, [usize; 3]); 4] = [
        ([1, 2, 3], 4, 4, [3, 2, 1]),
        ([1, 2, 4], 3, 3, [4, 2, 1]),
        ([1, 3, 4], 2, 2, [4, 3, 1]),
        ([4, 3, 2], 1, 1, [2, 3, 4]),
    ];
    let mut extensions = Vec::with_capacity(4);
    for (i, (l, (pre, mid_b, mid_a, post))) in inputs.iter().zip(frames).enumerate() {
        let own_copy = |g: usize| if i < 2 { lay.copy1(g) } else { lay.copy2(g) };
        let other_copy = |g: usize| if i < 2 { lay.copy2(g) } else { lay.copy1(g) };
        let mut order = Vec::with_capacity(lay.len());
        order.extend(pre.iter().map(|&a| lay.frame_a(a)));
        for &x in &l.order {
            let el = base[x];
            order.push(el);
            if x < lay.ng {
                order.push(own_copy(x));
            }
        }
        order.push(lay.frame_b(mid_b));
        order.push(lay.frame_a(mid_a));
        order.extend(post.iter().map(|&b| lay.frame_b(b)));
        // the other copies sit above every b, or b3 < g#1 would never occur
        order.extend(l.order.iter().filter(|&&x| x < lay.ng).map(|&g| other_copy(g)));
        extensions.push(LinearExtension::new(order));
    }
    let realizer = Realizer::new(extensions);
    if !poset.realizes(&realizer)? {
        return Err(Error::Verification(
            "synthesized extensions do not realize the extended Euler-poset".into(),
        ));
    }
    Ok(realizer)
}
