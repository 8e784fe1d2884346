//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use eulerdim_core::context::{clarify, ClarifiedContext, FormalContext};
use eulerdim_core::euler1d::{EulerDiagram1D, Interval};
use eulerdim_core::poset::LinearExtension;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn random_context(rng: &mut impl Rng, ng: usize, nm: usize, density: f64) -> FormalContext {
    let rows: Vec<Vec<bool>> = (0..ng).map(|_| (0..nm).map(|_| rng.gen_bool(density)).collect()).collect();
    FormalContext::new(names("g", ng), names("m", nm), &rows).unwrap()
}

/// Random clarified context with at most `max_total` objects plus attributes.
pub fn random_clarified(rng: &mut impl Rng, max_total: usize) -> ClarifiedContext {
    let ng = rng.gen_range(0..=max_total);
    let nm = rng.gen_range(0..=max_total - ng);
    let density = rng.gen_range(0.15..0.85);
    clarify(&random_context(rng, ng, nm, density))
}

/// Random interval diagram on coordinates `0..width`.
pub fn random_diagram_1d(rng: &mut impl Rng, ng: usize, nm: usize, width: i64) -> EulerDiagram1D {
    let intervals = (0..nm)
        .map(|_| {
            let a = rng.gen_range(0..width);
            let b = rng.gen_range(0..width);
            Interval::new(a.min(b), a.max(b))
        })
        .collect();
    EulerDiagram1D {
        attributes: names("m", nm),
        intervals,
        objects: names("g", ng),
        points: (0..ng).map(|_| rng.gen_range(0..width)).collect(),
    }
}

/// Random interval diagram in which every interval holds at least one point.
pub fn anchored_diagram_1d(rng: &mut impl Rng, ng: usize, nm: usize, width: i64) -> EulerDiagram1D {
    assert!(ng > 0 || nm == 0);
    let points: Vec<i64> = (0..ng).map(|_| rng.gen_range(0..width)).collect();
    let reach = (width / 2).max(1);
    let intervals = (0..nm)
        .map(|_| {
            let p = points[rng.gen_range(0..ng)];
            Interval::new(p - rng.gen_range(0..reach), p + rng.gen_range(0..reach))
        })
        .collect();
    EulerDiagram1D { attributes: names("m", nm), intervals, objects: names("g", ng), points }
}

/// Axis-aligned rectangles and points sampled on a grid.
#[derive(Clone, Debug)]
pub struct Sketch2D {
    pub rects: Vec<(Interval, Interval)>,
    pub points: Vec<(i64, i64)>,
}

impl Sketch2D {
    pub fn random(rng: &mut impl Rng, ng: usize, nm: usize, grid: i64) -> Self {
        let iv = |rng: &mut dyn rand::RngCore| {
            let a = rng.gen_range(0..grid);
            let b = rng.gen_range(0..grid);
            Interval::new(a.min(b), a.max(b))
        };
        let rects = (0..nm).map(|_| (iv(rng), iv(rng))).collect();
        let points = (0..ng).map(|_| (rng.gen_range(0..grid), rng.gen_range(0..grid))).collect();
        Self { rects, points }
    }

    /// Like [`Sketch2D::random`], but every rectangle is grown around one of
    /// the points, so no attribute ends up with an empty extent.
    pub fn anchored(rng: &mut impl Rng, ng: usize, nm: usize, grid: i64) -> Self {
        assert!(ng > 0 || nm == 0);
        let points: Vec<(i64, i64)> = (0..ng).map(|_| (rng.gen_range(0..grid), rng.gen_range(0..grid))).collect();
        let reach = (grid / 2).max(1);
        let rects = (0..nm)
            .map(|_| {
                let (x, y) = points[rng.gen_range(0..ng)];
                (
                    Interval::new(x - rng.gen_range(0..reach), x + rng.gen_range(0..reach)),
                    Interval::new(y - rng.gen_range(0..reach), y + rng.gen_range(0..reach)),
                )
            })
            .collect();
        Self { rects, points }
    }

    pub fn inside(&self, g: usize, m: usize) -> bool {
        let (x, y) = self.points[g];
        self.rects[m].0.contains(x) && self.rects[m].1.contains(y)
    }

    pub fn context(&self) -> FormalContext {
        let rows: Vec<Vec<bool>> =
            (0..self.points.len()).map(|g| (0..self.rects.len()).map(|m| self.inside(g, m)).collect()).collect();
        FormalContext::new(names("g", self.points.len()), names("m", self.rects.len()), &rows).unwrap()
    }

    /// Clarified context together with the sketch restricted to the survivors.
    pub fn clarified(&self) -> (ClarifiedContext, Sketch2D) {
        let c = clarify(&self.context());
        let idx = |n: &str| n[1..].parse::<usize>().unwrap();
        let sketch = Sketch2D {
            rects: c.context().attributes().iter().map(|m| self.rects[idx(m)]).collect(),
            points: c.context().objects().iter().map(|g| self.points[idx(g)]).collect(),
        };
        (c, sketch)
    }

    /// Two linear extensions per axis over objects and attributes in
    /// Euler-poset layout (objects first). Each rectangle is first shrunk to
    /// the bounding box of the points it holds, so that extent inclusion
    /// becomes box inclusion; an attribute without points goes directly in
    /// front of the first attribute. Ties put objects before attributes and
    /// smaller extents first.
    pub fn decompose(&self, ctx: &FormalContext) -> [LinearExtension; 4] {
        let ng = self.points.len();
        let nm = self.rects.len();
        let extent_size: Vec<usize> = (0..nm).map(|m| ctx.attribute_extent(m).len()).collect();
        let bbox = |m: usize, axis: usize| -> Option<Interval> {
            let coords: Vec<i64> = (0..ng)
                .filter(|&g| ctx.incident(g, m))
                .map(|g| if axis == 0 { self.points[g].0 } else { self.points[g].1 })
                .collect();
            Some(Interval::new(*coords.iter().min()?, *coords.iter().max()?))
        };
        let mut out = Vec::new();
        for axis in 0..2 {
            let coord = |g: usize| if axis == 0 { self.points[g].0 } else { self.points[g].1 };
            let boxes: Vec<Option<Interval>> = (0..nm).map(|m| bbox(m, axis)).collect();
            // (primary, class, secondary, element)
            let mut by_start: Vec<(i64, usize, i64, usize)> = Vec::new();
            let mut by_end: Vec<(i64, usize, i64, usize)> = Vec::new();
            for g in 0..ng {
                by_start.push((-coord(g), 0, g as i64, g));
                by_end.push((coord(g), 0, -(g as i64), g));
            }
            let mut empty = None;
            for m in 0..nm {
                match boxes[m] {
                    Some(b) => {
                        let tie = (extent_size[m] * (nm + 1) + m) as i64;
                        by_start.push((-b.start, 1, tie, ng + m));
                        by_end.push((b.end, 1, tie, ng + m));
                    }
                    None => empty = Some(ng + m),
                }
            }
            for mut list in [by_start, by_end] {
                list.sort_unstable();
                let mut order: Vec<usize> = list.iter().map(|t| t.3).collect();
                if let Some(e) = empty {
                    let at = order.iter().position(|&x| x >= ng).unwrap_or(order.len());
                    order.insert(at, e);
                }
                out.push(LinearExtension::new(order));
            }
        }
        out.try_into().unwrap()
    }
}

/// Reflexive reachability by breadth-first search.
pub fn reachability(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut succ = vec![Vec::new(); n];
    for &(a, b) in pairs {
        succ[a].push(b);
    }
    (0..n)
        .map(|s| {
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &succ[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            seen
        })
        .collect()
}

/// Random DAG: edges only from lower to higher index, then shuffled labels.
pub fn random_dag(rng: &mut impl Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    pairs
}
