//! Interchange documents for interval and rectangle diagrams.
//!
//! ```json
//! {"dimension": 1, "intervals": {"m": [0, 2]}, "points": {"g": 1},
//!  "groups": {"objects": {"g": ["g", "h"]}, "attributes": {"m": ["m"]}}}
//! ```
//!
//! Two-dimensional documents carry `rectangles` (`[[x1, x2], [y1, y2]]`)
//! and `[x, y]` points instead. Maps keep the diagram's label order.

use eulerdim_core::{ClarifiedContext, EulerDiagram1D, EulerDiagram2D, Interval};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Diagram {
    One(EulerDiagram1D),
    Two(EulerDiagram2D),
}

impl Diagram {
    pub fn dimension(&self) -> u8 {
        match self {
            Diagram::One(_) => 1,
            Diagram::Two(_) => 2,
        }
    }
}

/// Clarification groups: each surviving label and the original labels it stands for.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Groups {
    pub objects: IndexMap<String, Vec<String>>,
    pub attributes: IndexMap<String, Vec<String>>,
}

impl Groups {
    pub fn from_clarified(c: &ClarifiedContext) -> Self {
        let ctx = c.context();
        Self {
            objects: ctx.objects().iter().cloned().zip(c.object_groups().iter().cloned()).collect(),
            attributes: ctx.attributes().iter().cloned().zip(c.attribute_groups().iter().cloned()).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Point {
    Line(i64),
    Plane([i64; 2]),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    dimension: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    intervals: Option<IndexMap<String, [i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rectangles: Option<IndexMap<String, [[i64; 2]; 2]>>,
    points: IndexMap<String, Point>,
    #[serde(default)]
    groups: Groups,
}

fn pair(iv: Interval) -> [i64; 2] {
    [iv.start, iv.end]
}

/// Pretty-printed document for `d`.
pub fn emit_json(d: &Diagram, groups: &Groups) -> String {
    let doc = match d {
        Diagram::One(d) => Document {
            dimension: 1,
            intervals: Some(d.attributes.iter().cloned().zip(d.intervals.iter().map(|&iv| pair(iv))).collect()),
            rectangles: None,
            points: d.objects.iter().cloned().zip(d.points.iter().map(|&p| Point::Line(p))).collect(),
            groups: groups.clone(),
        },
        Diagram::Two(d) => Document {
            dimension: 2,
            intervals: None,
            rectangles: Some(
                (0..d.attributes().len())
                    .map(|m| {
                        let (x, y) = d.rectangle(m);
                        (d.attributes()[m].clone(), [pair(x), pair(y)])
                    })
                    .collect(),
            ),
            points: (0..d.objects().len())
                .map(|g| {
                    let (x, y) = d.point(g);
                    (d.objects()[g].clone(), Point::Plane([x, y]))
                })
                .collect(),
            groups: groups.clone(),
        },
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("documents always serialize");
    out.push('\n');
    out
}

fn interval([a, b]: [i64; 2]) -> Result<Interval> {
    if a > b {
        return Err(Error::Document(format!("interval [{a}, {b}] is reversed")));
    }
    Ok(Interval::new(a, b))
}

/// Parses a document written by [`emit_json`].
pub fn parse_json(text: &str) -> Result<(Diagram, Groups)> {
    let doc: Document = serde_json::from_str(text)?;
    let objects: Vec<String> = doc.points.keys().cloned().collect();
    let diagram = match (doc.dimension, doc.intervals, doc.rectangles) {
        (1, Some(intervals), None) => {
            let points = doc
                .points
                .values()
                .map(|p| match p {
                    Point::Line(x) => Ok(*x),
                    Point::Plane(_) => Err(Error::Document("1-dimensional document with a 2-dimensional point".into())),
                })
                .collect::<Result<_>>()?;
            Diagram::One(EulerDiagram1D {
                attributes: intervals.keys().cloned().collect(),
                intervals: intervals.values().map(|&iv| interval(iv)).collect::<Result<_>>()?,
                objects,
                points,
            })
        }
        (2, None, Some(rectangles)) => {
            let points = doc
                .points
                .values()
                .map(|p| match p {
                    Point::Plane(xy) => Ok(*xy),
                    Point::Line(_) => Err(Error::Document("2-dimensional document with a 1-dimensional point".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            let attributes: Vec<String> = rectangles.keys().cloned().collect();
            let axis = |i: usize| -> Result<EulerDiagram1D> {
                Ok(EulerDiagram1D {
                    attributes: attributes.clone(),
                    intervals: rectangles.values().map(|r| interval(r[i])).collect::<Result<_>>()?,
                    objects: objects.clone(),
                    points: points.iter().map(|p| p[i]).collect(),
                })
            };
            Diagram::Two(EulerDiagram2D { x: axis(0)?, y: axis(1)? })
        }
        (dim, ..) => {
            return Err(Error::Document(format!(
                "dimension {dim} needs `intervals` (1) or `rectangles` (2), and not both"
            )))
        }
    };
    Ok((diagram, doc.groups))
}
