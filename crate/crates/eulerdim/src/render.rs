//! SVG output for interval and rectangle diagrams.
//!
//! Every shape is shrunk inwards by an inset proportional to its nesting
//! level on each axis, so shapes sharing a coordinate stay apart. The total
//! shrink stays below half a coordinate step; points sit at least one step
//! away from any boundary, so drawn containment equals logical containment.

use std::fmt::Write as _;

use eulerdim_core::{EulerDiagram1D, EulerDiagram2D, Interval};

/// Fixed palette; an attribute's color is picked by a stable hash of its name.
pub const PALETTE: [&str; 12] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
    "#1b9e77", "#7570b3",
];

#[derive(Clone, Debug, PartialEq)]
pub struct RenderStyle {
    /// Pixels per coordinate step.
    pub unit: f64,
    /// Pixels of shrink per nesting level; clamped to keep the total below `unit / 2`.
    pub inset: f64,
    pub font_size: f64,
    pub margin: f64,
    /// Height of one bar row in interval diagrams.
    pub row_height: f64,
    pub point_radius: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self { unit: 24.0, inset: 2.0, font_size: 11.0, margin: 24.0, row_height: 20.0, point_radius: 4.0 }
    }
}

impl RenderStyle {
    /// Inset actually used for `levels` nesting levels.
    pub fn effective_inset(&self, levels: usize) -> f64 {
        let cap = 0.45 * self.unit / levels.max(1) as f64;
        self.inset.min(cap)
    }
}

/// Palette entry for an attribute name (FNV-1a, stable across runs and platforms).
pub fn color_of(name: &str) -> &'static str {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    PALETTE[(h % PALETTE.len() as u64) as usize]
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PixelRect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl PixelRect {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        self.x0 <= x && x <= self.x1 && self.y0 <= y && y <= self.y1
    }
}

/// Pixel geometry of a rendered diagram: one box per attribute (bars for
/// interval diagrams) and one center per object, in diagram order.
#[derive(Clone, Debug, PartialEq)]
pub struct Layout {
    pub width: f64,
    pub height: f64,
    pub shapes: Vec<PixelRect>,
    pub points: Vec<(f64, f64)>,
}

/// Nesting level per interval: how many others strictly contain it, plus
/// equal ones listed earlier. Counting from one keeps touching outermost
/// shapes apart too.
fn levels(ivs: &[Interval]) -> Vec<usize> {
    (0..ivs.len())
        .map(|i| {
            1 + (0..ivs.len())
                .filter(|&j| j != i && ivs[j].contains_interval(&ivs[i]) && (ivs[j] != ivs[i] || j < i))
                .count()
        })
        .collect()
}

fn span(ivs: &[Interval], points: &[i64]) -> (i64, i64) {
    let lo = ivs.iter().map(|iv| iv.start).chain(points.iter().copied()).min().unwrap_or(0);
    let hi = ivs.iter().map(|iv| iv.end).chain(points.iter().copied()).max().unwrap_or(0);
    (lo, hi)
}

/// Bar rows ordered by start, ties by end descending.
fn row_order(ivs: &[Interval]) -> Vec<usize> {
    let mut rows: Vec<usize> = (0..ivs.len()).collect();
    rows.sort_by_key(|&m| (ivs[m].start, std::cmp::Reverse(ivs[m].end), m));
    rows
}

pub fn layout_1d(d: &EulerDiagram1D, style: &RenderStyle) -> Layout {
    let (lo, hi) = span(&d.intervals, &d.points);
    let lv = levels(&d.intervals);
    let inset = style.effective_inset(lv.iter().copied().max().unwrap_or(1));
    let x = |c: i64| style.margin + (c - lo) as f64 * style.unit;
    let mut shapes = vec![PixelRect { x0: 0.0, y0: 0.0, x1: 0.0, y1: 0.0 }; d.intervals.len()];
    let bar = style.row_height * 0.6;
    for (row, m) in row_order(&d.intervals).into_iter().enumerate() {
        let top = style.margin + row as f64 * style.row_height;
        let shrink = inset * lv[m] as f64;
        shapes[m] = PixelRect {
            x0: x(d.intervals[m].start) + shrink,
            y0: top,
            x1: x(d.intervals[m].end) - shrink,
            y1: top + bar,
        };
    }
    let axis = style.margin + d.intervals.len() as f64 * style.row_height + style.row_height / 2.0;
    let points = d.points.iter().map(|&p| (x(p), axis)).collect();
    Layout {
        width: 2.0 * style.margin + (hi - lo) as f64 * style.unit,
        height: axis + style.font_size * 2.0 + style.margin,
        shapes,
        points,
    }
}

pub fn layout_2d(d: &EulerDiagram2D, style: &RenderStyle) -> Layout {
    let (xlo, xhi) = span(&d.x.intervals, &d.x.points);
    let (ylo, yhi) = span(&d.y.intervals, &d.y.points);
    let (lx, ly) = (levels(&d.x.intervals), levels(&d.y.intervals));
    let ix = style.effective_inset(lx.iter().copied().max().unwrap_or(1));
    let iy = style.effective_inset(ly.iter().copied().max().unwrap_or(1));
    let x = |c: i64| style.margin + (c - xlo) as f64 * style.unit;
    // larger y is drawn higher up
    let y = |c: i64| style.margin + (yhi - c) as f64 * style.unit;
    let shapes = (0..d.attributes().len())
        .map(|m| {
            let (rx, ry) = d.rectangle(m);
            PixelRect {
                x0: x(rx.start) + ix * lx[m] as f64,
                x1: x(rx.end) - ix * lx[m] as f64,
                y0: y(ry.end) + iy * ly[m] as f64,
                y1: y(ry.start) - iy * ly[m] as f64,
            }
        })
        .collect();
    let points = (0..d.objects().len())
        .map(|g| {
            let (px, py) = d.point(g);
            (x(px), y(py))
        })
        .collect();
    Layout {
        width: 2.0 * style.margin + (xhi - xlo) as f64 * style.unit,
        height: 2.0 * style.margin + (yhi - ylo) as f64 * style.unit,
        shapes,
        points,
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

fn open(out: &mut String, layout: &Layout, style: &RenderStyle) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}" font-family="sans-serif" font-size="{f:.1}">"#,
        w = layout.width,
        h = layout.height,
        f = style.font_size,
    );
    let _ = writeln!(
        out,
        r##"<rect class="frame" x="0.5" y="0.5" width="{:.1}" height="{:.1}" fill="white" stroke="#cccccc"/>"##,
        layout.width - 1.0,
        layout.height - 1.0
    );
}

fn shape(out: &mut String, class: &str, r: &PixelRect, name: &str) {
    let color = color_of(name);
    let _ = writeln!(
        out,
        r#"<rect class="{class}" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{color}" fill-opacity="0.18" stroke="{color}" stroke-width="1.5"><title>{}</title></rect>"#,
        r.x0,
        r.y0,
        (r.x1 - r.x0).max(0.0),
        (r.y1 - r.y0).max(0.0),
        escape(name)
    );
}

fn disk(out: &mut String, (x, y): (f64, f64), name: &str, style: &RenderStyle, label: (f64, f64)) {
    let _ = writeln!(
        out,
        r#"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="{:.1}" fill="black"><title>{n}</title></circle><text x="{:.2}" y="{:.2}">{n}</text>"#,
        style.point_radius,
        x + label.0,
        y + label.1,
        n = escape(name)
    );
}

/// One bar per interval on its own row, dashed guides at every boundary,
/// labeled points on an axis below.
pub fn render_svg_1d(d: &EulerDiagram1D, style: &RenderStyle) -> String {
    let layout = layout_1d(d, style);
    let mut out = String::new();
    open(&mut out, &layout, style);
    let (lo, _) = span(&d.intervals, &d.points);
    let axis = layout.points.first().map_or(layout.height - style.margin, |p| p.1);
    for b in d.boundaries() {
        let x = style.margin + (b - lo) as f64 * style.unit;
        let _ = writeln!(
            out,
            r##"<line class="guide" x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{axis:.2}" stroke="#999999" stroke-dasharray="3 3"/>"##,
            style.margin / 2.0
        );
    }
    for m in row_order(&d.intervals) {
        let r = layout.shapes[m];
        shape(&mut out, "bar", &r, &d.attributes[m]);
        let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, r.x0 + 3.0, r.y1 - 3.0, escape(&d.attributes[m]));
    }
    for (g, &p) in layout.points.iter().enumerate() {
        disk(&mut out, p, &d.objects[g], style, (-style.font_size / 2.0, style.font_size * 1.6));
    }
    out.push_str("</svg>\n");
    out
}

/// Rectangles with attribute labels at their top-left corners, labeled points.
pub fn render_svg_2d(d: &EulerDiagram2D, style: &RenderStyle) -> String {
    let layout = layout_2d(d, style);
    let mut out = String::new();
    open(&mut out, &layout, style);
    for (m, r) in layout.shapes.iter().enumerate() {
        shape(&mut out, "rectangle", r, &d.attributes()[m]);
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" fill="{}">{}</text>"#,
            r.x0 + 2.0,
            r.y0 + style.font_size,
            color_of(&d.attributes()[m]),
            escape(&d.attributes()[m])
        );
    }
    for (g, &p) in layout.points.iter().enumerate() {
        disk(&mut out, p, &d.objects()[g], style, (style.point_radius + 2.0, style.font_size / 3.0));
    }
    out.push_str("</svg>\n");
    out
}
