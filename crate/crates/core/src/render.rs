//! Figure emission: meander arc diagrams and partition discs as SVG, Hasse
//! diagrams as DOT.
//!
//! All output is deterministic — identical input and options give
//! byte-identical documents. Coordinates are formatted with two decimal
//! places throughout.

use std::fmt::Write;

use crate::meander::MeanderSystem;
use crate::noncross::{HasseGraph, NoncrossingPartition};

/// Twelve distinguishable colors, cycled by component or block index.
pub const PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
    "#7f7f7f", "#bcbd22", "#aec7e8", "#98df8a",
];

#[derive(Debug, Clone)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    pub stroke_width: f64,
    /// Color every arc by the closed curve it belongs to; otherwise all arcs
    /// are black.
    pub color_by_component: bool,
    /// Draw the crossing-point labels (`⌐i` and `i′` on the line, `1..n`
    /// around the disc).
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 640,
            height: 360,
            stroke_width: 2.0,
            color_by_component: true,
            labels: true,
        }
    }
}

impl RenderOptions {
    fn assert_valid(&self) {
        assert!(
            self.width > 0 && self.height > 0,
            "render dimensions must be positive"
        );
    }
}

/// Arc diagram of a meander system: `2n` evenly spaced points on a
/// horizontal line, the `i`-th upper arc a semicircle above the line from
/// position `2i` to position `2 upper(i) - 1`, lower arcs mirrored below.
pub fn render_meander(m: &MeanderSystem, opts: &RenderOptions) -> String {
    opts.assert_valid();
    let n = m.n();
    let width = f64::from(opts.width);
    let height = f64::from(opts.height);
    let margin = width / 10.0;
    let step = if n > 1 {
        (width - 2.0 * margin) / (2 * n - 1) as f64
    } else {
        width - 2.0 * margin
    };
    let x = |position: usize| margin + (position - 1) as f64 * step;
    let y = height / 2.0;

    // Arc color = index of the closed curve through it, read off the cycles
    // of upper^-1 lower.
    let product = m.upper().inverse().compose(m.lower());
    let mut component_of = vec![0usize; n + 1];
    for (index, cycle) in product.cycles().iter().enumerate() {
        for &point in cycle {
            component_of[point] = index;
        }
    }

    let mut svg = svg_header(opts.width, opts.height);
    let _ = writeln!(
        svg,
        "  <line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"#999999\" stroke-width=\"1\"/>",
        margin - step / 2.0,
        x(2 * n) + step / 2.0,
    );
    for (i, &component) in component_of.iter().enumerate().skip(1) {
        let color = arc_color(opts, component);
        let upper = arc_path(x(2 * i), x(2 * m.upper().apply(i) - 1), y, true);
        let lower = arc_path(x(2 * i), x(2 * m.lower().apply(i) - 1), y, false);
        for d in [upper, lower] {
            let _ = writeln!(
                svg,
                "  <path d=\"{d}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{:.2}\"/>",
                opts.stroke_width
            );
        }
    }
    for position in 1..=2 * n {
        let _ = writeln!(
            svg,
            "  <circle cx=\"{:.2}\" cy=\"{y:.2}\" r=\"3.00\" fill=\"#000000\"/>",
            x(position)
        );
    }
    if opts.labels {
        for i in 1..=n {
            for (position, label) in [(2 * i - 1, format!("⌐{i}")), (2 * i, format!("{i}′"))] {
                let _ = writeln!(
                    svg,
                    "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
                    x(position),
                    y + 20.0,
                    escape_xml(&label)
                );
            }
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn arc_color(opts: &RenderOptions, component: usize) -> &'static str {
    if opts.color_by_component {
        PALETTE[component % PALETTE.len()]
    } else {
        "#000000"
    }
}

/// A semicircle between two x positions on the baseline; drawn left to
/// right, sweep 1 bulges above the line and sweep 0 below.
fn arc_path(x1: f64, x2: f64, y: f64, above: bool) -> String {
    let (lo, hi) = if x1 <= x2 { (x1, x2) } else { (x2, x1) };
    let radius = (hi - lo) / 2.0;
    let sweep = if above { 1 } else { 0 };
    format!("M {lo:.2} {y:.2} A {radius:.2} {radius:.2} 0 0 {sweep} {hi:.2} {y:.2}")
}

/// Disc picture of a noncrossing partition: points `1..n` placed
/// counter-clockwise on a circle starting at the top, each block drawn as
/// the convex hull of its points (a polygon, a chord, or a dot).
pub fn render_partition_disc(p: &NoncrossingPartition, opts: &RenderOptions) -> String {
    opts.assert_valid();
    let n = p.n();
    let width = f64::from(opts.width);
    let height = f64::from(opts.height);
    let cx = width / 2.0;
    let cy = height / 2.0;
    let radius = 0.4 * width.min(height);
    // SVG's y axis points down, so negate the sine to make the labels run
    // counter-clockwise visually.
    let point = |i: usize| {
        let theta = std::f64::consts::FRAC_PI_2
            + 2.0 * std::f64::consts::PI * (i - 1) as f64 / n as f64;
        (cx + radius * theta.cos(), cy - radius * theta.sin())
    };

    let mut svg = svg_header(opts.width, opts.height);
    let _ = writeln!(
        svg,
        "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{radius:.2}\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>"
    );
    for block in p.blocks() {
        match block.as_slice() {
            [i] => {
                let (px, py) = point(*i);
                let _ = writeln!(
                    svg,
                    "  <circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"5.00\" fill=\"#000000\"/>"
                );
            }
            [i, j] => {
                let (x1, y1) = point(*i);
                let (x2, y2) = point(*j);
                let _ = writeln!(
                    svg,
                    "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#000000\" stroke-width=\"{:.2}\"/>",
                    opts.stroke_width
                );
            }
            _ => {
                // Block elements are sorted, which is the circular order of
                // their positions, so they already trace the convex hull.
                let points: Vec<String> = block
                    .iter()
                    .map(|&i| {
                        let (px, py) = point(i);
                        format!("{px:.2},{py:.2}")
                    })
                    .collect();
                let _ = writeln!(
                    svg,
                    "  <polygon points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{:.2}\"/>",
                    points.join(" "),
                    opts.stroke_width
                );
            }
        }
    }
    for i in 1..=n {
        let (px, py) = point(i);
        let _ = writeln!(
            svg,
            "  <circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"3.00\" fill=\"#000000\"/>"
        );
    }
    if opts.labels {
        let label_radius = radius + 16.0;
        for i in 1..=n {
            let theta = std::f64::consts::FRAC_PI_2
                + 2.0 * std::f64::consts::PI * (i - 1) as f64 / n as f64;
            let _ = writeln!(
                svg,
                "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">{i}</text>",
                cx + label_radius * theta.cos(),
                cy - label_radius * theta.sin()
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

/// DOT description of a Hasse diagram: one node per partition labeled by its
/// block string, nodes of equal grade on one rank, one undirected edge per
/// covering relation.
pub fn hasse_dot(graph: &HasseGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph lattice_{} {{", graph.n());
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box fontsize=10];");
    let vertices = graph.vertices();
    let mut start = 0;
    while start < vertices.len() {
        let grade = vertices[start].grade();
        let mut end = start;
        while end < vertices.len() && vertices[end].grade() == grade {
            end += 1;
        }
        let _ = write!(out, "  {{ rank=same;");
        for (index, vertex) in vertices.iter().enumerate().take(end).skip(start) {
            let _ = write!(out, " v{index} [label=\"{}\"];", escape_dot(&vertex.to_string()));
        }
        let _ = writeln!(out, " }}");
        start = end;
    }
    for &(lower, upper) in graph.edges() {
        let _ = writeln!(out, "  v{lower} -- v{upper};");
    }
    out.push_str("}\n");
    out
}

fn svg_header(width: u32, height: u32) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    )
}

fn escape_xml(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn escape_dot(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}
