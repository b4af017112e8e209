//! SVG output for drawings, in y-up coordinates.

use std::fmt::Write;

use crate::kernel::{Drawing, Edge};
use crate::validate::{validate_drawing, Mode, ValidateError};
use crate::Point;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    /// Width and height of the image in pixels.
    pub size: f64,
    pub margin: f64,
    pub stroke_width: f64,
    pub vertex_radius: f64,
    pub edge_color: String,
    pub vertex_color: String,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            size: 480.0,
            margin: 24.0,
            stroke_width: 1.5,
            vertex_radius: 3.0,
            edge_color: "#1f4e9c".into(),
            vertex_color: "#000000".into(),
        }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn extent(d: &Drawing) -> (Point, Point) {
    let mut pts = d.vertices.clone();
    for e in &d.edges {
        match e {
            Edge::Bend(b) => pts.push(b.bend),
            Edge::Arc(a) => {
                if let Some(g) = d.arc_geometry(a) {
                    pts.extend((1..16).map(|i| g.point_at(i as f64 / 16.0)));
                }
            }
        }
    }
    let lo = pts.iter().fold(Point::new(f64::INFINITY, f64::INFINITY), |m, p| Point::new(m.x.min(p.x), m.y.min(p.y)));
    let hi = pts
        .iter()
        .fold(Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY), |m, p| Point::new(m.x.max(p.x), m.y.max(p.y)));
    (lo, hi)
}

/// Renders a drawing that is valid in multigraph mode. Arcs become elliptical
/// arc commands; the large-arc flag is set iff `α < π/2`.
pub fn render_svg(d: &Drawing, opts: &SvgOptions) -> Result<String, ValidateError> {
    let report = validate_drawing(d, Mode::Multigraph);
    if !report.valid {
        return Err(ValidateError::Invalid(Box::new(report)));
    }
    let size = opts.size;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        num(size)
    )
    .unwrap();
    if d.vertices.is_empty() {
        out.push_str("</svg>\n");
        return Ok(out);
    }
    let (lo, hi) = extent(d);
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-12);
    let s = (size - 2.0 * opts.margin) / span;
    let tx = opts.margin - lo.x * s + 0.5 * (span - (hi.x - lo.x)) * s;
    let ty = size - opts.margin + lo.y * s - 0.5 * (span - (hi.y - lo.y)) * s;
    writeln!(out, r#"<g transform="translate({} {}) scale({} {})">"#, num(tx), num(ty), num(s), num(-s)).unwrap();
    writeln!(
        out,
        r#"<g fill="none" stroke="{}" stroke-width="{}" vector-effect="non-scaling-stroke">"#,
        opts.edge_color,
        num(opts.stroke_width)
    )
    .unwrap();
    let large = u8::from(d.alpha.cmp_frac_pi(1, 2).is_lt());
    for e in &d.edges {
        match e {
            Edge::Arc(a) => {
                let Some(g) = d.arc_geometry(a) else { continue };
                let sweep = u8::from(g.sweep > 0.0);
                writeln!(
                    out,
                    r#"<path d="M {} {} A {r} {r} 0 {large} {sweep} {} {}" vector-effect="non-scaling-stroke"/>"#,
                    num(g.start.x),
                    num(g.start.y),
                    num(g.end.x),
                    num(g.end.y),
                    r = num(g.radius),
                )
                .unwrap();
            }
            Edge::Bend(b) => {
                let (p, q) = (d.vertices[b.u], d.vertices[b.v]);
                writeln!(
                    out,
                    r#"<path d="M {} {} L {} {} L {} {}" vector-effect="non-scaling-stroke"/>"#,
                    num(p.x),
                    num(p.y),
                    num(b.bend.x),
                    num(b.bend.y),
                    num(q.x),
                    num(q.y)
                )
                .unwrap();
            }
        }
    }
    out.push_str("</g>\n");
    writeln!(out, r#"<g fill="{}">"#, opts.vertex_color).unwrap();
    for p in &d.vertices {
        writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, num(p.x), num(p.y), num(opts.vertex_radius / s)).unwrap();
    }
    out.push_str("</g>\n</g>\n</svg>\n");
    Ok(out)
}
