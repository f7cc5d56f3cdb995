//! Static SVG 1.1 figures: the diagram with its boundary curves and the
//! graph of `h` along one slice.
//!
//! Every drawn polyline carries its data coordinates in a `data-points`
//! attribute next to the pixel `points`, and the root `<g>` records the
//! affine data-to-pixel map (`px = ax·X + bx`, `py = ay·Y + by`).

use std::collections::HashSet;
use std::fmt::Write as _;

use fh_diagram::diagram::{contains, cubic_h, phi_minus, phi_plus, slice, X_FLAT_ISOSCELES, X_MAX};
use fh_diagram::{DiagramPoint, Result};

use crate::numfmt::{sig, CSV_DIGITS};

pub const WIDTH: f64 = 640.0;
pub const HEIGHT: f64 = 560.0;
const MARGIN: f64 = 56.0;

/// Segments per boundary polyline.
pub const BOUNDARY_SEGMENTS: usize = 1024;

/// Diagram viewport in data coordinates.
pub const DIAGRAM_X_RANGE: (f64, f64) = (0.0, 0.55);
pub const DIAGRAM_Y_RANGE: (f64, f64) = (-0.05, 1.05);

/// Affine map from data to pixel coordinates (y axis flipped).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub ax: f64,
    pub bx: f64,
    pub ay: f64,
    pub by: f64,
}

impl Frame {
    pub fn new(x_range: (f64, f64), y_range: (f64, f64)) -> Self {
        let ax = (WIDTH - 2.0 * MARGIN) / (x_range.1 - x_range.0);
        let ay = -(HEIGHT - 2.0 * MARGIN) / (y_range.1 - y_range.0);
        Frame {
            ax,
            bx: MARGIN - ax * x_range.0,
            ay,
            by: MARGIN - ay * y_range.1,
        }
    }

    pub fn px(&self, x: f64) -> f64 {
        self.ax * x + self.bx
    }

    pub fn py(&self, y: f64) -> f64 {
        self.ay * y + self.by
    }
}

/// Samples drawn over the diagram.
#[derive(Debug, Clone, Default)]
pub struct Overlay {
    pub points: Vec<DiagramPoint>,
    /// Free-text description of where the samples came from.
    pub label: String,
    /// Membership tolerance used to count escapees.
    pub tol: f64,
}

struct Svg {
    body: String,
}

impl Svg {
    fn new(title: &str, metadata: &str) -> Self {
        let mut body = String::new();
        let _ = writeln!(
            body,
            r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
        );
        let _ = writeln!(
            body,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
        );
        let _ = writeln!(body, "<title>{}</title>", escape(title));
        let _ = writeln!(body, "<metadata>{}</metadata>", escape(metadata));
        let _ = writeln!(body, r#"<rect width="100%" height="100%" fill="white"/>"#);
        Svg { body }
    }

    fn open_frame(&mut self, id: &str, f: &Frame) {
        let _ = writeln!(
            self.body,
            r#"<g id="{id}" data-ax="{}" data-bx="{}" data-ay="{}" data-by="{}">"#,
            sig(f.ax, CSV_DIGITS),
            sig(f.bx, CSV_DIGITS),
            sig(f.ay, CSV_DIGITS),
            sig(f.by, CSV_DIGITS)
        );
    }

    fn polyline(&mut self, id: &str, f: &Frame, pts: &[(f64, f64)], style: &str) {
        let data = pts
            .iter()
            .map(|&(x, y)| format!("{},{}", sig(x, CSV_DIGITS), sig(y, CSV_DIGITS)))
            .collect::<Vec<_>>()
            .join(" ");
        let pixels = pts
            .iter()
            .map(|&(x, y)| format!("{:.3},{:.3}", f.px(x), f.py(y)))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(
            self.body,
            r#"<polyline id="{id}" fill="none" {style} data-points="{data}" points="{pixels}"/>"#
        );
    }

    fn axes(
        &mut self,
        f: &Frame,
        xr: (f64, f64),
        yr: (f64, f64),
        xticks: &[f64],
        yticks: &[f64],
        labels: (&str, &str),
    ) {
        let (x0, x1) = (f.px(xr.0), f.px(xr.1));
        let (y0, y1) = (f.py(yr.0), f.py(yr.1));
        let _ = writeln!(
            self.body,
            r##"<rect x="{x0:.3}" y="{y1:.3}" width="{:.3}" height="{:.3}" fill="none" stroke="#444" stroke-width="1"/>"##,
            x1 - x0,
            y0 - y1
        );
        for &t in xticks {
            let x = f.px(t);
            let _ = writeln!(
                self.body,
                r##"<line x1="{x:.3}" y1="{y0:.3}" x2="{x:.3}" y2="{:.3}" stroke="#444"/><text x="{x:.3}" y="{:.3}" font-size="11" text-anchor="middle">{}</text>"##,
                y0 + 5.0,
                y0 + 18.0,
                sig(t, 4)
            );
        }
        for &t in yticks {
            let y = f.py(t);
            let _ = writeln!(
                self.body,
                r##"<line x1="{:.3}" y1="{y:.3}" x2="{x0:.3}" y2="{y:.3}" stroke="#444"/><text x="{:.3}" y="{:.3}" font-size="11" text-anchor="end">{}</text>"##,
                x0 - 5.0,
                x0 - 8.0,
                y + 4.0,
                sig(t, 4)
            );
        }
        let _ = writeln!(
            self.body,
            r#"<text x="{:.3}" y="{:.3}" font-size="13" text-anchor="middle">{}</text>"#,
            0.5 * (x0 + x1),
            HEIGHT - 12.0,
            escape(labels.0)
        );
        let _ = writeln!(
            self.body,
            r#"<text x="14" y="{:.3}" font-size="13" text-anchor="middle" transform="rotate(-90 14 {:.3})">{}</text>"#,
            0.5 * (y0 + y1),
            0.5 * (y0 + y1),
            escape(labels.1)
        );
    }

    fn finish(mut self) -> String {
        self.body.push_str("</g>\n</svg>\n");
        self.body
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn linspace(lo: f64, hi: f64, segments: usize) -> impl Iterator<Item = f64> {
    (0..=segments).map(move |i| {
        if i == segments {
            hi
        } else {
            lo + (hi - lo) * i as f64 / segments as f64
        }
    })
}

/// The diagram: `φ₋` on `[0, 1/8]`, `φ₊` on `[0, 1/2]`, the flat segment
/// `[1/8, 1/2] × {0}`, the lines `Y = 1 − 2X` and `Y = 1 − 8X`, and an
/// optional sample scatter.
pub fn diagram_svg(overlay: Option<&Overlay>) -> Result<String> {
    let f = Frame::new(DIAGRAM_X_RANGE, DIAGRAM_Y_RANGE);
    let meta = match overlay {
        Some(o) => format!(
            "Perimeter-area-deficit diagram of triangles; samples: {}",
            o.label
        ),
        None => "Perimeter-area-deficit diagram of triangles".to_string(),
    };
    let mut svg = Svg::new("X = Q/(a+b+c)^2, Y = 12 sqrt(3) S/(a+b+c)^2", &meta);
    svg.open_frame("diagram", &f);
    svg.axes(
        &f,
        DIAGRAM_X_RANGE,
        DIAGRAM_Y_RANGE,
        &[0.0, 0.125, 0.25, 0.375, 0.5],
        &[0.0, 0.25, 0.5, 0.75, 1.0],
        ("X", "Y"),
    );

    if let Some(o) = overlay {
        let escapees = o.points.iter().filter(|p| !contains(**p, o.tol)).count();
        let _ = writeln!(
            svg.body,
            r##"<g id="samples" fill="#3b6fb6" fill-opacity="0.35" data-count="{}" data-escapees="{escapees}" data-tol="{}">"##,
            o.points.len(),
            sig(o.tol, CSV_DIGITS)
        );
        // Points landing on the same 0.25 px cell are drawn once.
        let mut seen = HashSet::new();
        for p in &o.points {
            let key = (
                (f.px(p.x) * 4.0).round() as i64,
                (f.py(p.y) * 4.0).round() as i64,
            );
            if seen.insert(key) {
                let _ = writeln!(
                    svg.body,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="0.8"/>"#,
                    key.0 as f64 / 4.0,
                    key.1 as f64 / 4.0
                );
            }
        }
        svg.body.push_str("</g>\n");
    }

    let lower: Vec<(f64, f64)> = linspace(0.0, X_FLAT_ISOSCELES, BOUNDARY_SEGMENTS)
        .map(|x| Ok((x, phi_minus(x)?)))
        .collect::<Result<_>>()?;
    let upper: Vec<(f64, f64)> = linspace(0.0, X_MAX, BOUNDARY_SEGMENTS)
        .map(|x| Ok((x, phi_plus(x)?)))
        .collect::<Result<_>>()?;
    let fh_direct: Vec<(f64, f64)> = linspace(0.0, X_MAX, BOUNDARY_SEGMENTS)
        .map(|x| (x, 1.0 - 2.0 * x))
        .collect();
    let fh_reverse: Vec<(f64, f64)> = linspace(0.0, X_FLAT_ISOSCELES, BOUNDARY_SEGMENTS)
        .map(|x| (x, 1.0 - 8.0 * x))
        .collect();

    let dashed =
        |color: &str| format!(r#"stroke="{color}" stroke-width="1.2" stroke-dasharray="6 4""#);
    let solid = r##"stroke="#c0392b" stroke-width="2""##;
    svg.polyline("fh-direct", &f, &fh_direct, &dashed("#27ae60"));
    svg.polyline("fh-reverse", &f, &fh_reverse, &dashed("#8e44ad"));
    svg.polyline("phi-minus", &f, &lower, solid);
    svg.polyline("phi-plus", &f, &upper, solid);
    svg.polyline(
        "flat-segment",
        &f,
        &[(X_FLAT_ISOSCELES, 0.0), (X_MAX, 0.0)],
        solid,
    );
    Ok(svg.finish())
}

/// Graph of `z ↦ h(z)` at fixed `X` over `[min(z₋, 0), z₊]`, with the
/// admissible `z` highlighted.
pub fn slice_svg(x: f64) -> Result<String> {
    let s = slice(x)?;
    let z_start = s.z_lo.min(0.0);
    let z_end = s.z_hi;
    let segments = 1024;
    let curve: Vec<(f64, f64)> = linspace(z_start, z_end, segments)
        .map(|z| (z, cubic_h(z, x)))
        .collect();
    let (h_min, h_max) = curve
        .iter()
        .fold((0.0f64, 0.0f64), |(lo, hi), &(_, h)| (lo.min(h), hi.max(h)));
    let pad = 0.08 * (h_max - h_min).max(1e-6);
    let z_pad = 0.05 * (z_end - z_start).max(1e-6);
    let xr = (z_start - z_pad, z_end + z_pad);
    let yr = (h_min - pad, h_max + pad);
    let f = Frame::new(xr, yr);

    let meta = format!(
        "h(z) = z^3 - z^2 + (1 - 2X) z / 3 at X = {}; admissible z highlighted",
        sig(x, CSV_DIGITS)
    );
    let mut svg = Svg::new("Slice of the diagram at fixed X", &meta);
    svg.open_frame("slice", &f);
    let ticks = |lo: f64, hi: f64| linspace(lo, hi, 4).collect::<Vec<_>>();
    svg.axes(
        &f,
        xr,
        yr,
        &ticks(z_start, z_end),
        &ticks(h_min, h_max),
        ("z", "h(z)"),
    );
    svg.polyline(
        "zero",
        &f,
        &[(xr.0, 0.0), (xr.1, 0.0)],
        r##"stroke="#999" stroke-width="1""##,
    );
    svg.polyline(
        "h",
        &f,
        &curve,
        r##"stroke="#888" stroke-width="1" stroke-dasharray="4 3""##,
    );
    for (k, &(lo, hi)) in s.z_intervals.iter().enumerate() {
        let piece: Vec<(f64, f64)> = linspace(lo, hi, segments)
            .map(|z| (z, cubic_h(z, x)))
            .collect();
        svg.polyline(
            &format!("admissible-{k}"),
            &f,
            &piece,
            r##"stroke="#c0392b" stroke-width="2.2""##,
        );
    }
    for (name, z) in [("z-crit-1", s.z_crit_1), ("z-crit-2", s.z_crit_2)] {
        let _ = writeln!(
            svg.body,
            r##"<circle id="{name}" cx="{:.3}" cy="{:.3}" r="3" fill="#2c3e50" data-z="{}" data-h="{}"/>"##,
            f.px(z),
            f.py(cubic_h(z, x)),
            sig(z, CSV_DIGITS),
            sig(cubic_h(z, x), CSV_DIGITS)
        );
    }
    Ok(svg.finish())
}
