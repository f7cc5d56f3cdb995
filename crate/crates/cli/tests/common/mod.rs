#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

pub fn fhdiag<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_fhdiag"))
        .args(args)
        .output()
        .expect("failed to launch fhdiag")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

pub fn path_arg(p: &Path) -> String {
    p.to_str().expect("utf-8 temp path").to_string()
}

/// Value of `attr` on the element carrying `id="<id>"`.
pub fn svg_attr<'a>(svg: &'a str, id: &str, attr: &str) -> Option<&'a str> {
    let start = svg.find(&format!(r#"id="{id}""#))?;
    let tag_end = start + svg[start..].find('>')?;
    let tag_start = svg[..start].rfind('<')?;
    let tag = &svg[tag_start..tag_end];
    let key = format!(r#" {attr}=""#);
    let i = tag.find(&key)? + key.len();
    let j = i + tag[i..].find('"')?;
    Some(&tag[i..j])
}

pub fn parse_pairs(s: &str) -> Vec<(f64, f64)> {
    s.split_whitespace()
        .map(|pair| {
            let (x, y) = pair.split_once(',').expect("x,y pair");
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect()
}

/// Data coordinates of a polyline.
pub fn polyline_data(svg: &str, id: &str) -> Vec<(f64, f64)> {
    parse_pairs(svg_attr(svg, id, "data-points").unwrap_or_else(|| panic!("no polyline {id}")))
}

pub fn polyline_pixels(svg: &str, id: &str) -> Vec<(f64, f64)> {
    parse_pairs(svg_attr(svg, id, "points").unwrap_or_else(|| panic!("no polyline {id}")))
}

/// `(ax, bx, ay, by)` of the affine data-to-pixel map on group `id`.
pub fn frame(svg: &str, id: &str) -> (f64, f64, f64, f64) {
    let g = |a: &str| svg_attr(svg, id, a).unwrap().parse::<f64>().unwrap();
    (g("data-ax"), g("data-bx"), g("data-ay"), g("data-by"))
}

/// Interpolate a polyline's ordinate at `x` (abscissae increasing).
pub fn interp(pts: &[(f64, f64)], x: f64) -> f64 {
    let k = pts.partition_point(|p| p.0 < x);
    if k == 0 {
        return pts[0].1;
    }
    if k == pts.len() {
        return pts[pts.len() - 1].1;
    }
    let (x0, y0) = pts[k - 1];
    let (x1, y1) = pts[k];
    if x1 == x0 {
        return y1;
    }
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}
