//! The (X, Y) diagram: forward map, boundary curves, fixed-X slices and
//! inversion to witness triangles.
//!
//! With the Ravi coordinates normalized to `x + y + z = 1`, fixing `X`
//! pins `xy + yz + zx = (1 − 2X)/3`. For a given `z` the remaining pair
//! `x, y` are the roots of
//!
//! ```text
//! λ² − (1 − z)λ + (1 − 2X)/3 − z(1 − z) = 0
//! ```
//!
//! and `Y = 3√3 √(xyz) = 3√3 √h(z)` with `h(z) = z³ − z² + ((1 − 2X)/3) z`.
//! Extremizing `h` over the admissible `z` gives the slice bounds.

use crate::error::{domain, Error, Result};
use crate::geometry::{ravi_to_sides, RaviParams, Triangle};

/// Radicands this close below zero are rounding noise and clamp to zero.
pub const RADICAND_TOL: f64 = 1e-14;
/// Absolute bracket width at which the bisection may stop.
pub const BISECTION_TOL: f64 = 1e-14;
pub const BISECTION_MAX_ITER: usize = 200;
/// Default membership tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Flat isosceles triangles (`b = c = a/2`) sit at this abscissa; it
/// separates the two slice regimes.
pub const X_FLAT_ISOSCELES: f64 = 0.125;
pub const X_MAX: f64 = 0.5;

/// Scale invariant image `(X, Y)` of a triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagramPoint {
    pub x: f64,
    pub y: f64,
}

impl DiagramPoint {
    pub fn new(x: f64, y: f64) -> Self {
        DiagramPoint { x, y }
    }
}

/// Everything known about the vertical slice of the diagram at `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceBounds {
    pub x: f64,
    pub y_min: f64,
    pub y_max: f64,
    /// Admissible `z` (with `x + y + z = 1`): one interval for `X ≤ 1/8`,
    /// two otherwise.
    pub z_intervals: Vec<(f64, f64)>,
    /// Roots of the discriminant `Δ(z) = −3z² + 2z − 1/3 + 8X/3`. `z_lo`
    /// is negative once `X > 1/8`.
    pub z_lo: f64,
    pub z_hi: f64,
    /// Local maximum and local minimum of `h`.
    pub z_crit_1: f64,
    pub z_crit_2: f64,
}

impl SliceBounds {
    pub fn contains_z(&self, z: f64) -> bool {
        self.z_intervals.iter().any(|&(lo, hi)| lo <= z && z <= hi)
    }

    /// The slice collapses to a single `Y` value (at `X = 0` and `X = 1/2`).
    pub fn is_single_point(&self) -> bool {
        self.y_max - self.y_min <= 1e-15
    }
}

fn sqrt_clamped(r: f64, what: &str) -> Result<f64> {
    if r >= 0.0 {
        Ok(r.sqrt())
    } else if r >= -RADICAND_TOL {
        Ok(0.0)
    } else {
        Err(Error::Inconsistent(format!(
            "negative radicand {r} in {what}"
        )))
    }
}

fn check_x(x: f64, upper: f64, what: &str) -> Result<()> {
    if !(0.0..=upper).contains(&x) {
        return Err(domain(format!(
            "{what} requires X in [0, {upper}], got {x}"
        )));
    }
    Ok(())
}

/// Forward map `(a, b, c) ↦ (Q/p², 12√3 S/p²)`.
pub fn map_point(t: &Triangle) -> DiagramPoint {
    let p = t.perimeter();
    let p2 = p * p;
    DiagramPoint {
        x: t.deficit() / p2,
        y: 12.0 * 3f64.sqrt() * t.area() / p2,
    }
}

/// Lower boundary `φ₋(X) = √(1 − 6X − 4√2 X^{3/2})` on `[0, 1/8]`.
///
/// With `s = √(2X)` the radicand factors as `(1 + s)²(1 − 2s)`, which is
/// evaluated instead to keep full precision near `X = 1/8`.
pub fn phi_minus(x: f64) -> Result<f64> {
    check_x(x, X_FLAT_ISOSCELES, "phi_minus")?;
    let s = (2.0 * x).sqrt();
    Ok((1.0 + s) * sqrt_clamped(1.0 - 2.0 * s, "phi_minus")?)
}

/// Upper boundary `φ₊(X) = √(1 − 6X + 4√2 X^{3/2})` on `[0, 1/2]`.
///
/// Evaluated as `(1 − s)√(1 + 2s)` with `s = √(2X)`, exact at `X = 1/2`.
pub fn phi_plus(x: f64) -> Result<f64> {
    check_x(x, X_MAX, "phi_plus")?;
    let s = (2.0 * x).sqrt();
    Ok((1.0 - s).max(0.0) * (1.0 + 2.0 * s).sqrt())
}

/// `h(z) = z³ − z² + ((1 − 2X)/3) z`, the product `xyz` along a slice.
pub fn cubic_h(z: f64, x: f64) -> f64 {
    ((z - 1.0) * z + (1.0 - 2.0 * x) / 3.0) * z
}

/// Fixed-`X` slice: admissible `z`, critical points of `h` and the
/// attainable `Y` range.
pub fn slice(x: f64) -> Result<SliceBounds> {
    check_x(x, X_MAX, "slice")?;
    let s = (2.0 * x).sqrt();
    let z_lo = (1.0 - 2.0 * s) / 3.0;
    let z_hi = (1.0 + 2.0 * s) / 3.0;
    let z_crit_1 = (1.0 - s) / 3.0;
    let z_crit_2 = (1.0 + s) / 3.0;
    let y_max = phi_plus(x)?;
    let (y_min, z_intervals) = if x <= X_FLAT_ISOSCELES {
        (phi_minus(x)?, vec![(z_lo.max(0.0), z_hi)])
    } else {
        // z(1 − z) = (1 − 2X)/3 cuts out the middle of [0, z_hi].
        let r = sqrt_clamped((8.0 * x - 1.0) / 3.0, "slice gap")?;
        (0.0, vec![(0.0, 0.5 * (1.0 - r)), (0.5 * (1.0 + r), z_hi)])
    };
    Ok(SliceBounds {
        x,
        y_min,
        y_max,
        z_intervals,
        z_lo,
        z_hi,
        z_crit_1,
        z_crit_2,
    })
}

/// Membership test with absolute tolerance `tol` on both coordinates.
pub fn contains(p: DiagramPoint, tol: f64) -> bool {
    if !(p.x.is_finite() && p.y.is_finite()) || tol < 0.0 {
        return false;
    }
    if p.x < -tol || p.x > X_MAX + tol {
        return false;
    }
    match slice(p.x.clamp(0.0, X_MAX)) {
        Ok(s) => p.y >= s.y_min - tol && p.y <= s.y_max + tol,
        Err(_) => false,
    }
}

/// Monotone pieces of `h` on the admissible set, in increasing `z`.
fn monotone_pieces(s: &SliceBounds) -> Vec<(f64, f64)> {
    let cuts = [s.z_crit_1, s.z_crit_2];
    let mut pieces = Vec::new();
    for &(lo, hi) in &s.z_intervals {
        let mut start = lo;
        for &c in &cuts {
            if c > start && c < hi {
                pieces.push((start, c));
                start = c;
            }
        }
        pieces.push((start, hi));
    }
    pieces
}

/// Solve `h(z) = target` on `[lo, hi]` where `h` is monotone. Returns
/// `None` when the target is not bracketed.
fn bisect_piece(lo: f64, hi: f64, x: f64, target: f64) -> Result<Option<f64>> {
    let (h_lo, h_hi) = (cubic_h(lo, x), cubic_h(hi, x));
    let increasing = h_hi >= h_lo;
    let (min, max) = if increasing {
        (h_lo, h_hi)
    } else {
        (h_hi, h_lo)
    };
    if target < min || target > max {
        return Ok(None);
    }
    if target == h_lo {
        return Ok(Some(lo));
    }
    if target == h_hi {
        return Ok(Some(hi));
    }
    let (mut a, mut b) = (lo, hi);
    for _ in 0..BISECTION_MAX_ITER {
        let mid = 0.5 * (a + b);
        // Stop once the bracket is below tolerance and no longer resolves
        // in floating point relative to the root.
        if mid <= a || mid >= b || (b - a <= BISECTION_TOL && b - a <= f64::EPSILON * a.abs()) {
            return Ok(Some(mid));
        }
        let below = cubic_h(mid, x) < target;
        if below == increasing {
            a = mid;
        } else {
            b = mid;
        }
    }
    Err(Error::Convergence {
        iterations: BISECTION_MAX_ITER,
    })
}

/// Witness triangle of perimeter 1 realizing `p`, sides sorted descending.
///
/// Among the up to three `z` solving `h(z) = Y²/27`, the smallest is used.
pub fn invert(p: DiagramPoint) -> Result<Triangle> {
    if !contains(p, DEFAULT_TOL) {
        return Err(Error::NotInDiagram { x: p.x, y: p.y });
    }
    let x = p.x.clamp(0.0, X_MAX);
    let s = slice(x)?;
    let y = p.y.clamp(s.y_min, s.y_max);
    let target = y * y / 27.0;

    let mut z = None;
    for (lo, hi) in monotone_pieces(&s) {
        if let Some(root) = bisect_piece(lo, hi, x, target)? {
            z = Some(root);
            break;
        }
    }
    // The extreme values are attained at piece endpoints; rounding in
    // y² / 27 can leave the target a hair outside every piece.
    let z = match z {
        Some(z) => z,
        None => closest_endpoint(&s, x, target),
    };

    // x + y = 1 − z and xy = (1 − 2X)/3 − z(1 − z); the discriminant of
    // that quadratic is Δ(z) = 8X/3 − 3(z − 1/3)².
    let u = 1.0 - z;
    let product = ((1.0 - 2.0 * x) / 3.0 - z * u).max(0.0);
    let d = z - 1.0 / 3.0;
    let disc = sqrt_clamped(8.0 * x / 3.0 - 3.0 * d * d, "Ravi quadratic")?;
    let rx = 0.5 * (u + disc);
    let ry = if rx > 0.0 { product / rx } else { 0.0 };
    // Halving the Ravi coordinates gives perimeter 1.
    let t = ravi_to_sides(RaviParams::new(0.5 * rx, 0.5 * ry, 0.5 * z.max(0.0))?)?;
    let [a, b, c] = t.sorted_desc();
    Triangle::new(a, b, c)
}

fn closest_endpoint(s: &SliceBounds, x: f64, target: f64) -> f64 {
    monotone_pieces(s)
        .into_iter()
        .flat_map(|(lo, hi)| [lo, hi])
        .min_by(|&u, &v| {
            (cubic_h(u, x) - target)
                .abs()
                .total_cmp(&(cubic_h(v, x) - target).abs())
        })
        .unwrap_or(1.0 / 3.0)
}
