//! Triangles, the Ravi parametrization and the scalar functionals
//! (perimeter, area, isoperimetric deficit).

use crate::error::{domain, Result};

/// Relative slack allowed in the triangle inequality, as a fraction of the
/// perimeter. Flat triangles sit exactly on the boundary, so float noise
/// must not push them out.
pub const TRIANGLE_TOL: f64 = 1e-12;

/// Side lengths of a (possibly flat) triangle.
///
/// Sides are nonnegative, satisfy the weak triangle inequality up to
/// [`TRIANGLE_TOL`] and do not all vanish.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    a: f64,
    b: f64,
    c: f64,
}

/// Ravi coordinates `x, y, z ≥ 0` with `a = y+z`, `b = z+x`, `c = x+y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RaviParams {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl RaviParams {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let p = RaviParams { x, y, z };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let RaviParams { x, y, z } = *self;
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(domain("Ravi coordinates must be finite"));
        }
        if x < 0.0 || y < 0.0 || z < 0.0 {
            return Err(domain(format!(
                "Ravi coordinates must be nonnegative, got ({x}, {y}, {z})"
            )));
        }
        if x + y + z <= 0.0 {
            return Err(domain("Ravi coordinates must not all be zero"));
        }
        Ok(())
    }

    pub fn sum(&self) -> f64 {
        self.x + self.y + self.z
    }
}

/// `(x, y, z) ↦ (y+z, z+x, x+y)`.
pub fn ravi_to_sides(p: RaviParams) -> Result<Triangle> {
    p.validate()?;
    Ok(Triangle {
        a: p.y + p.z,
        b: p.z + p.x,
        c: p.x + p.y,
    })
}

/// Inverse of [`ravi_to_sides`]: `x = (b+c−a)/2` and cyclic. Coordinates
/// that are negative only by float noise are clamped to zero.
pub fn sides_to_ravi(t: &Triangle) -> RaviParams {
    t.ravi()
}

impl Triangle {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(domain("side lengths must be finite"));
        }
        if a < 0.0 || b < 0.0 || c < 0.0 {
            return Err(domain(format!(
                "side lengths must be nonnegative, got ({a}, {b}, {c})"
            )));
        }
        let p = a + b + c;
        if p <= 0.0 {
            return Err(domain("triangle is reduced to a point"));
        }
        let slack = -TRIANGLE_TOL * p;
        if b + c - a < slack || c + a - b < slack || a + b - c < slack {
            return Err(domain(format!(
                "sides ({a}, {b}, {c}) violate the triangle inequality"
            )));
        }
        Ok(Triangle { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn sides(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// Sides sorted in descending order.
    pub fn sorted_desc(&self) -> [f64; 3] {
        let mut s = self.sides();
        s.sort_by(|p, q| q.total_cmp(p));
        s
    }

    /// The same triangle with every side multiplied by `k > 0`.
    pub fn scaled(&self, k: f64) -> Result<Triangle> {
        if !(k.is_finite() && k > 0.0) {
            return Err(domain(format!("scale factor must be positive, got {k}")));
        }
        Triangle::new(self.a * k, self.b * k, self.c * k)
    }

    pub fn ravi(&self) -> RaviParams {
        let Triangle { a, b, c } = *self;
        RaviParams {
            x: (0.5 * (b + c - a)).max(0.0),
            y: (0.5 * (c + a - b)).max(0.0),
            z: (0.5 * (a + b - c)).max(0.0),
        }
    }

    pub fn perimeter(&self) -> f64 {
        self.a + self.b + self.c
    }

    /// Heron's area written in Ravi coordinates, `√(xyz(x+y+z))`.
    pub fn area(&self) -> f64 {
        let r = self.ravi();
        (r.x * r.y * r.z * r.sum()).max(0.0).sqrt()
    }

    /// Isoperimetric deficit `Q = (a−b)² + (b−c)² + (c−a)²`.
    pub fn deficit(&self) -> f64 {
        let Triangle { a, b, c } = *self;
        (a - b).powi(2) + (b - c).powi(2) + (c - a).powi(2)
    }

    /// Zero area: one Ravi coordinate vanishes.
    pub fn is_degenerate(&self) -> bool {
        let r = self.ravi();
        r.x == 0.0 || r.y == 0.0 || r.z == 0.0
    }

    /// Strict acuteness. Flat triangles are rejected rather than classified.
    pub fn is_acute(&self) -> Result<bool> {
        if self.is_degenerate() {
            return Err(domain("acuteness is undefined for a flat triangle"));
        }
        let [l, m, s] = self.sorted_desc();
        Ok(l * l < m * m + s * s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn tri(a: f64, b: f64, c: f64) -> Triangle {
        Triangle::new(a, b, c).unwrap()
    }

    fn heron_classical(t: &Triangle) -> f64 {
        let s = 0.5 * t.perimeter();
        (s * (s - t.a()) * (s - t.b()) * (s - t.c()))
            .max(0.0)
            .sqrt()
    }

    #[test]
    fn ravi_to_sides_examples() {
        let third = 1.0 / 3.0;
        let t = ravi_to_sides(RaviParams::new(third, third, third).unwrap()).unwrap();
        for s in t.sides() {
            assert_relative_eq!(s, 2.0 / 3.0, epsilon = 1e-15);
        }
        let t = ravi_to_sides(RaviParams::new(0.0, 0.0, 1.0).unwrap()).unwrap();
        assert_eq!(t.sides(), [1.0, 1.0, 0.0]);
        let t = ravi_to_sides(RaviParams::new(0.0, 0.5, 0.5).unwrap()).unwrap();
        assert_eq!(t.sides(), [1.0, 0.5, 0.5]);
    }

    #[test]
    fn ravi_rejects_bad_input() {
        assert!(RaviParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(RaviParams::new(0.0, 0.0, 0.0).is_err());
        let raw = RaviParams {
            x: 0.0,
            y: -0.1,
            z: 1.0,
        };
        assert!(ravi_to_sides(raw).is_err());
    }

    #[test]
    fn sides_to_ravi_examples() {
        let r = sides_to_ravi(&tri(2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0));
        assert_relative_eq!(r.x, 1.0 / 3.0, epsilon = 1e-15);
        assert_relative_eq!(r.y, 1.0 / 3.0, epsilon = 1e-15);
        assert_relative_eq!(r.z, 1.0 / 3.0, epsilon = 1e-15);
        assert_eq!(
            sides_to_ravi(&tri(1.0, 1.0, 0.0)),
            RaviParams {
                x: 0.0,
                y: 0.0,
                z: 1.0
            }
        );
        // x + y = 5, y + z = 3, z + x = 4
        assert_eq!(
            sides_to_ravi(&tri(3.0, 4.0, 5.0)),
            RaviParams {
                x: 3.0,
                y: 2.0,
                z: 1.0
            }
        );
    }

    #[test]
    fn triangle_validation() {
        assert!(Triangle::new(1.0, 1.0, 5.0).is_err());
        assert!(Triangle::new(-1.0, 1.0, 1.0).is_err());
        assert!(Triangle::new(0.0, 0.0, 0.0).is_err());
        assert!(Triangle::new(f64::NAN, 1.0, 1.0).is_err());
        // flat, and flat up to rounding
        assert!(Triangle::new(1.0, 0.5, 0.5).is_ok());
        let t = tri(1.0 + 1e-13, 0.5, 0.5);
        assert_eq!(t.ravi().x, 0.0);
        assert_eq!(t.area(), 0.0);
        assert!(Triangle::new(1.0 + 1e-9, 0.5, 0.5).is_err());
    }

    #[test]
    fn scalar_functionals() {
        assert_eq!(tri(1.0, 1.0, 1.0).perimeter(), 3.0);
        assert_eq!(tri(1.0, 1.0, 0.0).perimeter(), 2.0);
        assert_eq!(tri(3.0, 4.0, 5.0).perimeter(), 12.0);

        assert_relative_eq!(
            tri(1.0, 1.0, 1.0).area(),
            3f64.sqrt() / 4.0,
            epsilon = 1e-15
        );
        assert_eq!(tri(1.0, 1.0, 0.0).area(), 0.0);
        assert_eq!(tri(3.0, 4.0, 5.0).area(), 6.0);

        assert_eq!(tri(1.0, 1.0, 1.0).deficit(), 0.0);
        assert_eq!(tri(1.0, 1.0, 0.0).deficit(), 2.0);
        assert_eq!(tri(1.0, 0.5, 0.5).deficit(), 0.5);
    }

    #[test]
    fn acuteness() {
        assert!(tri(1.0, 1.0, 1.0).is_acute().unwrap());
        assert!(!tri(3.0, 4.0, 5.0).is_acute().unwrap());
        assert!(!tri(2.0, 2.0, 3.0).is_acute().unwrap());
        assert!(tri(5.0, 5.0, 6.0).is_acute().unwrap());
        assert!(tri(1.0, 1.0, 0.0).is_acute().is_err());
        assert!(tri(1.0, 0.5, 0.5).is_acute().is_err());
    }

    #[test]
    fn deficit_vanishes_only_for_equilateral() {
        assert_eq!(tri(0.7, 0.7, 0.7).deficit(), 0.0);
        let t = tri(1.0, 1.0, 1.0 + 4e-12);
        assert!(t.deficit() > 0.0);
    }

    #[test]
    fn heron_matches_ravi_form_on_many_triangles() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let x: f64 = rng.random_range(0.01..1.0);
            let y: f64 = rng.random_range(0.01..1.0);
            let z: f64 = rng.random_range(0.01..1.0);
            let t = ravi_to_sides(RaviParams::new(x, y, z).unwrap()).unwrap();
            assert_relative_eq!(t.area(), heron_classical(&t), max_relative = 1e-10);
        }
    }

    fn ravi_strategy() -> impl Strategy<Value = RaviParams> {
        (0.0..10.0f64, 0.0..10.0f64, 0.0..10.0f64)
            .prop_filter("not a point", |(x, y, z)| x + y + z > 1e-6)
            .prop_map(|(x, y, z)| RaviParams { x, y, z })
    }

    proptest! {
        #[test]
        fn ravi_round_trip(p in ravi_strategy()) {
            let back = sides_to_ravi(&ravi_to_sides(p).unwrap());
            prop_assert!((back.x - p.x).abs() <= 1e-12 * p.sum().max(1.0));
            prop_assert!((back.y - p.y).abs() <= 1e-12 * p.sum().max(1.0));
            prop_assert!((back.z - p.z).abs() <= 1e-12 * p.sum().max(1.0));
        }

        #[test]
        fn scale_equivariance(p in ravi_strategy(), k in 1e-3..1e3f64) {
            let t = ravi_to_sides(p).unwrap();
            let s = t.scaled(k).unwrap();
            let rel = |u: f64, v: f64| (u - v).abs() <= 1e-10 * u.abs().max(v.abs()).max(f64::MIN_POSITIVE);
            prop_assert!(rel(s.perimeter(), k * t.perimeter()));
            prop_assert!(rel(s.deficit(), k * k * t.deficit()) || (s.deficit() - k * k * t.deficit()).abs() <= 1e-10 * (k * t.perimeter()).powi(2));
            prop_assert!((s.area() - k * k * t.area()).abs() <= 1e-10 * (k * t.perimeter()).powi(2));
        }
    }
}
