//! Triangle populations whose diagram images fill the diagram: uniform
//! random Ravi sampling, and a regular grid of diagram points inverted to
//! witness triangles.
//!
//! Random draws use ChaCha8 with one stream per sample index, so the
//! `i`-th triangle depends only on `(seed, i)` and the output is the same
//! under sequential and parallel execution.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};

use crate::diagram::{invert, map_point, slice, DiagramPoint, X_MAX};
use crate::error::{domain, Result};
use crate::exec::Execution;
use crate::geometry::{ravi_to_sides, RaviParams, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Ravi coordinates uniform on the unit simplex.
    Random,
    /// Inverse construction from an equally spaced grid of diagram points.
    Grid,
}

impl Strategy {
    pub fn describe(self) -> &'static str {
        match self {
            Strategy::Random => "uniform random Ravi coordinates on the unit simplex (ChaCha8, one stream per index)",
            Strategy::Grid => "inverse-construction grid coverage (equally spaced X, equally spaced Y per slice)",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    pub entries: Vec<(Triangle, DiagramPoint)>,
    pub seed: u64,
    pub strategy: Strategy,
}

impl SampleSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = DiagramPoint> + '_ {
        self.entries.iter().map(|(_, p)| *p)
    }
}

/// The `index`-th random triangle for `seed`.
pub fn random_triangle(seed: u64, index: u64) -> Triangle {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut draw = || -> f64 { Exp1.sample(&mut rng) };
    let (e1, e2, e3) = (draw(), draw(), draw());
    let total = e1 + e2 + e3;
    // Exp1 is strictly positive, so total > 0.
    ravi_to_sides(RaviParams {
        x: e1 / total,
        y: e2 / total,
        z: e3 / total,
    })
    .expect("normalized exponential draws are valid Ravi coordinates")
}

pub fn sample_random(n: usize, seed: u64) -> Result<SampleSet> {
    sample_random_with(n, seed, Execution::default())
}

pub fn sample_random_with(n: usize, seed: u64, exec: Execution) -> Result<SampleSet> {
    if n == 0 {
        return Err(domain("sample size must be at least 1"));
    }
    let entries = exec.map_range(n, |i| {
        let t = random_triangle(seed, i as u64);
        (t, map_point(&t))
    });
    Ok(SampleSet {
        entries,
        seed,
        strategy: Strategy::Random,
    })
}

/// Diagram points of the grid, in `(X, Y)` lexicographic order.
pub fn grid_points(nx: usize, ny: usize) -> Result<Vec<DiagramPoint>> {
    if nx < 2 {
        return Err(domain(format!("grid needs nx >= 2, got {nx}")));
    }
    if ny < 1 {
        return Err(domain(format!("grid needs ny >= 1, got {ny}")));
    }
    let mut points = Vec::with_capacity(nx * ny);
    for i in 0..nx {
        let x = X_MAX * i as f64 / (nx - 1) as f64;
        let s = slice(x)?;
        if s.is_single_point() || ny == 1 {
            let y = if s.is_single_point() {
                s.y_max
            } else {
                0.5 * (s.y_min + s.y_max)
            };
            points.push(DiagramPoint::new(x, y));
            continue;
        }
        for j in 0..ny {
            let y = s.y_min + (s.y_max - s.y_min) * j as f64 / (ny - 1) as f64;
            points.push(DiagramPoint::new(x, y));
        }
    }
    Ok(points)
}

pub fn sample_grid(nx: usize, ny: usize) -> Result<SampleSet> {
    sample_grid_with(nx, ny, Execution::default())
}

pub fn sample_grid_with(nx: usize, ny: usize, exec: Execution) -> Result<SampleSet> {
    let points = grid_points(nx, ny)?;
    let witnesses = exec.map_slice(&points, |p| invert(*p));
    let entries = witnesses
        .into_iter()
        .map(|t| t.map(|t| (t, map_point(&t))))
        .collect::<Result<Vec<_>>>()?;
    Ok(SampleSet {
        entries,
        seed: 0,
        strategy: Strategy::Grid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::contains;

    #[test]
    fn single_sample_is_in_diagram() {
        let s = sample_random(1, 12345).unwrap();
        assert_eq!(s.len(), 1);
        assert!(contains(s.entries[0].1, 1e-9));
        assert!(sample_random(0, 1).is_err());
    }

    #[test]
    fn random_is_deterministic_and_mode_independent() {
        let a = sample_random_with(100_000, 9, Execution::Sequential).unwrap();
        let b = sample_random_with(100_000, 9, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        for ((ta, pa), (tb, pb)) in a.entries.iter().zip(&b.entries) {
            for (u, v) in ta.sides().iter().zip(tb.sides()) {
                assert_eq!(u.to_bits(), v.to_bits());
            }
            assert_eq!(pa.x.to_bits(), pb.x.to_bits());
            assert_eq!(pa.y.to_bits(), pb.y.to_bits());
        }
        let c = sample_random(10, 10).unwrap();
        assert_ne!(c.entries[0], a.entries[0]);
    }

    #[test]
    fn random_triangles_have_perimeter_two() {
        for i in 0..100 {
            let t = random_triangle(3, i);
            assert!((t.perimeter() - 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn grid_corners() {
        let s = sample_grid(2, 1).unwrap();
        assert_eq!(s.len(), 2);
        let (t0, p0) = s.entries[0];
        assert!(p0.x.abs() < 1e-15 && (p0.y - 1.0).abs() < 1e-15);
        for side in t0.sides() {
            assert!((side - 1.0 / 3.0).abs() < 1e-12);
        }
        let (t1, p1) = s.entries[1];
        assert!((p1.x - 0.5).abs() < 1e-12 && p1.y.abs() < 1e-12);
        assert!(t1.is_degenerate());
    }

    #[test]
    fn grid_sizes_and_order() {
        let s = sample_grid(9, 7).unwrap();
        assert!(s.len() <= 63);
        assert_eq!(s.len(), 7 * 7 + 2);
        let pts = grid_points(9, 7).unwrap();
        for w in pts.windows(2) {
            assert!(w[0].x < w[1].x || (w[0].x == w[1].x && w[0].y < w[1].y));
        }
        assert!(grid_points(1, 5).is_err());
        assert!(grid_points(5, 0).is_err());
    }

    #[test]
    fn grid_round_trips() {
        let pts = grid_points(50, 50).unwrap();
        let s = sample_grid(50, 50).unwrap();
        assert_eq!(pts.len(), s.len());
        for (p, (_, q)) in pts.iter().zip(&s.entries) {
            assert!((p.x - q.x).abs() <= 1e-9, "{p:?} vs {q:?}");
            assert!((p.y - q.y).abs() <= 1e-9, "{p:?} vs {q:?}");
        }
    }
}
