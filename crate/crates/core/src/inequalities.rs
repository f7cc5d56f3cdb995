//! The Finsler-Hadwiger family of triangle inequalities, evaluated with
//! signed slack, plus an empirical estimate of the sharp linear constants
//! from the diagram boundary.

use std::fmt;

use crate::diagram::{map_point, phi_minus, phi_plus, X_FLAT_ISOSCELES, X_MAX};
use crate::exec::Execution;
use crate::geometry::Triangle;

/// Relative tolerance for both the pass/fail verdict and equality detection.
pub const REL_TOL: f64 = 1e-9;

const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT2: f64 = std::f64::consts::SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Inequality {
    /// `a² + b² + c² ≥ 4√3 S`
    Weitzenbock,
    /// `a² + b² + c² ≥ Q + 4√3 S`
    FinslerHadwiger,
    /// `a² + b² + c² ≤ 3Q + 4√3 S`
    ReverseFinslerHadwiger,
    /// `(a+b+c)² ≥ 2Q + 12√3 S`
    PerimeterLower,
    /// `(a+b+c)² ≤ 8Q + 12√3 S`
    PerimeterUpper,
    /// `432 S² ≤ p⁴ − 6Qp² + 4√2 Q^{3/2} p`
    OptimalUpper,
    /// `432 S² ≥ p⁴ − 6Qp² − 4√2 Q^{3/2} p`, only when `Q ≤ p²/8`
    OptimalLower,
    /// `a² + b² + c² ≤ ((6 − √6)/2) Q + 4√3 S`, acute triangles only
    AcuteReverse,
    /// `Y ≤ 1 − 2X`
    LinearUpper,
    /// `Y ≥ 1 − 8X`
    LinearLower,
}

impl Inequality {
    pub const ALL: [Inequality; 10] = [
        Inequality::Weitzenbock,
        Inequality::FinslerHadwiger,
        Inequality::ReverseFinslerHadwiger,
        Inequality::PerimeterLower,
        Inequality::PerimeterUpper,
        Inequality::OptimalUpper,
        Inequality::OptimalLower,
        Inequality::AcuteReverse,
        Inequality::LinearUpper,
        Inequality::LinearLower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Inequality::Weitzenbock => "weitzenbock",
            Inequality::FinslerHadwiger => "fh",
            Inequality::ReverseFinslerHadwiger => "reverse_fh",
            Inequality::PerimeterLower => "perimeter_fh",
            Inequality::PerimeterUpper => "perimeter_reverse_fh",
            Inequality::OptimalUpper => "optimal_upper",
            Inequality::OptimalLower => "optimal_lower",
            Inequality::AcuteReverse => "acute_reverse_fh",
            Inequality::LinearUpper => "linear_upper",
            Inequality::LinearLower => "linear_lower",
        }
    }

    /// Homogeneity degree in the side lengths.
    fn degree(self) -> i32 {
        match self {
            Inequality::OptimalUpper | Inequality::OptimalLower => 4,
            Inequality::LinearUpper | Inequality::LinearLower => 0,
            _ => 2,
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Relation {
    Le,
    Ge,
}

/// One evaluated inequality. `slack ≥ 0` means it holds regardless of
/// direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Record {
    pub kind: Inequality,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
    pub near_equality: bool,
}

impl Record {
    /// `floor` is the perimeter raised to the inequality's degree, so the
    /// verdict does not change when the triangle is rescaled.
    fn new(kind: Inequality, lhs: f64, rel: Relation, rhs: f64, floor: f64) -> Self {
        let slack = match rel {
            Relation::Le => rhs - lhs,
            Relation::Ge => lhs - rhs,
        };
        let scale = lhs.abs().max(rhs.abs()).max(floor);
        Record {
            kind,
            lhs,
            rhs,
            slack,
            holds: slack >= -REL_TOL * scale,
            near_equality: slack.abs() <= REL_TOL * scale,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Verdict {
    Evaluated(Record),
    /// The inequality's hypothesis does not hold for this triangle.
    NotApplicable(Inequality),
}

impl Verdict {
    pub fn kind(&self) -> Inequality {
        match self {
            Verdict::Evaluated(r) => r.kind,
            Verdict::NotApplicable(k) => *k,
        }
    }

    pub fn record(&self) -> Option<&Record> {
        match self {
            Verdict::Evaluated(r) => Some(r),
            Verdict::NotApplicable(_) => None,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.record().is_some_and(|r| !r.holds)
    }
}

struct Terms {
    sum_sq: f64,
    p: f64,
    q: f64,
    s: f64,
}

impl Terms {
    fn of(t: &Triangle) -> Self {
        let [a, b, c] = t.sides();
        Terms {
            sum_sq: a * a + b * b + c * c,
            p: t.perimeter(),
            q: t.deficit(),
            s: t.area(),
        }
    }

    fn record(&self, kind: Inequality, lhs: f64, rel: Relation, rhs: f64) -> Record {
        Record::new(kind, lhs, rel, rhs, self.p.powi(kind.degree()))
    }
}

pub fn check_weitzenbock(t: &Triangle) -> Record {
    let m = Terms::of(t);
    m.record(
        Inequality::Weitzenbock,
        m.sum_sq,
        Relation::Ge,
        4.0 * SQRT3 * m.s,
    )
}

pub fn check_fh(t: &Triangle) -> Record {
    let m = Terms::of(t);
    m.record(
        Inequality::FinslerHadwiger,
        m.sum_sq,
        Relation::Ge,
        m.q + 4.0 * SQRT3 * m.s,
    )
}

pub fn check_reverse_fh(t: &Triangle) -> Record {
    let m = Terms::of(t);
    m.record(
        Inequality::ReverseFinslerHadwiger,
        m.sum_sq,
        Relation::Le,
        3.0 * m.q + 4.0 * SQRT3 * m.s,
    )
}

/// The two FH inequalities rewritten with the squared perimeter.
pub fn check_perimeter_forms(t: &Triangle) -> [Record; 2] {
    let m = Terms::of(t);
    let p2 = m.p * m.p;
    let area_term = 12.0 * SQRT3 * m.s;
    [
        m.record(
            Inequality::PerimeterLower,
            p2,
            Relation::Ge,
            2.0 * m.q + area_term,
        ),
        m.record(
            Inequality::PerimeterUpper,
            p2,
            Relation::Le,
            8.0 * m.q + area_term,
        ),
    ]
}

/// The optimal quartic area bounds. The lower one is only stated for
/// `Q ≤ p²/8` and is reported not-applicable otherwise.
pub fn check_optimal_bounds(t: &Triangle) -> [Verdict; 2] {
    let m = Terms::of(t);
    let p2 = m.p * m.p;
    let lhs = 432.0 * m.s * m.s;
    let base = p2 * p2 - 6.0 * m.q * p2;
    let cross = 4.0 * SQRT2 * m.q.powf(1.5) * m.p;
    let upper = m.record(Inequality::OptimalUpper, lhs, Relation::Le, base + cross);
    let lower = if m.q <= p2 / 8.0 {
        Verdict::Evaluated(m.record(Inequality::OptimalLower, lhs, Relation::Ge, base - cross))
    } else {
        Verdict::NotApplicable(Inequality::OptimalLower)
    };
    [Verdict::Evaluated(upper), lower]
}

/// Reverse FH with the constant `(6 − √6)/2`, for acute triangles.
pub fn check_acute_refinement(t: &Triangle) -> Verdict {
    match t.is_acute() {
        Ok(true) => {
            let m = Terms::of(t);
            let k = (6.0 - 6f64.sqrt()) / 2.0;
            Verdict::Evaluated(m.record(
                Inequality::AcuteReverse,
                m.sum_sq,
                Relation::Le,
                k * m.q + 4.0 * SQRT3 * m.s,
            ))
        }
        _ => Verdict::NotApplicable(Inequality::AcuteReverse),
    }
}

/// The FH pair in diagram coordinates.
pub fn check_linear_forms(t: &Triangle) -> [Record; 2] {
    let p = map_point(t);
    [
        Record::new(
            Inequality::LinearUpper,
            p.y,
            Relation::Le,
            1.0 - 2.0 * p.x,
            1.0,
        ),
        Record::new(
            Inequality::LinearLower,
            p.y,
            Relation::Ge,
            1.0 - 8.0 * p.x,
            1.0,
        ),
    ]
}

/// All inequalities evaluated on one triangle, in [`Inequality::ALL`] order.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub triangle: Triangle,
    pub verdicts: Vec<Verdict>,
}

impl InequalityReport {
    pub fn get(&self, kind: Inequality) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.kind() == kind)
    }

    pub fn record(&self, kind: Inequality) -> Option<&Record> {
        self.get(kind).and_then(Verdict::record)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Record> {
        self.verdicts
            .iter()
            .filter_map(Verdict::record)
            .filter(|r| !r.holds)
    }

    pub fn near_equalities(&self) -> impl Iterator<Item = &Record> {
        self.verdicts
            .iter()
            .filter_map(Verdict::record)
            .filter(|r| r.near_equality)
    }

    pub fn all_hold(&self) -> bool {
        self.violations().next().is_none()
    }
}

pub fn full_report(t: &Triangle) -> InequalityReport {
    let [per_lo, per_hi] = check_perimeter_forms(t);
    let [opt_hi, opt_lo] = check_optimal_bounds(t);
    let [lin_hi, lin_lo] = check_linear_forms(t);
    InequalityReport {
        triangle: *t,
        verdicts: vec![
            Verdict::Evaluated(check_weitzenbock(t)),
            Verdict::Evaluated(check_fh(t)),
            Verdict::Evaluated(check_reverse_fh(t)),
            Verdict::Evaluated(per_lo),
            Verdict::Evaluated(per_hi),
            opt_hi,
            opt_lo,
            check_acute_refinement(t),
            Verdict::Evaluated(lin_hi),
            Verdict::Evaluated(lin_lo),
        ],
    }
}

/// Reports for a batch of triangles, in input order.
pub fn verify_batch(triangles: &[Triangle], exec: Execution) -> Vec<InequalityReport> {
    exec.map_slice(triangles, full_report)
}

/// Total number of violated records across a batch.
pub fn count_violations(triangles: &[Triangle], exec: Execution) -> usize {
    exec.map_slice(triangles, |t| full_report(t).violations().count())
        .into_iter()
        .sum()
}

/// Estimated sharp constants `(c_min, c_max)` of `1 − c_max X ≤ Y ≤ 1 − c_min X`.
///
/// `c_min = min (1 − φ₊(X))/X` over the upper boundary and
/// `c_max = max (1 − Y)/X` over the lower boundary (`φ₋` on `[0, 1/8]`,
/// then `Y = 0` on `[1/8, 1/2]`). Each piece is sampled at `n_boundary`
/// equally spaced abscissae including its endpoints; `X < 1e-9` is skipped.
pub fn empirical_sharp_constants(n_boundary: usize) -> crate::Result<(f64, f64)> {
    if n_boundary < 10 {
        return Err(crate::Error::Domain(format!(
            "need at least 10 boundary points, got {n_boundary}"
        )));
    }
    let grid = |lo: f64, hi: f64| {
        (0..n_boundary).map(move |i| lo + (hi - lo) * i as f64 / (n_boundary - 1) as f64)
    };
    let skip = |x: &f64| *x >= 1e-9;

    let mut c_min = f64::INFINITY;
    for x in grid(0.0, X_MAX).filter(skip) {
        c_min = c_min.min((1.0 - phi_plus(x)?) / x);
    }
    let mut c_max = f64::NEG_INFINITY;
    for x in grid(0.0, X_FLAT_ISOSCELES).filter(skip) {
        c_max = c_max.max((1.0 - phi_minus(x)?) / x);
    }
    for x in grid(X_FLAT_ISOSCELES, X_MAX).filter(skip) {
        c_max = c_max.max(1.0 / x);
    }
    Ok((c_min, c_max))
}
