//! Perimeter, area and isoperimetric deficit of triangles, and the
//! Blaschke-Santaló diagram they span.
//!
//! A triangle with sides `a, b, c`, area `S` and deficit
//! `Q = (a-b)² + (b-c)² + (c-a)²` is mapped to the scale invariant pair
//!
//! ```text
//! X = Q / (a+b+c)²,   Y = 12√3 S / (a+b+c)²
//! ```
//!
//! The image of all (possibly flat) triangles is bounded by
//! `φ₋(X) = √(1 − 6X − 4√2 X^{3/2})` on `[0, 1/8]`,
//! `φ₊(X) = √(1 − 6X + 4√2 X^{3/2})` on `[0, 1/2]` and the segment
//! `[1/8, 1/2] × {0}`. The crate evaluates these curves, solves fixed-`X`
//! slices, inverts diagram points to witness triangles and checks the
//! Finsler-Hadwiger family of inequalities.
//!
//! Batch routines run on rayon when the `parallel` feature is enabled
//! (the default) and fall back to a plain loop otherwise. Results are
//! identical in both modes.

pub mod diagram;
mod error;
pub mod exec;
pub mod geometry;
pub mod inequalities;
pub mod sampling;

pub use diagram::{DiagramPoint, SliceBounds};
pub use error::{Error, Result};
pub use exec::Execution;
pub use geometry::{RaviParams, Triangle};
pub use inequalities::{Inequality, InequalityReport, Record, Verdict};
pub use sampling::{SampleSet, Strategy};
