//! Pareto sums of two-dimensional point sets.
//!
//! The Pareto sum of `P` and `Q` is the skyline of `{p + q}`. This crate
//! provides the classical exact algorithms ([`exact`]), a reduction to
//! bounded monotone min-plus convolution ([`reduction`]) with several
//! convolution backends ([`minplus`]), additive approximations ([`approx`])
//! and seeded instance generators ([`generators`]).
//!
//! ```
//! use pareto_sum::{pareto_sum, Algorithm, ParetoSet};
//!
//! let p = ParetoSet::from_pairs(&[(0, 2), (1, 0)]).unwrap();
//! let q = ParetoSet::from_pairs(&[(0, 1), (2, 0)]).unwrap();
//! let out = pareto_sum(&p, &q, &Algorithm::ConvEnhanced).unwrap();
//! let xs: Vec<(i64, i64)> = out.points.iter().map(|w| (w.point.x, w.point.y)).collect();
//! assert_eq!(xs, vec![(0, 3), (1, 1), (3, 0)]);
//! ```

pub mod algorithm;
pub mod approx;
pub mod error;
pub mod exact;
pub mod generators;
pub mod io;
pub mod minplus;
pub mod pareto;
pub mod reduction;

pub use algorithm::{pareto_sum, Algorithm, SumOutput};
pub use approx::{
    approximate_pareto_sum, evaluate_quality, evaluate_quality_quadratic,
    weak_approximate_pareto_sum, ApproxMode, ApproxResult, QualityReport, RepresentativeMap,
};
pub use error::{Error, Result};
pub use generators::{GenKind, GenSpec};
pub use minplus::{CdxzConfig, ConvResult};
pub use pareto::{
    brute_force_pareto_sum, dominates, pareto_front, ParetoSet, Point, Witness, WitnessedPoint,
};
pub use reduction::{bounded_pareto_sum, Backend};
