//! Exact arithmetic for real Puiseux series, the non-Archimedean hyperbolic
//! plane over them, and its quotient Q-tree.
//!
//! The crate also builds an explicit Cauchy sequence in the tree and checks,
//! with exact arithmetic, why it cannot converge in the completion of any
//! segment.

pub mod counterexample;
pub mod hplane;
pub mod properties;
pub mod report;
pub mod sample;
pub mod series;
pub mod textio;
pub mod tree;

pub use hplane::{hp_distance, FComplex, FLine, HPlaneError, HPoint};
pub use report::{Status, Summary, VerificationReport};
pub use series::{Exponent, PuiseuxSeries, Rational, SeriesError, Valuation};
pub use tree::{project, tree_distance, TreePoint};
