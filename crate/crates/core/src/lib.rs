//! Exact enumeration of ramified coverings of the sphere by the sphere.
//!
//! The crate computes Hurwitz numbers (automorphism-weighted counts of
//! degree-n rational maps with prescribed ramification) three independent
//! ways and cross-validates them:
//!
//! * [`simple`] and [`primitive`] solve partial differential recurrences on
//!   truncated generating functions, order by order, in exact rational
//!   arithmetic;
//! * [`primitive`] and [`simple`] also evaluate classical closed formulas;
//! * [`oracle`] counts transitive factorizations of the identity in the
//!   symmetric group directly, by convolution of conjugacy-class sums.
//!
//! [`algebra`] expresses covering generating series in the Laurent algebra
//! generated by the rooted-tree series, and [`decomp`] supplies the
//! cycle-decomposition coefficients that drive the recurrence for simple
//! coverings.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod algebra;
pub mod decomp;
mod error;
pub mod linsolve;
pub mod oracle;
pub mod partition;
pub mod primitive;
pub mod rational;
pub mod series;
pub mod simple;
mod sn;

pub use error::Error;
pub use partition::Partition;
pub use rational::{Int, Rational};
pub use series::{GradingRule, Monomial, Series, VarFamily};
