//! Exact enumeration of graded posets.
//!
//! Four families are covered: all (strongly) graded posets, graded
//! semiorders (avoiding both `(2+2)` and `(3+1)`), graded interval orders
//! (avoiding `(2+2)`) and `(3+1)`-avoiding graded posets. Each count is
//! available from at least two independent routes:
//!
//! * [`engines`]: transfer matrices over the power-series ring and closed
//!   forms,
//! * [`seeds`]: the seed / sprout substitutions that move between seed,
//!   unlabeled and labeled generating functions,
//! * [`oracle`]: brute-force enumeration of every labeled poset.
//!
//! [`series`] supplies the exact truncated power-series arithmetic everything
//! else is written in, and [`poset`] the finite poset representation with the
//! pattern-containment checks.

pub mod engines;
pub mod golden;
pub mod numbers;
pub mod oracle;
pub mod poset;
pub mod seeds;
pub mod series;

pub use poset::{ChainSumPattern, Grading, Poset, RankedPoset};
pub use series::{BivariateSeries, NamedSeries, PowerSeries, SeriesError};
