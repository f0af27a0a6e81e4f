//! Ultraspherical (Gegenbauer) polynomials `C_n^(λ)`: exact coefficients,
//! real zeros in the orthogonal (`λ > -1/2`) and quasi-orthogonal
//! (`-3/2 < λ < -1/2`) regimes, bounds for the largest zero, and executable
//! checks of the interlacing and comparison inequalities around them.

pub mod bounds;
pub mod error;
pub mod exec;
pub mod format;
pub mod grid;
pub mod params;
pub mod poly;
pub mod quadrature;
pub mod sweep;
pub mod tridiag;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use params::{parse_rational, Params, Regime};
pub use zeros::{largest_zero, zeros, ZeroSet};
pub use bounds::{bound_report, BoundReport};
pub use exec::Exec;
pub use verify::{run_suite, CheckResult, Status, SuiteConfig};
