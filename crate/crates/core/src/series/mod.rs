//! Exact series arithmetic and the generating functions of intervals.

use thiserror::Error;

pub mod asym;
pub mod closed;
pub mod feq;
pub mod gf;
pub mod param;
pub mod poly;
pub mod ratfn;
pub mod residuals;
pub mod ring;
pub mod trunc;

pub use poly::{MPoly, Monomial};
pub use ratfn::RatFn;
pub use ring::{int, Field, Ring};
pub use trunc::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is not invertible")]
    NonInvertibleConstant,
    #[error("square root needs constant term 1")]
    BadSqrtConstant,
    #[error("inner series of a composition must have zero constant term")]
    NonZeroConstant,
    #[error("inexact division: {0}")]
    DivisionFailure(String),
    #[error("coefficient of t^{0} is not an integer")]
    NonIntegerCoefficient(usize),
}

/// Series in `t` whose coefficients are polynomials in `x` and `y`.
pub type PolySeries<C> = TruncSeries<MPoly<C, 2>>;
