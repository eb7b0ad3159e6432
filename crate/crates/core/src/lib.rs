//! Dyck paths under the ascent order: enumeration, lattice operations,
//! sylvester-class encodings, exact interval counting by several
//! independent methods, generating functions and asymptotics.
//!
//! Numeric code is generic over the scalar: series and polynomials accept
//! any [`series::Field`] (`f32`, `f64`, exact rationals), counting tables
//! any [`counting::Count`]. The aliases below fix the usual choices.

pub mod counting;
pub mod involution;
pub mod paths;
pub mod poset;
pub mod series;
pub mod sylvester;
pub mod verify;

use num_bigint::BigUint;
use num_rational::BigRational;
use thiserror::Error;

pub use counting::{CountTable, CountingError, Walk, WalkKind, WalkSpec};
pub use involution::{involution_f, Involution, InvolutionError};
pub use paths::{parse_path, DyckPath, FamilyKind, NonincreasingSequence, PathError, PathFamily, Step};
pub use poset::{Interval, IntervalStats, PosetError};
pub use series::asym::{Asymptotics, GrowthFit};
pub use series::{MPoly, PolySeries, RatFn, SeriesError, TruncSeries};
pub use sylvester::SylvesterError;

/// Exact power series in `t`.
pub type QSeries = TruncSeries<BigRational>;
/// Exact power series in `t` with polynomial coefficients in `x, y`.
pub type QPolySeries = PolySeries<BigRational>;
/// Bivariate series in double precision.
pub type FPolySeries = PolySeries<f64>;
pub type CountTableBig = CountTable<BigUint>;
pub type AsymptoticData = Asymptotics<f64>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Sylvester(#[from] SylvesterError),
    #[error(transparent)]
    Counting(#[from] CountingError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
