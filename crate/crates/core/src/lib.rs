//! Exact q-series machinery for partition ranks, odd ranks and mock theta
//! functions, together with a catalog of verified identities.

pub mod catalog;
pub mod error;
pub mod expr;
pub mod mock;
pub mod num;
pub mod rank;
pub mod series;
pub mod theta;

pub use error::{Error, Result};
pub use num::{BigRat, CycRat};
pub use series::{Comparison, Discrepancy, LaurentSeries};
