//! Exact sparse Laurent-polynomial arithmetic.

mod poly;
mod series;
mod text;

pub use poly::{poly_arith, ArithOp, LaurentPoly, Monomial};
pub use series::{series_from_linear_factors, TruncatedSeries};
pub use text::{PolyJson, TermJson};
