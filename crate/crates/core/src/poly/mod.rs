//! Exact polynomial arithmetic: univariate series carriers, multivariate
//! rational-coefficient polynomials with a graded-lex term order, and the
//! small exact linear algebra used for kernel dimensions.

mod linalg;
mod multi;
mod uni;

pub use linalg::{rank_int, rank_rational, rows_to_int};
pub use multi::{poly_from_int_terms, LinearForm, Monomial, MultiPoly};
pub use uni::UniPoly;
