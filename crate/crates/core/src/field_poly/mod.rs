//! Prime-field arithmetic, sparse multivariate polynomials, monomial orders,
//! and univariate root finding.

pub mod field;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod uv_roots;
