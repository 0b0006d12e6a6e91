//! Exact sparse polynomial arithmetic in `z0..z3` over the rationals,
//! plus a recursive-descent parser for polynomial expressions.

mod monomial;
mod parser;
#[allow(clippy::module_inception)]
mod poly;

pub use monomial::{Monomial, MonomialOrder, NVARS};
pub use parser::{parse_poly, ParseError};
pub use poly::{rat, rat_int, NotDivisible, Poly, Rational};
