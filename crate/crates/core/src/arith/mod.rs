//! Exact arithmetic: prime fields, rationals, packed monomials, monomial orders,
//! sparse polynomials and polynomial matrices.

mod field;
mod matrix;
mod monomial;
mod order;
mod parse;
mod poly;
mod rational;

pub use field::{PrimeField, PrimeFieldElem};
pub use matrix::PolyMatrix;
pub use monomial::{Monomial, MAX_EXPONENT, MAX_VARS};
pub use order::{ModuleOrder, MonomialOrder, PositionRule};
pub use parse::parse_poly;
pub use poly::{poly_ring_ops, Poly, PolyRing, RingOp};
pub use rational::{abs_diff, format_rat, parse_rat, rat, rat_int, rat_to_f64, serde_rat, serde_rat_opt, Rat};
