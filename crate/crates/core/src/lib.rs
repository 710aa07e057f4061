//! Generalized Hilbert-Kunz functions and multiplicities of graded modules over
//! two-dimensional standard graded rings in prime characteristic.
//!
//! The crate is layered bottom-up:
//!
//! * [`arith`]: prime fields, rationals, sparse graded polynomials.
//! * [`groebner`]: Gröbner bases of submodules of twisted free modules.
//! * [`idealops`]: colon, saturation, intersection, reflexive hulls, Hilbert series.
//! * [`frobmod`]: graded presentations, Frobenius pullback and the length of
//!   the finite-support part of the pulled-back module.
//! * [`hnform`]: Hilbert-Kunz slopes and the closed-form multiplicity formulas
//!   from Harder-Narasimhan data.
//! * [`fitlab`]: fitting multiplicities, remainder analysis and prime sweeps.

pub mod arith;
pub mod error;
pub mod fitlab;
pub mod frobmod;
pub mod groebner;
pub mod hnform;
pub mod idealops;

pub use error::{Error, Result};
