//! Exact arithmetic over the rationals in the discrete variables `n` and `k`.

pub mod affine;
pub mod gcd;
pub mod poly;
pub mod ratfun;
pub mod upoly;

pub use affine::AffineForm;
pub use poly::{BiPoly, Monomial, PolyDisplay};
pub use ratfun::{rf_equal, RationalFunction};
