//! Exact verification of Wilf–Zeilberger pairs and high-precision evaluation of
//! Barnes integrals, hypergeometric continuations and residue series.

pub mod barnes;
pub mod closed_form;
pub mod error;
pub mod exact;
pub mod hyperterm;
pub mod mpnum;
pub mod paperlib;
pub mod series_ident;

pub use error::{Error, Result};

/// One of the two discrete variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    N,
    K,
}

impl Var {
    pub fn name(self) -> char {
        match self {
            Var::N => 'n',
            Var::K => 'k',
        }
    }
}
