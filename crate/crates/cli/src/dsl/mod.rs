//! A small definition language for hypergeometric terms, WZ pairs, Barnes
//! integrands and weighted series.
//!
//! ```text
//! # comment
//! pair "p" {
//!   U = poch(1/2, n)/fact(n);
//!   F = U*rf(n, 1);
//!   G = U*(n + k);
//! }
//! ```

mod ast;
mod lexer;
mod lower;
mod parser;
mod printer;

pub use ast::{Binding, DefKind, Definition, Expr, Func, Pos, TermFile};
pub use lower::{lower, LowerOptions, LoweredFile, LoweredIntegrand, LoweredSeries, LoweredTerm};
pub use parser::parse;
pub use printer::{print_expr, print_file};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("undefined name `{name}` at {pos}")]
    UndefinedName { pos: Pos, name: String },
}

impl ParseError {
    pub(crate) fn syntax(pos: Pos, msg: impl Into<String>) -> Self {
        ParseError::Syntax { pos, msg: msg.into() }
    }

    pub fn pos(&self) -> Pos {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::UndefinedName { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Error)]
pub enum LowerError {
    #[error("in `{def}`: {msg}")]
    Invalid { def: String, msg: String },
    #[error("in `{def}`: parameter `{name}` has no value (bind it or pass --{name})")]
    MissingParameter { def: String, name: String },
    #[error("in `{def}`: {source}")]
    Core {
        def: String,
        #[source]
        source: wzb_core::Error,
    },
}
