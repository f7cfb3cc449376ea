//! Exact sparse multivariate polynomial arithmetic over the rationals,
//! with matrix-indexed variables and a row multigrading.

mod monomial;
mod parser;
mod polynomial;
mod variable;

pub use monomial::Monomial;
pub use parser::parse_polynomial;
pub use polynomial::{multidegree, MonomialDisplay, MultiDegree, Polynomial};
pub use variable::{VarKind, Variable};

use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum PolyError {
    #[error("no image given for variable {0}")]
    MissingImage(Variable),
    #[error("variable {0} is not a Y variable in range")]
    ForeignVariable(Variable),
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}
