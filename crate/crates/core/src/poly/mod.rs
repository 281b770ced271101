//! Exact multivariate polynomials over the rationals, Gröbner bases,
//! elimination and quotient-ring bases.

mod groebner;
mod ideal;
mod mpoly;
mod order;
mod parse;
pub mod rational;
pub mod upoly;

pub use groebner::{
    default_budget, set_default_budget, GroebnerBasis, QuotientBasis, DEFAULT_BUDGET,
};
pub use ideal::Ideal;
pub use mpoly::{cmp_leading, unify_contexts, MPoly, MPolyJson, TermJson};
pub use order::{MonomialOrder, OrderKind, ResolvedOrder};
pub use rational::{format_rational, parse_rational, q, qq, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("variable `{0}` appears twice in a context")]
    DuplicateVariable(String),
    #[error("exponent vector has length {got}, context has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("unbound variables: {0}")]
    UnknownVariable(String),
    #[error("an ideal needs at least one generator")]
    EmptyIdeal,
    #[error("invalid elimination: {0}")]
    InvalidElimination(String),
    #[error("Gröbner computation exceeded its budget of {limit} S-pair reductions")]
    BudgetExceeded { limit: usize },
}

impl PolyError {
    /// Whether a Gröbner budget ran out somewhere in the computation.
    pub fn is_budget_exceeded(&self) -> bool {
        matches!(self, PolyError::BudgetExceeded { .. })
    }
}
