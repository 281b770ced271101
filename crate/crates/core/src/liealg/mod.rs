//! Matrix models of `sl(n)` and `so(2m+1)`, sl2-triples, Slodowy slices,
//! their quotient maps and finite symmetry groups.

mod action;
mod algebra;
mod quotient;
mod rank;
mod slice;
mod transversal;
mod triple;

pub use action::{
    base_action, builtin_symmetries, compose_signs, induced_signs, parameter_map, slice_action,
    FiniteActionOnSlice, ParamMap, SignedIndex, SliceSymmetry,
};
pub use algebra::{AlgebraKind, MatrixAlgebra};
pub use quotient::{
    adjoint_quotient, central_fiber, reduce_by_linear_pivots, slice_quotient, CentralFiber,
    InvariantTuple,
};
pub use rank::{rank_dq, RankDq};
pub use slice::{normalize_basis, SliceJson, SlodowySlice};
pub use transversal::{transversality_check, TransversalPoint, TransversalityReport};
pub use triple::{verify_sl2_triple, BuiltinSlice, Sl2Triple, TripleReport};

use thiserror::Error;

use crate::dynkin::DynkinError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("unsupported algebra `{0}`")]
    UnsupportedAlgebra(String),
    #[error("not in the algebra: {0}")]
    NotInAlgebra(String),
    #[error("not an sl2-triple: {0}")]
    InvalidTriple(String),
    #[error("invariant degrees {got:?} do not match {expected:?}")]
    DegreeMismatch { expected: Vec<u32>, got: Vec<u32> },
    #[error("odd characteristic coefficient {0} does not vanish")]
    OddCoefficient(usize),
    #[error("not a subregular slice: {0}")]
    NotSubregular(String),
    #[error("symmetry does not preserve the slice: {0}")]
    NotPreserving(String),
    #[error("not expressible in the components: {0}")]
    NotExpressible(String),
    #[error("not a Cartan point: {0}")]
    NotInCartan(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Dynkin(#[from] DynkinError),
}

impl LieError {
    /// Whether a Gröbner budget ran out somewhere in the computation.
    pub fn is_budget_exceeded(&self) -> bool {
        matches!(self, LieError::Poly(e) if e.is_budget_exceeded())
    }
}
