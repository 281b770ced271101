//! Simple surface singularities: weighted normal forms, Milnor numbers,
//! symmetry groups, Jacobi rings, semi-universal deformations and
//! classification of germs.

mod classify;
mod deformation;
mod jacobi;
mod milnor;
mod model;
mod symmetry;

pub use classify::{classify_ade, detect_odp, hessian_at_origin, GermType, MAX_JET_ORDER};
pub use deformation::{deformation_with_action, semiuniversal_deformation, DeformationFamily};
pub use jacobi::{jacobi_basis, jacobian_groebner, JacobiRingBasis};
pub use milnor::{
    local_milnor_number, milnor_number, milnor_number_with_budget, tjurina_number, Milnor,
};
pub use model::{coxeter_number, normal_form, SingularityModel};
pub use symmetry::{sample_points, symmetry_action, LinearMap, SymmetryAction};

use thiserror::Error;

use crate::dynkin::{DynkinError, DynkinType};
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularityError {
    #[error("{0} is not simply laced")]
    NotAde(DynkinType),
    #[error("singularity is not isolated")]
    NonIsolated,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("a generator does not preserve the equation")]
    NotPreserved,
    #[error("group check failed: {0}")]
    WrongGroup(String),
    #[error("weight law violated: {0}")]
    WeightLaw(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Dynkin(#[from] DynkinError),
}

impl SingularityError {
    /// Whether a Gröbner budget ran out somewhere in the computation.
    pub fn is_budget_exceeded(&self) -> bool {
        matches!(self, SingularityError::Poly(e) if e.is_budget_exceeded())
    }
}
