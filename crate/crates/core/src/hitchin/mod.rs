//! Local models of Hitchin-type families of threefolds over a curve.

pub mod cameral;
pub mod discriminant;
pub mod family;
pub mod restriction;
pub mod section;
pub mod smooth;
pub mod threefold;

pub use cameral::{chart_matches_torus, diagonal_torus, local_cameral, LocalCameralCurve};
pub use discriminant::{
    branch_locus, discriminant, invariant_discriminant, isolate_zeros, radical,
    spectral_polynomial, sylvester_resultant, Discriminant, DiscriminantZero,
    InvariantDiscriminant, ZeroLocation,
};
pub use family::{bundle_name, family_spec, ledger_holds, spec_from_family, FamilySpec};
pub use restriction::{
    discriminant_witness, restriction_check, wall_check, DiscriminantWitness, RestrictionReport,
    WallCheck, WallClass, WallCrossing,
};
pub use section::LocalSection;
pub use smooth::{
    fiber_report, jacobian_minors, rational_points, smoothness_report,
    smoothness_report_with_budget, FiberReport, LocalModel, SingularLocus, SingularPoint,
    SmoothnessReport,
};
pub use threefold::{builtin_slice_for, local_threefold, LocalThreefold, ModelTag};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HitchinError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("section mismatch: {0}")]
    SectionMismatch(String),
    #[error("weight ledger violated: {0}")]
    LedgerViolation(String),
    #[error("restriction check failed: {0}")]
    Restriction(String),
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
    #[error(transparent)]
    Dynkin(#[from] crate::dynkin::DynkinError),
    #[error(transparent)]
    Lie(#[from] crate::liealg::LieError),
    #[error(transparent)]
    Singularity(#[from] crate::singularity::SingularityError),
}

impl HitchinError {
    /// Whether a Gröbner budget ran out somewhere in the computation.
    pub fn is_budget_exceeded(&self) -> bool {
        match self {
            HitchinError::Poly(e) => e.is_budget_exceeded(),
            HitchinError::Lie(e) => e.is_budget_exceeded(),
            HitchinError::Singularity(e) => e.is_budget_exceeded(),
            _ => false,
        }
    }
}
