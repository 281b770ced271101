//! Integral cohomology of cyclic groups acting on finitely generated
//! abelian groups, and the pages of the equivariant spectral sequence.

pub mod abelian;
pub mod cyclic;
pub mod page;
pub mod snf;

pub use abelian::{preimage, subquotient, FGAbelianGroup};
pub use cyclic::{
    cyclic_subgroup_cohomology, diagram_involution, group_cohomology_cyclic, root_lattice_action,
    CyclicAction,
};
pub use page::{
    e2_page, h3_degeneration_report, CohomologyPage, DegenerationReport, FiberCohomology, PageCell,
    DIFFERENTIALS_NOTE,
};
pub use snf::{
    integer_kernel, lattice_basis, smith_normal_form, solve_integer, zdet, zmatrix, SmithForm,
    ZMatrix,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("shape: {0}")]
    Shape(String),
    #[error("the action does not have order dividing {order}")]
    OrderMismatch { order: usize },
    #[error("not equivariant: {0}")]
    NotEquivariant(String),
    #[error("group orders differ: {first} and {other}")]
    InconsistentOrders { first: usize, other: usize },
    #[error(transparent)]
    Dynkin(#[from] crate::dynkin::DynkinError),
}
