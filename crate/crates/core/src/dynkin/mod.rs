//! Irreducible Dynkin diagrams, root systems, diagram automorphisms and
//! folding.

mod folding;
mod invariants;
mod roots;
mod types;
mod weyl;

pub use folding::{
    associated_group_order, associated_pair, canonical_subgroup, diagram_automorphisms, fold,
    fold_generated, graph_automorphisms, identify_cartan, DiagramAutomorphism, FoldingRecord,
    GroupTag,
};
pub use invariants::{express_in_invariants, invariant_degrees, weighted_monomials, CartanChart};
pub use roots::{cartan_of, reflect, simple_roots, RootSystem, Vector};
pub use types::{DynkinType, Family};
pub use weyl::{fundamental_orbit_size, weyl_group_order};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynkinError {
    #[error("invalid Dynkin type `{0}`")]
    InvalidType(String),
    #[error("invalid group `{0}`")]
    InvalidGroup(String),
    #[error("{0} is not a diagram automorphism")]
    NotAnAutomorphism(String),
    #[error("{0} sends a vertex to a neighbour")]
    DynkinCondition(String),
    #[error("the given automorphisms are not closed under composition")]
    NotClosed,
    #[error("nontrivial folding requires a simply laced diagram, got {0}")]
    NotSimplyLaced(DynkinType),
    #[error("{dynkin} has no subgroup of type {group}")]
    NoSuchSubgroup { dynkin: DynkinType, group: GroupTag },
    #[error("Cartan matrix {0:?} is not of a known type")]
    UnrecognizedCartan(Vec<Vec<i64>>),
    #[error("folding invariant violated: {0}")]
    InvariantViolated(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cannot write in invariants: {0}")]
    NotInvariant(String),
}
