//! Exact computations with Dynkin foldings, Slodowy slices, simple surface
//! singularities, local Calabi-Yau families over Hitchin bases and the group
//! cohomology of cyclic actions.

pub mod dynkin;
pub mod equivcoh;
pub mod hitchin;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod singularity;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/folding.md")]
    mod folding {}
    #[doc = include_str!("../../../book/src/slices.md")]
    mod slices {}
    #[doc = include_str!("../../../book/src/singularities.md")]
    mod singularities {}
    #[doc = include_str!("../../../book/src/local-models.md")]
    mod local_models {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
