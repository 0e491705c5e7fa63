//! Exact-arithmetic cohomology of homogeneous spaces and two-sided
//! homotopy quotients.
//!
//! The crate provides free graded-commutative algebras over the rationals,
//! presented graded rings with degreewise Hilbert functions, finite sign
//! actions with invariant dimensions, pure Sullivan models with exact
//! cohomology, a catalog of classical compact Lie groups with their
//! classifying rings and restriction maps, and verifiers for presentations
//! of the equivariant and ordinary cohomology of real Grassmannians.
//! All linear algebra is sparse and exact; no floating point is used.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod grassmann;
pub mod io;
pub mod linalg;
pub mod model;
pub mod presentation;
pub mod series;

pub use algebra::{ratio_int, Element, FreeCGA, GeneratorDecl, Monomial, Ratio};
pub use catalog::{
    acyclic_bundle_model, block_restriction, classifying_data, determinant_involution,
    express_in_invariants, homogeneous_model, torus_restriction, two_sided_model,
    two_sided_pushout, FiberGen, GroupData, GroupDescriptor, RestrictionMap,
};
pub use error::EngineError;
pub use grassmann::{
    build_model, dispatch_verification, presented_ring, verify_all_small, verify_case,
    verify_corollary, verify_formality_factorization, verify_pushout_equivalence, Comparison,
    Equivariance, GrassmannCase, VerificationReport, Variant,
};
pub use model::{CohomologyReport, SullivanModel};
pub use presentation::{
    invariant_hilbert_function, invariant_projector, pushout, HilbertTable, InvariantProjector,
    QuotientPresentation, SignAction,
};
pub use series::Series;
