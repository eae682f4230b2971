//! Exact linear algebra and the chain complexes attached to a hypergraph.

mod complex;
mod matrix;
mod module;
mod normal_form;
mod ring;

pub(crate) use complex::boundary_in_basis;
pub use complex::{
    boundary_chain, boundary_matrix, cells_complex, embedded_homology, embedded_homology_in, homology, homology_in,
    incidence, inclusion_matrix, inf_complex, projection, projection_matrix, subcomplex_homology, sup_complex, Chain,
    DegreeHomology, GradedBasis, HomologyResult, HomologyTarget, SubChainComplex,
};
pub use matrix::Matrix;
pub use module::{image_module, module_intersection, module_sum, preimage_module, Submodule};
pub use normal_form::{
    column_echelon, hermite_basis, integer_invariant_factors, kernel, rank, smith_normal_form, ColumnEchelon, Smith,
};
pub use ring::{is_prime, CoeffSpec, Integers, PrimeField, Rationals, Ring};
