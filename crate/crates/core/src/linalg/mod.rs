//! Exact integer linear algebra: characteristic polynomials, integer roots
//! and spectra. No floating point is used anywhere in this module.

mod matrix;
mod poly;
mod spectrum;

pub use matrix::{
    adjacency_matrix, bareiss_determinant, char_poly, char_poly_with, IntMatrix,
    BAREISS_CROSS_CHECK_MAX_DIM,
};
pub use poly::{divides, integer_roots, root_bound, IntPolynomial, IntegerRoots};
pub use spectrum::{
    is_integral, matrix_spectrum, quotient_spectrum, spectrum, spectrum_with, SpectrumReport,
};
