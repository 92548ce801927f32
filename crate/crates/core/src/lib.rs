//! Exact spectral toolkit for the hypercube layer graph `H(n)` (singletons
//! and 2-subsets of `[n]` joined by containment) and its line graph `L(n)`.
//!
//! Everything is computed with arbitrary-precision integers: adjacency
//! matrices, characteristic polynomials (Faddeev–LeVerrier, cross-checked
//! by a Bareiss determinant on small inputs), integer roots and the
//! quotient matrices of equitable partitions. The [`verify`] module turns
//! the structural and spectral claims about `L(n)` into named checks.
//!
//! With the default `parallel` feature the per-row matrix products, the
//! all-sources searches in [`metrics`] and the `n` sweep in
//! [`verify::verify_sweep`] run on rayon; see [`exec::Execution`].

pub mod error;
pub mod exec;
pub mod graph;
pub mod group;
pub mod linalg;
pub mod metrics;
pub mod partition;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{
    h_graph, hypercube, l_graph, l_index, layer_graph, line_graph, natural_line_map_check, Graph,
    Label,
};
pub use group::{
    compose, is_automorphism, lift_to_l_graph, orbit_partition, stabilizer_generators,
    GeneratorSet, Permutation,
};
pub use linalg::{
    adjacency_matrix, char_poly, divides, integer_roots, is_integral, quotient_spectrum, spectrum,
    IntMatrix, IntPolynomial, SpectrumReport,
};
pub use metrics::{metrics, Extent, Metrics};
pub use partition::{
    coarsest_equitable_refinement, is_equitable, quotient_matrix, EquitableCheck, Partition,
    QuotientMatrix,
};
