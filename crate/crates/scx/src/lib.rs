//! Spectral and combinatorial analysis of finite simplicial complexes.
//!
//! The crate builds clique and neighborhood complexes from graphs, assembles
//! signed coboundary matrices and reduced Laplacians, and computes reduced
//! cohomology dimensions two independent ways: by counting near-zero Laplacian
//! eigenvalues and by exact fraction-free rank over the rationals. On top of
//! that sit the spectral-gap inequality checkers and vanishing certificates
//! ([`bounds`]) and a seeded Monte-Carlo harness for neighborhood complexes of
//! G(n, p) random graphs ([`lab`]).
//!
//! Core numeric code is generic over the scalar via `num-traits`: the same
//! matrix assembly serves `f64` for eigensolves and arbitrary-precision
//! integers for exact rank. Concrete aliases live at the crate root.

pub mod bits;
pub mod bounds;
pub mod complex;
pub mod eigen;
pub mod error;
pub mod exact;
pub mod graph;
pub mod io;
pub mod lab;
pub mod matrix;
pub mod simplex;
pub mod spectral;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::Graph;
pub use matrix::Matrix;
pub use simplex::Simplex;

/// Scalar types the generic matrix / operator code can be instantiated with.
///
/// Satisfied by `f32`/`f64` (floating pipeline) and by signed integer types
/// including [`ExactInt`] (exact pipeline).
pub trait Scalar: num_traits::Signed + Clone + PartialOrd + std::fmt::Debug {}
impl<T> Scalar for T where T: num_traits::Signed + Clone + PartialOrd + std::fmt::Debug {}

/// Floating scalar used by the spectral pipeline.
pub type Real = f64;
/// Exact arbitrary-precision integer used by the rational-rank pipeline.
pub type ExactInt = num_bigint::BigInt;
/// Dense real matrix.
pub type RealMatrix = Matrix<Real>;
/// Dense exact-integer matrix.
pub type ExactMatrix = Matrix<ExactInt>;
