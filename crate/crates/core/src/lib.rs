//! Weight-two generalized bicycle (GB) quantum CSS codes.
//!
//! A `(2,2)`-GB code `GB(1 + x, 1 + x^α, n)` has parity-check matrices
//! `H_X = [A | B]` and `H_Z = [Bᵀ | Aᵀ]` built from circulants over GF(2).
//! Its logical operators are non-contractible cycles on a square grid folded
//! onto the torus `Z² / L`, where `L = Z(n, 0) ⊕ Z(−α, 1)`, so the shortest
//! vector of `L` bounds the minimum distance from below while explicit
//! "staircase" cycles bound it from above.
//!
//! The crate is organised bottom-up:
//!
//! - [`gf2poly`]: binary polynomials and the ring `F₂[x]/(xⁿ − 1)`
//! - [`gf2matrix`]: dense GF(2) matrices (circulants, rank, kernels, row spaces)
//! - [`css`]: CSS code container and an exhaustive distance oracle
//! - [`gbcode`]: GB construction and the equivalences reducing weight-two pairs
//!   to the canonical form
//! - [`lattice`]: two-dimensional integer lattices, Lagrange–Gauss reduction,
//!   shortest vectors in the Euclidean and L1 norms
//! - [`torus_graph`]: the torus graph, faces, cocycles, walk lifting and
//!   staircase certificates
//! - [`distance`]: certified distance reports
//! - [`arithmetic`]: factorisation, square roots of −1 modulo `n`, code families
//!   and the catalog sweep
//! - [`catalog`]: newline-delimited JSON catalogs, CSV export and verification
//! - [`cli`]: the `gbcodex` command line
//!
//! # Quick start
//!
//! ```
//! use gbcodex::distance::{determine, Budget};
//!
//! let report = determine(5, 13, &Budget::default()).unwrap();
//! assert_eq!(report.exact, Some(5));
//! ```

pub mod arithmetic;
pub mod bits;
pub mod catalog;
pub mod cli;
pub mod css;
pub mod distance;
pub mod error;
pub mod gbcode;
pub mod gf2matrix;
pub mod gf2poly;
pub mod lattice;
pub mod torus_graph;

pub use bits::BitVector;
pub use css::{CssCode, Distance, Side};
pub use distance::{determine, Budget, DistanceReport, Method};
pub use error::{Error, Result};
pub use gbcode::{CanonicalW2, GbSpec};
pub use gf2matrix::BitMatrix;
pub use gf2poly::BinaryPolynomial;
pub use lattice::Lattice2D;
pub use torus_graph::{EdgeVector, TorusGraph, Walk};
