//! RC-graphs over the integers `<= n`, generalized Schensted insertion, and a
//! Littlewood-Richardson rule for multiplying Schubert polynomials of
//! permutations with `w(i) > w(i-1)` for `i <= 0` by Schur polynomials.
//!
//! Every combinatorial result can be checked against exact polynomial
//! arithmetic; see [`lr::verify_identity`] and the [`acceptance`] suite.

pub mod acceptance;
pub mod error;
pub mod format;
pub mod insertion;
pub mod lr;
pub mod perm;
pub mod poly;
pub mod rcgraph;
pub mod tableau;

pub use error::{Error, Result};
pub use insertion::{
    insert, insert_tableau, insert_word, inverse_insert, InsertionStep, InsertionTrace,
};
pub use lr::{jacobi_trudi, lr_coefficients, pieri_chains, verify_identity, LrResult};
pub use perm::Permutation;
pub use poly::{Coefficient, ExponentVector, SparsePolynomial};
pub use rcgraph::{Crossing, LabelGrid, RcGraph, Window};
pub use tableau::{Partition, Tableau, Word};

/// Polynomials with overflow-checked `i64` coefficients.
pub type Polynomial = SparsePolynomial<i64>;
/// Polynomials with `i128` coefficients.
pub type WidePolynomial = SparsePolynomial<i128>;
/// Polynomials with arbitrary-precision coefficients.
pub type BigPolynomial = SparsePolynomial<num_bigint::BigInt>;
