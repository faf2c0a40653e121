//! Exact construction, transformation, verification and counting of matrix
//! factorizations of multivariate polynomials.
//!
//! A matrix factorization of `f` is a tuple of square polynomial matrices
//! `(A_1, ..., A_n)` whose ordered product is `f * I`. Every construction in
//! this crate re-checks its output by direct multiplication before handing it
//! back, so a [`Factorization`] marked verified is always sound.

pub mod catalog;
pub mod factorization;
pub mod json;
pub mod poly;
pub mod polymat;

pub use factorization::{
    block_family, block_family_of, block_hypothesis, canonical_key, combine, det_certificate,
    extend, orbit, rotations, standard_method, standard_method_stages, transpose_reversal,
    BlockFamily, CertificateOptions, CertificateReport, FactorCertificate, Factorization,
    Hypothesis, HypothesisFailure, HypothesisVariant, OrbitLimits, OrbitReport, TermList,
    VerifyError, BLOCK_PATTERNS,
};
pub use poly::{Monomial, PolyError, Polynomial, Variables};
pub use polymat::{BlockQuad, MatrixError, NonCommutingBlocks, PolyMatrix, DEFAULT_DET_CAP};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("verification failed: {0}")]
    Verify(#[from] VerifyError),
    #[error("a factorization needs at least one factor")]
    NoFactors,
    #[error("expected {expected} factors, found {got}")]
    FactorCount { expected: usize, got: usize },
    #[error("a term list needs at least one (g, h) pair")]
    EmptyTermList,
    #[error("cross factors do not commute: {0}")]
    CrossPairs(&'static str),
    #[error("{0}")]
    Hypothesis(#[from] HypothesisFailure),
    #[error("block rearrangement {item} failed verification: {source}")]
    BlockItem { item: usize, source: VerifyError },
    #[error("factor {factor} has zero determinant")]
    ZeroDeterminant { factor: usize },
    #[error("determinant of factor {factor} does not divide f^{power}")]
    NotDivisible { factor: usize, power: usize },
    #[error("product of determinants differs from f^{power}")]
    DeterminantProduct { power: usize },
    #[error("entry ({row}, {col}) of factor {factor}: {source}")]
    Entry {
        factor: usize,
        row: usize,
        col: usize,
        source: PolyError,
    },
    #[error("malformed document: {0}")]
    Schema(String),
    #[error("catalog: {0}")]
    Catalog(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
