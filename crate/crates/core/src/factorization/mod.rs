//! Matrix factorizations and the constructions that produce new ones.
//!
//! Every operation here multiplies its output back out and compares against
//! the target before returning it; the identities being applied serve as test
//! oracles, not as shortcuts.

mod blocks;
mod certificate;
mod orbit;
mod standard;
mod symmetry;

use std::fmt;

use crate::poly::{Polynomial, Variables};
use crate::polymat::{MatrixError, PolyMatrix};
use crate::{Error, Result};

pub use blocks::{
    block_family, block_family_of, block_hypothesis, BlockFamily, Hypothesis, HypothesisFailure,
    HypothesisVariant, Side, BLOCK_PATTERNS,
};
pub use certificate::{det_certificate, CertificateOptions, CertificateReport, FactorCertificate};
pub use orbit::{orbit, OrbitLimits, OrbitReport};
pub use standard::{combine, extend, standard_method, standard_method_stages, TermList};
pub use symmetry::{rotations, transpose_reversal};

/// Why a product of factors is not `target * I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    /// The product is not a scalar multiple of the identity; `(row, col)` is
    /// the first offending entry in row-major order (0-based).
    NotScalar {
        row: usize,
        col: usize,
        entry: Polynomial,
        diagonal: Polynomial,
    },
    /// The product is `found * I` but the target is `expected`.
    TargetMismatch {
        expected: Polynomial,
        found: Polynomial,
    },
}

impl VerifyError {
    /// Human-readable message using the given variable names.
    pub fn describe(&self, vars: &Variables) -> String {
        match self {
            VerifyError::NotScalar {
                row,
                col,
                entry,
                diagonal,
            } => format!(
                "product is not a scalar matrix: entry (row {}, col {}) is `{}` but {}",
                row + 1,
                col + 1,
                entry.to_text(vars),
                if row == col {
                    format!("entry (1, 1) is `{}`", diagonal.to_text(vars))
                } else {
                    "off-diagonal entries must be 0".to_string()
                }
            ),
            VerifyError::TargetMismatch { expected, found } => format!(
                "product is `{}` times the identity, expected `{}`",
                found.to_text(vars),
                expected.to_text(vars)
            ),
        }
    }
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nvars = match self {
            VerifyError::NotScalar { entry, .. } => entry.nvars(),
            VerifyError::TargetMismatch { expected, .. } => expected.nvars(),
        };
        f.write_str(&self.describe(&Variables::indexed(nvars)))
    }
}

impl std::error::Error for VerifyError {}

/// An ordered tuple of equally sized square matrices meant to multiply to `target * I`.
#[derive(Debug, Clone)]
pub struct Factorization {
    target: Polynomial,
    factors: Vec<PolyMatrix>,
    verified: bool,
}

impl PartialEq for Factorization {
    fn eq(&self, other: &Self) -> bool {
        self.target == other.target && self.factors == other.factors
    }
}

impl Eq for Factorization {}

impl Factorization {
    /// Structural checks only; the result is not yet verified.
    pub fn new(target: Polynomial, factors: Vec<PolyMatrix>) -> Result<Self> {
        let first = factors.first().ok_or(Error::NoFactors)?;
        for f in &factors[1..] {
            if f.size() != first.size() {
                return Err(MatrixError::SizeMismatch {
                    left: first.size(),
                    right: f.size(),
                }
                .into());
            }
            if f.nvars() != first.nvars() {
                return Err(MatrixError::VariableCountMismatch {
                    left: first.nvars(),
                    right: f.nvars(),
                }
                .into());
            }
        }
        if target.nvars() != first.nvars() {
            return Err(MatrixError::VariableCountMismatch {
                left: target.nvars(),
                right: first.nvars(),
            }
            .into());
        }
        Ok(Factorization {
            target,
            factors,
            verified: false,
        })
    }

    /// Builds and verifies in one step.
    pub fn verified(target: Polynomial, factors: Vec<PolyMatrix>) -> Result<Self> {
        let mut fac = Self::new(target, factors)?;
        fac.verify()?;
        Ok(fac)
    }

    pub fn target(&self) -> &Polynomial {
        &self.target
    }

    pub fn factors(&self) -> &[PolyMatrix] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<PolyMatrix> {
        self.factors
    }

    /// Number of factors `n`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Common size `m` of the factors.
    pub fn size(&self) -> usize {
        self.factors[0].size()
    }

    pub fn nvars(&self) -> usize {
        self.target.nvars()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Left-to-right product of the factors.
    pub fn product(&self) -> PolyMatrix {
        let mut iter = self.factors.iter();
        let mut acc = iter.next().expect("non-empty").clone();
        for f in iter {
            acc = acc.mat_mul(f).expect("factors share a shape");
        }
        acc
    }

    /// Multiplies the factors out and checks the product is `target * I`.
    pub fn verify(&mut self) -> Result<&Polynomial, VerifyError> {
        check_product(&self.product(), &self.target)?;
        self.verified = true;
        Ok(&self.target)
    }

    pub(crate) fn ensure_verified(&self) -> Result<()> {
        if !self.verified {
            check_product(&self.product(), &self.target)?;
        }
        Ok(())
    }

    pub(crate) fn expect_pair(&self) -> Result<(&PolyMatrix, &PolyMatrix)> {
        match self.factors.as_slice() {
            [c, d] => Ok((c, d)),
            other => Err(Error::FactorCount {
                expected: 2,
                got: other.len(),
            }),
        }
    }

    pub fn canonical_key(&self) -> String {
        canonical_key(self)
    }
}

pub(crate) fn check_product(product: &PolyMatrix, target: &Polynomial) -> Result<(), VerifyError> {
    match product.scalar_mismatch() {
        Ok((row, col)) => Err(VerifyError::NotScalar {
            row,
            col,
            entry: product.get(row, col).clone(),
            diagonal: product.get(0, 0).clone(),
        }),
        Err(scalar) if &scalar == target => Ok(()),
        Err(scalar) => Err(VerifyError::TargetMismatch {
            expected: target.clone(),
            found: scalar,
        }),
    }
}

/// Deterministic, order-sensitive serialization of the factor tuple.
///
/// Format: `n x m / v :` followed by each factor's entries in row-major order,
/// printed canonically with indexed variable names.
pub fn canonical_key(fac: &Factorization) -> String {
    let mut key = format!("{}x{}/{}:", fac.len(), fac.size(), fac.nvars());
    for f in &fac.factors {
        key.push('[');
        for (i, e) in f.entries().iter().enumerate() {
            if i > 0 {
                key.push(';');
            }
            key.push_str(&e.to_string());
        }
        key.push(']');
    }
    key
}
