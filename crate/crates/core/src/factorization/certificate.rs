//! Determinant certificates: for `A_1 ... A_n = f I_m`, every `det(A_i)` is
//! nonzero, divides `f^m`, and the determinants multiply to `f^m`.

use std::fmt::Write as _;

use num_rational::BigRational;

use crate::poly::{Polynomial, Variables};
use crate::polymat::DEFAULT_DET_CAP;
use crate::{Error, Result};

use super::Factorization;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateOptions {
    /// Caller asserts `f` is irreducible; each determinant is then expected to
    /// be a unit times a power of `f`.
    pub irreducible_hint: bool,
    pub det_cap: usize,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        CertificateOptions {
            irreducible_hint: false,
            det_cap: DEFAULT_DET_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCertificate {
    pub det: Polynomial,
    /// `f^m / det`, exact.
    pub quotient: Polynomial,
    /// `(c, k)` with `det = c * f^k`, when requested and when it holds.
    pub power: Option<(BigRational, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub target: Polynomial,
    /// Matrix size `m`; determinants divide `target^m`.
    pub exponent: usize,
    pub irreducible_hint: bool,
    pub factors: Vec<FactorCertificate>,
}

impl CertificateReport {
    pub fn describe(&self, vars: &Variables) -> String {
        let mut out = String::new();
        let m = self.exponent;
        let _ = writeln!(out, "target f = {}", self.target.to_text(vars));
        let _ = writeln!(out, "matrix size m = {m}; product of determinants = f^{m}");
        for (i, c) in self.factors.iter().enumerate() {
            let _ = writeln!(out, "factor {}:", i + 1);
            let _ = writeln!(out, "  det       = {}", c.det.to_text(vars));
            let _ = writeln!(out, "  f^{m} / det = {}", c.quotient.to_text(vars));
            if self.irreducible_hint {
                match &c.power {
                    Some((unit, k)) => {
                        let _ = writeln!(out, "  det       = {unit} * f^{k}");
                    }
                    None => {
                        let _ = writeln!(out, "  det is not a unit times a power of f");
                    }
                }
            }
        }
        out
    }
}

/// Writes `det` as `c * f^k` with `0 <= k <= max_k`, if possible.
fn unit_power(det: &Polynomial, f: &Polynomial, max_k: usize) -> Option<(BigRational, u32)> {
    let mut rest = det.clone();
    let mut k = 0u32;
    if f.degree().is_some_and(|d| d > 0) {
        while (k as usize) < max_k {
            match rest.try_divide(f).expect("f is nonzero") {
                Some(q) => {
                    rest = q;
                    k += 1;
                }
                None => break,
            }
        }
    }
    rest.constant_value()
        .filter(|c| *c != BigRational::from_integer(0.into()))
        .map(|c| (c, k))
}

pub fn det_certificate(
    fac: &Factorization,
    options: CertificateOptions,
) -> Result<CertificateReport> {
    fac.ensure_verified()?;
    let m = fac.size();
    let f = fac.target();
    let fm = f.pow(m as u32);
    let mut factors = Vec::with_capacity(fac.len());
    let mut det_product = Polynomial::one(fac.nvars());
    for (i, a) in fac.factors().iter().enumerate() {
        let det = a.det_with_cap(options.det_cap)?;
        if det.is_zero() {
            return Err(Error::ZeroDeterminant { factor: i + 1 });
        }
        let quotient = fm.try_divide(&det)?.ok_or(Error::NotDivisible {
            factor: i + 1,
            power: m,
        })?;
        det_product = &det_product * &det;
        let power = options
            .irreducible_hint
            .then(|| unit_power(&det, f, m))
            .flatten();
        factors.push(FactorCertificate {
            det,
            quotient,
            power,
        });
    }
    if det_product != fm {
        return Err(Error::DeterminantProduct { power: m });
    }
    Ok(CertificateReport {
        target: f.clone(),
        exponent: m,
        irreducible_hint: options.irreducible_hint,
        factors,
    })
}
