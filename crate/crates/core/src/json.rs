//! JSON documents for matrices, factorizations and certificate reports.
//!
//! Matrix: `{"size": m, "variables": [...], "entries": [[...], ...]}`.
//! Factorization: `{"target": ..., "variables": [...], "factors": [matrix, ...], "verified": bool}`.
//! Entries are polynomial strings in canonical form.

use serde::{Deserialize, Serialize};

use crate::factorization::{CertificateReport, Factorization};
use crate::poly::{Polynomial, Variables};
use crate::polymat::PolyMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub size: usize,
    pub variables: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationDoc {
    pub target: String,
    pub variables: Vec<String>,
    pub factors: Vec<MatrixDoc>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCertificateDoc {
    pub det: String,
    pub quotient: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unit: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub power: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub target: String,
    pub variables: Vec<String>,
    pub exponent: usize,
    pub irreducible_hint: bool,
    pub factors: Vec<FactorCertificateDoc>,
}

impl MatrixDoc {
    pub fn from_matrix(m: &PolyMatrix, vars: &Variables) -> Self {
        MatrixDoc {
            size: m.size(),
            variables: vars.names().to_vec(),
            entries: m
                .rows()
                .map(|row| row.iter().map(|e| e.to_text(vars)).collect())
                .collect(),
        }
    }

    /// Parses entries; `factor` is only used to locate errors.
    fn to_matrix_at(&self, vars: &Variables, factor: usize) -> Result<PolyMatrix> {
        if self.entries.len() != self.size {
            return Err(Error::Schema(format!(
                "factor {factor}: size is {} but {} rows are given",
                self.size,
                self.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(self.size);
        for (r, row) in self.entries.iter().enumerate() {
            if row.len() != self.size {
                return Err(Error::Schema(format!(
                    "factor {factor}: row {} has {} entries, expected {}",
                    r + 1,
                    row.len(),
                    self.size
                )));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(c, text)| {
                    Polynomial::parse(text, vars).map_err(|source| Error::Entry {
                        factor,
                        row: r + 1,
                        col: c + 1,
                        source,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        Ok(PolyMatrix::from_rows(rows)?)
    }

    pub fn to_matrix(&self) -> Result<(PolyMatrix, Variables)> {
        let vars = Variables::new(self.variables.iter().cloned())?;
        Ok((self.to_matrix_at(&vars, 1)?, vars))
    }
}

impl FactorizationDoc {
    pub fn from_factorization(fac: &Factorization, vars: &Variables) -> Self {
        FactorizationDoc {
            target: fac.target().to_text(vars),
            variables: vars.names().to_vec(),
            factors: fac
                .factors()
                .iter()
                .map(|m| MatrixDoc::from_matrix(m, vars))
                .collect(),
            verified: fac.is_verified(),
        }
    }

    /// Rebuilds the factorization. The `verified` field is informational:
    /// the result is always unverified until checked again.
    pub fn to_factorization(&self) -> Result<(Factorization, Variables)> {
        let vars = Variables::new(self.variables.iter().cloned())?;
        let target = Polynomial::parse(&self.target, &vars)?;
        let mut factors = Vec::with_capacity(self.factors.len());
        for (i, doc) in self.factors.iter().enumerate() {
            if doc.variables != self.variables {
                return Err(Error::Schema(format!(
                    "factor {} declares variables {:?}, expected {:?}",
                    i + 1,
                    doc.variables,
                    self.variables
                )));
            }
            factors.push(doc.to_matrix_at(&vars, i + 1)?);
        }
        Ok((Factorization::new(target, factors)?, vars))
    }
}

impl CertificateDoc {
    pub fn from_report(report: &CertificateReport, vars: &Variables) -> Self {
        CertificateDoc {
            target: report.target.to_text(vars),
            variables: vars.names().to_vec(),
            exponent: report.exponent,
            irreducible_hint: report.irreducible_hint,
            factors: report
                .factors
                .iter()
                .map(|c| FactorCertificateDoc {
                    det: c.det.to_text(vars),
                    quotient: c.quotient.to_text(vars),
                    unit: c.power.as_ref().map(|(u, _)| u.to_string()),
                    power: c.power.as_ref().map(|(_, k)| *k),
                })
                .collect(),
        }
    }
}

pub fn factorization_to_json(fac: &Factorization, vars: &Variables) -> String {
    serde_json::to_string(&FactorizationDoc::from_factorization(fac, vars)).expect("serializable")
}

pub fn factorization_from_json(text: &str) -> Result<(Factorization, Variables)> {
    let doc: FactorizationDoc =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    doc.to_factorization()
}

/// Reads every factorization document from a stream of concatenated or
/// newline-separated JSON values.
pub fn read_factorizations(text: &str) -> Result<Vec<(Factorization, Variables)>> {
    serde_json::Deserializer::from_str(text)
        .into_iter::<FactorizationDoc>()
        .map(|doc| {
            doc.map_err(|e| Error::Schema(e.to_string()))?
                .to_factorization()
        })
        .collect()
}
