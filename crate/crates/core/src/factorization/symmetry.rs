//! Cyclic rotation and transpose-reversal of factor tuples.

use crate::Result;

use super::Factorization;

/// All `n` cyclic rotations `(A_i, ..., A_n, A_1, ..., A_{i-1})`, starting
/// with the identity rotation. Each one is verified by multiplication.
pub fn rotations(fac: &Factorization) -> Result<Vec<Factorization>> {
    fac.ensure_verified()?;
    let n = fac.len();
    (0..n)
        .map(|start| {
            let factors = (0..n)
                .map(|k| fac.factors()[(start + k) % n].clone())
                .collect();
            Factorization::verified(fac.target().clone(), factors)
        })
        .collect()
}

/// `(A_n^t, ..., A_1^t)`, verified by multiplication.
pub fn transpose_reversal(fac: &Factorization) -> Result<Factorization> {
    fac.ensure_verified()?;
    let factors = fac.factors().iter().rev().map(|a| a.transpose()).collect();
    Factorization::verified(fac.target().clone(), factors)
}
