//! Fourteen block rearrangements of a factorization `(A, B)` whose quadrant
//! blocks pair up by sign and pairwise commute.
//!
//! Write `A = [[A1, A2], [A3, A4]]` and `B = [[B1, B2], [B3, B4]]`. When either
//!
//! * variant A: `A2 = B2`, `A3 = B3`, `A1 = -B4`, `A4 = -B1`, or
//! * variant B: `A1 = B4`, `A4 = B1`, `A2 = -B2`, `A3 = -B3`,
//!
//! holds and the four `A_i` commute pairwise, each pair in [`BLOCK_PATTERNS`]
//! is again a factorization of `f`.

use std::fmt;

use crate::polymat::{BlockQuad, MatrixError, NonCommutingBlocks, PolyMatrix};
use crate::{Error, Result};

use super::{check_product, Factorization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HypothesisVariant {
    A,
    B,
}

impl HypothesisVariant {
    pub fn pattern(self) -> &'static str {
        match self {
            HypothesisVariant::A => "A2 = B2, A3 = B3, A1 = -B4, A4 = -B1",
            HypothesisVariant::B => "A1 = B4, A4 = B1, A2 = -B2, A3 = -B3",
        }
    }
}

impl fmt::Display for HypothesisVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisVariant::A => f.write_str("A"),
            HypothesisVariant::B => f.write_str("B"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub variant: HypothesisVariant,
    /// The equalities that matched, e.g. `A1 = B4, A4 = B1, A2 = -B2, A3 = -B3`.
    pub pattern: &'static str,
}

/// Why neither sign pattern applies (or the blocks of `A` fail to commute).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisFailure {
    /// First failing equality of variant A, if any.
    pub variant_a: Option<&'static str>,
    /// First failing equality of variant B, if any.
    pub variant_b: Option<&'static str>,
    pub commutation: Option<NonCommutingBlocks>,
}

impl fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("block hypothesis does not hold:")?;
        match (self.variant_a, self.variant_b) {
            (Some(a), Some(b)) => write!(f, " variant A fails at `{a}`, variant B fails at `{b}`")?,
            _ => f.write_str(" a sign pattern matches")?,
        }
        if let Some(w) = &self.commutation {
            write!(f, "; {w}")?;
        }
        Ok(())
    }
}

impl std::error::Error for HypothesisFailure {}

/// Which matrix a rearranged factor draws its blocks from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// One rearrangement: each factor is `[[X_p, X_q], [X_r, X_s]]` for the given
/// side `X` and 1-based block indices `[p, q, r, s]`.
pub type BlockPattern = [(Side, [usize; 4]); 2];

pub const BLOCK_PATTERNS: [BlockPattern; 14] = {
    use Side::{A, B};
    [
        [(A, [1, 2, 3, 4]), (B, [1, 2, 3, 4])],
        [(A, [3, 1, 4, 2]), (B, [2, 4, 1, 3])],
        [(A, [4, 3, 2, 1]), (B, [4, 3, 2, 1])],
        [(A, [2, 4, 1, 3]), (B, [3, 1, 4, 2])],
        [(A, [2, 1, 4, 3]), (B, [3, 4, 1, 2])],
        [(A, [3, 4, 1, 2]), (B, [2, 1, 4, 3])],
        [(B, [1, 3, 2, 4]), (A, [1, 3, 2, 4])],
        [(B, [2, 1, 4, 3]), (A, [3, 4, 1, 2])],
        [(B, [4, 2, 3, 1]), (A, [4, 2, 3, 1])],
        [(B, [3, 4, 1, 2]), (A, [2, 1, 4, 3])],
        [(B, [3, 1, 4, 2]), (A, [2, 4, 1, 3])],
        [(B, [2, 4, 1, 3]), (A, [3, 1, 4, 2])],
        [(A, [1, 3, 2, 4]), (B, [1, 3, 2, 4])],
        [(A, [4, 2, 3, 1]), (B, [4, 2, 3, 1])],
    ]
};

fn first_failure(checks: &[(&'static str, bool)]) -> Option<&'static str> {
    checks.iter().find(|(_, ok)| !ok).map(|(name, _)| *name)
}

/// Detects which sign pattern the quadrants satisfy, and checks that the
/// blocks of `a` commute pairwise.
pub fn block_hypothesis(a: &BlockQuad, b: &BlockQuad) -> Result<Hypothesis, Error> {
    if a.half() != b.half() {
        return Err(MatrixError::SizeMismatch {
            left: 2 * a.half(),
            right: 2 * b.half(),
        }
        .into());
    }
    if a.nvars() != b.nvars() {
        return Err(MatrixError::VariableCountMismatch {
            left: a.nvars(),
            right: b.nvars(),
        }
        .into());
    }
    let eq = |i: usize, j: usize| a.block(i) == b.block(j);
    let eq_neg = |i: usize, j: usize| *a.block(i) == b.block(j).neg();
    let variant_a = first_failure(&[
        ("A2 = B2", eq(2, 2)),
        ("A3 = B3", eq(3, 3)),
        ("A1 = -B4", eq_neg(1, 4)),
        ("A4 = -B1", eq_neg(4, 1)),
    ]);
    let variant_b = first_failure(&[
        ("A1 = B4", eq(1, 4)),
        ("A4 = B1", eq(4, 1)),
        ("A2 = -B2", eq_neg(2, 2)),
        ("A3 = -B3", eq_neg(3, 3)),
    ]);
    let commutation = a.blocks_commute().err();
    let variant = match (variant_a, variant_b) {
        (None, _) => HypothesisVariant::A,
        (_, None) => HypothesisVariant::B,
        _ => {
            return Err(HypothesisFailure {
                variant_a,
                variant_b,
                commutation,
            }
            .into());
        }
    };
    if commutation.is_some() {
        return Err(HypothesisFailure {
            variant_a,
            variant_b,
            commutation,
        }
        .into());
    }
    Ok(Hypothesis {
        variant,
        pattern: variant.pattern(),
    })
}

#[derive(Debug, Clone)]
pub struct BlockFamily {
    pub hypothesis: Hypothesis,
    /// The fourteen rearranged pairs in [`BLOCK_PATTERNS`] order; item 1 is the input.
    pub items: Vec<Factorization>,
}

fn build(pattern: &(Side, [usize; 4]), a: &BlockQuad, b: &BlockQuad) -> PolyMatrix {
    let src = match pattern.0 {
        Side::A => a,
        Side::B => b,
    };
    let [p, q, r, s] = pattern.1;
    BlockQuad::new(
        src.block(p).clone(),
        src.block(q).clone(),
        src.block(r).clone(),
        src.block(s).clone(),
    )
    .expect("blocks share a shape")
    .assemble()
}

/// Generates all fourteen rearrangements, verifying each by multiplication.
pub fn block_family(a: &BlockQuad, b: &BlockQuad) -> Result<BlockFamily> {
    let hypothesis = block_hypothesis(a, b)?;
    let product = a.assemble().mat_mul(&b.assemble())?;
    let target = product.is_scalar_identity().ok_or_else(|| {
        let (row, col) = product.scalar_mismatch().expect("not scalar");
        Error::BlockItem {
            item: 1,
            source: super::VerifyError::NotScalar {
                row,
                col,
                entry: product.get(row, col).clone(),
                diagonal: product.get(0, 0).clone(),
            },
        }
    })?;
    let mut items = Vec::with_capacity(BLOCK_PATTERNS.len());
    for (index, pattern) in BLOCK_PATTERNS.iter().enumerate() {
        let left = build(&pattern[0], a, b);
        let right = build(&pattern[1], a, b);
        let product = left.mat_mul(&right)?;
        check_product(&product, &target).map_err(|source| Error::BlockItem {
            item: index + 1,
            source,
        })?;
        let mut fac = Factorization::new(target.clone(), vec![left, right])?;
        fac.verified = true;
        items.push(fac);
    }
    Ok(BlockFamily { hypothesis, items })
}

/// [`block_family`] on the quadrants of a verified pair.
pub fn block_family_of(fac: &Factorization) -> Result<BlockFamily> {
    fac.ensure_verified()?;
    let (a, b) = fac.expect_pair()?;
    let family = block_family(&a.partition()?, &b.partition()?)?;
    debug_assert_eq!(family.items[0], *fac);
    Ok(family)
}
