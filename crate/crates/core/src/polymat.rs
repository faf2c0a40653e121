//! Dense square matrices over [`Polynomial`].

use std::fmt;

use thiserror::Error;

use crate::poly::{Polynomial, Variables};

/// Largest size accepted by [`PolyMatrix::det`] unless a cap is given explicitly.
pub const DEFAULT_DET_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must have at least one row")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("size mismatch: {left}x{left} vs {right}x{right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("entries use differing variable counts ({left} vs {right})")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("cannot split a {0}x{0} matrix into quadrants")]
    OddSize(usize),
    #[error("determinant of a {size}x{size} matrix exceeds the size cap {cap}")]
    DetCapExceeded { size: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    size: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self, MatrixError> {
        let size = rows.len();
        if size == 0 {
            return Err(MatrixError::Empty);
        }
        let nvars = rows[0]
            .first()
            .map(Polynomial::nvars)
            .ok_or(MatrixError::Ragged {
                row: 0,
                len: 0,
                expected: size,
            })?;
        let mut entries = Vec::with_capacity(size * size);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(MatrixError::Ragged {
                    row: r,
                    len: row.len(),
                    expected: size,
                });
            }
            for e in row {
                if e.nvars() != nvars {
                    return Err(MatrixError::VariableCountMismatch {
                        left: nvars,
                        right: e.nvars(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(PolyMatrix {
            size,
            nvars,
            entries,
        })
    }

    /// Builds a matrix from a row-major generator.
    pub fn from_fn(
        size: usize,
        nvars: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        assert!(size > 0, "matrix size must be positive");
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                let e = f(i, j);
                assert_eq!(
                    e.nvars(),
                    nvars,
                    "entry ({i},{j}) has the wrong variable count"
                );
                entries.push(e);
            }
        }
        PolyMatrix {
            size,
            nvars,
            entries,
        }
    }

    pub fn zero(size: usize, nvars: usize) -> Self {
        Self::from_fn(size, nvars, |_, _| Polynomial::zero(nvars))
    }

    pub fn identity(size: usize, nvars: usize) -> Self {
        Self::scalar(size, &Polynomial::one(nvars))
    }

    /// `f * I_size`.
    pub fn scalar(size: usize, f: &Polynomial) -> Self {
        let nvars = f.nvars();
        Self::from_fn(size, nvars, |i, j| {
            if i == j {
                f.clone()
            } else {
                Polynomial::zero(nvars)
            }
        })
    }

    /// Parses a row-major grid of polynomial strings.
    pub fn parse<S: AsRef<str>>(rows: &[Vec<S>], vars: &Variables) -> Result<Self, crate::Error> {
        let parsed = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| Polynomial::parse(s.as_ref(), vars))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_rows(parsed)?)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Polynomial]> {
        self.entries.chunks(self.size)
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    fn check_compatible(&self, other: &PolyMatrix) -> Result<(), MatrixError> {
        if self.size != other.size {
            return Err(MatrixError::SizeMismatch {
                left: self.size,
                right: other.size,
            });
        }
        if self.nvars != other.nvars {
            return Err(MatrixError::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn mat_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        self.check_compatible(other)?;
        let n = self.size;
        let mut out = vec![Polynomial::zero(self.nvars); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out[i * n + j].add_product(a, b);
                    }
                }
            }
        }
        Ok(PolyMatrix {
            size: n,
            nvars: self.nvars,
            entries: out,
        })
    }

    pub fn checked_add(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(
        &self,
        other: &PolyMatrix,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> PolyMatrix {
        PolyMatrix {
            size: self.size,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix {
            size: self.size,
            nvars: self.nvars,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let n = self.size;
        PolyMatrix::from_fn(n, self.nvars, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// Returns `f` when `self == f * I`.
    pub fn is_scalar_identity(&self) -> Option<Polynomial> {
        self.scalar_mismatch().err()
    }

    /// `Err(f)` when `self == f * I`; otherwise `Ok((row, col))` of the first
    /// entry breaking the pattern in row-major order.
    pub(crate) fn scalar_mismatch(&self) -> Result<(usize, usize), Polynomial> {
        let diag = self.get(0, 0);
        for i in 0..self.size {
            for j in 0..self.size {
                let e = self.get(i, j);
                let ok = if i == j { e == diag } else { e.is_zero() };
                if !ok {
                    return Ok((i, j));
                }
            }
        }
        Err(diag.clone())
    }

    pub fn det(&self) -> Result<Polynomial, MatrixError> {
        self.det_with_cap(DEFAULT_DET_CAP)
    }

    /// Determinant by Laplace expansion over column subsets.
    ///
    /// Row `r` is expanded against every column set of size `r`, so the work is
    /// `O(2^n * n)` polynomial products and no division is ever needed.
    pub fn det_with_cap(&self, cap: usize) -> Result<Polynomial, MatrixError> {
        let n = self.size;
        if n > cap {
            return Err(MatrixError::DetCapExceeded { size: n, cap });
        }
        // partial[mask] = signed sum over bijections rows 0..|mask| -> mask.
        let mut partial: Vec<Option<Polynomial>> = vec![None; 1 << n];
        partial[0] = Some(Polynomial::one(self.nvars));
        for mask in 0usize..(1 << n) {
            let Some(acc) = partial[mask].take() else {
                continue;
            };
            let row = mask.count_ones() as usize;
            if row == n {
                partial[mask] = Some(acc);
                continue;
            }
            if acc.is_zero() {
                continue;
            }
            for col in 0..n {
                let bit = 1 << col;
                if mask & bit != 0 {
                    continue;
                }
                let entry = self.get(row, col);
                if entry.is_zero() {
                    continue;
                }
                // Inversions added by placing `col` after the already-used columns above it.
                let above = (mask >> (col + 1)).count_ones();
                let term = if above % 2 == 0 {
                    &acc * entry
                } else {
                    -(&acc * entry)
                };
                match &mut partial[mask | bit] {
                    Some(slot) => *slot += &term,
                    slot @ None => *slot = Some(term),
                }
            }
        }
        Ok(partial[(1 << n) - 1]
            .take()
            .unwrap_or_else(|| Polynomial::zero(self.nvars)))
    }

    /// Splits a `2n x 2n` matrix into its four `n x n` quadrants.
    pub fn partition(&self) -> Result<BlockQuad, MatrixError> {
        if !self.size.is_multiple_of(2) {
            return Err(MatrixError::OddSize(self.size));
        }
        let h = self.size / 2;
        let block = |r0: usize, c0: usize| {
            PolyMatrix::from_fn(h, self.nvars, |i, j| self.get(r0 + i, c0 + j).clone())
        };
        Ok(BlockQuad {
            half: h,
            blocks: [block(0, 0), block(0, h), block(h, 0), block(h, h)],
        })
    }

    /// Text rendering with aligned columns, one row per line.
    pub fn display<'a>(&'a self, vars: &'a Variables) -> MatrixDisplay<'a> {
        MatrixDisplay { matrix: self, vars }
    }
}

pub struct MatrixDisplay<'a> {
    matrix: &'a PolyMatrix,
    vars: &'a Variables,
}

impl fmt::Display for MatrixDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.matrix.size;
        let cells: Vec<String> = self
            .matrix
            .entries
            .iter()
            .map(|e| e.to_text(self.vars))
            .collect();
        let widths: Vec<usize> = (0..n)
            .map(|j| (0..n).map(|i| cells[i * n + j].len()).max().unwrap_or(0))
            .collect();
        for i in 0..n {
            f.write_str("[ ")?;
            for j in 0..n {
                if j > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:<w$}", cells[i * n + j], w = widths[j])?;
            }
            f.write_str(" ]")?;
            if i + 1 < n {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Witness returned when two quadrant blocks fail to commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonCommutingBlocks {
    /// 1-based block indices `(i, j)` with `i < j`.
    pub pair: (usize, usize),
    /// `b_i * b_j - b_j * b_i`.
    pub difference: PolyMatrix,
}

impl fmt::Display for NonCommutingBlocks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "blocks {} and {} do not commute",
            self.pair.0, self.pair.1
        )
    }
}

/// A `2n x 2n` matrix viewed as `[[b1, b2], [b3, b4]]` with `n x n` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockQuad {
    half: usize,
    blocks: [PolyMatrix; 4],
}

impl BlockQuad {
    pub fn new(
        b1: PolyMatrix,
        b2: PolyMatrix,
        b3: PolyMatrix,
        b4: PolyMatrix,
    ) -> Result<Self, MatrixError> {
        for b in [&b2, &b3, &b4] {
            b1.check_compatible(b)?;
        }
        Ok(BlockQuad {
            half: b1.size,
            blocks: [b1, b2, b3, b4],
        })
    }

    pub fn half(&self) -> usize {
        self.half
    }

    pub fn nvars(&self) -> usize {
        self.blocks[0].nvars
    }

    /// Block by 1-based index, matching the `[[1, 2], [3, 4]]` layout.
    pub fn block(&self, index: usize) -> &PolyMatrix {
        &self.blocks[index - 1]
    }

    pub fn blocks(&self) -> &[PolyMatrix; 4] {
        &self.blocks
    }

    pub fn assemble(&self) -> PolyMatrix {
        let h = self.half;
        PolyMatrix::from_fn(2 * h, self.nvars(), |i, j| {
            let b = &self.blocks[(i / h) * 2 + j / h];
            b.get(i % h, j % h).clone()
        })
    }

    /// Checks all six unordered pairs; reports the first failing pair.
    pub fn blocks_commute(&self) -> Result<(), NonCommutingBlocks> {
        for i in 0..4 {
            for j in (i + 1)..4 {
                let (a, b) = (&self.blocks[i], &self.blocks[j]);
                let ab = a.mat_mul(b).expect("blocks share a shape");
                let ba = b.mat_mul(a).expect("blocks share a shape");
                if ab != ba {
                    return Err(NonCommutingBlocks {
                        pair: (i + 1, j + 1),
                        difference: ab.checked_sub(&ba).expect("blocks share a shape"),
                    });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Variables {
        Variables::new(["z", "y"]).unwrap()
    }

    fn m(rows: &[&[&str]]) -> PolyMatrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        PolyMatrix::parse(&rows, &vars()).unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        Polynomial::parse(s, &vars()).unwrap()
    }

    #[test]
    fn intro_pair_multiplies_to_scalar() {
        let p = m(&[&["z", "-y"], &["y", "z"]]);
        let q = m(&[&["z", "y"], &["-y", "z"]]);
        let prod = p.mat_mul(&q).unwrap();
        assert_eq!(prod, PolyMatrix::scalar(2, &poly("z^2 + y^2")));
        assert_eq!(prod.is_scalar_identity(), Some(poly("z^2 + y^2")));
    }

    #[test]
    fn identity_is_neutral() {
        let a = m(&[&["z^2 - 1", "3*y"], &["0", "z*y"]]);
        let id = PolyMatrix::identity(2, 2);
        assert_eq!(id.mat_mul(&a).unwrap(), a);
        assert_eq!(a.mat_mul(&id).unwrap(), a);
        assert_eq!(id.transpose(), id);
        assert_eq!(
            PolyMatrix::identity(3, 2).is_scalar_identity(),
            Some(Polynomial::one(2))
        );
    }

    #[test]
    fn transpose_of_intro_factor() {
        let p = m(&[&["z", "-y"], &["y", "z"]]);
        assert_eq!(p.transpose(), m(&[&["z", "y"], &["-y", "z"]]));
    }

    #[test]
    fn unequal_diagonal_is_not_scalar() {
        let a = m(&[&["z", "0"], &["0", "y"]]);
        assert_eq!(a.is_scalar_identity(), None);
        assert_eq!(a.scalar_mismatch(), Ok((1, 1)));
        let b = m(&[&["z", "1"], &["0", "z"]]);
        assert_eq!(b.scalar_mismatch(), Ok((0, 1)));
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            m(&[&["z", "-y"], &["y", "z"]]).det().unwrap(),
            poly("z^2 + y^2")
        );
        for n in 1..=5 {
            assert!(PolyMatrix::identity(n, 2).det().unwrap().is_one());
        }
        let a = m(&[&["1", "2", "3"], &["4", "5", "6"], &["7", "8", "10"]]);
        assert_eq!(a.det().unwrap(), poly("-3"));
        let singular = m(&[&["z", "y"], &["2*z", "2*y"]]);
        assert!(singular.det().unwrap().is_zero());
    }

    #[test]
    fn det_respects_cap() {
        let big = PolyMatrix::identity(13, 1);
        assert_eq!(
            big.det(),
            Err(MatrixError::DetCapExceeded { size: 13, cap: 12 })
        );
        assert!(big.det_with_cap(13).unwrap().is_one());
    }

    #[test]
    fn partition_and_assemble() {
        let a = m(&[&["z", "-y"], &["y", "z"]]);
        let q = a.partition().unwrap();
        assert_eq!(q.half(), 1);
        assert_eq!(q.block(2).get(0, 0), &poly("-y"));
        assert_eq!(q.block(3).get(0, 0), &poly("y"));
        assert_eq!(q.assemble(), a);
        let odd = PolyMatrix::identity(3, 2);
        assert_eq!(odd.partition(), Err(MatrixError::OddSize(3)));
    }

    #[test]
    fn non_commuting_blocks_witness() {
        let q = BlockQuad::new(
            m(&[&["z", "0"], &["0", "0"]]),
            m(&[&["0", "1"], &["0", "0"]]),
            PolyMatrix::identity(2, 2),
            PolyMatrix::identity(2, 2),
        )
        .unwrap();
        let w = q.blocks_commute().unwrap_err();
        assert_eq!(w.pair, (1, 2));
        // b1*b2 = [[0, z], [0, 0]], b2*b1 = 0
        assert_eq!(w.difference, m(&[&["0", "z"], &["0", "0"]]));
    }

    #[test]
    fn identical_blocks_commute() {
        let b = m(&[&["z", "y"], &["1", "z*y"]]);
        let q = BlockQuad::new(b.clone(), b.clone(), b.clone(), b).unwrap();
        assert!(q.blocks_commute().is_ok());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(PolyMatrix::from_rows(vec![]), Err(MatrixError::Empty));
        let ragged = vec![vec![poly("z"), poly("y")], vec![poly("z")]];
        assert!(matches!(
            PolyMatrix::from_rows(ragged),
            Err(MatrixError::Ragged { row: 1, .. })
        ));
        let mixed = vec![
            vec![poly("z"), Polynomial::one(3)],
            vec![poly("z"), poly("y")],
        ];
        assert!(matches!(
            PolyMatrix::from_rows(mixed),
            Err(MatrixError::VariableCountMismatch { .. })
        ));
        let a = PolyMatrix::identity(2, 2);
        let b = PolyMatrix::identity(3, 2);
        assert_eq!(
            a.mat_mul(&b),
            Err(MatrixError::SizeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn display_aligns_columns() {
        let a = m(&[&["z", "-y"], &["y^2", "z"]]);
        assert_eq!(a.display(&vars()).to_string(), "[ z    -y ]\n[ y^2  z  ]");
    }
}
