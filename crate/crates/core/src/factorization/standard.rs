//! The standard method: turning `f = g_1 h_1 + ... + g_k h_k` into a pair of
//! `2^(k-1)`-sized matrix factors, plus the two block combinators it rests on.

use crate::poly::{Polynomial, Variables};
use crate::polymat::{BlockQuad, MatrixError, PolyMatrix};
use crate::{Error, Result};

use super::Factorization;

/// Ordered `(g_i, h_i)` pairs describing `f = sum g_i * h_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermList {
    pairs: Vec<(Polynomial, Polynomial)>,
}

impl TermList {
    pub fn new(pairs: Vec<(Polynomial, Polynomial)>) -> Result<Self> {
        let nvars = pairs.first().ok_or(Error::EmptyTermList)?.0.nvars();
        for (g, h) in &pairs {
            for p in [g, h] {
                if p.nvars() != nvars {
                    return Err(MatrixError::VariableCountMismatch {
                        left: nvars,
                        right: p.nvars(),
                    }
                    .into());
                }
            }
        }
        Ok(TermList { pairs })
    }

    /// Parses `g1:h1,g2:h2,...`.
    pub fn parse(text: &str, vars: &Variables) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (g, h) = item
                .split_once(':')
                .ok_or_else(|| Error::Schema(format!("term `{item}` is not of the form g:h")))?;
            pairs.push((Polynomial::parse(g, vars)?, Polynomial::parse(h, vars)?));
        }
        Self::new(pairs)
    }

    pub fn pairs(&self) -> &[(Polynomial, Polynomial)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.pairs[0].0.nvars()
    }

    /// `sum g_i * h_i`.
    pub fn target(&self) -> Polynomial {
        let mut f = Polynomial::zero(self.nvars());
        for (g, h) in &self.pairs {
            f.add_product(g, h);
        }
        f
    }
}

fn quad(b1: PolyMatrix, b2: PolyMatrix, b3: PolyMatrix, b4: PolyMatrix) -> PolyMatrix {
    BlockQuad::new(b1, b2, b3, b4)
        .expect("blocks share a shape")
        .assemble()
}

/// Every stage of the standard method: stage `i` factors `g_1 h_1 + ... + g_i h_i`.
pub fn standard_method_stages(terms: &TermList) -> Result<Vec<Factorization>> {
    let mut stages = Vec::with_capacity(terms.len());
    let (g1, h1) = &terms.pairs[0];
    let mut current = Factorization::verified(
        g1 * h1,
        vec![PolyMatrix::scalar(1, g1), PolyMatrix::scalar(1, h1)],
    )?;
    for (g, h) in &terms.pairs[1..] {
        let next = extend(&current, g, h)?;
        stages.push(current);
        current = next;
    }
    stages.push(current);
    Ok(stages)
}

/// The standard method; factors have size `2^(k-1)` for `k` pairs.
pub fn standard_method(terms: &TermList) -> Result<Factorization> {
    Ok(standard_method_stages(terms)?
        .pop()
        .expect("at least one stage"))
}

/// From `(C, D)` factoring `f`, builds
/// `([[C, -gI], [hI, D]], [[D, gI], [-hI, C]])` factoring `f + g*h`.
pub fn extend(fac: &Factorization, g: &Polynomial, h: &Polynomial) -> Result<Factorization> {
    fac.ensure_verified()?;
    let (c, d) = fac.expect_pair()?;
    for p in [g, h] {
        if p.nvars() != fac.nvars() {
            return Err(MatrixError::VariableCountMismatch {
                left: fac.nvars(),
                right: p.nvars(),
            }
            .into());
        }
    }
    let n = c.size();
    let gi = PolyMatrix::scalar(n, g);
    let hi = PolyMatrix::scalar(n, h);
    let left = quad(c.clone(), gi.neg(), hi.clone(), d.clone());
    let right = quad(d.clone(), gi, hi.neg(), c.clone());
    let mut target = fac.target().clone();
    target.add_product(g, h);
    Factorization::verified(target, vec![left, right])
}

/// From `(C1, D1)` factoring `f1` and `(C2, D2)` factoring `f2`, builds
/// `([[C1, -D2], [C2, D1]], [[D1, D2], [-C2, C1]])` factoring `f1 + f2`.
///
/// Requires `C1 D2 = D2 C1` and `C2 D1 = D1 C2`.
pub fn combine(first: &Factorization, second: &Factorization) -> Result<Factorization> {
    first.ensure_verified()?;
    second.ensure_verified()?;
    let (c1, d1) = first.expect_pair()?;
    let (c2, d2) = second.expect_pair()?;
    if c1.size() != c2.size() {
        return Err(MatrixError::SizeMismatch {
            left: c1.size(),
            right: c2.size(),
        }
        .into());
    }
    if c1.mat_mul(d2)? != d2.mat_mul(c1)? {
        return Err(Error::CrossPairs("C1*D2 != D2*C1"));
    }
    if c2.mat_mul(d1)? != d1.mat_mul(c2)? {
        return Err(Error::CrossPairs("C2*D1 != D1*C2"));
    }
    let left = quad(c1.clone(), d2.neg(), c2.clone(), d1.clone());
    let right = quad(d1.clone(), d2.clone(), c2.neg(), c1.clone());
    let target = first.target().checked_add(second.target())?;
    Factorization::verified(target, vec![left, right])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn xyz() -> Variables {
        Variables::new(["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, &xyz()).unwrap()
    }

    fn m(rows: &[&[&str]]) -> PolyMatrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        PolyMatrix::parse(&rows, &xyz()).unwrap()
    }

    fn single(f: &str, c: &str, d: &str) -> Factorization {
        Factorization::verified(p(f), vec![m(&[&[c]]), m(&[&[d]])]).unwrap()
    }

    #[test]
    fn two_term_stage_matches_printed_pair() {
        let terms = TermList::parse("x^2:y, x^2:z", &xyz()).unwrap();
        let fac = standard_method(&terms).unwrap();
        assert_eq!(fac.factors()[0], m(&[&["x^2", "-x^2"], &["z", "y"]]));
        assert_eq!(fac.factors()[1], m(&[&["y", "x^2"], &["-z", "x^2"]]));
        assert_eq!(fac.target(), &p("x^2*y + x^2*z"));
    }

    #[test]
    fn three_term_output_is_n() {
        let terms = TermList::parse("x^2:y,x^2:z,y:z^2", &xyz()).unwrap();
        let fac = standard_method(&terms).unwrap();
        assert_eq!(fac, catalog::example_n().factorization);
        let stages = standard_method_stages(&terms).unwrap();
        assert_eq!(stages.len(), 3);
        assert_eq!(stages[1], catalog::example_two_term().factorization);
    }

    #[test]
    fn single_pair_is_one_by_one() {
        let terms = TermList::parse("z:y", &xyz()).unwrap();
        let fac = standard_method(&terms).unwrap();
        assert_eq!(fac.factors(), &[m(&[&["z"]]), m(&[&["y"]])]);
        assert!(fac.is_verified());
    }

    #[test]
    fn term_list_errors() {
        assert_eq!(TermList::new(vec![]), Err(Error::EmptyTermList));
        assert!(matches!(
            TermList::parse("x^2", &xyz()),
            Err(Error::Schema(_))
        ));
        let mixed = vec![(p("x"), p("y")), (Polynomial::one(2), Polynomial::one(2))];
        assert!(matches!(
            TermList::new(mixed),
            Err(Error::Matrix(MatrixError::VariableCountMismatch { .. }))
        ));
    }

    #[test]
    fn extend_two_term_pair_gives_n() {
        let two = catalog::example_two_term().factorization;
        let n = extend(&two, &p("y"), &p("z^2")).unwrap();
        assert_eq!(n, catalog::example_n().factorization);
    }

    #[test]
    fn extend_by_zero_doubles_size() {
        let two = catalog::example_two_term().factorization;
        let z = Polynomial::zero(3);
        let doubled = extend(&two, &z, &z).unwrap();
        assert_eq!(doubled.size(), 4);
        assert_eq!(doubled.target(), two.target());
    }

    #[test]
    fn extend_one_by_one() {
        let base = single("z*y", "z", "y");
        let out = extend(&base, &p("x"), &p("x")).unwrap();
        assert_eq!(out.product(), PolyMatrix::scalar(2, &p("z*y + x^2")));
    }

    #[test]
    fn extend_rejects_broken_input() {
        let broken = Factorization::new(p("x"), vec![m(&[&["y"]]), m(&[&["z"]])]).unwrap();
        assert!(matches!(
            extend(&broken, &p("x"), &p("x")),
            Err(Error::Verify(_))
        ));
    }

    #[test]
    fn combine_squares_gives_intro_shape() {
        let a = single("x^2", "x", "x");
        let b = single("y^2", "y", "y");
        let out = combine(&a, &b).unwrap();
        assert_eq!(out.factors()[0], m(&[&["x", "-y"], &["y", "x"]]));
        assert_eq!(out.factors()[1], m(&[&["x", "y"], &["-y", "x"]]));
        assert_eq!(out.target(), &p("x^2 + y^2"));
    }

    #[test]
    fn combine_with_zero_summand() {
        let a = single("x*y", "x", "y");
        let zero = single("0", "0", "1");
        let out = combine(&a, &zero).unwrap();
        assert_eq!(out.size(), 2);
        assert_eq!(out.target(), &p("x*y"));
    }

    #[test]
    fn combine_rejects_non_commuting_cross_pairs() {
        // upper-triangular C1 against lower-triangular D2
        let c1 = m(&[&["x", "1"], &["0", "x"]]);
        let d1 = m(&[&["x", "-1"], &["0", "x"]]);
        let first = Factorization::verified(p("x^2"), vec![c1, d1]).unwrap();
        let c2 = m(&[&["y", "0"], &["1", "y"]]);
        let d2 = m(&[&["y", "0"], &["-1", "y"]]);
        let second = Factorization::verified(p("y^2"), vec![c2, d2]).unwrap();
        assert_eq!(
            combine(&first, &second),
            Err(Error::CrossPairs("C1*D2 != D2*C1"))
        );
    }

    #[test]
    fn combine_rejects_size_mismatch() {
        let a = single("x^2", "x", "x");
        let b = catalog::example_two_term().factorization;
        assert!(matches!(
            combine(&a, &b),
            Err(Error::Matrix(MatrixError::SizeMismatch { .. }))
        ));
    }
}
