#![allow(dead_code)]

use mfkit::{Monomial, PolyMatrix, Polynomial, TermList};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

pub const NVARS: usize = 3;

pub fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn monomial(max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, NVARS).prop_map(Monomial::from_exponents)
}

pub fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(3), rational()), 0..5)
        .prop_map(|terms| Polynomial::from_terms(NVARS, terms))
}

pub fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn point() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec(rational(), NVARS)
}

/// Small entries keep products cheap: at most two terms of degree <= 2.
pub fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(1), -3i64..=3), 0..3).prop_map(|terms| {
        Polynomial::from_terms(
            NVARS,
            terms
                .into_iter()
                .map(|(m, c)| (m, BigRational::from_integer(c.into()))),
        )
    })
}

pub fn matrix(size: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(small_poly(), size * size)
        .prop_map(move |cells| PolyMatrix::from_fn(size, NVARS, |i, j| cells[i * size + j].clone()))
}

pub fn monomial_term() -> impl Strategy<Value = Polynomial> {
    (monomial(2), prop_oneof![Just(1i64), Just(-1), Just(2)])
        .prop_map(|(m, c)| Polynomial::term(m, BigRational::from_integer(c.into())))
}

/// Random term lists of monomial pairs, `1 <= k <= max_k`.
pub fn term_list(max_k: usize) -> impl Strategy<Value = TermList> {
    prop::collection::vec((monomial_term(), monomial_term()), 1..=max_k)
        .prop_map(|pairs| TermList::new(pairs).expect("non-empty"))
}
