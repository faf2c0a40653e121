mod common;

use common::*;
use mfkit::{
    block_family, block_hypothesis, det_certificate, rotations, standard_method,
    transpose_reversal, BlockQuad, CertificateOptions, Factorization, PolyMatrix, Polynomial,
};
use proptest::prelude::*;

fn scalar_pair(f: &Polynomial) -> Factorization {
    Factorization::verified(
        f.clone(),
        vec![PolyMatrix::scalar(1, f), PolyMatrix::identity(1, f.nvars())],
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn standard_method_obeys_size_law(terms in term_list(4)) {
        let fac = standard_method(&terms).unwrap();
        prop_assert!(fac.is_verified());
        prop_assert_eq!(fac.size(), 1 << (terms.len() - 1));
        prop_assert_eq!(fac.target(), &terms.target());
    }

    #[test]
    fn rotations_and_reversal_stay_factorizations(terms in term_list(4)) {
        let fac = standard_method(&terms).unwrap();
        let rotated = rotations(&fac).unwrap();
        prop_assert_eq!(rotated.len(), fac.len());
        prop_assert_eq!(&rotated[0], &fac);
        for mut r in rotated {
            prop_assert_eq!(r.verify().unwrap(), fac.target());
        }
        let mut rev = transpose_reversal(&fac).unwrap();
        prop_assert_eq!(rev.verify().unwrap(), fac.target());
        prop_assert_eq!(transpose_reversal(&rev).unwrap(), fac);
    }

    #[test]
    fn determinants_multiply_to_a_power_of_the_target(terms in term_list(3)) {
        let fac = standard_method(&terms).unwrap();
        let report = det_certificate(&fac, CertificateOptions::default()).unwrap();
        let m = fac.size() as u32;
        let fm = fac.target().pow(m);
        let mut product = Polynomial::one(fac.nvars());
        for c in &report.factors {
            prop_assert!(!c.det.is_zero());
            prop_assert_eq!(&(&c.det * &c.quotient), &fm);
            product = &product * &c.det;
        }
        prop_assert_eq!(product, fm);
    }

    #[test]
    fn one_by_one_pairs_always_certify(f in nonzero_poly()) {
        let report = det_certificate(&scalar_pair(&f), CertificateOptions::default()).unwrap();
        prop_assert_eq!(&report.factors[0].det, &f);
        prop_assert!(report.factors[1].det.is_one());
    }

    // 1x1 blocks always commute. The right quad is built from the left one so
    // that one of the two hypothesis variants holds by construction.
    #[test]
    fn block_family_products_are_block_diagonal(
        cells in prop::collection::vec(small_poly(), 4),
        variant_a in any::<bool>(),
    ) {
        let n = NVARS;
        let [a, b, c, d] = [0, 1, 2, 3].map(|i| PolyMatrix::scalar(1, &cells[i]));
        let left = BlockQuad::new(a.clone(), b.clone(), c.clone(), d.clone()).unwrap();
        let right = if variant_a {
            BlockQuad::new(d.neg(), b.clone(), c.clone(), a.neg()).unwrap()
        } else {
            BlockQuad::new(d.clone(), b.neg(), c.neg(), a.clone()).unwrap()
        };
        let target = left.assemble().mat_mul(&right.assemble()).unwrap().is_scalar_identity();
        prop_assume!(target.as_ref().is_some_and(|t| !t.is_zero()));
        prop_assert!(block_hypothesis(&left, &right).is_ok());
        let family = block_family(&left, &right).unwrap();
        prop_assert_eq!(family.items.len(), 14);
        let [a1, a2, _, _] = left.blocks();
        let [b1, _, b3, _] = right.blocks();
        let d = a1.mat_mul(b1).unwrap().checked_add(&a2.mat_mul(b3).unwrap()).unwrap();
        let diag = BlockQuad::new(d.clone(), PolyMatrix::zero(1, n), PolyMatrix::zero(1, n), d).unwrap().assemble();
        for item in &family.items {
            prop_assert!(item.is_verified());
            prop_assert_eq!(item.product(), diag.clone());
        }
    }
}
