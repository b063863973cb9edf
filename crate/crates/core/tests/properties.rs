use glkm::braid::{
    build_deformation, build_permutation, build_rcheck, check_solution, check_unitarity, check_ybe_parametric,
};
use glkm::linalg::{kernel_basis, rank_of_vectors, series_inverse, series_mul, MatSeries, SparseMat};
use glkm::yangian::{coassociativity, Convention};
use glkm::{BraidParams, RepContext, Scalar};
use proptest::prelude::*;

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(a, b, c)| Scalar::complex(Scalar::ratio(a, b), Scalar::from(c)))
}

/// Mostly-zero matrices with Gaussian-rational entries.
fn arb_mat(rows: usize, cols: usize) -> impl Strategy<Value = SparseMat> {
    prop::collection::vec(prop_oneof![3 => Just(Scalar::zero()), 2 => arb_scalar()], rows * cols).prop_map(move |v| {
        let rows_v: Vec<Vec<Scalar>> = v.chunks(cols).map(|c| c.to_vec()).collect();
        SparseMat::from_scalar_rows(&rows_v)
    })
}

fn arb_rational() -> impl Strategy<Value = Scalar> {
    (-30i64..=30, 1i64..=7).prop_map(|(a, b)| Scalar::ratio(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mixed_product_law(a in arb_mat(2, 3), b in arb_mat(2, 2), c in arb_mat(3, 2), d in arb_mat(2, 3)) {
        prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
    }

    #[test]
    fn associativity(a in arb_mat(3, 4), b in arb_mat(4, 2), c in arb_mat(2, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn kernel_vectors_annihilate(a in arb_mat(3, 5)) {
        let k = kernel_basis(&a);
        for v in &k {
            prop_assert!(a.apply(v).is_zero());
        }
        prop_assert_eq!(rank_of_vectors(&k), k.len());
        prop_assert_eq!(k.len() + glkm::linalg::rank(&a), 5);
    }

    #[test]
    fn canonical_form_is_idempotent(a in arb_mat(4, 4)) {
        let once = a.canonical();
        prop_assert_eq!(once.canonical(), once.clone());
        prop_assert_eq!(once, a);
    }

    #[test]
    fn series_inverse_two_sided(s1 in arb_mat(3, 3), s2 in arb_mat(3, 3), diag in prop::collection::vec(1i64..=5, 3)) {
        let lead = SparseMat::diagonal(&diag.iter().map(|&d| Scalar::from(d)).collect::<Vec<_>>());
        let s = MatSeries::new(4, vec![lead, s1, s2]).unwrap();
        let t = series_inverse(&s).unwrap();
        prop_assert!(series_mul(&s, &t).unwrap().is_identity());
        prop_assert!(series_mul(&t, &s).unwrap().is_identity());
    }

    #[test]
    fn braid_iff_alpha_zero_or_one(n in 2usize..=4, kk in 0usize..3, alpha in -3i64..=4) {
        let k = 1 + kk % (n - 1);
        let passed = check_solution(&BraidParams::new(n, k, alpha).unwrap()).passed;
        prop_assert_eq!(passed, alpha == 0 || alpha == 1);
    }

    #[test]
    fn permutation_commutes_with_deformation(n in 1usize..=4, k in 0usize..=4, alpha in -2i64..=3) {
        prop_assume!(k <= n);
        let p = BraidParams::new(n, k, alpha).unwrap();
        let (perm, d) = (build_permutation(n), build_deformation(&p));
        prop_assert_eq!(&perm * &d, &d * &perm);
        prop_assert_eq!(build_rcheck(&p), &d * &perm);
    }

    #[test]
    fn unitarity_at_random_points(n in 2usize..=3, kk in 0usize..2, alpha in 0i64..=1, l in arb_rational()) {
        let k = 1 + kk % (n - 1);
        prop_assert!(check_unitarity(&BraidParams::new(n, k, alpha).unwrap(), &l).passed);
    }

    #[test]
    fn ybe_at_random_points(n in 2usize..=3, kk in 0usize..2, alpha in 0i64..=1, l1 in arb_rational(), l2 in arb_rational()) {
        let k = 1 + kk % (n - 1);
        prop_assert!(check_ybe_parametric(&BraidParams::new(n, k, alpha).unwrap(), &l1, &l2).passed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn coproduct_is_coassociative(n in 2usize..=3, k in 0usize..=3, sites in 1usize..=3, swapped: bool) {
        prop_assume!(k <= n);
        let conv = if swapped { Convention::Swapped } else { Convention::Standard };
        let r = coassociativity(&RepContext::new(n, k, sites).unwrap(), conv).unwrap();
        prop_assert!(r.passed, "{:?}", r.witnesses);
    }
}
