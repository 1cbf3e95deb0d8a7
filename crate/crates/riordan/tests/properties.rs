//! Cross-module properties on randomized inputs.

use proptest::prelude::*;

use riordan::btransform::{
    transform_binomial, transform_catalan, transform_gathered, transform_matrix,
};
use riordan::factorization::{
    hankel_from_jfraction, hankel_transform, jfraction, tph_ldu, tph_matrix, verify_conjugation,
};
use riordan::orthopoly::Recurrence;
use riordan::rational::int;
use riordan::{Error, Seq, Series, TriMatrix};

fn int_seq(len: usize) -> impl Strategy<Value = Seq> {
    prop::collection::vec(-9i64..=9, len).prop_map(|v| Seq::from_ints(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transforms_agree(a in int_seq(14)) {
        let reference = transform_matrix(&a, 12).unwrap();
        prop_assert_eq!(transform_binomial(&a, 12).unwrap(), reference.clone());
        prop_assert_eq!(transform_gathered(&a, 12).unwrap(), reference.clone());
        prop_assert_eq!(transform_catalan(&a, 12).unwrap(), reference);
    }

    #[test]
    fn conjugation_always_holds(a in int_seq(12)) {
        prop_assert_eq!(verify_conjugation(&a, 6).unwrap(), None);
    }

    #[test]
    fn tph_factorization_reconstructs(a in int_seq(12)) {
        // the Hankel matrix of a random image may have singular minors; the
        // factorization is only claimed where it exists
        match tph_ldu(&a, 6) {
            Ok(fact) => {
                prop_assert!(fact.l.is_unit_diagonal());
                prop_assert_eq!(fact.reconstruct(), tph_matrix(&a, 6).unwrap());
            }
            Err(Error::SingularMinor { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error: {e}"))),
        }
    }

    #[test]
    fn jfraction_roundtrip(tail in prop::collection::vec(-9i64..=9, 12)) {
        let mut coeffs = vec![int(1)];
        coeffs.extend(tail.iter().map(|&c| int(c)));
        let s = Series::from_coeffs(coeffs);
        match jfraction(&s, 5) {
            Ok(j) => {
                // reconstruction matches to order 2*depth - 1
                prop_assert_eq!(j.reconstruct(13).truncated(9), s.truncated(9));
                // product formula matches the determinant route
                let n = 4;
                let h_fraction = hankel_from_jfraction(&j, n).unwrap();
                let h_minors = hankel_transform(&Seq::from_gf(&s.truncated(2 * n + 1)), n).unwrap();
                prop_assert_eq!(h_fraction, h_minors);
            }
            Err(Error::NotNormal { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error: {e}"))),
        }
    }

    #[test]
    fn moment_matrix_inverts_coeff_array(
        alphas in prop::collection::vec(-5i64..=5, 9),
        betas in prop::collection::vec(prop_oneof![-5i64..=-1, 1i64..=5], 8),
    ) {
        let r = Recurrence::monic(
            alphas.iter().map(|&a| int(a)).collect(),
            betas.iter().map(|&b| int(b)).collect(),
        ).unwrap();
        let n = 9;
        let arr = r.coeff_array(n).unwrap();
        let mom = r.moment_matrix(n).unwrap();
        prop_assert_eq!(arr.mul(&mom), TriMatrix::identity(n));
    }
}
