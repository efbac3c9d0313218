//! Randomized laws for the sparse Laurent ring: commutative-ring axioms,
//! exact division as a true inverse of multiplication, text and serde
//! round-trips, evaluation as a ring homomorphism, and consistency of the
//! random-point pre-check with full comparison.

use num_bigint::BigInt;
use proptest::prelude::*;
use qid_core::identities::rational_precheck;
use qid_core::{ExponentVector, LaurentPolynomial, RationalPoint, VAR_COUNT};

fn poly() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((prop::array::uniform5(-6i64..=6), -9i64..=9), 0..=6).prop_map(|terms| {
        LaurentPolynomial::from_terms(
            terms
                .into_iter()
                .map(|(exps, c)| (ExponentVector::from_exps(exps), BigInt::from(c))),
        )
    })
}

/// A rational point with no zero coordinate, so that negative exponents are
/// always evaluable.
fn point() -> impl Strategy<Value = RationalPoint> {
    prop::array::uniform5((1i64..=9, 1i64..=7, prop::bool::ANY)).prop_map(|coords| {
        let mut values = [(1i64, 1i64); VAR_COUNT];
        for (slot, (num, den, negate)) in values.iter_mut().zip(coords) {
            *slot = (if negate { -num } else { num }, den);
        }
        RationalPoint::from_i64(values)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.add(&a.neg()).is_zero());
        prop_assert_eq!(a.add(&LaurentPolynomial::zero()), a);
    }

    #[test]
    fn multiplication_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&LaurentPolynomial::one()), a);
    }

    #[test]
    fn exact_div_inverts_mul(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn sub_is_add_neg(a in poly(), b in poly()) {
        prop_assert_eq!(a.sub(&b), a.add(&b.neg()));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn text_and_serde_round_trip(a in poly()) {
        let parsed: LaurentPolynomial = a.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &a);
        let json = serde_json::to_string(&a).unwrap();
        let back: LaurentPolynomial = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(), b in poly(), pt in point()) {
        let eval = |p: &LaurentPolynomial| p.eval_rational(&pt).unwrap();
        prop_assert_eq!(eval(&a.add(&b)), eval(&a) + eval(&b));
        prop_assert_eq!(eval(&a.mul(&b)), eval(&a) * eval(&b));
    }

    #[test]
    fn precheck_agrees_with_comparison(a in poly(), b in poly(), seed in any::<u64>()) {
        prop_assert!(rational_precheck(&a, &a, seed, 3).unwrap());
        if !rational_precheck(&a, &b, seed, 3).unwrap() {
            prop_assert_ne!(a, b);
        }
    }
}
