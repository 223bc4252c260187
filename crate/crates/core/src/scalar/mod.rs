//! Exact scalars: rationals and cyclotomic fields ℚ(ζ_N).

mod cyclotomic;
mod field;
mod poly;

use thiserror::Error;

pub use cyclotomic::CycScalar;
pub use field::{ComplexApprox, Cyclotomic, Field};
pub use poly::{cyclotomic_polynomial, totient};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
}

/// ζ_N^k in ℚ(ζ_N).
pub fn root_of_unity(order: u32, k: i64) -> CycScalar {
    CycScalar::root_of_unity(order, k)
}

#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    fn scalar(order: u32) -> impl Strategy<Value = CycScalar> {
        let d = totient(order);
        prop::collection::vec((-6i64..=6, 1i64..=4), d).prop_map(move |cs| {
            let poly: Vec<Rational> = cs
                .into_iter()
                .map(|(n, m)| Rational::new(n.into(), m.into()))
                .collect();
            CycScalar::from_poly(order, &poly)
        })
    }

    fn triple() -> impl Strategy<Value = (CycScalar, CycScalar, CycScalar)> {
        prop::sample::select(vec![1u32, 3, 4, 5, 7, 8, 9, 12])
            .prop_flat_map(|n| (scalar(n), scalar(n), scalar(n)))
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in triple()) {
            let ab = a.checked_mul(&b).unwrap();
            prop_assert_eq!(ab.checked_mul(&c).unwrap(), a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap());
            prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
            let lhs = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
            let rhs = ab.checked_add(&a.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            if !a.is_zero() {
                prop_assert!(a.checked_mul(&a.inverse().unwrap()).unwrap().is_one());
            }
        }

        #[test]
        fn reduction_is_idempotent(a in prop::sample::select(vec![5u32, 8, 9]).prop_flat_map(scalar)) {
            prop_assert_eq!(CycScalar::from_poly(a.order(), a.coeffs()), a);
        }
    }
}
