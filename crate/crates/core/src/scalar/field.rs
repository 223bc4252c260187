use std::f64::consts::PI;
use std::fmt::Debug;
use std::sync::Arc;

use num_complex::Complex64;

use super::cyclotomic::{tables, CycScalar, CyclotomicTables};
use super::ScalarError;

/// A coefficient field with a distinguished primitive N-th root of unity.
///
/// Every tensor and structure-constant table in the crate is generic over
/// this trait. The exact backend ([`Cyclotomic`]) is the source of truth;
/// [`ComplexApprox`] re-runs the same computations in floating point.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + Send + Sync;

    fn root_order(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// ζ_N^k for the field's root order N.
    fn root_of_unity(&self, k: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, &self.one()))
    }
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ScalarError>;

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }

    /// Deterministic human-readable rendering, used in reports.
    fn render(&self, a: &Self::Elem) -> String;
}

/// Exact arithmetic in ℚ(ζ_N).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    tables: Arc<CyclotomicTables>,
}

impl Cyclotomic {
    pub fn new(order: u32) -> Self {
        Cyclotomic {
            tables: tables(order),
        }
    }

    fn check(&self, a: &CycScalar) {
        assert_eq!(
            a.order(),
            self.tables.order,
            "scalar of order {} used in field of order {}",
            a.order(),
            self.tables.order
        );
    }
}

impl Field for Cyclotomic {
    type Elem = CycScalar;

    fn root_order(&self) -> u32 {
        self.tables.order
    }
    fn zero(&self) -> CycScalar {
        CycScalar::zero(self.tables.order)
    }
    fn one(&self) -> CycScalar {
        CycScalar::one(self.tables.order)
    }
    fn from_int(&self, n: i64) -> CycScalar {
        CycScalar::from_int(self.tables.order, n)
    }
    fn root_of_unity(&self, k: i64) -> CycScalar {
        CycScalar::root_of_unity(self.tables.order, k)
    }
    fn is_zero(&self, a: &CycScalar) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &CycScalar) -> bool {
        a.is_one()
    }
    fn eq(&self, a: &CycScalar, b: &CycScalar) -> bool {
        a == b
    }
    fn add(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        a.checked_add(b).expect("order mismatch")
    }
    fn sub(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        a.checked_sub(b).expect("order mismatch")
    }
    fn mul(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        self.check(a);
        self.check(b);
        a.mul_with(&self.tables, b)
    }
    fn neg(&self, a: &CycScalar) -> CycScalar {
        a.neg()
    }
    fn inv(&self, a: &CycScalar) -> Result<CycScalar, ScalarError> {
        self.check(a);
        a.inverse()
    }
    fn render(&self, a: &CycScalar) -> String {
        a.to_string()
    }
}

/// Floating-point complex arithmetic with an absolute zero tolerance.
///
/// Only ever used to cross-check results of the exact backend.
#[derive(Clone, Debug)]
pub struct ComplexApprox {
    order: u32,
    tolerance: f64,
}

impl ComplexApprox {
    pub const DEFAULT_TOLERANCE: f64 = 1e-9;

    pub fn new(order: u32) -> Self {
        Self::with_tolerance(order, Self::DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(order: u32, tolerance: f64) -> Self {
        assert!(order >= 1);
        ComplexApprox { order, tolerance }
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }
}

impl Field for ComplexApprox {
    type Elem = Complex64;

    fn root_order(&self) -> u32 {
        self.order
    }
    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }
    fn one(&self) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }
    fn from_int(&self, n: i64) -> Complex64 {
        Complex64::new(n as f64, 0.0)
    }
    fn root_of_unity(&self, k: i64) -> Complex64 {
        let j = k.rem_euclid(self.order as i64) as f64;
        Complex64::from_polar(1.0, 2.0 * PI * j / self.order as f64)
    }
    fn is_zero(&self, a: &Complex64) -> bool {
        a.norm() < self.tolerance
    }
    fn add(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a + b
    }
    fn sub(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a - b
    }
    fn mul(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a * b
    }
    fn neg(&self, a: &Complex64) -> Complex64 {
        -a
    }
    fn inv(&self, a: &Complex64) -> Result<Complex64, ScalarError> {
        if self.is_zero(a) {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(a.inv())
        }
    }
    fn add_assign(&self, acc: &mut Complex64, b: &Complex64) {
        *acc += b;
    }
    fn render(&self, a: &Complex64) -> String {
        format!("{:.9}{:+.9}i", a.re, a.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_backend_agrees_with_exact_roots() {
        let exact = Cyclotomic::new(7);
        let approx = ComplexApprox::new(7);
        for k in 0..7 {
            let e = exact.root_of_unity(k).to_complex();
            assert!((e - approx.root_of_unity(k)).norm() < 1e-12);
        }
        let a = exact.add(&exact.root_of_unity(2), &exact.from_int(3));
        let b = exact.inv(&a).unwrap();
        let fa = approx.add(&approx.root_of_unity(2), &approx.from_int(3));
        assert!((b.to_complex() - approx.inv(&fa).unwrap()).norm() < 1e-12);
    }

    #[test]
    #[should_panic(expected = "order")]
    fn mixing_orders_panics_in_field_ops() {
        let f = Cyclotomic::new(3);
        let _ = f.mul(&CycScalar::root_of_unity(4, 1), &f.one());
    }
}
