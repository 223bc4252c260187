//! Elements of the cyclotomic field ℚ(ζ_N), stored as residues modulo Φ_N.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{self, cyclotomic_polynomial, totient};
use super::{Rational, ScalarError};

/// Precomputed reduction data for one order N.
#[derive(Debug)]
pub(crate) struct CyclotomicTables {
    pub(crate) order: u32,
    pub(crate) degree: usize,
    pub(crate) modulus: Vec<Rational>,
    /// `powers[j]` is x^j reduced modulo Φ_N, for `0 <= j < N`.
    pub(crate) powers: Vec<Vec<Rational>>,
}

impl CyclotomicTables {
    fn build(order: u32) -> Self {
        let modulus = poly::to_rational(&cyclotomic_polynomial(order));
        let degree = totient(order);
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x: shift up and fold the overflow through Φ_N
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Rational::zero();
            if !top.is_zero() {
                for (c, m) in cur.iter_mut().zip(&modulus) {
                    *c -= &top * m;
                }
            }
        }
        CyclotomicTables {
            order,
            degree,
            modulus,
            powers,
        }
    }
}

pub(crate) fn tables(order: u32) -> Arc<CyclotomicTables> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicTables>>>> = OnceLock::new();
    assert!(order >= 1, "cyclotomic order must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("poisoned cyclotomic cache");
    guard
        .entry(order)
        .or_insert_with(|| Arc::new(CyclotomicTables::build(order)))
        .clone()
}

/// An element of ℚ(ζ_N).
///
/// `coeffs[k]` is the coefficient of ζ_N^k; the vector always has length
/// φ(N), so equal field elements have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycScalar {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn zero(order: u32) -> Self {
        CycScalar {
            order,
            coeffs: vec![Rational::zero(); totient(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = r;
        s
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(n.into()))
    }

    /// ζ_N^k, reduced modulo Φ_N.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let t = tables(order);
        let j = k.rem_euclid(order as i64) as usize;
        CycScalar {
            order,
            coeffs: t.powers[j].clone(),
        }
    }

    /// Builds an element from an arbitrary polynomial in ζ_N (low degree
    /// first), reducing it modulo Φ_N.
    pub fn from_poly(order: u32, poly: &[Rational]) -> Self {
        let t = tables(order);
        Self::reduce_with(&t, poly)
    }

    fn reduce_with(t: &CyclotomicTables, poly: &[Rational]) -> Self {
        let mut coeffs = vec![Rational::zero(); t.degree];
        for (j, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < t.degree {
                coeffs[j] += c;
            } else {
                for (dst, p) in coeffs.iter_mut().zip(&t.powers[j % t.order as usize]) {
                    if !p.is_zero() {
                        *dst += c * p;
                    }
                }
            }
        }
        CycScalar {
            order: t.order,
            coeffs,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<(), ScalarError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(ScalarError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycScalar {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycScalar {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        Ok(self.mul_with(&tables(self.order), other))
    }

    pub(crate) fn mul_with(&self, t: &CyclotomicTables, other: &Self) -> Self {
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        let d = t.degree;
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Self::reduce_with(t, &prod)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_one() {
            return self.clone();
        }
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.order, self.coeffs[0].recip()));
        }
        let t = tables(self.order);
        let mut a = self.coeffs.clone();
        poly::trim(&mut a);
        let (s, g) = poly::ext_gcd(&a, &t.modulus);
        debug_assert_eq!(g, vec![Rational::one()], "Φ_N is irreducible");
        Ok(Self::reduce_with(&t, &s))
    }

    /// Numerical value under ζ_N ↦ exp(2πi/N).
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let v = c.to_f64().unwrap_or(f64::NAN);
                Complex64::from_polar(v, 2.0 * PI * k as f64 / n)
            })
            .sum()
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => format!("ζ{}", self.order),
                _ => format!("ζ{}^{}", self.order, k),
            };
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono,
                (false, false) => format!("{mag}·{mono}"),
            };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else {
                write!(f, " {} {body}", if c.is_negative() { "-" } else { "+" })?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycScalar {
        CycScalar::root_of_unity(n, k)
    }

    #[test]
    fn roots_of_small_order() {
        assert_eq!(z(2, 1), CycScalar::from_int(2, -1));
        assert_eq!(z(4, 2), CycScalar::from_int(4, -1));
        assert_eq!(z(5, 0), CycScalar::one(5));
        // ζ_3 is a root of x^2 + x + 1
        let w = z(3, 1);
        let v = w
            .checked_mul(&w)
            .unwrap()
            .checked_add(&w)
            .unwrap()
            .checked_add(&CycScalar::one(3))
            .unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(z(3, 1).checked_add(&z(3, 2)).unwrap(), CycScalar::from_int(3, -1));
        assert_eq!(z(4, 1).checked_mul(&z(4, 1)).unwrap(), CycScalar::from_int(4, -1));
        // (ζ5 + 1)(ζ5 - 1) = ζ5^2 - 1, checked against a direct polynomial product
        let one = CycScalar::one(5);
        let lhs = z(5, 1)
            .checked_add(&one)
            .unwrap()
            .checked_mul(&z(5, 1).checked_sub(&one).unwrap())
            .unwrap();
        let r = |n: i64| Rational::from_integer(n.into());
        let oracle = CycScalar::from_poly(5, &poly::mul(&[r(1), r(1)], &[r(-1), r(1)]));
        assert_eq!(lhs, oracle);
        assert_eq!(lhs, z(5, 2).checked_sub(&one).unwrap());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(CycScalar::one(7).inverse().unwrap(), CycScalar::one(7));
        for k in 0..12 {
            assert_eq!(z(12, k).inverse().unwrap(), z(12, -k));
        }
        let a = CycScalar::one(3).checked_add(&z(3, 1)).unwrap();
        let inv = a.inverse().unwrap();
        // 1 + ζ3 = -ζ3^2, so its inverse is -ζ3
        assert_eq!(inv, z(3, 1).neg());
        assert!(a.checked_mul(&inv).unwrap().is_one());
        assert_eq!(CycScalar::zero(3).inverse(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert_eq!(
            z(3, 1).checked_add(&z(4, 1)),
            Err(ScalarError::OrderMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn root_of_unity_has_kernel_n() {
        for n in 1..=12u32 {
            for k in -2 * n as i64..2 * n as i64 {
                let v = z(n, k);
                assert_eq!(v.is_one(), k.rem_euclid(n as i64) == 0, "n={n} k={k}");
                assert_eq!(v.checked_mul(&z(n, 3)).unwrap(), z(n, k + 3));
            }
        }
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(z(3, 1).to_string(), "ζ3");
        assert_eq!(CycScalar::one(3).checked_add(&z(3, 1)).unwrap().to_string(), "1 + ζ3");
        assert_eq!(z(3, 2).to_string(), "-1 - ζ3");
        assert_eq!(CycScalar::zero(5).to_string(), "0");
    }

    #[test]
    fn complex_value_matches_exponential() {
        let v = z(6, 1).to_complex();
        assert!((v - Complex64::from_polar(1.0, PI / 3.0)).norm() < 1e-12);
        let w = z(5, 7).to_complex();
        assert!((w - Complex64::from_polar(1.0, 2.0 * PI * 2.0 / 5.0)).norm() < 1e-12);
    }
}
