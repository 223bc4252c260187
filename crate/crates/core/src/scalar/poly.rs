//! Dense univariate polynomials over the rationals and the integer
//! cyclotomic polynomials.
//!
//! Coefficient vectors are stored low degree first and kept trimmed: the
//! zero polynomial is the empty vector.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Euclidean division `a = q * b + r` with `deg r < deg b`.
///
/// Panics if `b` is the zero polynomial.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = degree(b).expect("polynomial division by zero");
    let lead = b[db].clone();
    let mut r: Vec<Rational> = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            if !bc.is_zero() {
                r[i + shift] -= &c * bc;
            }
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Returns `s` with `s * a ≡ g (mod m)` where `g = gcd(a, m)` is normalized
/// to be monic, together with `g`.
pub(crate) fn ext_gcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while degree(&r1).is_some() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let d = degree(&r0).expect("gcd of two zero polynomials");
    let lead = r0[d].clone();
    for c in r0.iter_mut().chain(s0.iter_mut()) {
        *c /= &lead;
    }
    (s0, r0)
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn cache() -> &'static Mutex<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial Φ_n, low degree first.
///
/// Computed by dividing `x^n - 1` by Φ_d for every proper divisor `d` of `n`.
/// All divisions are exact division by monic integer polynomials.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    if let Some(p) = cache().lock().expect("poisoned cache").get(&n) {
        return p.clone();
    }
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        num = exact_monic_div(&num, &cyclotomic_polynomial(d));
    }
    cache().lock().expect("poisoned cache").insert(n, num.clone());
    num
}

fn exact_monic_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for shift in (0..q.len()).rev() {
        let c = r[shift + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "inexact cyclotomic division");
    q
}

/// Euler's totient, the degree of Φ_n.
pub fn totient(n: u32) -> usize {
    let mut result = n as u64;
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}

pub(crate) fn to_rational(p: &[BigInt]) -> Vec<Rational> {
    p.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

#[allow(dead_code)]
pub(crate) fn render_int(p: &[BigInt]) -> String {
    let mut parts = Vec::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let mono = match i {
            0 => mag.to_string(),
            1 if mag.is_one() => "x".to_string(),
            1 => format!("{mag}x"),
            _ if mag.is_one() => format!("x^{i}"),
            _ => format!("{mag}x^{i}"),
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        parts.push((sign, mono));
    }
    let mut out = String::new();
    for (k, (sign, mono)) in parts.into_iter().enumerate() {
        match (k, sign) {
            (0, "-") => out.push_str(&format!("-{mono}")),
            (0, _) => out.push_str(&mono),
            _ => out.push_str(&format!(" {sign} {mono}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(render_int(&cyclotomic_polynomial(6)), "x^2 - x + 1");
    }

    // Independent route for Φ_6: divide x^6 - 1 by (x-1)(x+1)(x^2+x+1) over ℚ.
    #[test]
    fn phi6_by_rational_division() {
        let x6 = to_rational(&ints(&[-1, 0, 0, 0, 0, 0, 1]));
        let d = mul(
            &mul(&to_rational(&ints(&[-1, 1])), &to_rational(&ints(&[1, 1]))),
            &to_rational(&ints(&[1, 1, 1])),
        );
        let (q, r) = div_rem(&x6, &d);
        assert!(r.is_empty());
        assert_eq!(q, to_rational(&ints(&[1, -1, 1])));
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=24u32 {
            let mut prod = vec![Rational::one()];
            for d in divisors(n) {
                prod = mul(&prod, &to_rational(&cyclotomic_polynomial(d)));
            }
            let mut expected = vec![Rational::zero(); n as usize + 1];
            expected[0] = -Rational::one();
            expected[n as usize] = Rational::one();
            assert_eq!(prod, expected, "n = {n}");
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n));
        }
    }

    #[test]
    fn ext_gcd_inverts_mod_phi3() {
        let m = to_rational(&cyclotomic_polynomial(3));
        let a = to_rational(&ints(&[1, 1]));
        let (s, g) = ext_gcd(&a, &m);
        assert_eq!(g, vec![Rational::one()]);
        let (_, r) = div_rem(&mul(&s, &a), &m);
        assert_eq!(r, vec![Rational::one()]);
    }
}
