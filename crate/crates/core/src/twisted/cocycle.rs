use num_integer::Integer;

use crate::scalar::Field;

use super::FiniteGroup;

/// Number of violations kept by [`Cocycle3::check`].
pub const MAX_VIOLATIONS: usize = 10;

/// A candidate normalized 3-cocycle `ω(a,b,c) = ζ_N^{e(a,b,c)}`, stored as
/// an exponent table. Construction does not validate; see [`Cocycle3::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle3 {
    group: FiniteGroup,
    root_order: u32,
    exponents: Vec<u32>,
}

/// Result of checking normalization and the cocycle condition
/// `ω(a,b,c)ω(a,bc,d)ω(b,c,d) = ω(ab,c,d)ω(a,b,cd)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CocycleReport {
    pub normalization_failures: usize,
    pub cocycle_failures: usize,
    /// First offending triples `(a, b, c)`.
    pub normalization_examples: Vec<[usize; 3]>,
    /// First offending quadruples `(a, b, c, d)`.
    pub cocycle_examples: Vec<[usize; 4]>,
}

impl CocycleReport {
    pub fn is_valid(&self) -> bool {
        self.normalization_failures == 0 && self.cocycle_failures == 0
    }
}

impl Cocycle3 {
    pub fn from_fn(group: FiniteGroup, root_order: u32, mut e: impl FnMut(usize, usize, usize) -> i64) -> Self {
        assert!(root_order >= 1, "root order must be positive");
        let n = group.order();
        let mut exponents = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    exponents.push(e(a, b, c).rem_euclid(root_order as i64) as u32);
                }
            }
        }
        Cocycle3 {
            group,
            root_order,
            exponents,
        }
    }

    pub fn trivial(group: FiniteGroup) -> Self {
        Self::from_fn(group, 1, |_, _, _| 0)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    fn slot(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.group.order();
        (a * n + b) * n + c
    }

    /// Exponent of ω(a,b,c), in `0..root_order`.
    pub fn exp(&self, a: usize, b: usize, c: usize) -> u32 {
        self.exponents[self.slot(a, b, c)]
    }

    pub fn set_exp(&mut self, a: usize, b: usize, c: usize, e: i64) {
        let s = self.slot(a, b, c);
        self.exponents[s] = e.rem_euclid(self.root_order as i64) as u32;
    }

    /// ω(a,b,c) in a field whose root order is a multiple of ours.
    pub fn value<F: Field>(&self, field: &F, a: usize, b: usize, c: usize) -> F::Elem {
        field.root_of_unity(self.lift(field.root_order()) * self.exp(a, b, c) as i64)
    }

    /// Factor turning exponents mod `root_order` into exponents mod `target`.
    pub fn lift(&self, target: u32) -> i64 {
        assert!(
            target.is_multiple_of(self.root_order),
            "root order {target} is not a multiple of {}",
            self.root_order
        );
        (target / self.root_order) as i64
    }

    /// The same cocycle with exponents taken mod a multiple of the root order.
    pub fn with_root_order(&self, target: u32) -> Self {
        let k = self.lift(target);
        Cocycle3 {
            group: self.group.clone(),
            root_order: target,
            exponents: self.exponents.iter().map(|&e| (e as i64 * k) as u32).collect(),
        }
    }

    /// Exhaustive check of normalization (n³ triples) and the cocycle
    /// condition (n⁴ quadruples).
    pub fn check(&self) -> CocycleReport {
        let g = &self.group;
        let n = g.order();
        let id = g.identity();
        let modulus = self.root_order;
        let mut report = CocycleReport::default();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if (a == id || b == id || c == id) && self.exp(a, b, c) != 0 {
                        report.normalization_failures += 1;
                        if report.normalization_examples.len() < MAX_VIOLATIONS {
                            report.normalization_examples.push([a, b, c]);
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let lhs = self.exp(a, b, c) + self.exp(a, g.mul(b, c), d) + self.exp(b, c, d);
                        let rhs = self.exp(g.mul(a, b), c, d) + self.exp(a, b, g.mul(c, d));
                        if lhs % modulus != rhs % modulus {
                            report.cocycle_failures += 1;
                            if report.cocycle_examples.len() < MAX_VIOLATIONS {
                                report.cocycle_examples.push([a, b, c, d]);
                            }
                        }
                    }
                }
            }
        }
        report
    }

    /// `∀a: ω(a, a⁻¹, a) = 1`.
    pub fn inverse_triple_trivial(&self) -> bool {
        (0..self.group.order()).all(|a| self.exp(a, self.group.inv(a), a) == 0)
    }

    /// Pointwise product of `ω1` on `G1` and `ω2` on `G2`, on `G1 × G2`, with
    /// root order `lcm(N1, N2)`.
    pub fn product(w1: &Cocycle3, w2: &Cocycle3) -> Self {
        let n = w1.root_order.lcm(&w2.root_order);
        let (k1, k2) = (w1.lift(n), w2.lift(n));
        let n2 = w2.group.order();
        let group = FiniteGroup::direct_product(&w1.group, &w2.group);
        Self::from_fn(group, n, |a, b, c| {
            k1 * w1.exp(a / n2, b / n2, c / n2) as i64 + k2 * w2.exp(a % n2, b % n2, c % n2) as i64
        })
    }

    /// The coboundary `dφ(a,b,c) = φ(b,c)φ(a,bc)/(φ(ab,c)φ(a,b))` of a
    /// 2-cochain given by exponents `phi[a * n + b]` mod `root_order`.
    pub fn coboundary(group: FiniteGroup, root_order: u32, phi: &[i64]) -> Self {
        let n = group.order();
        assert_eq!(phi.len(), n * n);
        let g = group.clone();
        Self::from_fn(group, root_order, |a, b, c| {
            phi[b * n + c] + phi[a * n + g.mul(b, c)] - phi[g.mul(a, b) * n + c] - phi[a * n + b]
        })
    }

    /// All distinct coboundaries of normalized 2-cochains with values in the
    /// `root_order`-th roots of unity, in enumeration order. Brute force over
    /// `root_order^((n-1)²)` cochains; intended for `n ≤ 4`.
    pub fn coboundaries(group: &FiniteGroup, root_order: u32) -> Vec<Cocycle3> {
        let n = group.order();
        let id = group.identity();
        let free: Vec<usize> = (0..n * n).filter(|&k| k / n != id && k % n != id).collect();
        let mut counters = vec![0usize; free.len()];
        let mut seen: Vec<Cocycle3> = Vec::new();
        loop {
            let mut phi = vec![0i64; n * n];
            for (slot, &k) in free.iter().enumerate() {
                phi[k] = counters[slot] as i64;
            }
            let w = Self::coboundary(group.clone(), root_order, &phi);
            if !seen.contains(&w) {
                seen.push(w);
            }
            if !crate::algebra::advance_counters(&mut counters, root_order as usize) {
                break;
            }
        }
        seen
    }
}

/// `ω(a,b,c) = ζ_n^{k·a·b·c}` on ℤ/n.
pub fn cyclic_cocycle(n: usize, k: i64) -> Cocycle3 {
    Cocycle3::from_fn(FiniteGroup::cyclic(n), n as u32, |a, b, c| k * (a * b * c) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{root_of_unity, Cyclotomic};

    #[test]
    fn cyclic_cocycles_are_cocycles() {
        for n in 1..=8 {
            for k in 0..n as i64 {
                assert!(cyclic_cocycle(n, k).check().is_valid(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn z3_condition_by_hand() {
        // at (1,1,1,1): 1 + 2 + 1 = 4 ≡ 1 and 2 + 2 = 4 ≡ 1 (mod 3)
        let w = cyclic_cocycle(3, 1);
        assert_eq!((w.exp(1, 1, 1) + w.exp(1, 2, 1) + w.exp(1, 1, 1)) % 3, 1);
        assert_eq!((w.exp(2, 1, 1) + w.exp(1, 1, 2)) % 3, 1);
    }

    #[test]
    fn sign_cocycle_values() {
        let w = cyclic_cocycle(2, 1);
        let f = Cyclotomic::new(2);
        assert_eq!(w.value(&f, 1, 1, 1), root_of_unity(2, 1));
        assert_eq!(w.value(&f, 1, 0, 1), f.one());
    }

    #[test]
    fn broken_normalization_is_reported() {
        let mut w = cyclic_cocycle(2, 1);
        w.set_exp(1, 0, 1, 1);
        let r = w.check();
        assert!(!r.is_valid());
        assert_eq!(r.normalization_examples, vec![[1, 0, 1]]);
    }

    #[test]
    fn lifting_preserves_values() {
        let w = cyclic_cocycle(3, 1);
        let f = Cyclotomic::new(6);
        let lifted = w.with_root_order(6);
        for (a, b, c) in [(1, 1, 1), (2, 2, 1), (1, 2, 2)] {
            assert_eq!(w.value(&f, a, b, c), lifted.value(&f, a, b, c));
        }
        assert!(lifted.check().is_valid());
    }

    #[test]
    fn klein_tables() {
        let z2 = FiniteGroup::cyclic(2);
        let v4 = FiniteGroup::direct_product(&z2, &z2);
        let bit = |x: usize, i: usize| ((x >> (1 - i)) & 1) as i64;
        let a1b2c2 = Cocycle3::from_fn(v4.clone(), 2, |a, b, c| bit(a, 0) * bit(b, 1) * bit(c, 1));
        assert!(a1b2c2.check().is_valid());
        let non = Cocycle3::from_fn(v4, 2, |a, b, c| bit(a, 0) * bit(a, 1) * bit(b, 0) * bit(c, 0));
        assert!(!non.check().is_valid());
    }

    #[test]
    fn coboundaries_are_cocycles() {
        for n in 2..=3 {
            let g = FiniteGroup::cyclic(n);
            let all = Cocycle3::coboundaries(&g, n as u32);
            assert!(all.iter().all(|w| w.check().is_valid()));
            if n == 2 {
                // every normalized coboundary on ℤ/2 is trivial
                assert_eq!(all.len(), 1);
                assert!(all[0].inverse_triple_trivial());
            } else {
                assert!(all.len() > 1);
            }
        }
    }

    #[test]
    fn product_of_cyclic_cocycles() {
        let w = Cocycle3::product(&cyclic_cocycle(2, 1), &cyclic_cocycle(3, 1));
        assert_eq!(w.root_order(), 6);
        assert!(w.check().is_valid());
    }
}
