use crate::scalar::Field;

use super::Cocycle3;

/// A monomial `Π ω(num) / Π ω(den)` in the values of a cocycle, evaluated
/// by adding exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OmegaRatio {
    pub numerator: Vec<[usize; 3]>,
    pub denominator: Vec<[usize; 3]>,
}

impl OmegaRatio {
    pub fn new(numerator: Vec<[usize; 3]>, denominator: Vec<[usize; 3]>) -> Self {
        OmegaRatio { numerator, denominator }
    }

    /// Exponent of the ratio mod the root order of `w`.
    pub fn exponent(&self, w: &Cocycle3) -> i64 {
        let sum = |ts: &[[usize; 3]]| ts.iter().map(|&[a, b, c]| w.exp(a, b, c) as i64).sum::<i64>();
        (sum(&self.numerator) - sum(&self.denominator)).rem_euclid(w.root_order() as i64)
    }

    pub fn value<F: Field>(&self, field: &F, w: &Cocycle3) -> F::Elem {
        field.root_of_unity(self.exponent(w) * w.lift(field.root_order()))
    }

    /// The same ratio with one factor deleted.
    pub fn without(&self, from_numerator: bool, factor: usize) -> Self {
        let mut r = self.clone();
        let side = if from_numerator { &mut r.numerator } else { &mut r.denominator };
        side.remove(factor);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{root_of_unity, Cyclotomic};
    use crate::twisted::cyclic_cocycle;

    #[test]
    fn exponents_add_and_subtract() {
        let w = cyclic_cocycle(3, 1);
        let r = OmegaRatio::new(vec![[1, 1, 1], [1, 1, 2]], vec![[2, 2, 2]]);
        // 1 + 2 − 8 ≡ 1 mod 3
        assert_eq!(r.exponent(&w), 1);
        assert_eq!(r.value(&Cyclotomic::new(6), &w), root_of_unity(6, 2));
        assert_eq!(r.without(false, 0).exponent(&w), 0);
    }
}
