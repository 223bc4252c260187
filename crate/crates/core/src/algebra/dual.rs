//! The dual space H* with the convolution product and the harpoon actions
//! `(h ⇀ ξ)(a) = ξ(a h)` and `(ξ ↼ h)(a) = ξ(h a)`.
//!
//! Functionals are dense coefficient vectors in the dual basis `e^i`.

use crate::scalar::Field;

use super::structure::{accumulate, mul_coef, SparseVec};
use super::{Coproduct, StructureConstants};

/// `(ξ ∗ ν)(h) = (ξ ⊗ ν)(Δ h)`.
pub fn convolution<F: Field>(
    field: &F,
    delta: &Coproduct<F::Elem>,
    xi: &[F::Elem],
    nu: &[F::Elem],
) -> Vec<F::Elem> {
    (0..delta.dim())
        .map(|i| {
            let mut acc = field.zero();
            for (j, k, c) in delta.of(i) {
                if field.is_zero(&xi[*j]) || field.is_zero(&nu[*k]) {
                    continue;
                }
                let t = mul_coef(field, &mul_coef(field, c, &xi[*j]), &nu[*k]);
                field.add_assign(&mut acc, &t);
            }
            acc
        })
        .collect()
}

/// `h ⇀ ξ` for a vector `h` and functional `ξ`.
pub fn left_harpoon<F: Field>(
    field: &F,
    sc: &StructureConstants<F::Elem>,
    h: &[F::Elem],
    xi: &[F::Elem],
) -> Vec<F::Elem> {
    harpoon(field, sc, h, xi, false)
}

/// `ξ ↼ h` for a functional `ξ` and vector `h`.
pub fn right_harpoon<F: Field>(
    field: &F,
    sc: &StructureConstants<F::Elem>,
    xi: &[F::Elem],
    h: &[F::Elem],
) -> Vec<F::Elem> {
    harpoon(field, sc, h, xi, true)
}

fn harpoon<F: Field>(
    field: &F,
    sc: &StructureConstants<F::Elem>,
    h: &[F::Elem],
    xi: &[F::Elem],
    h_on_left: bool,
) -> Vec<F::Elem> {
    let dim = sc.dim();
    (0..dim)
        .map(|a| {
            let mut acc = field.zero();
            for (j, hj) in h.iter().enumerate() {
                if field.is_zero(hj) {
                    continue;
                }
                let prod = if h_on_left { sc.product(j, a) } else { sc.product(a, j) };
                for (k, c) in prod {
                    if field.is_zero(&xi[*k]) {
                        continue;
                    }
                    let t = mul_coef(field, &mul_coef(field, hj, c), &xi[*k]);
                    field.add_assign(&mut acc, &t);
                }
            }
            acc
        })
        .collect()
}

/// Precomputed harpoon actions on basis elements, as sparse functionals.
#[derive(Clone, Debug)]
pub struct HarpoonTables<E> {
    dim: usize,
    /// `e_j ⇀ e^i` at `j * dim + i`.
    left: Vec<SparseVec<E>>,
    /// `e^i ↼ e_j` at `j * dim + i`.
    right: Vec<SparseVec<E>>,
}

impl<E: Clone> HarpoonTables<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, sc: &StructureConstants<E>) -> Self {
        let dim = sc.dim();
        let mut left = vec![Vec::new(); dim * dim];
        let mut right = vec![Vec::new(); dim * dim];
        for a in 0..dim {
            for j in 0..dim {
                // (e_j ⇀ e^i)(e_a) = [e_a e_j]_i
                for (i, c) in sc.product(a, j) {
                    accumulate(field, &mut left[j * dim + i], a, c.clone());
                }
                // (e^i ↼ e_j)(e_a) = [e_j e_a]_i
                for (i, c) in sc.product(j, a) {
                    accumulate(field, &mut right[j * dim + i], a, c.clone());
                }
            }
        }
        for v in left.iter_mut().chain(right.iter_mut()) {
            v.sort_by_key(|(a, _)| *a);
        }
        HarpoonTables { dim, left, right }
    }

    /// `e_h ⇀ e^xi`.
    pub fn left(&self, h: usize, xi: usize) -> &[(usize, E)] {
        &self.left[h * self.dim + xi]
    }

    /// `e^xi ↼ e_h`.
    pub fn right(&self, xi: usize, h: usize) -> &[(usize, E)] {
        &self.right[h * self.dim + xi]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::to_dense;
    use crate::scalar::Cyclotomic;

    // Group algebra of ℤ/3: e_i e_j = e_{i+j}, Δ(e_i) = e_i ⊗ e_i.
    fn group_algebra(f: &Cyclotomic) -> (StructureConstants<crate::scalar::CycScalar>, Coproduct<crate::scalar::CycScalar>) {
        let mut unit = vec![f.zero(); 3];
        unit[0] = f.one();
        let sc = StructureConstants::from_fn(f, 3, unit, |i, j| vec![((i + j) % 3, f.one())]);
        let delta = Coproduct::new(f, (0..3).map(|i| vec![(i, i, f.one())]).collect());
        (sc, delta)
    }

    #[test]
    fn dual_of_group_algebra_is_function_algebra() {
        let f = Cyclotomic::new(1);
        let (_, delta) = group_algebra(&f);
        let e = |i| to_dense(&f, 3, &[(i, f.one())]);
        assert_eq!(convolution(&f, &delta, &e(1), &e(1)), e(1));
        assert_eq!(convolution(&f, &delta, &e(1), &e(2)), vec![f.zero(); 3]);
    }

    #[test]
    fn harpoons_shift_dual_basis() {
        let f = Cyclotomic::new(1);
        let (sc, _) = group_algebra(&f);
        let tables = HarpoonTables::new(&f, &sc);
        // (e_1 ⇀ e^2)(e_a) = δ_{a+1, 2}  →  e^1
        assert_eq!(tables.left(1, 2), &[(1, f.one())]);
        assert_eq!(tables.right(2, 1), &[(1, f.one())]);
        let e = |i| to_dense(&f, 3, &[(i, f.one())]);
        assert_eq!(left_harpoon(&f, &sc, &e(1), &e(2)), e(1));
        assert_eq!(right_harpoon(&f, &sc, &e(0), &e(2)), e(1));
    }
}
