use std::collections::HashMap;

use crate::scalar::Field;

use super::{contract, AlgebraError, SparseTensor};

/// Sparse vector: `(basis index, coefficient)` pairs with distinct indices.
pub type SparseVec<E> = Vec<(usize, E)>;

pub(crate) fn accumulate<F: Field>(field: &F, v: &mut SparseVec<F::Elem>, i: usize, c: F::Elem) {
    if field.is_zero(&c) {
        return;
    }
    if let Some(pos) = v.iter().position(|(j, _)| *j == i) {
        let s = field.add(&v[pos].1, &c);
        if field.is_zero(&s) {
            v.swap_remove(pos);
        } else {
            v[pos].1 = s;
        }
    } else {
        v.push((i, c));
    }
}

pub(crate) fn mul_coef<F: Field>(field: &F, a: &F::Elem, b: &F::Elem) -> F::Elem {
    if field.is_one(a) {
        b.clone()
    } else if field.is_one(b) {
        a.clone()
    } else {
        field.mul(a, b)
    }
}

pub fn to_dense<F: Field>(field: &F, dim: usize, v: &[(usize, F::Elem)]) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); dim];
    for (i, c) in v {
        field.add_assign(&mut out[*i], c);
    }
    out
}

pub fn to_sparse<F: Field>(field: &F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !field.is_zero(c))
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Multiplication table of a finite-dimensional unital algebra:
/// `e_i · e_j = Σ_k table[i*dim + j][k]`.
///
/// Associativity is not assumed; see [`StructureConstants::find_nonassociative_triple`].
#[derive(Clone, Debug)]
pub struct StructureConstants<E> {
    dim: usize,
    table: Vec<SparseVec<E>>,
    unit: Vec<E>,
}

impl<E: Clone> StructureConstants<E> {
    /// The zero product with the given unit vector; fill with [`Self::set`].
    pub fn new(dim: usize, unit: Vec<E>) -> Self {
        assert_eq!(unit.len(), dim);
        StructureConstants {
            dim,
            table: vec![Vec::new(); dim * dim],
            unit,
        }
    }

    pub fn set<F: Field<Elem = E>>(&mut self, field: &F, i: usize, j: usize, product: SparseVec<E>) {
        let mut v = Vec::new();
        for (k, c) in product {
            assert!(k < self.dim, "product index out of range");
            accumulate(field, &mut v, k, c);
        }
        v.sort_by_key(|(k, _)| *k);
        self.table[i * self.dim + j] = v;
    }

    /// Builds the table by evaluating `product(i, j)` for every basis pair.
    pub fn from_fn<F: Field<Elem = E>>(
        field: &F,
        dim: usize,
        unit: Vec<E>,
        mut product: impl FnMut(usize, usize) -> SparseVec<E>,
    ) -> Self {
        let mut sc = Self::new(dim, unit);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                sc.set(field, i, j, p);
            }
        }
        sc
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[E] {
        &self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, E)] {
        &self.table[i * self.dim + j]
    }

    /// Product of two sparse vectors.
    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, a: &[(usize, E)], b: &[(usize, E)]) -> SparseVec<E> {
        let mut out = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = mul_coef(field, x, y);
                for (k, c) in self.product(*i, *j) {
                    accumulate(field, &mut out, *k, mul_coef(field, &xy, c));
                }
            }
        }
        out.sort_by_key(|(k, _)| *k);
        out
    }

    /// Legwise product in the d-fold tensor power.
    pub fn multiply<F: Field<Elem = E>>(
        &self,
        field: &F,
        x: &SparseTensor<E>,
        y: &SparseTensor<E>,
    ) -> Result<SparseTensor<E>, AlgebraError> {
        if x.dim() != self.dim || y.dim() != self.dim || x.degree() != y.degree() {
            return Err(AlgebraError::ShapeMismatch {
                left: (x.dim(), x.degree()),
                right: (y.dim(), y.degree()),
            });
        }
        let spec: Vec<Vec<(usize, usize)>> = (0..x.degree()).map(|l| vec![(0, l), (1, l)]).collect();
        let spec_refs: Vec<&[(usize, usize)]> = spec.iter().map(Vec::as_slice).collect();
        Ok(contract(field, self, &[x, y], &spec_refs))
    }

    /// Product of three tensors with the given parenthesization.
    pub fn multiply3<F: Field<Elem = E>>(
        &self,
        field: &F,
        a: &SparseTensor<E>,
        b: &SparseTensor<E>,
        c: &SparseTensor<E>,
        left_first: bool,
    ) -> Result<SparseTensor<E>, AlgebraError> {
        if left_first {
            self.multiply(field, &self.multiply(field, a, b)?, c)
        } else {
            self.multiply(field, a, &self.multiply(field, b, c)?)
        }
    }

    pub fn unit_tensor<F: Field<Elem = E>>(&self, field: &F, degree: usize) -> SparseTensor<E> {
        SparseTensor::power(field, &self.unit, degree)
    }

    /// Basis indices `i` for which the unit fails to be a two-sided unit.
    pub fn unit_failures<F: Field<Elem = E>>(&self, field: &F) -> Vec<usize> {
        let u = to_sparse(field, &self.unit);
        (0..self.dim)
            .filter(|&i| {
                let e = vec![(i, field.one())];
                let l = self.mul_vec(field, &u, &e);
                let r = self.mul_vec(field, &e, &u);
                !(sparse_eq(field, &l, &e) && sparse_eq(field, &r, &e))
            })
            .collect()
    }

    /// `(e_i e_j) e_k - e_i (e_j e_k)` as a sparse vector.
    pub fn associator<F: Field<Elem = E>>(&self, field: &F, i: usize, j: usize, k: usize) -> SparseVec<E> {
        let ei = vec![(i, field.one())];
        let ek = vec![(k, field.one())];
        let left = self.mul_vec(field, self.product(i, j), &ek);
        let right = self.mul_vec(field, &ei, self.product(j, k));
        let mut diff = left;
        for (idx, c) in right {
            accumulate(field, &mut diff, idx, field.neg(&c));
        }
        diff.sort_by_key(|(k, _)| *k);
        diff
    }

    /// First basis triple (in lexicographic order) on which the product is
    /// not associative.
    pub fn find_nonassociative_triple<F: Field<Elem = E>>(
        &self,
        field: &F,
    ) -> Option<((usize, usize, usize), SparseVec<E>)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let d = self.associator(field, i, j, k);
                    if !d.is_empty() {
                        return Some(((i, j, k), d));
                    }
                }
            }
        }
        None
    }
}

pub(crate) fn sparse_eq<F: Field>(field: &F, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> bool {
    let mut diff: SparseVec<F::Elem> = a.to_vec();
    for (i, c) in b {
        accumulate(field, &mut diff, *i, field.neg(c));
    }
    diff.is_empty()
}

/// A coproduct Δ(e_i) = Σ c · e_j ⊗ e_k stored per basis element.
#[derive(Clone, Debug)]
pub struct Coproduct<E> {
    dim: usize,
    terms: Vec<Vec<(usize, usize, E)>>,
    /// For the dual convolution: (j, k) ↦ Σ c · e^i over terms of Δ(e_i).
    dual: HashMap<(usize, usize), SparseVec<E>>,
}

impl<E: Clone> Coproduct<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, terms: Vec<Vec<(usize, usize, E)>>) -> Self {
        let dim = terms.len();
        let mut dual: HashMap<(usize, usize), SparseVec<E>> = HashMap::new();
        let mut cleaned = Vec::with_capacity(dim);
        for (i, row) in terms.into_iter().enumerate() {
            let mut kept = Vec::new();
            for (j, k, c) in row {
                assert!(j < dim && k < dim, "coproduct index out of range");
                if field.is_zero(&c) {
                    continue;
                }
                accumulate(field, dual.entry((j, k)).or_default(), i, c.clone());
                kept.push((j, k, c));
            }
            cleaned.push(kept);
        }
        Coproduct {
            dim,
            terms: cleaned,
            dual,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn of(&self, i: usize) -> &[(usize, usize, E)] {
        &self.terms[i]
    }

    /// Δ(e_i) as a degree-2 tensor.
    pub fn tensor<F: Field<Elem = E>>(&self, field: &F, i: usize) -> SparseTensor<E> {
        let mut t = SparseTensor::zero(self.dim, 2);
        for (j, k, c) in &self.terms[i] {
            t.add_term(field, &[*j, *k], c.clone());
        }
        t
    }

    pub(crate) fn dual_terms(&self, j: usize, k: usize) -> &[(usize, E)] {
        self.dual.get(&(j, k)).map(Vec::as_slice).unwrap_or(&[])
    }
}
