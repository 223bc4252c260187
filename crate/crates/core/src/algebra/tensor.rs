use std::collections::BTreeMap;

use crate::scalar::Field;

use super::AlgebraError;

/// An element of V^{⊗d} for a space V of dimension `dim`, stored sparsely.
///
/// Multi-indices are packed row-major into a single `u64` key (leg 1 is the
/// most significant digit), so iteration order is lexicographic in the legs.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseTensor<E> {
    dim: usize,
    degree: usize,
    entries: BTreeMap<u64, E>,
}

impl<E: Clone> SparseTensor<E> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(dim >= 1, "tensor legs need positive dimension");
        assert!(
            (dim as f64).powi(degree as i32) < u64::MAX as f64,
            "tensor key space overflows u64"
        );
        SparseTensor {
            dim,
            degree,
            entries: BTreeMap::new(),
        }
    }

    /// Degree-0 tensor holding a single scalar.
    pub fn scalar<F: Field<Elem = E>>(field: &F, dim: usize, c: E) -> Self {
        let mut t = Self::zero(dim, 0);
        t.add_term(field, &[], c);
        t
    }

    pub fn basis<F: Field<Elem = E>>(field: &F, dim: usize, idx: &[usize]) -> Self {
        let mut t = Self::zero(dim, idx.len());
        t.add_term(field, idx, field.one());
        t
    }

    /// Degree-1 tensor from a dense coefficient vector.
    pub fn from_vector<F: Field<Elem = E>>(field: &F, v: &[E]) -> Self {
        let mut t = Self::zero(v.len(), 1);
        for (i, c) in v.iter().enumerate() {
            t.add_term(field, &[i], c.clone());
        }
        t
    }

    /// v^{⊗d}; with `v` the algebra unit this is the unit of the tensor power.
    pub fn power<F: Field<Elem = E>>(field: &F, v: &[E], degree: usize) -> Self {
        let mut t = Self::scalar(field, v.len(), field.one());
        let single = Self::from_vector(field, v);
        for _ in 0..degree {
            t = t.outer(field, &single);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn encode(&self, idx: &[usize]) -> u64 {
        debug_assert_eq!(idx.len(), self.degree);
        idx.iter().fold(0u64, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim as u64 + i as u64
        })
    }

    pub fn decode(&self, mut key: u64) -> Vec<usize> {
        let mut idx = vec![0; self.degree];
        for slot in idx.iter_mut().rev() {
            *slot = (key % self.dim as u64) as usize;
            key /= self.dim as u64;
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> Option<&E> {
        self.entries.get(&self.encode(idx))
    }

    /// Entries in key order with decoded multi-indices.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &E)> + '_ {
        self.entries.iter().map(|(&k, c)| (self.decode(k), c))
    }

    pub fn keys(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, field: &F, idx: &[usize], c: E) {
        if idx.iter().any(|&i| i >= self.dim) {
            panic!("index {idx:?} out of range for leg dimension {}", self.dim);
        }
        let key = self.encode(idx);
        self.add_keyed(field, key, c);
    }

    pub(crate) fn add_keyed<F: Field<Elem = E>>(&mut self, field: &F, key: u64, c: E) {
        if field.is_zero(&c) {
            return;
        }
        match self.entries.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(o.get(), &c);
                if field.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub(crate) fn from_raw<F: Field<Elem = E>>(
        field: &F,
        dim: usize,
        degree: usize,
        raw: impl IntoIterator<Item = (u64, E)>,
    ) -> Self {
        let mut t = Self::zero(dim, degree);
        for (k, c) in raw {
            t.add_keyed(field, k, c);
        }
        t
    }

    fn check_shape(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(AlgebraError::ShapeMismatch {
                left: (self.dim, self.degree),
                right: (other.dim, other.degree),
            });
        }
        Ok(())
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, AlgebraError> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (&k, c) in &other.entries {
            out.add_keyed(field, k, c.clone());
        }
        Ok(out)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, AlgebraError> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (&k, c) in &other.entries {
            out.add_keyed(field, k, field.neg(c));
        }
        Ok(out)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        Self::from_raw(
            field,
            self.dim,
            self.degree,
            self.entries.iter().map(|(&k, v)| (k, field.mul(v, c))),
        )
    }

    /// Entry-set equality up to the field's notion of zero.
    pub fn approx_eq<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> bool {
        self.sub(field, other).map(|d| d.is_empty()).unwrap_or(false)
    }

    /// Tensor product: legs of `self` followed by legs of `other`.
    pub fn outer<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "outer product needs equal leg dimensions");
        let shift = (self.dim as u64).pow(other.degree as u32);
        let mut out = Self::zero(self.dim, self.degree + other.degree);
        for (&ka, a) in &self.entries {
            for (&kb, b) in &other.entries {
                out.add_keyed(field, ka * shift + kb, field.mul(a, b));
            }
        }
        out
    }

    /// Output leg `l` is input leg `perm[l]`.
    pub fn permute_legs(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.degree);
        let mut seen = vec![false; self.degree];
        for &p in perm {
            assert!(p < self.degree && !seen[p], "not a permutation: {perm:?}");
            seen[p] = true;
        }
        let mut out = Self::zero(self.dim, self.degree);
        for (&k, c) in &self.entries {
            let idx = self.decode(k);
            let new: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            out.entries.insert(out.encode(&new), c.clone());
        }
        out
    }

    /// Places the legs of `self` at `positions` (strictly increasing, 0-based)
    /// in a degree-`degree` tensor, with `fill` in every other leg.
    pub fn embed_legs<F: Field<Elem = E>>(
        &self,
        field: &F,
        positions: &[usize],
        degree: usize,
        fill: &[E],
    ) -> Result<Self, AlgebraError> {
        if positions.len() != self.degree
            || positions.windows(2).any(|w| w[0] >= w[1])
            || positions.last().is_some_and(|&p| p >= degree)
        {
            return Err(AlgebraError::InvalidLegs {
                legs: positions.to_vec(),
                degree,
            });
        }
        assert_eq!(fill.len(), self.dim);
        let fill_terms: Vec<(usize, &E)> = fill
            .iter()
            .enumerate()
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        let free: Vec<usize> = (0..degree).filter(|l| !positions.contains(l)).collect();
        let mut out = Self::zero(self.dim, degree);
        if fill_terms.is_empty() && !free.is_empty() {
            return Ok(out);
        }
        let mut idx = vec![0usize; degree];
        for (&k, c) in &self.entries {
            let src = self.decode(k);
            for (p, &i) in positions.iter().zip(&src) {
                idx[*p] = i;
            }
            // enumerate fill choices on the free legs
            let mut counters = vec![0usize; free.len()];
            loop {
                let mut coef = c.clone();
                for (slot, &leg) in free.iter().enumerate() {
                    let (i, f) = fill_terms[counters[slot]];
                    idx[leg] = i;
                    coef = field.mul(&coef, f);
                }
                let key = out.encode(&idx);
                out.add_keyed(field, key, coef);
                if !advance(&mut counters, fill_terms.len()) {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// The leg-subscript embedding t ↦ t_{pq} into degree `degree`; legs are
    /// 1-based as in the usual notation t_{12}, t_{13}, t_{23}.
    pub fn leg_embed<F: Field<Elem = E>>(
        &self,
        field: &F,
        legs: (usize, usize),
        degree: usize,
        unit: &[E],
    ) -> Result<Self, AlgebraError> {
        let (p, q) = legs;
        if self.degree != 2 || p == 0 || p >= q || q > degree {
            return Err(AlgebraError::InvalidLegs {
                legs: vec![p, q],
                degree,
            });
        }
        self.embed_legs(field, &[p - 1, q - 1], degree, unit)
    }
}

/// Odometer increment; returns false after wrapping past the last state.
pub(crate) fn advance(counters: &mut [usize], base: usize) -> bool {
    if base == 0 {
        return false;
    }
    for c in counters.iter_mut().rev() {
        *c += 1;
        if *c < base {
            return true;
        }
        *c = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclotomic;

    #[test]
    fn encode_decode_roundtrip() {
        let f = Cyclotomic::new(1);
        let t = SparseTensor::basis(&f, 5, &[4, 0, 3]);
        let (idx, _) = t.iter().next().unwrap();
        assert_eq!(idx, vec![4, 0, 3]);
        assert_eq!(t.encode(&idx), 4 * 25 + 3);
    }

    #[test]
    fn cancellation_prunes() {
        let f = Cyclotomic::new(3);
        let mut t = SparseTensor::zero(2, 2);
        t.add_term(&f, &[0, 1], f.root_of_unity(1));
        t.add_term(&f, &[0, 1], f.neg(&f.root_of_unity(1)));
        assert!(t.is_empty());
    }

    #[test]
    fn leg_embed_identity_and_split() {
        let f = Cyclotomic::new(1);
        let unit = vec![f.one(), f.one()];
        let mut t = SparseTensor::zero(2, 2);
        t.add_term(&f, &[0, 1], f.from_int(3));
        assert_eq!(t.leg_embed(&f, (1, 2), 2, &unit).unwrap(), t);
        let e = t.leg_embed(&f, (1, 3), 3, &unit).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.get(&[0, 0, 1]), Some(&f.from_int(3)));
        assert_eq!(e.get(&[0, 1, 1]), Some(&f.from_int(3)));
        assert!(matches!(
            t.leg_embed(&f, (2, 2), 3, &unit),
            Err(AlgebraError::InvalidLegs { .. })
        ));
        assert!(t.leg_embed(&f, (1, 4), 3, &unit).is_err());
    }

    #[test]
    fn permute_reverses() {
        let f = Cyclotomic::new(1);
        let t = SparseTensor::basis(&f, 3, &[0, 1, 2]);
        let r = t.permute_legs(&[2, 1, 0]);
        assert!(r.get(&[2, 1, 0]).is_some());
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let f = Cyclotomic::new(1);
        let a = SparseTensor::basis(&f, 2, &[0]);
        let b = SparseTensor::basis(&f, 2, &[0, 1]);
        assert!(matches!(a.add(&f, &b), Err(AlgebraError::ShapeMismatch { .. })));
    }
}
