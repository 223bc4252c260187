//! Sweedler-style evaluation of tensor expressions.
//!
//! An expression such as `q^1 X^1_1 ⊗ S^{-1}(f^2 X^3) q^2_1 ⊗ …` is evaluated
//! by first bringing every independent summation copy into a source tensor
//! (applying coproducts, antipodes and counits to single legs), and then
//! contracting: each output leg is the ordered product of a list of source
//! legs. The contraction walks source terms depth-first and evaluates every
//! output leg as soon as all of its factors are bound, so annihilating
//! products prune whole subtrees.

use std::collections::HashMap;

use crate::scalar::Field;

use super::structure::{accumulate, mul_coef, SparseVec};
use super::{Coproduct, LinearMap, SparseTensor, StructureConstants};

/// `(source, leg)` reference into the list of contraction sources.
pub type Slot = (usize, usize);

/// Contracts `sources` into a tensor whose `l`-th leg is the ordered product
/// of the slots in `out[l]`.
///
/// Every leg of every source must be used exactly once. A single-slot output
/// leg is copied without multiplication.
pub fn contract<F: Field>(
    field: &F,
    sc: &StructureConstants<F::Elem>,
    sources: &[&SparseTensor<F::Elem>],
    out: &[&[Slot]],
) -> SparseTensor<F::Elem> {
    let dim = sc.dim();
    let mut used: Vec<Vec<bool>> = sources.iter().map(|s| vec![false; s.degree()]).collect();
    for leg in out {
        assert!(!leg.is_empty(), "empty output leg");
        for &(s, l) in leg.iter() {
            assert!(s < sources.len() && l < sources[s].degree(), "slot ({s},{l}) out of range");
            assert!(!used[s][l], "slot ({s},{l}) used twice");
            used[s][l] = true;
        }
    }
    assert!(used.iter().flatten().all(|&u| u), "every source leg must be consumed");
    for s in sources {
        assert_eq!(s.dim(), dim, "source leg dimension differs from algebra dimension");
    }

    let decoded: Vec<Vec<(Vec<usize>, &F::Elem)>> =
        sources.iter().map(|s| s.iter().collect()).collect();
    let ready_at: Vec<usize> = out
        .iter()
        .map(|leg| leg.iter().map(|&(s, _)| s).max().unwrap())
        .collect();
    let mut ctx = Walk {
        field,
        sc,
        decoded: &decoded,
        out,
        ready_at: &ready_at,
        bound: vec![0; sources.len()],
        legs: vec![Vec::new(); out.len()],
        acc: HashMap::new(),
    };
    if sources.iter().all(|s| !s.is_empty()) {
        ctx.descend(0, field.one());
    }
    let acc = ctx.acc;
    SparseTensor::from_raw(field, dim, out.len(), acc)
}

struct Walk<'a, F: Field> {
    field: &'a F,
    sc: &'a StructureConstants<F::Elem>,
    decoded: &'a [Vec<(Vec<usize>, &'a F::Elem)>],
    out: &'a [&'a [Slot]],
    ready_at: &'a [usize],
    bound: Vec<usize>,
    legs: Vec<SparseVec<F::Elem>>,
    acc: HashMap<u64, F::Elem>,
}

impl<F: Field> Walk<'_, F> {
    fn descend(&mut self, depth: usize, prefix: F::Elem) {
        if depth == self.decoded.len() {
            self.emit(prefix);
            return;
        }
        for t in 0..self.decoded[depth].len() {
            self.bound[depth] = t;
            let mut alive = true;
            for l in 0..self.out.len() {
                if self.ready_at[l] != depth {
                    continue;
                }
                let v = self.eval_leg(l);
                if v.is_empty() {
                    alive = false;
                    break;
                }
                self.legs[l] = v;
            }
            if alive {
                let coef = mul_coef(self.field, &prefix, self.decoded[depth][t].1);
                self.descend(depth + 1, coef);
            }
        }
    }

    fn eval_leg(&self, l: usize) -> SparseVec<F::Elem> {
        let slots = self.out[l];
        let (s0, l0) = slots[0];
        let first = self.decoded[s0][self.bound[s0]].0[l0];
        let mut cur: SparseVec<F::Elem> = vec![(first, self.field.one())];
        for &(s, leg) in &slots[1..] {
            let j = self.decoded[s][self.bound[s]].0[leg];
            let mut next = Vec::new();
            for (i, c) in &cur {
                for (k, d) in self.sc.product(*i, j) {
                    accumulate(self.field, &mut next, *k, mul_coef(self.field, c, d));
                }
            }
            if next.is_empty() {
                return next;
            }
            cur = next;
        }
        cur
    }

    fn emit(&mut self, prefix: F::Elem) {
        let dim = self.sc.dim() as u64;
        let mut counters = vec![0usize; self.legs.len()];
        loop {
            let mut key = 0u64;
            let mut coef = prefix.clone();
            for (l, &c) in counters.iter().enumerate() {
                let (i, v) = &self.legs[l][c];
                key = key * dim + *i as u64;
                coef = mul_coef(self.field, &coef, v);
            }
            match self.acc.get_mut(&key) {
                Some(existing) => self.field.add_assign(existing, &coef),
                None => {
                    self.acc.insert(key, coef);
                }
            }
            // odometer over the per-leg alternatives
            let mut l = self.legs.len();
            loop {
                if l == 0 {
                    return;
                }
                l -= 1;
                counters[l] += 1;
                if counters[l] < self.legs[l].len() {
                    break;
                }
                counters[l] = 0;
            }
        }
    }
}

/// Applies a linear map to one leg.
pub fn map_leg<F: Field>(
    field: &F,
    t: &SparseTensor<F::Elem>,
    leg: usize,
    map: &LinearMap<F::Elem>,
) -> SparseTensor<F::Elem> {
    assert!(leg < t.degree());
    assert_eq!(map.dim(), t.dim());
    let mut out = SparseTensor::zero(t.dim(), t.degree());
    for (mut idx, c) in t.iter() {
        let j = idx[leg];
        for (i, m) in map.column(j) {
            idx[leg] = *i;
            out.add_term(field, &idx, mul_coef(field, c, m));
        }
    }
    out
}

/// Applies Δ to one leg, which becomes two adjacent legs.
pub fn coproduct_leg<F: Field>(
    field: &F,
    t: &SparseTensor<F::Elem>,
    leg: usize,
    delta: &Coproduct<F::Elem>,
) -> SparseTensor<F::Elem> {
    assert!(leg < t.degree());
    assert_eq!(delta.dim(), t.dim());
    let mut out = SparseTensor::zero(t.dim(), t.degree() + 1);
    for (idx, c) in t.iter() {
        for (j, k, d) in delta.of(idx[leg]) {
            let mut new = Vec::with_capacity(idx.len() + 1);
            new.extend_from_slice(&idx[..leg]);
            new.push(*j);
            new.push(*k);
            new.extend_from_slice(&idx[leg + 1..]);
            out.add_term(field, &new, mul_coef(field, c, d));
        }
    }
    out
}

/// Applies a functional (e.g. the counit) to one leg, removing it.
pub fn functional_leg<F: Field>(
    field: &F,
    t: &SparseTensor<F::Elem>,
    leg: usize,
    functional: &[F::Elem],
) -> SparseTensor<F::Elem> {
    assert!(leg < t.degree());
    assert_eq!(functional.len(), t.dim());
    let mut out = SparseTensor::zero(t.dim(), t.degree() - 1);
    for (mut idx, c) in t.iter() {
        let v = &functional[idx.remove(leg)];
        if !field.is_zero(v) {
            out.add_term(field, &idx, mul_coef(field, c, v));
        }
    }
    out
}

/// Σ_i e_i ⊗ e_i: leg 0 labels the basis element carried on leg 1. Used to
/// check "for every basis h" identities as a single tensor identity.
pub fn basis_family<F: Field>(field: &F, dim: usize) -> SparseTensor<F::Elem> {
    let mut t = SparseTensor::zero(dim, 2);
    for i in 0..dim {
        t.add_term(field, &[i, i], field.one());
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclotomic;

    // k(ℤ/2) in the delta basis: δ_a δ_b = δ_{a,b} δ_a.
    fn delta_algebra(f: &Cyclotomic, n: usize) -> StructureConstants<crate::scalar::CycScalar> {
        StructureConstants::from_fn(f, n, vec![f.one(); n], |i, j| {
            if i == j {
                vec![(i, f.one())]
            } else {
                vec![]
            }
        })
    }

    #[test]
    fn idempotent_delta_products() {
        let f = Cyclotomic::new(1);
        let sc = delta_algebra(&f, 2);
        let x = SparseTensor::basis(&f, 2, &[0, 1]);
        assert_eq!(sc.multiply(&f, &x, &x).unwrap(), x);
        let y = SparseTensor::basis(&f, 2, &[1, 1]);
        assert!(sc.multiply(&f, &x, &y).unwrap().is_empty());
        let unit = sc.unit_tensor(&f, 2);
        assert_eq!(sc.multiply(&f, &unit, &y).unwrap(), y);
    }

    #[test]
    fn multi_source_collapse() {
        // (δ_0 + δ_1) ⊗ δ_1 collapsed with δ_1 on the left of leg 0 and the
        // second leg multiplied into the first: δ_1 δ_1 δ_1-type products.
        let f = Cyclotomic::new(1);
        let sc = delta_algebra(&f, 2);
        let mut a = SparseTensor::zero(2, 2);
        a.add_term(&f, &[0, 1], f.one());
        a.add_term(&f, &[1, 1], f.from_int(2));
        let b = SparseTensor::basis(&f, 2, &[1]);
        let r = contract(&f, &sc, &[&a, &b], &[&[(1, 0), (0, 0), (0, 1)]]);
        assert_eq!(r.degree(), 1);
        assert_eq!(r.get(&[1]), Some(&f.from_int(2)));
        assert_eq!(r.len(), 1);
    }

    #[test]
    #[should_panic(expected = "consumed")]
    fn unused_leg_is_rejected() {
        let f = Cyclotomic::new(1);
        let sc = delta_algebra(&f, 2);
        let a = SparseTensor::basis(&f, 2, &[0, 1]);
        let _ = contract(&f, &sc, &[&a], &[&[(0, 0)]]);
    }
}
