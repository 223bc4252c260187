//! The first Heisenberg doubles ℋ₁(H*) on H*⊗H and ℋ₁(H) on H⊗H*.
//!
//! Both are stored on `n²` basis elements indexed `first * n + second`,
//! where `n = dim H`: `e^i # e_j` at `i * n + j` for ℋ₁(H*) and
//! `e_j # e^i` at `j * n + i` for ℋ₁(H).

mod canonical;
mod probe;

use std::collections::BTreeMap;

use crate::algebra::{accumulate, mul_coef, to_sparse, HarpoonTables, LinearMap, SparseTensor, SparseVec, StructureConstants};
use crate::quasi_hopf::{CheckReport, IdentityCheck, QuasiHopfAlgebra};
use crate::scalar::Field;

pub use canonical::{
    canonical_elements, check_parenthesization, check_dual_double_identities, check_plain_double_identities, quasi_inverse_products,
    CanonicalElements,
};
pub use probe::{probe_invertibility, InvertibilityProbe, Obstruction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// ℋ₁(H*) on H*⊗H with a right H-action.
    DualFirst,
    /// ℋ₁(H) on H⊗H* with a left H-action.
    PlainFirst,
}

/// A (generally nonassociative) Heisenberg double with its H-action.
#[derive(Clone, Debug)]
pub struct HeisenbergAlgebra<F: Field> {
    field: F,
    variant: Variant,
    n: usize,
    mult: StructureConstants<F::Elem>,
    /// `action[j]` is the action of `e_j`.
    action: Vec<LinearMap<F::Elem>>,
    counit: Vec<F::Elem>,
    h_unit: Vec<F::Elem>,
}

fn sparse_map<F: Field>(field: &F, acc: &mut BTreeMap<(usize, usize), F::Elem>, key: (usize, usize), c: F::Elem) {
    if field.is_zero(&c) {
        return;
    }
    match acc.get_mut(&key) {
        Some(e) => {
            field.add_assign(e, &c);
            if field.is_zero(e) {
                acc.remove(&key);
            }
        }
        None => {
            acc.insert(key, c);
        }
    }
}

/// `ξ ∗ ν` for sparse functionals.
fn convolve<F: Field>(field: &F, h: &QuasiHopfAlgebra<F>, xi: &[(usize, F::Elem)], nu: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::new();
    for (j, a) in xi {
        for (k, b) in nu {
            let ab = mul_coef(field, a, b);
            for (i, c) in h.coproduct().dual_terms(*j, *k) {
                accumulate(field, &mut out, *i, mul_coef(field, &ab, c));
            }
        }
    }
    out
}

/// `Σ c_w (e_w ⇀ e^k)` or `Σ c_w (e^k ↼ e_w)` for a sparse vector `w`.
fn harpoon_vec<F: Field>(
    field: &F,
    tables: &HarpoonTables<F::Elem>,
    w: &[(usize, F::Elem)],
    k: usize,
    left: bool,
) -> SparseVec<F::Elem> {
    let mut out = Vec::new();
    for (j, c) in w {
        let part = if left { tables.left(*j, k) } else { tables.right(k, *j) };
        for (u, d) in part {
            accumulate(field, &mut out, *u, mul_coef(field, c, d));
        }
    }
    out
}

fn associator_inv_terms<F: Field>(h: &QuasiHopfAlgebra<F>) -> Vec<(Vec<usize>, F::Elem)> {
    h.associator_inv().iter().map(|(idx, c)| (idx, c.clone())).collect()
}

/// ℋ₁(H*): `(ξ#a)(ν#b) = (x¹⇀ξ)∗(x²a_1⇀ν) # x³a_2b`, unit `ε#1`.
pub fn build_h1_dual<F: Field>(h: &QuasiHopfAlgebra<F>) -> HeisenbergAlgebra<F> {
    let field = h.field();
    let n = h.dim();
    let tables = HarpoonTables::new(field, h.mult());
    let x = associator_inv_terms(h);
    let mut mult = StructureConstants::new(n * n, pair_vector(field, h.counit(), h.unit()));
    for i in 0..n {
        for a in 0..n {
            for k in 0..n {
                // (u, v) ↦ coefficient of e^u # e_v before multiplying by b
                let mut acc = BTreeMap::new();
                for (idx, c) in &x {
                    let (p, q, r) = (idx[0], idx[1], idx[2]);
                    let xi = tables.left(p, i);
                    if xi.is_empty() {
                        continue;
                    }
                    for (s, t, d) in h.coproduct().of(a) {
                        let nu = harpoon_vec(field, &tables, h.mult().product(q, *s), k, true);
                        if nu.is_empty() {
                            continue;
                        }
                        let conv = convolve(field, h, xi, &nu);
                        let cd = mul_coef(field, c, d);
                        for (u, cu) in &conv {
                            for (v, cv) in h.mult().product(r, *t) {
                                sparse_map(field, &mut acc, (*u, *v), mul_coef(field, &cd, &mul_coef(field, cu, cv)));
                            }
                        }
                    }
                }
                for b in 0..n {
                    let mut prod = Vec::new();
                    for ((u, v), c) in &acc {
                        for (w, cw) in h.mult().product(*v, b) {
                            accumulate(field, &mut prod, u * n + w, mul_coef(field, c, cw));
                        }
                    }
                    mult.set(field, i * n + a, k * n + b, prod);
                }
            }
        }
    }
    let action = (0..n)
        .map(|j| {
            LinearMap::from_columns(
                field,
                (0..n * n)
                    .map(|col| {
                        let (i, a) = (col / n, col % n);
                        tables.right(i, j).iter().map(|(u, c)| (u * n + a, c.clone())).collect()
                    })
                    .collect(),
            )
        })
        .collect();
    HeisenbergAlgebra {
        field: field.clone(),
        variant: Variant::DualFirst,
        n,
        mult,
        action,
        counit: h.counit().to_vec(),
        h_unit: h.unit().to_vec(),
    }
}

/// ℋ₁(H): `(a#ξ)(b#ν) = ab_1x¹ # (ξ↼b_2x²)∗(ν↼x³)`, unit `1#ε`.
pub fn build_h1<F: Field>(h: &QuasiHopfAlgebra<F>) -> HeisenbergAlgebra<F> {
    let field = h.field();
    let n = h.dim();
    let tables = HarpoonTables::new(field, h.mult());
    let x = associator_inv_terms(h);
    let mut mult = StructureConstants::new(n * n, pair_vector(field, h.unit(), h.counit()));
    for i in 0..n {
        for b in 0..n {
            for k in 0..n {
                // (v, u) ↦ coefficient of e_v # e^u before multiplying by a
                let mut acc = BTreeMap::new();
                for (idx, c) in &x {
                    let (p, q, r) = (idx[0], idx[1], idx[2]);
                    let nu = tables.right(k, r);
                    if nu.is_empty() {
                        continue;
                    }
                    for (s, t, d) in h.coproduct().of(b) {
                        let xi = harpoon_vec(field, &tables, h.mult().product(*t, q), i, false);
                        if xi.is_empty() {
                            continue;
                        }
                        let conv = convolve(field, h, &xi, nu);
                        let cd = mul_coef(field, c, d);
                        for (v, cv) in h.mult().product(*s, p) {
                            for (u, cu) in &conv {
                                sparse_map(field, &mut acc, (*v, *u), mul_coef(field, &cd, &mul_coef(field, cv, cu)));
                            }
                        }
                    }
                }
                for a in 0..n {
                    let mut prod = Vec::new();
                    for ((v, u), c) in &acc {
                        for (w, cw) in h.mult().product(a, *v) {
                            accumulate(field, &mut prod, w * n + u, mul_coef(field, c, cw));
                        }
                    }
                    mult.set(field, a * n + i, b * n + k, prod);
                }
            }
        }
    }
    let action = (0..n)
        .map(|j| {
            LinearMap::from_columns(
                field,
                (0..n * n)
                    .map(|col| {
                        let (a, i) = (col / n, col % n);
                        tables.left(j, i).iter().map(|(u, c)| (a * n + u, c.clone())).collect()
                    })
                    .collect(),
            )
        })
        .collect();
    HeisenbergAlgebra {
        field: field.clone(),
        variant: Variant::PlainFirst,
        n,
        mult,
        action,
        counit: h.counit().to_vec(),
        h_unit: h.unit().to_vec(),
    }
}

/// `Σ first_i second_j` at `i * n + j`.
fn pair_vector<F: Field>(field: &F, first: &[F::Elem], second: &[F::Elem]) -> Vec<F::Elem> {
    let n = first.len();
    let mut out = vec![field.zero(); n * n];
    for (i, a) in first.iter().enumerate() {
        for (j, b) in second.iter().enumerate() {
            if !field.is_zero(a) && !field.is_zero(b) {
                out[i * n + j] = field.mul(a, b);
            }
        }
    }
    out
}

impl<F: Field> HeisenbergAlgebra<F> {
    /// Builds an algebra directly from tables, e.g. from closed forms.
    pub fn from_parts(
        field: F,
        variant: Variant,
        mult: StructureConstants<F::Elem>,
        action: Vec<LinearMap<F::Elem>>,
        counit: Vec<F::Elem>,
        h_unit: Vec<F::Elem>,
    ) -> Self {
        let n = counit.len();
        assert_eq!(mult.dim(), n * n);
        assert_eq!(action.len(), n);
        HeisenbergAlgebra {
            field,
            variant,
            n,
            mult,
            action,
            counit,
            h_unit,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// `dim H`.
    pub fn base_dim(&self) -> usize {
        self.n
    }

    /// `(dim H)²`.
    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn mult(&self) -> &StructureConstants<F::Elem> {
        &self.mult
    }

    pub fn unit(&self) -> &[F::Elem] {
        self.mult.unit()
    }

    /// Action of the basis element `e_j` of H.
    pub fn action(&self, j: usize) -> &LinearMap<F::Elem> {
        &self.action[j]
    }

    /// Basis index of `first # second`.
    pub fn index(&self, first: usize, second: usize) -> usize {
        first * self.n + second
    }

    /// `ξ # h` (ℋ₁(H*)) or `h # ξ` (ℋ₁(H)) for a functional `ξ` and an
    /// element `h` of H, as a vector.
    pub fn smash(&self, functional: &[F::Elem], element: &[F::Elem]) -> Vec<F::Elem> {
        match self.variant {
            Variant::DualFirst => pair_vector(&self.field, functional, element),
            Variant::PlainFirst => pair_vector(&self.field, element, functional),
        }
    }

    /// `W = Σ ε#e_i ⊗ e^i#1` in ℋ₁(H*)^{⊗2} or `W̄ = Σ e_i#ε ⊗ 1#e^i` in
    /// ℋ₁(H)^{⊗2}.
    pub fn canonical_element(&self) -> SparseTensor<F::Elem> {
        let field = &self.field;
        let mut w = SparseTensor::zero(self.dim(), 2);
        for i in 0..self.n {
            let mut e_i = vec![field.zero(); self.n];
            e_i[i] = field.one();
            let first = SparseTensor::from_vector(field, &self.smash(&self.counit, &e_i));
            let second = SparseTensor::from_vector(field, &self.smash(&e_i, &self.h_unit));
            w = w.add(field, &first.outer(field, &second)).expect("same shape");
        }
        w
    }

    /// Sends every leg `h` of a tensor over H to `ε#h` (ℋ₁(H*)) or `h#ε`
    /// (ℋ₁(H)).
    pub fn lift_with_counit(&self, t: &SparseTensor<F::Elem>) -> SparseTensor<F::Elem> {
        let eps = to_sparse(&self.field, &self.counit);
        let mut out = SparseTensor::zero(self.dim(), t.degree());
        for (idx, c) in t.iter() {
            let mut counters = vec![0usize; idx.len()];
            loop {
                let mut coef = c.clone();
                let mut new = Vec::with_capacity(idx.len());
                for (l, &h) in idx.iter().enumerate() {
                    let (u, e) = &eps[counters[l]];
                    coef = mul_coef(&self.field, &coef, e);
                    new.push(match self.variant {
                        Variant::DualFirst => self.index(*u, h),
                        Variant::PlainFirst => self.index(h, *u),
                    });
                }
                out.add_term(&self.field, &new, coef);
                if !crate::algebra::advance_counters(&mut counters, eps.len()) {
                    break;
                }
            }
        }
        out
    }

    fn mul_vec(&self, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        self.mult.mul_vec(&self.field, a, b)
    }

    fn check(&self, label: &str, lhs: SparseTensor<F::Elem>, rhs: SparseTensor<F::Elem>) -> IdentityCheck<F::Elem> {
        IdentityCheck::new(&self.field, label, lhs, rhs)
    }

    /// Unit laws, the action axioms and the two ε-specialized product forms,
    /// each as a labelled tensor identity over all basis inputs.
    pub fn check_structure(&self, h: &QuasiHopfAlgebra<F>) -> CheckReport<F::Elem> {
        let field = &self.field;
        let (n, m) = (self.n, self.dim());
        let mut report = CheckReport::default();
        let unit = to_sparse(field, self.unit());

        let mut left = SparseTensor::zero(m, 2);
        let mut right = SparseTensor::zero(m, 2);
        let mut ident = SparseTensor::zero(m, 2);
        for x in 0..m {
            let e = [(x, field.one())];
            for (k, c) in self.mul_vec(&unit, &e) {
                left.add_term(field, &[x, k], c);
            }
            for (k, c) in self.mul_vec(&e, &unit) {
                right.add_term(field, &[x, k], c);
            }
            ident.add_term(field, &[x, x], field.one());
        }
        report.push(self.check("heisenberg-unit-left", left, ident.clone()));
        report.push(self.check("heisenberg-unit-right", right, ident.clone()));

        // action by 1 and compatibility with the product of H
        let mut by_unit = SparseTensor::zero(m, 2);
        for (j, c) in h.unit().iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            for x in 0..m {
                for (k, d) in self.action[j].column(x) {
                    by_unit.add_term(field, &[x, *k], mul_coef(field, c, d));
                }
            }
        }
        report.push(self.check("action-unit", by_unit, ident));
        let mut twice = SparseTensor::zero(m, 4);
        let mut once = SparseTensor::zero(m, 4);
        for j in 0..n {
            for k in 0..n {
                // right action: (x◁e_j)◁e_k = x◁(e_j e_k); left: e_j▷(e_k▷x) = (e_j e_k)▷x
                let (first, second) = match self.variant {
                    Variant::DualFirst => (j, k),
                    Variant::PlainFirst => (k, j),
                };
                let composed = self.action[second].compose(field, &self.action[first]);
                let mut product_map = vec![Vec::new(); m];
                for (p, c) in h.mult().product(j, k) {
                    for (x, col) in product_map.iter_mut().enumerate() {
                        for (y, d) in self.action[*p].column(x) {
                            accumulate(field, col, *y, mul_coef(field, c, d));
                        }
                    }
                }
                for x in 0..m {
                    for (y, c) in composed.column(x) {
                        twice.add_term(field, &[j, k, x, *y], c.clone());
                    }
                    for (y, c) in &product_map[x] {
                        once.add_term(field, &[j, k, x, *y], c.clone());
                    }
                }
            }
        }
        report.push(self.check("action-compatibility", twice, once));

        let (first, second) = self.specializations(h);
        report.push(first);
        report.push(second);
        report
    }

    fn specializations(&self, h: &QuasiHopfAlgebra<F>) -> (IdentityCheck<F::Elem>, IdentityCheck<F::Elem>) {
        let field = &self.field;
        let (n, m) = (self.n, self.dim());
        let eps = to_sparse(field, &self.counit);
        let tables = HarpoonTables::new(field, h.mult());
        // ε#e_b or e_b#ε
        let with_eps = |b: usize| -> SparseVec<F::Elem> {
            eps.iter()
                .map(|(u, c)| {
                    let idx = match self.variant {
                        Variant::DualFirst => self.index(*u, b),
                        Variant::PlainFirst => self.index(b, *u),
                    };
                    (idx, c.clone())
                })
                .collect()
        };
        let mut l1 = SparseTensor::zero(m, 4);
        let mut r1 = SparseTensor::zero(m, 4);
        let mut l2 = SparseTensor::zero(m, 4);
        let mut r2 = SparseTensor::zero(m, 4);
        for p in 0..n {
            for q in 0..n {
                for b in 0..n {
                    match self.variant {
                        Variant::DualFirst => {
                            // (ξ#a)(ε#b) = ξ#ab with ξ = e^p, a = e_q
                            let x = [(self.index(p, q), field.one())];
                            for (k, c) in self.mul_vec(&x, &with_eps(b)) {
                                l1.add_term(field, &[p, q, b, k], c);
                            }
                            for (w, c) in h.mult().product(q, b) {
                                r1.add_term(field, &[p, q, b, self.index(p, *w)], c.clone());
                            }
                            // (ε#a)(ν#b) = (a_1⇀ν)#a_2b with a = e_p, ν = e^q
                            let y = [(self.index(q, b), field.one())];
                            for (k, c) in self.mul_vec(&with_eps(p), &y) {
                                l2.add_term(field, &[p, q, b, k], c);
                            }
                            for (s, t, d) in h.coproduct().of(p) {
                                for (u, cu) in tables.left(*s, q) {
                                    for (w, cw) in h.mult().product(*t, b) {
                                        let c = mul_coef(field, d, &mul_coef(field, cu, cw));
                                        r2.add_term(field, &[p, q, b, self.index(*u, *w)], c);
                                    }
                                }
                            }
                        }
                        Variant::PlainFirst => {
                            // (a#ε)(b#ν) = ab#ν with a = e_p, ν = e^q
                            let y = [(self.index(b, q), field.one())];
                            for (k, c) in self.mul_vec(&with_eps(p), &y) {
                                l1.add_term(field, &[p, q, b, k], c);
                            }
                            for (w, c) in h.mult().product(p, b) {
                                r1.add_term(field, &[p, q, b, self.index(*w, q)], c.clone());
                            }
                            // (a#ξ)(b#ε) = ab_1#(ξ↼b_2) with a = e_p, ξ = e^q
                            let x = [(self.index(p, q), field.one())];
                            for (k, c) in self.mul_vec(&x, &with_eps(b)) {
                                l2.add_term(field, &[p, q, b, k], c);
                            }
                            for (s, t, d) in h.coproduct().of(b) {
                                for (w, cw) in h.mult().product(p, *s) {
                                    for (u, cu) in tables.right(q, *t) {
                                        let c = mul_coef(field, d, &mul_coef(field, cw, cu));
                                        r2.add_term(field, &[p, q, b, self.index(*w, *u)], c);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let (a, b) = match self.variant {
            Variant::DualFirst => ("counit-right-factor", "counit-left-factor"),
            Variant::PlainFirst => ("counit-left-factor", "counit-right-factor"),
        };
        (self.check(a, l1, r1), self.check(b, l2, r2))
    }
}
