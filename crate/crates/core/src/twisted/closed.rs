//! Closed forms for k^ω(G) and its Heisenberg doubles, with comparisons
//! against the generic constructions.
//!
//! Basis identification: the dual basis vector `e^g` of k(G)* is the group
//! element `g`, so `g#δ_a` sits at `g * n + a` in ℋ₁^ω(G*) and `δ_a#g` at
//! `a * n + g` in ℋ₁^ω(G).

use crate::algebra::{LinearMap, SparseTensor, StructureConstants};
use crate::heisenberg::{CanonicalElements, HeisenbergAlgebra, Variant};
use crate::quasi_hopf::{CheckReport, IdentityCheck};
use crate::scalar::Field;

use super::{Cocycle3, OmegaRatio};

/// Closed-form U and Ṽ together with the canonical elements.
#[derive(Clone, Debug)]
pub struct ClosedForms<E> {
    pub u: SparseTensor<E>,
    pub v_tilde: SparseTensor<E>,
    pub elements: CanonicalElements<E>,
}

fn counit_vec<F: Field>(field: &F, w: &Cocycle3) -> Vec<F::Elem> {
    let g = w.group();
    (0..g.order())
        .map(|a| if a == g.identity() { field.one() } else { field.zero() })
        .collect()
}

/// ℋ₁^ω(G*): `(g#δ_a)(h#δ_b) = δ_{a,hb} ω(g,h,b) gh#δ_b` and
/// `(g#δ_a)◁δ_b = δ_{b,g} g#δ_a`.
pub fn closed_form_dual_double<F: Field>(field: &F, w: &Cocycle3) -> HeisenbergAlgebra<F> {
    let g = w.group();
    let n = g.order();
    let e = g.identity();
    let mut unit = vec![field.zero(); n * n];
    for v in 0..n {
        unit[e * n + v] = field.one();
    }
    let mult = StructureConstants::from_fn(field, n * n, unit, |x, y| {
        let (gx, a) = (x / n, x % n);
        let (hy, b) = (y / n, y % n);
        if a != g.mul(hy, b) {
            return vec![];
        }
        vec![(g.mul(gx, hy) * n + b, w.value(field, gx, hy, b))]
    });
    let action = (0..n)
        .map(|b| {
            let cols = (0..n * n).map(|x| if x / n == b { vec![(x, field.one())] } else { vec![] }).collect();
            LinearMap::from_columns(field, cols)
        })
        .collect();
    HeisenbergAlgebra::from_parts(
        field.clone(),
        Variant::DualFirst,
        mult,
        action,
        counit_vec(field, w),
        vec![field.one(); n],
    )
}

/// ℋ₁^ω(G): `(δ_a#g)(δ_b#h) = δ_{b,ag} ω(a,g,h) δ_a#gh` and
/// `δ_b▷(δ_a#g) = δ_{b,g} δ_a#g`.
pub fn closed_form_plain_double<F: Field>(field: &F, w: &Cocycle3) -> HeisenbergAlgebra<F> {
    let g = w.group();
    let n = g.order();
    let e = g.identity();
    let mut unit = vec![field.zero(); n * n];
    for v in 0..n {
        unit[v * n + e] = field.one();
    }
    let mult = StructureConstants::from_fn(field, n * n, unit, |x, y| {
        let (a, gx) = (x / n, x % n);
        let (b, hy) = (y / n, y % n);
        if b != g.mul(a, gx) {
            return vec![];
        }
        vec![(a * n + g.mul(gx, hy), w.value(field, a, gx, hy))]
    });
    let action = (0..n)
        .map(|b| {
            let cols = (0..n * n).map(|x| if x % n == b { vec![(x, field.one())] } else { vec![] }).collect();
            LinearMap::from_columns(field, cols)
        })
        .collect();
    HeisenbergAlgebra::from_parts(
        field.clone(),
        Variant::PlainFirst,
        mult,
        action,
        counit_vec(field, w),
        vec![field.one(); n],
    )
}

pub fn u_ratio(w: &Cocycle3, a: usize, b: usize) -> OmegaRatio {
    let g = w.group();
    let (ai, bi) = (g.inv(a), g.inv(b));
    OmegaRatio::new(vec![], vec![[g.mul(bi, ai), a, b]])
}

pub fn v_tilde_ratio(w: &Cocycle3, a: usize, b: usize) -> OmegaRatio {
    let g = w.group();
    let (ai, bi) = (g.inv(a), g.inv(b));
    let biai = g.mul(bi, ai);
    OmegaRatio::new(vec![[biai, a, b]], vec![[bi, ai, a], [bi, b, biai]])
}

pub fn w_tilde_ratio(w: &Cocycle3, a: usize, b: usize) -> OmegaRatio {
    let g = w.group();
    let (ai, bi) = (g.inv(a), g.inv(b));
    OmegaRatio::new(vec![], vec![[g.mul(bi, a), ai, b]])
}

pub fn w_hat_ratio(w: &Cocycle3, a: usize, b: usize) -> OmegaRatio {
    let g = w.group();
    let (ai, bi) = (g.inv(a), g.inv(b));
    let abi = g.mul(a, bi);
    OmegaRatio::new(vec![[abi, b, ai]], vec![[a, bi, b], [a, ai, abi]])
}

/// Every closed form: U, Ṽ, W, W̃, W̄, Ŵ and the four correction tensors.
pub fn closed_form_elements<F: Field>(field: &F, w: &Cocycle3) -> ClosedForms<F::Elem> {
    let g = w.group();
    let n = g.order();
    let m = n * n;
    let e = g.identity();
    let one = field.one();
    let mut u = SparseTensor::zero(n, 2);
    let mut v_tilde = SparseTensor::zero(n, 2);
    let mut w_el = SparseTensor::zero(m, 2);
    let mut w_tilde = SparseTensor::zero(m, 2);
    let mut w_bar = SparseTensor::zero(m, 2);
    let mut w_hat = SparseTensor::zero(m, 2);
    for a in 0..n {
        for b in 0..n {
            u.add_term(field, &[a, b], u_ratio(w, a, b).value(field, w));
            v_tilde.add_term(field, &[a, b], v_tilde_ratio(w, a, b).value(field, w));
            // (1#δ_a) ⊗ (a⁻¹#δ_b) and (δ_a#1) ⊗ (δ_b#a⁻¹)
            let ai = g.inv(a);
            w_tilde.add_term(field, &[e * n + a, ai * n + b], w_tilde_ratio(w, a, b).value(field, w));
            w_hat.add_term(field, &[a * n + e, b * n + ai], w_hat_ratio(w, a, b).value(field, w));
            // Σ_g (1#δ_g) ⊗ (g#1) and Σ_g (δ_g#1) ⊗ (1#g), with (a, b) = (g, v)
            w_el.add_term(field, &[e * n + a, a * n + b], one.clone());
            w_bar.add_term(field, &[a * n + e, b * n + a], one.clone());
        }
    }
    let mut phi_bold_inv = SparseTensor::zero(m, 3);
    let mut phi_bold_321_s = SparseTensor::zero(m, 3);
    let mut phi_bar_inv_321 = SparseTensor::zero(m, 3);
    let mut phi_bar_s = SparseTensor::zero(m, 3);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (ai, bi, ci) = (g.inv(a), g.inv(b), g.inv(c));
                let dual = [e * n + a, e * n + b, e * n + c];
                let plain = [a * n + e, b * n + e, c * n + e];
                let val = |r: OmegaRatio| r.value(field, w);
                phi_bold_inv.add_term(field, &dual, val(OmegaRatio::new(vec![[a, b, c]], vec![])));
                phi_bold_321_s.add_term(field, &dual, val(OmegaRatio::new(vec![], vec![[ci, bi, ai]])));
                phi_bar_inv_321.add_term(field, &plain, val(OmegaRatio::new(vec![[c, b, a]], vec![])));
                phi_bar_s.add_term(field, &plain, val(OmegaRatio::new(vec![], vec![[ai, bi, ci]])));
            }
        }
    }
    ClosedForms {
        u,
        v_tilde,
        elements: CanonicalElements {
            w: w_el,
            w_tilde,
            w_bar,
            w_hat,
            phi_bold_inv,
            phi_bold_321_s,
            phi_bar_inv_321,
            phi_bar_s,
        },
    }
}

fn table_tensor<F: Field>(field: &F, sc: &StructureConstants<F::Elem>) -> SparseTensor<F::Elem> {
    let d = sc.dim();
    let mut t = SparseTensor::zero(d, 3);
    for i in 0..d {
        for j in 0..d {
            for (k, c) in sc.product(i, j) {
                t.add_term(field, &[i, j, *k], c.clone());
            }
        }
    }
    t
}

fn action_tensor<F: Field>(field: &F, ha: &HeisenbergAlgebra<F>) -> SparseTensor<F::Elem> {
    let mut t = SparseTensor::zero(ha.dim(), 3);
    for j in 0..ha.base_dim() {
        for x in 0..ha.dim() {
            for (y, c) in ha.action(j).column(x) {
                t.add_term(field, &[j, x, *y], c.clone());
            }
        }
    }
    t
}

/// Closed-form U and Ṽ against the generic ones.
pub fn compare_u_vtilde<F: Field>(
    field: &F,
    w: &Cocycle3,
    u: &SparseTensor<F::Elem>,
    v_tilde: &SparseTensor<F::Elem>,
) -> CheckReport<F::Elem> {
    let cf = closed_form_elements(field, w);
    let mut report = CheckReport::default();
    report.push(IdentityCheck::new(field, "closed-form-U", cf.u, u.clone()));
    report.push(IdentityCheck::new(field, "closed-form-V-tilde", cf.v_tilde, v_tilde.clone()));
    report
}

/// Closed-form products, units and actions of both doubles against the
/// generic doubles.
pub fn compare_doubles<F: Field>(
    field: &F,
    w: &Cocycle3,
    dual: &HeisenbergAlgebra<F>,
    plain: &HeisenbergAlgebra<F>,
) -> CheckReport<F::Elem> {
    let mut report = CheckReport::default();
    let pairs = [
        ("dual", closed_form_dual_double(field, w), dual),
        ("plain", closed_form_plain_double(field, w), plain),
    ];
    for (name, closed, generic) in pairs {
        report.push(IdentityCheck::new(
            field,
            &format!("closed-form-{name}-product"),
            table_tensor(field, closed.mult()),
            table_tensor(field, generic.mult()),
        ));
        report.push(IdentityCheck::new(
            field,
            &format!("closed-form-{name}-unit"),
            SparseTensor::from_vector(field, closed.unit()),
            SparseTensor::from_vector(field, generic.unit()),
        ));
        report.push(IdentityCheck::new(
            field,
            &format!("closed-form-{name}-action"),
            action_tensor(field, &closed),
            action_tensor(field, generic),
        ));
    }
    report
}

/// Closed-form canonical elements, quasi-inverses and correction tensors
/// against the generic ones.
pub fn compare_canonical<F: Field>(field: &F, w: &Cocycle3, generic: &CanonicalElements<F::Elem>) -> CheckReport<F::Elem> {
    let cf = closed_form_elements(field, w).elements;
    let mut report = CheckReport::default();
    let pairs = [
        ("closed-form-W", cf.w, &generic.w),
        ("closed-form-W-tilde", cf.w_tilde, &generic.w_tilde),
        ("closed-form-W-bar", cf.w_bar, &generic.w_bar),
        ("closed-form-W-hat", cf.w_hat, &generic.w_hat),
        ("closed-form-Phi-inv", cf.phi_bold_inv, &generic.phi_bold_inv),
        ("closed-form-Phi-321-S", cf.phi_bold_321_s, &generic.phi_bold_321_s),
        ("closed-form-Phi-bar-inv-321", cf.phi_bar_inv_321, &generic.phi_bar_inv_321),
        ("closed-form-Phi-bar-S", cf.phi_bar_s, &generic.phi_bar_s),
    ];
    for (label, closed, gen) in pairs {
        report.push(IdentityCheck::new(field, label, closed, gen.clone()));
    }
    report
}
