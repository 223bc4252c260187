//! The two ω-ratio expansions of `Ŵ₁₂Ŵ₁₃Ŵ₂₃` and `Ŵ₂₃Ŵ₁₂𝚽̄_S` on the
//! basis vectors `δ_a#1 ⊗ δ_b#a⁻¹ ⊗ δ_c#b⁻¹`.

use crate::algebra::SparseTensor;
use crate::heisenberg::{CanonicalElements, HeisenbergAlgebra};
use crate::quasi_hopf::{CheckReport, IdentityCheck};
use crate::scalar::Field;

use super::{Cocycle3, OmegaRatio};

/// Which expansion to corrupt, and which factor to delete from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corruption {
    pub right_side: bool,
    pub numerator: bool,
    pub factor: usize,
}

/// Coefficient of `Ŵ₁₂Ŵ₁₃Ŵ₂₃`.
pub fn pentagon_lhs_ratio(w: &Cocycle3, a: usize, b: usize, c: usize) -> OmegaRatio {
    let g = w.group();
    let (ai, bi, ci) = (g.inv(a), g.inv(b), g.inv(c));
    let (abi, aci, bci) = (g.mul(a, bi), g.mul(a, ci), g.mul(b, ci));
    let (cai, bai) = (g.mul(c, ai), g.mul(b, ai));
    OmegaRatio::new(
        vec![[abi, b, ai], [aci, c, ai], [bci, cai, abi], [c, ai, abi]],
        vec![
            [a, bi, b],
            [a, ai, abi],
            [a, ci, c],
            [a, ai, aci],
            [bai, aci, cai],
            [bai, abi, bci],
        ],
    )
}

/// Coefficient of `Ŵ₂₃Ŵ₁₂𝚽̄_S`.
pub fn pentagon_rhs_ratio(w: &Cocycle3, a: usize, b: usize, c: usize) -> OmegaRatio {
    let g = w.group();
    let (ai, bi, ci) = (g.inv(a), g.inv(b), g.inv(c));
    let (abi, bci) = (g.mul(a, bi), g.mul(b, ci));
    OmegaRatio::new(
        vec![[bci, c, bi], [abi, b, ai]],
        vec![[b, ci, c], [b, bi, bci], [a, bi, b], [a, ai, abi], [ai, abi, bci]],
    )
}

fn expansion<F: Field>(
    field: &F,
    w: &Cocycle3,
    ratio: impl Fn(usize, usize, usize) -> OmegaRatio,
) -> SparseTensor<F::Elem> {
    let g = w.group();
    let n = g.order();
    let e = g.identity();
    let mut t = SparseTensor::zero(n * n, 3);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let idx = [a * n + e, b * n + g.inv(a), c * n + g.inv(b)];
                t.add_term(field, &idx, ratio(a, b, c).value(field, w));
            }
        }
    }
    t
}

/// Both expansions for every `(a,b,c)`, compared with each other and with
/// the triple products evaluated in the generic ℋ₁(H).
pub fn check_section5_expansions<F: Field>(
    w: &Cocycle3,
    plain: &HeisenbergAlgebra<F>,
    generic: &CanonicalElements<F::Elem>,
    corruption: Option<Corruption>,
) -> CheckReport<F::Elem> {
    let field = plain.field();
    let corrupt = |right: bool, r: OmegaRatio| match corruption {
        Some(c) if c.right_side == right => r.without(c.numerator, c.factor),
        _ => r,
    };
    let left = expansion(field, w, |a, b, c| corrupt(false, pentagon_lhs_ratio(w, a, b, c)));
    let right = expansion(field, w, |a, b, c| corrupt(true, pentagon_rhs_ratio(w, a, b, c)));

    let embed = |legs| generic.w_hat.leg_embed(field, legs, 3, plain.unit()).expect("valid legs");
    let (h12, h13, h23) = (embed((1, 2)), embed((1, 3)), embed((2, 3)));
    let sc = plain.mult();
    let lhs = sc.multiply3(field, &h12, &h13, &h23, true).expect("equal shapes");
    let rhs = sc.multiply3(field, &h23, &h12, &generic.phi_bar_s, true).expect("equal shapes");

    let mut report = CheckReport::default();
    report.push(IdentityCheck::new(field, "expansions-agree", left.clone(), right.clone()));
    report.push(IdentityCheck::new(field, "expansion-lhs-generic", left, lhs));
    report.push(IdentityCheck::new(field, "expansion-rhs-generic", right, rhs));
    report
}
