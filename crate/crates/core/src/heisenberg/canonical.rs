use crate::algebra::SparseTensor;
use crate::quasi_hopf::{CheckReport, DerivedElements, IdentityCheck, QuasiHopfAlgebra};
use crate::scalar::Field;

use super::HeisenbergAlgebra;

/// Canonical elements, quasi-inverses and correction tensors.
///
/// `w`, `w_tilde`, `phi_bold_inv` and `phi_bold_321_s` live over ℋ₁(H*);
/// the others over ℋ₁(H).
#[derive(Clone, Debug)]
pub struct CanonicalElements<E> {
    /// `Σ ε#e_i ⊗ e^i#1`
    pub w: SparseTensor<E>,
    /// `Σ ε#S(e_iU¹) ⊗ e^i#U²`
    pub w_tilde: SparseTensor<E>,
    /// `Σ e_i#ε ⊗ 1#e^i`
    pub w_bar: SparseTensor<E>,
    /// `Σ S(Ṽ²e_i)#ε ⊗ Ṽ¹#e^i`
    pub w_hat: SparseTensor<E>,
    /// `ε#x¹ ⊗ ε#x² ⊗ ε#x³`
    pub phi_bold_inv: SparseTensor<E>,
    /// `ε#S(X³) ⊗ ε#S(X²) ⊗ ε#S(X¹)`
    pub phi_bold_321_s: SparseTensor<E>,
    /// `x³#ε ⊗ x²#ε ⊗ x¹#ε`
    pub phi_bar_inv_321: SparseTensor<E>,
    /// `S(X¹)#ε ⊗ S(X²)#ε ⊗ S(X³)#ε`
    pub phi_bar_s: SparseTensor<E>,
}

fn basis_vec<F: Field>(field: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn dense<F: Field>(field: &F, n: usize, v: &[(usize, F::Elem)]) -> Vec<F::Elem> {
    crate::algebra::to_dense(field, n, v)
}

fn pair<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> SparseTensor<F::Elem> {
    SparseTensor::from_vector(field, a).outer(field, &SparseTensor::from_vector(field, b))
}

pub fn canonical_elements<F: Field>(
    h: &QuasiHopfAlgebra<F>,
    dual: &HeisenbergAlgebra<F>,
    plain: &HeisenbergAlgebra<F>,
    derived: &DerivedElements<F::Elem>,
) -> CanonicalElements<F::Elem> {
    let field = h.field();
    let n = h.dim();
    let m = n * n;
    let eps = h.counit();
    let s = h.antipode();

    let mut w_tilde = SparseTensor::zero(m, 2);
    let mut w_hat = SparseTensor::zero(m, 2);
    for i in 0..n {
        let e_i = basis_vec(field, n, i);
        for (idx, c) in derived.u.iter() {
            let (p, q) = (idx[0], idx[1]);
            let s_eip = dense(field, n, &s.apply(field, h.mult().product(i, p)));
            let t = pair(field, &dual.smash(eps, &s_eip), &dual.smash(&e_i, &basis_vec(field, n, q)));
            w_tilde = w_tilde.add(field, &t.scale(field, c)).expect("same shape");
        }
        for (idx, c) in derived.v_tilde.iter() {
            let (p, q) = (idx[0], idx[1]);
            let s_eqi = dense(field, n, &s.apply(field, h.mult().product(q, i)));
            let t = pair(field, &plain.smash(eps, &s_eqi), &plain.smash(&e_i, &basis_vec(field, n, p)));
            w_hat = w_hat.add(field, &t.scale(field, c)).expect("same shape");
        }
    }

    let reversed_s = h.s_at(&h.associator().permute_legs(&[2, 1, 0]), &[0, 1, 2]);
    CanonicalElements {
        w: dual.canonical_element(),
        w_tilde,
        w_bar: plain.canonical_element(),
        w_hat,
        phi_bold_inv: dual.lift_with_counit(h.associator_inv()),
        phi_bold_321_s: dual.lift_with_counit(&reversed_s),
        phi_bar_inv_321: plain.lift_with_counit(&h.associator_inv().permute_legs(&[2, 1, 0])),
        phi_bar_s: plain.lift_with_counit(&h.s_at(h.associator(), &[0, 1, 2])),
    }
}

/// Compares `(AB)C` with `A(BC)` and returns the check with `(AB)C`.
pub fn check_parenthesization<F: Field>(
    ha: &HeisenbergAlgebra<F>,
    label: &str,
    a: &SparseTensor<F::Elem>,
    b: &SparseTensor<F::Elem>,
    c: &SparseTensor<F::Elem>,
) -> (IdentityCheck<F::Elem>, SparseTensor<F::Elem>) {
    let field = ha.field();
    let sc = ha.mult();
    let left = sc.multiply3(field, a, b, c, true).expect("equal shapes");
    let right = sc.multiply3(field, a, b, c, false).expect("equal shapes");
    (IdentityCheck::new(field, label, left.clone(), right), left)
}

fn embed<F: Field>(ha: &HeisenbergAlgebra<F>, t: &SparseTensor<F::Elem>, legs: (usize, usize)) -> SparseTensor<F::Elem> {
    t.leg_embed(ha.field(), legs, 3, ha.unit()).expect("valid legs")
}

/// Evaluates `lhs = rhs` for two triple products, each first checked for
/// independence of parenthesization.
fn triple_identity<F: Field>(
    ha: &HeisenbergAlgebra<F>,
    label: &str,
    lhs: [&SparseTensor<F::Elem>; 3],
    rhs: [&SparseTensor<F::Elem>; 3],
) -> CheckReport<F::Elem> {
    let mut report = CheckReport::default();
    let (pl, l) = check_parenthesization(ha, &format!("{label}/lhs-parenthesization"), lhs[0], lhs[1], lhs[2]);
    let (pr, r) = check_parenthesization(ha, &format!("{label}/rhs-parenthesization"), rhs[0], rhs[1], rhs[2]);
    report.push(pl);
    report.push(pr);
    report.push(IdentityCheck::new(ha.field(), label, l, r));
    report
}

/// `W₁₂W₁₃W₂₃ = W₂₃W₁₂𝚽⁻¹` and `W̃₂₃W̃₁₃W̃₁₂ = 𝚽^{321}_S W̃₁₂W̃₂₃` in ℋ₁(H*)^{⊗3}.
pub fn check_dual_double_identities<F: Field>(ce: &CanonicalElements<F::Elem>, dual: &HeisenbergAlgebra<F>) -> CheckReport<F::Elem> {
    let (w12, w13, w23) = (embed(dual, &ce.w, (1, 2)), embed(dual, &ce.w, (1, 3)), embed(dual, &ce.w, (2, 3)));
    let mut report = triple_identity(dual, "quasi-pentagon-W", [&w12, &w13, &w23], [&w23, &w12, &ce.phi_bold_inv]);
    let (t12, t13, t23) = (
        embed(dual, &ce.w_tilde, (1, 2)),
        embed(dual, &ce.w_tilde, (1, 3)),
        embed(dual, &ce.w_tilde, (2, 3)),
    );
    report.extend(triple_identity(
        dual,
        "quasi-hopf-W-tilde",
        [&t23, &t13, &t12],
        [&ce.phi_bold_321_s, &t12, &t23],
    ));
    report
}

/// `W̄₂₃W̄₁₃W̄₁₂ = (𝚽̄⁻¹)^{321}W̄₁₂W̄₂₃` and `Ŵ₁₂Ŵ₁₃Ŵ₂₃ = Ŵ₂₃Ŵ₁₂𝚽̄_S` in ℋ₁(H)^{⊗3}.
pub fn check_plain_double_identities<F: Field>(ce: &CanonicalElements<F::Elem>, plain: &HeisenbergAlgebra<F>) -> CheckReport<F::Elem> {
    let (b12, b13, b23) = (
        embed(plain, &ce.w_bar, (1, 2)),
        embed(plain, &ce.w_bar, (1, 3)),
        embed(plain, &ce.w_bar, (2, 3)),
    );
    let mut report = triple_identity(
        plain,
        "quasi-hopf-W-bar",
        [&b23, &b13, &b12],
        [&ce.phi_bar_inv_321, &b12, &b23],
    );
    let (h12, h13, h23) = (
        embed(plain, &ce.w_hat, (1, 2)),
        embed(plain, &ce.w_hat, (1, 3)),
        embed(plain, &ce.w_hat, (2, 3)),
    );
    report.extend(triple_identity(
        plain,
        "quasi-pentagon-W-hat",
        [&h12, &h13, &h23],
        [&h23, &h12, &ce.phi_bar_s],
    ));
    report
}

/// `(x·y, y·x)` for a canonical element and its quasi-inverse.
pub fn quasi_inverse_products<F: Field>(
    ha: &HeisenbergAlgebra<F>,
    x: &SparseTensor<F::Elem>,
    y: &SparseTensor<F::Elem>,
) -> (SparseTensor<F::Elem>, SparseTensor<F::Elem>) {
    let field = ha.field();
    let sc = ha.mult();
    (
        sc.multiply(field, x, y).expect("equal shapes"),
        sc.multiply(field, y, x).expect("equal shapes"),
    )
}
