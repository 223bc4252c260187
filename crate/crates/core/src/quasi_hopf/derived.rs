use crate::algebra::SparseTensor;
use crate::scalar::Field;

use super::{CheckReport, QuasiHopfAlgebra, QuasiHopfError};

type T<F> = SparseTensor<<F as Field>::Elem>;

/// γ, δ and the Drinfel'd twist `f` with its inverse `f⁻¹ = g¹⊗g²`.
#[derive(Clone, Debug)]
pub struct Twist<E> {
    pub gamma: SparseTensor<E>,
    pub delta: SparseTensor<E>,
    pub f: SparseTensor<E>,
    pub f_inv: SparseTensor<E>,
}

/// Every element derived from the quasi-Hopf structure.
#[derive(Clone, Debug)]
pub struct DerivedElements<E> {
    pub twist: Twist<E>,
    pub q_r: SparseTensor<E>,
    pub p_l: SparseTensor<E>,
    pub u: SparseTensor<E>,
    pub v_tilde: SparseTensor<E>,
}

impl<E: Clone> DerivedElements<E> {
    pub fn compute<F: Field<Elem = E>>(h: &QuasiHopfAlgebra<F>) -> Result<Self, QuasiHopfError> {
        let twist = compute_twist(h)?;
        let (q_r, p_l) = compute_qr_pl(h)?;
        let (u, v_tilde) = compute_u_vtilde(h, &twist, &q_r, &p_l);
        Ok(DerivedElements {
            twist,
            q_r,
            p_l,
            u,
            v_tilde,
        })
    }
}

/// `S(X²x¹_2)αX³x² ⊗ S(X¹x¹_1)αx³`
fn gamma_first<F: Field>(h: &QuasiHopfAlgebra<F>) -> T<F> {
    let a = h.vector(h.alpha());
    let big = h.s_at(h.associator(), &[0, 1]);
    let small = h.s_at(&h.delta_at(h.associator_inv(), 0), &[0, 1]);
    h.contract(
        &[&big, &small, &a, &a],
        &[&[(1, 1), (0, 1), (2, 0), (0, 2), (1, 2)], &[(1, 0), (0, 0), (3, 0), (1, 3)]],
    )
}

/// `S(x¹X²)αx²X³_1 ⊗ S(X¹)αx³X³_2`
fn gamma_second<F: Field>(h: &QuasiHopfAlgebra<F>) -> T<F> {
    let a = h.vector(h.alpha());
    let big = h.s_at(&h.delta_at(h.associator(), 2), &[0, 1]);
    let small = h.s_at(h.associator_inv(), &[0]);
    h.contract(
        &[&big, &small, &a, &a],
        &[&[(0, 1), (1, 0), (2, 0), (1, 1), (0, 2)], &[(0, 0), (3, 0), (1, 2), (0, 3)]],
    )
}

/// `X¹_1x¹βS(X³) ⊗ X¹_2x²βS(X²x³)`
fn delta_first<F: Field>(h: &QuasiHopfAlgebra<F>) -> T<F> {
    let b = h.vector(h.beta());
    let big = h.s_at(&h.delta_at(h.associator(), 0), &[2, 3]);
    let small = h.s_at(h.associator_inv(), &[2]);
    h.contract(
        &[&big, &small, &b, &b],
        &[&[(0, 0), (1, 0), (2, 0), (0, 3)], &[(0, 1), (1, 1), (3, 0), (1, 2), (0, 2)]],
    )
}

/// `x¹βS(x³_2X³) ⊗ x²X¹βS(x³_1X²)`
fn delta_second<F: Field>(h: &QuasiHopfAlgebra<F>) -> T<F> {
    let b = h.vector(h.beta());
    let small = h.s_at(&h.delta_at(h.associator_inv(), 2), &[2, 3]);
    let big = h.s_at(h.associator(), &[1, 2]);
    h.contract(
        &[&small, &big, &b, &b],
        &[&[(0, 0), (2, 0), (1, 2), (0, 3)], &[(0, 1), (1, 0), (3, 0), (1, 1), (0, 2)]],
    )
}

fn twist_from<F: Field>(h: &QuasiHopfAlgebra<F>, gamma: &T<F>, delta: &T<F>) -> (T<F>, T<F>) {
    let a = h.vector(h.alpha());
    let b = h.vector(h.beta());
    let x = h.associator_inv();

    // f = (S⊗S)(Δ^cop(x¹)) γ Δ(x²βS(x³))
    let y = h.contract(&[&h.s_at(x, &[2]), &b], &[&[(0, 0)], &[(0, 1), (1, 0), (0, 2)]]);
    let y = h.s_at(&h.delta_at(&h.delta_at(&y, 1), 0), &[0, 1]);
    let f = h.contract(&[&y, gamma], &[&[(0, 1), (1, 0), (0, 2)], &[(0, 0), (1, 1), (0, 3)]]);

    // f⁻¹ = Δ(S(x¹)αx²) δ (S⊗S)(Δ^cop(x³))
    let z = h.contract(&[&h.s_at(x, &[0]), &a], &[&[(0, 0), (1, 0), (0, 1)], &[(0, 2)]]);
    let z = h.s_at(&h.delta_at(&h.delta_at(&z, 1), 0), &[2, 3]);
    let f_inv = h.contract(&[&z, delta], &[&[(0, 0), (1, 0), (0, 3)], &[(0, 1), (1, 1), (0, 2)]]);
    (f, f_inv)
}

/// Computes γ and δ by both of their formulas, then `f` and `f⁻¹`.
///
/// Fails when the two formulas disagree or when `f·f⁻¹ ≠ 1⊗1`.
pub fn compute_twist<F: Field>(h: &QuasiHopfAlgebra<F>) -> Result<Twist<F::Elem>, QuasiHopfError> {
    let report = twist_consistency(h);
    if let Some(bad) = report.failures().next() {
        return Err(QuasiHopfError::Inconsistent(bad.label.clone()));
    }
    let gamma = gamma_first(h);
    let delta = delta_first(h);
    let (f, f_inv) = twist_from(h, &gamma, &delta);
    Ok(Twist {
        gamma,
        delta,
        f,
        f_inv,
    })
}

fn twist_consistency<F: Field>(h: &QuasiHopfAlgebra<F>) -> CheckReport<F::Elem> {
    let mut report = CheckReport::default();
    let gamma = gamma_first(h);
    let delta = delta_first(h);
    report.push(h.check("gamma-forms", gamma.clone(), gamma_second(h)));
    report.push(h.check("delta-forms", delta.clone(), delta_second(h)));
    let (f, f_inv) = twist_from(h, &gamma, &delta);
    report.push(h.check("twist-inverse-right", h.mul(&f, &f_inv), h.units(2)));
    report.push(h.check("twist-inverse-left", h.mul(&f_inv, &f), h.units(2)));
    report
}

/// γ/δ formula agreement, `f·f⁻¹ = f⁻¹·f = 1⊗1`,
/// `fΔ(S(h))f⁻¹ = (S⊗S)(Δ^cop(h))` for every basis `h`, and
/// `(1⊗f)(id⊗Δ)(f)Φ(Δ⊗id)(f⁻¹)(f⁻¹⊗1) = (S⊗S⊗S)(X³⊗X²⊗X¹)`.
pub fn check_twist_identities<F: Field>(h: &QuasiHopfAlgebra<F>, tw: &Twist<F::Elem>) -> CheckReport<F::Elem> {
    let mut report = CheckReport::default();
    report.push(h.check("gamma-forms", tw.gamma.clone(), gamma_second(h)));
    report.push(h.check("delta-forms", tw.delta.clone(), delta_second(h)));
    report.push(h.check("twist-inverse-right", h.mul(&tw.f, &tw.f_inv), h.units(2)));
    report.push(h.check("twist-inverse-left", h.mul(&tw.f_inv, &tw.f), h.units(2)));

    let fam = h.family();
    let ds = h.delta_at(&h.s_at(&fam, &[1]), 1);
    let lhs = h.contract(
        &[&tw.f, &ds, &tw.f_inv],
        &[&[(1, 0)], &[(0, 0), (1, 1), (2, 0)], &[(0, 1), (1, 2), (2, 1)]],
    );
    let rhs = h.s_at(&h.delta_at(&fam, 1).permute_legs(&[0, 2, 1]), &[1, 2]);
    report.push(h.check("twist-antipode-coproduct", lhs, rhs));

    // evaluated one factor at a time, left to right
    let unit = h.unit();
    let f23 = tw.f.leg_embed(h.field(), (2, 3), 3, unit).expect("valid legs");
    let g12 = tw.f_inv.leg_embed(h.field(), (1, 2), 3, unit).expect("valid legs");
    let lhs = [h.delta_at(&tw.f, 1), h.associator().clone(), h.delta_at(&tw.f_inv, 0), g12]
        .iter()
        .fold(f23, |acc, x| h.mul(&acc, x));
    let rhs = h.s_at(&h.associator().permute_legs(&[2, 1, 0]), &[0, 1, 2]);
    report.push(h.check("twist-associator", lhs, rhs));
    report
}

/// `q_R = X¹ ⊗ S⁻¹(αX³)X²` and `p_L = X²S⁻¹(X¹β) ⊗ X³`.
pub fn compute_qr_pl<F: Field>(h: &QuasiHopfAlgebra<F>) -> Result<(T<F>, T<F>), QuasiHopfError> {
    let sinv_alpha = h.sinv_at(&h.vector(h.alpha()), &[0])?;
    let sinv_beta = h.sinv_at(&h.vector(h.beta()), &[0])?;
    let x3 = h.sinv_at(h.associator(), &[2])?;
    let q_r = h.contract(&[&x3, &sinv_alpha], &[&[(0, 0)], &[(0, 2), (1, 0), (0, 1)]]);
    let x1 = h.sinv_at(h.associator(), &[0])?;
    let p_l = h.contract(&[&x1, &sinv_beta], &[&[(0, 1), (1, 0), (0, 0)], &[(0, 2)]]);
    Ok((q_r, p_l))
}

/// The intertwining and associator identities of `q_R` and `p_L`.
pub fn check_qr_pl_identities<F: Field>(
    h: &QuasiHopfAlgebra<F>,
    tw: &Twist<F::Elem>,
    q: &T<F>,
    p: &T<F>,
) -> Result<CheckReport<F::Elem>, QuasiHopfError> {
    let mut report = CheckReport::default();
    let fam = h.family();
    let d = h.delta_at(&fam, 1);

    // (1⊗S⁻¹(h_2)) q_R Δ(h_1) = (h⊗1) q_R
    let src = h.delta_at(&h.sinv_at(&d, &[2])?, 1);
    let lhs = h.contract(&[&src, q], &[&[(0, 0)], &[(1, 0), (0, 1)], &[(0, 3), (1, 1), (0, 2)]]);
    let rhs = h.contract(&[&fam, q], &[&[(0, 0)], &[(0, 1), (1, 0)], &[(1, 1)]]);
    report.push(h.check("qR-intertwine", lhs, rhs));

    // Δ(h_2) p_L (S⁻¹(h_1)⊗1) = p_L (1⊗h)
    let src = h.delta_at(&h.sinv_at(&d, &[1])?, 2);
    let lhs = h.contract(&[&src, p], &[&[(0, 0)], &[(0, 2), (1, 0), (0, 1)], &[(0, 3), (1, 1)]]);
    let rhs = h.contract(&[&fam, p], &[&[(0, 0)], &[(1, 0)], &[(1, 1), (0, 1)]]);
    report.push(h.check("pL-intertwine", lhs, rhs));

    // q¹Q¹_1x¹ ⊗ q²Q¹_2x² ⊗ Q²x³
    //   = q¹X¹_1 ⊗ S⁻¹(f²X³)q²_1X¹_(2,1) ⊗ S⁻¹(f¹X²)q²_2X¹_(2,2)
    let x = h.associator_inv();
    let q_split = h.delta_at(q, 0);
    let lhs = h.contract(
        &[q, &q_split, x],
        &[&[(0, 0), (1, 0), (2, 0)], &[(0, 1), (1, 1), (2, 1)], &[(1, 2), (2, 2)]],
    );
    // legs: X¹_1, X¹_(2,1), X¹_(2,2), S⁻¹(X²)S⁻¹(f¹), S⁻¹(X³)S⁻¹(f²)
    let big = h.sinv_at(&h.delta_at(&h.delta_at(h.associator(), 0), 1), &[3, 4])?;
    let f = h.sinv_at(&tw.f, &[0, 1])?;
    let staged = h.contract(
        &[&big, &f],
        &[&[(0, 0)], &[(0, 1)], &[(0, 2)], &[(0, 3), (1, 0)], &[(0, 4), (1, 1)]],
    );
    let q_mid = h.delta_at(q, 1);
    let rhs = h.contract(
        &[&q_mid, &staged],
        &[&[(0, 0), (1, 0)], &[(1, 4), (0, 1), (1, 1)], &[(1, 3), (0, 2), (1, 2)]],
    );
    report.push(h.check("qR-associator", lhs, rhs));

    // x¹p̃¹ ⊗ x²p̃²_1P̃¹ ⊗ x³p̃²_2P̃²
    //   = X³_(1,1)p̃¹_1S⁻¹(X²g²) ⊗ X³_(1,2)p̃¹_2S⁻¹(X¹g¹) ⊗ X³_2p̃²
    let p_split = h.delta_at(p, 1);
    let lhs = h.contract(
        &[x, &p_split, p],
        &[&[(0, 0), (1, 0)], &[(0, 1), (1, 1), (2, 0)], &[(0, 2), (1, 2), (2, 1)]],
    );
    // legs: S⁻¹(g¹)S⁻¹(X¹), S⁻¹(g²)S⁻¹(X²), X³_(1,1), X³_(1,2), X³_2
    let big = h.sinv_at(&h.delta_at(&h.delta_at(h.associator(), 2), 2), &[0, 1])?;
    let g = h.sinv_at(&tw.f_inv, &[0, 1])?;
    let staged = h.contract(
        &[&big, &g],
        &[&[(1, 0), (0, 0)], &[(1, 1), (0, 1)], &[(0, 2)], &[(0, 3)], &[(0, 4)]],
    );
    let p_left = h.delta_at(p, 0);
    let rhs = h.contract(
        &[&staged, &p_left],
        &[&[(0, 2), (1, 0), (0, 1)], &[(0, 3), (1, 1), (0, 0)], &[(0, 4), (1, 2)]],
    );
    report.push(h.check("pL-associator", lhs, rhs));
    Ok(report)
}

/// `U = g¹S(q²) ⊗ g²S(q¹)` and `Ṽ = S(p̃²)f¹ ⊗ S(p̃¹)f²`.
pub fn compute_u_vtilde<F: Field>(
    h: &QuasiHopfAlgebra<F>,
    tw: &Twist<F::Elem>,
    q: &T<F>,
    p: &T<F>,
) -> (T<F>, T<F>) {
    let sq = h.s_at(q, &[0, 1]);
    let u = h.contract(&[&tw.f_inv, &sq], &[&[(0, 0), (1, 1)], &[(0, 1), (1, 0)]]);
    let sp = h.s_at(p, &[0, 1]);
    let v = h.contract(&[&sp, &tw.f], &[&[(0, 1), (1, 0)], &[(0, 0), (1, 1)]]);
    (u, v)
}

/// The intertwining and associator identities of `U` and `Ṽ`.
pub fn check_u_vtilde_identities<F: Field>(h: &QuasiHopfAlgebra<F>, u: &T<F>, v: &T<F>) -> CheckReport<F::Elem> {
    let mut report = CheckReport::default();
    let fam = h.family();
    let d = h.delta_at(&fam, 1);

    // U(1⊗S(h)) = Δ(S(h_1))U(h_2⊗1)
    let s_fam = h.s_at(&fam, &[1]);
    let lhs = h.contract(&[u, &s_fam], &[&[(1, 0)], &[(0, 0)], &[(0, 1), (1, 1)]]);
    let src = h.delta_at(&h.s_at(&d, &[1]), 1);
    let rhs = h.contract(&[&src, u], &[&[(0, 0)], &[(0, 1), (1, 0), (0, 3)], &[(0, 2), (1, 1)]]);
    report.push(h.check("U-intertwine", lhs, rhs));

    // (S(h)⊗1)Ṽ = (1⊗h_1)ṼΔ(S(h_2))
    let lhs = h.contract(&[&s_fam, v], &[&[(0, 0)], &[(0, 1), (1, 0)], &[(1, 1)]]);
    let src = h.delta_at(&h.s_at(&d, &[2]), 2);
    let rhs = h.contract(&[&src, v], &[&[(0, 0)], &[(1, 0), (0, 2)], &[(0, 1), (1, 1), (0, 3)]]);
    report.push(h.check("V-intertwine", lhs, rhs));

    // Φ⁻¹(id⊗Δ)(U)(1⊗U) = (Δ⊗id)(Δ(S(X¹))U)(X²⊗X³⊗1)
    let x = h.associator_inv();
    let u_mid = h.delta_at(u, 1);
    let lhs = h.contract(
        &[x, &u_mid, u],
        &[&[(0, 0), (1, 0)], &[(0, 1), (1, 1), (2, 0)], &[(0, 2), (1, 2), (2, 1)]],
    );
    let big = h.delta_at(&h.s_at(h.associator(), &[0]), 0);
    let t = h.contract(&[&big, u], &[&[(0, 0), (1, 0)], &[(0, 1), (1, 1)], &[(0, 2)], &[(0, 3)]]);
    let t = h.delta_at(&t, 0);
    let rhs = h.contract(&[&t], &[&[(0, 0), (0, 3)], &[(0, 1), (0, 4)], &[(0, 2)]]);
    report.push(h.check("U-associator", lhs, rhs));

    // (Ṽ⊗1)(Δ⊗id)(Ṽ)Φ⁻¹ = (1⊗X¹⊗X²)(id⊗Δ)(ṼΔ(S(X³)))
    let v_left = h.delta_at(v, 0);
    let lhs = h.contract(
        &[v, &v_left, x],
        &[&[(0, 0), (1, 0), (2, 0)], &[(0, 1), (1, 1), (2, 1)], &[(1, 2), (2, 2)]],
    );
    let big = h.delta_at(&h.s_at(h.associator(), &[2]), 2);
    let t = h.contract(&[v, &big], &[&[(1, 0)], &[(1, 1)], &[(0, 0), (1, 2)], &[(0, 1), (1, 3)]]);
    let t = h.delta_at(&t, 3);
    let rhs = h.contract(&[&t], &[&[(0, 2)], &[(0, 0), (0, 3)], &[(0, 1), (0, 4)]]);
    report.push(h.check("V-associator", lhs, rhs));
    report
}
