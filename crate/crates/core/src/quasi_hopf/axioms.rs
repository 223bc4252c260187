use crate::algebra::SparseTensor;
use crate::scalar::Field;

use super::{CheckReport, QuasiHopfAlgebra};

/// Associativity and unit of H, multiplicativity of Δ and ε, invertibility
/// of Φ, quasi-coassociativity, the counit laws, the pentagon and the
/// normalization of Φ.
pub fn check_quasi_bialgebra<F: Field>(h: &QuasiHopfAlgebra<F>) -> CheckReport<F::Elem> {
    let field = h.field();
    let mut report = CheckReport::default();
    let dim = h.dim();

    // (e_i e_j) e_k = e_i (e_j e_k), labelled by (i, j, k)
    let mut assoc_l = SparseTensor::zero(dim, 4);
    let mut assoc_r = SparseTensor::zero(dim, 4);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let ek = [(k, field.one())];
                let ei = [(i, field.one())];
                for (r, c) in h.mult().mul_vec(field, h.mult().product(i, j), &ek) {
                    assoc_l.add_term(field, &[i, j, k, r], c);
                }
                for (r, c) in h.mult().mul_vec(field, &ei, h.mult().product(j, k)) {
                    assoc_r.add_term(field, &[i, j, k, r], c);
                }
            }
        }
    }
    report.push(h.check("associativity", assoc_l, assoc_r));

    let fam = h.family();
    let unit = h.vector(h.unit());
    let left_unit = h.contract(&[&fam, &unit], &[&[(0, 0)], &[(1, 0), (0, 1)]]);
    let right_unit = h.contract(&[&fam, &unit], &[&[(0, 0)], &[(0, 1), (1, 0)]]);
    report.push(h.check("unit-left", left_unit, fam.clone()));
    report.push(h.check("unit-right", right_unit, fam.clone()));

    // pairs (i, j, e_i, e_j)
    let pairs = fam.outer(field, &fam).permute_legs(&[0, 2, 1, 3]);
    let product = h.contract(&[&pairs], &[&[(0, 0)], &[(0, 1)], &[(0, 2), (0, 3)]]);
    let delta_of_product = h.delta_at(&product, 2);
    let split = h.delta_at(&h.delta_at(&pairs, 3), 2);
    let product_of_deltas = h.contract(&[&split], &[&[(0, 0)], &[(0, 1)], &[(0, 2), (0, 4)], &[(0, 3), (0, 5)]]);
    report.push(h.check("coproduct-multiplicative", delta_of_product, product_of_deltas));
    report.push(h.check("coproduct-unital", h.delta_at(&unit, 0), h.units(2)));

    let eps_of_product = h.counit_at(&product, 2);
    let product_of_eps = h.counit_at(&h.counit_at(&pairs, 3), 2);
    report.push(h.check("counit-multiplicative", eps_of_product, product_of_eps));
    report.push(h.check(
        "counit-unital",
        h.counit_at(&unit, 0),
        SparseTensor::scalar(field, dim, field.one()),
    ));

    let phi = h.associator();
    let phi_inv = h.associator_inv();
    report.push(h.check("associator-inverse-right", h.mul(phi, phi_inv), h.units(3)));
    report.push(h.check("associator-inverse-left", h.mul(phi_inv, phi), h.units(3)));

    // (id⊗Δ)Δ(h) = Φ (Δ⊗id)Δ(h) Φ⁻¹
    let d = h.delta_at(&fam, 1);
    let lhs = h.delta_at(&d, 2);
    let inner = h.delta_at(&d, 1);
    let rhs = h.contract(
        &[&inner, phi, phi_inv],
        &[&[(0, 0)], &[(1, 0), (0, 1), (2, 0)], &[(1, 1), (0, 2), (2, 1)], &[(1, 2), (0, 3), (2, 2)]],
    );
    report.push(h.check("quasi-coassociativity", lhs, rhs));

    report.push(h.check("counit-left", h.counit_at(&d, 1), fam.clone()));
    report.push(h.check("counit-right", h.counit_at(&d, 2), fam.clone()));

    // (1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1) = (id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ)
    let mid = h.delta_at(phi, 1);
    let lhs = h.contract(
        &[phi, &mid, phi],
        &[&[(1, 0), (2, 0)], &[(0, 0), (1, 1), (2, 1)], &[(0, 1), (1, 2), (2, 2)], &[(0, 2), (1, 3)]],
    );
    let rhs = h.mul(&h.delta_at(phi, 2), &h.delta_at(phi, 0));
    report.push(h.check("pentagon", lhs, rhs));

    for (label, leg) in [
        ("associator-counit-middle", 1),
        ("associator-counit-left", 0),
        ("associator-counit-right", 2),
    ] {
        report.push(h.check(label, h.counit_at(phi, leg), h.units(2)));
    }
    report
}

/// S anti-multiplicative and unital, `S(h_1)αh_2 = ε(h)α`,
/// `h_1βS(h_2) = ε(h)β`, `X¹βS(X²)αX³ = 1` and `S(x¹)αx²βS(x³) = 1`.
pub fn check_quasi_antipode<F: Field>(h: &QuasiHopfAlgebra<F>) -> CheckReport<F::Elem> {
    let field = h.field();
    let mut report = CheckReport::default();
    let fam = h.family();
    let alpha = h.vector(h.alpha());
    let beta = h.vector(h.beta());
    let unit = h.vector(h.unit());

    let pairs = fam.outer(field, &fam).permute_legs(&[0, 2, 1, 3]);
    let product = h.contract(&[&pairs], &[&[(0, 0)], &[(0, 1)], &[(0, 2), (0, 3)]]);
    let s_pairs = h.s_at(&pairs, &[2, 3]);
    report.push(h.check(
        "antipode-anti-multiplicative",
        h.s_at(&product, &[2]),
        h.contract(&[&s_pairs], &[&[(0, 0)], &[(0, 1)], &[(0, 3), (0, 2)]]),
    ));
    report.push(h.check("antipode-unital", h.s_at(&unit, &[0]), unit.clone()));

    let d = h.delta_at(&fam, 1);
    let eps = h.counit_at(&fam, 1);
    let lhs = h.contract(&[&h.s_at(&d, &[1]), &alpha], &[&[(0, 0)], &[(0, 1), (1, 0), (0, 2)]]);
    report.push(h.check("antipode-alpha", lhs, eps.outer(field, &alpha)));
    let lhs = h.contract(&[&h.s_at(&d, &[2]), &beta], &[&[(0, 0)], &[(0, 1), (1, 0), (0, 2)]]);
    report.push(h.check("antipode-beta", lhs, eps.outer(field, &beta)));

    let phi = h.s_at(h.associator(), &[1]);
    let lhs = h.contract(&[&phi, &beta, &alpha], &[&[(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)]]);
    report.push(h.check("associator-alpha-beta", lhs, unit.clone()));
    let phi_inv = h.s_at(h.associator_inv(), &[0, 2]);
    let lhs = h.contract(&[&phi_inv, &alpha, &beta], &[&[(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)]]);
    report.push(h.check("associator-inverse-alpha-beta", lhs, unit));
    report
}
