use super::*;
use crate::heisenberg::{build_h1, build_h1_dual, canonical_elements, InvertibilityProbe};
use crate::quasi_hopf::{CheckReport, DerivedElements};
use crate::scalar::{root_of_unity, CycScalar, Cyclotomic, Field};

fn labels(r: &CheckReport<CycScalar>) -> Vec<&str> {
    r.failures().map(|c| c.label.as_str()).collect()
}

/// Generic construction of everything, then every closed-form comparison
/// and the expansion check.
fn full_comparison(w: &Cocycle3) -> CheckReport<CycScalar> {
    let field = Cyclotomic::new(w.root_order());
    let h = build_k_omega_g(field.clone(), w).unwrap();
    let dual = build_h1_dual(&h);
    let plain = build_h1(&h);
    let d = DerivedElements::compute(&h).unwrap();
    let ce = canonical_elements(&h, &dual, &plain, &d);
    let mut r = compare_u_vtilde(&field, w, &d.u, &d.v_tilde);
    r.extend(compare_doubles(&field, w, &dual, &plain));
    r.extend(compare_canonical(&field, w, &ce));
    r.extend(check_section5_expansions(w, &plain, &ce, None));
    r
}

#[test]
fn closed_forms_match_generic_on_cyclic_groups() {
    for (n, k) in [(2, 0), (2, 1), (3, 1), (3, 2), (4, 1)] {
        let r = full_comparison(&cyclic_cocycle(n, k));
        assert!(r.passed(), "zn:{n}:{k} {:?}", labels(&r));
    }
}

#[test]
fn closed_forms_match_generic_on_klein_and_s3() {
    for id in ["a1b2c2", "a1b1c1", "a1b2c1+a2b1c2"] {
        let r = full_comparison(&v4_table(id).unwrap());
        assert!(r.passed(), "v4:{id} {:?}", labels(&r));
    }
    let s3 = FiniteGroup::from_table(vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 2, 0, 4, 5, 3],
        vec![2, 0, 1, 5, 3, 4],
        vec![3, 5, 4, 0, 2, 1],
        vec![4, 3, 5, 1, 0, 2],
        vec![5, 4, 3, 2, 1, 0],
    ])
    .unwrap();
    let r = full_comparison(&Cocycle3::trivial(s3));
    assert!(r.passed(), "{:?}", labels(&r));
}

#[test]
fn closed_form_spot_values() {
    let f3 = Cyclotomic::new(3);
    let cf = closed_form_elements(&f3, &cyclic_cocycle(3, 1));
    assert_eq!(cf.u.get(&[1, 1]), Some(&root_of_unity(3, -1)));
    let f2 = Cyclotomic::new(2);
    let cf = closed_form_elements(&f2, &cyclic_cocycle(2, 1));
    // Ŵ at a = b = 1: −(δ_1#0) ⊗ (δ_1#1)
    assert_eq!(cf.elements.w_hat.get(&[2, 3]), Some(&f2.from_int(-1)));
    let dual = closed_form_dual_double(&f2, &cyclic_cocycle(2, 1));
    assert_eq!(dual.mult().product(2, 3), &[(1, f2.from_int(-1))]);
}

#[test]
fn trivial_cocycle_collapses_closed_forms() {
    let f = Cyclotomic::new(3);
    let w = cyclic_cocycle(3, 0);
    let cf = closed_form_elements(&f, &w);
    let ones = |t: &crate::algebra::SparseTensor<CycScalar>| t.iter().all(|(_, c)| f.is_one(c));
    assert!(ones(&cf.u) && ones(&cf.v_tilde) && ones(&cf.elements.phi_bold_inv) && ones(&cf.elements.phi_bar_s));
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                assert_eq!(pentagon_lhs_ratio(&w, a, b, c).exponent(&w), 0);
                assert_eq!(pentagon_rhs_ratio(&w, a, b, c).exponent(&w), 0);
            }
        }
    }
}

#[test]
fn deleting_a_factor_breaks_the_expansion() {
    let w = cyclic_cocycle(2, 1);
    let field = Cyclotomic::new(2);
    let h = build_k_omega_g(field.clone(), &w).unwrap();
    let dual = build_h1_dual(&h);
    let plain = build_h1(&h);
    let d = DerivedElements::compute(&h).unwrap();
    let ce = canonical_elements(&h, &dual, &plain, &d);
    // ω(ab⁻¹,b,a⁻¹) is identically 1 on ℤ/2; ω(c,a⁻¹,ab⁻¹) is not
    let harmless = Corruption {
        right_side: false,
        numerator: true,
        factor: 0,
    };
    assert!(check_section5_expansions(&w, &plain, &ce, Some(harmless)).passed());
    let corruption = Corruption { factor: 3, ..harmless };
    let r = check_section5_expansions(&w, &plain, &ce, Some(corruption));
    assert!(!r.get("expansions-agree").unwrap().passed());
    assert!(!r.get("expansion-lhs-generic").unwrap().passed());
    assert!(r.get("expansion-rhs-generic").unwrap().passed());
}

fn probe_report(w: &Cocycle3) -> (Cyclotomic, InvertibilityReport<CycScalar>) {
    let field = Cyclotomic::new(w.root_order());
    let dual = closed_form_dual_double(&field, w);
    let plain = closed_form_plain_double(&field, w);
    let r = invertibility_criterion(w, &dual, &plain);
    (field, r)
}

#[test]
fn cyclic_obstruction_is_omega_one_minus_one_one() {
    for n in 2..=4 {
        let w = cyclic_cocycle(n, 1);
        let (field, r) = probe_report(&w);
        assert!(!r.criterion());
        assert!(r.consistent(&field, &w));
        for p in [&r.w, &r.w_bar] {
            assert!(!p.probe.is_invertible());
            let (a, value) = p.obstruction.clone().expect("obstruction");
            assert_eq!(a, 1);
            assert_eq!(value, root_of_unity(n as u32, n as i64 - 1));
        }
    }
}

#[test]
fn coboundary_on_z2_is_invertible() {
    let cobs = Cocycle3::coboundaries(&FiniteGroup::cyclic(2), 2);
    let w = &cobs[0];
    assert!(w.inverse_triple_trivial());
    let (field, r) = probe_report(w);
    assert!(r.criterion() && r.consistent(&field, w) && r.converse_observed());
    assert!(matches!(r.w.probe, InvertibilityProbe::TwoSided { .. }));
}
