use proptest::prelude::*;

use qhopf::algebra::{convolution, left_harpoon, right_harpoon, Coproduct, SparseTensor, StructureConstants};
use qhopf::heisenberg::{build_h1, build_h1_dual, canonical_elements};
use qhopf::quasi_hopf::{
    check_u_vtilde_identities, check_qr_pl_identities, check_quasi_antipode, check_quasi_bialgebra, check_twist_identities,
    CheckReport, DerivedElements, QuasiHopfAlgebra,
};
use qhopf::scalar::{root_of_unity, ComplexApprox, CycScalar, Cyclotomic, Field};
use qhopf::twisted::{
    build_k_omega_g, check_section5_expansions, compare_canonical, compare_doubles, compare_u_vtilde, cyclic_cocycle,
    invertibility_criterion, pentagon_lhs_ratio, pentagon_rhs_ratio, v4_table, Cocycle3, FiniteGroup, V4_TABLE_IDS,
};

fn failures(r: &CheckReport<CycScalar>) -> Vec<String> {
    r.failures().map(|c| c.label.clone()).collect()
}

fn s3() -> FiniteGroup {
    FiniteGroup::from_table(vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 2, 0, 4, 5, 3],
        vec![2, 0, 1, 5, 3, 4],
        vec![3, 5, 4, 0, 2, 1],
        vec![4, 3, 5, 1, 0, 2],
        vec![5, 4, 3, 2, 1, 0],
    ])
    .unwrap()
}

/// `k[G]` with `Δ(g) = g ⊗ g`.
fn group_algebra(field: &Cyclotomic, g: &FiniteGroup) -> (StructureConstants<CycScalar>, Coproduct<CycScalar>) {
    let n = g.order();
    let mut unit = vec![field.zero(); n];
    unit[g.identity()] = field.one();
    let sc = StructureConstants::from_fn(field, n, unit, |a, b| vec![(g.mul(a, b), field.one())]);
    let delta = Coproduct::new(field, (0..n).map(|a| vec![(a, a, field.one())]).collect());
    (sc, delta)
}

/// ω · dφ on ℤ/n with φ normalized.
fn twisted_cyclic(n: usize, k: i64, phi: &[i64]) -> Cocycle3 {
    let g = FiniteGroup::cyclic(n);
    let base = cyclic_cocycle(n, k);
    let mut full = vec![0i64; n * n];
    for a in 1..n {
        for b in 1..n {
            full[a * n + b] = phi[(a - 1) * (n - 1) + (b - 1)];
        }
    }
    let d = Cocycle3::coboundary(g.clone(), n as u32, &full);
    Cocycle3::from_fn(g, n as u32, |a, b, c| base.exp(a, b, c) as i64 + d.exp(a, b, c) as i64)
}

fn cocycle_strategy(max_n: usize) -> impl Strategy<Value = Cocycle3> {
    (1..=max_n).prop_flat_map(|n| {
        (0..n as i64, prop::collection::vec(0..n as i64, (n - 1) * (n - 1)))
            .prop_map(move |(k, phi)| twisted_cyclic(n, k, &phi))
    })
}

fn small_vec(field: &Cyclotomic, dim: usize) -> impl Strategy<Value = Vec<CycScalar>> {
    let field = field.clone();
    prop::collection::vec((-3i64..=3, 0i64..12), dim).prop_map(move |cs| {
        cs.into_iter()
            .map(|(c, k)| field.mul(&field.from_int(c), &field.root_of_unity(k)))
            .collect()
    })
}

fn small_tensor(field: &Cyclotomic, dim: usize, degree: usize, terms: usize) -> impl Strategy<Value = SparseTensor<CycScalar>> {
    let field = field.clone();
    prop::collection::vec((prop::collection::vec(0..dim, degree), -3i64..=3, 0i64..12), 0..=terms).prop_map(move |ts| {
        let mut t = SparseTensor::zero(dim, degree);
        for (idx, c, k) in ts {
            t.add_term(&field, &idx, field.mul(&field.from_int(c), &field.root_of_unity(k)));
        }
        t
    })
}

fn assert_vec_eq(field: &Cyclotomic, a: &[CycScalar], b: &[CycScalar]) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        prop_assert!(field.eq(x, y), "{} vs {}", field.render(x), field.render(y));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn root_of_unity_is_a_homomorphism(n in 1u32..=12, a in -40i64..40, b in -40i64..40) {
        let prod = root_of_unity(n, a).checked_mul(&root_of_unity(n, b)).unwrap();
        prop_assert_eq!(&prod, &root_of_unity(n, a + b));
        prop_assert_eq!(root_of_unity(n, a).is_one(), a.rem_euclid(n as i64) == 0);
    }

    #[test]
    fn exact_and_float_roots_agree(n in 1u32..=12, a in -40i64..40, b in -40i64..40) {
        let exact = Cyclotomic::new(n);
        let approx = ComplexApprox::new(n);
        let x = exact.add(&exact.root_of_unity(a), &exact.from_int(2));
        let y = exact.mul(&x, &exact.root_of_unity(b));
        let z = approx.mul(&approx.add(&approx.root_of_unity(a), &approx.from_int(2)), &approx.root_of_unity(b));
        prop_assert!((y.to_complex() - z).norm() < 1e-9);
    }

    #[test]
    fn multiply_is_bilinear_and_unital(
        (x, y, z, c) in (1usize..=3).prop_flat_map(|d| {
            let f = Cyclotomic::new(3);
            (small_tensor(&f, 9, d, 6), small_tensor(&f, 9, d, 6), small_tensor(&f, 9, d, 6), -3i64..=3)
        })
    ) {
        let w = cyclic_cocycle(3, 1);
        let field = Cyclotomic::new(3);
        let h = build_k_omega_g(field.clone(), &w).unwrap();
        let sc = build_h1_dual(&h).mult().clone();
        let c = field.from_int(c);
        let sum = x.add(&field, &y).unwrap();
        let lhs = sc.multiply(&field, &sum, &z).unwrap();
        let rhs = sc.multiply(&field, &x, &z).unwrap().add(&field, &sc.multiply(&field, &y, &z).unwrap()).unwrap();
        prop_assert!(lhs.approx_eq(&field, &rhs));
        let lhs = sc.multiply(&field, &z, &x.scale(&field, &c)).unwrap();
        let rhs = sc.multiply(&field, &z, &x).unwrap().scale(&field, &c);
        prop_assert!(lhs.approx_eq(&field, &rhs));
        let one = sc.unit_tensor(&field, x.degree());
        prop_assert!(sc.multiply(&field, &one, &x).unwrap().approx_eq(&field, &x));
        prop_assert!(sc.multiply(&field, &x, &one).unwrap().approx_eq(&field, &x));
    }

    #[test]
    fn leg_embedding_is_linear_and_disjoint_legs_commute(
        s in small_tensor(&Cyclotomic::new(3), 9, 2, 4),
        t in small_tensor(&Cyclotomic::new(3), 9, 2, 4),
        k in 1u32..=2,
    ) {
        let field = Cyclotomic::new(3);
        let h = build_k_omega_g(field.clone(), &cyclic_cocycle(3, k as i64)).unwrap();
        let dual = build_h1_dual(&h);
        let unit = dual.unit().to_vec();
        let embed = |x: &SparseTensor<CycScalar>, legs| x.leg_embed(&field, legs, 4, &unit).unwrap();
        let sum = s.add(&field, &t).unwrap();
        prop_assert!(embed(&sum, (1, 3)).approx_eq(&field, &embed(&s, (1, 3)).add(&field, &embed(&t, (1, 3))).unwrap()));
        for (a, b) in [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))] {
            let (sa, tb) = (embed(&s, a), embed(&t, b));
            let st = dual.mult().multiply(&field, &sa, &tb).unwrap();
            let ts = dual.mult().multiply(&field, &tb, &sa).unwrap();
            prop_assert!(st.approx_eq(&field, &ts), "legs {:?} {:?}", a, b);
        }
    }

    #[test]
    fn convolution_is_associative_on_coassociative_coproducts(
        xs in prop::collection::vec(small_vec(&Cyclotomic::new(6), 6), 3),
        k in 0i64..6,
        use_group_algebra in any::<bool>(),
    ) {
        let field = Cyclotomic::new(6);
        let delta = if use_group_algebra {
            group_algebra(&field, &s3()).1
        } else {
            build_k_omega_g(field.clone(), &cyclic_cocycle(6, k)).unwrap().coproduct().clone()
        };
        let left = convolution(&field, &delta, &convolution(&field, &delta, &xs[0], &xs[1]), &xs[2]);
        let right = convolution(&field, &delta, &xs[0], &convolution(&field, &delta, &xs[1], &xs[2]));
        assert_vec_eq(&field, &left, &right)?;
    }

    #[test]
    fn harpoon_actions_commute_and_compose(
        h in small_vec(&Cyclotomic::new(6), 6),
        k in small_vec(&Cyclotomic::new(6), 6),
        xi in small_vec(&Cyclotomic::new(6), 6),
    ) {
        let field = Cyclotomic::new(6);
        let (sc, _) = group_algebra(&field, &s3());
        let a = right_harpoon(&field, &sc, &left_harpoon(&field, &sc, &h, &xi), &k);
        let b = left_harpoon(&field, &sc, &h, &right_harpoon(&field, &sc, &xi, &k));
        assert_vec_eq(&field, &a, &b)?;
        let hk = qhopf::algebra::to_dense(&field, 6, &sc.mul_vec(&field, &qhopf::algebra::to_sparse(&field, &h), &qhopf::algebra::to_sparse(&field, &k)));
        let nested = left_harpoon(&field, &sc, &h, &left_harpoon(&field, &sc, &k, &xi));
        assert_vec_eq(&field, &nested, &left_harpoon(&field, &sc, &hk, &xi))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn pentagon_ratios_agree_for_valid_cocycles(w in cocycle_strategy(6)) {
        prop_assume!(w.check().is_valid());
        let field = Cyclotomic::new(w.root_order());
        let n = w.group().order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l = pentagon_lhs_ratio(&w, a, b, c).value(&field, &w);
                    let r = pentagon_rhs_ratio(&w, a, b, c).value(&field, &w);
                    prop_assert!(field.eq(&l, &r), "({}, {}, {})", a, b, c);
                }
            }
        }
    }

    #[test]
    fn quasi_hopf_identities_hold(w in cocycle_strategy(5)) {
        prop_assert!(w.check().is_valid());
        let field = Cyclotomic::new(w.root_order());
        let h = build_k_omega_g(field, &w).unwrap();
        let mut r = check_quasi_bialgebra(&h);
        r.extend(check_quasi_antipode(&h));
        let d = DerivedElements::compute(&h).unwrap();
        r.extend(check_twist_identities(&h, &d.twist));
        r.extend(check_qr_pl_identities(&h, &d.twist, &d.q_r, &d.p_l).unwrap());
        r.extend(check_u_vtilde_identities(&h, &d.u, &d.v_tilde));
        prop_assert!(r.passed(), "{:?}", failures(&r));
    }

    #[test]
    fn heisenberg_double_structure_checks_pass(w in cocycle_strategy(6)) {
        let field = Cyclotomic::new(w.root_order());
        let h = build_k_omega_g(field, &w).unwrap();
        for ha in [build_h1_dual(&h), build_h1(&h)] {
            let r = ha.check_structure(&h);
            prop_assert!(r.passed(), "{:?}", failures(&r));
        }
    }

    #[test]
    fn closed_forms_match_generic_constructions(w in cocycle_strategy(4)) {
        let field = Cyclotomic::new(w.root_order());
        let h = build_k_omega_g(field.clone(), &w).unwrap();
        let dual = build_h1_dual(&h);
        let plain = build_h1(&h);
        let d = DerivedElements::compute(&h).unwrap();
        let ce = canonical_elements(&h, &dual, &plain, &d);
        let mut r = compare_u_vtilde(&field, &w, &d.u, &d.v_tilde);
        r.extend(compare_doubles(&field, &w, &dual, &plain));
        r.extend(compare_canonical(&field, &w, &ce));
        r.extend(check_section5_expansions(&w, &plain, &ce, None));
        prop_assert!(r.passed(), "{:?}", failures(&r));
    }
}

fn assert_hopf_degeneration<F: Field>(h: &QuasiHopfAlgebra<F>, what: &str) {
    let field = h.field();
    let one = SparseTensor::power(field, h.unit(), 2);
    let d = DerivedElements::compute(h).unwrap();
    for (name, t) in [
        ("f", &d.twist.f),
        ("f⁻¹", &d.twist.f_inv),
        ("q_R", &d.q_r),
        ("p_L", &d.p_l),
        ("U", &d.u),
        ("Ṽ", &d.v_tilde),
    ] {
        assert!(t.approx_eq(field, &one), "{what}: {name} ≠ 1⊗1");
    }
}

#[test]
fn trivial_cocycles_degenerate_to_hopf_data() {
    for n in 1..=6 {
        let w = Cocycle3::trivial(FiniteGroup::cyclic(n));
        assert_hopf_degeneration(&build_k_omega_g(Cyclotomic::new(1), &w).unwrap(), &format!("trivial:{n}"));
    }
    let w = Cocycle3::trivial(s3());
    assert_hopf_degeneration(&build_k_omega_g(Cyclotomic::new(1), &w).unwrap(), "S3");
    let w = v4_table("trivial").unwrap();
    assert_hopf_degeneration(&build_k_omega_g(Cyclotomic::new(w.root_order()), &w).unwrap(), "v4:trivial");
}

#[test]
fn doubles_are_associative_exactly_when_untwisted_on_small_cyclic_groups() {
    for n in 2..=4 {
        for k in 0..n as i64 {
            let w = cyclic_cocycle(n, k);
            let field = Cyclotomic::new(w.root_order());
            let h = build_k_omega_g(field.clone(), &w).unwrap();
            for ha in [build_h1_dual(&h), build_h1(&h)] {
                let witness = ha.mult().find_nonassociative_triple(&field);
                assert_eq!(witness.is_none(), k == 0, "zn:{n}:{k} {:?}", ha.variant());
            }
        }
    }
}

/// Probes agree with the criterion on an explicit family. Only the
/// direction "criterion fails ⇒ not invertible" is a theorem; the other
/// direction is observed here, family by family.
#[test]
fn probes_match_invertibility_criterion_on_family() {
    let mut family: Vec<(String, Cocycle3)> = Vec::new();
    for n in 1..=4 {
        for k in 0..n as i64 {
            family.push((format!("zn:{n}:{k}"), cyclic_cocycle(n, k)));
        }
    }
    for id in V4_TABLE_IDS {
        let w = v4_table(id).unwrap();
        if w.check().is_valid() {
            family.push((format!("v4:{id}"), w));
        }
    }
    for (n, root) in [(3usize, 3u32), (4, 2)] {
        for (i, w) in Cocycle3::coboundaries(&FiniteGroup::cyclic(n), root).into_iter().enumerate() {
            family.push((format!("coboundary {i} on Z/{n}"), w));
        }
    }
    let mut both_outcomes = (false, false);
    for (name, w) in &family {
        let field = Cyclotomic::new(w.root_order());
        let h = build_k_omega_g(field.clone(), w).unwrap();
        let r = invertibility_criterion(w, &build_h1_dual(&h), &build_h1(&h));
        assert!(r.consistent(&field, w), "{name}: probes contradict the criterion");
        assert_eq!(r.criterion(), r.converse_observed(), "{name}: converse not observed");
        assert_eq!(r.w.probe.is_invertible(), r.criterion(), "{name}: W");
        assert_eq!(r.w_bar.probe.is_invertible(), r.criterion(), "{name}: W̄");
        if r.criterion() {
            both_outcomes.0 = true;
        } else {
            both_outcomes.1 = true;
        }
    }
    assert_eq!(both_outcomes, (true, true));
}
