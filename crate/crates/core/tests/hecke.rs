use cox_core::hecke::*;
use cox_core::{CoxeterGroup, Elem, Error, GenMap, GenSet};
use num_bigint::BigInt;
use proptest::prelude::*;

fn map(g: &CoxeterGroup, s: &str) -> GenMap {
    GenMap::parse(s, g.rank(), g.rank(), GenSet::EMPTY).unwrap()
}

fn weighted(t: &str, w: Vec<i32>) -> (CoxeterGroup, WeightFunction) {
    let g = CoxeterGroup::parse(t).unwrap();
    let wt = WeightFunction::new(&g, w).unwrap();
    (g, wt)
}

#[test]
fn defining_relations() {
    for (t, w) in [("A3", vec![1, 1, 1]), ("B3", vec![1, 1, 3]), ("G2", vec![2, 1]), ("D4", vec![1; 4]), ("F4", vec![1, 1, 2, 2])] {
        let (g, wt) = weighted(t, w);
        let h = HeckeAlgebra::new(&g, wt);
        let m = g.system().matrix();
        for i in 0..g.rank() {
            // (T_s − v_s)(T_s + v_s⁻¹) = 0
            let l = h.weight().get(i);
            let ts = h.t(g.generator(i));
            let a = ts.sub(&h.one().scale(&Laurent::monomial(1, l)));
            let b = ts.add(&h.one().scale(&Laurent::monomial(1, -l)));
            assert!(h.mul(&a, &b).is_zero(), "{t} s{}", i + 1);
            for j in 0..g.rank() {
                let mij = m.get(i, j) as usize;
                if i == j {
                    continue;
                }
                let alt = |a: usize, b: usize| (0..mij).map(|k| if k % 2 == 0 { a } else { b }).collect::<Vec<_>>();
                assert_eq!(h.word(&alt(i, j)), h.word(&alt(j, i)), "{t} bond {} {}", i + 1, j + 1);
            }
        }
    }
}

#[test]
fn t_basis_is_independent_of_reduced_word() {
    let (g, wt) = weighted("B3", vec![2, 2, 1]);
    let h = HeckeAlgebra::new(&g, wt);
    assert_eq!(h.t(g.identity()), h.one());
    for w in g.elements() {
        for s in g.left_descents(w).iter() {
            let mut word = vec![s];
            word.extend(g.word(g.lmul_gen(s, w)).iter().map(|&i| i as usize));
            assert_eq!(h.word(&word), h.t(w));
        }
    }
    let w0 = g.longest_element(GenSet::parse("1,2", 3).unwrap());
    assert_eq!(h.word(&[0, 1, 0]), h.t(w0));
}

#[test]
fn specialisation_at_one_is_the_group_algebra() {
    for t in ["A2", "B2"] {
        let g = CoxeterGroup::parse(t).unwrap();
        let h = HeckeAlgebra::new(&g, WeightFunction::equal(&g));
        for x in g.elements() {
            for y in g.elements() {
                let p = h.specialize_at_one(&h.mul(&h.t(x), &h.t(y)));
                assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(g.mul(x, y), BigInt::from(1))]);
            }
        }
    }
}

#[test]
fn lengths_add() {
    let g = CoxeterGroup::parse("A2").unwrap();
    let h = HeckeAlgebra::new(&g, WeightFunction::equal(&g));
    let (s1, s2) = (h.t(g.generator(0)), h.t(g.generator(1)));
    assert_eq!(h.mul(&s1, &s2), h.t(g.parse_element("1,2").unwrap()));
    let sq = h.mul(&s1, &s1);
    assert_eq!(sq.coeff(g.identity()), Laurent::one());
    assert_eq!(sq.coeff(g.generator(0)).to_string(), "v - v^-1");
}

#[test]
fn d_isomorphism() {
    let (g, wt) = weighted("A3", vec![1, 1, 1]);
    let h = HeckeAlgebra::new(&g, wt);
    let delta = map(&g, "1:2,2:3");
    assert_eq!(h.d_iso(&delta, &h.one()).unwrap(), h.one());
    assert_eq!(h.d_iso(&delta, &h.t(g.generator(0))).unwrap(), h.t(g.generator(1)));
    let prod = h.mul(&h.t(g.generator(1)), &h.t(g.generator(1)));
    let lhs = h.d_iso(&delta, &prod).unwrap();
    let img = h.t(g.generator(2));
    assert_eq!(lhs, h.mul(&img, &img));
    assert_eq!(h.d_iso(&delta, &h.t(g.generator(2))), Err(Error::SupportOutsideParabolic));
    let (b, bw) = weighted("B2", vec![1, 2]);
    let hb = HeckeAlgebra::new(&b, bw);
    assert!(matches!(hb.d_iso(&map(&b, "1:2"), &hb.one()), Err(Error::WeightIncompatible(_))));
}

#[test]
fn zeta_space_dimensions() {
    // (type, δ, weights, dimension)
    let cases: [(&str, &str, Vec<i32>, usize); 8] = [
        ("A2", "", vec![1, 1], 6),
        ("A2", "1:1,2:2", vec![1, 1], 3),
        ("A2", "1:1", vec![1, 1], 4),
        ("A2", "1:2,2:1", vec![1, 1], 3),
        ("A3", "1:2,2:3", vec![1, 1, 1], 7),
        ("B2", "1:1,2:2", vec![2, 1], 5),
        ("B3", "1:1,2:2,3:3", vec![1, 1, 2], 10),
        ("G2", "1:1,2:2", vec![1, 3], 6),
    ];
    for (t, d, w, dim) in cases {
        let (g, wt) = weighted(t, w);
        let basis = solve_zeta_space(&g, &map(&g, d), &wt).unwrap();
        assert_eq!(basis.len(), dim, "{t} {d}");
    }
}

#[test]
fn zeta_agrees_on_conjugate_coxeter_elements() {
    let (g, wt) = weighted("A2", vec![1, 1]);
    let basis = solve_zeta_space(&g, &map(&g, "1:1"), &wt).unwrap();
    let (a, b) = (g.parse_element("1,2").unwrap(), g.parse_element("2,1").unwrap());
    for z in &basis {
        assert_eq!(z.at(a), z.at(b));
    }
}

#[test]
fn residuals_vanish_on_the_whole_subalgebra() {
    for (t, d) in [("A2", "1:1,2:2"), ("A2", "1:2,2:1"), ("A3", "1:2,2:3")] {
        let (g, wt) = weighted(t, vec![1; if t == "A2" { 2 } else { 3 }]);
        let delta = map(&g, d);
        let h = HeckeAlgebra::new(&g, wt.clone());
        for z in solve_zeta_space(&g, &delta, &wt).unwrap() {
            assert!(full_residual_vanishes(&h, &delta, &z));
        }
    }
}

#[test]
fn constancy_on_minimal_elements() {
    let cases: [(&str, &str, Vec<i32>); 7] = [
        ("A2", "1:1", vec![1, 1]),
        ("A2", "", vec![1, 1]),
        ("A3", "1:2,2:3", vec![1, 1, 1]),
        ("A3", "1:3,2:2,3:1", vec![1, 1, 1]),
        ("B3", "1:1,2:2,3:3", vec![1, 1, 2]),
        ("B3", "3:3", vec![1, 1, 2]),
        ("G2", "1:1,2:2", vec![1, 3]),
    ];
    for (t, d, w) in cases {
        let (g, wt) = weighted(t, w);
        let v = verify_zeta_constancy(&g, &map(&g, d), &wt, t);
        assert!(v.pass, "{t} {d}: {:?}", v.counterexample);
        assert_eq!(v.details["dimension"], v.details["orbits"]);
    }
}

fn element(g: &CoxeterGroup, coeffs: &[(usize, i64, i32)]) -> HeckeElement {
    let mut h = HeckeElement::zero();
    for &(w, c, k) in coeffs {
        h.add_term(Elem((w % g.order()) as u32), &Laurent::monomial(c, k));
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(
        a in prop::collection::vec((0usize..8, -3i64..4, -2i32..3), 1..4),
        b in prop::collection::vec((0usize..8, -3i64..4, -2i32..3), 1..4),
        c in prop::collection::vec((0usize..8, -3i64..4, -2i32..3), 1..4),
    ) {
        let (g, wt) = weighted("B2", vec![2, 1]);
        let h = HeckeAlgebra::new(&g, wt);
        let (a, b, c) = (element(&g, &a), element(&g, &b), element(&g, &c));
        prop_assert_eq!(h.mul(&h.mul(&a, &b), &c), h.mul(&a, &h.mul(&b, &c)));
    }
}
