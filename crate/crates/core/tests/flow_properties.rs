use proptest::prelude::*;

use sl2dyn::abflows::{
    ga_product, gm_product, j_action, j_identity, j_inverse, j_product, pi_iso, pi_label, stab_add_contains,
    stab_mul_contains, BorelTypeJ,
};
use sl2dyn::onetypes::{classify, decide_pn_of_polynomial, decide_valuation_of_polynomial, evaluate, realize, OneType};
use sl2dyn::oracle::{
    add_types, check_rule, classify_word, classify_word_spaced, j_action_label, j_product_label, mul_types,
    reduce_label, scale_type, translate_type, Factor, ProductWord, Spacing, Verdict,
};
use sl2dyn::sl2flow::matrix::{compose, decompose, Matrix2, Z4};
use sl2dyn::sl2flow::{
    b_action, b_action_solve, ellis_product, ellis_reduce, h_action, in_v, v_member, z4_action, z4_solve, SL2TypeNF,
};
use sl2dyn::valfield::pn_holds;
use sl2dyn::{Coefficient, Config, HahnElement, LaurentSeries};

fn cfg() -> Config {
    Config::default()
}

fn coeff() -> impl Strategy<Value = Coefficient> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Coefficient::ratio(n, d))
}

fn nonzero_coeff() -> impl Strategy<Value = Coefficient> {
    coeff().prop_filter("nonzero", |c| !c.is_zero())
}

fn laurent_poly() -> impl Strategy<Value = LaurentSeries> {
    (-4i64..=4, nonzero_coeff(), prop::collection::vec(coeff(), 0..3)).prop_map(|(off, lead, rest)| {
        let mut cs = vec![lead];
        cs.extend(rest);
        LaurentSeries::polynomial(off, cs)
    })
}

fn monomial() -> impl Strategy<Value = LaurentSeries> {
    (nonzero_coeff(), -4i64..=4).prop_map(|(c, k)| LaurentSeries::monomial(c, k))
}

fn base_point() -> impl Strategy<Value = LaurentSeries> {
    prop_oneof![Just(LaurentSeries::zero()), laurent_poly()]
}

/// Every kind of 1-type, labels in `[−8, 8]`.
fn one_type() -> impl Strategy<Value = OneType> {
    prop_oneof![
        base_point().prop_map(OneType::Realized),
        (base_point(), -8i64..=8).prop_map(|(a, k)| OneType::Infinitesimal(a, k)),
        (-8i64..=8).prop_map(OneType::Unbounded),
        (-8i64..=8, 1usize..=3, prop::collection::vec(coeff(), 0..3)).prop_map(|(n, tau, cs)| {
            let a =
                if cs.is_empty() { LaurentSeries::zero() } else { LaurentSeries::polynomial(n - cs.len() as i64, cs) };
            OneType::residual(a, n, tau).unwrap()
        }),
    ]
}

fn p0_or_pinf() -> impl Strategy<Value = OneType> {
    prop_oneof![
        (-5i64..=5).prop_map(|k| OneType::Infinitesimal(LaurentSeries::zero(), k)),
        (-5i64..=5).prop_map(OneType::Unbounded),
    ]
}

/// A determinant-one matrix with Laurent-polynomial entries, `x1` a
/// monomial or `0`.
fn sl2() -> impl Strategy<Value = Matrix2<LaurentSeries>> {
    prop_oneof![
        9 => (monomial(), laurent_poly(), laurent_poly()).prop_map(|(x1, x2, x3)| {
            let x4 = (&LaurentSeries::one() + &(&x2 * &x3)).div(&x1).unwrap();
            Matrix2::new(x1, x2, x3, x4)
        }),
        1 => (monomial(), laurent_poly()).prop_map(|(x3, x4)| {
            Matrix2::new(LaurentSeries::zero(), -&x3.inv().unwrap(), x3, x4)
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classify_inverts_realize(p in one_type()) {
        let x = realize(&p, &cfg()).unwrap();
        prop_assert_eq!(classify(&x).unwrap(), p);
    }

    #[test]
    fn polynomial_shortcut_matches_evaluation(p in one_type(), f in prop::collection::vec(laurent_poly(), 1..4), n in 1u32..=6) {
        let value = evaluate(&f, &realize(&p, &cfg()).unwrap());
        prop_assume!(!value.is_zero().unwrap());
        prop_assert_eq!(decide_valuation_of_polynomial(&p, &f).unwrap(), value.valuation().unwrap());
        prop_assert_eq!(decide_pn_of_polynomial(&p, &f, n).unwrap(), pn_holds(&value, n).unwrap());
    }

    #[test]
    fn realizations_land_in_their_coset(p in one_type(), n in 1u32..=10) {
        let (a, k) = match &p {
            OneType::Infinitesimal(a, k) => (a.clone(), *k),
            OneType::Unbounded(k) => (LaurentSeries::zero(), *k),
            _ => return Ok(()),
        };
        let x = &realize(&p, &cfg()).unwrap() - &HahnElement::embed(&a);
        let scaled = &x * &HahnElement::embed(&LaurentSeries::t_pow(-k));
        prop_assert!(pn_holds(&scaled, n).unwrap());
    }

    #[test]
    fn additive_flow_fixes_unbounded_types(q in one_type(), k in -8i64..=8) {
        let p = OneType::Unbounded(k);
        prop_assert_eq!(ga_product(&q, &p).unwrap(), p.clone());
        prop_assert_eq!(add_types(&q, &p, &cfg()).unwrap(), p);
    }

    #[test]
    fn multiplicative_labels_add(q in one_type(), p in p0_or_pinf()) {
        prop_assume!(!q.is_zero_type());
        let r = gm_product(&q, &p).unwrap();
        prop_assert_eq!(r.coset_label().unwrap(), q.coset_label().unwrap() + p.coset_label().unwrap());
        prop_assert_eq!(mul_types(&q, &p, &cfg()).unwrap(), r);
    }

    #[test]
    fn stabilizers_match_translation(a in laurent_poly(), p in p0_or_pinf()) {
        if let OneType::Unbounded(_) = p {
            prop_assert_eq!(stab_add_contains(&a, &p).unwrap(), translate_type(&a, &p, &cfg()).unwrap() == p);
        }
        prop_assert_eq!(stab_mul_contains(&a, &p).unwrap(), scale_type(&a, &p, &cfg()).unwrap() == p);
    }

    #[test]
    fn decomposition_roundtrip(g in sl2()) {
        prop_assert!(g.has_unit_det().unwrap());
        let d = decompose(&g).unwrap();
        let back = compose(d.z, &d.alpha, &d.beta, &d.gamma).unwrap();
        prop_assert!(back.try_eq(&g).unwrap());
        prop_assert!(back.has_unit_det().unwrap());
    }

    #[test]
    fn j_action_by_connected_component_is_trivial(u in prop::collection::vec(coeff(), 0..3), c in laurent_poly(), x in -5i64..=5) {
        let mut cs = vec![Coefficient::one()];
        cs.extend(u);
        let b = LaurentSeries::polynomial(0, cs);
        let g = Matrix2::new(b.clone(), c.clone(), LaurentSeries::zero(), b.inv().unwrap());
        prop_assert_eq!(j_action(&b, &c, BorelTypeJ::new(x)).unwrap(), BorelTypeJ::new(x));
        prop_assert_eq!(j_action_label(&g, x, &cfg()).unwrap(), BorelTypeJ::new(x));
    }

    #[test]
    fn h_action_fixes_v(k in -5i64..=5, a in laurent_poly()) {
        let nf = v_member(k);
        let out = h_action(&a, &nf).unwrap();
        prop_assert_eq!(&out, &nf);
        let w = nf.word().prepend(Factor::M(Matrix2::lower(a)));
        prop_assert_eq!(check_rule(&out, &w, &cfg()).verdict, Verdict::Pass);
    }

    #[test]
    fn b_action_matches_oracle(b in monomial(), c in prop_oneof![Just(LaurentSeries::zero()), monomial(), laurent_poly()]) {
        let nf = b_action(&b, &c).unwrap();
        prop_assert!(in_v(&nf));
        let g = Matrix2::new(b.clone(), c.clone(), LaurentSeries::zero(), b.inv().unwrap());
        let w = SL2TypeNF::idempotent().word().prepend(Factor::M(g));
        let check = check_rule(&nf, &w, &cfg());
        prop_assert_eq!(check.verdict, Verdict::Pass, "{}", check.details);
        let (b2, c2) = b_action_solve(&nf).unwrap();
        prop_assert_eq!(b_action(&b2, &c2).unwrap(), nf);
    }

    #[test]
    fn quarter_turns(m in -5i64..=5, j in -5i64..=5, zero_side in any::<bool>()) {
        let q = if zero_side { OneType::Infinitesimal(LaurentSeries::zero(), m) } else { OneType::Unbounded(m) };
        let nf = SL2TypeNF::new(Z4::I, q, j);
        let once = z4_action(Z4::W, &nf).unwrap();
        prop_assert_eq!(z4_action(Z4::W, &once).unwrap(), nf.clone());
        prop_assert_eq!(classify_word(&nf.word().prepend(Factor::Z(Z4::W)), &cfg()).unwrap(), once.clone());
        if let OneType::Infinitesimal(..) = once.q {
            let (z, pre) = z4_solve(&once).unwrap();
            prop_assert_eq!(z4_action(z, &pre).unwrap(), once);
        }
    }

    #[test]
    fn ellis_reduce_matches_oracle(q in one_type(), j in -5i64..=5) {
        let expected = ellis_reduce(&q, BorelTypeJ::new(j)).unwrap();
        prop_assert_eq!(reduce_label(&q, j, &cfg()).unwrap(), expected);
    }

    #[test]
    fn level_spacing_is_irrelevant(k in -3i64..=3, skip in 0usize..3, gap in 0usize..3) {
        let w = v_member(k).word().then(SL2TypeNF::idempotent().word());
        let wide = Config { levels: 24, ..cfg() };
        let compact = classify_word(&w, &cfg()).unwrap();
        prop_assert_eq!(classify_word_spaced(&w, &wide, Spacing { skip, gap }).unwrap(), compact);
    }
}

#[test]
fn j_group_laws_with_oracle() {
    let j = BorelTypeJ::new;
    for a in -8..=8 {
        assert_eq!(j_product(j_identity(), j(a)), j(a));
        assert_eq!(j_product(j(a), j_inverse(j(a))), j_identity());
        assert_eq!(j_product_label(a, -a, &cfg()).unwrap(), j_identity());
        for b in -8..=8 {
            assert_eq!(j_product(j(a), j(b)), j_product(j(b), j(a)));
            assert_eq!(ellis_product(j(a), j(b)), ellis_product(j(b), j(a)));
            if a.abs() <= 5 && b.abs() <= 5 {
                assert_eq!(j_product_label(a, b, &cfg()).unwrap(), j_product(j(a), j(b)));
            }
            for c in [-3, 0, 4] {
                assert_eq!(j_product(j_product(j(a), j(b)), j(c)), j_product(j(a), j_product(j(b), j(c))));
            }
        }
    }
}

#[test]
fn pi_is_injective_and_multiplicative() {
    let labels: Vec<i64> = (-8..=8).collect();
    let images: Vec<i64> = labels.iter().map(|&k| pi_label(&pi_iso(BorelTypeJ::new(k))).unwrap()).collect();
    assert_eq!(images, labels);
    for &a in &labels {
        for &b in &labels {
            let prod = pi_iso(BorelTypeJ::new(a)).mul(&pi_iso(BorelTypeJ::new(b)));
            assert_eq!(pi_label(&prod).unwrap(), a + b);
        }
    }
}

#[test]
fn idempotent_word_needs_six_levels() {
    let e = SL2TypeNF::idempotent();
    let w: ProductWord = e.word().then(e.word());
    assert_eq!(classify_word(&w, &Config { levels: 6, ..cfg() }).unwrap(), e);
    assert!(classify_word(&w, &Config { levels: 5, ..cfg() }).is_err());
}
