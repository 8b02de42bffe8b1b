use proptest::prelude::*;

use sl2dyn::hahn::{standard_prefix, LevelMonomial};
use sl2dyn::valfield::{coset_label, hensel_lift_root, nth_root_unit, pn_holds, root_certificate};
use sl2dyn::{Coefficient, HahnElement, LaurentSeries, Value};

const N: i64 = 24;

fn coeff() -> impl Strategy<Value = Coefficient> {
    (-6i64..=6, 1i64..=4, any::<bool>()).prop_map(|(n, d, imag)| {
        let c = Coefficient::ratio(n, d);
        if imag {
            &c + &(&Coefficient::i() * &Coefficient::ratio(d, 3))
        } else {
            c
        }
    })
}

fn nonzero_coeff() -> impl Strategy<Value = Coefficient> {
    coeff().prop_filter("nonzero", |c| !c.is_zero())
}

fn laurent_poly() -> impl Strategy<Value = LaurentSeries> {
    (-3i64..=3, nonzero_coeff(), prop::collection::vec(coeff(), 0..4)).prop_map(|(off, lead, rest)| {
        let mut cs = vec![lead];
        cs.extend(rest);
        LaurentSeries::polynomial(off, cs)
    })
}

/// Polynomials and genuinely infinite quotients of polynomials.
fn series() -> impl Strategy<Value = LaurentSeries> {
    prop_oneof![laurent_poly(), (laurent_poly(), laurent_poly()).prop_map(|(a, b)| a.div(&b).unwrap()),]
}

fn one_unit() -> impl Strategy<Value = LaurentSeries> {
    prop::collection::vec(coeff(), 1..4).prop_map(|tail| {
        let mut cs = vec![Coefficient::one()];
        cs.extend(tail);
        LaurentSeries::polynomial(0, cs)
    })
}

fn value() -> impl Strategy<Value = Value> {
    (prop::collection::vec(-3i64..=3, 0..3), -5i64..=5).prop_map(|(l, s)| Value::from_int_levels(&l, s))
}

fn hahn() -> impl Strategy<Value = HahnElement> {
    let term = (laurent_poly(), -2i32..=2, -2i32..=2)
        .prop_map(|(c, e1, e2)| HahnElement::monomial(&c, LevelMonomial::from_exponents(&[e1, e2])));
    prop::collection::vec(term, 1..3).prop_map(|ts| ts.iter().fold(HahnElement::zero(), |acc, x| &acc + x))
}

fn nonzero_hahn() -> impl Strategy<Value = HahnElement> {
    hahn().prop_filter("nonzero", |x| !x.is_zero().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_ring_axioms(x in series(), y in series(), z in series()) {
        prop_assert!((&x + &y).agrees_to(&(&y + &x), N));
        prop_assert!((&x * &y).agrees_to(&(&y * &x), N));
        prop_assert!((&(&x * &y) * &z).agrees_to(&(&x * &(&y * &z)), N));
        prop_assert!((&(&x + &y) + &z).agrees_to(&(&x + &(&y + &z)), N));
        prop_assert!((&x * &(&y + &z)).agrees_to(&(&(&x * &y) + &(&x * &z)), N));
    }

    #[test]
    fn series_valuation_laws(x in series(), y in series()) {
        let (vx, vy) = (x.valuation().unwrap(), y.valuation().unwrap());
        prop_assert_eq!((&x * &y).valuation().unwrap(), vx + vy);
        let s = &x + &y;
        if vx != vy {
            prop_assert_eq!(s.valuation().unwrap(), vx.min(vy));
        } else if !s.is_zero().unwrap() {
            prop_assert!(s.valuation().unwrap() >= vx);
        }
    }

    #[test]
    fn series_inverse(x in series()) {
        prop_assert!((&x * &x.inv().unwrap()).agrees_to(&LaurentSeries::one(), N));
    }

    #[test]
    fn memoization_is_transparent(x in series(), y in series(), order in Just((0..N).collect::<Vec<_>>()).prop_shuffle()) {
        let lazy = x.div(&(&y + &LaurentSeries::t_pow(7))).unwrap();
        let fresh = x.div(&(&y + &LaurentSeries::t_pow(7))).unwrap();
        let base = lazy.valuation().unwrap();
        let scattered: Vec<_> = order.iter().map(|&k| (k, lazy.coeff(base + k))).collect();
        for (k, c) in scattered {
            prop_assert_eq!(c, fresh.coeff(base + k));
        }
    }

    #[test]
    fn value_order_is_total_and_monotone(u in value(), w in value(), d in value()) {
        let n = [u < w, u == w, u > w].iter().filter(|b| **b).count();
        prop_assert_eq!(n, 1);
        if u <= w {
            prop_assert!(&u + &d <= &w + &d);
        }
    }

    #[test]
    fn hahn_valuation_is_multiplicative(x in nonzero_hahn(), y in nonzero_hahn()) {
        prop_assert_eq!((&x * &y).valuation().unwrap(), &x.valuation().unwrap() + &y.valuation().unwrap());
        prop_assert!((&x * &x.inv().unwrap()).try_eq(&HahnElement::one()).unwrap());
    }

    #[test]
    fn embed_is_a_homomorphism(x in series(), y in series()) {
        let (ex, ey) = (HahnElement::embed(&x), HahnElement::embed(&y));
        let prod = (&ex * &ey).as_series().unwrap();
        let sum = (&ex + &ey).as_series().unwrap();
        prop_assert!(prod.agrees_to(&(&x * &y), N));
        prop_assert!(sum.agrees_to(&(&x + &y), N));
        prop_assert!(HahnElement::embed(&x).valuation().unwrap() == Value::standard(x.valuation().unwrap()));
    }

    #[test]
    fn standard_prefix_roundtrip(x in hahn()) {
        let (base, rest) = standard_prefix(&x).unwrap();
        prop_assert!((&HahnElement::embed(&base) + &rest).try_eq(&x).unwrap());
    }

    #[test]
    fn pn_is_invariant_under_nth_powers(x in nonzero_hahn(), y in nonzero_hahn(), n in 1u32..=10) {
        let yn = y.pow(n as i64).unwrap();
        prop_assert_eq!(pn_holds(&(&x * &yn), n).unwrap(), pn_holds(&x, n).unwrap());
    }

    #[test]
    fn coset_labels_add(x in nonzero_hahn(), y in nonzero_hahn()) {
        prop_assert_eq!(coset_label(&(&x * &y)).unwrap(), coset_label(&x).unwrap() + coset_label(&y).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn roots_of_one_units(u in one_unit(), n in 2u32..=6) {
        let r = nth_root_unit(&HahnElement::embed(&u), n, 64).unwrap().as_series().unwrap();
        prop_assert!(root_certificate(&u, &r, n, 64));
        let mut direct = LaurentSeries::one();
        for _ in 0..n {
            direct = (&direct * &r).truncated(16);
        }
        prop_assert!(direct.agrees_to(&u, 16));
    }

    #[test]
    fn hensel_lifts_have_the_prescribed_residue(a0 in nonzero_coeff(), tail in laurent_poly()) {
        // f(X) = X² − (a0² + t·g) with g ∈ 𝒪 has the simple residue root a0.
        let g = tail.shift(-tail.valuation().unwrap());
        let c = &LaurentSeries::constant(a0.pow(2)) + &(&g * &LaurentSeries::t_pow(1));
        let f = vec![-&c, LaurentSeries::zero(), LaurentSeries::one()];
        let r = hensel_lift_root(&f, &a0, 32).unwrap().as_series().unwrap();
        prop_assert_eq!(r.residue().unwrap(), a0);
        prop_assert!((&r * &r).truncated(32).agrees_to(&c, 32));
    }
}
