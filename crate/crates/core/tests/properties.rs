use proptest::prelude::*;
use txy_core::algebra::{fraction_add, rat, series_exp, FactoredFraction, LaurentZ, PolyXY, Rational};
use txy_core::genera::{ah_constant, is_rigid, rigidity_sum, sum_constant};
use txy_core::search::canonical_form;
use txy_core::series::{series_verdict, SeriesVerdict};
use txy_core::{FixedPoint, FixedPointData, GenusSeries, Sign};

fn poly() -> impl Strategy<Value = PolyXY> {
    prop::collection::vec(((0u32..3, 0u32..3), -5i64..=5), 0..4).prop_map(|ts| {
        PolyXY::from_terms(ts.into_iter().map(|((i, j), c)| (i, j, rat(c))))
    })
}

fn laurent() -> impl Strategy<Value = LaurentZ> {
    prop::collection::vec((-3i64..=3, poly()), 0..3).prop_map(LaurentZ::from_terms)
}

fn fraction() -> impl Strategy<Value = FactoredFraction> {
    (laurent(), prop::collection::vec(1i64..=4, 0..3))
        .prop_map(|(n, d)| FactoredFraction::new(n, d).unwrap())
}

fn weight() -> impl Strategy<Value = i64> {
    (1i64..=4, any::<bool>()).prop_map(|(a, neg)| if neg { -a } else { a })
}

fn data() -> impl Strategy<Value = FixedPointData> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(n, m)| {
        prop::collection::vec((prop::collection::vec(weight(), n), any::<bool>()), m).prop_map(move |ps| {
            let pts = ps
                .into_iter()
                .map(|(w, s)| FixedPoint::new(w, if s { Sign::Plus } else { Sign::Minus }))
                .collect();
            FixedPointData::new(n, pts).unwrap()
        })
    })
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `Σ ε Π (x z^w + y)/(z^w − 1)` evaluated directly.
fn direct_sum(d: &FixedPointData, x: &Rational, y: &Rational, z: &Rational) -> Rational {
    let mut acc = rat(0);
    for p in d.points() {
        let mut t = rat(p.sign.value());
        for &w in &p.weights {
            let zw = if w > 0 {
                num::pow(z.clone(), w as usize)
            } else {
                rat(1) / num::pow(z.clone(), (-w) as usize)
            };
            t = t * (x * &zw + y) / (zw - rat(1));
        }
        acc += t;
    }
    acc
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn exact_division_inverts_product(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn exp_is_a_homomorphism(a in poly(), b in poly()) {
        let lhs = series_exp(&a, 5).unwrap().mul(&series_exp(&b, 5).unwrap());
        prop_assert_eq!(lhs, series_exp(&(&a + &b), 5).unwrap());
    }

    #[test]
    fn fraction_addition(a in fraction(), b in fraction(), c in fraction()) {
        let ab = fraction_add(&a, &b);
        prop_assert_eq!(&ab, &fraction_add(&b, &a));
        let left = fraction_add(&ab, &c);
        let right = fraction_add(&a, &fraction_add(&b, &c));
        prop_assert_eq!(left.denominator(), right.denominator());
        for (x, y, z) in [(q(1, 2), q(3, 1), q(2, 1)), (q(-2, 1), q(1, 3), q(5, 2))] {
            let want = a.eval(&x, &y, &z) + b.eval(&x, &y, &z) + c.eval(&x, &y, &z);
            prop_assert_eq!(left.eval(&x, &y, &z), want.clone());
            prop_assert_eq!(right.eval(&x, &y, &z), want);
        }
    }

    #[test]
    fn rigidity_sum_matches_direct_evaluation(d in data()) {
        let f = rigidity_sum(&d);
        for (x, y, z) in [(q(1, 1), q(2, 1), q(3, 1)), (q(-1, 2), q(5, 3), q(-2, 1))] {
            prop_assert_eq!(f.eval(&x, &y, &z), direct_sum(&d, &x, &y, &z));
        }
    }

    #[test]
    fn constant_without_fixed_point_formula(d in data()) {
        let r = is_rigid(&d);
        prop_assert_eq!(sum_constant(&d), r.constant);
        prop_assert!(r.ah_constant.is_homogeneous(d.n() as u32));
    }

    #[test]
    fn canonical_form_is_invariant(d in data()) {
        let r = is_rigid(&d);
        let c = canonical_form(&d);
        prop_assert_eq!(canonical_form(&c), c.clone());
        prop_assert_eq!(canonical_form(&d.negated()), c.clone());
        prop_assert_eq!(is_rigid(&c).rigid, r.rigid);
        let mut rev = d.points().to_vec();
        rev.reverse();
        let rd = FixedPointData::new(d.n(), rev).unwrap();
        prop_assert_eq!(ah_constant(&rd), r.ah_constant);
        prop_assert_eq!(canonical_form(&rd), c);
    }

    #[test]
    fn series_verdict_is_stable_under_truncation(d in data()) {
        let g = GenusSeries::txy();
        let k = d.n() as i64 + 1;
        let low = series_verdict(&d, &g, k).unwrap();
        let high = series_verdict(&d, &g, k + 4).unwrap();
        if let SeriesVerdict::NotConstant { witness } = low {
            prop_assert!(matches!(high, SeriesVerdict::NotConstant { .. }), "witness {} lost", witness);
        }
        let exact = is_rigid(&d).constant;
        let at_high = match high {
            SeriesVerdict::Constant(c) => Some(c),
            SeriesVerdict::NotConstant { .. } => None,
        };
        prop_assert_eq!(at_high, exact);
    }
}
