use proptest::prelude::*;
use rug::{Complex, Float, Rational};
use wzb_core::exact::gcd::gcd;
use wzb_core::exact::{AffineForm, BiPoly, Monomial, RationalFunction};
use wzb_core::hyperterm::{numeric_eval_at, shift_quotient, HyperTerm};
use wzb_core::mpnum::{abs, abs_diff, gamma, pochhammer, Precision};
use wzb_core::Var;

fn poly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..5).prop_map(|terms| {
        BiPoly::from_terms(
            terms
                .into_iter()
                .map(|(n, k, c)| (Monomial::new(n, k), Rational::from(c))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = BiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(a, b)| RationalFunction::new(a, b).unwrap())
}

fn point() -> impl Strategy<Value = (Rational, Rational)> {
    (-20i64..20, 1i64..7, -20i64..20, 1i64..7).prop_map(|(a, b, c, d)| (Rational::from((a, b)), Rational::from((c, d))))
}

fn affine() -> impl Strategy<Value = AffineForm> {
    (-6i64..7, 1i64..5, 0i64..3, 0i64..3).prop_map(|(c, d, n, k)| AffineForm::new(Rational::from((c, d)), n, k))
}

fn term() -> impl Strategy<Value = HyperTerm> {
    (
        prop::collection::vec((affine(), prop::bool::ANY), 1..4),
        prop::sample::select(vec![(2i64, 1i64), (1, 3), (9, 16)]),
        nonzero_poly(),
    )
        .prop_map(|(factors, (p, q), poly)| {
            let mut t = HyperTerm::from_poly(poly);
            for (a, up) in factors {
                let g = HyperTerm::gamma(a, if up { 1 } else { -1 });
                t = t.mul(&g);
            }
            t.mul(&HyperTerm::exp(&Rational::from((p, q)), AffineForm::var_n()))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly(), (n, k) in point()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).eval(&n, &k), a.eval(&n, &k) * b.eval(&n, &k));
    }

    #[test]
    fn gcd_keeps_common_factor(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let g = gcd(&(&a * &c), &(&b * &c));
        prop_assert!(g.div_exact(&c).is_some(), "gcd {} misses {}", g, c);
        prop_assert!((&a * &c).div_exact(&g).is_some());
        prop_assert!((&b * &c).div_exact(&g).is_some());
    }

    #[test]
    fn rational_function_field_laws(r in ratfun(), s in ratfun()) {
        prop_assert_eq!(&(&r + &s) - &s, r.clone());
        if !s.is_zero() {
            prop_assert_eq!((&r * &s).checked_div(&s).unwrap(), r.clone());
        }
        prop_assert_eq!(r.swap_vars().swap_vars(), r);
    }

    #[test]
    fn rational_function_evaluation(r in ratfun(), s in ratfun(), (n, k) in point()) {
        if let (Ok(x), Ok(y)) = (r.eval(&n, &k), s.eval(&n, &k)) {
            prop_assert_eq!((&r * &s).eval(&n, &k).unwrap(), Rational::from(&x * &y));
            prop_assert_eq!((&r + &s).eval(&n, &k).unwrap(), x + y);
        }
    }

    #[test]
    fn term_times_reciprocal_is_one(t in term()) {
        prop_assert_eq!(t.mul(&t.recip().unwrap()), HyperTerm::one());
    }

    #[test]
    fn shift_quotient_matches_values(t in term(), n in 3i64..9, k in 3i64..9) {
        let prec = Precision::new(20);
        let (n, k) = (Rational::from(n), Rational::from(k));
        let q = shift_quotient(&t, Var::N).unwrap();
        let (Ok(a), Ok(b), Ok(r)) = (
            numeric_eval_at(&t, &n, &k, &prec),
            numeric_eval_at(&t, &Rational::from(&n + 1), &k, &prec),
            q.eval(&n, &k),
        ) else {
            return Ok(());
        };
        if a.clone().abs().real().is_zero() {
            return Ok(());
        }
        let ratio = Complex::with_val(prec.bits(), &b / &a);
        let scale = Float::with_val(prec.bits(), 1) + abs(&ratio);
        prop_assert!(abs_diff(&ratio, &prec.complex(&r)) < prec.tolerance() * scale);
    }

    #[test]
    fn gamma_recurrence_and_pochhammer(re in -8.0f64..8.0, im in -8.0f64..8.0, m in 0u32..6) {
        let prec = Precision::new(25);
        let bits = prec.bits();
        let z = Complex::with_val(bits, (re, im));
        let g = gamma(&z, &prec).unwrap();
        let g1 = gamma(&Complex::with_val(bits, &z + 1u32), &prec).unwrap();
        let lhs = Complex::with_val(bits, &z * &g);
        let rel = abs_diff(&g1, &lhs) / abs(&g1);
        prop_assert!(rel < prec.tolerance());

        // (z)_m as a finite product
        let mut prod = Complex::with_val(bits, 1);
        for j in 0..m {
            prod *= Complex::with_val(bits, &z + j);
        }
        let p = pochhammer(&z, &Complex::with_val(bits, m), &prec).unwrap();
        let scale = Float::with_val(bits, 1) + abs(&prod);
        prop_assert!(abs_diff(&p, &prod) < prec.tolerance() * scale);
    }
}
