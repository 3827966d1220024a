use rug::Rational;
use wzb_core::barnes::{choose_contour, eval_integral, series_right};
use wzb_core::closed_form::ConstExpr;
use wzb_core::hyperterm::{dual, dual_pair, substitute, wz_verify, WZPair};
use wzb_core::mpnum::{abs_diff, Precision};
use wzb_core::paperlib::{registry, reproduce, terms, ItemKind, Status};
use wzb_core::series_ident::{pfq, PFQSpec};
use wzb_core::{Error, Var};
use wzb_core::exact::AffineForm;

#[test]
fn every_exact_item_verifies() {
    let prec = Precision::new(20);
    for item in registry().iter().filter(|i| i.kind == ItemKind::ExactWz) {
        let r = reproduce(item.id, &prec).unwrap();
        assert_eq!(r.status, Status::Pass, "{}: {}", r.id, r.detail);
    }
}

#[test]
fn unknown_item() {
    assert!(matches!(reproduce("no.such.item", &Precision::new(20)), Err(Error::UnknownId(_))));
}

#[test]
fn duals_of_example_pairs_are_pairs() {
    for p in [terms::quarter_pair(), terms::sixteen27_pair()] {
        let d = dual_pair(&p).unwrap();
        assert!(wz_verify(&d).unwrap().wz_holds);
        // the naive termwise dual is not a pair
        let naive = WZPair::new(dual(&p.f).unwrap(), dual(&p.g).unwrap());
        assert!(!wz_verify(&naive).unwrap().wz_holds);
    }
}

#[test]
fn pfq_routes_agree_inside_the_disc() {
    // 2F1(1/2, 1/2; 1; -1/2): direct summation and the Barnes integral
    let prec = Precision::new(25);
    let spec = PFQSpec::new(
        vec![Rational::from((1, 2)), Rational::from((1, 2))],
        vec![Rational::from(1)],
        Rational::from((-1, 2)),
    );
    let direct = pfq(&spec, &prec).unwrap();
    let integrand = spec.as_integrand();
    let contour = choose_contour(&integrand, &prec).unwrap();
    let integral = eval_integral(&integrand, &contour, &prec).unwrap().value;
    let right = series_right(&integrand, &prec).unwrap();
    assert!(abs_diff(&direct, &integral) < prec.tolerance());
    assert!(abs_diff(&direct, &right) < prec.tolerance());
}

#[test]
fn pair_row_at_k_zero_is_the_series_term() {
    // G(n, 0) of the (16/9)^n pair is the summand of the divergent series
    let g0 = substitute(&terms::sqrt3_pair().g, Var::K, &AffineForm::constant(0)).unwrap();
    let prec = Precision::new(20);
    let v = wzb_core::hyperterm::numeric_eval_at(&g0, &Rational::from(1), &Rational::new(), &prec).unwrap();
    // (1/2)(1/4)(3/4) * 6 * (-16/9) = -1
    let expected = ConstExpr::int(-1).eval(&prec).unwrap();
    assert!(abs_diff(&v, &expected) < prec.tolerance());
}
