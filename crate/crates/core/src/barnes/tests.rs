use rug::{Complex, Rational};

use super::*;
use crate::closed_form::ConstExpr;
use crate::error::Error;
use crate::exact::{AffineForm, BiPoly};
use crate::mpnum::{abs_diff, Precision};
use crate::paperlib::terms;

fn half_family(z: Rational) -> IntegrandSpec {
    IntegrandSpec::new(BiPoly::one(), vec![AffineForm::constant(Rational::from((1, 2)))], vec![], z)
}

fn close(a: &Complex, b: &Complex, digits: i64) -> bool {
    abs_diff(a, b) < crate::mpnum::pow10(-digits, 64)
}

fn integral(i: &IntegrandSpec, prec: &Precision) -> Complex {
    let c = choose_contour(i, prec).unwrap();
    let r = eval_integral(i, &c, prec).unwrap();
    assert!(r.converged);
    r.value
}

fn value(e: ConstExpr, prec: &Precision) -> Complex {
    e.eval(prec).unwrap()
}

#[test]
fn half_at_minus_one() {
    let p = Precision::new(30);
    let got = integral(&half_family(Rational::from(-1)), &p);
    let want = value(ConstExpr::div(ConstExpr::int(1), ConstExpr::sqrt(2)), &p);
    assert!(close(&got, &want, 28), "{got}");
}

#[test]
fn right_series_half() {
    let p = Precision::new(30);
    let got = series_right(&half_family(Rational::from((1, 2))), &p).unwrap();
    let want = value(ConstExpr::sqrt(2), &p);
    assert!(close(&got, &want, 28), "{got}");
}

#[test]
fn right_series_at_zero_is_prefactor() {
    let p = Precision::new(20);
    let i = terms::sqrt3_family().with_t(Rational::new());
    let i = IntegrandSpec { z: Rational::new(), ..i };
    let got = series_right(&i, &p).unwrap();
    assert_eq!(got, 1);
}

#[test]
fn right_series_domain() {
    let p = Precision::new(20);
    assert!(matches!(series_right(&half_family(Rational::from(-2)), &p), Err(Error::DomainError(_))));
}

#[test]
fn right_series_matches_integral() {
    let p = Precision::new(30);
    let i = IntegrandSpec { z: Rational::from((-1, 2)), ..terms::sqrt3_integral() };
    let a = series_right(&i, &p).unwrap();
    let b = integral(&i, &p);
    assert!(close(&a, &b, 27), "{a} vs {b}");
}

#[test]
fn contour_choice() {
    let p = Precision::new(30);
    let c = choose_contour(&terms::sqrt3_integral(), &p).unwrap();
    assert_eq!(c.re_offset, Rational::from((-1, 8)));
    let c = choose_contour(&terms::one_over_pi_integral(), &p).unwrap();
    assert_eq!(c.re_offset, Rational::from((-1, 4)));
    let bad = IntegrandSpec::new(BiPoly::one(), vec![AffineForm::constant(Rational::new())], vec![], Rational::from(-2));
    assert!(matches!(choose_contour(&bad, &p), Err(Error::NoStraightSeparatingLine(_))));
}

#[test]
fn positive_z_rejected() {
    let p = Precision::new(20);
    let i = half_family(Rational::from((1, 2)));
    let c = choose_contour(&i, &p).unwrap();
    assert!(matches!(eval_integral(&i, &c, &p), Err(Error::DomainError(_))));
}

#[test]
fn sqrt3_integral_value() {
    let p = Precision::new(30);
    let got = integral(&terms::sqrt3_integral(), &p);
    let want = value(ConstExpr::div(ConstExpr::sqrt(3), ConstExpr::pi()), &p);
    assert!(close(&got, &want, 28), "{got}");
}

#[test]
fn left_single_family() {
    let p = Precision::new(30);
    let e = residue_series_left(&half_family(Rational::from(-2)), &p).unwrap();
    let want = value(ConstExpr::div(ConstExpr::int(1), ConstExpr::sqrt(3)), &p);
    assert_eq!(e.families.len(), 1);
    assert!(close(&e.total, &want, 28), "{}", e.total);
}

#[test]
fn left_residues_sqrt3() {
    let p = Precision::new(30);
    let e = residue_series_left(&terms::sqrt3_integral(), &p).unwrap();
    let bases: Vec<_> = e.families.iter().map(|f| f.pole_base.clone()).collect();
    assert_eq!(bases, vec![Rational::from((1, 4)), Rational::from((1, 2)), Rational::from((3, 4))]);
    let want = value(ConstExpr::div(ConstExpr::sqrt(3), ConstExpr::pi()), &p);
    assert!(close(&e.total, &want, 28), "{}", e.total);
}

#[test]
fn colliding_poles() {
    let p = Precision::new(20);
    let i = IntegrandSpec::new(
        BiPoly::one(),
        vec![AffineForm::constant(Rational::from((1, 2))), AffineForm::constant(Rational::from((3, 2)))],
        vec![],
        Rational::from(-2),
    );
    assert!(matches!(residue_series_left(&i, &p), Err(Error::CollidingPoles(_, _))));
}

fn pi_expr(num: ConstExpr, pi_power: i32) -> ConstExpr {
    ConstExpr::div(num, ConstExpr::pow(ConstExpr::pi(), pi_power))
}

#[test]
fn closed_form_integrals() {
    let p = Precision::new(30);
    let cases = [
        (terms::four_over_pi2_integral(), pi_expr(ConstExpr::int(4), 2)),
        (terms::one_over_pi_integral(), pi_expr(ConstExpr::int(1), 1)),
        (terms::three_sqrt3_integral(), pi_expr(ConstExpr::mul(vec![ConstExpr::int(3), ConstExpr::sqrt(3)]), 1)),
    ];
    for (i, e) in cases {
        let got = integral(&i, &p);
        let want = value(e, &p);
        assert!(close(&got, &want, 28), "{got} vs {want}");
        assert!(matches!(residue_series_left(&i, &p), Err(Error::CollidingPoles(_, _))));
    }
}

#[test]
fn sqrt3_t_samples() {
    let p = Precision::new(25);
    let mut rhs = terms::sqrt3_t_normalisation();
    rhs.t_term = rhs.t_term.recip().unwrap();
    rhs.constant = ConstExpr::div(ConstExpr::sqrt(3), ConstExpr::pi());
    let ts = [Rational::new(), Rational::from((1, 20)), Rational::from((1, 10))];
    let rep = t_independence_check(&terms::sqrt3_family(), &rhs, &ts, &p).unwrap();
    assert!(rep.passes(&crate::mpnum::pow10(-22, 64)), "{:?}", rep.max_deviation);
}

#[test]
fn weierstrass() {
    let p = Precision::new(25);
    let fam = terms::sqrt3_family().with_scale(terms::sqrt3_t_normalisation());
    let rep = weierstrass_limit_check(
        &fam,
        &terms::weierstrass_limit(),
        &ConstExpr::div(ConstExpr::sqrt(3), ConstExpr::pi()),
        &p,
    )
    .unwrap();
    for s in &rep.samples {
        eprintln!("{} {}", s.label, s.abs_diff.to_f64());
    }
    assert!(rep.passes(&crate::mpnum::pow10(-22, 64)));
}
