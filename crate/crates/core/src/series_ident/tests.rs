use rug::Rational;

use super::*;
use crate::closed_form::ConstExpr;
use crate::mpnum::abs_diff;

fn q(a: i64, b: i64) -> Rational {
    Rational::from((a, b))
}

fn sqrt3_over_pi() -> ConstExpr {
    ConstExpr::div(ConstExpr::sqrt(3), ConstExpr::pi())
}

#[test]
fn binomial_series() {
    let p = Precision::new(30);
    let got = pfq(&PFQSpec::new(vec![q(1, 2)], vec![], q(1, 2)), &p).unwrap();
    let want = ConstExpr::sqrt(2).eval(&p).unwrap();
    assert!(abs_diff(&got, &want) < p.tolerance());
}

#[test]
fn direct_and_barnes_agree() {
    let p = Precision::new(30);
    let s = PFQSpec::new(vec![q(1, 2), q(1, 4), q(3, 4)], vec![q(1, 1), q(1, 1)], q(-1, 2));
    let direct = pfq(&s, &p).unwrap();
    let r = eval_integral(&s.as_integrand(), &choose_contour(&s.as_integrand(), &p).unwrap(), &p).unwrap();
    assert!(abs_diff(&direct, &r.value) < crate::mpnum::pow10(-27, 64));
}

#[test]
fn three_f_two_combination() {
    let p = Precision::new(30);
    let z = q(-16, 9);
    let a = pfq(&PFQSpec::new(vec![q(1, 2), q(1, 4), q(3, 4)], vec![q(1, 1), q(1, 1)], z.clone()), &p).unwrap();
    let b = pfq(&PFQSpec::new(vec![q(3, 2), q(5, 4), q(7, 4)], vec![q(2, 1), q(2, 1)], z), &p).unwrap();
    let got = a - b * q(5, 6);
    let want = sqrt3_over_pi().eval(&p).unwrap();
    assert!(abs_diff(&got, &want) < crate::mpnum::pow10(-27, 64), "{got}");
}

#[test]
fn domain_errors() {
    let p = Precision::new(20);
    let on_cut = PFQSpec::new(vec![q(1, 2), q(1, 2)], vec![q(1, 1)], q(2, 1));
    assert!(matches!(pfq(&on_cut, &p), Err(Error::DomainError(_))));
    let bad_lower = PFQSpec::new(vec![q(1, 2)], vec![q(-1, 1)], q(1, 2));
    assert!(matches!(pfq(&bad_lower, &p), Err(Error::DomainError(_))));
}

#[test]
fn terminating() {
    // 2F1(-2, 1; 1 | z) = (1 - z)^2 at z = 3
    let p = Precision::new(20);
    let got = pfq(&PFQSpec::new(vec![q(-2, 1), q(1, 1)], vec![q(1, 1)], q(3, 1)), &p).unwrap();
    assert_eq!(got, 4);
}

#[test]
fn x_identity_domain() {
    let p = Precision::new(20);
    for x in [q(1, 2), q(0, 1), q(2, 3)] {
        assert!(matches!(example2_identity(&x, &p), Err(Error::DomainError(_))));
    }
}

#[test]
fn x_identity_at_one() {
    let p = Precision::new(30);
    let r = example2_identity(&q(1, 1), &p).unwrap();
    assert!(r.holds(&p.tolerance()), "{}", r.abs_diff);
    let want = ConstExpr::div(ConstExpr::mul(vec![ConstExpr::int(3), ConstExpr::pow(ConstExpr::pi(), 2)]), ConstExpr::int(2))
        .eval(&p)
        .unwrap();
    assert!(abs_diff(&r.rhs, &want) < p.tolerance());
}

mod pairs {
    use super::*;
    use crate::hyperterm::{HyperTerm, WZPair};
    use crate::paperlib::terms;

    #[test]
    fn diagonal_identity() {
        let p = Precision::new(30);
        for j in [1, 2] {
            let r = zeilberger_diagonal_check(&terms::quarter_dual_pair(), j, &p).unwrap();
            assert!(r.holds(&crate::mpnum::pow10(-28, 64)), "j = {j}: {}", r.abs_diff);
        }
        let r = zeilberger_diagonal_check(&terms::quarter_dual_pair_with(1), 1, &p).unwrap();
        assert!(r.abs_diff > 1e-3, "{}", r.abs_diff);
    }

    #[test]
    fn sumas_dual_pair() {
        let p = Precision::new(30);
        let r = sumas_wz_check(&terms::quarter_dual_pair(), 1, &p).unwrap();
        assert!(r.holds(&crate::mpnum::pow10(-28, 64)), "{} {:?}", r.abs_diff, r.notes);
    }

    #[test]
    fn sumas_divergent_pair() {
        let p = Precision::new(20);
        assert!(matches!(sumas_wz_check(&terms::sqrt3_pair(), 0, &p), Err(Error::Divergent(_))));
    }

    #[test]
    fn sumas_zero_pair() {
        let p = Precision::new(20);
        let zero = WZPair::new(HyperTerm::constant(Rational::new()), HyperTerm::constant(Rational::new()));
        let r = sumas_wz_check(&zero, 0, &p).unwrap();
        assert_eq!(r.lhs, 0);
        assert_eq!(r.rhs, 0);
    }
}

mod weighted_values {
    use super::*;
    use crate::exact::{AffineForm, BiPoly, RationalFunction};

    fn shifted(c: Rational) -> AffineForm {
        AffineForm::var_n().add_const(&c)
    }

    fn eight_pi_squared(p: &Precision) -> rug::Complex {
        ConstExpr::mul(vec![ConstExpr::int(8), ConstExpr::pow(ConstExpr::pi(), 2)]).eval(p).unwrap()
    }

    fn over_n_cubed(a: i64, b: i64) -> RationalFunction {
        RationalFunction::new(
            BiPoly::var_n().scale(&Rational::from(a)) + BiPoly::constant(b),
            BiPoly::var_n().pow(3),
        )
        .unwrap()
    }

    #[test]
    fn sun_series() {
        let p = Precision::new(30);
        let w = WeightedSeries::new(
            vec![shifted(q(1, 1)); 3],
            vec![shifted(q(1, 2)), shifted(q(1, 3)), shifted(q(2, 3))],
            over_n_cubed(11, -3),
            q(16, 27),
        )
        .starting_at(1);
        let got = weighted_series_eval(&w, &p).unwrap();
        assert!(abs_diff(&got, &eight_pi_squared(&p)) < p.tolerance(), "{got}");
    }

    #[test]
    fn quarter_series() {
        let p = Precision::new(30);
        let w = WeightedSeries::new(vec![shifted(q(1, 1)); 3], vec![shifted(q(1, 2)); 3], over_n_cubed(3, -1), q(1, 4))
            .starting_at(1);
        let got = weighted_series_eval(&w, &p).unwrap() * 16u32;
        assert!(abs_diff(&got, &eight_pi_squared(&p)) < p.tolerance(), "{got}");
    }
}
