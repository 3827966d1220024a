//! The concrete pairs, integrands and series used by the registry.

use rug::Rational;

use crate::barnes::{IntegrandSpec, Scale};
use crate::closed_form::ConstExpr;
use crate::exact::{AffineForm, BiPoly, Monomial, RationalFunction};
use crate::hyperterm::{HyperTerm, WZPair};
use crate::Var;

pub(crate) fn q(a: i64, b: i64) -> Rational {
    Rational::from((a, b))
}

/// Polynomial from `(coefficient, deg_n, deg_k)` triples.
pub(crate) fn poly(terms: &[(i64, u32, u32)]) -> BiPoly {
    BiPoly::from_terms(
        terms
            .iter()
            .map(|&(c, a, b)| (Monomial::new(a, b), Rational::from(c))),
    )
}

fn aff(c: Rational, n: Rational, k: Rational) -> AffineForm {
    AffineForm { c, n, k }
}

/// (c + b k)_n
fn poch_n(c: Rational, b: Rational) -> HyperTerm {
    HyperTerm::poch(aff(c, Rational::new(), b), Var::N)
}

/// (c)_k
fn poch_k(c: Rational) -> HyperTerm {
    HyperTerm::poch(AffineForm::constant(c), Var::K)
}

fn inv(t: HyperTerm) -> HyperTerm {
    t.recip().expect("nonzero term")
}

fn rat(num: BiPoly, den: BiPoly) -> HyperTerm {
    HyperTerm::from_rat(RationalFunction::new(num, den).expect("nonzero denominator"))
}

fn product(ts: &[HyperTerm]) -> HyperTerm {
    ts.iter().fold(HyperTerm::one(), |acc, t| acc.mul(t))
}

fn pow_n(base: Rational) -> HyperTerm {
    HyperTerm::exp(&base, AffineForm::var_n())
}

/// U(n,k) of the divergent (16/9)^n pair.
pub fn sqrt3_u() -> HyperTerm {
    let z = Rational::new();
    product(&[
        poch_n(q(1, 2), z.clone()),
        poch_n(q(1, 4), q(3, 2)),
        poch_n(q(3, 4), q(3, 2)),
        inv(poch_n(q(1, 1), q(1, 1))),
        inv(poch_n(q(1, 1), q(2, 1))),
        poch_k(q(1, 6)),
        poch_k(q(5, 6)),
        inv(poch_k(q(1, 1)).pow(2).unwrap()),
    ])
}

/// (-1)^n (16/9)^n / Γ(n+1)
fn sqrt3_weight() -> HyperTerm {
    product(&[
        HyperTerm::sign(Var::N),
        pow_n(q(16, 9)),
        inv(HyperTerm::factorial(AffineForm::var_n())),
    ])
}

/// The B polynomial 5n + 6k + 1, with an optional perturbation of its constant.
pub fn sqrt3_pair_with(b_const: i64) -> WZPair {
    let u = sqrt3_u();
    let a = rat(poly(&[(-1, 2, 0), (2, 1, 0)]), poly(&[(3, 1, 0), (6, 0, 1), (3, 0, 0)]));
    let b = HyperTerm::from_poly(poly(&[(5, 1, 0), (6, 0, 1), (b_const, 0, 0)]));
    let w = sqrt3_weight();
    WZPair::new(product(&[u.clone(), a, w.clone()]), product(&[u, b, w]))
}

pub fn sqrt3_pair() -> WZPair {
    sqrt3_pair_with(1)
}

/// U(n,k) of the 4^n pair, in Pochhammer form.
pub fn quarter_u() -> HyperTerm {
    let z = Rational::new();
    product(&[
        poch_n(q(1, 2), z.clone()).pow(2).unwrap(),
        poch_n(q(1, 1), q(1, 2)),
        poch_n(q(1, 2), q(1, 2)),
        inv(poch_n(q(1, 1), z.clone()).pow(2).unwrap()),
        inv(poch_n(q(1, 1), q(1, 1)).pow(2).unwrap()),
        poch_k(q(1, 2)),
        inv(poch_k(q(1, 1))),
        pow_n(q(4, 1)),
    ])
}

/// The same U written with factorials: (2n)!^2 (2n+k)! (2k)! / (n!^4 k! (n+k)!^2) / (16^n 4^k).
pub fn quarter_u_factorial() -> HyperTerm {
    let fact = |c: i64, n: i64, k: i64| HyperTerm::factorial(AffineForm::new(c, n, k));
    product(&[
        fact(0, 2, 0).pow(2).unwrap(),
        fact(0, 2, 1),
        fact(0, 0, 2),
        inv(fact(0, 1, 0).pow(4).unwrap()),
        inv(fact(0, 0, 1)),
        inv(fact(0, 1, 1).pow(2).unwrap()),
        HyperTerm::exp(&q(1, 16), AffineForm::var_n()),
        HyperTerm::exp(&q(1, 4), AffineForm::var_k()),
    ])
}

/// The 4^n pair. With G as usually stated, `F(n+1,k) - F(n,k)` equals
/// `-(G(n,k+1) - G(n,k))`, so the companion of F is `-G`.
pub fn quarter_pair_with(g_coeff_nk: i64) -> WZPair {
    let u = quarter_u();
    let two_n_k = poly(&[(2, 1, 0), (1, 0, 1)]);
    let f = u.mul(&rat(poly(&[(2, 2, 0)]), two_n_k.clone()));
    let g = u.mul(&rat(
        poly(&[(6, 2, 0), (2, 1, 0), (1, 0, 1), (g_coeff_nk, 1, 1)]),
        two_n_k,
    ));
    WZPair::new(f, g.neg())
}

pub fn quarter_pair() -> WZPair {
    quarter_pair_with(4)
}

/// G of the 4^n pair with the opposite sign.
pub fn quarter_g_opposite() -> HyperTerm {
    quarter_pair().g.neg()
}

/// (n^2 (n+k)^2 (n+k-1)^2)
fn quarter_dual_den() -> BiPoly {
    let n = poly(&[(1, 1, 0)]);
    let nk = poly(&[(1, 1, 0), (1, 0, 1)]);
    let nk1 = poly(&[(1, 1, 0), (1, 0, 1), (-1, 0, 0)]);
    &(&n.pow(2) * &nk.pow(2)) * &nk1.pow(2)
}

/// Dual pair (F^, G^) of the 4^n pair; `c_perturb` bumps the constant of
/// 6n^2 - 6n + 1 in G^.
pub fn quarter_dual_pair_with(c_perturb: i64) -> WZPair {
    let inv_u = inv(quarter_u());
    let two_k_1 = poly(&[(2, 0, 1), (-1, 0, 0)]);
    let two_n_k = poly(&[(2, 1, 0), (1, 0, 1)]);
    let two_n_k_1 = poly(&[(2, 1, 0), (1, 0, 1), (-1, 0, 0)]);
    let two_n_1 = poly(&[(2, 1, 0), (-1, 0, 0)]);
    let quad = poly(&[(6, 2, 0), (-6, 1, 0), (1 + c_perturb, 0, 0), (-1, 0, 1), (4, 1, 1)]);
    let g_num = &(&(&BiPoly::constant(2) * &two_k_1) * &two_n_k) * &quad;
    let f_num = &(&(&BiPoly::constant(-2) * &two_n_k) * &two_n_k_1) * &two_n_1.pow(2);
    WZPair::new(
        inv_u.mul(&rat(f_num, quarter_dual_den())),
        inv_u.mul(&rat(g_num, quarter_dual_den())),
    )
}

pub fn quarter_dual_pair() -> WZPair {
    quarter_dual_pair_with(0)
}

/// U(n,k) of the (27/16)^n pair with (1/3)_n (2/3)_n.
pub fn sixteen27_u() -> HyperTerm {
    let z = Rational::new();
    product(&[
        poch_n(q(1, 2), q(-1, 1)),
        poch_n(q(1, 2), q(1, 1)).pow(2).unwrap(),
        poch_n(q(1, 3), z.clone()),
        poch_n(q(2, 3), z.clone()),
        inv(poch_n(q(1, 1), z.clone()).pow(3).unwrap()),
        inv(poch_n(q(1, 2), z.clone()).pow(2).unwrap()),
        pow_n(q(27, 16)),
    ])
}

/// The (27/16)^n pair with F = U 64 n^3 / ((2k+1)(2k-2n+1));
/// `c_perturb` bumps the constant 3 in (11n + 3).
pub fn sixteen27_pair_with(c_perturb: i64) -> WZPair {
    let u = sixteen27_u();
    let f = u.mul(&rat(
        poly(&[(64, 3, 0)]),
        &poly(&[(2, 0, 1), (1, 0, 0)]) * &poly(&[(2, 0, 1), (-2, 1, 0), (1, 0, 0)]),
    ));
    let two_n_1_sq = poly(&[(2, 1, 0), (1, 0, 0)]).pow(2);
    let g_num = &(&two_n_1_sq * &poly(&[(11, 1, 0), (3 + c_perturb, 0, 0)]))
        - &(&poly(&[(12, 0, 1)]) * &poly(&[(2, 2, 0), (3, 1, 1), (1, 1, 0), (1, 0, 1)]));
    let g = u.mul(&rat(g_num, two_n_1_sq));
    WZPair::new(f, g)
}

pub fn sixteen27_pair() -> WZPair {
    sixteen27_pair_with(0)
}

/// The (27/16)^n pair before correction: (1/3)_n twice and the factor (2n-2k+1).
pub fn sixteen27_pair_uncorrected() -> WZPair {
    let p = sixteen27_pair();
    let fix = product(&[
        poch_n(q(1, 3), Rational::new()),
        inv(poch_n(q(2, 3), Rational::new())),
        rat(
            poly(&[(2, 0, 1), (-2, 1, 0), (1, 0, 0)]),
            poly(&[(-2, 0, 1), (2, 1, 0), (1, 0, 0)]),
        ),
    ]);
    let g_fix = product(&[poch_n(q(1, 3), Rational::new()), inv(poch_n(q(2, 3), Rational::new()))]);
    WZPair::new(p.f.mul(&fix), p.g.mul(&g_fix))
}

fn afft(c: Rational, t: Rational) -> AffineForm {
    aff(c, Rational::new(), t)
}

/// Integrand of the (16/9) family without its t-dependent normalisation.
pub fn sqrt3_family() -> IntegrandSpec {
    IntegrandSpec::new(
        poly(&[(5, 1, 0), (6, 0, 1), (1, 0, 0)]),
        vec![
            afft(q(1, 2), q(0, 1)),
            afft(q(1, 4), q(3, 2)),
            afft(q(3, 4), q(3, 2)),
        ],
        vec![afft(q(1, 1), q(1, 1)), afft(q(1, 1), q(2, 1))],
        q(-16, 9),
    )
}

/// (1/6)_t (5/6)_t / (1)_t^2
pub fn sqrt3_t_normalisation() -> Scale {
    Scale {
        constant: ConstExpr::int(1),
        t_term: product(&[poch_k(q(1, 6)), poch_k(q(5, 6)), inv(poch_k(q(1, 1)).pow(2).unwrap())]),
    }
}

pub fn sqrt3_integral() -> IntegrandSpec {
    sqrt3_family().with_t(Rational::new())
}

/// (3/π) (1/2)_s Γ(-s) 2^s
pub fn weierstrass_limit() -> IntegrandSpec {
    IntegrandSpec::new(BiPoly::one(), vec![AffineForm::constant(q(1, 2))], vec![], q(-2, 1))
        .with_scale(Scale {
            constant: ConstExpr::div(ConstExpr::int(3), ConstExpr::pi()),
            t_term: HyperTerm::one(),
        })
}

/// First family (four_over_pi2_integral at t = 0).
pub fn four_over_pi2_family() -> IntegrandSpec {
    let h = q(1, 2);
    IntegrandSpec::new(
        poly(&[(10, 2, 0), (6, 1, 0), (1, 0, 0), (14, 1, 1), (4, 0, 2), (4, 0, 1)]),
        vec![
            afft(h.clone(), q(1, 1)),
            afft(h.clone(), q(1, 1)),
            afft(h.clone(), q(1, 1)),
            afft(h.clone(), q(0, 1)),
            afft(h, q(0, 1)),
        ],
        vec![
            afft(q(1, 1), q(1, 1)),
            afft(q(1, 1), q(1, 1)),
            afft(q(1, 1), q(1, 1)),
            afft(q(1, 1), q(2, 1)),
        ],
        q(-4, 1),
    )
}

/// Second family (one_over_pi_integral at t = 0).
pub fn one_over_pi_family() -> IntegrandSpec {
    let h = q(1, 2);
    IntegrandSpec::new(
        poly(&[(3, 1, 0), (2, 0, 1), (1, 0, 0)]),
        vec![afft(h.clone(), q(0, 1)), afft(h.clone(), q(1, 1)), afft(h, q(1, 1))],
        vec![afft(q(1, 1), q(0, 1)), afft(q(1, 1), q(2, 1))],
        q(-8, 1),
    )
}

/// Third family (three_sqrt3_integral at t = 0). The factor 1/(2s+t+1) is absorbed as
/// ((1+t)/2)_s / ((3+t)/2)_s / (1+t), cancelling the denominator ((1+t)/2)_s.
pub fn three_sqrt3_family() -> IntegrandSpec {
    IntegrandSpec::new(
        // (15s + 4)(2s + 1) + t(33s + 16) = 30 s^2 + 23 s + 4 + 33 s t + 16 t
        poly(&[(30, 2, 0), (23, 1, 0), (4, 0, 0), (33, 1, 1), (16, 0, 1)]),
        vec![
            afft(q(1, 2), q(0, 1)),
            afft(q(1, 2), q(2, 1)),
            afft(q(1, 3), q(1, 1)),
            afft(q(2, 3), q(1, 1)),
        ],
        vec![
            afft(q(3, 2), q(1, 2)),
            afft(q(1, 1), q(1, 2)),
            afft(q(1, 1), q(1, 1)),
        ],
        q(-4, 1),
    )
    .with_scale(Scale {
        constant: ConstExpr::int(1),
        // 1/(1+t) = Γ(1+t)/Γ(2+t)
        t_term: HyperTerm::poch_general(afft(q(2, 1), q(1, 1)), afft(q(1, 1), q(1, 1))),
    })
}

fn scale(constant: ConstExpr, t_term: HyperTerm) -> Scale {
    Scale { constant, t_term }
}

fn over_pi(num: ConstExpr, power: i32) -> ConstExpr {
    ConstExpr::div(num, ConstExpr::pow(ConstExpr::pi(), power))
}

/// (√3/π) (1)_t^2 / ((1/6)_t (5/6)_t)
pub fn sqrt3_rhs() -> Scale {
    scale(
        over_pi(ConstExpr::sqrt(3), 1),
        sqrt3_t_normalisation().t_term.recip().expect("nonzero term"),
    )
}

/// (4/π^2) (1)_t^4 / (1/2)_t^4
pub fn four_over_pi2_rhs() -> Scale {
    scale(
        over_pi(ConstExpr::int(4), 2),
        product(&[poch_k(q(1, 1)).pow(4).unwrap(), inv(poch_k(q(1, 2)).pow(4).unwrap())]),
    )
}

/// (1/π) (1)_t / (1/2)_t
pub fn one_over_pi_rhs() -> Scale {
    scale(over_pi(ConstExpr::int(1), 1), product(&[poch_k(q(1, 1)), inv(poch_k(q(1, 2)))]))
}

/// (3√3/π) 2^{-6t} (1)_t^2 / ((1/4)_t (3/4)_t)
pub fn three_sqrt3_rhs() -> Scale {
    scale(
        over_pi(ConstExpr::mul(vec![ConstExpr::int(3), ConstExpr::sqrt(3)]), 1),
        product(&[
            HyperTerm::exp(&q(1, 64), AffineForm::var_k()),
            poch_k(q(1, 1)).pow(2).unwrap(),
            inv(poch_k(q(1, 4))),
            inv(poch_k(q(3, 4))),
        ]),
    )
}

pub fn four_over_pi2_integral() -> IntegrandSpec {
    four_over_pi2_family().with_t(Rational::new())
}

pub fn one_over_pi_integral() -> IntegrandSpec {
    one_over_pi_family().with_t(Rational::new())
}

pub fn three_sqrt3_integral() -> IntegrandSpec {
    three_sqrt3_family().with_t(Rational::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rf_equal;
    use crate::hyperterm::{dual, substitute, term_ratio, wz_verify};

    #[test]
    fn pairs_verify() {
        assert!(wz_verify(&sqrt3_pair()).unwrap().wz_holds);
        assert!(wz_verify(&quarter_pair()).unwrap().wz_holds);
        assert!(wz_verify(&quarter_dual_pair()).unwrap().wz_holds);
        assert!(wz_verify(&sixteen27_pair()).unwrap().wz_holds);
    }

    #[test]
    fn perturbed_pairs_fail() {
        assert!(!wz_verify(&sqrt3_pair_with(2)).unwrap().wz_holds);
        assert!(!wz_verify(&quarter_pair_with(5)).unwrap().wz_holds);
        assert!(!wz_verify(&quarter_dual_pair_with(1)).unwrap().wz_holds);
        assert!(!wz_verify(&sixteen27_pair_with(1)).unwrap().wz_holds);
    }

    #[test]
    fn uncorrected_variants() {
        let opposite = WZPair::new(quarter_pair().f, quarter_g_opposite());
        assert!(!wz_verify(&opposite).unwrap().wz_holds);
        assert!(!wz_verify(&sixteen27_pair_uncorrected()).unwrap().wz_holds);
    }

    #[test]
    fn factorial_form_pair_verifies() {
        let u = quarter_u_factorial();
        let p = quarter_pair();
        let r_f = term_ratio(&p.f, &quarter_u()).unwrap();
        let r_g = term_ratio(&p.g, &quarter_u()).unwrap();
        let pair = WZPair::new(u.mul(&HyperTerm::from_rat(r_f)), u.mul(&HyperTerm::from_rat(r_g)));
        assert!(wz_verify(&pair).unwrap().wz_holds);
        // the two forms differ by the duplication formula, which integer-shift reduction does not see
        assert!(term_ratio(&quarter_u(), &u).is_err());
    }

    #[test]
    fn certificate_of_sqrt3_pair() {
        let p = sqrt3_pair();
        let c = term_ratio(&p.g, &p.f).unwrap();
        // -3 (n+2k+1)(5n+6k+1) / (n (n-2))
        let expected = RationalFunction::new(
            &poly(&[(-3, 1, 0), (-6, 0, 1), (-3, 0, 0)]) * &poly(&[(5, 1, 0), (6, 0, 1), (1, 0, 0)]),
            poly(&[(1, 2, 0), (-2, 1, 0)]),
        )
        .unwrap();
        assert!(rf_equal(&c, &expected));
    }

    #[test]
    fn dual_of_ex1_g() {
        let d = dual(&quarter_g_opposite()).unwrap();
        let shifted = substitute(&d, Var::K, &AffineForm::new(-1, 0, 1)).unwrap();
        let r = term_ratio(&shifted, &quarter_dual_pair().g).unwrap();
        assert_eq!(r.as_constant(), Some(q(-1, 4)));
    }
}
