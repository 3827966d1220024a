use rug::ops::Pow;
use rug::Rational;

use super::reduce::reduce;
use super::HyperTerm;
use crate::error::{Error, Result};
use crate::exact::{rf_equal, AffineForm, RationalFunction};
use crate::Var;

/// A candidate WZ pair `F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WZPair {
    pub f: HyperTerm,
    pub g: HyperTerm,
    pub certificate: Option<RationalFunction>,
}

impl WZPair {
    pub fn new(f: HyperTerm, g: HyperTerm) -> Self {
        WZPair {
            f,
            g,
            certificate: None,
        }
    }

    pub fn with_certificate(mut self, c: RationalFunction) -> Self {
        assert!(!c.is_zero(), "certificate must be nonzero");
        self.certificate = Some(c);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub wz_holds: bool,
    pub certificate_used: RationalFunction,
    pub residual: RationalFunction,
    pub notes: String,
}

/// `t(var + 1) / t` as an exact rational function.
pub fn shift_quotient(t: &HyperTerm, var: Var) -> Result<RationalFunction> {
    if t.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut factors = Vec::new();
    for (arg, e) in &t.gammas {
        let delta = arg.coeff(var);
        if *delta == 0 {
            continue;
        }
        factors.push((arg.add_const(delta), *e));
        factors.push((arg.clone(), -*e));
    }
    let reduced = reduce(factors);
    if !reduced.leftover.is_empty() {
        return Err(Error::NotHypergeometric {
            var: var.name(),
            detail: reduced.describe_leftover(),
        });
    }
    let mut c = Rational::from(1);
    for (p, a) in &t.exps {
        let delta = a.coeff(var);
        if delta.denom() != &1 {
            return Err(Error::NotHypergeometric {
                var: var.name(),
                detail: format!("{p}^({a}) has a non-integer step"),
            });
        }
        c *= Rational::from(p.clone()).pow(delta.numer().to_i32().expect("small exponent"));
    }
    if t.has_sign(var) {
        c = -c;
    }
    let (dn, dk) = match var {
        Var::N => (Rational::from(1), Rational::new()),
        Var::K => (Rational::new(), Rational::from(1)),
    };
    let rat_ratio = &t.rat.shift(&dn, &dk) / &t.rat;
    Ok(&(&reduced.rat * &rat_ratio) * &RationalFunction::constant(c))
}

/// The rational function `a / b`, if the terms are proportional.
pub fn term_ratio(a: &HyperTerm, b: &HyperTerm) -> Result<RationalFunction> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if a.is_zero() {
        return Ok(RationalFunction::zero());
    }
    if a.sign_n != b.sign_n || a.sign_k != b.sign_k {
        return Err(Error::NotProportional("sign factors differ".into()));
    }
    if a.exps != b.exps {
        return Err(Error::NotProportional("exponential factors differ".into()));
    }
    if a.konst.gammas != b.konst.gammas || a.konst.powers != b.konst.powers {
        return Err(Error::NotProportional("constant factors differ".into()));
    }
    let factors = a
        .gammas
        .iter()
        .map(|(x, e)| (x.clone(), *e))
        .chain(b.gammas.iter().map(|(x, e)| (x.clone(), -*e)));
    let reduced = reduce(factors);
    if !reduced.leftover.is_empty() {
        return Err(Error::NotProportional(format!(
            "Gamma factors {} do not cancel",
            reduced.describe_leftover()
        )));
    }
    let c = Rational::from(&a.konst.coeff / &b.konst.coeff);
    let r = &(&reduced.rat * &(&a.rat / &b.rat)) * &RationalFunction::constant(c);
    Ok(r)
}

/// Exact check of the WZ relation, divided through by `F(n, k)`:
/// `(ρ - 1) - (C(n,k+1) σ - C(n,k)) ≡ 0` with ρ, σ the shift quotients of F.
pub fn wz_verify(p: &WZPair) -> Result<VerificationReport> {
    let mut notes = Vec::new();
    let computed = term_ratio(&p.g, &p.f);
    let c = match (&p.certificate, computed) {
        (Some(c), Ok(actual)) => {
            if !rf_equal(c, &actual) {
                notes.push(format!("stored certificate differs from G/F = {actual}"));
            }
            c.clone()
        }
        (Some(c), Err(e)) => {
            notes.push(format!("G/F could not be formed: {e}"));
            c.clone()
        }
        (None, Ok(actual)) => actual,
        (None, Err(e)) => return Err(e),
    };
    let rho = shift_quotient(&p.f, Var::N)?;
    let sigma = shift_quotient(&p.f, Var::K)?;
    let c_next = c.shift(&Rational::new(), &Rational::from(1));
    let lhs = &rho - &RationalFunction::one();
    let rhs = &(&c_next * &sigma) - &c;
    let residual = &lhs - &rhs;
    let wz_holds = residual.is_zero();
    if wz_holds {
        notes.push("F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k) holds identically".into());
    }
    Ok(VerificationReport {
        wz_holds,
        certificate_used: c,
        residual,
        notes: notes.join("; "),
    })
}

/// Replace `n` and `k` simultaneously by affine forms.
pub fn map_vars(t: &HyperTerm, n_img: &AffineForm, k_img: &AffineForm) -> Result<HyperTerm> {
    let mut out = HyperTerm::constant(t.konst.coeff.clone());
    out.konst = t.konst.clone();
    for (a, e) in &t.gammas {
        out.push_gamma(a.compose(n_img, k_img), *e);
    }
    for (p, a) in &t.exps {
        out.push_prime_exp(p, &a.compose(n_img, k_img));
    }
    for (present, img) in [(t.sign_n, n_img), (t.sign_k, k_img)] {
        if !present {
            continue;
        }
        let ints = [&img.c, &img.n, &img.k].iter().all(|x| x.denom() == &1);
        if !ints {
            return Err(Error::DomainError(format!(
                "sign factor under the non-integer substitution {img}"
            )));
        }
        let odd = |x: &Rational| x.numer().is_odd();
        out.sign_n ^= odd(&img.n);
        out.sign_k ^= odd(&img.k);
        if odd(&img.c) {
            out.konst.coeff = -out.konst.coeff.clone();
        }
    }
    out.rat = t.rat.substitute(&n_img.to_poly(), &k_img.to_poly())?;
    Ok(out)
}

/// Replace `var` by `image` (e.g. `k -> k - 1`, `n -> n + 2`).
pub fn substitute(t: &HyperTerm, var: Var, image: &AffineForm) -> Result<HyperTerm> {
    match var {
        Var::N => map_vars(t, image, &AffineForm::var_k()),
        Var::K => map_vars(t, &AffineForm::var_n(), image),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::BiPoly;

    fn q(a: i64, b: i64) -> Rational {
        Rational::from((a, b))
    }

    fn lin(c: Rational, n: i64, k: i64) -> BiPoly {
        AffineForm::new(c, n, k).to_poly()
    }

    #[test]
    fn pochhammer_shift() {
        let t = HyperTerm::poch(AffineForm::constant(q(1, 2)), Var::N);
        let r = shift_quotient(&t, Var::N).unwrap();
        assert_eq!(r, RationalFunction::from_poly(lin(q(1, 2), 1, 0)));
    }

    #[test]
    fn half_integer_coefficient_product() {
        let a = AffineForm::new(q(1, 4), 0, q(3, 2));
        let b = AffineForm::new(q(3, 4), 0, q(3, 2));
        let t = HyperTerm::poch(a, Var::N).mul(&HyperTerm::poch(b, Var::N));
        let r = shift_quotient(&t, Var::K).unwrap();
        let num = &(&lin(q(1, 2), 2, 3) * &lin(q(3, 2), 2, 3)) * &lin(q(5, 2), 2, 3);
        let den = &(&lin(q(1, 2), 0, 3) * &lin(q(3, 2), 0, 3)) * &lin(q(5, 2), 0, 3);
        assert_eq!(r, RationalFunction::new(num, den).unwrap());
    }

    #[test]
    fn unmatched_half_shift() {
        let t = HyperTerm::gamma(AffineForm::new(q(1, 3), 0, q(1, 2)), 1);
        assert!(matches!(
            shift_quotient(&t, Var::K),
            Err(Error::NotHypergeometric { var: 'k', .. })
        ));
    }

    #[test]
    fn ratio_of_different_bases() {
        let a = HyperTerm::exp(&q(16, 9), AffineForm::var_n());
        let b = HyperTerm::exp(&q(2, 1), AffineForm::var_n());
        assert!(matches!(term_ratio(&a, &b), Err(Error::NotProportional(_))));
        assert!(term_ratio(&a, &a).unwrap().is_one());
    }

    #[test]
    fn substitution_composes() {
        let t = HyperTerm::poch(AffineForm::constant(q(1, 3)), Var::N)
            .mul(&HyperTerm::sign(Var::N))
            .mul(&HyperTerm::from_poly(lin(q(1, 1), 1, 1)));
        let one = AffineForm::new(1, 1, 0);
        let two = AffineForm::new(2, 1, 0);
        let a = substitute(&substitute(&t, Var::N, &one).unwrap(), Var::N, &one).unwrap();
        let b = substitute(&t, Var::N, &two).unwrap();
        assert_eq!(a, b);
        assert_eq!(substitute(&t, Var::N, &AffineForm::var_n()).unwrap(), t);
    }

    #[test]
    fn trivial_pair() {
        // F = 1, G = n is a (degenerate) pair; F = 1, G = k is not
        let f = HyperTerm::one();
        let rep = wz_verify(&WZPair::new(f.clone(), HyperTerm::from_poly(BiPoly::var_n()))).unwrap();
        assert!(rep.wz_holds);
        let rep = wz_verify(&WZPair::new(f, HyperTerm::from_poly(BiPoly::var_k()))).unwrap();
        assert!(!rep.wz_holds);
        assert!(!rep.residual.is_zero());
    }
}
