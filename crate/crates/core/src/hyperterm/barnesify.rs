use rug::Rational;

use super::HyperTerm;
use crate::barnes::{IntegrandSpec, Scale};
use crate::closed_form::ConstExpr;
use crate::error::{Error, Result};
use crate::exact::{AffineForm, BiPoly, RationalFunction};
use crate::Var;

/// Turn a series coefficient `t(n) = B(n) (-1)^n w^n / n!` into the Barnes
/// integrand `B(s) Γ(-s) w^s`, i.e. `z = -w`. Dependence on `k` is carried as
/// the parameter `t`.
pub fn barnesify(t: &HyperTerm, series_var: Var) -> Result<IntegrandSpec> {
    if series_var != Var::N {
        return Err(Error::NotBarnesForm("the series variable must be n".into()));
    }
    if !t.sign_n {
        return Err(Error::MissingSignFactor);
    }
    let w = t
        .exp_ratio(Var::N)
        .ok_or_else(|| Error::NotBarnesForm("exponential base in n is not rational".into()))?;

    let n_plus_one = AffineForm::new(1, 1, 0);
    let mut gammas = t.gammas.clone();
    match gammas.get_mut(&n_plus_one) {
        Some(e) if *e < 0 => {
            *e += 1;
            if *e == 0 {
                gammas.remove(&n_plus_one);
            }
        }
        _ => return Err(Error::NotBarnesForm("no 1/n! factor to absorb into Gamma(-s)".into())),
    }

    let mut scale_t = HyperTerm::one();
    scale_t.konst = t.konst.clone();
    scale_t.sign_k = t.sign_k;
    let mut poch_num = Vec::new();
    let mut poch_den = Vec::new();
    for (arg, e) in gammas {
        if arg.n == 0 {
            scale_t.push_gamma(arg, e);
        } else if arg.n == 1 {
            let base = AffineForm::new(arg.c.clone(), 0, arg.k.clone());
            scale_t.push_gamma(base.clone(), e);
            let list = if e > 0 { &mut poch_num } else { &mut poch_den };
            for _ in 0..e.unsigned_abs() {
                list.push(base.clone());
            }
        } else {
            return Err(Error::NotBarnesForm(format!(
                "Gamma({arg}) has n-coefficient other than 0 or 1"
            )));
        }
    }
    for (p, a) in &t.exps {
        let k_part = AffineForm::new(0, 0, a.k.clone());
        scale_t.push_prime_exp(p, &k_part);
    }
    if t.rat.den().degree_n() > 0 {
        return Err(Error::NotBarnesForm(format!(
            "rational factor {} has a denominator depending on n",
            t.rat
        )));
    }
    let den = RationalFunction::new(BiPoly::one(), t.rat.den().clone())?;
    scale_t = scale_t.mul(&HyperTerm::from_rat(den));

    Ok(IntegrandSpec {
        prefactor: t.rat.num().clone(),
        poch_num,
        poch_den,
        z: Rational::from(-&w),
        t_value: None,
        scale: Scale {
            constant: ConstExpr::int(1),
            t_term: scale_t,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_binomial_series() {
        let t = HyperTerm::poch(AffineForm::constant(Rational::from((1, 2))), Var::N)
            .mul(&HyperTerm::sign(Var::N))
            .mul(&HyperTerm::exp(&Rational::from(2), AffineForm::var_n()))
            .mul(&HyperTerm::poch(AffineForm::constant(1), Var::N).recip().unwrap());
        let spec = barnesify(&t, Var::N).unwrap();
        assert_eq!(spec.z, -2);
        assert_eq!(spec.poch_num, vec![AffineForm::constant(Rational::from((1, 2)))]);
        assert!(spec.poch_den.is_empty());
        assert_eq!(spec.prefactor, BiPoly::one());
        assert!(spec.scale.is_one());
    }

    #[test]
    fn missing_sign() {
        let t = HyperTerm::poch(AffineForm::constant(1), Var::N).recip().unwrap();
        assert_eq!(barnesify(&t, Var::N), Err(Error::MissingSignFactor));
    }
}
