//! WZ duality: negate both variables, then reflect every variable Gamma
//! factor so that `(a)_{-n} -> (-1)^n / (1-a)_n` and
//! `(1)_{-n} -> n (-1)^n / (1)_n` (and the same in `k`).

use std::collections::BTreeMap;

use rug::Rational;

use super::ops::{map_vars, WZPair};
use super::HyperTerm;
use crate::error::{Error, Result};
use crate::exact::AffineForm;

fn is_int(x: &Rational) -> bool {
    x.denom() == &1
}

fn floor(x: &Rational) -> Rational {
    Rational::from(x.floor_ref())
}

fn odd(x: &Rational) -> bool {
    x.numer().is_odd()
}

/// The dual of `t(-n, -k)`.
///
/// Each Γ(L)^e with `L = c + a n + b k` becomes `Γ(1-L)^{-e}` times:
/// * `((-1)^{a n + b k} Γ(c) Γ(1-c))^e` for integer `a, b` and non-integer `c`;
/// * `((-1)^{c+1} (-1)^{a n + b k})^e` for integer `a, b, c` (the regularised
///   value of π/sin(πc) matching `(1)_{-n} -> n (-1)^n / (1)_n`);
/// * for non-integer `a` or `b`, a sign from the integer parts, with the
///   remaining sine factors required to cancel among factors sharing the same
///   fractional parts.
pub fn dual(t: &HyperTerm) -> Result<HyperTerm> {
    let neg_n = -&AffineForm::var_n();
    let neg_k = -&AffineForm::var_k();
    let negated = map_vars(t, &neg_n, &neg_k)?;

    let mut out = negated.clone();
    out.gammas.clear();
    let mut sine_classes: BTreeMap<(Rational, Rational, Rational), i32> = BTreeMap::new();
    let mut flip_n = false;
    let mut flip_k = false;
    let mut flip_const = false;
    let mut reflected = HyperTerm::one();

    for (arg, &e) in &negated.gammas {
        reflected.push_gamma(&AffineForm::constant(1) - arg, -e);
        let e_odd = e % 2 != 0;
        if is_int(&arg.n) && is_int(&arg.k) {
            if e_odd {
                flip_n ^= odd(&arg.n);
                flip_k ^= odd(&arg.k);
            }
            if is_int(&arg.c) {
                // (-1)^{c+1}
                if e_odd && !odd(&arg.c) {
                    flip_const ^= true;
                }
            } else {
                let one_minus_c = Rational::from(1 - &arg.c);
                reflected.push_gamma(AffineForm::constant(arg.c.clone()), e);
                reflected.push_gamma(AffineForm::constant(one_minus_c), e);
            }
        } else {
            let (fa, fb, fc) = (floor(&arg.n), floor(&arg.k), floor(&arg.c));
            if e_odd {
                flip_n ^= odd(&fa);
                flip_k ^= odd(&fb);
                flip_const ^= odd(&fc);
            }
            let key = (
                Rational::from(&arg.n - &fa),
                Rational::from(&arg.k - &fb),
                Rational::from(&arg.c - &fc),
            );
            *sine_classes.entry(key).or_insert(0) += e;
        }
    }
    let unbalanced: Vec<String> = sine_classes
        .iter()
        .filter(|(_, e)| **e != 0)
        .map(|((a, b, c), e)| format!("sin(pi*({}))^{e}", AffineForm::new(c.clone(), a.clone(), b.clone())))
        .collect();
    if !unbalanced.is_empty() {
        return Err(Error::RuleNotApplicable(format!(
            "non-constant reflection factors remain: {}",
            unbalanced.join(", ")
        )));
    }
    out = out.mul(&reflected);
    out.sign_n ^= flip_n;
    out.sign_k ^= flip_k;
    if flip_const {
        out.konst.coeff = -out.konst.coeff.clone();
    }
    Ok(out)
}

/// Dual of a WZ pair. From `F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k)` at
/// `(-n-1, -k)`, the pair `(F^(n,k), G^(n+1,k-1))` is again a WZ pair, where
/// `^` is [`dual`].
pub fn dual_pair(p: &WZPair) -> Result<WZPair> {
    let f = dual(&p.f)?;
    let g = map_vars(
        &dual(&p.g)?,
        &AffineForm::new(1, 1, 0),
        &AffineForm::new(-1, 0, 1),
    )?;
    Ok(WZPair::new(f, g))
}
