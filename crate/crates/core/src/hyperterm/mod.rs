//! Hypergeometric terms in Gamma-normal form.
//!
//! A term is a product of Gamma factors with affine arguments in `(n, k)`,
//! prime-power exponentials, optional `(-1)^n`, `(-1)^k` signs, an exact
//! rational function and an exact constant. Pochhammer symbols and factorials
//! are stored as Gamma factors.

mod barnesify;
mod dual;
mod eval;
mod ops;
mod reduce;

pub use barnesify::barnesify;
pub use dual::{dual, dual_pair};
pub use eval::{numeric_eval, numeric_eval_at};
pub use ops::{map_vars, shift_quotient, substitute, term_ratio, wz_verify, VerificationReport, WZPair};

use std::collections::BTreeMap;
use std::fmt;

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::exact::{AffineForm, BiPoly, RationalFunction};
use crate::Var;

/// Γ(arg)^exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFactor {
    pub arg: AffineForm,
    pub exponent: i32,
}

/// base^exponent with a positive rational base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpFactor {
    pub base: Rational,
    pub exponent: AffineForm,
}

/// (-1)^var.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignFactor {
    pub variable: Var,
    pub present: bool,
}

/// Exact constant `coeff * Π Γ(g)^e * Π p^r` with every Gamma argument in
/// `(0, 1)` (or a non-positive integer) and every prime exponent in `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConstTag {
    pub coeff: Rational,
    pub gammas: BTreeMap<Rational, i32>,
    pub powers: BTreeMap<Integer, Rational>,
}

impl Default for ConstTag {
    fn default() -> Self {
        ConstTag {
            coeff: Rational::from(1),
            gammas: BTreeMap::new(),
            powers: BTreeMap::new(),
        }
    }
}

impl ConstTag {
    fn mul_gamma(&mut self, arg: &Rational, e: i32) {
        if e == 0 {
            return;
        }
        // non-positive integers are poles; keep them so evaluation reports them
        if arg.denom() == &1 && *arg <= 0 {
            bump(&mut self.gammas, arg.clone(), e);
            return;
        }
        let fl = Rational::from(arg.floor_ref());
        let mut frac = Rational::from(arg - &fl);
        if frac == 0 {
            frac = Rational::from(1);
        }
        // Γ(arg) = Γ(frac) * Π_{j} (frac + j) for arg > frac, or divided for arg < frac
        let mut factor = Rational::from(1);
        let mut x = frac.clone();
        while x < *arg {
            factor *= &x;
            x += 1;
        }
        let mut x = arg.clone();
        while x < frac {
            factor /= &x;
            x += 1;
        }
        self.coeff *= factor.pow(e);
        if frac != 1 {
            bump(&mut self.gammas, frac, e);
        }
    }

    fn mul_power(&mut self, p: &Integer, r: &Rational) {
        let total = r + self.powers.get(p).cloned().unwrap_or_default();
        let fl = Integer::from(total.floor_ref());
        let frac = Rational::from(&total - &fl);
        let shift = fl.to_i32().expect("exponent fits in i32");
        self.coeff *= Rational::from(p.clone()).pow(shift);
        if frac == 0 {
            self.powers.remove(p);
        } else {
            self.powers.insert(p.clone(), frac);
        }
    }

    fn mul(&mut self, other: &ConstTag) {
        self.coeff *= &other.coeff;
        for (a, e) in &other.gammas {
            bump(&mut self.gammas, a.clone(), *e);
        }
        for (p, r) in &other.powers {
            self.mul_power(p, r);
        }
    }

    fn pow(&self, e: i32) -> ConstTag {
        let mut out = ConstTag {
            coeff: self.coeff.clone().pow(e),
            ..ConstTag::default()
        };
        for (a, x) in &self.gammas {
            bump(&mut out.gammas, a.clone(), x * e);
        }
        for (p, r) in &self.powers {
            out.mul_power(p, &Rational::from(r * e));
        }
        out
    }

    /// True when only the rational coefficient is present.
    pub fn is_rational(&self) -> bool {
        self.gammas.is_empty() && self.powers.is_empty()
    }
}

fn bump<K: Ord>(map: &mut BTreeMap<K, i32>, key: K, e: i32) {
    let v = map.entry(key).or_insert(0);
    *v += e;
    if *v == 0 {
        map.retain(|_, v| *v != 0);
    }
}

/// Trial-division factorization of a positive integer; a cofactor without
/// small factors is kept as a single base.
fn factor_integer(mut n: Integer) -> Vec<(Integer, u32)> {
    let mut out = Vec::new();
    let mut p = 2u32;
    while n > 1 && p < 100_000 {
        if n.is_divisible_u(p) {
            let mut e = 0;
            while n.is_divisible_u(p) {
                n /= p;
                e += 1;
            }
            out.push((Integer::from(p), e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Prime factorization of a positive rational with signed exponents.
pub(crate) fn factor_rational(r: &Rational) -> Vec<(Integer, i32)> {
    assert!(*r > 0, "exponential base must be positive");
    let mut out: Vec<(Integer, i32)> = factor_integer(r.numer().clone())
        .into_iter()
        .map(|(p, e)| (p, e as i32))
        .collect();
    out.extend(
        factor_integer(r.denom().clone())
            .into_iter()
            .map(|(p, e)| (p, -(e as i32))),
    );
    out.sort();
    out
}

/// A hypergeometric term in Gamma-normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperTerm {
    gammas: BTreeMap<AffineForm, i32>,
    exps: BTreeMap<Integer, AffineForm>,
    sign_n: bool,
    sign_k: bool,
    rat: RationalFunction,
    konst: ConstTag,
}

impl Default for HyperTerm {
    fn default() -> Self {
        HyperTerm::one()
    }
}

impl HyperTerm {
    pub fn one() -> Self {
        HyperTerm {
            gammas: BTreeMap::new(),
            exps: BTreeMap::new(),
            sign_n: false,
            sign_k: false,
            rat: RationalFunction::one(),
            konst: ConstTag::default(),
        }
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let mut t = HyperTerm::one();
        t.konst.coeff = c.into();
        t
    }

    pub fn from_rat(r: RationalFunction) -> Self {
        let mut t = HyperTerm::one();
        t.rat = r;
        t
    }

    pub fn from_poly(p: BiPoly) -> Self {
        HyperTerm::from_rat(RationalFunction::from_poly(p))
    }

    /// Γ(arg)^e.
    pub fn gamma(arg: AffineForm, e: i32) -> Self {
        let mut t = HyperTerm::one();
        t.push_gamma(arg, e);
        t
    }

    /// (a)_var = Γ(a + var) / Γ(a), where `a` may itself depend on the other variable.
    pub fn poch(a: AffineForm, var: Var) -> Self {
        let shifted = match var {
            Var::N => &a + &AffineForm::var_n(),
            Var::K => &a + &AffineForm::var_k(),
        };
        HyperTerm::poch_general(a, shifted)
    }

    /// Γ(upper) / Γ(lower): the Pochhammer symbol (lower)_{upper - lower}.
    pub fn poch_general(lower: AffineForm, upper: AffineForm) -> Self {
        let mut t = HyperTerm::one();
        t.push_gamma(upper, 1);
        t.push_gamma(lower, -1);
        t
    }

    /// x! = Γ(x + 1).
    pub fn factorial(x: AffineForm) -> Self {
        HyperTerm::gamma(x.add_const(&Rational::from(1)), 1)
    }

    /// base^exponent.
    pub fn exp(base: &Rational, exponent: AffineForm) -> Self {
        let mut t = HyperTerm::one();
        t.push_exp(base, &exponent);
        t
    }

    /// (-1)^var.
    pub fn sign(var: Var) -> Self {
        let mut t = HyperTerm::one();
        match var {
            Var::N => t.sign_n = true,
            Var::K => t.sign_k = true,
        }
        t
    }

    fn push_gamma(&mut self, arg: AffineForm, e: i32) {
        if e == 0 {
            return;
        }
        if arg.is_constant() {
            self.konst.mul_gamma(&arg.c, e);
        } else {
            bump(&mut self.gammas, arg, e);
        }
    }

    fn push_exp(&mut self, base: &Rational, exponent: &AffineForm) {
        for (p, e) in factor_rational(base) {
            let scaled = exponent.scale(&Rational::from(e));
            self.push_prime_exp(&p, &scaled);
        }
    }

    fn push_prime_exp(&mut self, p: &Integer, exponent: &AffineForm) {
        if exponent.c != 0 {
            self.konst.mul_power(p, &exponent.c);
        }
        let var_part = AffineForm::new(0, exponent.n.clone(), exponent.k.clone());
        if var_part.is_constant() {
            return;
        }
        let total = match self.exps.get(p) {
            Some(old) => old + &var_part,
            None => var_part,
        };
        if total.is_constant() {
            self.exps.remove(p);
        } else {
            self.exps.insert(p.clone(), total);
        }
    }

    pub fn mul(&self, other: &HyperTerm) -> HyperTerm {
        let mut out = self.clone();
        for (a, e) in &other.gammas {
            out.push_gamma(a.clone(), *e);
        }
        for (p, a) in &other.exps {
            out.push_prime_exp(p, a);
        }
        out.sign_n ^= other.sign_n;
        out.sign_k ^= other.sign_k;
        out.rat = &out.rat * &other.rat;
        out.konst.mul(&other.konst);
        out
    }

    /// Integer power; fails only when inverting a zero rational part.
    pub fn pow(&self, e: i32) -> crate::Result<HyperTerm> {
        let mut out = HyperTerm::one();
        for (a, x) in &self.gammas {
            out.push_gamma(a.clone(), x * e);
        }
        for (p, a) in &self.exps {
            out.push_prime_exp(p, &a.scale(&Rational::from(e)));
        }
        out.sign_n = self.sign_n && e % 2 != 0;
        out.sign_k = self.sign_k && e % 2 != 0;
        out.rat = self.rat.pow(e)?;
        out.konst = self.konst.pow(e);
        Ok(out)
    }

    pub fn recip(&self) -> crate::Result<HyperTerm> {
        self.pow(-1)
    }

    pub fn scale(&self, c: &Rational) -> HyperTerm {
        let mut out = self.clone();
        out.konst.coeff *= c;
        out
    }

    pub fn neg(&self) -> HyperTerm {
        self.scale(&Rational::from(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() || self.konst.coeff == 0
    }

    pub fn gamma_factors(&self) -> Vec<GammaFactor> {
        self.gammas
            .iter()
            .map(|(a, e)| GammaFactor {
                arg: a.clone(),
                exponent: *e,
            })
            .collect()
    }

    pub fn exp_factors(&self) -> Vec<ExpFactor> {
        self.exps
            .iter()
            .map(|(p, a)| ExpFactor {
                base: Rational::from(p.clone()),
                exponent: a.clone(),
            })
            .collect()
    }

    pub fn sign_factors(&self) -> Vec<SignFactor> {
        vec![
            SignFactor {
                variable: Var::N,
                present: self.sign_n,
            },
            SignFactor {
                variable: Var::K,
                present: self.sign_k,
            },
        ]
    }

    pub fn has_sign(&self, var: Var) -> bool {
        match var {
            Var::N => self.sign_n,
            Var::K => self.sign_k,
        }
    }

    pub fn rat(&self) -> &RationalFunction {
        &self.rat
    }

    pub fn const_tag(&self) -> &ConstTag {
        &self.konst
    }

    /// Geometric growth per unit step of `var`: Π p^{coefficient of var}, when rational.
    pub fn exp_ratio(&self, var: Var) -> Option<Rational> {
        let mut r = Rational::from(1);
        for (p, a) in &self.exps {
            let c = a.coeff(var);
            if c.denom() != &1 {
                return None;
            }
            r *= Rational::from(p.clone()).pow(c.numer().to_i32()?);
        }
        Some(r)
    }

    /// Does any factor depend on `var`?
    pub fn depends_on(&self, var: Var) -> bool {
        self.gammas.keys().any(|a| *a.coeff(var) != 0)
            || self.exps.values().any(|a| *a.coeff(var) != 0)
            || self.has_sign(var)
            || match var {
                Var::N => self.rat.num().degree_n() > 0 || self.rat.den().degree_n() > 0,
                Var::K => self.rat.num().degree_k() > 0 || self.rat.den().degree_k() > 0,
            }
    }
}

impl fmt::Display for HyperTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.konst.coeff != 1 || (self.rat.is_one() && self.is_bare()) {
            parts.push(format!("{}", self.konst.coeff));
        }
        for (a, e) in &self.konst.gammas {
            parts.push(power(format!("gamma({a})"), *e));
        }
        for (p, r) in &self.konst.powers {
            parts.push(format!("pow({p}, {r})"));
        }
        if self.sign_n {
            parts.push("sign(n)".into());
        }
        if self.sign_k {
            parts.push("sign(k)".into());
        }
        for (p, a) in &self.exps {
            parts.push(format!("pow({p}, {a})"));
        }
        for (a, e) in &self.gammas {
            parts.push(power(format!("gamma({a})"), *e));
        }
        if !self.rat.is_one() {
            parts.push(format!("({})", self.rat));
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl HyperTerm {
    fn is_bare(&self) -> bool {
        self.gammas.is_empty()
            && self.exps.is_empty()
            && !self.sign_n
            && !self.sign_k
            && self.konst.is_rational()
    }
}

fn power(base: String, e: i32) -> String {
    if e == 1 {
        base
    } else {
        format!("{base}^{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::from((a, b))
    }

    #[test]
    fn constant_gammas_are_canonical() {
        // Γ(5/2) = (3/4) Γ(1/2)
        let t = HyperTerm::gamma(AffineForm::constant(q(5, 2)), 1);
        assert_eq!(t.const_tag().coeff, q(3, 4));
        assert_eq!(t.const_tag().gammas.get(&q(1, 2)), Some(&1));
        // Γ(-1/2) = -2 Γ(1/2)
        let t = HyperTerm::gamma(AffineForm::constant(q(-1, 2)), 1);
        assert_eq!(t.const_tag().coeff, q(-2, 1));
        // Γ(4) = 6
        let t = HyperTerm::gamma(AffineForm::constant(4), 1);
        assert_eq!(t.const_tag().coeff, 6);
        assert!(t.const_tag().gammas.is_empty());
    }

    #[test]
    fn exponentials_split_into_primes() {
        let a = HyperTerm::exp(&q(16, 9), AffineForm::var_n());
        let b = HyperTerm::exp(&q(4, 3), AffineForm::new(0, 2, 0));
        assert_eq!(a, b);
        assert_eq!(a.exp_ratio(Var::N), Some(q(16, 9)));
        let c = HyperTerm::exp(&q(4, 1), AffineForm::new(q(1, 2), 1, 0));
        assert_eq!(c.const_tag().coeff, 2);
        assert!(c.const_tag().powers.is_empty());
    }

    #[test]
    fn product_and_inverse_cancel() {
        let t = HyperTerm::poch(AffineForm::new(q(1, 4), 0, q(3, 2)), Var::N)
            .mul(&HyperTerm::sign(Var::N))
            .mul(&HyperTerm::exp(&q(16, 9), AffineForm::var_n()));
        let inv = t.recip().unwrap();
        assert_eq!(t.mul(&inv), HyperTerm::one());
    }
}
