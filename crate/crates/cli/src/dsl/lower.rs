use std::collections::HashMap;

use rug::{Integer, Rational};
use wzb_core::barnes::{IntegrandSpec, Scale};
use wzb_core::closed_form::ConstExpr;
use wzb_core::exact::{AffineForm, BiPoly, RationalFunction};
use wzb_core::hyperterm::{HyperTerm, WZPair};
use wzb_core::series_ident::WeightedSeries;
use wzb_core::Var;

use super::ast::{DefKind, Definition, Expr, Func, TermFile};
use super::LowerError;

/// Values for the free parameters, overriding any binding in the file.
#[derive(Clone, Debug, Default)]
pub struct LowerOptions {
    pub t: Option<Rational>,
    pub x: Option<Rational>,
}

#[derive(Clone, Debug)]
pub struct LoweredTerm {
    pub name: String,
    /// Irrational constant factor (1 when absent).
    pub constant: ConstExpr,
    pub term: HyperTerm,
}

#[derive(Clone, Debug)]
pub struct LoweredIntegrand {
    pub name: String,
    pub integrand: IntegrandSpec,
    pub expected: Option<ConstExpr>,
}

#[derive(Clone, Debug)]
pub struct LoweredSeries {
    pub name: String,
    pub coefficient: ConstExpr,
    pub series: WeightedSeries,
    pub expected: Option<ConstExpr>,
}

#[derive(Clone, Debug, Default)]
pub struct LoweredFile {
    pub terms: Vec<LoweredTerm>,
    pub pairs: Vec<(String, WZPair)>,
    pub integrands: Vec<LoweredIntegrand>,
    pub series: Vec<LoweredSeries>,
}

pub fn lower(file: &TermFile, opts: &LowerOptions) -> Result<LoweredFile, LowerError> {
    let mut out = LoweredFile::default();
    for d in &file.definitions {
        let cx = Context::new(d, opts);
        match d.kind {
            DefKind::Term => {
                let b = d
                    .get("T")
                    .or(d.bindings.last())
                    .ok_or_else(|| cx.invalid("a term needs at least one binding"))?;
                let (constant, term) = cx.term_of(&b.value)?;
                out.terms.push(LoweredTerm {
                    name: d.name.clone(),
                    constant,
                    term,
                });
            }
            DefKind::Pair => {
                let f = cx.pure_term(cx.required("F")?)?;
                let g = cx.pure_term(cx.required("G")?)?;
                let mut pair = WZPair::new(f, g);
                if let Some(c) = d.get("C") {
                    pair = pair.with_certificate(cx.rf_of(&c.value)?);
                }
                out.pairs.push((d.name.clone(), pair));
            }
            DefKind::Integrand => out.integrands.push(cx.integrand()?),
            DefKind::Series => out.series.push(cx.series()?),
        }
    }
    Ok(out)
}

/// Where each DSL variable goes.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    N,
    K,
}

struct Context<'a> {
    def: &'a Definition,
    vars: HashMap<&'static str, Slot>,
    params: HashMap<&'static str, Option<Rational>>,
    bound: HashMap<&'a str, &'a Expr>,
    t_override: Option<Rational>,
}

/// The rational value of a term with no variable or irrational parts.
fn rational_value(t: &HyperTerm) -> Option<Rational> {
    let r = t.rat().as_constant()?;
    let free = t.gamma_factors().is_empty()
        && t.exp_factors().is_empty()
        && t.sign_factors().iter().all(|s| !s.present)
        && t.const_tag().is_rational();
    free.then(|| r * &t.const_tag().coeff)
}

fn one() -> ConstExpr {
    ConstExpr::int(1)
}

/// Irrational constant factors collected as a fraction.
#[derive(Default)]
struct ConstAcc {
    num: Vec<ConstExpr>,
    den: Vec<ConstExpr>,
}

impl ConstAcc {
    fn push(&mut self, c: ConstExpr, exp: i64) {
        if c == one() {
            return;
        }
        let list = if exp > 0 { &mut self.num } else { &mut self.den };
        list.push(match exp.unsigned_abs() {
            1 => c,
            e => ConstExpr::pow(c, e as i32),
        });
    }

    fn product(mut v: Vec<ConstExpr>) -> ConstExpr {
        match v.len() {
            0 => one(),
            1 => v.pop().expect("one factor"),
            _ => ConstExpr::Mul(v),
        }
    }

    fn finish(self) -> ConstExpr {
        let num = Self::product(self.num);
        if self.den.is_empty() {
            num
        } else {
            ConstExpr::div(num, Self::product(self.den))
        }
    }
}

fn var_of(slot: Slot) -> Var {
    match slot {
        Slot::N => Var::N,
        Slot::K => Var::K,
    }
}

impl<'a> Context<'a> {
    fn new(def: &'a Definition, opts: &LowerOptions) -> Self {
        let mut vars = HashMap::new();
        let mut params: HashMap<&'static str, Option<Rational>> = HashMap::new();
        match def.kind {
            DefKind::Term | DefKind::Pair => {
                vars.insert("n", Slot::N);
                vars.insert("k", Slot::K);
                params.insert("t", None);
                params.insert("x", None);
            }
            DefKind::Integrand => {
                vars.insert("s", Slot::N);
                vars.insert("t", Slot::K);
                params.insert("x", None);
            }
            DefKind::Series => {
                vars.insert("n", Slot::N);
                params.insert("t", None);
                params.insert("x", None);
            }
        }
        let mut bound = HashMap::new();
        for b in &def.bindings {
            bound.insert(b.name.as_str(), &b.value);
        }
        let mut cx = Context {
            def,
            vars,
            params,
            bound,
            t_override: opts.t.clone(),
        };
        for (name, flag) in [("t", &opts.t), ("x", &opts.x)] {
            if !cx.params.contains_key(name) {
                continue;
            }
            let value = match flag {
                Some(v) => Some(v.clone()),
                None => cx.bound.get(name).and_then(|e| cx.constant_rational(e).ok()),
            };
            cx.params.insert(name, value);
        }
        cx
    }

    fn invalid(&self, msg: impl Into<String>) -> LowerError {
        LowerError::Invalid {
            def: self.def.name.clone(),
            msg: msg.into(),
        }
    }

    fn core(&self, e: wzb_core::Error) -> LowerError {
        LowerError::Core {
            def: self.def.name.clone(),
            source: e,
        }
    }

    fn required(&self, name: &str) -> Result<&'a Expr, LowerError> {
        self.def
            .get(name)
            .map(|b| &b.value)
            .ok_or_else(|| self.invalid(format!("missing binding `{name}`")))
    }

    /// Resolve a name bound in this definition (not a variable or parameter).
    fn binding_of(&self, name: &str) -> Option<&'a Expr> {
        if self.vars.contains_key(name) || self.params.contains_key(name) {
            return None;
        }
        self.bound.get(name).copied()
    }

    fn param_value(&self, name: &str) -> Result<Option<Rational>, LowerError> {
        match self.params.get(name) {
            Some(Some(v)) => Ok(Some(v.clone())),
            Some(None) => Err(LowerError::MissingParameter {
                def: self.def.name.clone(),
                name: name.to_string(),
            }),
            None => Ok(None),
        }
    }

    fn has_calls(&self, e: &Expr) -> bool {
        match e {
            Expr::Int(_) => false,
            Expr::Name(n) => n == "pi" || self.binding_of(n).is_some_and(|b| self.has_calls(b)),
            Expr::Call(..) => true,
            Expr::Neg(a) | Expr::Pow(a, _) => self.has_calls(a),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                self.has_calls(a) || self.has_calls(b)
            }
        }
    }

    fn mentions(&self, e: &Expr, var: &str) -> bool {
        match e {
            Expr::Int(_) => false,
            Expr::Name(n) => n == var || self.binding_of(n).is_some_and(|b| self.mentions(b, var)),
            Expr::Call(_, args) => args.iter().any(|a| self.mentions(a, var)),
            Expr::Neg(a) | Expr::Pow(a, _) => self.mentions(a, var),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                self.mentions(a, var) || self.mentions(b, var)
            }
        }
    }

    /// A call-free expression as a rational function of the slot variables.
    fn rf_of(&self, e: &Expr) -> Result<RationalFunction, LowerError> {
        let core = |r: wzb_core::Result<RationalFunction>| r.map_err(|err| self.core(err));
        Ok(match e {
            Expr::Int(n) => RationalFunction::constant(Integer::from(*n)),
            Expr::Name(name) => {
                if let Some(slot) = self.vars.get(name.as_str()) {
                    RationalFunction::from_poly(match slot {
                        Slot::N => BiPoly::var_n(),
                        Slot::K => BiPoly::var_k(),
                    })
                } else if let Some(v) = self.param_value(name)? {
                    RationalFunction::constant(v)
                } else if let Some(b) = self.binding_of(name) {
                    self.rf_of(b)?
                } else {
                    return Err(self.invalid(format!("`{name}` is not a rational expression")));
                }
            }
            Expr::Call(f, _) => return Err(self.invalid(format!("`{}` inside a rational expression", f.name()))),
            Expr::Neg(a) => -&self.rf_of(a)?,
            Expr::Add(a, b) => &self.rf_of(a)? + &self.rf_of(b)?,
            Expr::Sub(a, b) => &self.rf_of(a)? - &self.rf_of(b)?,
            Expr::Mul(a, b) => &self.rf_of(a)? * &self.rf_of(b)?,
            Expr::Div(a, b) => core(self.rf_of(a)?.checked_div(&self.rf_of(b)?))?,
            Expr::Pow(a, k) => core(self.rf_of(a)?.pow(*k as i32))?,
        })
    }

    fn constant_rational(&self, e: &Expr) -> Result<Rational, LowerError> {
        self.rf_of(e)?
            .as_constant()
            .ok_or_else(|| self.invalid("expected a rational constant"))
    }

    fn affine_of(&self, e: &Expr) -> Result<AffineForm, LowerError> {
        let r = self.rf_of(e)?;
        let den = r
            .den()
            .as_constant()
            .ok_or_else(|| self.invalid("expected an affine expression"))?;
        let num = r.num();
        if num.total_degree() > 1 {
            return Err(self.invalid("expected an affine expression"));
        }
        use wzb_core::exact::Monomial;
        Ok(AffineForm {
            c: num.coeff(Monomial::new(0, 0)) / den.clone(),
            n: num.coeff(Monomial::new(1, 0)) / den.clone(),
            k: num.coeff(Monomial::new(0, 1)) / den,
        })
    }

    fn slot_var(&self, e: &Expr) -> Result<Var, LowerError> {
        if let Expr::Name(n) = e {
            if let Some(slot) = self.vars.get(n.as_str()) {
                return Ok(var_of(*slot));
            }
        }
        Err(self.invalid("expected a variable"))
    }

    /// Flatten products, quotients and integer powers into `(leaf, exponent)`.
    fn factors(&self, e: &'a Expr, exp: i64, out: &mut Vec<(&'a Expr, i64)>, sign: &mut bool) {
        match e {
            Expr::Mul(a, b) => {
                self.factors(a, exp, out, sign);
                self.factors(b, exp, out, sign);
            }
            Expr::Div(a, b) => {
                self.factors(a, exp, out, sign);
                self.factors(b, -exp, out, sign);
            }
            Expr::Pow(a, k) => self.factors(a, exp * k, out, sign),
            Expr::Neg(a) => {
                if exp % 2 != 0 {
                    *sign = !*sign;
                }
                self.factors(a, exp, out, sign);
            }
            Expr::Name(n) if self.binding_of(n).is_some() && self.has_calls(e) => {
                self.factors(self.binding_of(n).expect("bound"), exp, out, sign);
            }
            _ => out.push((e, exp)),
        }
    }

    /// A product of factors as an irrational constant times a hypergeometric term.
    fn term_of(&self, e: &'a Expr) -> Result<(ConstExpr, HyperTerm), LowerError> {
        let mut leaves = Vec::new();
        let mut negative = false;
        self.factors(e, 1, &mut leaves, &mut negative);
        let mut konst = ConstAcc::default();
        let mut term = if negative {
            HyperTerm::constant(-1)
        } else {
            HyperTerm::one()
        };
        for (leaf, exp) in leaves {
            let (c, t) = self.leaf(leaf)?;
            konst.push(c, exp);
            let t = t.pow(exp as i32).map_err(|err| self.core(err))?;
            term = term.mul(&t);
        }
        Ok((konst.finish(), term))
    }

    fn pure_term(&self, e: &'a Expr) -> Result<HyperTerm, LowerError> {
        let (c, t) = self.term_of(e)?;
        if c != one() {
            return Err(self.invalid(format!("irrational constant {c} in a pair term")));
        }
        Ok(t)
    }

    fn leaf(&self, e: &'a Expr) -> Result<(ConstExpr, HyperTerm), LowerError> {
        if !self.has_calls(e) {
            let r = self.rf_of(e)?;
            return Ok(match r.as_constant() {
                Some(c) => (one(), HyperTerm::constant(c)),
                None => (one(), HyperTerm::from_rat(r)),
            });
        }
        let Expr::Call(f, args) = e else {
            if let Expr::Name(n) = e {
                if n == "pi" {
                    return Ok((ConstExpr::pi(), HyperTerm::one()));
                }
            }
            return Err(self.invalid(format!(
                "`{}` mixes sums with function calls",
                super::print_expr(e)
            )));
        };
        match f {
            Func::Poch => {
                let a = self.affine_of(&args[0])?;
                let b = self.affine_of(&args[1])?;
                if a.is_constant() && b.is_constant() {
                    return Ok((ConstExpr::Poch(a.c, b.c), HyperTerm::one()));
                }
                if b.is_constant() || !a.is_constant() || !matches!(&args[1], Expr::Name(_)) {
                    let upper = &a + &b;
                    return Ok((one(), HyperTerm::poch_general(a, upper)));
                }
                Ok((one(), HyperTerm::poch(a, self.slot_var(&args[1])?)))
            }
            Func::Gamma => {
                let a = self.affine_of(&args[0])?;
                if a.is_constant() {
                    return Ok((ConstExpr::Gamma(a.c), HyperTerm::one()));
                }
                Ok((one(), HyperTerm::gamma(a, 1)))
            }
            Func::Fact => {
                let a = self.affine_of(&args[0])?;
                if a.is_constant() {
                    return Ok((ConstExpr::Gamma(a.c + 1u32), HyperTerm::one()));
                }
                Ok((one(), HyperTerm::factorial(a)))
            }
            Func::Pow => {
                let base = self.constant_rational(&args[0])?;
                let a = self.affine_of(&args[1])?;
                if a.is_constant() {
                    if a.c.denom() == &1 {
                        let e = a.c.numer().to_i32().ok_or_else(|| self.invalid("exponent too large"))?;
                        let v = rug::ops::Pow::pow(base, e);
                        return Ok((one(), HyperTerm::constant(v)));
                    }
                    return Ok((ConstExpr::PowRat(base, a.c), HyperTerm::one()));
                }
                Ok((one(), HyperTerm::exp(&base, a)))
            }
            Func::Sign => Ok((one(), HyperTerm::sign(self.slot_var(&args[0])?))),
            Func::Rf => {
                let p = self.rf_of(&args[0])?;
                let q = self.rf_of(&args[1])?;
                let r = p.checked_div(&q).map_err(|err| self.core(err))?;
                Ok((one(), HyperTerm::from_rat(r)))
            }
            Func::Sqrt => {
                let r = self.constant_rational(&args[0])?;
                if r < 0 {
                    return Err(self.invalid("square root of a negative number"));
                }
                Ok((ConstExpr::Sqrt(r), HyperTerm::one()))
            }
        }
    }

    fn expected(&self) -> Result<Option<ConstExpr>, LowerError> {
        let Some(b) = self.def.get("expected") else {
            return Ok(None);
        };
        let (c, t) = self.term_of(&b.value)?;
        let coeff = rational_value(&t).ok_or_else(|| self.invalid("`expected` must be a constant"))?;
        Ok(Some(match (coeff == 1, c == one()) {
            (true, _) => c,
            (false, true) => ConstExpr::Rat(coeff),
            (false, false) => ConstExpr::Mul(vec![ConstExpr::Rat(coeff), c]),
        }))
    }

    fn integrand(&self) -> Result<LoweredIntegrand, LowerError> {
        let body = self.required("B")?;
        let z = self.constant_rational(self.required("z")?)?;
        let mut leaves = Vec::new();
        let mut negative = false;
        self.factors(body, 1, &mut leaves, &mut negative);
        let mut prefactor = BiPoly::constant(if negative { -1 } else { 1 });
        let mut num = Vec::new();
        let mut den = Vec::new();
        let mut konst = ConstAcc::default();
        let mut t_term = HyperTerm::one();
        for (leaf, exp) in leaves {
            let with_s = self.mentions(leaf, "s");
            match leaf {
                Expr::Call(Func::Poch, args) if with_s => {
                    if !matches!(&args[1], Expr::Name(v) if v == "s") || self.mentions(&args[0], "s") {
                        return Err(self.invalid("Pochhammer symbols in s must have the form poch(a, s)"));
                    }
                    let a = self.affine_of(&args[0])?;
                    let list = if exp > 0 { &mut num } else { &mut den };
                    for _ in 0..exp.unsigned_abs() {
                        list.push(a.clone());
                    }
                }
                _ if with_s => {
                    if self.has_calls(leaf) {
                        return Err(self.invalid(format!(
                            "`{}` depends on s but is neither poch(a, s) nor rational",
                            super::print_expr(leaf)
                        )));
                    }
                    let r = self.rf_of(leaf)?.pow(exp as i32).map_err(|err| self.core(err))?;
                    if r.den().degree_n() > 0 {
                        return Err(self.invalid("a denominator depending on s is not a Barnes integrand"));
                    }
                    prefactor = &prefactor * r.num();
                    let inv_den = RationalFunction::new(BiPoly::one(), r.den().clone()).map_err(|err| self.core(err))?;
                    t_term = t_term.mul(&HyperTerm::from_rat(inv_den));
                }
                _ => {
                    let (c, t) = self.leaf(leaf)?;
                    konst.push(c, exp);
                    t_term = t_term.mul(&t.pow(exp as i32).map_err(|err| self.core(err))?);
                }
            }
        }
        let mut integrand = IntegrandSpec::new(prefactor, num, den, z).with_scale(Scale {
            constant: konst.finish(),
            t_term,
        });
        let t_value = match (&self.t_override, self.def.get("t")) {
            (Some(t), _) => Some(t.clone()),
            (None, Some(b)) => Some(self.constant_rational(&b.value)?),
            (None, None) => None,
        };
        if let Some(t) = t_value {
            integrand = integrand.with_t(t);
        }
        Ok(LoweredIntegrand {
            name: self.def.name.clone(),
            integrand,
            expected: self.expected()?,
        })
    }

    fn series(&self) -> Result<LoweredSeries, LowerError> {
        let body = self.required("a")?;
        let start = match self.def.get("start") {
            Some(b) => {
                let r = self.constant_rational(&b.value)?;
                if r.denom() != &1 || r < 0 {
                    return Err(self.invalid("`start` must be a non-negative integer"));
                }
                r.numer().to_u32().ok_or_else(|| self.invalid("`start` too large"))?
            }
            None => 0,
        };
        let mut leaves = Vec::new();
        let mut negative = false;
        self.factors(body, 1, &mut leaves, &mut negative);
        let mut num = Vec::new();
        let mut den = Vec::new();
        let mut weight = RationalFunction::constant(if negative { -1 } else { 1 });
        let mut ratio = Rational::from(1);
        let mut alternating = false;
        let mut konst = ConstAcc::default();
        let mut push = |a: AffineForm, exp: i64| {
            let target = if exp > 0 { &mut num } else { &mut den };
            for _ in 0..exp.unsigned_abs() {
                target.push(a.clone());
            }
        };
        for (leaf, exp) in leaves {
            if !self.mentions(leaf, "n") {
                let (c, t) = self.leaf(leaf)?;
                let t = t.pow(exp as i32).map_err(|err| self.core(err))?;
                let r = rational_value(&t).ok_or_else(|| self.invalid("constant factor is not rational"))?;
                weight = &weight * &RationalFunction::constant(r);
                konst.push(c, exp);
                continue;
            }
            match leaf {
                Expr::Call(Func::Poch, args) => {
                    let a = self.affine_of(&args[0])?;
                    let b = self.affine_of(&args[1])?;
                    if !a.is_constant() || b.c != 0 {
                        return Err(self.invalid("series Pochhammers must have the form poch(c, m*n)"));
                    }
                    let form = AffineForm {
                        c: a.c,
                        n: b.n,
                        k: Rational::new(),
                    };
                    push(form, exp);
                }
                Expr::Call(Func::Fact, args) => {
                    let a = self.affine_of(&args[0])?;
                    if a.c.denom() != &1 || a.c < 0 {
                        return Err(self.invalid("series factorials need the form fact(m*n + c) with c >= 0"));
                    }
                    let c = a.c.numer().to_u32().ok_or_else(|| self.invalid("factorial offset too large"))?;
                    let offset = Integer::from(Integer::factorial(c));
                    let offset = RationalFunction::constant(offset)
                        .pow(exp as i32)
                        .map_err(|err| self.core(err))?;
                    weight = &weight * &offset;
                    push(a.add_const(&Rational::from(1)), exp);
                }
                Expr::Call(Func::Pow, args) => {
                    let base = self.constant_rational(&args[0])?;
                    let a = self.affine_of(&args[1])?;
                    if a.n.denom() != &1 || a.c.denom() != &1 {
                        return Err(self.invalid("series powers need integer exponents"));
                    }
                    let m = a.n.numer().to_i32().unwrap_or(0) * exp as i32;
                    let c = a.c.numer().to_i32().unwrap_or(0) * exp as i32;
                    ratio *= rug::ops::Pow::pow(base.clone(), m);
                    weight = &weight * &RationalFunction::constant(rug::ops::Pow::pow(base, c));
                }
                Expr::Call(Func::Sign, _) => {
                    if exp % 2 != 0 {
                        alternating = !alternating;
                    }
                }
                _ if !self.has_calls(leaf) || matches!(leaf, Expr::Call(Func::Rf, _)) => {
                    let r = match leaf {
                        Expr::Call(Func::Rf, args) => self
                            .rf_of(&args[0])?
                            .checked_div(&self.rf_of(&args[1])?)
                            .map_err(|err| self.core(err))?,
                        _ => self.rf_of(leaf)?,
                    };
                    weight = &weight * &r.pow(exp as i32).map_err(|err| self.core(err))?;
                }
                _ => {
                    return Err(self.invalid(format!(
                        "`{}` is not a series factor",
                        super::print_expr(leaf)
                    )))
                }
            }
        }
        let mut series = WeightedSeries::new(num, den, weight, ratio).starting_at(start);
        if alternating {
            series = series.alternating();
        }
        Ok(LoweredSeries {
            name: self.def.name.clone(),
            coefficient: konst.finish(),
            series,
            expected: self.expected()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn lowered(src: &str) -> LoweredFile {
        lower(&parse(src).unwrap(), &LowerOptions::default()).unwrap()
    }

    #[test]
    fn constants_collect_as_a_fraction() {
        let f = lowered("integrand \"i\" { z = -2; B = poch(1/2, s); expected = 3*sqrt(3)/pi^2; }");
        assert_eq!(f.integrands[0].expected.as_ref().unwrap().to_string(), "3*(sqrt(3)/pi^2)");
        let f = lowered("term \"a\" { T = sqrt(2)*pi*poch(1/2, n)/gamma(3/4); }");
        assert_eq!(f.terms[0].constant.to_string(), "(sqrt(2)*pi)/gamma(3/4)");
        assert_eq!(f.terms[0].term, HyperTerm::poch(AffineForm::constant(Rational::from((1, 2))), Var::N));
    }

    #[test]
    fn factorial_offsets_in_series() {
        // sum_n (n+1)! / (n+2)! x^n with x = 1/2 equals sum (1/2)^n / (n+2)
        let f = lowered("series \"s\" { a = fact(n + 1)/fact(n + 2)*pow(1/2, n); }");
        let s = &f.series[0].series;
        assert_eq!(s.weight, RationalFunction::constant(Rational::from((1, 2))));
        assert_eq!(s.ratio, Rational::from((1, 2)));
    }

    #[test]
    fn t_override_wins() {
        let file = parse("integrand \"i\" { z = -2; t = 1; B = poch(1/2 + t, s); }").unwrap();
        let opts = LowerOptions {
            t: Some(Rational::from(3)),
            ..LowerOptions::default()
        };
        let f = lower(&file, &opts).unwrap();
        assert_eq!(f.integrands[0].integrand.t_value, Some(Rational::from(3)));
        let f = lower(&file, &LowerOptions::default()).unwrap();
        assert_eq!(f.integrands[0].integrand.t_value, Some(Rational::from(1)));
    }

    #[test]
    fn pair_needs_rational_terms() {
        let file = parse("pair \"p\" { F = pi*poch(1/2, n); G = n; }").unwrap();
        assert!(lower(&file, &LowerOptions::default()).is_err());
    }
}
