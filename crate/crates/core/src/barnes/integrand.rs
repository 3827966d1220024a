use std::fmt;

use rug::{Complex, Float, Rational};

use crate::closed_form::ConstExpr;
use crate::error::{Error, Result};
use crate::exact::{AffineForm, BiPoly, PolyDisplay};
use crate::hyperterm::{numeric_eval, HyperTerm};
use crate::mpnum::Precision;

/// Factor multiplying a Barnes integrand that does not depend on `s`: an exact
/// closed-form constant times a hypergeometric term in `t` (stored in the `k`
/// slot).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scale {
    pub constant: ConstExpr,
    pub t_term: HyperTerm,
}

impl Default for Scale {
    fn default() -> Self {
        Scale {
            constant: ConstExpr::int(1),
            t_term: HyperTerm::one(),
        }
    }
}

impl Scale {
    pub fn is_one(&self) -> bool {
        self.constant == ConstExpr::int(1) && self.t_term == HyperTerm::one()
    }
}

/// `scale · P(s, t) · Π (a_i)_s / Π (b_j)_s · Γ(-s) · (-z)^s`.
///
/// Pochhammer bases are affine in `t`, which occupies the `k` slot of
/// [`AffineForm`]; the prefactor uses `n` for `s` and `k` for `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrandSpec {
    pub prefactor: BiPoly,
    pub poch_num: Vec<AffineForm>,
    pub poch_den: Vec<AffineForm>,
    pub z: Rational,
    pub t_value: Option<Rational>,
    pub scale: Scale,
}

/// An integrand with `t` substituted: all bases rational.
#[derive(Clone, Debug)]
pub struct Resolved {
    /// Coefficients of the prefactor in `s`, ascending.
    pub prefactor: Vec<Rational>,
    /// Numerator bases with multiplicities.
    pub num: Vec<(Rational, u32)>,
    pub den: Vec<(Rational, u32)>,
    pub z: Rational,
    pub scale: Complex,
}

fn group(bases: Vec<Rational>) -> Vec<(Rational, u32)> {
    let mut out: Vec<(Rational, u32)> = Vec::new();
    for b in bases {
        match out.iter_mut().find(|(x, _)| *x == b) {
            Some(entry) => entry.1 += 1,
            None => out.push((b, 1)),
        }
    }
    out.sort();
    out
}

impl IntegrandSpec {
    pub fn new(prefactor: BiPoly, poch_num: Vec<AffineForm>, poch_den: Vec<AffineForm>, z: Rational) -> Self {
        IntegrandSpec {
            prefactor,
            poch_num,
            poch_den,
            z,
            t_value: None,
            scale: Scale::default(),
        }
    }

    pub fn with_t(mut self, t: Rational) -> Self {
        self.t_value = Some(t);
        self
    }

    pub fn with_scale(mut self, scale: Scale) -> Self {
        self.scale = scale;
        self
    }

    pub fn depends_on_t(&self) -> bool {
        self.prefactor.degree_k() > 0
            || self.poch_num.iter().chain(&self.poch_den).any(|a| a.k != 0)
            || self.scale.t_term.depends_on(crate::Var::K)
    }

    fn t(&self) -> Result<Rational> {
        match &self.t_value {
            Some(t) => Ok(t.clone()),
            None if self.depends_on_t() => Err(Error::MissingParameter),
            None => Ok(Rational::new()),
        }
    }

    /// Substitute the parameter and evaluate the scale.
    pub fn resolve(&self, prec: &Precision) -> Result<Resolved> {
        let t = self.t()?;
        let mut coeffs: Vec<Rational> = vec![Rational::new(); self.prefactor.degree_n() as usize + 1];
        for (m, c) in self.prefactor.terms() {
            let tk = Rational::from(rug::ops::Pow::pow(&t, m.k as i32));
            coeffs[m.n as usize] += Rational::from(c * &tk);
        }
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        let at = |a: &AffineForm| a.eval(&Rational::new(), &t);
        let scale_t = numeric_eval(&self.scale.t_term, &prec.zero(), &prec.complex(&t), prec)?;
        let scale = self.scale.constant.eval(prec)? * scale_t;
        Ok(Resolved {
            prefactor: coeffs,
            num: group(self.poch_num.iter().map(at).collect()),
            den: group(self.poch_den.iter().map(at).collect()),
            z: self.z.clone(),
            scale,
        })
    }
}

impl Resolved {
    /// Smallest numerator base: the left pole families start at `-a`.
    pub fn a_min(&self) -> Option<&Rational> {
        self.num.iter().map(|(a, _)| a).min()
    }

    pub fn prefactor_at(&self, s: &Complex) -> Complex {
        let mut acc = Complex::new(s.prec());
        for c in self.prefactor.iter().rev() {
            acc *= s;
            acc += c;
        }
        acc
    }

    pub fn prefactor_at_rational(&self, s: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.prefactor.iter().rev() {
            acc *= s;
            acc += c;
        }
        acc
    }

    pub fn log_abs_z(&self, bits: u32) -> Float {
        Float::with_val(bits, &self.z).abs().ln()
    }
}

fn write_pochs(f: &mut fmt::Formatter<'_>, bases: &[AffineForm]) -> fmt::Result {
    for (i, a) in bases.iter().enumerate() {
        if i > 0 {
            write!(f, "*")?;
        }
        write!(f, "poch({}, s)", a.display(("s", "t")))?;
    }
    Ok(())
}

impl fmt::Display for IntegrandSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.scale.is_one() {
            write!(f, "[{} * {}] * ", self.scale.constant, self.scale.t_term)?;
        }
        write!(f, "({})", PolyDisplay { poly: &self.prefactor, names: ("s", "t") })?;
        if !self.poch_num.is_empty() {
            write!(f, " * ")?;
            write_pochs(f, &self.poch_num)?;
        }
        if !self.poch_den.is_empty() {
            write!(f, " / (")?;
            write_pochs(f, &self.poch_den)?;
            write!(f, ")")?;
        }
        write!(f, " * gamma(-s) * (-z)^s with z = {}", self.z)?;
        if let Some(t) = &self.t_value {
            write!(f, ", t = {t}")?;
        }
        Ok(())
    }
}
