//! Symbolic closed-form constants (rational combinations of π, square roots,
//! Gamma values and Pochhammer symbols), evaluated at any precision.

use std::fmt;

use rug::{Complex, Rational};

use crate::error::Result;
use crate::mpnum::{constant, gamma, pochhammer, Constant, Precision};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstExpr {
    Rat(Rational),
    Const(Constant),
    /// Square root of a non-negative rational.
    Sqrt(Rational),
    Gamma(Rational),
    /// (a)_t for rational a and t.
    Poch(Rational, Rational),
    /// base^exp for positive rational base and rational exponent.
    PowRat(Rational, Rational),
    Pow(Box<ConstExpr>, i32),
    Neg(Box<ConstExpr>),
    Mul(Vec<ConstExpr>),
    Div(Box<ConstExpr>, Box<ConstExpr>),
    Add(Vec<ConstExpr>),
}

impl ConstExpr {
    pub fn rat(a: i64, b: i64) -> Self {
        ConstExpr::Rat(Rational::from((a, b)))
    }

    pub fn int(a: i64) -> Self {
        ConstExpr::Rat(Rational::from(a))
    }

    pub fn pi() -> Self {
        ConstExpr::Const(Constant::Pi)
    }

    pub fn sqrt(a: i64) -> Self {
        ConstExpr::Sqrt(Rational::from(a))
    }

    pub fn mul(factors: Vec<ConstExpr>) -> Self {
        ConstExpr::Mul(factors)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(a: ConstExpr, b: ConstExpr) -> Self {
        ConstExpr::Div(Box::new(a), Box::new(b))
    }

    pub fn pow(a: ConstExpr, e: i32) -> Self {
        ConstExpr::Pow(Box::new(a), e)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: ConstExpr) -> Self {
        ConstExpr::Neg(Box::new(a))
    }

    pub fn eval(&self, prec: &Precision) -> Result<Complex> {
        let bits = prec.bits();
        Ok(match self {
            ConstExpr::Rat(r) => Complex::with_val(bits, r),
            ConstExpr::Const(c) => Complex::with_val(bits, constant(*c, prec)),
            ConstExpr::Sqrt(r) => Complex::with_val(bits, prec.float(r).sqrt()),
            ConstExpr::Gamma(r) => gamma(&prec.complex(r), prec)?,
            ConstExpr::Poch(a, t) => pochhammer(&prec.complex(a), &prec.complex(t), prec)?,
            ConstExpr::PowRat(b, e) => {
                let l = prec.float(b).ln() * prec.float(e);
                Complex::with_val(bits, l.exp())
            }
            ConstExpr::Pow(a, e) => {
                let v = a.eval(prec)?;
                Complex::with_val(bits, rug::ops::Pow::pow(v, *e))
            }
            ConstExpr::Neg(a) => -a.eval(prec)?,
            ConstExpr::Mul(fs) => {
                let mut acc = Complex::with_val(bits, 1);
                for f in fs {
                    acc *= f.eval(prec)?;
                }
                acc
            }
            ConstExpr::Div(a, b) => a.eval(prec)? / b.eval(prec)?,
            ConstExpr::Add(ts) => {
                let mut acc = Complex::new(bits);
                for t in ts {
                    acc += t.eval(prec)?;
                }
                acc
            }
        })
    }

    fn is_atomic(&self) -> bool {
        !matches!(
            self,
            ConstExpr::Add(_) | ConstExpr::Mul(_) | ConstExpr::Div(..) | ConstExpr::Neg(_)
        ) && !matches!(self, ConstExpr::Rat(r) if *r.denom() != 1 || *r < 0)
    }
}

fn paren(f: &mut fmt::Formatter<'_>, e: &ConstExpr) -> fmt::Result {
    if e.is_atomic() {
        write!(f, "{e}")
    } else {
        write!(f, "({e})")
    }
}

impl fmt::Display for ConstExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstExpr::Rat(r) => write!(f, "{r}"),
            ConstExpr::Const(Constant::Pi) => write!(f, "pi"),
            ConstExpr::Const(Constant::Sqrt2) => write!(f, "sqrt(2)"),
            ConstExpr::Const(Constant::Sqrt3) => write!(f, "sqrt(3)"),
            ConstExpr::Const(Constant::Gamma34) => write!(f, "gamma(3/4)"),
            ConstExpr::Sqrt(r) => write!(f, "sqrt({r})"),
            ConstExpr::Gamma(r) => write!(f, "gamma({r})"),
            ConstExpr::Poch(a, t) => write!(f, "poch({a}, {t})"),
            ConstExpr::PowRat(b, e) => write!(f, "pow({b}, {e})"),
            ConstExpr::Pow(a, e) => {
                paren(f, a)?;
                write!(f, "^{e}")
            }
            ConstExpr::Neg(a) => {
                write!(f, "-")?;
                paren(f, a)
            }
            ConstExpr::Mul(fs) => {
                if fs.is_empty() {
                    return write!(f, "1");
                }
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    paren(f, x)?;
                }
                Ok(())
            }
            ConstExpr::Div(a, b) => {
                paren(f, a)?;
                write!(f, "/")?;
                paren(f, b)
            }
            ConstExpr::Add(ts) => {
                if ts.is_empty() {
                    return write!(f, "0");
                }
                for (i, x) in ts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpnum::abs_diff;

    #[test]
    fn sqrt3_over_pi() {
        let p = Precision::new(30);
        let e = ConstExpr::div(ConstExpr::sqrt(3), ConstExpr::pi());
        assert_eq!(e.to_string(), "sqrt(3)/pi");
        let v = e.eval(&p).unwrap();
        let expected = Rational::from_f64(0.551328895421792).unwrap();
        assert!(abs_diff(&v, &p.complex(&expected)) < 1e-14);
    }

    #[test]
    fn pochhammer_ratio() {
        let p = Precision::new(30);
        // (1)_1^2 / ((1/6)_1 (5/6)_1) = 36/5
        let e = ConstExpr::div(
            ConstExpr::pow(ConstExpr::Poch(Rational::from(1), Rational::from(1)), 2),
            ConstExpr::mul(vec![
                ConstExpr::Poch(Rational::from((1, 6)), Rational::from(1)),
                ConstExpr::Poch(Rational::from((5, 6)), Rational::from(1)),
            ]),
        );
        let v = e.eval(&p).unwrap();
        assert!(abs_diff(&v, &p.complex(&Rational::from((36, 5)))) < p.tolerance());
    }

    #[test]
    fn powers_and_sums() {
        let p = Precision::new(30);
        let e = ConstExpr::Add(vec![
            ConstExpr::PowRat(Rational::from(4), Rational::from((1, 2))),
            ConstExpr::neg(ConstExpr::int(2)),
        ]);
        assert!(abs_diff(&e.eval(&p).unwrap(), &p.zero()) < p.tolerance());
    }
}
