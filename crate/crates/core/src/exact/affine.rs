//! Affine forms `c + a*n + b*k` with rational coefficients.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use rug::{Complex, Rational};

use super::poly::BiPoly;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    pub c: Rational,
    pub n: Rational,
    pub k: Rational,
}

impl AffineForm {
    pub fn new(c: impl Into<Rational>, n: impl Into<Rational>, k: impl Into<Rational>) -> Self {
        AffineForm {
            c: c.into(),
            n: n.into(),
            k: k.into(),
        }
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        AffineForm::new(c, 0, 0)
    }

    pub fn var_n() -> Self {
        AffineForm::new(0, 1, 0)
    }

    pub fn var_k() -> Self {
        AffineForm::new(0, 0, 1)
    }

    pub fn is_constant(&self) -> bool {
        self.n == 0 && self.k == 0
    }

    pub fn coeff(&self, var: crate::Var) -> &Rational {
        match var {
            crate::Var::N => &self.n,
            crate::Var::K => &self.k,
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        AffineForm {
            c: Rational::from(&self.c * s),
            n: Rational::from(&self.n * s),
            k: Rational::from(&self.k * s),
        }
    }

    pub fn add_const(&self, d: &Rational) -> Self {
        AffineForm {
            c: Rational::from(&self.c + d),
            ..self.clone()
        }
    }

    pub fn to_poly(&self) -> BiPoly {
        &(&BiPoly::constant(self.c.clone()) + &BiPoly::var_n().scale(&self.n))
            + &BiPoly::var_k().scale(&self.k)
    }

    pub fn eval(&self, n: &Rational, k: &Rational) -> Rational {
        Rational::from(&self.n * n) + Rational::from(&self.k * k) + &self.c
    }

    pub fn eval_complex(&self, n: &Complex, k: &Complex) -> Complex {
        let prec = n.prec();
        let mut v = Complex::with_val(prec, &self.c);
        if self.n != 0 {
            v += Complex::with_val(prec, n * &self.n);
        }
        if self.k != 0 {
            v += Complex::with_val(prec, k * &self.k);
        }
        v
    }

    /// Substitute `n -> a_n`, `k -> a_k` where both are affine.
    pub fn compose(&self, a_n: &AffineForm, a_k: &AffineForm) -> AffineForm {
        &(&AffineForm::constant(self.c.clone()) + &a_n.scale(&self.n)) + &a_k.scale(&self.k)
    }

    /// Display with custom variable names.
    pub fn display<'a>(&'a self, names: (&'a str, &'a str)) -> AffineDisplay<'a> {
        AffineDisplay { form: self, names }
    }
}

impl Add<&AffineForm> for &AffineForm {
    type Output = AffineForm;
    fn add(self, rhs: &AffineForm) -> AffineForm {
        AffineForm {
            c: Rational::from(&self.c + &rhs.c),
            n: Rational::from(&self.n + &rhs.n),
            k: Rational::from(&self.k + &rhs.k),
        }
    }
}

impl Sub<&AffineForm> for &AffineForm {
    type Output = AffineForm;
    fn sub(self, rhs: &AffineForm) -> AffineForm {
        self + &(-rhs)
    }
}

impl Neg for &AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        AffineForm {
            c: Rational::from(-&self.c),
            n: Rational::from(-&self.n),
            k: Rational::from(-&self.k),
        }
    }
}

pub struct AffineDisplay<'a> {
    form: &'a AffineForm,
    names: (&'a str, &'a str),
}

impl fmt::Display for AffineDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coef, name) in [
            (&self.form.c, None),
            (&self.form.n, Some(self.names.0)),
            (&self.form.k, Some(self.names.1)),
        ] {
            if *coef == 0 {
                continue;
            }
            let neg = *coef < 0;
            let abs = Rational::from(coef.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match name {
                None => write!(f, "{abs}")?,
                Some(v) if abs == 1 => write!(f, "{v}")?,
                Some(v) => write!(f, "{abs}*{v}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(("n", "k")).fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_eval() {
        let a = AffineForm::new(Rational::from((1, 4)), 1, Rational::from((3, 2)));
        assert_eq!(a.to_string(), "1/4 + n + 3/2*k");
        assert_eq!(a.eval(&Rational::from(1), &Rational::from(2)), Rational::from((17, 4)));
        assert_eq!(AffineForm::default().to_string(), "0");
    }

    #[test]
    fn composition_negates() {
        let a = AffineForm::new(1, 2, 3);
        let neg = a.compose(&(-&AffineForm::var_n()), &(-&AffineForm::var_k()));
        assert_eq!(neg, AffineForm::new(1, -2, -3));
    }
}
