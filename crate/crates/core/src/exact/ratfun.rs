//! Exact rational functions in `n` and `k`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::{Complex, Rational};

use super::gcd::gcd;
use super::poly::BiPoly;
use crate::error::{Error, Result};

/// A reduced quotient of bivariate polynomials whose denominator has leading
/// coefficient 1 in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: BiPoly,
    den: BiPoly,
}

impl RationalFunction {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lc = den.leading().unwrap().1.clone();
        let inv = Rational::from(lc.recip_ref());
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RationalFunction {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let (n, d) = (self.num.pow(e.unsigned_abs()), self.den.pow(e.unsigned_abs()));
        if e >= 0 {
            Ok(RationalFunction::normalized(n, d))
        } else {
            RationalFunction::new(d, n)
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction::normalized(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn eval(&self, n: &Rational, k: &Rational) -> Result<Rational> {
        let d = self.den.eval(n, k);
        if d == 0 {
            return Err(Error::PoleAtPoint {
                n: n.to_string(),
                k: k.to_string(),
            });
        }
        Ok(self.num.eval(n, k) / d)
    }

    pub fn eval_complex(&self, n: &Complex, k: &Complex) -> Result<Complex> {
        let d = self.den.eval_complex(n, k);
        if d.is_zero() {
            return Err(Error::PoleAtPoint {
                n: n.to_string(),
                k: k.to_string(),
            });
        }
        Ok(self.num.eval_complex(n, k) / d)
    }

    /// Replace `n` and `k` by polynomials.
    pub fn substitute(&self, n_to: &BiPoly, k_to: &BiPoly) -> Result<Self> {
        RationalFunction::new(
            self.num.substitute(n_to, k_to),
            self.den.substitute(n_to, k_to),
        )
    }

    /// `f(n + dn, k + dk)`.
    pub fn shift(&self, dn: &Rational, dk: &Rational) -> Self {
        let n_to = &BiPoly::var_n() + &BiPoly::constant(dn.clone());
        let k_to = &BiPoly::var_k() + &BiPoly::constant(dk.clone());
        self.substitute(&n_to, &k_to)
            .expect("shifting a nonzero polynomial keeps it nonzero")
    }

    pub fn swap_vars(&self) -> Self {
        RationalFunction::normalized(self.num.swap_vars(), self.den.swap_vars())
    }
}

/// Exact equality test: `a - b` is the zero function.
pub fn rf_equal(a: &RationalFunction, b: &RationalFunction) -> bool {
    (&(&a.num * &b.den) - &(&b.num * &a.den)).is_zero()
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RationalFunction::checked_div`] to get an error instead.
impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<BiPoly> for RationalFunction {
    fn from(p: BiPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            let multi = self.num.num_terms() > 1;
            if self.den == BiPoly::one() {
                return write!(f, "{}", self.num);
            }
            return if multi {
                write!(f, "({})/{}", self.num, self.den)
            } else {
                write!(f, "{}/{}", self.num, self.den)
            };
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Monomial;

    fn q(a: i64, b: i64) -> Rational {
        Rational::from((a, b))
    }

    fn lin(c: i64, a: i64, b: i64) -> BiPoly {
        BiPoly::from_terms([
            (Monomial::ONE, Rational::from(c)),
            (Monomial::new(1, 0), Rational::from(a)),
            (Monomial::new(0, 1), Rational::from(b)),
        ])
    }

    fn rf(num: BiPoly, den: BiPoly) -> RationalFunction {
        RationalFunction::new(num, den).unwrap()
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = rf(BiPoly::var_n(), BiPoly::var_k());
        let b = rf(BiPoly::var_k(), BiPoly::var_n());
        assert!((&a * &b).is_one());
        assert_eq!(&a * &b, RationalFunction::one());
    }

    #[test]
    fn subtraction_of_polynomials() {
        let a = RationalFunction::from_poly(lin(1, 5, 6));
        let b = RationalFunction::from_poly(lin(0, 5, 6));
        assert_eq!(&a - &b, RationalFunction::one());
    }

    #[test]
    fn gcd_reduction() {
        let n = BiPoly::var_n();
        let f = rf(&(&n * &n) - &BiPoly::one(), &n + &BiPoly::one());
        assert_eq!(f, RationalFunction::from_poly(lin(-1, 1, 0)));
    }

    #[test]
    fn evaluation_and_poles() {
        let c = rf(BiPoly::var_k(), BiPoly::var_n());
        assert_eq!(c.eval(&q(2, 1), &q(6, 1)).unwrap(), 3);
        assert_eq!(
            RationalFunction::from_poly(lin(1, 5, 6)).eval(&q(1, 1), &q(0, 1)).unwrap(),
            6
        );
        assert!(matches!(
            c.eval(&q(0, 1), &q(1, 1)),
            Err(Error::PoleAtPoint { .. })
        ));
    }

    #[test]
    fn equality_decision() {
        let n = BiPoly::var_n();
        let k = BiPoly::var_k();
        let a = rf(&(&n * &n) - &(&k * &k), &n - &k);
        assert!(rf_equal(&a, &RationalFunction::from_poly(&n + &k)));
        assert!(!rf_equal(
            &RationalFunction::from_poly(lin(1, 5, 6)),
            &RationalFunction::from_poly(lin(2, 5, 6))
        ));
        assert!(rf_equal(&a, &a));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = RationalFunction::one();
        assert_eq!(a.checked_div(&RationalFunction::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            RationalFunction::new(BiPoly::one(), BiPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn denominator_is_normalized() {
        let f = rf(BiPoly::constant(3), lin(0, 6, 2));
        assert_eq!(f.den().leading().unwrap().1.clone(), 1);
        assert_eq!(f.eval(&q(1, 1), &q(1, 1)).unwrap(), q(3, 8));
    }
}
