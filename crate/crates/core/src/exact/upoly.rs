//! Dense univariate polynomials over the rationals, used as coefficients in
//! the bivariate gcd.

use rug::Rational;

/// Coefficients in ascending degree order with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn one() -> Self {
        UPoly::from_coeffs(vec![Rational::from(1)])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_default();
            if let Some(o) = other.coeffs.get(i) {
                c += o;
            }
            out.push(c);
        }
        UPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| Rational::from(-c)).collect(),
        }
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        UPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|a| Rational::from(a * c)).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = Rational::from(d.leading().unwrap().recip_ref());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::new(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let q = Rational::from(rem.last().unwrap() * &lc_inv);
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[shift + i] -= Rational::from(&q * c);
            }
            quot[shift] = q;
            rem.pop();
            while rem.last().is_some_and(|c| *c == 0) {
                rem.pop();
            }
        }
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            Some(lc) => self.scale(&Rational::from(lc.recip_ref())),
            None => UPoly::zero(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}
