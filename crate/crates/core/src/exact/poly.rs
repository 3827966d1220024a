//! Bivariate polynomials over the rationals in the fixed variables `n` and `k`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::{Complex, Integer, Rational};

/// Exponent pair `n^n * k^k`, ordered graded-lexicographically with `n` before `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub n: u32,
    pub k: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { n: 0, k: 0 };

    pub fn new(n: u32, k: u32) -> Self {
        Monomial { n, k }
    }

    pub fn degree(&self) -> u32 {
        self.n + self.k
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.n <= other.n && self.k <= other.k
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `n` and `k` with rational coefficients.
///
/// Zero coefficients are never stored, so two equal polynomials always have
/// identical term maps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::from(1))
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Monomial::ONE, c.into());
        p
    }

    pub fn var_n() -> Self {
        BiPoly::monomial(Monomial::new(1, 0), Rational::from(1))
    }

    pub fn var_k() -> Self {
        BiPoly::monomial(Monomial::new(0, 1), Rational::from(1))
    }

    pub fn monomial(m: Monomial, c: impl Into<Rational>) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = BiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if *existing == 0 {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// The constant value if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coeff(Monomial::ONE))
        } else {
            None
        }
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn total_degree(&self) -> u32 {
        self.leading().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn degree_n(&self) -> u32 {
        self.terms.keys().map(|m| m.n).max().unwrap_or(0)
    }

    pub fn degree_k(&self) -> u32 {
        self.terms.keys().map(|m| m.k).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if *c == 0 {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, Rational::from(v * c)))
                .collect(),
        }
    }

    /// Divide by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> BiPoly {
        match self.leading() {
            Some((_, lc)) => {
                let inv = Rational::from(lc.recip_ref());
                self.scale(&inv)
            }
            None => BiPoly::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut result = BiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, n: &Rational, k: &Rational) -> Rational {
        let mut acc = Rational::new();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            if m.n > 0 {
                t *= Rational::from(n.pow(m.n as i32));
            }
            if m.k > 0 {
                t *= Rational::from(k.pow(m.k as i32));
            }
            acc += t;
        }
        acc
    }

    pub fn eval_complex(&self, n: &Complex, k: &Complex) -> Complex {
        let prec = n.prec();
        let mut acc = Complex::new(prec);
        for (m, c) in &self.terms {
            let mut t = Complex::with_val(prec, c);
            if m.n > 0 {
                t *= Complex::with_val(prec, n.pow(m.n));
            }
            if m.k > 0 {
                t *= Complex::with_val(prec, k.pow(m.k));
            }
            acc += t;
        }
        acc
    }

    /// Replace `n` and `k` by arbitrary polynomials.
    pub fn substitute(&self, n_to: &BiPoly, k_to: &BiPoly) -> BiPoly {
        let mut n_pows = vec![BiPoly::one()];
        let mut k_pows = vec![BiPoly::one()];
        for _ in 0..self.degree_n() {
            let next = n_pows.last().unwrap() * n_to;
            n_pows.push(next);
        }
        for _ in 0..self.degree_k() {
            let next = k_pows.last().unwrap() * k_to;
            k_pows.push(next);
        }
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            let t = (&n_pows[m.n as usize] * &k_pows[m.k as usize]).scale(c);
            out = &out + &t;
        }
        out
    }

    /// `p(n, k) -> p(k, n)`.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.k, m.n), c.clone())),
        )
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        let (lm, lc) = d.leading()?;
        let lc_inv = Rational::from(lc.recip_ref());
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !lm.divides(&rm) {
                return None;
            }
            let qm = Monomial::new(rm.n - lm.n, rm.k - lm.k);
            let qc = Rational::from(rc * &lc_inv);
            let step = BiPoly::monomial(qm, qc.clone());
            rem = &rem - &(&step * d);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> Integer {
        let mut l = Integer::from(1);
        for c in self.terms.values() {
            l.lcm_mut(c.denom());
        }
        l
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, Rational::from(-c));
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(
                    Monomial::new(ma.n + mb.n, ma.k + mb.k),
                    Rational::from(ca * cb),
                );
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, Rational::from(-c)))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: BiPoly) -> BiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: &BiPoly) -> BiPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, names: (&str, &str)) -> fmt::Result {
    let mut first = true;
    for (name, e) in [(names.0, m.n), (names.1, m.k)] {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Displays a polynomial using custom variable names (e.g. `s`, `t` for Barnes integrands).
pub struct PolyDisplay<'a> {
    pub poly: &'a BiPoly,
    pub names: (&'a str, &'a str),
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let negative = *c < 0;
            let abs = Rational::from(c.abs_ref());
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else {
                if abs != 1 {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m, self.names)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolyDisplay { poly: self, names: ("n", "k") }.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::from((a, b))
    }

    fn lin(c: i64, a: i64, b: i64) -> BiPoly {
        &(&BiPoly::constant(c) + &BiPoly::var_n().scale(&q(a, 1))) + &BiPoly::var_k().scale(&q(b, 1))
    }

    #[test]
    fn grlex_order_puts_n_before_k() {
        assert!(Monomial::new(1, 0) > Monomial::new(0, 1));
        assert!(Monomial::new(0, 2) > Monomial::new(1, 0));
        assert!(Monomial::new(2, 0) > Monomial::new(1, 1));
        let p = lin(1, 5, 6);
        assert_eq!(p.leading().unwrap().0, Monomial::new(1, 0));
        assert_eq!(p.to_string(), "5*n + 6*k + 1");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = lin(1, 5, 6);
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
    }

    #[test]
    fn exact_division() {
        let a = lin(1, 1, 0);
        let b = lin(-1, 1, 1);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(prod.div_exact(&lin(2, 1, 0)).is_none());
    }

    #[test]
    fn substitution_shifts_variable() {
        // (n + k)^2 with k -> k + 1 evaluated at (1, 1) is 9
        let p = lin(0, 1, 1).pow(2);
        let shifted = p.substitute(&BiPoly::var_n(), &lin(1, 0, 1));
        assert_eq!(shifted.eval(&q(1, 1), &q(1, 1)), 9);
        assert_eq!(p.swap_vars(), p);
    }

    #[test]
    fn evaluation() {
        assert_eq!(lin(1, 5, 6).eval(&q(1, 1), &q(0, 1)), 6);
        assert_eq!(lin(1, 5, 6).eval(&q(1, 2), &q(-1, 3)), q(3, 2));
    }
}
