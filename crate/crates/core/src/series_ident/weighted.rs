use rug::{Complex, Float, Rational};

use crate::error::{Error, Result};
use crate::exact::{AffineForm, BiPoly, Monomial, RationalFunction};
use crate::mpnum::{sum_terms, Precision};

/// `Σ_{n ≥ start_index} (±1)^n ratio^n Π Γ(a(n))/Γ(a(0)) / Π Γ(b(n))/Γ(b(0)) · weight(n)`.
///
/// Each Pochhammer entry is affine in `n` with a non-negative integer
/// coefficient of `n`, so `c + n` gives `(c)_n` and `c + 2n` gives `(c)_{2n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedSeries {
    pub poch_num: Vec<AffineForm>,
    pub poch_den: Vec<AffineForm>,
    pub weight: RationalFunction,
    pub ratio: Rational,
    pub sign: bool,
    pub start_index: u32,
}

impl WeightedSeries {
    pub fn new(poch_num: Vec<AffineForm>, poch_den: Vec<AffineForm>, weight: RationalFunction, ratio: Rational) -> Self {
        WeightedSeries {
            poch_num,
            poch_den,
            weight,
            ratio,
            sign: false,
            start_index: 0,
        }
    }

    pub fn starting_at(mut self, n: u32) -> Self {
        self.start_index = n;
        self
    }

    pub fn alternating(mut self) -> Self {
        self.sign = true;
        self
    }

    fn geometric_factor(&self) -> Rational {
        if self.sign {
            Rational::from(-&self.ratio)
        } else {
            self.ratio.clone()
        }
    }

    fn step(a: &AffineForm) -> Result<u32> {
        if a.k != 0 {
            return Err(Error::DomainError(format!("Pochhammer base {a} depends on k")));
        }
        if a.n.denom() != &1 || a.n < 0 {
            return Err(Error::DomainError(format!(
                "Pochhammer base {a} needs a non-negative integer coefficient of n"
            )));
        }
        Ok(a.n.numer().to_u32().expect("small step"))
    }

    /// `Γ(a(n+1))/Γ(a(n))` as a product of linear factors in `n`.
    fn step_factors(a: &AffineForm) -> Result<Vec<AffineForm>> {
        let alpha = Self::step(a)?;
        Ok((0..alpha).map(|i| a.add_const(&Rational::from(i))).collect())
    }

    /// `t_{n+1}/t_n` without the weight.
    fn coefficient_ratio(&self) -> Result<(Vec<AffineForm>, Vec<AffineForm>)> {
        let mut num = Vec::new();
        for a in &self.poch_num {
            num.extend(Self::step_factors(a)?);
        }
        let mut den = Vec::new();
        for b in &self.poch_den {
            den.extend(Self::step_factors(b)?);
        }
        Ok((num, den))
    }

    /// Exact term ratio `t_{n+1}/t_n` as a rational function of `n`.
    pub fn term_ratio(&self) -> Result<RationalFunction> {
        let (num, den) = self.coefficient_ratio()?;
        let p = num.iter().fold(BiPoly::constant(self.geometric_factor()), |acc, f| acc * f.to_poly());
        let q = den.iter().fold(BiPoly::one(), |acc, f| acc * f.to_poly());
        let w_next = self.weight.shift(&Rational::from(1), &Rational::new());
        let r = RationalFunction::new(p, q)?;
        let w_ratio = w_next.checked_div(&self.weight)?;
        Ok(&r * &w_ratio)
    }

    /// For a terminating series, the index after which every term vanishes:
    /// the smallest `n ≥ start_index` where a numerator step factor is zero.
    fn last_nonzero_index(&self) -> Result<Option<u32>> {
        let (num, _) = self.coefficient_ratio()?;
        let mut best: Option<u32> = None;
        for a in &num {
            if a.n == 0 {
                if a.c == 0 {
                    best = Some(self.start_index);
                }
                continue;
            }
            let root = -Rational::from(&a.c / &a.n);
            if root.denom() == &1 && root >= self.start_index {
                let r = root.numer().to_u32().expect("small root");
                best = Some(best.map_or(r, |b| b.min(r)));
            }
        }
        Ok(best)
    }

    /// The coefficient (everything but the weight) at `start_index`, exactly.
    fn first_coefficient(&self) -> Result<Rational> {
        let s = self.start_index;
        let mut c = Rational::from(1);
        for _ in 0..s {
            c *= self.geometric_factor();
        }
        let zero = Rational::new();
        for a in &self.poch_num {
            let len = Self::step(a)? * s;
            c *= poch_exact(&a.eval(&zero, &zero), len);
        }
        for b in &self.poch_den {
            let len = Self::step(b)? * s;
            let d = poch_exact(&b.eval(&zero, &zero), len);
            if d == 0 {
                return Err(Error::PoleAtPoint {
                    n: s.to_string(),
                    k: "0".into(),
                });
            }
            c /= d;
        }
        Ok(c)
    }
}

fn poch_exact(a: &Rational, len: u32) -> Rational {
    let mut p = Rational::from(1);
    for i in 0..len {
        p *= Rational::from(a + i);
    }
    p
}

/// Sum a weighted series to `10^{-digits-5}`.
///
/// Geometric series (`|t_{n+1}/t_n| → q < 1`) are summed directly. Series
/// with term ratio tending to 1 are summed directly up to an index `N` and the
/// remainder `Σ_{n≥N} t_n = t_N φ(N)` is taken from the asymptotic expansion
/// of `φ(N) = 1 + R(N) φ(N+1)` in powers of `1/N`.
pub fn weighted_series_eval(w: &WeightedSeries, prec: &Precision) -> Result<Complex> {
    if let Some(last) = w.last_nonzero_index()? {
        let (head, _) = sum_direct(w, prec, Some(last + 1))?;
        return Ok(Complex::with_val(prec.bits(), head));
    }
    let r = w.term_ratio()?;
    let limit = ratio_at_infinity(&r);
    match limit {
        Limit::Finite(q) if q == 1 => sum_with_tail(w, &r, prec),
        Limit::Finite(q) if q == -1 => Err(Error::NotConverged(
            "alternating series with term ratio tending to -1 is not supported".into(),
        )),
        Limit::Finite(q) if Rational::from(q.abs_ref()) > 1 => {
            Err(Error::Divergent(format!("term ratio tends to {q}")))
        }
        Limit::Infinite => Err(Error::Divergent("term ratio grows without bound".into())),
        Limit::Finite(_) => sum_direct(w, prec, None).map(|(s, _)| s),
    }
}

enum Limit {
    Finite(Rational),
    Infinite,
}

fn univariate(p: &BiPoly) -> Vec<Rational> {
    let d = p.degree_n() as usize;
    (0..=d).map(|i| p.coeff(Monomial::new(i as u32, 0))).collect()
}

fn ratio_at_infinity(r: &RationalFunction) -> Limit {
    let num = univariate(r.num());
    let den = univariate(r.den());
    if r.is_zero() {
        return Limit::Finite(Rational::new());
    }
    match (num.len()).cmp(&den.len()) {
        std::cmp::Ordering::Greater => Limit::Infinite,
        std::cmp::Ordering::Less => Limit::Finite(Rational::new()),
        std::cmp::Ordering::Equal => Limit::Finite(Rational::from(num.last().unwrap() / den.last().unwrap())),
    }
}

/// Direct summation from `start_index`. With `stop = Some(N)`, sums the terms
/// with index below `N` and also returns `t_N`.
fn sum_direct(w: &WeightedSeries, prec: &Precision, stop: Option<u32>) -> Result<(Complex, Complex)> {
    let wp = prec.bits() + 16;
    let (num, den) = w.coefficient_ratio()?;
    let g = w.geometric_factor();
    let mut coeff = Float::with_val(wp, w.first_coefficient()?);
    let zero = Rational::new();
    let mut n = Rational::from(w.start_index);
    let advance = |coeff: &mut Float, n: &mut Rational| -> Result<()> {
        let mut f = g.clone();
        for a in &num {
            f *= a.eval(n, &zero);
        }
        for b in &den {
            let d = b.eval(n, &zero);
            if d == 0 {
                return Err(Error::PoleAtPoint {
                    n: Rational::from(&*n + 1u32).to_string(),
                    k: "0".into(),
                });
            }
            f /= d;
        }
        *coeff *= f;
        *n += 1u32;
        Ok(())
    };
    match stop {
        None => {
            let s = sum_terms(
                |m| {
                    if m > 0 {
                        advance(&mut coeff, &mut n)?;
                    }
                    Ok(Complex::with_val(wp, &coeff * w.weight.eval(&n, &zero)?))
                },
                prec,
                "weighted series",
            )?;
            Ok((s.value, Complex::new(wp)))
        }
        Some(stop) => {
            let mut acc = Float::new(wp);
            for _ in w.start_index..stop {
                acc += Float::with_val(wp, &coeff * w.weight.eval(&n, &zero)?);
                advance(&mut coeff, &mut n)?;
            }
            let t_stop = Float::with_val(wp, &coeff * w.weight.eval(&n, &zero)?);
            Ok((Complex::with_val(wp, acc), Complex::with_val(wp, t_stop)))
        }
    }
}

fn sum_with_tail(w: &WeightedSeries, r: &RationalFunction, prec: &Precision) -> Result<Complex> {
    let order = prec.working_digits() as usize + 10;
    let coeffs = tail_coefficients(&univariate(r.num()), &univariate(r.den()), order)?;
    // N well past the start and any early poles of the weight
    let n_stop = w.start_index + (10 * prec.working_digits()).max(200);
    let (head, t_n) = sum_direct(w, prec, Some(n_stop))?;
    let wp = prec.bits() + 16;
    let inv_n = Float::with_val(wp, 1) / n_stop;
    // φ(N) = Σ_{j ≥ -1} c_j N^{-j}, Horner in 1/N
    let mut phi = Float::new(wp);
    for c in coeffs[1..].iter().rev() {
        phi = phi * &inv_n + c;
    }
    phi += Float::with_val(wp, &coeffs[0] * Float::with_val(wp, n_stop));
    let total = head + t_n * phi;
    Ok(Complex::with_val(prec.bits(), total))
}

/// Power series in `u` truncated to `len` coefficients.
fn series_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::new(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += Rational::from(x * y);
        }
    }
    out
}

fn series_div(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for m in 0..len {
        let mut v = a.get(m).cloned().unwrap_or_default();
        for j in 1..=m.min(b.len().saturating_sub(1)) {
            v -= Rational::from(&b[j] * &out[m - j]);
        }
        out.push(v / &b[0]);
    }
    out
}

/// Coefficients `c_{-1}, c_0, ..., c_{order-1}` of the tail factor
/// `φ(N) = Σ c_j N^{-j}` for a term ratio `R(N) = num(N)/den(N) → 1`.
fn tail_coefficients(num: &[Rational], den: &[Rational], order: usize) -> Result<Vec<Rational>> {
    let len = order + 2;
    // R as a series in u = 1/N: reverse the coefficient lists
    let a: Vec<Rational> = num.iter().rev().cloned().collect();
    let b: Vec<Rational> = den.iter().rev().cloned().collect();
    let r = series_div(&a, &b, len);
    // Σ_{n≥N} n^{-p}: p = -r_1
    let p = Rational::from(-&r[1]);
    if p <= 1 {
        return Err(Error::Divergent(format!("terms decay like n^-({p})")));
    }
    // (1 + u)^{-j} coefficients for j = 0..order
    let binom_neg = |j: usize| -> Vec<Rational> {
        let mut c = vec![Rational::new(); len];
        c[0] = Rational::from(1);
        for i in 1..len {
            // C(-j, i) = C(-j, i-1) (-j - i + 1) / i
            let f = Rational::from((-(j as i64) - i as i64 + 1, i as i64));
            c[i] = Rational::from(&c[i - 1] * &f);
        }
        c
    };
    let unknowns = order + 1;
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(unknowns);
    for idx in 0..unknowns {
        let j = idx as i64 - 1;
        // u^{j+1} and S_j = u (u/(1+u))^j
        let mut mono = vec![Rational::new(); len];
        let s = if j < 0 {
            mono[0] = Rational::from(1);
            let mut s = vec![Rational::new(); len];
            s[0] = Rational::from(1);
            s[1] = Rational::from(1);
            s
        } else {
            let j = j as usize;
            mono[j + 1] = Rational::from(1);
            let mut shifted = vec![Rational::new(); len];
            let bn = binom_neg(j);
            for i in 0..len - j - 1 {
                shifted[i + j + 1] = bn[i].clone();
            }
            shifted
        };
        let rs = series_mul(&r, &s, len);
        columns.push(mono.iter().zip(rs).map(|(x, y)| Rational::from(x - &y)).collect());
    }
    // equations at u^1 .. u^{order+1}
    let mut mat: Vec<Vec<Rational>> = (1..=unknowns)
        .map(|m| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[m].clone()).collect();
            row.push(Rational::from(u32::from(m == 1)));
            row
        })
        .collect();
    solve(&mut mat, unknowns)
}

fn solve(mat: &mut [Vec<Rational>], n: usize) -> Result<Vec<Rational>> {
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| mat[r][col] != 0)
            .ok_or_else(|| Error::NotConverged("singular tail system".into()))?;
        mat.swap(col, pivot);
        let p = mat[col][col].clone();
        for v in mat[col].iter_mut() {
            *v /= &p;
        }
        for row in 0..n {
            if row != col && mat[row][col] != 0 {
                let f = mat[row][col].clone();
                let pivot_row = mat[col].clone();
                for (v, pv) in mat[row].iter_mut().zip(pivot_row.iter()) {
                    *v -= Rational::from(&f * pv);
                }
            }
        }
    }
    Ok(mat.iter().map(|row| row[n].clone()).collect())
}
