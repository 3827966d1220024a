use rug::{Complex, Float, Rational};

use super::weighted::{weighted_series_eval, WeightedSeries};
use crate::error::{Error, Result};
use crate::exact::{AffineForm, BiPoly, RationalFunction};
use crate::hyperterm::{numeric_eval_at, HyperTerm, WZPair};
use crate::mpnum::{abs, abs_diff, sum_terms, Precision};

/// Both sides of a summation identity.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub lhs: Complex,
    pub rhs: Complex,
    pub abs_diff: Float,
    pub notes: Vec<String>,
}

impl IdentityReport {
    fn new(lhs: Complex, rhs: Complex, notes: Vec<String>) -> Self {
        let d = abs_diff(&lhs, &rhs);
        IdentityReport {
            lhs,
            rhs,
            abs_diff: d,
            notes,
        }
    }

    pub fn holds(&self, tol: &Float) -> bool {
        self.abs_diff < *tol
    }
}

fn at(t: &HyperTerm, n: i64, k: i64, prec: &Precision) -> Result<Complex> {
    numeric_eval_at(t, &Rational::from(n), &Rational::from(k), prec)
}

fn sum_along_n<F>(mut term: F, start: i64, prec: &Precision, what: &str) -> Result<Complex>
where
    F: FnMut(i64) -> Result<Complex>,
{
    Ok(sum_terms(|m| term(start + m as i64), prec, what)?.value)
}

/// `Σ_{n≥j} (F(n+1,n) + G(n,n))` against `Σ_{n≥j} G(n,j)`.
pub fn zeilberger_diagonal_check(pair: &WZPair, j: i64, prec: &Precision) -> Result<IdentityReport> {
    let lhs = sum_along_n(
        |n| Ok(at(&pair.f, n + 1, n, prec)? + at(&pair.g, n, n, prec)?),
        j,
        prec,
        "diagonal sum",
    )?;
    let rhs = sum_along_n(|n| at(&pair.g, n, j, prec), j, prec, "row sum")?;
    Ok(IdentityReport::new(lhs, rhs, vec![format!("j = {j}")]))
}

const START_SEARCH: i64 = 20;

/// `Σ_{n≥n0} G(n,k) - Σ_{n≥n0} G(n,k+1)` against `F(n0,k) - lim_{n→∞} F(n,k)`.
///
/// `n0` is the first index where `F(n0,k)`, `G(n0,k)` and `G(n0,k+1)` are
/// finite. The limit is estimated from `F(N,k)` at `N = 10·digits, 2N, 4N`.
pub fn sumas_wz_check(pair: &WZPair, k: i64, prec: &Precision) -> Result<IdentityReport> {
    let n0 = (0..=START_SEARCH)
        .find(|&n| {
            at(&pair.f, n, k, prec).is_ok() && at(&pair.g, n, k, prec).is_ok() && at(&pair.g, n, k + 1, prec).is_ok()
        })
        .ok_or_else(|| Error::DomainError(format!("no finite starting index up to {START_SEARCH}")))?;
    let s0 = sum_along_n(|n| at(&pair.g, n, k, prec), n0, prec, "sum of G(n,k)")?;
    let s1 = sum_along_n(|n| at(&pair.g, n, k + 1, prec), n0, prec, "sum of G(n,k+1)")?;
    let lhs = Complex::with_val(prec.bits(), &s0 - &s1);

    let big = 10 * i64::from(prec.digits);
    let f1 = at(&pair.f, big, k, prec)?;
    let f2 = at(&pair.f, 2 * big, k, prec)?;
    let f4 = at(&pair.f, 4 * big, k, prec)?;
    let d1 = abs_diff(&f2, &f1);
    let d2 = abs_diff(&f4, &f2);
    let mut notes = vec![format!("n0 = {n0}")];
    let limit = if d2 < prec.tolerance() {
        f4
    } else if d2 < d1 {
        notes.push("limit of F extrapolated assuming 1/N decay".into());
        Complex::with_val(prec.bits(), Complex::with_val(prec.bits(), &f4 * 2u32) - &f2)
    } else {
        return Err(Error::Divergent(format!(
            "F(N,{k}) does not settle: |F(4N) - F(2N)| = {:.3e}",
            d2.to_f64()
        )));
    };
    notes.push(format!("lim F(n,{k}) ≈ {:.6e}", abs(&limit).to_f64()));
    let rhs = Complex::with_val(prec.bits(), at(&pair.f, n0, k, prec)? - limit);
    Ok(IdentityReport::new(lhs, rhs, notes))
}

fn shifted(c: Rational) -> AffineForm {
    AffineForm::var_n().add_const(&c)
}

/// The parametric identity
/// `Σ_n (1+x)_n^3/((1/2+x)_n (1/3+x)_n (2/3+x)_n) (16/27)^n (11(n+x)-3)/(n+x)^3
///  = 6(3x-1)(3x-2)/(x^3(2x-1)) Σ_k (1/2)_k (3/2-x)_k / (1/2+x)_k^2`,
/// whose right-hand series converges for `x > 2/3`.
pub fn example2_identity(x: &Rational, prec: &Precision) -> Result<IdentityReport> {
    if *x <= Rational::from((2, 3)) {
        return Err(Error::DomainError(format!("x = {x}: the k-series needs x > 2/3")));
    }
    let q = |a: i64, b: i64| Rational::from((a, b));
    let xp = |c: Rational| Rational::from(&c + x);
    let n_plus_x = BiPoly::var_n() + BiPoly::constant(x.clone());
    let weight = RationalFunction::new(
        n_plus_x.scale(&Rational::from(11)) - BiPoly::constant(3),
        n_plus_x.pow(3),
    )?;
    let lhs_series = WeightedSeries::new(
        vec![shifted(xp(q(1, 1))), shifted(xp(q(1, 1))), shifted(xp(q(1, 1)))],
        vec![shifted(xp(q(1, 2))), shifted(xp(q(1, 3))), shifted(xp(q(2, 3)))],
        weight,
        q(16, 27),
    );
    let rhs_series = WeightedSeries::new(
        vec![shifted(q(1, 2)), shifted(q(3, 2) - x )],
        vec![shifted(xp(q(1, 2))), shifted(xp(q(1, 2)))],
        RationalFunction::one(),
        Rational::from(1),
    );
    let three_x = Rational::from(x * 3u32);
    let prefactor = Rational::from(6u32)
        * Rational::from(&three_x - 1u32)
        * Rational::from(&three_x - 2u32)
        / (Rational::from(x * x) * x * (Rational::from(x * 2u32) - 1u32));
    let lhs = weighted_series_eval(&lhs_series, prec)?;
    let inner = weighted_series_eval(&rhs_series, prec)?;
    let rhs = Complex::with_val(prec.bits(), inner * &prefactor);
    Ok(IdentityReport::new(lhs, rhs, vec![format!("x = {x}, prefactor {prefactor}")]))
}
