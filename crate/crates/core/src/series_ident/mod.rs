//! Hypergeometric series: direct summation, continuation through Barnes
//! integrals, weighted series with algebraic tails and summation identities
//! derived from WZ pairs.

mod checks;
mod weighted;

pub use checks::{example2_identity, sumas_wz_check, zeilberger_diagonal_check, IdentityReport};
pub use weighted::{weighted_series_eval, WeightedSeries};

use rug::{Complex, Rational};

use crate::barnes::{choose_contour, eval_integral, IntegrandSpec};
use crate::error::{Error, Result};
use crate::exact::{AffineForm, BiPoly, RationalFunction};
use crate::mpnum::Precision;

/// `pFq(upper; lower | z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFQSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub z: Rational,
}

impl PFQSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, z: Rational) -> Self {
        PFQSpec { upper, lower, z }
    }

    fn terminates(&self) -> bool {
        self.upper.iter().any(|a| *a <= 0 && a.denom() == &1)
    }

    fn as_series(&self) -> WeightedSeries {
        let shift = |c: &Rational| AffineForm::var_n().add_const(c);
        let mut den: Vec<AffineForm> = self.lower.iter().map(shift).collect();
        den.push(shift(&Rational::from(1)));
        WeightedSeries::new(
            self.upper.iter().map(shift).collect(),
            den,
            RationalFunction::one(),
            self.z.clone(),
        )
    }

    /// `Π (a)_s / Π (b)_s Γ(-s) (-z)^s`, whose line integral is the continuation.
    pub fn as_integrand(&self) -> IntegrandSpec {
        IntegrandSpec::new(
            BiPoly::one(),
            self.upper.iter().cloned().map(AffineForm::constant).collect(),
            self.lower.iter().cloned().map(AffineForm::constant).collect(),
            self.z.clone(),
        )
    }
}

/// Value of the series for `|z| < 1` (or whenever it converges everywhere);
/// for `p = q + 1` and `z ≤ -1` the Barnes integral gives the continuation.
pub fn pfq(s: &PFQSpec, prec: &Precision) -> Result<Complex> {
    if let Some(b) = s.lower.iter().find(|b| **b <= 0 && b.denom() == &1) {
        return Err(Error::DomainError(format!("lower parameter {b} is a non-positive integer")));
    }
    let p = s.upper.len();
    let q = s.lower.len();
    let small = Rational::from(s.z.abs_ref()) < 1;
    if s.terminates() || p <= q || small {
        return weighted_series_eval(&s.as_series(), prec);
    }
    if p > q + 1 {
        return Err(Error::DomainError(format!("{p}F{q} diverges for z = {}", s.z)));
    }
    if s.z >= 1 {
        return Err(Error::DomainError(format!("z = {} lies on the branch cut [1, ∞)", s.z)));
    }
    let integrand = s.as_integrand();
    let contour = choose_contour(&integrand, prec)?;
    let r = eval_integral(&integrand, &contour, prec)?;
    if !r.converged {
        return Err(Error::NotConverged("Barnes integral".into()));
    }
    Ok(r.value)
}

#[cfg(test)]
mod tests;
