use rug::{Complex, Float, Rational};

use super::quadrature::{contour_for, eval_resolved};
use super::integrand::{IntegrandSpec, Scale};
use crate::closed_form::ConstExpr;
use crate::error::Result;
use crate::hyperterm::numeric_eval;
use crate::mpnum::{abs_diff, Precision};

#[derive(Clone, Debug)]
pub struct SampleCheck {
    pub label: String,
    pub computed: Complex,
    pub expected: Complex,
    pub abs_diff: Float,
}

#[derive(Clone, Debug)]
pub struct FamilyCheckReport {
    pub samples: Vec<SampleCheck>,
    pub max_deviation: Float,
}

impl FamilyCheckReport {
    fn from_samples(samples: Vec<SampleCheck>, bits: u32) -> Self {
        let mut max_deviation = Float::new(bits);
        for s in &samples {
            if s.abs_diff > max_deviation {
                max_deviation = s.abs_diff.clone();
            }
        }
        FamilyCheckReport { samples, max_deviation }
    }

    pub fn passes(&self, tol: &Float) -> bool {
        self.max_deviation < *tol
    }
}

/// Value of `rhs` (constant times its term in `t`) at a rational `t`.
pub fn scale_value(rhs: &Scale, t: &Rational, prec: &Precision) -> Result<Complex> {
    let bits = prec.bits();
    let c = rhs.constant.eval(prec)?;
    let tt = numeric_eval(
        &rhs.t_term,
        &Complex::new(bits),
        &Complex::with_val(bits, t),
        prec,
    )?;
    Ok(Complex::with_val(bits, c * tt))
}

fn integral_at(family: &IntegrandSpec, prec: &Precision) -> Result<Complex> {
    let r = family.resolve(prec)?;
    let c = contour_for(&r, prec)?;
    Ok(eval_resolved(&r, &c, prec)?.value)
}

/// Compare the line integral of `family` at each `t` against `rhs(t)`.
pub fn t_independence_check(
    family: &IntegrandSpec,
    rhs: &Scale,
    t_samples: &[Rational],
    prec: &Precision,
) -> Result<FamilyCheckReport> {
    let mut samples = Vec::new();
    for t in t_samples {
        let computed = integral_at(&family.clone().with_t(t.clone()), prec)?;
        let expected = scale_value(rhs, t, prec)?;
        samples.push(SampleCheck {
            label: format!("t = {t}"),
            abs_diff: abs_diff(&computed, &expected),
            computed,
            expected,
        });
    }
    Ok(FamilyCheckReport::from_samples(samples, prec.bits()))
}

/// Evaluate `family` at t = 0, 1, 2, 4 and the limiting integrand, each
/// against the common value `expected`.
pub fn weierstrass_limit_check(
    family: &IntegrandSpec,
    limit: &IntegrandSpec,
    expected: &ConstExpr,
    prec: &Precision,
) -> Result<FamilyCheckReport> {
    let target = expected.eval(prec)?;
    let mut samples = Vec::new();
    for t in [0u32, 1, 2, 4] {
        let computed = integral_at(&family.clone().with_t(Rational::from(t)), prec)?;
        samples.push(SampleCheck {
            label: format!("t = {t}"),
            abs_diff: abs_diff(&computed, &target),
            computed,
            expected: target.clone(),
        });
    }
    let computed = integral_at(limit, prec)?;
    samples.push(SampleCheck {
        label: "limit".to_string(),
        abs_diff: abs_diff(&computed, &target),
        computed,
        expected: target.clone(),
    });
    Ok(FamilyCheckReport::from_samples(samples, prec.bits()))
}
