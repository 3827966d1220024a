use rug::float::Constant as MpfrConstant;
use rug::{Complex, Float, Rational};

use super::integrand::{IntegrandSpec, Resolved};
use crate::error::{Error, Result};
use crate::mpnum::{abs, is_nonpositive_integer, log_gamma, Precision};

/// Vertical line `Re s = re_offset`, truncated at `|Im s| = truncation_t`,
/// sampled with step `step_h`.
#[derive(Clone, Debug, PartialEq)]
pub struct ContourSpec {
    pub re_offset: Rational,
    pub truncation_t: Float,
    pub step_h: Float,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex,
    pub error_estimate: Float,
    pub nodes_used: usize,
    pub converged: bool,
}

/// Line halfway between `s = 0` and the nearest left pole `-a_min`.
pub fn choose_contour(i: &IntegrandSpec, prec: &Precision) -> Result<ContourSpec> {
    let r = i.resolve(prec)?;
    contour_for(&r, prec)
}

pub(crate) fn contour_for(r: &Resolved, prec: &Precision) -> Result<ContourSpec> {
    let a_min = match r.a_min() {
        Some(a) => a.clone(),
        // only Γ(-s): any negative line separates
        None => Rational::from(1),
    };
    if a_min <= 0 {
        return Err(Error::NoStraightSeparatingLine(a_min.to_string()));
    }
    let bits = prec.bits();
    Ok(ContourSpec {
        re_offset: -a_min / 2u32,
        truncation_t: Float::with_val(bits, (1.2 * f64::from(prec.digits)).max(30.0)),
        step_h: Float::with_val(bits, 0.125),
    })
}

/// Precomputed pieces of `f(s)` for repeated evaluation.
pub(crate) struct Integrand<'a> {
    r: &'a Resolved,
    prec: Precision,
    wp: u32,
    log_neg_z: Complex,
    log_const: Complex,
    scale: Complex,
}

impl<'a> Integrand<'a> {
    pub fn new(r: &'a Resolved, prec: &Precision) -> Result<Self> {
        let wp = prec.bits() + 16;
        let neg_z = Complex::with_val(wp, Rational::from(-&r.z));
        let log_neg_z = neg_z.ln();
        let mut log_const = Complex::new(wp);
        for (b, m) in &r.den {
            log_const += log_gamma(&Complex::with_val(wp, b), prec)? * *m;
        }
        for (a, m) in &r.num {
            log_const -= log_gamma(&Complex::with_val(wp, a), prec)? * *m;
        }
        Ok(Integrand {
            r,
            prec: *prec,
            wp,
            log_neg_z,
            log_const,
            scale: Complex::with_val(wp, &r.scale),
        })
    }

    pub fn eval(&self, s: &Complex) -> Result<Complex> {
        let wp = self.wp;
        let mut lg = self.log_const.clone();
        for (b, m) in &self.r.den {
            let x = Complex::with_val(wp, s + b);
            if is_nonpositive_integer(&x) {
                return Ok(Complex::new(wp));
            }
            lg -= log_gamma(&x, &self.prec)? * *m;
        }
        for (a, m) in &self.r.num {
            lg += log_gamma(&Complex::with_val(wp, s + a), &self.prec)? * *m;
        }
        lg += log_gamma(&Complex::with_val(wp, -s), &self.prec)?;
        lg += Complex::with_val(wp, s * &self.log_neg_z);
        let v = lg.exp() * self.r.prefactor_at(s);
        Ok(v * &self.scale)
    }
}

const MAX_HALVINGS: u32 = 12;
const MAX_T: f64 = 4000.0;

/// `(1/2πi) ∫ f(s) ds` along `Re s = c` by the trapezoidal rule, using
/// `f(conj s) = conj f(s)` so only `Im s ≥ 0` is sampled.
pub fn eval_integral(i: &IntegrandSpec, c: &ContourSpec, prec: &Precision) -> Result<QuadratureResult> {
    let r = i.resolve(prec)?;
    eval_resolved(&r, c, prec)
}

pub(crate) fn eval_resolved(r: &Resolved, c: &ContourSpec, prec: &Precision) -> Result<QuadratureResult> {
    if r.z >= 0 {
        return Err(Error::DomainError(format!(
            "z = {} is not negative; the line integral is evaluated only for z < 0",
            r.z
        )));
    }
    if let Some(a) = r.a_min() {
        if *a <= 0 || c.re_offset <= -a.clone() || c.re_offset >= 0 {
            return Err(Error::NoStraightSeparatingLine(a.to_string()));
        }
    }
    let f = Integrand::new(r, prec)?;
    let wp = prec.bits() + 16;
    let cre = Float::with_val(wp, &c.re_offset);
    // (Re f, |f|) at c + iy
    let node = |y: &Float| -> Result<(Float, Float)> {
        let s = Complex::with_val(wp, (&cre, y));
        let v = f.eval(&s)?;
        let mag = abs(&v);
        Ok((v.into_real_imag().0, mag))
    };
    let tail_tol = crate::mpnum::pow10(-i64::from(prec.digits) - 5, wp);
    let tol = prec.tolerance();

    let mut h = Float::with_val(wp, &c.step_h);
    let mut t_max = Float::with_val(wp, &c.truncation_t);
    let mut values: Vec<(Float, Float)> = vec![node(&Float::with_val(wp, 0))?];
    let mut nodes_used = 1usize;
    let mut previous: Option<Float> = None;

    for _ in 0..=MAX_HALVINGS {
        // extend to T and until the tail is negligible and decaying
        loop {
            let count = Float::with_val(wp, &t_max / &h).to_f64().ceil() as usize;
            while values.len() <= count {
                let y = Float::with_val(wp, &h * values.len() as u32);
                values.push(node(&y)?);
                nodes_used += 1;
            }
            if tail_ok(&values, &tail_tol) {
                break;
            }
            t_max *= 1.5;
            if t_max.to_f64() > MAX_T {
                return Err(Error::NotConverged(format!(
                    "integrand not negligible at |Im s| = {MAX_T}"
                )));
            }
        }
        let mut sum = Float::with_val(wp, &values[0].0);
        for (v, _) in &values[1..] {
            sum += Float::with_val(wp, v * 2u32);
        }
        let two_pi = Float::with_val(wp, MpfrConstant::Pi) * 2u32;
        let estimate = sum * &h / two_pi;
        if let Some(prev) = &previous {
            let diff = Float::with_val(wp, &estimate - prev).abs();
            if diff < tol {
                return Ok(QuadratureResult {
                    value: Complex::with_val(prec.bits(), &estimate),
                    error_estimate: diff,
                    nodes_used,
                    converged: true,
                });
            }
        }
        previous = Some(estimate);
        // halve the step: keep the old nodes at even positions
        h /= 2u32;
        let old = std::mem::take(&mut values);
        values.reserve(2 * old.len());
        for (j, v) in old.into_iter().enumerate() {
            if j > 0 {
                let y = Float::with_val(wp, &h * (2 * j - 1) as u32);
                values.push(node(&y)?);
                nodes_used += 1;
            }
            values.push(v);
        }
    }
    Err(Error::NotConverged(format!(
        "trapezoidal estimates still differ after {MAX_HALVINGS} halvings"
    )))
}

/// The last node is below `tol` and `|f|` decreased over the last 10 steps.
fn tail_ok(values: &[(Float, Float)], tol: &Float) -> bool {
    if values.len() < 12 {
        return false;
    }
    let tail = &values[values.len() - 11..];
    tail.windows(2).all(|w| w[1].1 <= w[0].1) && tail[10].1 < *tol
}

/// `|f(s)|` at a point, for diagnostics.
pub fn integrand_magnitude(i: &IntegrandSpec, s: &Complex, prec: &Precision) -> Result<Float> {
    let r = i.resolve(prec)?;
    let f = Integrand::new(&r, prec)?;
    Ok(abs(&f.eval(s)?))
}
