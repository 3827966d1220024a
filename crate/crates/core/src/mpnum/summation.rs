use rug::{Complex, Float};

use super::{abs, pow10, Precision};
use crate::error::{Error, Result};

const MAX_TERMS: usize = 2_000_000;
const DIVERGENCE_START: usize = 100;
const DIVERGENCE_RUN: usize = 50;

/// Outcome of [`sum_terms`].
#[derive(Clone, Debug)]
pub struct Summation {
    pub value: Complex,
    pub terms_used: usize,
}

/// Sum the terms produced in order by `term(m)`, `m = 0, 1, ...`.
///
/// Stops once three consecutive terms each satisfy the geometric tail bound
/// `|t_m| q / (1 - q) < 10^{-digits-5}` with `q = |t_m / t_{m-1}| < 1`; an exact
/// zero following a negligible term also counts. Reports `Divergent` when
/// `|t_{m+1} / t_m| ≥ 1` for 50 consecutive `m` beyond `m = 100`.
pub fn sum_terms<F>(mut term: F, prec: &Precision, what: &str) -> Result<Summation>
where
    F: FnMut(usize) -> Result<Complex>,
{
    let wp = prec.bits() + 16;
    let eps = pow10(-i64::from(prec.digits) - 5, wp);
    let mut acc = Complex::new(wp);
    let mut prev_mag: Option<Float> = None;
    let mut settled = 0;
    let mut growing = 0;
    for m in 0..MAX_TERMS {
        let t = term(m)?;
        let mag = abs(&t);
        acc += &t;
        let ok = match &prev_mag {
            Some(p) if mag.is_zero() => *p < eps,
            Some(p) if !p.is_zero() => {
                let q = Float::with_val(wp, &mag / p);
                if q >= 1 && m > DIVERGENCE_START {
                    growing += 1;
                } else {
                    growing = 0;
                }
                q < 1 && Float::with_val(wp, &mag * &q) / (1 - q) < eps
            }
            _ => false,
        };
        if growing >= DIVERGENCE_RUN {
            return Err(Error::Divergent(format!(
                "{what}: term ratio at least 1 for {DIVERGENCE_RUN} consecutive terms up to index {m}"
            )));
        }
        settled = if ok { settled + 1 } else { 0 };
        if settled >= 3 {
            return Ok(Summation {
                value: Complex::with_val(prec.bits(), acc),
                terms_used: m + 1,
            });
        }
        prev_mag = Some(mag);
    }
    Err(Error::NotConverged(format!("{what}: {MAX_TERMS} terms were not enough")))
}
