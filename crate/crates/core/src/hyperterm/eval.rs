use rug::float::Constant as MpfrConstant;
use rug::{Complex, Float, Rational};

use super::HyperTerm;
use crate::error::{Error, Result};
use crate::mpnum::{is_nonpositive_integer, log_gamma, Precision};

/// (-1)^x: exactly ±1 at integers, `exp(iπx)` elsewhere.
fn sign_power(x: &Complex, wp: u32) -> Complex {
    if x.imag().is_zero() && x.real().is_integer() {
        let r = x.real().to_integer().expect("finite integer");
        return Complex::with_val(wp, if r.is_odd() { -1 } else { 1 });
    }
    let pi = Float::with_val(wp, MpfrConstant::Pi);
    let arg = Complex::with_val(wp, x * Complex::with_val(wp, (0, 1))) * pi;
    arg.exp()
}

/// Value of `t` at complex `(n, k)`.
pub fn numeric_eval(t: &HyperTerm, n: &Complex, k: &Complex, prec: &Precision) -> Result<Complex> {
    let wp = prec.bits() + 16;
    let n = Complex::with_val(wp, n);
    let k = Complex::with_val(wp, k);
    let mut log_sum = Complex::new(wp);
    let gamma_args = t
        .gammas
        .iter()
        .map(|(a, e)| (a.eval_complex(&n, &k), *e))
        .chain(
            t.konst
                .gammas
                .iter()
                .map(|(a, e)| (Complex::with_val(wp, a), *e)),
        );
    for (z, e) in gamma_args {
        if is_nonpositive_integer(&z) {
            return Err(Error::GammaPole(z.real().to_string()));
        }
        log_sum += log_gamma(&z, prec)? * e;
    }
    for (p, a) in &t.exps {
        let ln_p = Float::with_val(wp, p).ln();
        log_sum += a.eval_complex(&n, &k) * ln_p;
    }
    for (p, r) in &t.konst.powers {
        let ln_p = Float::with_val(wp, p).ln();
        log_sum += ln_p * Float::with_val(wp, r);
    }
    let mut v = log_sum.exp();
    if t.sign_n {
        v *= sign_power(&n, wp);
    }
    if t.sign_k {
        v *= sign_power(&k, wp);
    }
    v *= t.rat.eval_complex(&n, &k)?;
    v *= &t.konst.coeff;
    Ok(Complex::with_val(prec.bits(), v))
}

/// Convenience wrapper for rational points.
pub fn numeric_eval_at(t: &HyperTerm, n: &Rational, k: &Rational, prec: &Precision) -> Result<Complex> {
    numeric_eval(t, &prec.complex(n), &prec.complex(k), prec)
}
