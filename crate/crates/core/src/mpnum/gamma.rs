use std::f64::consts::PI;
use std::sync::{Arc, Mutex};

use rug::float::Constant as MpfrConstant;
use rug::{Complex, Float, Integer, Rational};

use super::{is_nonpositive_integer, Precision};
use crate::error::{Error, Result};

/// Exact Bernoulli numbers B_0, B_1, ... grown on demand.
static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

fn bernoulli_upto(m: usize) -> Vec<Rational> {
    let mut table = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(Rational::from(1));
    }
    while table.len() <= m {
        // sum_{j=0}^{n} C(n+1, j) B_j = 0
        let n = table.len();
        let mut acc = Rational::new();
        let mut binom = Integer::from(1);
        for (j, b) in table.iter().enumerate() {
            acc += Rational::from(b * &binom);
            binom *= (n + 1 - j) as u32;
            binom /= (j + 1) as u32;
        }
        table.push(-acc / Integer::from(n + 1));
    }
    table[..=m].to_vec()
}

fn to_f64(z: &Complex) -> (f64, f64) {
    (z.real().to_f64(), z.imag().to_f64())
}

/// Principal branch of log Γ(z).
///
/// Shifts `z` upward by an integer `m` until `|z + m|` exceeds a threshold that
/// grows with the precision, sums the Stirling series there and subtracts
/// `log(z (z+1) ... (z+m-1))`, whose branch is fixed by the sum of the
/// individual arguments.
pub fn log_gamma(z: &Complex, prec: &Precision) -> Result<Complex> {
    if is_nonpositive_integer(z) {
        return Err(Error::PoleAtNonpositiveInteger(z.real().to_string()));
    }
    let wp = prec.bits() + 32;
    let z = Complex::with_val(wp, z);
    let (zr, zi) = to_f64(&z);
    let threshold = 0.4 * f64::from(prec.working_digits()) + 10.0;
    let re_needed = (threshold * threshold - zi * zi).max(0.0).sqrt().max(1.0);
    let m = (re_needed - zr).ceil().max(0.0) as u64;

    let mut w = z.clone();
    let mut shift = Complex::new(wp);
    if m > 0 {
        let mut prod = Complex::with_val(wp, 1);
        let mut arg_sum = 0.0;
        for j in 0..m {
            arg_sum += zi.atan2(zr + j as f64);
            prod *= &w;
            w += 1u32;
        }
        shift = prod.ln();
        let turns = ((arg_sum - shift.imag().to_f64()) / (2.0 * PI)).round();
        if turns != 0.0 {
            let two_pi = Float::with_val(wp, MpfrConstant::Pi) * 2u32;
            *shift.mut_imag() += two_pi * turns;
        }
    }
    Ok(stirling(&w, wp) - shift)
}

/// Stirling coefficients `B_{2j} / (2j (2j-1))` and `log(2π)/2` at one precision.
struct StirlingTable {
    half_log_two_pi: Float,
    coeffs: Vec<Float>,
}

static STIRLING: Mutex<Vec<(u32, Arc<StirlingTable>)>> = Mutex::new(Vec::new());

fn stirling_table(wp: u32, terms: usize) -> Arc<StirlingTable> {
    let mut cache = STIRLING.lock().unwrap_or_else(|e| e.into_inner());
    if let Some((_, t)) = cache.iter().find(|(b, t)| *b == wp && t.coeffs.len() >= terms) {
        return Arc::clone(t);
    }
    let bern = bernoulli_upto(2 * terms);
    let coeffs = (1..=terms)
        .map(|j| {
            let c = Rational::from(&bern[2 * j] / Integer::from((2 * j) * (2 * j - 1)));
            Float::with_val(wp, &c)
        })
        .collect();
    let two_pi = Float::with_val(wp, MpfrConstant::Pi) * 2u32;
    let table = Arc::new(StirlingTable {
        half_log_two_pi: two_pi.ln() / 2u32,
        coeffs,
    });
    cache.retain(|(b, _)| *b != wp);
    cache.push((wp, Arc::clone(&table)));
    table
}

fn stirling(w: &Complex, wp: u32) -> Complex {
    let ln_w = Complex::with_val(wp, w.ln_ref());
    let half = Rational::from((1, 2));
    let mut acc = Complex::with_val(wp, w - &half) * &ln_w;
    acc -= w;

    let eps = Float::with_val(53, Float::i_exp(1, -(wp as i32)));
    let inv_w = Complex::with_val(wp, w.recip_ref());
    let inv_w2 = Complex::with_val(wp, inv_w.square_ref());
    let mut power = inv_w; // w^{-(2j-1)}
    let mut table = stirling_table(wp, 64);
    acc += &table.half_log_two_pi;
    let mut j = 0usize;
    let mut prev_mag: Option<Float> = None;
    loop {
        if j >= table.coeffs.len() {
            table = stirling_table(wp, 2 * table.coeffs.len());
        }
        let term = Complex::with_val(wp, &power * &table.coeffs[j]);
        let mag = Complex::with_val(53, term.abs_ref()).into_real_imag().0;
        acc += &term;
        if mag < eps {
            break;
        }
        if let Some(p) = &prev_mag {
            if mag > *p {
                // asymptotic divergence; the threshold keeps this from happening in practice
                break;
            }
        }
        prev_mag = Some(mag);
        power *= &inv_w2;
        j += 1;
    }
    acc
}

/// Γ(z).
pub fn gamma(z: &Complex, prec: &Precision) -> Result<Complex> {
    let lg = log_gamma(z, prec)?;
    Ok(Complex::with_val(prec.bits(), lg.exp_ref()))
}

/// 1/Γ(z), zero at the poles of Γ.
pub fn rgamma(z: &Complex, prec: &Precision) -> Complex {
    match log_gamma(z, prec) {
        Ok(lg) => Complex::with_val(prec.bits(), (-lg).exp_ref()),
        Err(_) => Complex::new(prec.bits()),
    }
}

fn small_nonnegative_integer(s: &Complex) -> Option<u32> {
    if s.imag().is_zero() && s.real().is_integer() && *s.real() >= 0 && *s.real() <= 4096 {
        s.real().to_u32_saturating()
    } else {
        None
    }
}

/// Rising factorial (x)_s = Γ(x+s)/Γ(x).
pub fn pochhammer(x: &Complex, s: &Complex, prec: &Precision) -> Result<Complex> {
    let bits = prec.bits();
    if let Some(n) = small_nonnegative_integer(s) {
        let wp = bits + 16;
        let mut acc = Complex::with_val(wp, 1);
        let mut f = Complex::with_val(wp, x);
        for _ in 0..n {
            acc *= &f;
            f += 1u32;
        }
        return Ok(Complex::with_val(bits, acc));
    }
    let xs = Complex::with_val(bits + 16, x + s);
    match (is_nonpositive_integer(x), is_nonpositive_integer(&xs)) {
        (true, false) => return Ok(Complex::new(bits)),
        (_, true) => return Err(Error::PoleAtNonpositiveInteger(xs.real().to_string())),
        _ => {}
    }
    let d = log_gamma(&xs, prec)? - log_gamma(x, prec)?;
    Ok(Complex::with_val(bits, d.exp_ref()))
}

/// Exact (x)_n for rational x and non-negative integer n.
pub fn pochhammer_rational(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::from(1);
    let mut f = x.clone();
    for _ in 0..n {
        acc *= &f;
        f += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpnum::{abs_diff, constant, Constant};

    fn c(re: f64, im: f64, p: &Precision) -> Complex {
        Complex::with_val(p.bits(), (re, im))
    }

    fn q(a: i64, b: i64, p: &Precision) -> Complex {
        p.complex(&Rational::from((a, b)))
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_upto(12);
        assert_eq!(b[1], Rational::from((-1, 2)));
        assert_eq!(b[2], Rational::from((1, 6)));
        assert_eq!(b[4], Rational::from((-1, 30)));
        assert_eq!(b[12], Rational::from((-691, 2730)));
        assert_eq!(b[11], 0);
    }

    #[test]
    fn log_gamma_half_and_five() {
        let p = Precision::new(40);
        let lg = log_gamma(&q(1, 2, &p), &p).unwrap();
        let sqrt_pi = constant(Constant::Pi, &p).sqrt();
        let expected = Complex::with_val(p.bits(), sqrt_pi.ln());
        assert!(abs_diff(&lg, &expected) < p.tolerance());
        let lg5 = log_gamma(&q(5, 1, &p), &p).unwrap();
        let l24 = Complex::with_val(p.bits(), Float::with_val(p.bits(), 24).ln());
        assert!(abs_diff(&lg5, &l24) < p.tolerance());
    }

    #[test]
    fn agrees_with_mpfr_on_reals() {
        let p = Precision::new(50);
        for x in [0.3, 1.7, 12.25, 73.5, -2.5, -0.75] {
            let z = c(x, 0.0, &p);
            let ours = gamma(&z, &p).unwrap();
            let mpfr = Float::with_val(p.bits(), x).gamma();
            let rel = abs_diff(&ours, &Complex::with_val(p.bits(), &mpfr)) / mpfr.abs();
            assert!(rel < p.tolerance(), "x = {x}");
        }
    }

    #[test]
    fn duplication_at_one_plus_i() {
        let p = Precision::new(40);
        let z = c(1.0, 1.0, &p);
        let zh = Complex::with_val(p.bits(), &z + Rational::from((1, 2)));
        let z2 = Complex::with_val(p.bits(), &z * 2u32);
        let lhs = gamma(&z, &p).unwrap() * gamma(&zh, &p).unwrap();
        let two = Complex::with_val(p.bits(), 2);
        let pow = Complex::with_val(p.bits(), (1 - z2.clone()) * two.ln());
        let sqrt_pi = constant(Constant::Pi, &p).sqrt();
        let rhs = pow.exp() * sqrt_pi * gamma(&z2, &p).unwrap();
        assert!(abs_diff(&lhs, &rhs) < p.tolerance());
    }

    #[test]
    fn principal_branch_is_continuous_in_upper_half_plane() {
        // imaginary part of log Γ(-5.5 + i y) for small y approaches that of the limit from above
        let p = Precision::new(30);
        let a = log_gamma(&c(-5.5, 1e-20, &p), &p).unwrap();
        let b = log_gamma(&c(-5.5, 1e-10, &p), &p).unwrap();
        assert!((a.imag().to_f64() - b.imag().to_f64()).abs() < 1e-6);
        // Im log Γ(x + i0) for x in (-6, -5) is -6π by the principal branch
        assert!((a.imag().to_f64() + 6.0 * PI).abs() < 1e-6);
    }

    #[test]
    fn poles() {
        let p = Precision::new(30);
        assert!(matches!(
            log_gamma(&q(-3, 1, &p), &p),
            Err(Error::PoleAtNonpositiveInteger(_))
        ));
        assert!(rgamma(&q(0, 1, &p), &p).is_zero());
    }

    #[test]
    fn pochhammer_cases() {
        let p = Precision::new(30);
        let one = p.complex(&Rational::from(1));
        assert_eq!(pochhammer(&q(1, 2, &p), &q(0, 1, &p), &p).unwrap(), one);
        let x = q(7, 3, &p);
        assert!(abs_diff(&pochhammer(&x, &q(1, 1, &p), &p).unwrap(), &x) < p.tolerance());
        let half = pochhammer(&q(1, 2, &p), &q(1, 2, &p), &p).unwrap();
        let expected = Complex::with_val(p.bits(), constant(Constant::Pi, &p).sqrt().recip());
        assert!(abs_diff(&half, &expected) < p.tolerance());
        // (-3)_2 = 6 through the integer path
        let v = pochhammer(&q(-3, 1, &p), &q(2, 1, &p), &p).unwrap();
        assert_eq!(v, p.complex(&Rational::from(6)));
        assert!(pochhammer(&q(1, 2, &p), &q(-3, 2, &p), &p).is_err());
        assert!(pochhammer(&q(-2, 1, &p), &q(1, 2, &p), &p).unwrap().is_zero());
        assert_eq!(
            pochhammer_rational(&Rational::from((1, 2)), 3),
            Rational::from((15, 8))
        );
    }
}
