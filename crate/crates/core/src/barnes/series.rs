use rug::ops::Pow;
use rug::{Complex, Rational};

use super::integrand::{IntegrandSpec, Resolved};
use crate::error::{Error, Result};
use crate::mpnum::{is_nonpositive_integer, log_gamma, sum_terms, Precision};

/// `Σ_n P(n) Π (a)_n / Π (b)_n z^n / n!`, the sum of the residues at `s = 0, 1, 2, ...`.
pub fn series_right(i: &IntegrandSpec, prec: &Precision) -> Result<Complex> {
    let r = i.resolve(prec)?;
    series_right_resolved(&r, prec)
}

pub(crate) fn series_right_resolved(r: &Resolved, prec: &Precision) -> Result<Complex> {
    if Rational::from(r.z.abs_ref()) >= 1 {
        return Err(Error::DomainError(format!("|z| = |{}| is not below 1", r.z)));
    }
    let wp = prec.bits() + 16;
    if r.z == 0 {
        let p0 = Complex::with_val(wp, r.prefactor_at_rational(&Rational::new()));
        return Ok(Complex::with_val(prec.bits(), p0 * &r.scale));
    }
    let mut coeff = Complex::with_val(wp, &r.scale);
    let sum = sum_terms(
        |m| {
            let n = Rational::from(m as u32);
            if m > 0 {
                let k = Rational::from(&n - 1u32);
                let mut ratio = Rational::from(&r.z / &n);
                for (a, mult) in &r.num {
                    ratio *= Rational::from(a + &k).pow(*mult);
                }
                for (b, mult) in &r.den {
                    ratio /= Rational::from(b + &k).pow(*mult);
                }
                coeff *= ratio;
            }
            Ok(Complex::with_val(wp, &coeff * r.prefactor_at_rational(&n)))
        },
        prec,
        "right series",
    )?
    .value;
    Ok(Complex::with_val(prec.bits(), sum))
}

/// One left pole family `s = -a - m`, `m ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueFamily {
    pub pole_base: Rational,
    pub prefactor: Complex,
    pub series_value: Complex,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidueExpansion {
    pub families: Vec<ResidueFamily>,
    pub total: Complex,
}

/// Close the contour to the left and sum the residues at every numerator
/// pole family. Family `a` contributes `Q_0 Σ_m (Q_m/Q_0) P(-a-m)` where `Q_m`
/// is the residue of the Gamma part at `s = -a-m`.
pub fn residue_series_left(i: &IntegrandSpec, prec: &Precision) -> Result<ResidueExpansion> {
    let r = i.resolve(prec)?;
    if Rational::from(r.z.abs_ref()) <= 1 {
        return Err(Error::DomainError(format!("|z| = |{}| is not above 1", r.z)));
    }
    for (idx, (a, m)) in r.num.iter().enumerate() {
        if *m > 1 {
            return Err(Error::CollidingPoles(a.to_string(), a.to_string()));
        }
        for (b, _) in &r.num[idx + 1..] {
            if Rational::from(a - b).denom() == &1 {
                return Err(Error::CollidingPoles(a.to_string(), b.to_string()));
            }
        }
    }
    let wp = prec.bits() + 16;
    let neg_z = Rational::from(-&r.z);
    let log_neg_z = Complex::with_val(wp, &neg_z).ln();
    let mut families = Vec::new();
    let mut total = Complex::new(wp);
    for (a, _) in &r.num {
        // Q_0 = scale Π_{i≠j} Γ(a_i - a)/Γ(a_i) Π_den Γ(b)/Γ(b - a) (-z)^{-a}
        let mut lg = Complex::with_val(wp, &log_neg_z * Rational::from(-a));
        let mut vanishes = false;
        for (ai, mult) in r.num.iter().filter(|(x, _)| x != a) {
            lg += log_gamma(&Complex::with_val(wp, Rational::from(ai - a)), prec)? * *mult;
            lg -= log_gamma(&Complex::with_val(wp, ai), prec)? * *mult;
        }
        for (b, mult) in &r.den {
            let diff = Complex::with_val(wp, Rational::from(b - a));
            if is_nonpositive_integer(&diff) {
                vanishes = true;
                break;
            }
            lg += log_gamma(&Complex::with_val(wp, b), prec)? * *mult;
            lg -= log_gamma(&diff, prec)? * *mult;
        }
        let q0 = if vanishes {
            Complex::new(wp)
        } else {
            lg.exp() * &r.scale
        };
        let mut ratio_prod = Rational::from(1);
        let series = sum_terms(
            |m| {
                let mm = Rational::from(m as u32);
                if m > 0 {
                    let k = Rational::from(&mm - 1u32); // step k -> k+1
                    let mut ratio = -(Rational::from(a + &k)) / &mm ;
                    for (ai, mult) in r.num.iter().filter(|(x, _)| x != a) {
                        ratio /= (Rational::from(ai - a) - &mm).pow(*mult);
                    }
                    for (b, mult) in &r.den {
                        ratio *= (Rational::from(b - a) - &mm).pow(*mult);
                    }
                    ratio /= &neg_z;
                    ratio_prod *= ratio;
                }
                let s = -(Rational::from(a + &mm)) ;
                Ok(Complex::with_val(wp, &ratio_prod * r.prefactor_at_rational(&s) ))
            },
            prec,
            "left residue series",
        )?
        .value;
        total += Complex::with_val(wp, &q0 * &series);
        families.push(ResidueFamily {
            pole_base: a.clone(),
            prefactor: Complex::with_val(prec.bits(), q0),
            series_value: Complex::with_val(prec.bits(), series),
        });
    }
    Ok(ResidueExpansion {
        families,
        total: Complex::with_val(prec.bits(), total),
    })
}
