//! Arbitrary-precision complex arithmetic: log-Gamma, Gamma, Pochhammer
//! symbols and named constants.

mod constants;
mod gamma;
mod summation;

pub use constants::{constant, Constant};
pub use gamma::{gamma, log_gamma, pochhammer, pochhammer_rational, rgamma};
pub use summation::{sum_terms, Summation};

use rug::float::Round;
use rug::ops::Pow;
use rug::{Complex, Float, Rational};

/// Target accuracy in decimal digits plus guard digits for intermediate work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Precision {
    pub digits: u32,
    pub guard: u32,
}

impl Precision {
    pub const DEFAULT_GUARD: u32 = 20;

    /// Panics if `digits < 10`.
    pub fn new(digits: u32) -> Self {
        Precision::with_guard(digits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Self {
        assert!(digits >= 10, "precision must be at least 10 digits");
        assert!(guard >= 10, "guard must be at least 10 digits");
        Precision { digits, guard }
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Binary precision of the working representation.
    pub fn bits(&self) -> u32 {
        (f64::from(self.working_digits()) * std::f64::consts::LOG2_10).ceil() as u32 + 8
    }

    /// `10^-digits`.
    pub fn tolerance(&self) -> Float {
        pow10(-i64::from(self.digits), self.bits())
    }

    /// The same target with `extra` more digits.
    pub fn raised(&self, extra: u32) -> Precision {
        Precision {
            digits: self.digits + extra,
            guard: self.guard,
        }
    }

    pub fn zero(&self) -> Complex {
        Complex::new(self.bits())
    }

    pub fn complex(&self, re: &Rational) -> Complex {
        Complex::with_val(self.bits(), re)
    }

    pub fn float(&self, x: &Rational) -> Float {
        Float::with_val(self.bits(), x)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::new(30)
    }
}

pub fn pow10(e: i64, bits: u32) -> Float {
    let ten = Float::with_val(bits, 10);
    Float::with_val(bits, ten.pow(e as i32))
}

/// `|a - b|` as a float.
pub fn abs_diff(a: &Complex, b: &Complex) -> Float {
    let d = Complex::with_val(a.prec().0.max(b.prec().0), a - b);
    d.abs().into_real_imag().0
}

pub fn abs(a: &Complex) -> Float {
    Complex::with_val(a.prec(), a.abs_ref()).into_real_imag().0
}

/// Decimal rendering of a real value with `digits` significant digits.
pub fn format_float(x: &Float, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix_round(10, Some(digits as usize), Round::Nearest)
}

/// Is `z` a real non-positive integer?
pub fn is_nonpositive_integer(z: &Complex) -> bool {
    z.imag().is_zero() && z.real().is_integer() && *z.real() <= 0
}
