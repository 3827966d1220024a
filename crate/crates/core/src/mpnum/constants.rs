use rug::float::Constant as MpfrConstant;
use rug::{Complex, Float, Rational};

use super::{gamma, Precision};

/// Named constants appearing in closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constant {
    Pi,
    Sqrt2,
    Sqrt3,
    /// Γ(3/4)
    Gamma34,
}

impl Constant {
    pub fn name(self) -> &'static str {
        match self {
            Constant::Pi => "pi",
            Constant::Sqrt2 => "sqrt2",
            Constant::Sqrt3 => "sqrt3",
            Constant::Gamma34 => "gamma_3_4",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            Constant::Pi,
            Constant::Sqrt2,
            Constant::Sqrt3,
            Constant::Gamma34,
        ]
        .into_iter()
        .find(|c| c.name() == name)
    }
}

pub fn constant(c: Constant, prec: &Precision) -> Float {
    let bits = prec.bits();
    match c {
        Constant::Pi => Float::with_val(bits, MpfrConstant::Pi),
        Constant::Sqrt2 => Float::with_val(bits, 2).sqrt(),
        Constant::Sqrt3 => Float::with_val(bits, 3).sqrt(),
        Constant::Gamma34 => {
            let z = Complex::with_val(bits, Rational::from((3, 4)));
            gamma(&z, prec)
                .expect("3/4 is not a pole")
                .into_real_imag()
                .0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let p = Precision::new(30);
        let pi = constant(Constant::Pi, &p);
        assert!(pi
            .to_string_radix(10, Some(30))
            .starts_with("3.14159265358979323846264338328"));
    }

    #[test]
    fn gamma_quarter_reflection() {
        let p = Precision::new(40);
        let g34 = constant(Constant::Gamma34, &p);
        let g14 = gamma(&Complex::with_val(p.bits(), Rational::from((1, 4))), &p)
            .unwrap()
            .into_real_imag()
            .0;
        let lhs = g34 * g14;
        let rhs = constant(Constant::Pi, &p) * constant(Constant::Sqrt2, &p);
        let diff = Float::with_val(p.bits(), &lhs - &rhs).abs();
        assert!(diff < p.tolerance());
    }

    #[test]
    fn names_round_trip() {
        for c in [Constant::Pi, Constant::Sqrt2, Constant::Sqrt3, Constant::Gamma34] {
            assert_eq!(Constant::from_name(c.name()), Some(c));
        }
    }
}
