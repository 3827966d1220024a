//! Gamma-quotient reduction: rewrite a formal product Π Γ(M_i)^{f_i} as a
//! rational function times whatever Gamma factors cannot be cancelled.

use std::collections::BTreeMap;

use rug::Rational;

use crate::exact::{AffineForm, BiPoly, RationalFunction};

pub(crate) struct Reduced {
    pub rat: RationalFunction,
    pub leftover: BTreeMap<AffineForm, i32>,
}

impl Reduced {
    pub fn describe_leftover(&self) -> String {
        self.leftover
            .iter()
            .map(|(a, e)| format!("gamma({a})^{e}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn frac(c: &Rational) -> Rational {
    c - Rational::from(c.floor_ref())
}

/// Arguments are grouped by (coefficient of n, coefficient of k, constant mod 1);
/// within a group all are written as Γ(base + m) with the smallest constant as
/// base, using Γ(base + m) = base (base+1) ... (base+m-1) Γ(base).
pub(crate) fn reduce<I>(factors: I) -> Reduced
where
    I: IntoIterator<Item = (AffineForm, i32)>,
{
    let mut classes: BTreeMap<(Rational, Rational, Rational), Vec<(AffineForm, i32)>> =
        BTreeMap::new();
    for (a, e) in factors {
        if e == 0 {
            continue;
        }
        let key = (a.n.clone(), a.k.clone(), frac(&a.c));
        classes.entry(key).or_default().push((a, e));
    }
    let mut num = BiPoly::one();
    let mut den = BiPoly::one();
    let mut leftover = BTreeMap::new();
    for (_, members) in classes {
        let base = members
            .iter()
            .map(|(a, _)| a.c.clone())
            .min()
            .expect("classes are non-empty");
        let base_form = AffineForm {
            c: base.clone(),
            ..members[0].0.clone()
        };
        let mut net = 0;
        for (a, e) in &members {
            net += e;
            let m = Rational::from(&a.c - &base);
            let steps = m.numer().to_u32().expect("integer step");
            let mut prod = BiPoly::one();
            for j in 0..steps {
                prod = &prod * &base_form.add_const(&Rational::from(j)).to_poly();
            }
            let p = prod.pow(e.unsigned_abs());
            if *e > 0 {
                num = &num * &p;
            } else {
                den = &den * &p;
            }
        }
        if net != 0 {
            leftover.insert(base_form, net);
        }
    }
    Reduced {
        rat: RationalFunction::new(num, den).expect("product of nonzero polynomials"),
        leftover,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_shift_gives_linear_factor() {
        // Γ(n + 3/2) / Γ(n + 1/2) = n + 1/2
        let r = reduce([
            (AffineForm::new(Rational::from((3, 2)), 1, 0), 1),
            (AffineForm::new(Rational::from((1, 2)), 1, 0), -1),
        ]);
        assert!(r.leftover.is_empty());
        assert_eq!(
            r.rat,
            RationalFunction::from_poly(AffineForm::new(Rational::from((1, 2)), 1, 0).to_poly())
        );
    }

    #[test]
    fn half_shift_is_left_over() {
        let r = reduce([
            (AffineForm::new(Rational::from((1, 3)), 0, Rational::from((1, 2))), 1),
            (AffineForm::new(Rational::from((1, 3)), 0, Rational::from((1, 2))).add_const(&Rational::from((1, 2))), -1),
        ]);
        assert_eq!(r.leftover.len(), 2);
    }
}
