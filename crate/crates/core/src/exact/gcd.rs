//! Bivariate polynomial gcd over the rationals by the primitive polynomial
//! remainder sequence in `Q[k][n]`.

use rug::Rational;

use super::poly::{BiPoly, Monomial};
use super::upoly::UPoly;

/// `p` viewed as a polynomial in `n` whose coefficients are polynomials in `k`.
type RecPoly = Vec<UPoly>;

fn to_rec(p: &BiPoly) -> RecPoly {
    let mut out = vec![Vec::new(); p.degree_n() as usize + 1];
    for (m, c) in p.terms() {
        let slot: &mut Vec<Rational> = &mut out[m.n as usize];
        if slot.len() <= m.k as usize {
            slot.resize(m.k as usize + 1, Rational::new());
        }
        slot[m.k as usize] = c.clone();
    }
    let mut rec: RecPoly = out.into_iter().map(UPoly::from_coeffs).collect();
    trim(&mut rec);
    rec
}

fn from_rec(r: &RecPoly) -> BiPoly {
    BiPoly::from_terms(r.iter().enumerate().flat_map(|(i, u)| {
        u.coeffs()
            .iter()
            .enumerate()
            .map(move |(j, c)| (Monomial::new(i as u32, j as u32), c.clone()))
    }))
}

fn trim(r: &mut RecPoly) {
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
}

fn content(r: &RecPoly) -> UPoly {
    r.iter().fold(UPoly::zero(), |g, c| g.gcd(c))
}

fn divide_by(r: &RecPoly, c: &UPoly) -> RecPoly {
    r.iter()
        .map(|x| {
            let (q, rem) = x.div_rem(c);
            debug_assert!(rem.is_zero());
            q
        })
        .collect()
}

fn primitive(r: &RecPoly) -> RecPoly {
    if r.is_empty() {
        return Vec::new();
    }
    divide_by(r, &content(r))
}

/// Pseudo-remainder of `a` by `b` with respect to `n`.
fn prem(a: &RecPoly, b: &RecPoly) -> RecPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: RecPoly = r.iter().map(|c| c.mul(lb)).collect();
        for (i, bc) in b.iter().enumerate() {
            next[shift + i] = next[shift + i].sub(&bc.mul(&lr));
        }
        trim(&mut next);
        debug_assert!(next.len() <= dr);
        r = next;
    }
    r
}

/// Greatest common divisor, normalised so its leading coefficient is 1.
pub fn gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let ra = to_rec(a);
    let rb = to_rec(b);
    let cont = content(&ra).gcd(&content(&rb));
    let (mut x, mut y) = (primitive(&ra), primitive(&rb));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = prem(&x, &y);
        x = y;
        y = primitive(&r);
        if y.is_empty() {
            break;
        }
    }
    // y is either zero (x is the gcd) or a nonzero constant in n (gcd is 1)
    let pp = if y.is_empty() { x } else { vec![UPoly::one()] };
    let g: RecPoly = pp.iter().map(|c| c.mul(&cont)).collect();
    from_rec(&g).monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(c: i64, a: i64, b: i64) -> BiPoly {
        BiPoly::from_terms([
            (Monomial::ONE, Rational::from(c)),
            (Monomial::new(1, 0), Rational::from(a)),
            (Monomial::new(0, 1), Rational::from(b)),
        ])
    }

    #[test]
    fn common_linear_factor() {
        let f = lin(1, 5, 6);
        let a = &f * &lin(-1, 1, 2);
        let b = &f * &lin(3, 0, 1).pow(2);
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn coprime_gives_one() {
        assert_eq!(gcd(&lin(1, 1, 0), &lin(0, 1, 1)), BiPoly::one());
    }

    #[test]
    fn content_in_k() {
        // (k+1) n and (k+1)(k-1)
        let a = &lin(1, 0, 1) * &lin(0, 1, 0);
        let b = &lin(1, 0, 1) * &lin(-1, 0, 1);
        assert_eq!(gcd(&a, &b), lin(1, 0, 1));
    }

    #[test]
    fn difference_of_squares() {
        let n2 = &lin(0, 1, 0) * &lin(0, 1, 0);
        let k2 = &lin(0, 0, 1) * &lin(0, 0, 1);
        let a = &n2 - &k2;
        assert_eq!(gcd(&a, &lin(0, 1, -1)), lin(0, 1, -1));
    }
}
