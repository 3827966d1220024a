use rug::Rational;

use super::terms;
use crate::barnes::{IntegrandSpec, Scale};
use crate::closed_form::ConstExpr;
use crate::exact::{AffineForm, BiPoly, RationalFunction};
use crate::hyperterm::{HyperTerm, WZPair};
use crate::mpnum::Constant;
use crate::series_ident::{PFQSpec, WeightedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ItemKind {
    ExactWz,
    BarnesIntegral,
    ResidueIdentity,
    SeriesIdentity,
    TSweep,
}

impl ItemKind {
    pub fn name(self) -> &'static str {
        match self {
            ItemKind::ExactWz => "exact-wz",
            ItemKind::BarnesIntegral => "barnes-integral",
            ItemKind::ResidueIdentity => "residue-identity",
            ItemKind::SeriesIdentity => "series-identity",
            ItemKind::TSweep => "t-sweep",
        }
    }
}

#[derive(Clone, Debug)]
pub enum SeriesTerm {
    Pfq(PFQSpec),
    Weighted(WeightedSeries),
}

#[derive(Clone, Debug)]
pub struct CombinationTerm {
    pub coefficient: ConstExpr,
    pub series: SeriesTerm,
}

#[derive(Clone, Debug)]
pub enum Payload {
    ExactWz { pair: WZPair },
    BarnesIntegral { integrand: IntegrandSpec },
    LeftResidues { integrand: IntegrandSpec },
    Combination { terms: Vec<CombinationTerm> },
    TSweep { family: IntegrandSpec, rhs: Scale, samples: Vec<Rational> },
    WeierstrassLimit { family: IntegrandSpec, limit: IntegrandSpec },
    Diagonal { pair: WZPair, j: i64 },
    SumasWz { pair: WZPair, k: i64 },
    SumasDivergent { pair: WZPair, k: i64 },
    XIdentity { x: Rational },
}

#[derive(Clone, Debug)]
pub struct PaperItem {
    pub id: &'static str,
    pub kind: ItemKind,
    pub description: &'static str,
    pub payload: Payload,
    /// Closed-form value; `None` when two computed sides are compared.
    pub expected: Option<ConstExpr>,
}

impl PaperItem {
    pub fn expected_text(&self) -> String {
        match (&self.expected, &self.payload) {
            (Some(e), _) => e.to_string(),
            (None, Payload::ExactWz { .. }) => "F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k)".into(),
            (None, Payload::SumasDivergent { .. }) => "divergent".into(),
            (None, Payload::TSweep { rhs, .. }) => format!("{} * ({})", rhs.constant, rhs.t_term),
            (None, _) => "both sides equal".into(),
        }
    }
}

fn q(a: i64, b: i64) -> Rational {
    Rational::from((a, b))
}

fn qs(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(a, b)| q(a, b)).collect()
}

fn pfq(upper: &[(i64, i64)], lower: &[(i64, i64)], z: Rational, coefficient: ConstExpr) -> CombinationTerm {
    CombinationTerm {
        coefficient,
        series: SeriesTerm::Pfq(PFQSpec::new(qs(upper), qs(lower), z)),
    }
}

fn shifted(v: &[(i64, i64)]) -> Vec<AffineForm> {
    v.iter().map(|&(a, b)| AffineForm::var_n().add_const(&q(a, b))).collect()
}

/// `(a n + b) / n^e`
fn linear_over_power(a: i64, b: i64, e: u32) -> RationalFunction {
    RationalFunction::new(
        BiPoly::var_n().scale(&Rational::from(a)) + BiPoly::constant(b),
        BiPoly::var_n().pow(e),
    )
    .expect("nonzero denominator")
}

fn weighted(coefficient: ConstExpr, series: WeightedSeries) -> CombinationTerm {
    CombinationTerm {
        coefficient,
        series: SeriesTerm::Weighted(series),
    }
}

/// Σ_{n≥1} (16/27)^n (1)_n^3 / ((1/2)_n (1/3)_n (2/3)_n) (11n - 3)/n^3
fn sun_series() -> WeightedSeries {
    WeightedSeries::new(
        shifted(&[(1, 1), (1, 1), (1, 1)]),
        shifted(&[(1, 2), (1, 3), (2, 3)]),
        linear_over_power(11, -3, 3),
        q(16, 27),
    )
    .starting_at(1)
}

/// Σ_{n≥1} 4^{-n} (1)_n^3 / (1/2)_n^3 (3n - 1)/n^3
fn quarter_series() -> WeightedSeries {
    WeightedSeries::new(
        shifted(&[(1, 1), (1, 1), (1, 1)]),
        shifted(&[(1, 2), (1, 2), (1, 2)]),
        linear_over_power(3, -1, 3),
        q(1, 4),
    )
    .starting_at(1)
}

/// Σ_n (a)_n^3 / ((1)_n (b)_n (c)_n) (u n + v) (-1)^n (9/16)^n
fn left_series(a: (i64, i64), b: (i64, i64), c: (i64, i64), u: i64, v: i64) -> WeightedSeries {
    WeightedSeries::new(
        shifted(&[a, a, a]),
        shifted(&[(1, 1), b, c]),
        linear_over_power(u, v, 0),
        q(9, 16),
    )
    .alternating()
}

fn sqrt3_over_pi() -> ConstExpr {
    ConstExpr::div(ConstExpr::sqrt(3), ConstExpr::pi())
}

fn gamma34_pow4() -> ConstExpr {
    ConstExpr::pow(ConstExpr::Const(Constant::Gamma34), 4)
}

fn eight_pi_squared() -> ConstExpr {
    ConstExpr::mul(vec![ConstExpr::int(8), ConstExpr::pow(ConstExpr::pi(), 2)])
}

fn zero_pair() -> WZPair {
    WZPair::new(HyperTerm::constant(0), HyperTerm::constant(0))
}

/// Every reproducible identity, in a fixed order.
pub fn registry() -> Vec<PaperItem> {
    let exact = |id, description, pair| PaperItem {
        id,
        kind: ItemKind::ExactWz,
        description,
        payload: Payload::ExactWz { pair },
        expected: None,
    };
    let barnes = |id, description, integrand, expected| PaperItem {
        id,
        kind: ItemKind::BarnesIntegral,
        description,
        payload: Payload::BarnesIntegral { integrand },
        expected: Some(expected),
    };
    let sweep = |id, description, family, rhs, samples: Vec<Rational>| PaperItem {
        id,
        kind: ItemKind::TSweep,
        description,
        payload: Payload::TSweep { family, rhs, samples },
        expected: None,
    };
    let combination = |id, kind, description, terms, expected| PaperItem {
        id,
        kind,
        description,
        payload: Payload::Combination { terms },
        expected: Some(expected),
    };
    let one = || ConstExpr::int(1);
    vec![
        exact("sec2.pair", "WZ pair behind the (16/9)^n series", terms::sqrt3_pair()),
        barnes(
            "for5s1",
            "Barnes integral with (5s+1) and (4/3)^{2s}",
            terms::sqrt3_integral(),
            sqrt3_over_pi(),
        ),
        PaperItem {
            id: "for5s1.left",
            kind: ItemKind::ResidueIdentity,
            description: "left residue expansion of the (5s+1) integral",
            payload: Payload::LeftResidues {
                integrand: terms::sqrt3_integral(),
            },
            expected: Some(sqrt3_over_pi()),
        },
        combination(
            "sec2.three-series",
            ItemKind::ResidueIdentity,
            "three convergent series from the left residues",
            vec![
                weighted(
                    ConstExpr::div(ConstExpr::sqrt(3), ConstExpr::int(2)),
                    left_series((1, 2), (3, 4), (5, 4), 10, 3),
                ),
                weighted(
                    ConstExpr::neg(ConstExpr::div(
                        ConstExpr::mul(vec![ConstExpr::sqrt(2), ConstExpr::pow(ConstExpr::pi(), 2)]),
                        ConstExpr::mul(vec![ConstExpr::int(8), gamma34_pow4()]),
                    )),
                    left_series((1, 4), (1, 2), (3, 4), 20, 1),
                ),
                weighted(
                    ConstExpr::neg(ConstExpr::div(
                        ConstExpr::mul(vec![ConstExpr::int(3), ConstExpr::sqrt(2), gamma34_pow4()]),
                        ConstExpr::mul(vec![ConstExpr::int(16), ConstExpr::pow(ConstExpr::pi(), 2)]),
                    )),
                    left_series((3, 4), (3, 2), (5, 4), 20, 11),
                ),
            ],
            one(),
        ),
        combination(
            "sec2.3f2",
            ItemKind::SeriesIdentity,
            "3F2 combination at z = -16/9",
            vec![
                pfq(&[(1, 2), (1, 4), (3, 4)], &[(1, 1), (1, 1)], q(-16, 9), one()),
                pfq(&[(3, 2), (5, 4), (7, 4)], &[(2, 1), (2, 1)], q(-16, 9), ConstExpr::rat(-5, 6)),
            ],
            sqrt3_over_pi(),
        ),
        sweep(
            "sec2.family",
            "t-family of the (5s+6t+1) integral",
            terms::sqrt3_family(),
            terms::sqrt3_rhs(),
            vec![q(0, 1), q(1, 20), q(1, 10)],
        ),
        PaperItem {
            id: "sec2.weierstrass",
            kind: ItemKind::TSweep,
            description: "normalised t-family at t = 0, 1, 2, 4 and its t -> infinity limit",
            payload: Payload::WeierstrassLimit {
                family: terms::sqrt3_family().with_scale(terms::sqrt3_t_normalisation()),
                limit: terms::weierstrass_limit(),
            },
            expected: Some(sqrt3_over_pi()),
        },
        barnes(
            "ej1",
            "Barnes integral with (1/2)_s^5 and (10s^2+6s+1)",
            terms::four_over_pi2_integral(),
            ConstExpr::div(ConstExpr::int(4), ConstExpr::pow(ConstExpr::pi(), 2)),
        ),
        barnes(
            "ej2",
            "Barnes integral with (1/2)_s^3 and (3s+1)",
            terms::one_over_pi_integral(),
            ConstExpr::div(ConstExpr::int(1), ConstExpr::pi()),
        ),
        barnes(
            "ej3",
            "Barnes integral with (1/2)_s (1/3)_s (2/3)_s and (15s+4)",
            terms::three_sqrt3_integral(),
            ConstExpr::div(ConstExpr::mul(vec![ConstExpr::int(3), ConstExpr::sqrt(3)]), ConstExpr::pi()),
        ),
        sweep(
            "sec3.family1",
            "first t-family at t = 0",
            terms::four_over_pi2_family(),
            terms::four_over_pi2_rhs(),
            vec![q(0, 1)],
        ),
        sweep(
            "sec3.family2",
            "second t-family at t = 0 and 1/10",
            terms::one_over_pi_family(),
            terms::one_over_pi_rhs(),
            vec![q(0, 1), q(1, 10)],
        ),
        sweep(
            "sec3.family3",
            "third t-family at t = 0",
            terms::three_sqrt3_family(),
            terms::three_sqrt3_rhs(),
            vec![q(0, 1)],
        ),
        combination(
            "sec3.5f4",
            ItemKind::SeriesIdentity,
            "5F4 combination at z = -4",
            vec![
                pfq(&[(1, 2); 5], &[(1, 1); 4], q(-4, 1), one()),
                pfq(&[(3, 2); 5], &[(2, 1); 4], q(-4, 1), ConstExpr::rat(-3, 4)),
                pfq(&[(3, 2); 5], &[(2, 1), (2, 1), (2, 1), (1, 1)], q(-4, 1), ConstExpr::rat(-5, 4)),
            ],
            ConstExpr::div(ConstExpr::int(4), ConstExpr::pow(ConstExpr::pi(), 2)),
        ),
        combination(
            "sec3.3f2.z8",
            ItemKind::SeriesIdentity,
            "3F2 combination at z = -8",
            vec![
                pfq(&[(1, 2); 3], &[(1, 1); 2], q(-8, 1), one()),
                pfq(&[(3, 2); 3], &[(2, 1); 2], q(-8, 1), ConstExpr::int(-3)),
            ],
            ConstExpr::div(ConstExpr::int(1), ConstExpr::pi()),
        ),
        combination(
            "sec3.3f2.z4",
            ItemKind::SeriesIdentity,
            "3F2 combination at z = -4",
            vec![
                pfq(&[(1, 2), (1, 3), (2, 3)], &[(1, 1); 2], q(-4, 1), ConstExpr::int(4)),
                pfq(&[(3, 2), (4, 3), (5, 3)], &[(2, 1); 2], q(-4, 1), ConstExpr::rat(-20, 3)),
            ],
            ConstExpr::div(ConstExpr::mul(vec![ConstExpr::int(3), ConstExpr::sqrt(3)]), ConstExpr::pi()),
        ),
        exact("sec4.ex1.pair", "first duality example pair", terms::quarter_pair()),
        exact("sec4.ex1.dual", "dual of the first example pair", terms::quarter_dual_pair()),
        exact("sec4.ex2.pair", "second duality example pair", terms::sixteen27_pair()),
        PaperItem {
            id: "sec4.diagonal.j1",
            kind: ItemKind::SeriesIdentity,
            description: "diagonal summation of the dual pair from j = 1",
            payload: Payload::Diagonal {
                pair: terms::quarter_dual_pair(),
                j: 1,
            },
            expected: None,
        },
        PaperItem {
            id: "sec4.diagonal.j2",
            kind: ItemKind::SeriesIdentity,
            description: "diagonal summation of the dual pair from j = 2",
            payload: Payload::Diagonal {
                pair: terms::quarter_dual_pair(),
                j: 2,
            },
            expected: None,
        },
        combination(
            "identidad",
            ItemKind::SeriesIdentity,
            "(16/27)^n series minus 16 times the 4^-n series",
            vec![weighted(one(), sun_series()), weighted(ConstExpr::int(-16), quarter_series())],
            ConstExpr::int(0),
        ),
        combination(
            "identidad.rhs",
            ItemKind::SeriesIdentity,
            "16 times the 4^-n series",
            vec![weighted(ConstExpr::int(16), quarter_series())],
            eight_pi_squared(),
        ),
        combination(
            "zhi",
            ItemKind::SeriesIdentity,
            "(16/27)^n series with (11n-3)/n^3",
            vec![weighted(one(), sun_series())],
            eight_pi_squared(),
        ),
        PaperItem {
            id: "sec4.ex2.x1",
            kind: ItemKind::SeriesIdentity,
            description: "parametric identity at x = 1",
            payload: Payload::XIdentity { x: q(1, 1) },
            expected: Some(ConstExpr::div(
                ConstExpr::mul(vec![ConstExpr::int(3), ConstExpr::pow(ConstExpr::pi(), 2)]),
                ConstExpr::int(2),
            )),
        },
        PaperItem {
            id: "sec4.ex2.x3/4",
            kind: ItemKind::SeriesIdentity,
            description: "parametric identity at x = 3/4",
            payload: Payload::XIdentity { x: q(3, 4) },
            expected: None,
        },
        PaperItem {
            id: "sec2.eq4",
            kind: ItemKind::SeriesIdentity,
            description: "row-sum formula on the (16/9)^n pair diverges",
            payload: Payload::SumasDivergent {
                pair: terms::sqrt3_pair(),
                k: 0,
            },
            expected: None,
        },
        PaperItem {
            id: "sec4.eq4",
            kind: ItemKind::SeriesIdentity,
            description: "row-sum formula on the dual pair at k = 1",
            payload: Payload::SumasWz {
                pair: terms::quarter_dual_pair(),
                k: 1,
            },
            expected: None,
        },
        PaperItem {
            id: "zero.eq4",
            kind: ItemKind::SeriesIdentity,
            description: "row-sum formula on the zero pair",
            payload: Payload::SumasWz { pair: zero_pair(), k: 0 },
            expected: None,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_unique_and_enough() {
        let r = registry();
        assert!(r.len() >= 14);
        let ids: HashSet<_> = r.iter().map(|i| i.id).collect();
        assert_eq!(ids.len(), r.len());
    }

    #[test]
    fn required_entries() {
        let r = registry();
        let get = |id: &str| r.iter().find(|i| i.id == id).unwrap();
        assert_eq!(get("for5s1").expected.as_ref().unwrap().to_string(), "sqrt(3)/pi");
        assert_eq!(get("sec2.three-series").expected, Some(ConstExpr::int(1)));
        assert_eq!(get("sec4.ex1.pair").kind, ItemKind::ExactWz);
    }
}
