//! Registry of the reproducible identities: every pair, integrand and series
//! with its expected value, and a uniform runner producing [`Report`]s.

mod acceptance;
mod registry;
pub mod terms;

pub use acceptance::{run_criteria, Criterion};
pub use registry::{registry, CombinationTerm, ItemKind, PaperItem, Payload, SeriesTerm};

use std::fmt;
use std::time::Instant;

use rug::{Complex, Float};

use crate::barnes::{
    choose_contour, eval_integral, residue_series_left, t_independence_check, weierstrass_limit_check,
};
use crate::error::{Error, Result};
use crate::hyperterm::wz_verify;
use crate::mpnum::{abs_diff, pow10, Precision};
use crate::series_ident::{
    example2_identity, pfq, sumas_wz_check, weighted_series_eval, zeilberger_diagonal_check,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub id: String,
    pub status: Status,
    pub computed: Complex,
    pub expected_value: Complex,
    /// Human-readable form of the expected value.
    pub expected: String,
    pub abs_diff: Float,
    pub runtime_ms: u128,
    pub digits: u32,
    pub detail: String,
}

/// `10^{-(digits-5)}`.
pub fn pass_tolerance(prec: &Precision) -> Float {
    pow10(-(i64::from(prec.digits) - 5), prec.bits())
}

/// Run one registered item. Unknown ids are an error; numeric failures are
/// reported with status `error`.
pub fn reproduce(id: &str, prec: &Precision) -> Result<Report> {
    let item = registry()
        .into_iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))?;
    Ok(run_item(&item, prec))
}

pub fn reproduce_all(prec: &Precision) -> Vec<Report> {
    registry().iter().map(|i| run_item(i, prec)).collect()
}

struct Outcome {
    computed: Complex,
    expected_value: Complex,
    abs_diff: Float,
    detail: String,
    /// A failure the numbers alone do not show.
    forced_fail: bool,
}

impl Outcome {
    fn compare(computed: Complex, expected_value: Complex, detail: String) -> Self {
        Outcome {
            abs_diff: abs_diff(&computed, &expected_value),
            computed,
            expected_value,
            detail,
            forced_fail: false,
        }
    }
}

pub fn run_item(item: &PaperItem, prec: &Precision) -> Report {
    let start = Instant::now();
    let outcome = evaluate(item, prec);
    let runtime_ms = start.elapsed().as_millis();
    let tol = pass_tolerance(prec);
    match outcome {
        Ok(o) => Report {
            id: item.id.to_string(),
            status: if o.abs_diff < tol && !o.forced_fail {
                Status::Pass
            } else {
                Status::Fail
            },
            computed: o.computed,
            expected_value: o.expected_value,
            expected: item.expected_text(),
            abs_diff: o.abs_diff,
            runtime_ms,
            digits: prec.digits,
            detail: o.detail,
        },
        Err(e) => Report {
            id: item.id.to_string(),
            status: Status::Error,
            computed: prec.zero(),
            expected_value: prec.zero(),
            expected: item.expected_text(),
            abs_diff: Float::with_val(prec.bits(), rug::float::Special::Infinity),
            runtime_ms,
            digits: prec.digits,
            detail: e.to_string(),
        },
    }
}

fn evaluate(item: &PaperItem, prec: &Precision) -> Result<Outcome> {
    let expected = |prec: &Precision| -> Result<Complex> {
        match &item.expected {
            Some(e) => e.eval(prec),
            None => Ok(prec.zero()),
        }
    };
    match &item.payload {
        Payload::ExactWz { pair } => {
            let r = wz_verify(pair)?;
            let mut o = Outcome::compare(prec.zero(), prec.zero(), format!("residual {}", r.residual));
            if !r.wz_holds {
                o.computed = Complex::with_val(prec.bits(), 1);
                o.abs_diff = Float::with_val(prec.bits(), 1);
            }
            Ok(o)
        }
        Payload::BarnesIntegral { integrand } => {
            let c = choose_contour(integrand, prec)?;
            let q = eval_integral(integrand, &c, prec)?;
            let mut o = Outcome::compare(
                q.value,
                expected(prec)?,
                format!("contour Re s = {}, {} nodes", c.re_offset, q.nodes_used),
            );
            o.forced_fail = !q.converged;
            Ok(o)
        }
        Payload::LeftResidues { integrand } => {
            let e = residue_series_left(integrand, prec)?;
            let bases: Vec<String> = e.families.iter().map(|f| f.pole_base.to_string()).collect();
            Ok(Outcome::compare(
                e.total,
                expected(prec)?,
                format!("pole families at -({}) - m", bases.join(", ")),
            ))
        }
        Payload::Combination { terms } => {
            let mut acc = prec.zero();
            for t in terms {
                let v = match &t.series {
                    SeriesTerm::Pfq(s) => pfq(s, prec)?,
                    SeriesTerm::Weighted(w) => weighted_series_eval(w, prec)?,
                };
                acc += v * t.coefficient.eval(prec)?;
            }
            Ok(Outcome::compare(acc, expected(prec)?, format!("{} series", terms.len())))
        }
        Payload::TSweep { family, rhs, samples } => {
            let r = t_independence_check(family, rhs, samples, prec)?;
            let last = r.samples.last().expect("at least one sample");
            let labels: Vec<&str> = r.samples.iter().map(|s| s.label.as_str()).collect();
            Ok(Outcome {
                computed: last.computed.clone(),
                expected_value: last.expected.clone(),
                abs_diff: r.max_deviation,
                detail: format!("max deviation over {}", labels.join(", ")),
                forced_fail: false,
            })
        }
        Payload::WeierstrassLimit { family, limit } => {
            let target = item.expected.as_ref().expect("closed form");
            let r = weierstrass_limit_check(family, limit, target, prec)?;
            let last = r.samples.last().expect("limit sample");
            Ok(Outcome {
                computed: last.computed.clone(),
                expected_value: last.expected.clone(),
                abs_diff: r.max_deviation,
                detail: "max deviation over t = 0, 1, 2, 4 and the limit integrand".into(),
                forced_fail: false,
            })
        }
        Payload::Diagonal { pair, j } => {
            let r = zeilberger_diagonal_check(pair, *j, prec)?;
            Ok(Outcome::compare(r.lhs, r.rhs, r.notes.join("; ")))
        }
        Payload::SumasWz { pair, k } => {
            let r = sumas_wz_check(pair, *k, prec)?;
            Ok(Outcome::compare(r.lhs, r.rhs, r.notes.join("; ")))
        }
        Payload::SumasDivergent { pair, k } => match sumas_wz_check(pair, *k, prec) {
            Err(Error::Divergent(msg)) => Ok(Outcome::compare(prec.zero(), prec.zero(), format!("divergent: {msg}"))),
            Err(e) => Err(e),
            Ok(r) => {
                let mut o = Outcome::compare(r.lhs, r.rhs, "expected divergence, got convergent sums".into());
                o.forced_fail = true;
                Ok(o)
            }
        },
        Payload::XIdentity { x } => {
            let r = example2_identity(x, prec)?;
            let mut o = Outcome::compare(r.lhs.clone(), r.rhs.clone(), r.notes.join("; "));
            if item.expected.is_some() {
                // both sides against the closed form
                let e = expected(prec)?;
                let d = abs_diff(&r.lhs, &e).max(&abs_diff(&r.rhs, &e));
                o.abs_diff = d;
                o.expected_value = e;
            }
            Ok(o)
        }
    }
}
