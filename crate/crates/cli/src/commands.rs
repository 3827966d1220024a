use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rug::{Complex, Float, Rational};
use wzb_core::barnes::{choose_contour, eval_integral, residue_series_left};
use wzb_core::closed_form::ConstExpr;
use wzb_core::hyperterm::{dual, dual_pair, numeric_eval_at, wz_verify, WZPair};
use wzb_core::mpnum::{abs_diff, format_float, Precision};
use wzb_core::paperlib::{
    pass_tolerance, registry, reproduce, reproduce_all, run_criteria, Report, Status,
};
use wzb_core::series_ident::{sumas_wz_check, weighted_series_eval, zeilberger_diagonal_check};
use wzb_core::Error;

use crate::dsl::{self, LowerOptions, LoweredFile, TermFile};
use crate::output::{complex_text, report_json, report_text};
use crate::{CliError, Command, Format, NumericArgs};

type Out<'a> = &'a mut dyn Write;

fn io(e: std::io::Error) -> CliError {
    CliError::Usage(format!("cannot write output: {e}"))
}

fn rational_arg(flag: &str, s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| CliError::Usage(format!("--{flag}: `{s}` is not a rational number")))
}

fn read_file(path: &Path) -> Result<TermFile, CliError> {
    let src = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    dsl::parse(&src).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path, opts: &LowerOptions) -> Result<LoweredFile, CliError> {
    let file = read_file(path)?;
    dsl::lower(&file, opts).map_err(|source| CliError::Lower {
        path: path.to_path_buf(),
        source,
    })
}

fn options(t: &Option<String>, x: &Option<String>) -> Result<LowerOptions, CliError> {
    Ok(LowerOptions {
        t: t.as_deref().map(|s| rational_arg("t", s)).transpose()?,
        x: x.as_deref().map(|s| rational_arg("x", s)).transpose()?,
    })
}

fn none_found(path: &Path, what: &str) -> CliError {
    CliError::Usage(format!("{}: no {what} definitions", path.display()))
}

/// What a file-level check produced before it is turned into a report.
struct Evaluated {
    computed: Complex,
    expected: Option<(String, Complex)>,
    detail: String,
    converged: bool,
}

fn to_report(id: &str, prec: &Precision, start: Instant, r: wzb_core::Result<Evaluated>) -> Report {
    let runtime_ms = start.elapsed().as_millis();
    let nan = Float::with_val(prec.bits(), rug::float::Special::Nan);
    match r {
        Ok(e) => {
            let (expected, expected_value, diff) = match e.expected {
                Some((text, v)) => {
                    let d = abs_diff(&e.computed, &v);
                    (text, v, d)
                }
                None => ("(none)".to_string(), prec.zero(), nan),
            };
            let pass = e.converged && (diff.is_nan() || diff < pass_tolerance(prec));
            Report {
                id: id.to_string(),
                status: if pass { Status::Pass } else { Status::Fail },
                computed: e.computed,
                expected_value,
                expected,
                abs_diff: diff,
                runtime_ms,
                digits: prec.digits,
                detail: e.detail,
            }
        }
        Err(err) => Report {
            id: id.to_string(),
            status: Status::Error,
            computed: prec.zero(),
            expected_value: prec.zero(),
            expected: String::new(),
            abs_diff: nan,
            runtime_ms,
            digits: prec.digits,
            detail: err.to_string(),
        },
    }
}

fn closed_form(e: &Option<ConstExpr>, prec: &Precision) -> wzb_core::Result<Option<(String, Complex)>> {
    e.as_ref().map(|c| Ok((c.to_string(), c.eval(prec)?))).transpose()
}

fn emit(reports: &[Report], format: Format, out: Out) -> Result<bool, CliError> {
    match format {
        Format::Text => {
            for r in reports {
                write!(out, "{}", report_text(r)).map_err(io)?;
            }
        }
        Format::Json => {
            let v: Vec<_> = reports.iter().map(report_json).collect();
            let text = serde_json::to_string_pretty(&v).expect("JSON values serialise");
            writeln!(out, "{text}").map_err(io)?;
        }
    }
    Ok(reports.iter().all(|r| r.status == Status::Pass))
}

/// Run a parsed command; `Ok(true)` means every check passed.
pub fn execute(cmd: &Command, out: Out) -> Result<bool, CliError> {
    match cmd {
        Command::Reproduce { all, item, numeric } => {
            let prec = Precision::new(numeric.digits);
            let reports = match (all, item) {
                (_, Some(id)) => vec![reproduce(id, &prec).map_err(|e| match e {
                    Error::UnknownId(id) => CliError::Usage(format!("unknown item `{id}` (see `wzb list`)")),
                    e => e.into(),
                })?],
                (true, None) => reproduce_all(&prec),
                (false, None) => return Err(CliError::Usage("pass --all or --item ID".into())),
            };
            emit(&reports, numeric.format, out)
        }
        Command::List => {
            for item in registry() {
                writeln!(out, "{:<20} {:<17} {} [{}]", item.id, item.kind.name(), item.description, item.expected_text())
                    .map_err(io)?;
            }
            Ok(true)
        }
        Command::Verify { file } => verify(file, out),
        Command::Barnes { file, t, numeric } => barnes(file, t, numeric, out),
        Command::Residues { file, t, numeric } => residues(file, t, numeric, out),
        Command::Series { file, x, numeric } => series(file, x, numeric, out),
        Command::Diagonal { file, j, numeric } => pair_checks(file, numeric, out, |p, prec| {
            zeilberger_diagonal_check(p, *j, prec)
        }),
        Command::Rowsum { file, k, numeric } => pair_checks(file, numeric, out, |p, prec| {
            sumas_wz_check(p, *k, prec)
        }),
        Command::Dual { file } => duals(file, out),
        Command::Eval { file, n, k, t, x, numeric } => {
            let lowered = load(file, &options(t, x)?)?;
            if lowered.terms.is_empty() && lowered.pairs.is_empty() {
                return Err(none_found(file, "term or pair"));
            }
            let n = rational_arg("n", n)?;
            let k = rational_arg("k", k)?;
            let prec = Precision::new(numeric.digits);
            let mut reports = Vec::new();
            let mut targets: Vec<(String, ConstExpr, &wzb_core::hyperterm::HyperTerm)> = Vec::new();
            for t in &lowered.terms {
                targets.push((t.name.clone(), t.constant.clone(), &t.term));
            }
            for (name, p) in &lowered.pairs {
                targets.push((format!("{name}.F"), ConstExpr::int(1), &p.f));
                targets.push((format!("{name}.G"), ConstExpr::int(1), &p.g));
            }
            for (name, c, term) in targets {
                let start = Instant::now();
                let r = (|| {
                    let v = numeric_eval_at(term, &n, &k, &prec)? * c.eval(&prec)?;
                    Ok(Evaluated {
                        computed: v,
                        expected: None,
                        detail: format!("at n = {n}, k = {k}"),
                        converged: true,
                    })
                })();
                reports.push(to_report(&name, &prec, start, r));
            }
            emit(&reports, numeric.format, out)
        }
        Command::Fmt { file } => {
            let parsed = read_file(file)?;
            write!(out, "{}", dsl::print_file(&parsed)).map_err(io)?;
            Ok(true)
        }
        Command::Acceptance { digits, high_digits } => {
            let criteria = run_criteria(*digits, *high_digits);
            for c in &criteria {
                writeln!(out, "{c}").map_err(io)?;
                for d in &c.details {
                    writeln!(out, "    {d}").map_err(io)?;
                }
            }
            Ok(criteria.iter().all(|c| c.passed))
        }
    }
}

fn verify(file: &Path, out: Out) -> Result<bool, CliError> {
    let lowered = load(file, &LowerOptions::default())?;
    if lowered.pairs.is_empty() {
        return Err(none_found(file, "pair"));
    }
    let mut all = true;
    for (name, pair) in &lowered.pairs {
        match wz_verify(pair) {
            Ok(r) => {
                all &= r.wz_holds;
                writeln!(out, "pair \"{name}\"").map_err(io)?;
                writeln!(out, "  wz_holds: {}", r.wz_holds).map_err(io)?;
                writeln!(out, "  certificate: {}", r.certificate_used).map_err(io)?;
                if !r.wz_holds {
                    writeln!(out, "  residual: {}", r.residual).map_err(io)?;
                }
                if !r.notes.is_empty() {
                    writeln!(out, "  {}", r.notes).map_err(io)?;
                }
            }
            Err(e) => {
                all = false;
                writeln!(out, "pair \"{name}\"\n  error: {e}").map_err(io)?;
            }
        }
    }
    Ok(all)
}

fn barnes(file: &Path, t: &Option<String>, numeric: &NumericArgs, out: Out) -> Result<bool, CliError> {
    let lowered = load(file, &options(t, &None)?)?;
    if lowered.integrands.is_empty() {
        return Err(none_found(file, "integrand"));
    }
    let prec = Precision::new(numeric.digits);
    let reports: Vec<Report> = lowered
        .integrands
        .iter()
        .map(|li| {
            let start = Instant::now();
            let r = (|| {
                let c = choose_contour(&li.integrand, &prec)?;
                let q = eval_integral(&li.integrand, &c, &prec)?;
                Ok(Evaluated {
                    computed: q.value,
                    expected: closed_form(&li.expected, &prec)?,
                    detail: format!(
                        "contour Re s = {}, {} nodes, error estimate {}",
                        c.re_offset,
                        q.nodes_used,
                        format_float(&q.error_estimate, 3)
                    ),
                    converged: q.converged,
                })
            })();
            to_report(&li.name, &prec, start, r)
        })
        .collect();
    emit(&reports, numeric.format, out)
}

fn residues(file: &Path, t: &Option<String>, numeric: &NumericArgs, out: Out) -> Result<bool, CliError> {
    let lowered = load(file, &options(t, &None)?)?;
    if lowered.integrands.is_empty() {
        return Err(none_found(file, "integrand"));
    }
    let prec = Precision::new(numeric.digits);
    let reports: Vec<Report> = lowered
        .integrands
        .iter()
        .map(|li| {
            let start = Instant::now();
            let r = (|| {
                let e = residue_series_left(&li.integrand, &prec)?;
                let families: Vec<String> = e
                    .families
                    .iter()
                    .map(|f| {
                        let v = Complex::with_val(prec.bits(), &f.prefactor * &f.series_value);
                        format!("s = -{} - m: {}", f.pole_base, complex_text(&v, 12))
                    })
                    .collect();
                Ok(Evaluated {
                    computed: e.total,
                    expected: closed_form(&li.expected, &prec)?,
                    detail: families.join("; "),
                    converged: true,
                })
            })();
            to_report(&li.name, &prec, start, r)
        })
        .collect();
    emit(&reports, numeric.format, out)
}

fn series(file: &Path, x: &Option<String>, numeric: &NumericArgs, out: Out) -> Result<bool, CliError> {
    let lowered = load(file, &options(&None, x)?)?;
    if lowered.series.is_empty() {
        return Err(none_found(file, "series"));
    }
    let prec = Precision::new(numeric.digits);
    let reports: Vec<Report> = lowered
        .series
        .iter()
        .map(|ls| {
            let start = Instant::now();
            let r = (|| {
                let v = weighted_series_eval(&ls.series, &prec)? * ls.coefficient.eval(&prec)?;
                Ok(Evaluated {
                    computed: v,
                    expected: closed_form(&ls.expected, &prec)?,
                    detail: format!("term ratio {}", ls.series.term_ratio()?),
                    converged: true,
                })
            })();
            to_report(&ls.name, &prec, start, r)
        })
        .collect();
    emit(&reports, numeric.format, out)
}

fn pair_checks<F>(file: &Path, numeric: &NumericArgs, out: Out, check: F) -> Result<bool, CliError>
where
    F: Fn(&WZPair, &Precision) -> wzb_core::Result<wzb_core::series_ident::IdentityReport>,
{
    let lowered = load(file, &LowerOptions::default())?;
    if lowered.pairs.is_empty() {
        return Err(none_found(file, "pair"));
    }
    let prec = Precision::new(numeric.digits);
    let reports: Vec<Report> = lowered
        .pairs
        .iter()
        .map(|(name, pair)| {
            let start = Instant::now();
            let r = check(pair, &prec).map(|ir| Evaluated {
                expected: Some((format!("right-hand side {}", complex_text(&ir.rhs, 20)), ir.rhs)),
                computed: ir.lhs,
                detail: ir.notes.join("; "),
                converged: true,
            });
            to_report(name, &prec, start, r)
        })
        .collect();
    emit(&reports, numeric.format, out)
}

fn duals(file: &Path, out: Out) -> Result<bool, CliError> {
    let lowered = load(file, &LowerOptions::default())?;
    if lowered.terms.is_empty() && lowered.pairs.is_empty() {
        return Err(none_found(file, "term or pair"));
    }
    let mut all = true;
    for t in &lowered.terms {
        match dual(&t.term) {
            Ok(d) => writeln!(out, "term \"{}\": {d}", t.name).map_err(io)?,
            Err(e) => {
                all = false;
                writeln!(out, "term \"{}\": error: {e}", t.name).map_err(io)?;
            }
        }
    }
    for (name, pair) in &lowered.pairs {
        let r = (|| {
            let p = dual_pair(pair)?;
            let v = wz_verify(&p)?;
            Ok::<_, Error>((p, v.wz_holds))
        })();
        match r {
            Ok((p, holds)) => {
                all &= holds;
                writeln!(out, "pair \"{name}\"\n  F: {}\n  G: {}\n  wz_holds: {holds}", p.f, p.g).map_err(io)?;
            }
            Err(e) => {
                all = false;
                writeln!(out, "pair \"{name}\": error: {e}").map_err(io)?;
            }
        }
    }
    Ok(all)
}
