use proptest::prelude::*;
use wzb_cli::dsl::{lower, parse, print_expr, print_file, Expr, Func, LowerOptions, ParseError};
use rug::Rational;
use wzb_core::barnes::IntegrandSpec;
use wzb_core::exact::{AffineForm, BiPoly};
use wzb_core::hyperterm::wz_verify;
use wzb_core::paperlib::terms;

const SQRT3: &str = include_str!("../../../terms/sqrt3.wz");

#[test]
fn spec_pair_parses_to_the_known_pair() {
    let file = parse(SQRT3).unwrap();
    assert_eq!(file.definitions.len(), 1);
    let lowered = lower(&file, &LowerOptions::default()).unwrap();
    let (name, pair) = &lowered.pairs[0];
    assert_eq!(name, "sqrt3");
    let known = terms::sqrt3_pair();
    assert_eq!(pair.f, known.f);
    assert_eq!(pair.g, known.g);
    assert!(wz_verify(pair).unwrap().wz_holds);
}

#[test]
fn inline_pair_parses() {
    let src = "pair \"s2\" { z=-16/9; F = poch(1/2,n)*poch(1/4+3/2*k,n)*poch(3/4+3/2*k,n)/(poch(1+k,n)*poch(1+2*k,n)) \
               * poch(1/6,k)*poch(5/6,k)/poch(1,k)^2 * rf(-n*(n-2), 3*(n+2*k+1)) * sign(n)*pow(16/9,n)/fact(n); \
               G = poch(1/2,n)*poch(1/4+3/2*k,n)*poch(3/4+3/2*k,n)/(poch(1+k,n)*poch(1+2*k,n)) \
               * poch(1/6,k)*poch(5/6,k)/poch(1,k)^2 * (5*n+6*k+1) * sign(n)*pow(16/9,n)/fact(n); }";
    let lowered = lower(&parse(src).unwrap(), &LowerOptions::default()).unwrap();
    assert_eq!(lowered.pairs[0].1.f, terms::sqrt3_pair().f);
}

#[test]
fn empty_file() {
    assert!(parse("").unwrap().definitions.is_empty());
    assert!(parse("  # only a comment\n").unwrap().definitions.is_empty());
}

#[test]
fn missing_argument_reported_at_closing_paren() {
    let src = "term \"a\" {\n  T = poch(1/2);\n}";
    match parse(src) {
        Err(ParseError::Syntax { pos, .. }) => assert_eq!((pos.line, pos.col), (2, 15)),
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn undefined_name() {
    let err = parse("term \"a\" { T = U*n; }").unwrap_err();
    assert!(matches!(err, ParseError::UndefinedName { ref name, .. } if name == "U"));
    // names are visible only after their binding
    assert!(parse("term \"a\" { T = U; U = n; }").is_err());
    assert!(parse("term \"a\" { U = n; T = U; }").is_ok());
}

#[test]
fn duplicate_binding_rejected() {
    assert!(matches!(parse("term \"a\" { U = n; U = k; }"), Err(ParseError::Syntax { .. })));
}

#[test]
fn missing_parameter() {
    let file = parse("term \"a\" { T = poch(x, n); }").unwrap();
    let err = lower(&file, &LowerOptions::default()).unwrap_err();
    assert!(err.to_string().contains("parameter `x`"), "{err}");
    let opts = LowerOptions {
        x: Some(Rational::from((1, 2))),
        ..LowerOptions::default()
    };
    assert!(lower(&file, &opts).is_ok());
}

#[test]
fn integrand_lowering() {
    let src = "integrand \"i\" { z = -16/9; B = (5*s + 1)*poch(1/2, s)*poch(1/4, s)*poch(3/4, s)/poch(1, s)^2; }";
    let lowered = lower(&parse(src).unwrap(), &LowerOptions::default()).unwrap();
    let c = |a: i64, b: i64| AffineForm::constant(Rational::from((a, b)));
    let expected = IntegrandSpec::new(
        &BiPoly::var_n().scale(&Rational::from(5)) + &BiPoly::one(),
        vec![c(1, 2), c(1, 4), c(3, 4)],
        vec![c(1, 1), c(1, 1)],
        Rational::from((-16, 9)),
    );
    assert_eq!(lowered.integrands[0].integrand, expected);
}

#[test]
fn s_in_denominator_rejected() {
    let src = "integrand \"i\" { z = -2; B = poch(1/2, s)/(s + 1); }";
    assert!(lower(&parse(src).unwrap(), &LowerOptions::default()).is_err());
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0u64..50).prop_map(Expr::Int),
        prop::sample::select(vec!["n", "k", "t", "x", "pi"]).prop_map(|s| Expr::Name(s.to_string())),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 32, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            (inner.clone(), -3i64..4).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Call(Func::Poch, vec![a, b])),
            inner.clone().prop_map(|a| Expr::Call(Func::Fact, vec![a])),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse_round_trips(e in expr()) {
        let src = format!("term \"p\" {{ T = {}; }}", print_expr(&e));
        let file = parse(&src).unwrap();
        prop_assert_eq!(&file.definitions[0].bindings[0].value, &e);
        let again = parse(&print_file(&file)).unwrap();
        prop_assert!(again.same_structure(&file));
    }
}
