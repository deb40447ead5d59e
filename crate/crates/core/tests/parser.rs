mod common;

use common::*;
use proptest::prelude::*;
use structctl::parser::{Origin, ParseErrorKind};
use structctl::{parse_expr, parse_str, ExprSource, ParamSpace, RationalFunction};

fn space() -> ParamSpace {
    ParamSpace::new(["a", "b", "c", "z1", "g"]).unwrap()
}

#[derive(Clone, Debug)]
enum Expr {
    Int(i64),
    Ratio(i64, i64),
    Var(&'static str),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Fully parenthesized text.
    fn text(&self) -> String {
        match self {
            Expr::Int(k) => k.to_string(),
            Expr::Ratio(n, d) => format!("({n}/{d})"),
            Expr::Var(v) => v.to_string(),
            Expr::Neg(e) => format!("(-{})", e.text()),
            Expr::Add(x, y) => format!("({} + {})", x.text(), y.text()),
            Expr::Sub(x, y) => format!("({} - {})", x.text(), y.text()),
            Expr::Mul(x, y) => format!("({}*{})", x.text(), y.text()),
            Expr::Div(x, y) => format!("({}/{})", x.text(), y.text()),
            Expr::Pow(x, k) => format!("({})^{k}", x.text()),
        }
    }

    /// Direct construction, `None` on division by zero.
    fn value(&self, sp: &ParamSpace) -> Option<RationalFunction> {
        Some(match self {
            Expr::Int(k) => RationalFunction::from_int(sp, *k),
            Expr::Ratio(n, d) => RationalFunction::constant(sp, q(*n, *d)),
            Expr::Var(v) => RationalFunction::from(structctl::Polynomial::named(sp, v).unwrap()),
            Expr::Neg(e) => -e.value(sp)?,
            Expr::Add(x, y) => &x.value(sp)? + &y.value(sp)?,
            Expr::Sub(x, y) => &x.value(sp)? - &y.value(sp)?,
            Expr::Mul(x, y) => &x.value(sp)? * &y.value(sp)?,
            Expr::Div(x, y) => {
                let d = y.value(sp)?;
                if d.is_zero() {
                    return None;
                }
                &x.value(sp)? / &d
            }
            Expr::Pow(x, k) => x.value(sp)?.pow(*k),
        })
    }
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..20).prop_map(Expr::Int),
        (1i64..10, 1i64..10).prop_map(|(n, d)| Expr::Ratio(n, d)),
        prop::sample::select(vec!["a", "b", "c", "z1", "g"]).prop_map(Expr::Var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Add(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Sub(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Mul(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Div(Box::new(x), Box::new(y))),
            (inner, 0u32..4).prop_map(|(x, k)| Expr::Pow(Box::new(x), k)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn render_round_trip(e in expr_strategy()) {
        let sp = space();
        match e.value(&sp) {
            Some(expected) => {
                let parsed = parse_str(&e.text(), &sp).unwrap();
                prop_assert_eq!(&parsed, &expected);
                let rendered = parsed.to_string();
                let again = parse_str(&rendered, &sp).unwrap();
                prop_assert_eq!(again, expected);
            }
            None => {
                let err = parse_str(&e.text(), &sp).unwrap_err();
                prop_assert_eq!(err.kind, ParseErrorKind::ZeroDivisor);
            }
        }
    }

    #[test]
    fn rejected_inputs_point_inside_the_text(text in "[ab0-9+*/()^ -]{0,12}") {
        let sp = space();
        if let Err(e) = parse_str(&text, &sp) {
            prop_assert!(e.position.offset <= text.len());
            prop_assert_eq!(e.position.line, 1);
            prop_assert!(e.position.column >= 1 && e.position.column <= text.len() + 1);
        }
    }
}

#[test]
fn precedence_laws() {
    let sp = space();
    let eq = |x: &str, y: &str| {
        assert_eq!(parse_str(x, &sp).unwrap(), parse_str(y, &sp).unwrap(), "{x} vs {y}")
    };
    eq("a+b*c", "a+(b*c)");
    eq("a-b-c", "(a-b)-c");
    eq("a/b/c", "(a/b)/c");
    eq("a/b*c", "(a/b)*c");
    eq("-a^2", "-(a^2)");
    eq("a*-b", "a*(-b)");
    eq("2*a^3", "2*(a^3)");
    eq("9/2", "(9/2)");
    assert_ne!(parse_str("(-a)^2", &sp).unwrap(), parse_str("-a^2", &sp).unwrap());
}

#[test]
fn literal_examples() {
    let sp = ParamSpace::new(["z1", "z2", "z3", "z4", "g"]).unwrap();
    assert!(parse_str("0", &sp).unwrap().is_zero());
    assert!(parse_str("(z1+z2)^2 - z1^2 - 2*z1*z2 - z2^2", &sp).unwrap().is_zero());
    let k12 = parse_str("3*g*(z1+2*z2+2*z3)/(z4*(4*z1+3*z2+12*z3))", &sp).unwrap();
    let num = parse_str("3*g*z1 + 6*g*z2 + 6*g*z3", &sp).unwrap();
    let den = parse_str("4*z1*z4 + 3*z2*z4 + 12*z3*z4", &sp).unwrap();
    assert_eq!(k12, &num / &den);
}

#[test]
fn diagnostics() {
    let sp = space();
    let err = parse_str("a + q", &sp).unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::UnknownIdentifier("q".into()));
    assert_eq!(err.position.column, 5);

    let err = parse_str("2a", &sp).unwrap_err();
    assert!(matches!(err.kind, ParseErrorKind::Syntax { .. }));
    assert_eq!(err.position.column, 2);

    let err = parse_str("a/(b-b)", &sp).unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::ZeroDivisor);

    let err = parse_str("(a + b", &sp).unwrap_err();
    match err.kind {
        ParseErrorKind::Syntax { expected, .. } => assert!(expected.contains(&"`)`"), "{expected:?}"),
        k => panic!("unexpected {k:?}"),
    }
    assert_eq!(err.position.offset, 6);

    let err = parse_str("", &sp).unwrap_err();
    assert_eq!(err.position.offset, 0);

    let src = ExprSource::with_origin(
        "a +\n  * b",
        Origin {
            name: "sys.json".into(),
            line: 3,
            column: 10,
        },
    );
    let err = parse_expr(&src, &sp).unwrap_err();
    assert_eq!((err.position.line, err.position.column), (4, 3));
    assert!(err.to_string().starts_with("sys.json:4:3:"), "{err}");
}

#[test]
fn no_implicit_multiplication_or_floats() {
    let sp = space();
    for bad in ["2a", "a b", "1.5", "a^-1", "a^b", "sin(a)", "a**2"] {
        assert!(parse_str(bad, &sp).is_err(), "{bad} should be rejected");
    }
}
