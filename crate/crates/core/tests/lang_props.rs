use lazy_streams::combinators::sum;
use lazy_streams::lang::{default_env, eval_expr, eval_text, parse_str, tokenize, Expr};
use lazy_streams::{Sym, Value};
use proptest::prelude::*;

fn sym_text() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("nat".to_owned()),
        Just("pos".to_owned()),
        Just("neg".to_owned()),
        "[a-z][a-z0-9_]{0,4}",
    ]
}

fn value() -> impl Strategy<Value = Value> {
    prop_oneof![
        (-99i64..99).prop_map(Value::Int),
        "[a-z][a-z0-9_]{0,3}".prop_map(|s| Value::Sym(Sym::new(&s).unwrap())),
    ]
}

fn finite() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-9i64..9, -9i64..12).prop_map(|(a, b)| Expr::Range(a, b)),
        prop::collection::vec(value(), 0..4).prop_map(Expr::ListLit),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::sum(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::prod(a, b)),
        ]
    })
}

/// Expressions whose every 50-element prefix is computable: `{}` only
/// wraps finite streams.
fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-9i64..9, -9i64..12).prop_map(|(a, b)| Expr::Range(a, b)),
        prop::collection::vec(value(), 0..4).prop_map(Expr::ListLit),
        (-99i64..99).prop_map(|n| Expr::ConstLit(Value::Int(n))),
        sym_text().prop_map(|s| Expr::reference(&s)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::sum(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::prod(a, b)),
            finite().prop_map(Expr::set_of),
        ]
    })
}

/// Any expression the parser can produce.
fn syntax() -> impl Strategy<Value = Expr> {
    expr().prop_recursive(2, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Expr::set_of),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::prod(a, b)),
        ]
    })
}

/// Token-heavy noise: mostly pieces of the language, some junk.
fn noisy_source() -> impl Strategy<Value = String> {
    let piece = prop_oneof![
        Just("("),
        Just(")"),
        Just("["),
        Just("]"),
        Just("{"),
        Just("}"),
        Just("+"),
        Just("*"),
        Just(":"),
        Just(","),
        Just(" "),
        Just("-"),
        Just("12"),
        Just("-3"),
        Just("a"),
        Just("nat"),
        Just("#"),
        Just("Z"),
        Just("99999999999999999999"),
        Just("é"),
    ];
    prop::collection::vec(piece, 0..120).prop_map(|ps| ps.concat())
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(e in syntax()) {
        let text = e.to_string();
        prop_assert_eq!(parse_str(&text), Ok(e), "{}", text);
    }

    #[test]
    fn sum_evaluates_homomorphically(a in expr(), b in expr()) {
        let env = default_env();
        let whole = eval_expr(&Expr::sum(a.clone(), b.clone()), &env).take_vec(50);
        let parts = sum(eval_expr(&a, &env), eval_expr(&b, &env)).take_vec(50);
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn parsing_noise_is_total(src in noisy_source()) {
        if let Err(e) = parse_str(&src) {
            prop_assert!(e.pos() <= src.len());
            prop_assert!(src.is_char_boundary(e.pos()));
        }
    }

    #[test]
    fn parsing_arbitrary_text_is_total(src in "\\PC{0,256}") {
        match parse_str(&src) {
            Ok(_) => prop_assert!(tokenize(&src).is_ok()),
            Err(e) => prop_assert!(e.pos() <= src.len()),
        }
    }
}

#[test]
fn references_evaluate_fresh() {
    let got = eval_text("nat+nat", &default_env(), 6).unwrap();
    assert_eq!(got, [0, 0, 1, 1, 2, 2].map(Value::Int));
}
