#![allow(dead_code)]

use lazy_streams::combinators::{map1, sum};
use lazy_streams::ops::succ;
use lazy_streams::source::{cycle, from_list, naturals, range, skip, take};
use lazy_streams::{Generator, Value};
use proptest::prelude::*;

/// A pure source description; `build` gives a fresh generator each time.
#[derive(Debug, Clone)]
pub enum Desc {
    List(Vec<i64>),
    Range(i64, i64),
    Nats,
    Cycle(Vec<i64>),
    Take(usize, Box<Desc>),
    Skip(usize, Box<Desc>),
    Succ(Box<Desc>),
    Sum(Box<Desc>, Box<Desc>),
}

impl Desc {
    pub fn build(&self) -> Generator {
        match self {
            Desc::List(vs) => from_list(vs.iter().copied()),
            Desc::Range(lo, hi) => range(*lo, *hi),
            Desc::Nats => naturals(),
            Desc::Cycle(vs) => cycle(vs.iter().copied()),
            Desc::Take(n, d) => take(*n, d.build()),
            Desc::Skip(n, d) => skip(*n, d.build()),
            Desc::Succ(d) => map1(succ, d.build()),
            Desc::Sum(a, b) => sum(a.build(), b.build()),
        }
    }
}

pub fn desc() -> impl Strategy<Value = Desc> {
    let leaf = prop_oneof![
        prop::collection::vec(-50i64..50, 0..12).prop_map(Desc::List),
        (-20i64..20, -20i64..30).prop_map(|(a, b)| Desc::Range(a, b)),
        Just(Desc::Nats),
        prop::collection::vec(-5i64..5, 1..4).prop_map(Desc::Cycle),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (0usize..15, inner.clone()).prop_map(|(n, d)| Desc::Take(n, Box::new(d))),
            (0usize..5, inner.clone()).prop_map(|(n, d)| Desc::Skip(n, Box::new(d))),
            inner.clone().prop_map(|d| Desc::Succ(Box::new(d))),
            (inner.clone(), inner).prop_map(|(a, b)| Desc::Sum(Box::new(a), Box::new(b))),
        ]
    })
}

/// Finite descriptions only.
pub fn finite_desc() -> impl Strategy<Value = Desc> {
    prop_oneof![
        prop::collection::vec(-50i64..50, 0..12).prop_map(Desc::List),
        (-20i64..20, -20i64..30).prop_map(|(a, b)| Desc::Range(a, b)),
        (0usize..15, desc()).prop_map(|(n, d)| Desc::Take(n, Box::new(d))),
    ]
}

pub fn ints(vs: &[Value]) -> Vec<i64> {
    vs.iter().map(|v| v.as_int().expect("int")).collect()
}

pub fn sorted(mut vs: Vec<Value>) -> Vec<String> {
    let mut out: Vec<String> = vs.drain(..).map(|v| v.to_string()).collect();
    out.sort();
    out
}

pub fn syms(prefix: &str, n: usize) -> Vec<Value> {
    (0..n)
        .map(|i| Value::sym(&format!("{prefix}{i}")))
        .collect()
}

/// Every `(x, y)` with `x` from `xs` and `y` from `ys`, rendered and sorted.
pub fn cartesian(xs: &[Value], ys: &[Value]) -> Vec<String> {
    let mut out = Vec::new();
    for x in xs {
        for y in ys {
            out.push(Value::pair(x.clone(), y.clone()).to_string());
        }
    }
    out.sort();
    out
}
