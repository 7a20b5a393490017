mod common;

use std::collections::HashSet;

use common::{cartesian, finite_desc, sorted, syms};
use lazy_streams::combinators::{conv, partition, prod, prod_cantor, reduce, scan, setify, sum};
use lazy_streams::ops::{plus, times};
use lazy_streams::source::{from_list, naturals};
use lazy_streams::{Generator, Value};
use proptest::prelude::*;

type Product = fn(Generator, Generator) -> Generator;

const PRODUCTS: [(&str, Product); 3] =
    [("prod", prod), ("conv", conv), ("prod_cantor", prod_cantor)];

fn list(vs: &[Value]) -> Generator {
    from_list(vs.iter().cloned())
}

fn all(mut g: Generator) -> Vec<Value> {
    g.take_vec(usize::MAX)
}

proptest! {
    #[test]
    fn sum_alternates_while_both_live(m in 0usize..8, n in 0usize..8) {
        let (xs, ys) = (syms("a", m), syms("b", n));
        let got = all(sum(list(&xs), list(&ys)));
        prop_assert_eq!(got.len(), m + n);
        for k in 0..m.min(n) {
            prop_assert_eq!(&got[2 * k], &xs[k]);
            prop_assert_eq!(&got[2 * k + 1], &ys[k]);
        }
    }

    #[test]
    fn sum_is_multiset_union(a in finite_desc(), b in finite_desc()) {
        let mut both = all(a.build());
        both.extend(all(b.build()));
        prop_assert_eq!(sorted(all(sum(a.build(), b.build()))), sorted(both));
        prop_assert_eq!(all(sum(Generator::empty(), a.build())), all(a.build()));
    }

    #[test]
    fn sum_is_associative_as_multisets(a in finite_desc(), b in finite_desc(), c in finite_desc()) {
        let left = all(sum(a.build(), sum(b.build(), c.build())));
        let right = all(sum(sum(a.build(), b.build()), c.build()));
        prop_assert_eq!(sorted(left), sorted(right));
    }

    #[test]
    fn products_are_complete_and_unique(m in 0usize..=6, n in 0usize..=6) {
        let (xs, ys) = (syms("x", m), syms("y", n));
        let expected = cartesian(&xs, &ys);
        for (name, p) in PRODUCTS {
            let got = sorted(all(p(list(&xs), list(&ys))));
            prop_assert_eq!(&got, &expected, "{}", name);
        }
    }

    #[test]
    fn products_mix_finite_and_infinite(m in 1usize..=4) {
        // every pair with a small natural shows up early
        let xs = syms("x", m);
        for (name, p) in PRODUCTS {
            let seen: HashSet<String> = p(list(&xs), naturals()).take_vec(200).iter().map(Value::to_string).collect();
            for x in &xs {
                for j in 0..5 {
                    prop_assert!(seen.contains(&Value::pair(x.clone(), j).to_string()), "{} {}-{}", name, x, j);
                }
            }
        }
    }

    #[test]
    fn product_distributes_over_sum(a in 0usize..=4, b in 0usize..=4, c in 0usize..=4) {
        let (xs, ys, zs) = (syms("a", a), syms("b", b), syms("c", c));
        let left = all(prod(list(&xs), sum(list(&ys), list(&zs))));
        let mut right = all(prod(list(&xs), list(&ys)));
        right.extend(all(prod(list(&xs), list(&zs))));
        prop_assert_eq!(sorted(left), sorted(right));
    }

    #[test]
    fn reduce_matches_last_scan(vs in prop::collection::vec(-1000i64..1000, 1..40), init in -10i64..10) {
        let last = all(scan(plus, init, list_ints(&vs))).pop();
        prop_assert_eq!(all(reduce(plus, init, list_ints(&vs))), vec![last.unwrap()]);
        let small: Vec<i64> = vs.iter().map(|v| v % 3).collect();
        let last = all(scan(times, init, list_ints(&small))).pop();
        prop_assert_eq!(all(reduce(times, init, list_ints(&small))), vec![last.unwrap()]);
    }

    #[test]
    fn setify_is_a_duplicate_free_subsequence(vs in prop::collection::vec(0i64..10, 0..60)) {
        let got = common::ints(&all(setify(list_ints(&vs))));
        let mut seen = HashSet::new();
        let expected: Vec<i64> = vs.iter().copied().filter(|v| seen.insert(*v)).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn partition_splits_in_order(vs in prop::collection::vec(-50i64..50, 0..40)) {
        let (mut yes, mut no) = partition(|v: &Value| v.as_int().is_some_and(|n| n >= 0), list_ints(&vs));
        let (pos, neg): (Vec<i64>, Vec<i64>) = vs.iter().partition(|&&n| n >= 0);
        prop_assert_eq!(common::ints(&no.take_vec(usize::MAX)), neg);
        prop_assert_eq!(common::ints(&yes.take_vec(usize::MAX)), pos);
    }
}

fn list_ints(vs: &[i64]) -> Generator {
    from_list(vs.iter().copied())
}

#[test]
fn products_are_fair_over_naturals() {
    for (name, p) in PRODUCTS {
        let prefix: Vec<String> = p(naturals(), naturals())
            .take_vec(144)
            .iter()
            .map(Value::to_string)
            .collect();
        for i in 0..=5i64 {
            for j in 0..=5i64 {
                let bound = ((i + j + 2) * (i + j + 2)) as usize;
                let pair = Value::pair(i, j).to_string();
                assert!(
                    prefix[..bound].contains(&pair),
                    "{name}: {pair} not within {bound}"
                );
            }
        }
    }
}

#[test]
fn setify_works_on_infinite_streams() {
    let mut g = setify(sum(naturals(), naturals()));
    assert_eq!(common::ints(&g.take_vec(5)), [0, 1, 2, 3, 4]);
}
