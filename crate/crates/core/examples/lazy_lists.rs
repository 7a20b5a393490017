//! Memoized lazy lists and moving operations between representations.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use lazy_streams::combinators::{partition, sum};
use lazy_streams::iso::transport_split;
use lazy_streams::lazy::{
    gen2lazy, lazy2gen, lazy_list, lazy_maplist, lazy_nats, lazy_take, sum_alt,
};
use lazy_streams::ops::{double, succ};
use lazy_streams::source::{naturals, negatives, positives};
use lazy_streams::value::render_list;
use lazy_streams::Value;

fn main() {
    let forced = Arc::new(AtomicUsize::new(0));
    let f = forced.clone();
    let squares = lazy_list(
        move |k: i64| {
            f.fetch_add(1, Ordering::SeqCst);
            Some((k + 1, Value::Int(k * k)))
        },
        0,
    );
    let other = squares.clone();
    println!("first holder   {}", render_list(&lazy_take(5, &squares)));
    println!("second holder  {}", render_list(&lazy_take(3, &other)));
    println!(
        "cells forced   {} ({squares:?})",
        forced.load(Ordering::SeqCst)
    );

    println!(
        "maplist        {}",
        render_list(&lazy_take(
            5,
            &lazy_maplist(double, lazy_maplist(succ, lazy_nats()))
        ))
    );

    let mut back = lazy2gen(gen2lazy(sum(positives(), negatives())));
    println!("roundtrip      {}", back.show(6));
    println!(
        "sum via lists  {}",
        sum_alt(positives(), negatives()).show(6)
    );

    let (even, odd) = transport_split(
        |g| partition(|v: &Value| v.as_int().is_some_and(|n| n % 2 == 0), g),
        lazy2gen,
        gen2lazy,
        gen2lazy(naturals()),
    );
    println!(
        "odd / even     {} {}",
        render_list(&lazy_take(4, &odd)),
        render_list(&lazy_take(4, &even))
    );
}
