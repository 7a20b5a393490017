//! The generator algebra.
//!
//! Every combinator takes ownership of its input generators. Failures raised
//! by an input propagate through [`Generator::try_ask`] and finish the
//! combined stream.

mod cantor;
mod fold;
mod product;

use std::collections::{HashSet, VecDeque};
use std::sync::{Arc, Mutex};

pub use cantor::{cantor_pair, cantor_unpair};
pub use fold::{map1, map2, reduce, scan};
pub use product::{conv, prod, prod_cantor};

use crate::generator::Generator;
use crate::value::Value;

/// Fair interleaving. The generator asked first swaps with the other after
/// every answer it gives; once it fails, only the other one is asked.
pub fn sum(first: Generator, second: Generator) -> Generator {
    let mut first = first;
    let mut second = second;
    Generator::new(move || {
        if let Some(x) = first.try_ask()? {
            std::mem::swap(&mut first, &mut second);
            return Ok(Some(x));
        }
        second.try_ask()
    })
}

/// Distinct elements in first-occurrence order.
pub fn setify(mut g: Generator) -> Generator {
    let mut seen = HashSet::new();
    Generator::new(move || {
        while let Some(x) = g.try_ask()? {
            if seen.insert(x.clone()) {
                return Ok(Some(x));
            }
        }
        Ok(None)
    })
}

struct Split {
    source: Generator,
    queues: [VecDeque<Value>; 2],
}

/// Splits `g` into the elements satisfying `pred` and the rest.
///
/// Both halves share the source; elements pulled on behalf of one half are
/// buffered for the other until it asks for them.
pub fn partition<F>(pred: F, g: Generator) -> (Generator, Generator)
where
    F: Fn(&Value) -> bool + Send + Sync + 'static,
{
    let shared = Arc::new(Mutex::new(Split {
        source: g,
        queues: [VecDeque::new(), VecDeque::new()],
    }));
    let pred = Arc::new(pred);
    let half = |side: usize| {
        let shared = shared.clone();
        let pred = pred.clone();
        Generator::new(move || {
            let mut split = shared.lock().unwrap_or_else(|e| e.into_inner());
            if let Some(x) = split.queues[side].pop_front() {
                return Ok(Some(x));
            }
            while let Some(x) = split.source.try_ask()? {
                let belongs = if pred(&x) { 0 } else { 1 };
                if belongs == side {
                    return Ok(Some(x));
                }
                split.queues[belongs].push_back(x);
            }
            Ok(None)
        })
    };
    (half(0), half(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{from_list, naturals, negatives, positives};

    fn ints(vs: &[Value]) -> Vec<i64> {
        vs.iter().map(|v| v.as_int().unwrap()).collect()
    }

    #[test]
    fn sum_interleaves() {
        let out = sum(positives(), negatives()).take_vec(10);
        assert_eq!(ints(&out), [1, -1, 2, -2, 3, -3, 4, -4, 5, -5]);
    }

    #[test]
    fn sum_continues_in_the_survivor() {
        let out = sum(from_list([Value::sym("a")]), naturals()).show(4);
        assert_eq!(out, "[a, 0, 1, 2]");
        let out = sum(Generator::empty(), from_list([1, 2, 3])).take_vec(5);
        assert_eq!(ints(&out), [1, 2, 3]);
        let out = sum(from_list([1, 2, 3]), Generator::empty()).take_vec(5);
        assert_eq!(ints(&out), [1, 2, 3]);
    }

    #[test]
    fn setify_drops_repeats() {
        let a = Value::sym("a");
        let b = Value::sym("b");
        assert_eq!(setify(from_list([a.clone(), b, a])).show(5), "[a, b]");
        assert_eq!(ints(&setify(naturals()).take_vec(5)), [0, 1, 2, 3, 4]);
        assert_eq!(setify(Generator::empty()).show(5), "[]");
    }

    #[test]
    fn partition_even_odd() {
        let (mut even, mut odd) = partition(|v| v.as_int().unwrap() % 2 == 0, naturals());
        assert_eq!(ints(&odd.take_vec(3)), [1, 3, 5]);
        assert_eq!(ints(&even.take_vec(4)), [0, 2, 4, 6]);
    }
}
