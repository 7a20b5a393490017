//! Basic stream sources and slicing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::generator::Generator;
use crate::ops;
use crate::value::Value;

/// The infinite stream repeating `v`.
pub fn constant(v: impl Into<Value>) -> Generator {
    let v = v.into();
    Generator::from_fn(move || Some(v.clone()))
}

/// Uniform floats in `[0, 1)`.
///
/// Draws come from ChaCha8 seeded through `seed_from_u64(seed)`; each float
/// takes the top 53 bits of one 64-bit output scaled by 2^-53. The sequence
/// is fully determined by `seed`.
pub fn random_stream(seed: u64) -> Generator {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Generator::from_fn(move || Some(Value::Num(rng.random::<f64>())))
}

/// `init, f(init), f(f(init)), ...` with the state updated in place.
///
/// The current value is yielded only once its successor has been computed,
/// so a failing `f` ends the stream before the element it failed on.
pub fn iterate<F>(mut f: F, init: impl Into<Value>) -> Generator
where
    F: FnMut(&Value) -> Option<Value> + Send + 'static,
{
    let mut state = init.into();
    Generator::from_fn(move || {
        let next = f(&state)?;
        Some(std::mem::replace(&mut state, next))
    })
}

/// Threads a hidden state through `step`, yielding the value half of each
/// result, until `step` answers `None`.
pub fn unfold<S, F>(mut step: F, init: S) -> Generator
where
    S: Send + 'static,
    F: FnMut(S) -> Option<(S, Value)> + Send + 'static,
{
    let mut state = Some(init);
    Generator::from_fn(move || {
        let (next, v) = step(state.take()?)?;
        state = Some(next);
        Some(v)
    })
}

pub fn from_list<I>(values: I) -> Generator
where
    I: IntoIterator,
    I::Item: Into<Value>,
{
    let mut items = values
        .into_iter()
        .map(Into::into)
        .collect::<Vec<Value>>()
        .into_iter();
    Generator::from_fn(move || items.next())
}

/// The half-open integer range `[lo, hi)`.
pub fn range(lo: i64, hi: i64) -> Generator {
    let mut next = lo;
    Generator::from_fn(move || {
        if next < hi {
            next += 1;
            Some(Value::Int(next - 1))
        } else {
            None
        }
    })
}

/// Repeats `values` forever. An empty list gives the empty stream.
pub fn cycle<I>(values: I) -> Generator
where
    I: IntoIterator,
    I::Item: Into<Value>,
{
    let items: Vec<Value> = values.into_iter().map(Into::into).collect();
    let mut i = 0;
    Generator::from_fn(move || {
        if items.is_empty() {
            return None;
        }
        let v = items[i].clone();
        i = (i + 1) % items.len();
        Some(v)
    })
}

/// At most the first `n` elements of `g`.
pub fn take(n: usize, mut g: Generator) -> Generator {
    let mut left = n;
    Generator::new(move || {
        if left == 0 {
            g.stop();
            return Ok(None);
        }
        left -= 1;
        g.try_ask()
    })
}

/// Everything after the first `n` elements of `g` (the stream-level `drop`).
pub fn skip(n: usize, mut g: Generator) -> Generator {
    let mut pending = n;
    Generator::new(move || {
        while pending > 0 {
            pending -= 1;
            if g.try_ask()?.is_none() {
                pending = 0;
                return Ok(None);
            }
        }
        g.try_ask()
    })
}

/// Elements at positions `from..to`.
pub fn slice(from: usize, to: usize, g: Generator) -> Generator {
    take(to.saturating_sub(from), skip(from, g))
}

/// 0, 1, 2, ...
pub fn naturals() -> Generator {
    iterate(ops::succ, 0)
}

/// 1, 2, 3, ...
pub fn positives() -> Generator {
    iterate(ops::succ, 1)
}

/// -1, -2, -3, ...
pub fn negatives() -> Generator {
    iterate(ops::pred, -1)
}
