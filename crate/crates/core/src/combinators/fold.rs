use crate::generator::Generator;
use crate::value::Value;

/// `f` applied to every element. The stream ends where `f` fails.
pub fn map1<F>(mut f: F, mut g: Generator) -> Generator
where
    F: FnMut(&Value) -> Option<Value> + Send + 'static,
{
    Generator::new(move || match g.try_ask()? {
        Some(x) => Ok(f(&x)),
        None => Ok(None),
    })
}

/// `f` applied pairwise; stops at the shorter input or where `f` fails.
pub fn map2<F>(mut f: F, mut g1: Generator, mut g2: Generator) -> Generator
where
    F: FnMut(&Value, &Value) -> Option<Value> + Send + 'static,
{
    Generator::new(move || {
        let Some(x) = g1.try_ask()? else {
            return Ok(None);
        };
        let Some(y) = g2.try_ask()? else {
            return Ok(None);
        };
        Ok(f(&x, &y))
    })
}

/// A one-element stream holding the left fold of `g` from `init`.
///
/// The fold runs on the first ask, in constant space. Elements on which `f`
/// fails are skipped. An empty (but not yet finished) `g` folds to `init`;
/// a `g` that is already done gives the empty stream, and so does every ask
/// after the first.
pub fn reduce<F>(mut f: F, init: impl Into<Value>, mut g: Generator) -> Generator
where
    F: FnMut(&Value, &Value) -> Option<Value> + Send + 'static,
{
    let mut init = Some(init.into());
    Generator::new(move || {
        if g.is_done() {
            return Ok(None);
        }
        let Some(mut acc) = init.take() else {
            return Ok(None);
        };
        while let Some(y) = g.try_ask()? {
            if let Some(z) = f(&acc, &y) {
                acc = z;
            }
        }
        Ok(Some(acc))
    })
}

/// Running fold: `f(init, x1)`, `f(f(init, x1), x2)`, ...
pub fn scan<F>(mut f: F, init: impl Into<Value>, mut g: Generator) -> Generator
where
    F: FnMut(&Value, &Value) -> Option<Value> + Send + 'static,
{
    let mut acc = init.into();
    Generator::new(move || {
        let Some(y) = g.try_ask()? else {
            return Ok(None);
        };
        let Some(r) = f(&acc, &y) else {
            return Ok(None);
        };
        acc = r.clone();
        Ok(Some(r))
    })
}
