//! Memoized lazy lists.
//!
//! A [`LazyList`] is a shared handle to a cell that is either still
//! suspended or already forced to `Nil` / `Cons(head, tail)`. Forcing runs
//! the suspended step once and stores the result, so every holder of the
//! same list sees the same elements and no element is ever computed twice.
//!
//! Holding on to an early cell keeps every forced cell after it alive; drop
//! the head to let a consumed prefix be reclaimed.

use std::fmt;
use std::mem;
use std::sync::{Arc, Mutex, MutexGuard};

use crate::combinators::map1;
use crate::error::StreamError;
use crate::generator::{Generator, Step};
use crate::iso::{transport, transport2};
use crate::value::Value;

enum Cell {
    Unforced(Box<dyn Step>),
    Cons(Value, LazyList),
    Nil,
}

struct Node {
    cell: Mutex<Cell>,
}

impl Drop for Node {
    // Unlink forced tails iteratively; a long forced list would otherwise
    // be dropped recursively, one stack frame per cell.
    fn drop(&mut self) {
        let mut next = take_tail(self.cell.get_mut().unwrap_or_else(|e| e.into_inner()));
        while let Some(list) = next {
            next = match Arc::into_inner(list.0) {
                Some(mut node) => take_tail(node.cell.get_mut().unwrap_or_else(|e| e.into_inner())),
                None => None,
            };
        }
    }
}

fn take_tail(cell: &mut Cell) -> Option<LazyList> {
    match mem::replace(cell, Cell::Nil) {
        Cell::Cons(_, tail) => Some(tail),
        _ => None,
    }
}

/// A possibly infinite list whose cells are computed on demand, once.
#[derive(Clone)]
pub struct LazyList(Arc<Node>);

/// The forced content of a cell.
#[derive(Clone, Debug)]
pub enum Forced {
    Nil,
    Cons(Value, LazyList),
}

impl LazyList {
    fn from_cell(cell: Cell) -> Self {
        LazyList(Arc::new(Node {
            cell: Mutex::new(cell),
        }))
    }

    fn suspended(step: Box<dyn Step>) -> Self {
        LazyList::from_cell(Cell::Unforced(step))
    }

    pub fn nil() -> Self {
        LazyList::from_cell(Cell::Nil)
    }

    pub fn cons(head: impl Into<Value>, tail: LazyList) -> Self {
        LazyList::from_cell(Cell::Cons(head.into(), tail))
    }

    fn lock(&self) -> MutexGuard<'_, Cell> {
        self.0.cell.lock().unwrap_or_else(|e| e.into_inner())
    }

    /// The cell's content, computing it first if needed.
    ///
    /// On a step error the cell stays suspended and the error is returned.
    pub fn try_force(&self) -> Result<Forced, StreamError> {
        let mut cell = self.lock();
        if let Cell::Unforced(step) = &mut *cell {
            match step.step()? {
                Some(head) => {
                    let Cell::Unforced(step) = mem::replace(&mut *cell, Cell::Nil) else {
                        unreachable!()
                    };
                    *cell = Cell::Cons(head, LazyList::suspended(step));
                }
                None => *cell = Cell::Nil,
            }
        }
        Ok(match &*cell {
            Cell::Cons(h, t) => Forced::Cons(h.clone(), t.clone()),
            Cell::Nil => Forced::Nil,
            Cell::Unforced(_) => unreachable!(),
        })
    }

    /// Like [`LazyList::try_force`], with errors read as the end of the list.
    pub fn force(&self) -> Forced {
        self.try_force().unwrap_or(Forced::Nil)
    }

    pub fn is_forced(&self) -> bool {
        !matches!(*self.lock(), Cell::Unforced(_))
    }

    pub fn head(&self) -> Option<Value> {
        match self.force() {
            Forced::Cons(h, _) => Some(h),
            Forced::Nil => None,
        }
    }

    pub fn tail(&self) -> Option<LazyList> {
        match self.force() {
            Forced::Cons(_, t) => Some(t),
            Forced::Nil => None,
        }
    }

    /// Whether two handles share the same cell.
    pub fn ptr_eq(&self, other: &LazyList) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Iterates from this cell on, forcing as it goes.
    pub fn iter(&self) -> Iter {
        Iter(Some(self.clone()))
    }
}

impl fmt::Debug for LazyList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // forced prefix only
        let mut items = Vec::new();
        let mut cur = self.clone();
        loop {
            let next = match &*cur.lock() {
                Cell::Cons(h, t) => {
                    items.push(h.to_string());
                    t.clone()
                }
                Cell::Nil => return write!(f, "[{}]", items.join(",")),
                Cell::Unforced(_) => return write!(f, "[{}|_]", items.join(",")),
            };
            cur = next;
        }
    }
}

/// Walks the list, forcing as it goes. Cells already passed are released
/// unless another handle still holds them.
pub struct Iter(Option<LazyList>);

impl IntoIterator for LazyList {
    type Item = Value;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        Iter(Some(self))
    }
}

impl Iterator for Iter {
    type Item = Value;

    fn next(&mut self) -> Option<Value> {
        match self.0.take()?.force() {
            Forced::Cons(h, t) => {
                self.0 = Some(t);
                Some(h)
            }
            Forced::Nil => None,
        }
    }
}

/// Runs `step` on the state to extend the list one cell at a time; `None`
/// ends the list.
pub fn lazy_list<S, F>(mut step: F, init: S) -> LazyList
where
    S: Send + 'static,
    F: FnMut(S) -> Option<(S, Value)> + Send + 'static,
{
    let mut state = Some(init);
    LazyList::suspended(Box::new(move || {
        let Some(s) = state.take() else {
            return Ok(None);
        };
        Ok(step(s).map(|(next, v)| {
            state = Some(next);
            v
        }))
    }))
}

/// `n, n + 1, n + 2, ...`
pub fn lazy_nats_from(n: i64) -> LazyList {
    lazy_list(|k: i64| Some((k.checked_add(1)?, Value::Int(k))), n)
}

pub fn lazy_nats() -> LazyList {
    lazy_nats_from(0)
}

/// Up to `n` elements from the front of `l`.
pub fn lazy_take(n: usize, l: &LazyList) -> Vec<Value> {
    l.iter().take(n).collect()
}

/// A finite, already materialized lazy list.
pub fn lazy_from_vec<I>(values: I) -> LazyList
where
    I: IntoIterator,
    I::IntoIter: DoubleEndedIterator,
    I::Item: Into<Value>,
{
    values
        .into_iter()
        .rev()
        .fold(LazyList::nil(), |tail, v| LazyList::cons(v, tail))
}

/// The lazy list of `g`'s elements; `g` is asked only when a cell is forced.
pub fn gen2lazy(mut g: Generator) -> LazyList {
    LazyList::suspended(Box::new(move || g.try_ask()))
}

/// A generator walking `l` from its current cell.
pub fn lazy2gen(l: LazyList) -> Generator {
    let mut cur = Some(l);
    Generator::new(move || {
        let Some(list) = cur.take() else {
            return Ok(None);
        };
        match list.try_force()? {
            Forced::Cons(h, t) => {
                cur = Some(t);
                Ok(Some(h))
            }
            Forced::Nil => Ok(None),
        }
    })
}

/// Element-wise `f`, computed lazily: safe on infinite lists.
pub fn lazy_maplist<F>(f: F, l: LazyList) -> LazyList
where
    F: FnMut(&Value) -> Option<Value> + Send + 'static,
{
    transport(|g| map1(f, g), lazy2gen, gen2lazy, l)
}

/// Strict alternation `a0, b0, a1, b1, ...`, continuing with whichever list
/// is longer once the other ends.
pub fn lazy_sum(a: LazyList, b: LazyList) -> LazyList {
    let mut state = Some((a, b));
    LazyList::suspended(Box::new(move || {
        let Some((xs, ys)) = state.take() else {
            return Ok(None);
        };
        if let Forced::Cons(x, rest) = xs.try_force()? {
            state = Some((ys, rest));
            return Ok(Some(x));
        }
        if let Forced::Cons(y, rest) = ys.try_force()? {
            state = Some((rest, xs));
            return Ok(Some(y));
        }
        Ok(None)
    }))
}

/// The generator sum obtained by running [`lazy_sum`] on lazy lists.
pub fn sum_alt(g1: Generator, g2: Generator) -> Generator {
    transport2(lazy_sum, gen2lazy, lazy2gen, g1, g2)
}
