//! Three fair enumerations of the Cartesian product of two streams.
//!
//! All of them pair the first input's element on the left and emit every
//! pair exactly once; they differ in order and in how much they buffer.

use crate::error::StreamError;
use crate::generator::Generator;
use crate::value::Value;

use super::cantor::{cantor_pair, cantor_unpair};

#[derive(Clone, Copy)]
enum Phase {
    Start,
    /// Both inputs live; `active` produced the newest element.
    Alternate {
        active: usize,
    },
    /// The passive side is exhausted; pull the rest of `active`.
    Drain {
        active: usize,
    },
    Done,
}

/// Pending pairs of one fresh element with the other side's history.
struct Emit {
    fresh: Value,
    side: usize,
    remaining: usize,
}

struct ProdLoop {
    inputs: [Generator; 2],
    /// Elements produced so far by each input, oldest first.
    seen: [Vec<Value>; 2],
    phase: Phase,
    emit: Option<Emit>,
}

impl ProdLoop {
    fn orient(side: usize, fresh: &Value, other: &Value) -> Value {
        if side == 0 {
            Value::pair(fresh.clone(), other.clone())
        } else {
            Value::pair(other.clone(), fresh.clone())
        }
    }

    fn pair_with_history(&mut self, side: usize, fresh: Value) {
        let remaining = self.seen[1 - side].len();
        self.emit = Some(Emit {
            fresh,
            side,
            remaining,
        });
    }

    fn step(&mut self) -> Result<Option<Value>, StreamError> {
        loop {
            if let Some(emit) = &mut self.emit {
                if emit.remaining > 0 {
                    // newest first
                    emit.remaining -= 1;
                    let other = &self.seen[1 - emit.side][emit.remaining];
                    return Ok(Some(Self::orient(emit.side, &emit.fresh, other)));
                }
                self.emit = None;
            }
            match self.phase {
                Phase::Start => match self.inputs[0].try_ask()? {
                    Some(a) => self.enter(0, a),
                    None => self.phase = Phase::Done,
                },
                Phase::Alternate { active } => {
                    let passive = 1 - active;
                    match self.inputs[passive].try_ask()? {
                        Some(b) => self.enter(passive, b),
                        None if self.seen[passive].is_empty() => self.phase = Phase::Done,
                        None => self.phase = Phase::Drain { active },
                    }
                }
                Phase::Drain { active } => match self.inputs[active].try_ask()? {
                    Some(x) => self.pair_with_history(active, x),
                    None => self.phase = Phase::Done,
                },
                Phase::Done => return Ok(None),
            }
        }
    }

    fn enter(&mut self, side: usize, fresh: Value) {
        self.pair_with_history(side, fresh.clone());
        self.seen[side].push(fresh);
        self.phase = Phase::Alternate { active: side };
    }
}

/// Product by alternation.
///
/// The inputs take turns producing one element. Each new element is paired
/// with everything the other input has produced so far, most recent first.
/// Once one input runs out, each remaining element of the other is paired
/// with the exhausted input's full history.
///
/// `prod(naturals(), naturals())` starts `0-0, 1-0, 1-1, 0-1, 2-1, 2-0, ...`.
pub fn prod(g1: Generator, g2: Generator) -> Generator {
    let mut state = ProdLoop {
        inputs: [g1, g2],
        seen: [Vec::new(), Vec::new()],
        phase: Phase::Start,
        emit: None,
    };
    Generator::new(move || state.step())
}

/// An input together with the prefix consumed from it so far.
struct Buffered {
    input: Generator,
    buf: Vec<Value>,
    exhausted: bool,
}

impl Buffered {
    fn new(input: Generator) -> Self {
        Buffered {
            input,
            buf: Vec::new(),
            exhausted: false,
        }
    }

    /// Element `i`, pulling from the input as needed.
    fn get(&mut self, i: usize) -> Result<Option<Value>, StreamError> {
        while self.buf.len() <= i && !self.exhausted {
            match self.input.try_ask()? {
                Some(v) => self.buf.push(v),
                None => self.exhausted = true,
            }
        }
        Ok(self.buf.get(i).cloned())
    }

    fn known_len(&self) -> Option<usize> {
        self.exhausted.then_some(self.buf.len())
    }
}

/// Product by anti-diagonals: diagonal `d` holds the index pairs
/// `(i, d - i)` for ascending `i`.
pub fn conv(g1: Generator, g2: Generator) -> Generator {
    let mut left = Buffered::new(g1);
    let mut right = Buffered::new(g2);
    let mut diagonal = 0usize;
    let mut next: Option<usize> = None;
    Generator::new(move || loop {
        let i = match next {
            Some(i) => i,
            None => {
                if left.known_len() == Some(0) || right.known_len() == Some(0) {
                    return Ok(None);
                }
                if let (Some(m), Some(n)) = (left.known_len(), right.known_len()) {
                    if diagonal > m + n - 2 {
                        return Ok(None);
                    }
                }
                match right.known_len() {
                    Some(n) => diagonal.saturating_sub(n - 1),
                    None => 0,
                }
            }
        };
        if i > diagonal {
            diagonal += 1;
            next = None;
            continue;
        }
        let Some(x) = left.get(i)? else {
            // past the end of the left input: nothing more on this diagonal
            diagonal += 1;
            next = None;
            continue;
        };
        next = Some(i + 1);
        if let Some(y) = right.get(diagonal - i)? {
            return Ok(Some(Value::pair(x, y)));
        }
    })
}

/// Product driven by a single counter: the `n`-th candidate pair is
/// `cantor_unpair(n)`, skipping indices past the end of a finite input.
///
/// Pair `(i, j)` of two infinite inputs comes out at position
/// `cantor_pair(i, j)`.
pub fn prod_cantor(g1: Generator, g2: Generator) -> Generator {
    let mut left = Buffered::new(g1);
    let mut right = Buffered::new(g2);
    let mut n: u64 = 0;
    let mut emitted: usize = 0;
    Generator::new(move || loop {
        let (m, k) = (left.known_len(), right.known_len());
        if m == Some(0) || k == Some(0) {
            return Ok(None);
        }
        if let (Some(m), Some(k)) = (m, k) {
            if emitted == m * k {
                return Ok(None);
            }
        }
        let (x, y) = cantor_unpair(n);
        let t = x + y;
        // whole runs of skipped indices are stepped over at once
        if k.is_some_and(|k| y >= k as u64) {
            n = cantor_pair(t + 1, 0);
            continue;
        }
        if let Some(m) = m.filter(|&m| x >= m as u64) {
            n = cantor_pair(m as u64 - 1, t - m as u64 + 1);
            continue;
        }
        let Some(a) = left.get(x as usize)? else {
            continue;
        };
        let Some(b) = right.get(y as usize)? else {
            continue;
        };
        n += 1;
        emitted += 1;
        return Ok(Some(Value::pair(a, b)));
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{from_list, naturals, positives, range};

    fn sym(s: &str) -> Value {
        Value::sym(s)
    }

    #[test]
    fn prod_nat_nat_order() {
        assert_eq!(
            prod(naturals(), naturals()).show(12),
            "[0-0, 1-0, 1-1, 0-1, 2-1, 2-0, 2-2, 1-2, 0-2, 3-2, 3-1, 3-0]"
        );
    }

    #[test]
    fn prod_finite_order() {
        assert_eq!(
            prod(from_list([sym("a"), sym("b")]), range(1, 4)).show(10),
            "[a-1, b-1, b-2, a-2, b-3, a-3]"
        );
    }

    #[test]
    fn prod_with_empty_side() {
        assert_eq!(prod(Generator::empty(), naturals()).show(3), "[]");
        // the infinite side is not drained once no pairs can follow
        assert_eq!(prod(naturals(), Generator::empty()).show(3), "[]");
    }

    #[test]
    fn prod_drains_against_constant() {
        let c = crate::source::constant(sym("c"));
        assert_eq!(
            prod(range(1, 3), c).show(8),
            "[1-c, 2-c, 2-c, 1-c, 2-c, 1-c, 2-c, 1-c]"
        );
    }

    #[test]
    fn conv_against_finite_list() {
        assert_eq!(
            conv(positives(), from_list([sym("a"), sym("b"), sym("c")])).show(16),
            "[1-a, 1-b, 2-a, 1-c, 2-b, 3-a, 2-c, 3-b, 4-a, 3-c, 4-b, 5-a, 4-c, 5-b, 6-a, 5-c]"
        );
    }

    #[test]
    fn conv_finite_counts_and_empties() {
        assert_eq!(conv(range(0, 3), range(0, 4)).take_vec(100).len(), 12);
        assert_eq!(conv(range(0, 4), range(0, 1)).take_vec(100).len(), 4);
        assert_eq!(conv(Generator::empty(), naturals()).show(3), "[]");
        assert_eq!(conv(naturals(), Generator::empty()).show(3), "[]");
    }

    #[test]
    fn cantor_product_positions() {
        let out = prod_cantor(naturals(), naturals()).take_vec(40);
        assert_eq!(out[0], Value::pair(0, 0));
        assert_eq!(out[cantor_pair(2, 3) as usize], Value::pair(2, 3));
        assert_eq!(prod_cantor(range(0, 3), range(0, 2)).take_vec(100).len(), 6);
        assert_eq!(prod_cantor(range(0, 1), naturals()).take_vec(4).len(), 4);
        assert_eq!(prod_cantor(naturals(), range(0, 1)).take_vec(4).len(), 4);
        assert_eq!(prod_cantor(naturals(), Generator::empty()).show(3), "[]");
    }
}
