//! The element type carried by every stream.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

/// A symbol: shared, immutable text.
///
/// Symbols built with [`Sym::new`] follow the lexical rule of the expression
/// language (a lowercase letter followed by letters, digits or `_`). Readers
/// of external text use [`Sym::raw`], which accepts any text.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sym(Arc<str>);

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("invalid symbol {0:?}: expected a lowercase letter followed by letters, digits or '_'")]
pub struct InvalidSym(pub String);

impl Sym {
    pub fn new(text: &str) -> Result<Self, InvalidSym> {
        if is_sym_text(text) {
            Ok(Sym(Arc::from(text)))
        } else {
            Err(InvalidSym(text.to_owned()))
        }
    }

    /// Builds a symbol from arbitrary text without checking the lexical
    /// rule. Only text readers use this; an empty input line becomes the
    /// empty symbol.
    pub fn raw(text: &str) -> Self {
        Sym(Arc::from(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// Whether `text` is a well-formed symbol of the expression language.
pub fn is_sym_text(text: &str) -> bool {
    let mut chars = text.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A stream element.
///
/// Equality is structural and variant-sensitive: `Int(3) != Num(3.0)`.
/// `Num` values compare by bit pattern after folding `-0.0` into `0.0`, so a
/// NaN equals itself and every value can key a hash set.
#[derive(Clone)]
pub enum Value {
    Int(i64),
    Num(f64),
    Sym(Sym),
    Pair(Arc<(Value, Value)>),
}

impl Value {
    pub fn pair(left: impl Into<Value>, right: impl Into<Value>) -> Self {
        Value::Pair(Arc::new((left.into(), right.into())))
    }

    /// A symbol value. Panics if `text` is not a well-formed symbol; use
    /// [`Sym::new`] for fallible construction.
    pub fn sym(text: &str) -> Self {
        Value::Sym(Sym::new(text).expect("well-formed symbol"))
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Value, &Value)> {
        match self {
            Value::Pair(p) => Some((&p.0, &p.1)),
            _ => None,
        }
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, Value::Pair(_))
    }
}

fn num_key(x: f64) -> u64 {
    if x == 0.0 {
        0
    } else {
        x.to_bits()
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => a == b,
            (Value::Num(a), Value::Num(b)) => num_key(*a) == num_key(*b),
            (Value::Sym(a), Value::Sym(b)) => a == b,
            (Value::Pair(a), Value::Pair(b)) => Arc::ptr_eq(a, b) || **a == **b,
            _ => false,
        }
    }
}

impl Eq for Value {}

impl Hash for Value {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Value::Int(n) => {
                state.write_u8(0);
                n.hash(state);
            }
            Value::Num(x) => {
                state.write_u8(1);
                num_key(*x).hash(state);
            }
            Value::Sym(s) => {
                state.write_u8(2);
                s.hash(state);
            }
            Value::Pair(p) => {
                state.write_u8(3);
                p.0.hash(state);
                p.1.hash(state);
            }
        }
    }
}

// Pairs render as `A-B`; only a pair on the right gets parentheses, so
// `(1-2)-3` prints as `1-2-3` and `1-(2-3)` keeps its brackets.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Num(x) => write!(f, "{x:?}"),
            Value::Sym(s) => write!(f, "{s}"),
            Value::Pair(p) => {
                write!(f, "{}-", p.0)?;
                if p.1.is_pair() {
                    write!(f, "({})", p.1)
                } else {
                    write!(f, "{}", p.1)
                }
            }
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<i32> for Value {
    fn from(n: i32) -> Self {
        Value::Int(n.into())
    }
}

impl From<u64> for Value {
    /// Saturates at `i64::MAX`.
    fn from(n: u64) -> Self {
        Value::Int(i64::try_from(n).unwrap_or(i64::MAX))
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<Sym> for Value {
    fn from(s: Sym) -> Self {
        Value::Sym(s)
    }
}

impl<A: Into<Value>, B: Into<Value>> From<(A, B)> for Value {
    fn from((a, b): (A, B)) -> Self {
        Value::pair(a, b)
    }
}

/// Renders a sequence as `[e1, e2, ...]`.
pub fn render_list<'a>(values: impl IntoIterator<Item = &'a Value>) -> String {
    let items: Vec<String> = values.into_iter().map(Value::to_string).collect();
    format!("[{}]", items.join(", "))
}
