use std::fmt;
use std::sync::Arc;

use crate::generator::Generator;
use crate::value::{Sym, Value};

/// A generator spliced into an expression from host code. Each evaluation
/// calls the factory again, so evaluations stay independent.
#[derive(Clone)]
pub struct Embedded(Arc<dyn Fn() -> Generator + Send + Sync>);

impl Embedded {
    pub fn new<F>(factory: F) -> Self
    where
        F: Fn() -> Generator + Send + Sync + 'static,
    {
        Embedded(Arc::new(factory))
    }

    pub fn instantiate(&self) -> Generator {
        (self.0)()
    }
}

impl PartialEq for Embedded {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl fmt::Debug for Embedded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Embedded(..)")
    }
}

/// A generator expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Sum(Box<Expr>, Box<Expr>),
    Prod(Box<Expr>, Box<Expr>),
    /// Half-open integer range `lo:hi`.
    Range(i64, i64),
    ListLit(Vec<Value>),
    SetOf(Box<Expr>),
    ConstLit(Value),
    Ref(Sym),
    Embed(Embedded),
}

impl Expr {
    pub fn sum(a: Expr, b: Expr) -> Self {
        Expr::Sum(Box::new(a), Box::new(b))
    }

    pub fn prod(a: Expr, b: Expr) -> Self {
        Expr::Prod(Box::new(a), Box::new(b))
    }

    pub fn set_of(e: Expr) -> Self {
        Expr::SetOf(Box::new(e))
    }

    pub fn reference(name: &str) -> Self {
        Expr::Ref(Sym::new(name).expect("well-formed symbol"))
    }

    pub fn embed<F>(factory: F) -> Self
    where
        F: Fn() -> Generator + Send + Sync + 'static,
    {
        Expr::Embed(Embedded::new(factory))
    }
}

struct Grouped<'a>(&'a Expr, bool);

impl fmt::Display for Grouped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

// Minimal parentheses for `+` and `*`, both left-associative with `*`
// binding tighter. Re-parsing the output of anything the parser can produce
// gives back an equal expression.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(a, b) => {
                let rhs = matches!(**b, Expr::Sum(..));
                write!(f, "{} + {}", a, Grouped(b, rhs))
            }
            Expr::Prod(a, b) => {
                let lhs = matches!(**a, Expr::Sum(..));
                let rhs = matches!(**b, Expr::Sum(..) | Expr::Prod(..));
                write!(f, "{} * {}", Grouped(a, lhs), Grouped(b, rhs))
            }
            Expr::Range(lo, hi) => write!(f, "{lo}:{hi}"),
            Expr::ListLit(vs) => {
                f.write_str("[")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
            Expr::SetOf(e) => write!(f, "{{{e}}}"),
            Expr::ConstLit(v) => write!(f, "{v}"),
            Expr::Ref(name) => write!(f, "{name}"),
            Expr::Embed(_) => f.write_str("<embedded>"),
        }
    }
}
