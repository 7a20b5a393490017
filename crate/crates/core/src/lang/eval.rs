use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::combinators::{prod, setify, sum};
use crate::generator::Generator;
use crate::source::{constant, from_list, naturals, negatives, positives, random_stream, range};
use crate::value::{Sym, Value};

use super::ast::Expr;
use super::parse::parse_str;
use super::LangError;

type Factory = Arc<dyn Fn() -> Generator + Send + Sync>;

/// Named stream sources visible to expressions.
#[derive(Clone, Default)]
pub struct Env {
    bindings: HashMap<Sym, Factory>,
}

impl Env {
    pub fn new() -> Self {
        Env::default()
    }

    /// Binds `name` to a factory; every lookup builds a fresh generator.
    pub fn bind<F>(&mut self, name: &str, factory: F) -> &mut Self
    where
        F: Fn() -> Generator + Send + Sync + 'static,
    {
        let name = Sym::new(name).expect("well-formed symbol");
        self.bindings.insert(name, Arc::new(factory));
        self
    }

    pub fn lookup(&self, name: &Sym) -> Option<Generator> {
        self.bindings.get(name).map(|f| f())
    }

    /// `nat`, `pos`, `neg` and `rand` (seeded with `seed`).
    pub fn with_seed(seed: u64) -> Self {
        let mut env = Env::new();
        env.bind("nat", naturals)
            .bind("pos", positives)
            .bind("neg", negatives)
            .bind("rand", move || random_stream(seed));
        env
    }
}

impl fmt::Debug for Env {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names: Vec<&str> = self.bindings.keys().map(Sym::as_str).collect();
        names.sort_unstable();
        f.debug_struct("Env").field("bindings", &names).finish()
    }
}

/// The standard environment with `rand` seeded by 42.
pub fn default_env() -> Env {
    Env::with_seed(42)
}

/// Builds the generator an expression denotes.
pub fn eval_expr(e: &Expr, env: &Env) -> Generator {
    match e {
        Expr::Sum(a, b) => sum(eval_expr(a, env), eval_expr(b, env)),
        Expr::Prod(a, b) => prod(eval_expr(a, env), eval_expr(b, env)),
        Expr::Range(lo, hi) => range(*lo, *hi),
        Expr::ListLit(vs) => from_list(vs.iter().cloned()),
        Expr::SetOf(inner) => setify(eval_expr(inner, env)),
        Expr::ConstLit(v) => constant(v.clone()),
        Expr::Ref(name) => env
            .lookup(name)
            .unwrap_or_else(|| constant(Value::Sym(name.clone()))),
        Expr::Embed(embedded) => embedded.instantiate(),
    }
}

/// Parses `src`, evaluates it and collects up to `n` elements.
pub fn eval_text(src: &str, env: &Env, n: usize) -> Result<Vec<Value>, LangError> {
    let e = parse_str(src)?;
    Ok(eval_expr(&e, env).take_vec(n))
}
