//! A small language of generator expressions.
//!
//! `[a,b]*(1:4)` is the product of a two-element list with the range
//! `1, 2, 3`; `+` is the interleaving sum, `{e}` removes duplicates, bare
//! integers are constant streams and bare symbols are looked up in an
//! [`Env`] (falling back to constant streams of the symbol itself).

mod ast;
mod eval;
mod parse;
mod token;

use thiserror::Error;

pub use ast::{Embedded, Expr};
pub use eval::{default_env, eval_expr, eval_text, Env};
pub use parse::{parse, parse_str};
pub use token::{tokenize, Token, TokenKind};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LangError {
    #[error("unexpected character {found:?} at offset {pos}")]
    Lex { pos: usize, found: char },

    #[error("syntax error at offset {pos}: expected {}, found {found}", expected_list(.expected))]
    Syntax {
        pos: usize,
        expected: Vec<TokenKind>,
        found: TokenKind,
    },

    #[error("integer {text} at offset {pos} is out of range")]
    IntRange { pos: usize, text: String },
}

impl LangError {
    pub fn pos(&self) -> usize {
        match self {
            LangError::Lex { pos, .. }
            | LangError::Syntax { pos, .. }
            | LangError::IntRange { pos, .. } => *pos,
        }
    }
}

fn expected_list(kinds: &[TokenKind]) -> String {
    match kinds {
        [] => "nothing".to_owned(),
        [k] => k.to_string(),
        _ => {
            let names: Vec<String> = kinds.iter().map(ToString::to_string).collect();
            format!("one of {}", names.join(", "))
        }
    }
}
