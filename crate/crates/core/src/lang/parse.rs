//! Recursive-descent parser.
//!
//! ```text
//! expr  := prod ('+' prod)*
//! prod  := prim ('*' prim)*
//! prim  := INT ':' INT | INT | SYM | '[' (value (',' value)*)? ']'
//!        | '{' expr '}' | '(' expr ')'
//! value := INT | SYM
//! ```

use crate::value::{Sym, Value};

use super::ast::Expr;
use super::token::{tokenize, Token, TokenKind};
use super::LangError;

struct Parser<'t, 'a> {
    tokens: &'t [Token<'a>],
    pos: usize,
    /// Kinds tested and rejected at the current position.
    tried: Vec<TokenKind>,
}

impl<'a> Parser<'_, 'a> {
    fn peek(&self) -> &Token<'a> {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn advance(&mut self) -> Token<'a> {
        let tok = self.peek().clone();
        if tok.kind != TokenKind::End {
            self.pos += 1;
        }
        self.tried.clear();
        tok
    }

    fn accept(&mut self, kind: TokenKind) -> Option<Token<'a>> {
        if self.peek().kind == kind {
            Some(self.advance())
        } else {
            if !self.tried.contains(&kind) {
                self.tried.push(kind);
            }
            None
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<Token<'a>, LangError> {
        self.accept(kind).ok_or_else(|| self.error())
    }

    fn error(&self) -> LangError {
        let tok = self.peek();
        LangError::Syntax {
            pos: tok.pos,
            expected: self.tried.clone(),
            found: tok.kind,
        }
    }

    fn expr(&mut self) -> Result<Expr, LangError> {
        let mut lhs = self.prod()?;
        while self.accept(TokenKind::Plus).is_some() {
            let rhs = self.prod()?;
            lhs = Expr::sum(lhs, rhs);
        }
        Ok(lhs)
    }

    fn prod(&mut self) -> Result<Expr, LangError> {
        let mut lhs = self.prim()?;
        while self.accept(TokenKind::Star).is_some() {
            let rhs = self.prim()?;
            lhs = Expr::prod(lhs, rhs);
        }
        Ok(lhs)
    }

    fn prim(&mut self) -> Result<Expr, LangError> {
        if let Some(tok) = self.accept(TokenKind::Int) {
            let lo = int(&tok)?;
            if self.accept(TokenKind::Colon).is_some() {
                let hi = int(&self.expect(TokenKind::Int)?)?;
                return Ok(Expr::Range(lo, hi));
            }
            return Ok(Expr::ConstLit(Value::Int(lo)));
        }
        if let Some(tok) = self.accept(TokenKind::Sym) {
            return Ok(Expr::Ref(sym(&tok)));
        }
        if self.accept(TokenKind::LBrack).is_some() {
            let mut values = Vec::new();
            if self.accept(TokenKind::RBrack).is_some() {
                return Ok(Expr::ListLit(values));
            }
            loop {
                values.push(self.value()?);
                if self.accept(TokenKind::Comma).is_none() {
                    self.expect(TokenKind::RBrack)?;
                    return Ok(Expr::ListLit(values));
                }
            }
        }
        if self.accept(TokenKind::LBrace).is_some() {
            let inner = self.expr()?;
            self.expect(TokenKind::RBrace)?;
            return Ok(Expr::set_of(inner));
        }
        if self.accept(TokenKind::LParen).is_some() {
            let inner = self.expr()?;
            self.expect(TokenKind::RParen)?;
            return Ok(inner);
        }
        Err(self.error())
    }

    fn value(&mut self) -> Result<Value, LangError> {
        if let Some(tok) = self.accept(TokenKind::Int) {
            return Ok(Value::Int(int(&tok)?));
        }
        if let Some(tok) = self.accept(TokenKind::Sym) {
            return Ok(Value::Sym(sym(&tok)));
        }
        Err(self.error())
    }
}

fn int(tok: &Token<'_>) -> Result<i64, LangError> {
    tok.text.parse().map_err(|_| LangError::IntRange {
        pos: tok.pos,
        text: tok.text.to_owned(),
    })
}

fn sym(tok: &Token<'_>) -> Sym {
    Sym::new(tok.text).expect("tokenizer only emits well-formed symbols")
}

/// Parses a complete token sequence (as produced by [`tokenize`]).
pub fn parse(tokens: &[Token<'_>]) -> Result<Expr, LangError> {
    if tokens.is_empty() {
        return Err(LangError::Syntax {
            pos: 0,
            expected: vec![TokenKind::End],
            found: TokenKind::End,
        });
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        tried: Vec::new(),
    };
    let e = p.expr()?;
    p.expect(TokenKind::End)?;
    Ok(e)
}

/// Tokenizes and parses `src`.
pub fn parse_str(src: &str) -> Result<Expr, LangError> {
    parse(&tokenize(src)?)
}
