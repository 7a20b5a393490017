use std::fmt;

use super::LangError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Int,
    Sym,
    Plus,
    Star,
    Colon,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    End,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TokenKind::Int => "integer",
            TokenKind::Sym => "symbol",
            TokenKind::Plus => "'+'",
            TokenKind::Star => "'*'",
            TokenKind::Colon => "':'",
            TokenKind::LBrack => "'['",
            TokenKind::RBrack => "']'",
            TokenKind::LBrace => "'{'",
            TokenKind::RBrace => "'}'",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::Comma => "','",
            TokenKind::End => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    /// Byte offset into the source.
    pub pos: usize,
}

/// Splits `src` into tokens, ending with an `End` token at `src.len()`.
pub fn tokenize(src: &str) -> Result<Vec<Token<'_>>, LangError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = match c {
            b'+' => TokenKind::Plus,
            b'*' => TokenKind::Star,
            b':' => TokenKind::Colon,
            b'[' => TokenKind::LBrack,
            b']' => TokenKind::RBrack,
            b'{' => TokenKind::LBrace,
            b'}' => TokenKind::RBrace,
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            b',' => TokenKind::Comma,
            b'-' | b'0'..=b'9' => {
                if c == b'-' {
                    i += 1;
                }
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits {
                    return Err(LangError::Lex {
                        pos: start,
                        found: '-',
                    });
                }
                tokens.push(Token {
                    kind: TokenKind::Int,
                    text: &src[start..i],
                    pos: start,
                });
                continue;
            }
            b'a'..=b'z' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Sym,
                    text: &src[start..i],
                    pos: start,
                });
                continue;
            }
            _ => {
                let found = src[start..].chars().next().unwrap_or('\u{fffd}');
                return Err(LangError::Lex { pos: start, found });
            }
        };
        i += 1;
        tokens.push(Token {
            kind,
            text: &src[start..i],
            pos: start,
        });
    }
    tokens.push(Token {
        kind: TokenKind::End,
        text: "",
        pos: src.len(),
    });
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use TokenKind::*;

    fn kinds(src: &str) -> Vec<TokenKind> {
        tokenize(src).unwrap().iter().map(|t| t.kind).collect()
    }

    #[test]
    fn product_of_list_and_range() {
        assert_eq!(
            kinds("[a,b]*(1:4)"),
            [LBrack, Sym, Comma, Sym, RBrack, Star, LParen, Int, Colon, Int, RParen, End]
        );
        let toks = tokenize("[a,b]*(1:4)").unwrap();
        assert_eq!(toks[1].text, "a");
        assert_eq!(toks[9].text, "4");
        assert_eq!(toks[9].pos, 9);
    }

    #[test]
    fn empty_and_whitespace() {
        assert_eq!(kinds(""), [End]);
        assert_eq!(kinds("  \n\t"), [End]);
    }

    #[test]
    fn negative_integers_and_symbols() {
        let toks = tokenize("-12 : foo_2").unwrap();
        assert_eq!(toks[0].text, "-12");
        assert_eq!(toks[2].text, "foo_2");
    }

    #[test]
    fn lexical_errors() {
        assert_eq!(tokenize("@"), Err(LangError::Lex { pos: 0, found: '@' }));
        assert_eq!(
            tokenize("a - b"),
            Err(LangError::Lex { pos: 2, found: '-' })
        );
        assert_eq!(tokenize("Abc"), Err(LangError::Lex { pos: 0, found: 'A' }));
        assert_eq!(
            tokenize("aé"),
            Err(LangError::Lex {
                pos: 1, found: 'é'
            })
        );
    }
}
