//! File and standard-input streams.
//!
//! The reader is opened when the generator is built and closed (dropped)
//! exactly once: at end of input, on a read error, or when the generator is
//! stopped or dropped, whichever comes first.

use std::collections::VecDeque;
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::{Path, PathBuf};

use crate::error::StreamError;
use crate::generator::Generator;
use crate::value::{Sym, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Path(PathBuf),
    Stdin,
}

impl Source {
    fn open(&self) -> io::Result<Box<dyn BufRead + Send>> {
        Ok(match self {
            Source::Path(p) => Box::new(BufReader::new(File::open(p)?)),
            Source::Stdin => Box::new(BufReader::new(io::stdin())),
        })
    }
}

impl From<&Path> for Source {
    fn from(p: &Path) -> Self {
        Source::Path(p.to_owned())
    }
}

impl From<PathBuf> for Source {
    fn from(p: PathBuf) -> Self {
        Source::Path(p)
    }
}

impl From<&str> for Source {
    fn from(p: &str) -> Self {
        Source::Path(PathBuf::from(p))
    }
}

/// Reads one LF-terminated line into `buf`, dropping the terminator and a
/// CR right before it. `Ok(false)` at end of input.
fn read_line<R: BufRead + ?Sized>(reader: &mut R, buf: &mut Vec<u8>) -> io::Result<bool> {
    buf.clear();
    if reader.read_until(b'\n', buf)? == 0 {
        return Ok(false);
    }
    if buf.last() == Some(&b'\n') {
        buf.pop();
        if buf.last() == Some(&b'\r') {
            buf.pop();
        }
    }
    Ok(true)
}

/// Bytes are decoded as UTF-8, with invalid sequences replaced.
fn text_value(bytes: &[u8]) -> Value {
    let text = String::from_utf8_lossy(bytes);
    if let Ok(n) = text.parse::<i64>() {
        return Value::Int(n);
    }
    Value::Sym(Sym::raw(&text))
}

/// Whitespace-separated tokens. Decimal integers become `Int`, anything
/// else a `Sym` holding the raw text.
pub fn token_reader(source: impl Into<Source>) -> Result<Generator, StreamError> {
    Ok(tokens_from(source.into().open()?))
}

/// [`token_reader`] over an already open reader.
pub fn tokens_from<R: BufRead + Send + 'static>(reader: R) -> Generator {
    let mut reader = Some(reader);
    let mut pending: VecDeque<Value> = VecDeque::new();
    let mut line = Vec::new();
    Generator::new(move || loop {
        if let Some(v) = pending.pop_front() {
            return Ok(Some(v));
        }
        let Some(r) = reader.as_mut() else {
            return Ok(None);
        };
        match read_line(r, &mut line) {
            Ok(true) => pending.extend(
                line.split(|b| b.is_ascii_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(text_value),
            ),
            Ok(false) => {
                reader = None;
                return Ok(None);
            }
            Err(e) => {
                reader = None;
                return Err(e.into());
            }
        }
    })
}

/// One `Sym` per line, without the line terminator. A final line with no
/// trailing newline is still produced.
pub fn line_reader(source: impl Into<Source>) -> Result<Generator, StreamError> {
    Ok(lines_from(source.into().open()?))
}

/// [`line_reader`] over an already open reader.
pub fn lines_from<R: BufRead + Send + 'static>(reader: R) -> Generator {
    let mut reader = Some(reader);
    let mut line = Vec::new();
    Generator::new(move || {
        let Some(r) = reader.as_mut() else {
            return Ok(None);
        };
        match read_line(r, &mut line) {
            Ok(true) => Ok(Some(Value::Sym(Sym::raw(&String::from_utf8_lossy(&line))))),
            Ok(false) => {
                reader = None;
                Ok(None)
            }
            Err(e) => {
                reader = None;
                Err(e.into())
            }
        }
    })
}
