//! Reference transcripts with their expected output.

use crate::combinators::{conv, map2, prod, scan, sum};
use crate::lang::{default_env, eval_text};
use crate::lazy::{lazy_maplist, lazy_nats, lazy_take};
use crate::ops::{plus, succ};
use crate::source::{from_list, naturals, negatives, positives};
use crate::value::{render_list, Value};

pub struct Transcript {
    pub label: &'static str,
    pub expected: &'static str,
    pub actual: String,
}

impl Transcript {
    pub fn ok(&self) -> bool {
        self.actual == self.expected
    }
}

fn lazy_line() -> String {
    let mapped = lazy_take(3, &lazy_maplist(succ, lazy_nats()));
    let plain = lazy_take(3, &lazy_nats());
    format!("{} {}", render_list(&mapped), render_list(&plain))
}

pub fn transcripts() -> Vec<Transcript> {
    let abc = || from_list(["a", "b", "c"].map(Value::sym));
    let dsl = eval_text("[a,b]*(1:4)", &default_env(), 6).map(|vs| render_list(&vs));
    vec![
        Transcript {
            label: "map2(plus, pos, neg)",
            expected: "[0, 0, 0, 0, 0, 0, 0, 0, 0, 0]",
            actual: map2(plus, positives(), negatives()).show(10),
        },
        Transcript {
            label: "conv(pos, [a,b,c])",
            expected:
                "[1-a, 1-b, 2-a, 1-c, 2-b, 3-a, 2-c, 3-b, 4-a, 3-c, 4-b, 5-a, 4-c, 5-b, 6-a, 5-c]",
            actual: conv(positives(), abc()).show(16),
        },
        Transcript {
            label: "eval [a,b]*(1:4)",
            expected: "[a-1, b-1, b-2, a-2, b-3, a-3]",
            actual: dsl.unwrap_or_else(|e| e.to_string()),
        },
        Transcript {
            label: "sum(pos, neg)",
            expected: "[1, -1, 2, -2, 3, -3, 4, -4, 5, -5]",
            actual: sum(positives(), negatives()).show(10),
        },
        Transcript {
            label: "prod(nat, nat)",
            expected: "[0-0, 1-0, 1-1, 0-1, 2-1, 2-0, 2-2, 1-2, 0-2, 3-2, 3-1, 3-0]",
            actual: prod(naturals(), naturals()).show(12),
        },
        Transcript {
            label: "scan(plus, 0, nat)",
            expected: "[0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55]",
            actual: scan(plus, 0, naturals()).show(11),
        },
        Transcript {
            label: "lazy maplist succ / nats",
            expected: "[1, 2, 3] [0, 1, 2]",
            actual: lazy_line(),
        },
    ]
}

/// Prints every transcript; returns whether all matched.
pub fn print_transcripts(out: &mut impl std::io::Write) -> std::io::Result<bool> {
    let mut all = true;
    for t in transcripts() {
        if t.ok() {
            writeln!(out, "ok    {}: {}", t.label, t.actual)?;
        } else {
            all = false;
            writeln!(out, "FAIL  {}: {}", t.label, t.actual)?;
            writeln!(out, "      expected {}", t.expected)?;
        }
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_transcripts_match() {
        for t in transcripts() {
            assert!(t.ok(), "{}: {} != {}", t.label, t.actual, t.expected);
        }
    }
}
