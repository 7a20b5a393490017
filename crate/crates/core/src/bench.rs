//! Generator vs lazy-list micro-benchmarks.
//!
//! Each benchmark folds a checksum over the first `n` elements of a stream
//! so printing never dominates. The same stream is built once from
//! generators and once from lazy lists.

use std::fmt;
use std::time::{Duration, Instant};

use clap::ValueEnum;

use crate::alloc;
use crate::combinators::{map1, prod};
use crate::generator::Generator;
use crate::lazy::{gen2lazy, lazy2gen, lazy_maplist, lazy_nats, LazyList};
use crate::ops::{double, succ};
use crate::source::{naturals, take};
use crate::value::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum BenchOp {
    /// Sum of the naturals.
    NatSum,
    /// Naturals through `succ` then `double`.
    MapChain,
    /// Prefix of the fair product `nat * nat`.
    ProdPrefix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchImpl {
    Generator,
    Lazylist,
    Both,
}

impl fmt::Display for BenchOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchOp::NatSum => "nat_sum",
            BenchOp::MapChain => "map_chain",
            BenchOp::ProdPrefix => "prod_prefix",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub implementation: &'static str,
    pub op: BenchOp,
    pub n: usize,
    pub elapsed: Duration,
    pub checksum: i64,
    /// `None` when the counting allocator is not installed.
    pub peak_bytes: Option<usize>,
}

impl BenchResult {
    /// Elements per second.
    pub fn eps(&self) -> f64 {
        self.n as f64 / self.elapsed.as_secs_f64().max(1e-9)
    }
}

impl fmt::Display for BenchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "impl={} op={} n={} eps={:.1} secs={:.6} checksum={}",
            self.implementation,
            self.op,
            self.n,
            self.eps(),
            self.elapsed.as_secs_f64(),
            self.checksum
        )?;
        match self.peak_bytes {
            Some(b) => write!(f, " peak_bytes={b}"),
            None => write!(f, " peak_bytes=unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub results: Vec<BenchResult>,
}

impl BenchReport {
    fn get(&self, name: &str) -> Option<&BenchResult> {
        self.results.iter().find(|r| r.implementation == name)
    }

    /// Whether every implementation folded the same checksum.
    pub fn checksums_agree(&self) -> bool {
        self.results
            .windows(2)
            .all(|w| w[0].checksum == w[1].checksum)
    }

    /// Generator throughput over lazy-list throughput, when both ran.
    pub fn ratio(&self) -> Option<f64> {
        Some(self.get("generator")?.eps() / self.get("lazylist")?.eps())
    }

    /// Set when the generator ran more than twice as slow as the lazy list.
    pub fn generator_slow(&self) -> bool {
        self.ratio().is_some_and(|r| r < 0.5)
    }
}

fn weight(v: &Value) -> i64 {
    match v {
        Value::Int(n) => *n,
        Value::Pair(p) => weight(&p.0)
            .wrapping_mul(1_000_003)
            .wrapping_add(weight(&p.1)),
        _ => 0,
    }
}

fn fold_checksum(values: impl Iterator<Item = Value>) -> i64 {
    values.fold(0i64, |acc, v| acc.wrapping_add(weight(&v)))
}

fn generator_stream(op: BenchOp) -> Generator {
    match op {
        BenchOp::NatSum => naturals(),
        BenchOp::MapChain => map1(double, map1(succ, naturals())),
        BenchOp::ProdPrefix => prod(naturals(), naturals()),
    }
}

fn lazy_stream(op: BenchOp) -> LazyList {
    match op {
        BenchOp::NatSum => lazy_nats(),
        BenchOp::MapChain => lazy_maplist(double, lazy_maplist(succ, lazy_nats())),
        BenchOp::ProdPrefix => gen2lazy(prod(lazy2gen(lazy_nats()), lazy2gen(lazy_nats()))),
    }
}

fn timed(
    implementation: &'static str,
    op: BenchOp,
    n: usize,
    run: impl FnOnce() -> i64,
) -> BenchResult {
    let start = Instant::now();
    let (checksum, peak_bytes) = alloc::measure(run);
    BenchResult {
        implementation,
        op,
        n,
        elapsed: start.elapsed(),
        checksum,
        peak_bytes,
    }
}

pub fn run_one(op: BenchOp, implementation: BenchImpl, n: usize) -> BenchReport {
    let mut results = Vec::new();
    if matches!(implementation, BenchImpl::Generator | BenchImpl::Both) {
        results.push(timed("generator", op, n, || {
            fold_checksum(take(n, generator_stream(op)).into_iter())
        }));
    }
    if matches!(implementation, BenchImpl::Lazylist | BenchImpl::Both) {
        results.push(timed("lazylist", op, n, || {
            fold_checksum(lazy_stream(op).into_iter().take(n))
        }));
    }
    BenchReport { results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksums_agree_for_every_op() {
        for op in [BenchOp::NatSum, BenchOp::MapChain, BenchOp::ProdPrefix] {
            let report = run_one(op, BenchImpl::Both, 2_000);
            assert_eq!(report.results.len(), 2);
            assert!(report.checksums_agree(), "{op}");
            assert!(report.ratio().is_some());
        }
    }

    #[test]
    fn closed_forms() {
        let n = 1000;
        let sum = run_one(BenchOp::NatSum, BenchImpl::Generator, n);
        assert_eq!(sum.results[0].checksum, 499_500);
        let chain = run_one(BenchOp::MapChain, BenchImpl::Lazylist, n);
        assert_eq!(chain.results[0].checksum, 2 * (1..=1000).sum::<i64>());
    }

    #[test]
    fn result_line_format() {
        let report = run_one(BenchOp::NatSum, BenchImpl::Generator, 10);
        let line = report.results[0].to_string();
        assert!(
            line.starts_with("impl=generator op=nat_sum n=10 eps="),
            "{line}"
        );
    }
}
