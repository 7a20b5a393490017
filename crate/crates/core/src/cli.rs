//! The `lazy-streams` command line.
//!
//! Exit codes: 0 ok, 1 a demo transcript or bench checksum mismatch, 2 usage
//! or parse error, 3 bench finished but the generator ran more than twice as
//! slow as the lazy list.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand};

use crate::bench::{run_one, BenchImpl, BenchOp};
use crate::demo::print_transcripts;
use crate::lang::{eval_expr, parse_str, Env, LangError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SLOW_GENERATOR: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lazy-streams",
    version,
    about = "Evaluate and benchmark lazy stream expressions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the first elements of a stream expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long = "take", default_value_t = 10)]
        take: usize,
        /// Seed for `rand`.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Run the reference transcripts.
    Demo,
    /// Compare generators and lazy lists on one workload.
    Bench {
        #[arg(long, value_enum, default_value_t = BenchOp::NatSum)]
        op: BenchOp,
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long = "impl", value_enum, default_value_t = BenchImpl::Both)]
        implementation: BenchImpl,
    },
}

/// Runs the command line given without the program name.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// [`run`] with explicit output channels.
pub fn run_with<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv =
        std::iter::once(OsString::from("lazy-streams")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match cli.command {
        Command::Eval { expr, take, seed } => eval(&expr, take, seed, out, err),
        Command::Demo => match print_transcripts(out) {
            Ok(true) => EXIT_OK,
            _ => EXIT_MISMATCH,
        },
        Command::Bench {
            op,
            n,
            implementation,
        } => {
            let n = usize::try_from(n).unwrap_or(usize::MAX);
            bench(op, n, implementation, out, err)
        }
    }
}

fn eval(src: &str, take: usize, seed: u64, out: &mut impl Write, err: &mut impl Write) -> i32 {
    match parse_str(src) {
        Ok(e) => {
            let shown = eval_expr(&e, &Env::with_seed(seed)).show(take);
            let _ = writeln!(out, "{shown}");
            EXIT_OK
        }
        Err(e) => {
            report_parse_error(src, &e, err);
            EXIT_USAGE
        }
    }
}

fn report_parse_error(src: &str, e: &LangError, err: &mut impl Write) {
    let column = src[..e.pos().min(src.len())].chars().count();
    let _ = writeln!(err, "error: {e}");
    let _ = writeln!(err, "  {src}");
    let _ = writeln!(err, "  {}^", " ".repeat(column));
}

fn bench(
    op: BenchOp,
    n: usize,
    implementation: BenchImpl,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32 {
    let report = run_one(op, implementation, n);
    if !report.checksums_agree() {
        let _ = writeln!(err, "error: implementations disagree on the checksum");
        for r in &report.results {
            let _ = writeln!(err, "  {r}");
        }
        return EXIT_MISMATCH;
    }
    for r in &report.results {
        let _ = writeln!(out, "{r}");
    }
    let Some(ratio) = report.ratio() else {
        return EXIT_OK;
    };
    let _ = writeln!(
        out,
        "summary op={op} n={n} generator_over_lazylist={ratio:.3}"
    );
    if report.generator_slow() {
        let _ = writeln!(
            err,
            "note: generator is more than 2x slower than the lazy list"
        );
        return EXIT_SLOW_GENERATOR;
    }
    EXIT_OK
}
