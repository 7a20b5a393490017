//! Token and line streams over files or standard input.
//!
//! cargo run --example file_streams -- path/to/numbers.txt
//! echo "1 2 3" | cargo run --example file_streams -- -

use std::io::Write;

use lazy_streams::combinators::scan;
use lazy_streams::io::{line_reader, token_reader, Source};
use lazy_streams::ops::plus;
use lazy_streams::source::take;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut sample = tempfile::NamedTempFile::new()?;
    writeln!(sample, "3 1 4\n1 5\n9 2 6")?;
    let source = match std::env::args().nth(1).as_deref() {
        Some("-") => Source::Stdin,
        Some(path) => Source::from(path),
        None => Source::from(sample.path()),
    };

    if source == Source::Stdin {
        println!(
            "prefix sums  {}",
            scan(plus, 0, token_reader(source)?).show(20)
        );
        return Ok(());
    }

    println!("lines        {}", line_reader(source.clone())?.show(10));
    println!("tokens       {}", token_reader(source.clone())?.show(20));
    println!(
        "prefix sums  {}",
        scan(plus, 0, token_reader(source.clone())?).show(20)
    );

    // the file is closed as soon as the second token is handed out
    println!("first two    {}", take(2, token_reader(source)?).show(5));
    Ok(())
}
