//! The expression language: parse, print, evaluate, extend.
//!
//! cargo run --example expressions -- "nat*[x,y]" 6

use lazy_streams::lang::{default_env, eval_expr, parse_str, Env, Expr};
use lazy_streams::ops::double;
use lazy_streams::source::iterate;

fn main() {
    let mut args = std::env::args().skip(1);
    let src = args
        .next()
        .unwrap_or_else(|| "{[a,b,a]}+(1:3)*c".to_owned());
    let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);

    match parse_str(&src) {
        Ok(e) => {
            println!("parsed   {e:?}");
            println!("printed  {e}");
            println!("value    {}", eval_expr(&e, &default_env()).show(n));
        }
        Err(err) => {
            eprintln!("{err}\n  {src}\n  {}^", " ".repeat(err.pos()));
            std::process::exit(2);
        }
    }

    let mut env = Env::with_seed(1);
    env.bind("pow", || iterate(double, 1));
    let e = parse_str("pow + rand").expect("valid");
    println!("custom   {}", eval_expr(&e, &env).show(4));

    let spliced = Expr::prod(Expr::embed(|| iterate(double, 1)), Expr::reference("z"));
    println!("embed    {}", eval_expr(&spliced, &env).show(4));
}
