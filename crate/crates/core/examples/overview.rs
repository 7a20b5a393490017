//! A tour of the main pieces in a few lines each.
//!
//! cargo run --example overview

use lazy_streams::combinators::{prod, scan, sum};
use lazy_streams::lang::{default_env, eval_text};
use lazy_streams::lazy::{lazy_maplist, lazy_nats, lazy_take};
use lazy_streams::ops::{plus, succ};
use lazy_streams::source::{naturals, negatives, positives};
use lazy_streams::value::render_list;

fn main() {
    println!("sum     {}", sum(positives(), negatives()).show(8));
    println!("prod    {}", prod(naturals(), naturals()).show(8));
    println!("scan    {}", scan(plus, 0, naturals()).show(8));

    let evaluated = eval_text("{[a,b,a]}+(1:3)*c", &default_env(), 8).expect("valid expression");
    println!("eval    {}", render_list(&evaluated));

    let nats = lazy_nats();
    let succs = lazy_maplist(succ, nats.clone());
    println!(
        "lazy    {} {}",
        render_list(&lazy_take(4, &succs)),
        render_list(&lazy_take(4, &nats))
    );
}
