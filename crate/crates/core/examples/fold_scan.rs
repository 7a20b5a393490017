//! Element-wise maps, running folds and full reductions.

use lazy_streams::combinators::{map1, map2, reduce, scan};
use lazy_streams::ops::{make_pair, plus, succ, times};
use lazy_streams::source::{naturals, negatives, positives, range, take};
use lazy_streams::Value;

fn main() {
    println!("map1 succ        {}", map1(succ, naturals()).show(5));
    println!(
        "map2 plus        {}",
        map2(plus, positives(), negatives()).show(5)
    );
    println!(
        "map2 pair        {}",
        map2(make_pair, naturals(), range(10, 13)).show(5)
    );

    println!("running sum      {}", scan(plus, 0, naturals()).show(8));
    println!("factorials       {}", scan(times, 1, positives()).show(8));

    // constant space: nothing is buffered
    println!(
        "sum 0..10^6      {}",
        reduce(plus, 0, range(0, 1_000_000)).show(1)
    );

    let max = |acc: &Value, v: &Value| Some(Value::Int(acc.as_int()?.max(v.as_int()?)));
    let wave = map1(
        |v: &Value| Some(Value::Int((v.as_int()? * 37) % 101)),
        take(200, naturals()),
    );
    println!("max of a wave    {}", reduce(max, i64::MIN, wave).show(1));
}
