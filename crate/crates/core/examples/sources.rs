//! Primitive sources and the generator protocol.

use lazy_streams::ops::double;
use lazy_streams::source::{
    constant, cycle, from_list, iterate, random_stream, range, skip, slice, take, unfold,
};
use lazy_streams::{Generator, Value};

fn main() {
    let mut g = from_list([1, 2, 3]);
    while let Some(v) = g.ask() {
        println!("asked {v}");
    }
    assert!(g.is_done());
    assert_eq!(g.ask(), None);

    println!("constant  {}", constant(Value::sym("x")).show(3));
    println!("range     {}", range(-2, 3).show(10));
    println!("cycle     {}", cycle([1, 2]).show(5));
    println!("iterate   {}", iterate(double, 1).show(8));
    println!("random    {}", random_stream(7).show(3));

    let fib = unfold(
        |(a, b): (i64, i64)| Some(((b, a.checked_add(b)?), Value::Int(a))),
        (0, 1),
    );
    println!("unfold    {}", take(10, fib).show(20));

    println!("skip      {}", skip(3, range(0, 8)).show(10));
    println!("slice     {}", slice(2, 5, range(0, 100)).show(10));

    let mut countdown = 3;
    let custom = Generator::from_fn(move || {
        countdown -= 1;
        (countdown >= 0).then_some(Value::Int(countdown))
    });
    println!("from_fn   {}", take(10, custom).show(10));
}
