//! Resumable producers: write a loop that yields, consume it as a stream.

use lazy_streams::engine::{
    and_nats, answer_source, clonable_source, clone_source, engine_create, or_nats, Producer,
};
use lazy_streams::Value;

fn main() {
    let mut e = engine_create(Producer::new(|co| async move {
        for word in ["alpha", "beta", "gamma"] {
            co.yield_(Value::sym(word)).await;
        }
        Ok(())
    }));
    while let Some(v) = e.next().expect("producer succeeds") {
        println!("{v} ({:?})", e.status());
    }
    println!("final status {:?}", e.status());

    let forward = answer_source(and_nats()).show(6);
    let search = answer_source(or_nats()).show(6);
    println!("and-stream {forward}\nor-stream  {search}");

    // 10^5 yields from a plain loop, no stack growth
    let mut deep = answer_source(or_nats());
    let last = (0..100_000).filter_map(|_| deep.ask()).last();
    println!("after 10^5 yields: {last:?}");

    let squares = || {
        Producer::new(|co| async move {
            for k in 1i64.. {
                co.yield_(k * k).await;
            }
            Ok(())
        })
    };
    let mut original = clonable_source(squares);
    println!("original   {}", original.show(3));
    let mut copy = clone_source(&original).expect("clonable");
    println!("copy       {}", copy.show(5));
}
