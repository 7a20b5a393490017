//! Sums, products and friends over finite and infinite streams.

use lazy_streams::combinators::{
    cantor_pair, cantor_unpair, conv, partition, prod, prod_cantor, setify, sum,
};
use lazy_streams::source::{cycle, from_list, naturals, negatives, positives, range};
use lazy_streams::Value;

fn main() {
    println!("sum          {}", sum(positives(), negatives()).show(10));
    println!("sum finite   {}", sum(range(0, 2), range(10, 15)).show(10));

    println!("prod         {}", prod(naturals(), naturals()).show(12));
    let abc = || from_list(["a", "b", "c"].map(Value::sym));
    println!("conv         {}", conv(positives(), abc()).show(9));
    println!("prod_cantor  {}", prod_cantor(naturals(), abc()).show(9));

    println!("setify       {}", setify(cycle([3, 1, 3, 2, 1])).show(3));

    let (even, odd) = partition(
        |v: &Value| v.as_int().is_some_and(|n| n % 2 == 0),
        naturals(),
    );
    let (mut even, mut odd) = (even, odd);
    println!("odd          {}", odd.show(4));
    println!("even         {}", even.show(4));

    let code = cantor_pair(3, 4);
    println!(
        "cantor       pair(3, 4) = {code}, unpair({code}) = {:?}",
        cantor_unpair(code)
    );
}
