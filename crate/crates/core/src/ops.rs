//! Ready-made element functions for `map`, `scan`, `reduce` and `iterate`.
//!
//! They fail (return `None`) where the corresponding arithmetic predicate
//! would not succeed: on non-numbers and on `Int` overflow.

use crate::value::Value;

pub fn succ(x: &Value) -> Option<Value> {
    match x {
        Value::Int(n) => n.checked_add(1).map(Value::Int),
        Value::Num(x) => Some(Value::Num(x + 1.0)),
        _ => None,
    }
}

pub fn pred(x: &Value) -> Option<Value> {
    match x {
        Value::Int(n) => n.checked_sub(1).map(Value::Int),
        Value::Num(x) => Some(Value::Num(x - 1.0)),
        _ => None,
    }
}

pub fn double(x: &Value) -> Option<Value> {
    plus(x, x)
}

pub fn identity(x: &Value) -> Option<Value> {
    Some(x.clone())
}

pub fn plus(x: &Value, y: &Value) -> Option<Value> {
    match (x, y) {
        (Value::Int(a), Value::Int(b)) => a.checked_add(*b).map(Value::Int),
        (Value::Int(a), Value::Num(b)) => Some(Value::Num(*a as f64 + b)),
        (Value::Num(a), Value::Int(b)) => Some(Value::Num(a + *b as f64)),
        (Value::Num(a), Value::Num(b)) => Some(Value::Num(a + b)),
        _ => None,
    }
}

pub fn times(x: &Value, y: &Value) -> Option<Value> {
    match (x, y) {
        (Value::Int(a), Value::Int(b)) => a.checked_mul(*b).map(Value::Int),
        (Value::Int(a), Value::Num(b)) => Some(Value::Num(*a as f64 * b)),
        (Value::Num(a), Value::Int(b)) => Some(Value::Num(a * *b as f64)),
        (Value::Num(a), Value::Num(b)) => Some(Value::Num(a * b)),
        _ => None,
    }
}

pub fn make_pair(x: &Value, y: &Value) -> Option<Value> {
    Some(Value::pair(x.clone(), y.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        assert_eq!(succ(&Value::Int(1)), Some(Value::Int(2)));
        assert_eq!(succ(&Value::Int(i64::MAX)), None);
        assert_eq!(succ(&Value::sym("a")), None);
        assert_eq!(
            plus(&Value::Int(2), &Value::Num(0.5)),
            Some(Value::Num(2.5))
        );
        assert_eq!(double(&Value::Int(4)), Some(Value::Int(8)));
        assert_eq!(times(&Value::Int(3), &Value::Int(4)), Some(Value::Int(12)));
        assert_eq!(pred(&Value::Int(0)), Some(Value::Int(-1)));
    }
}
