//! Moving operations between isomorphic representations.
//!
//! Each transport converts its inputs with `from`, runs the operation in the
//! other representation and converts the results back with `to`. With
//! [`lazy2gen`](crate::lazy::lazy2gen) / [`gen2lazy`](crate::lazy::gen2lazy)
//! as the pair of maps, generator operations become lazy-list operations and
//! vice versa.

/// One input, one output.
pub fn transport<A, X, Y, B>(
    op: impl FnOnce(X) -> Y,
    from: impl FnOnce(A) -> X,
    to: impl FnOnce(Y) -> B,
    a: A,
) -> B {
    to(op(from(a)))
}

/// Two inputs, one output.
pub fn transport2<A, X, Y, B, From>(
    op: impl FnOnce(X, X) -> Y,
    from: From,
    to: impl FnOnce(Y) -> B,
    a: A,
    b: A,
) -> B
where
    From: Fn(A) -> X,
{
    to(op(from(a), from(b)))
}

/// One input, two outputs.
pub fn transport_split<A, X, Y, B, To>(
    op: impl FnOnce(X) -> (Y, Y),
    from: impl FnOnce(A) -> X,
    to: To,
    a: A,
) -> (B, B)
where
    To: Fn(Y) -> B,
{
    let (y, z) = op(from(a));
    (to(y), to(z))
}
