/// Cantor pairing: `(x + y)(x + y + 1) / 2 + y`.
///
/// Panics if the result does not fit in a `u64`.
pub fn cantor_pair(x: u64, y: u64) -> u64 {
    let t = u128::from(x) + u128::from(y);
    let n = t * (t + 1) / 2 + u128::from(y);
    u64::try_from(n).expect("cantor_pair overflows u64")
}

/// Inverse of [`cantor_pair`].
pub fn cantor_unpair(n: u64) -> (u64, u64) {
    let t = diagonal_of(n);
    let y = n - triangle(t);
    (t - y, y)
}

fn triangle(t: u64) -> u64 {
    (u128::from(t) * (u128::from(t) + 1) / 2) as u64
}

/// Largest `t` with `t(t+1)/2 <= n`, i.e. `floor((sqrt(8n+1) - 1) / 2)`.
/// The float estimate is only a starting point; integer comparisons settle it.
fn diagonal_of(n: u64) -> u64 {
    let wide = u128::from(n);
    let tri = |t: u64| u128::from(t) * (u128::from(t) + 1) / 2;
    let mut t = ((((8.0 * n as f64) + 1.0).sqrt() - 1.0) / 2.0) as u64;
    while tri(t) > wide {
        t -= 1;
    }
    while tri(t + 1) <= wide {
        t += 1;
    }
    t
}
