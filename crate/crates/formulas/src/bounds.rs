use num_rational::Ratio;
use psp_core::{Error, Result};

pub type Q = Ratio<i64>;

/// Nearest `f64`, for printing table columns.
pub fn approx(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// `a3*(p+1)/(n+p+1) <= a2 <= n*(p+1) + 1` for any `SG(n,p)` of length `a3`.
pub fn a2_bounds(n: i64, p: i64, a3: i64) -> Result<(Q, i64)> {
    if n < 0 || p < 0 {
        return Err(Error::range("a2_bounds", format!("n = {n}, p = {p}")));
    }
    let lower = Q::new(a3 * (p + 1), n + p + 1);
    Ok((lower, n * (p + 1) + 1))
}

/// `n*(n+p+1) + (n+p+1)/(p+1)`, the longest possible `SG(n,p)`.
pub fn a3_upper(n: i64, p: i64) -> Result<Q> {
    if n < 1 || p < 0 {
        return Err(Error::range("a3_upper", format!("n = {n}, p = {p}")));
    }
    Ok(Q::from_integer(n * (n + p + 1)) + Q::new(n + p + 1, p + 1))
}

/// Length limit `(B+C)(B+3C)/(4C)` for keys 1 and `p`, with
/// `B = n(p+1)+1`, `C = p²+p+1`.
pub fn key1p_limit(n: i64, p: i64) -> Result<Q> {
    if p < 1 {
        return Err(Error::range("key1p_limit", format!("p = {p}")));
    }
    let b = n * (p + 1) + 1;
    let c = p * p + p + 1;
    Ok(Q::new((b + c) * (b + 3 * c), 4 * c))
}

/// `(p+1)(n+2)/2`, the `a2` at which the key-1/`p` limit is attained.
pub fn theoretical_a2(n: i64, p: i64) -> Q {
    Q::new((p + 1) * (n + 2), 2)
}
