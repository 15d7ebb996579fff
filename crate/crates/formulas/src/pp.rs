use num_rational::Ratio;
use psp_core::{Error, Result};

/// Large-`s` limit of [`pp_bound`].
pub const PP_LIMIT: f64 = 4633.0 / 1296.0;

/// `X = 4s³/81 + 2s²/3 + 22s/9`, the cubic the bound is built around.
fn x_of(s: f64) -> f64 {
    4.0 * s * s * s / 81.0 + 2.0 * s * s / 3.0 + 22.0 * s / 9.0
}

/// `P = (n2 a² + n1 a + n0) / (d2 a² + d1 a)` after clearing the
/// fractions in `((N+1)C - a)/(a - C)`.
fn coefficients(s: f64) -> ([f64; 3], [f64; 2]) {
    let k = s + 3.0;
    let x = x_of(s);
    ([-(2.0 * s + 3.0), s * k * k + x, -x * s * k], [s + 1.0, -s * k])
}

/// `P(a3) = ((N+1)C - a3)/(a3 - C)` with `C = s+3 - a3/s`, `N = s+2 - X/a3`.
pub fn pp_of(s: f64, a3: f64) -> f64 {
    let c = s + 3.0 - a3 / s;
    let n = s + 2.0 - x_of(s) / a3;
    ((n + 1.0) * c - a3) / (a3 - c)
}

/// `P` at its larger stationary point `a32`.
///
/// `dP/da = 0` reduces to `(n2 d1 - n1 d2) a² - 2 n0 d2 a - n0 d1 = 0`.
pub fn pp_bound(s: i64) -> Result<f64> {
    if s < 1 {
        return Err(Error::range("s", format!("s = {s}")));
    }
    let sf = s as f64;
    let ([n2, n1, n0], [d2, d1]) = coefficients(sf);
    let (qa, qb, qc) = (n2 * d1 - n1 * d2, -2.0 * n0 * d2, -n0 * d1);
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return Err(Error::range("s", format!("s = {s}: no real stationary point")));
    }
    let r = disc.sqrt();
    let a32 = ((-qb + r) / (2.0 * qa)).max((-qb - r) / (2.0 * qa));
    Ok(pp_of(sf, a32))
}

/// `(1+β)²/(4β) - 2` with `β = 4/81`: with `a3 = αs²`, `X ~ βs³` the bound
/// tends to `(1+β)/α - 2 - β/α²`, minimised at `α = 2β/(1+β)`.
pub fn pp_limit() -> Ratio<i64> {
    let beta = Ratio::new(4, 81);
    let one = Ratio::from_integer(1);
    (one + beta) * (one + beta) / (Ratio::from_integer(4) * beta) - Ratio::from_integer(2)
}
