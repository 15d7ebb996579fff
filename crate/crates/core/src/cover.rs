use serde::{Deserialize, Serialize};

use crate::{min_stamps2, Basis, Error, Result};

/// One way of writing `value = c3*a3 + c2*a2 + c1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generation {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub value: i64,
    pub stamps: i64,
    /// `floor(value / a3) - c3`
    pub order: i64,
}

impl Generation {
    pub fn new(basis: &Basis, c1: i64, c2: i64, c3: i64) -> Result<Self> {
        let value = c3
            .checked_mul(basis.a3)
            .and_then(|v| v.checked_add(c2.checked_mul(basis.a2)?))
            .and_then(|v| v.checked_add(c1))
            .ok_or(Error::Overflow("generation value"))?;
        Ok(Generation { c1, c2, c3, value, stamps: c1 + c2 + c3, order: value / basis.a3 - c3 })
    }
}

/// Cover `X` together with its stride decomposition `X = (k+1)*a3 + Y`.
///
/// Trivial covers (`X < a3`) carry `k = -1`, `Y = X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverResult {
    pub s: i64,
    #[serde(rename = "X")]
    pub x: i64,
    pub k: i64,
    #[serde(rename = "Y")]
    pub y: i64,
}

impl CoverResult {
    fn from_cover(s: i64, a3: i64, x: i64) -> Self {
        if x < a3 {
            CoverResult { s, x, k: -1, y: x }
        } else {
            CoverResult { s, x, k: x / a3 - 1, y: x % a3 }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.k < 0
    }
}

fn check_budget(s: i64) -> Result<()> {
    if s < 1 {
        return Err(Error::range("stamp budget", format!("s = {s}, need s >= 1")));
    }
    Ok(())
}

pub fn can_generate(basis: &Basis, s: i64, x: i64) -> Result<bool> {
    basis.validate()?;
    check_budget(s)?;
    if x < 0 {
        return Err(Error::range("value", format!("x = {x}")));
    }
    let q = x / basis.a3;
    Ok((0..=q.min(s)).any(|c3| basis.ms(x - c3 * basis.a3) <= s - c3))
}

/// Generation using the most `a3` stamps, then the most `a2` stamps.
///
/// Maximising `c3` minimises the order; for the remainder the greedy
/// split is both the max-`c2` and the min-stamp choice, so the first
/// feasible `c3` from the top wins.
pub fn canonical_generation(basis: &Basis, s: i64, x: i64) -> Result<Option<Generation>> {
    basis.validate()?;
    check_budget(s)?;
    if x < 0 {
        return Err(Error::range("value", format!("x = {x}")));
    }
    let q = x / basis.a3;
    for c3 in (0..=q.min(s)).rev() {
        let rem = x - c3 * basis.a3;
        let (c2, c1) = (rem / basis.a2, rem % basis.a2);
        if c1 + c2 <= s - c3 {
            return Generation::new(basis, c1, c2, c3).map(Some);
        }
    }
    Ok(None)
}

/// `C({1,a2,a3}, 3, s)` computed stride by stride.
///
/// `h[r]` holds `min_{i<=q} ms(r + i*a3) - i`; the value `q*a3 + r` is
/// generable within `s` stamps iff `h[r] <= s - q`. Memory is `O(a3)`.
pub fn cover3(basis: &Basis, s: i64) -> Result<CoverResult> {
    basis.validate()?;
    check_budget(s)?;
    let a3 = basis.a3;
    let len = usize::try_from(a3).map_err(|_| Error::Overflow("stride width"))?;
    s.checked_add(1)
        .and_then(|q| q.checked_mul(a3))
        .and_then(|v| v.checked_add(a3))
        .ok_or(Error::Overflow("cover3 stride offset"))?;
    let mut h = vec![i64::MAX; len];
    for q in 0..=s {
        let base = q * a3;
        let budget = s - q;
        for (r, hr) in h.iter_mut().enumerate() {
            let v = basis.ms(base + r as i64) - q;
            if v < *hr {
                *hr = v;
            }
        }
        for (r, &hr) in h.iter().enumerate() {
            if hr > budget {
                let x = base + r as i64;
                return Ok(CoverResult::from_cover(s, a3, x - 1));
            }
        }
    }
    // q = s covers s*a3 + r only for r = 0, so the loop always exits above.
    Err(Error::Inconsistent(format!("cover3 ran past stride {s} for {basis}")))
}

/// `C({1,a2}, 2, s)` by direct scan.
pub fn cover2(a2: i64, s: i64) -> Result<i64> {
    if a2 < 2 {
        return Err(Error::range("a2", format!("a2 = {a2}, need a2 >= 2")));
    }
    check_budget(s)?;
    let mut x = 0;
    while min_stamps2(a2, x + 1) <= s {
        x += 1;
    }
    if a2 <= s + 2 {
        debug_assert_eq!(x, cover2_formula(a2, s), "cover2 closed form, a2={a2} s={s}");
    }
    Ok(x)
}

/// `a2*(s+3-a2) - 2`, valid for `2 <= a2 <= s+2`.
pub fn cover2_formula(a2: i64, s: i64) -> i64 {
    a2 * (s + 3 - a2) - 2
}

/// `M(2,s)` and every `a2` attaining it, by scanning `2 <= a2 <= s+2`.
pub fn m2(s: i64) -> Result<(i64, Vec<i64>)> {
    check_budget(s)?;
    let mut best = -1;
    let mut arg = Vec::new();
    for a2 in 2..=s + 2 {
        let c = cover2(a2, s)?;
        if c > best {
            best = c;
            arg.clear();
        }
        if c == best {
            arg.push(a2);
        }
    }
    let t = s / 2;
    let expect = if s % 2 == 0 { (t * (t + 3), vec![t + 1, t + 2]) } else { (t * (t + 4) + 2, vec![t + 2]) };
    if (best, &arg) != (expect.0, &expect.1) {
        return Err(Error::Inconsistent(format!("m2({s}): scan {best} {arg:?}, closed form {expect:?}")));
    }
    Ok((best, arg))
}
