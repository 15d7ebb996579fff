//! Stride generators: classification of `{1,a2,a3}` as `SG(n,p)`, its
//! breaks and break orders, the per-basis series, underlying SGs of covers
//! and potential covers.
//!
//! Writing `ms(v)` for the fewest `{1,a2}` stamps summing to `v`:
//!
//! * a value `0 < x < a3` has order `i` at `n` when `ms(x + i*a3) <= n + i`;
//! * `p` is the largest minimal order over `(0, a3)`;
//! * `y` is a break when `ms(y + j*a3) > n + j - 1` for every `j <= p+1`,
//!   and its break order is the least `j > p+1` where that fails.

pub mod invariants;

use psp_core::{cover3, Basis, Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BreakOrder {
    Finite(i64),
    Canonical,
}

impl BreakOrder {
    pub fn finite(self) -> Option<i64> {
        match self {
            BreakOrder::Finite(q) => Some(q),
            BreakOrder::Canonical => None,
        }
    }

    /// Canonical breaks count as exceeding every finite order.
    pub fn exceeds(self, k: i64) -> bool {
        self.finite().is_none_or(|q| q > k)
    }
}

impl Serialize for BreakOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.finite().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BreakOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Option::<i64>::deserialize(d)?.map_or(BreakOrder::Canonical, BreakOrder::Finite))
    }
}

impl std::fmt::Display for BreakOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BreakOrder::Finite(q) => write!(f, "order {q}"),
            BreakOrder::Canonical => f.write_str("canonical"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakInfo {
    pub y: i64,
    pub order: BreakOrder,
    pub fundamental: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrideGenerator {
    pub basis: Basis,
    pub n: i64,
    pub p: i64,
    /// Ascending in `y`; never empty.
    pub breaks: Vec<BreakInfo>,
}

impl StrideGenerator {
    pub fn is_canonical(&self) -> bool {
        self.breaks.iter().all(|b| b.order == BreakOrder::Canonical)
    }

    pub fn first_break(&self) -> &BreakInfo {
        &self.breaks[0]
    }

    pub fn fundamental_breaks(&self) -> impl Iterator<Item = &BreakInfo> {
        self.breaks.iter().filter(|b| b.fundamental)
    }
}

impl std::fmt::Display for StrideGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SG({},{})", self.n, self.p)
    }
}

/// Largest order worth trying for a value below `a3`.
///
/// `ms(x + i*a3) - i` is beyond `n` once `i*(a3-a2) > n*a2`, and it grows
/// by `a3 - a2` when `i` grows by `a2`, so the least solution is below both.
pub fn order_cap(b: &Basis, n: i64) -> i64 {
    (n.saturating_mul(b.a2) / (b.a3 - b.a2)).min(b.a2 - 1)
}

/// Termination bound `J' = floor(((n-1)*a2 + a3) / (a3 - a2))` for break orders.
pub fn break_order_limit(b: &Basis, n: i64) -> i64 {
    ((n - 1).saturating_mul(b.a2).saturating_add(b.a3)) / (b.a3 - b.a2)
}

/// Smallest order `i <= cap` generating `x` at stamp parameter `n`.
pub fn min_order(b: &Basis, n: i64, x: i64, cap: i64) -> Option<i64> {
    (0..=cap).find(|&i| b.ms(x + i * b.a3) <= n + i)
}

/// True when `y` fails at budget `n+j-1` for every `j <= p+1`.
pub fn is_break(b: &Basis, n: i64, p: i64, y: i64) -> bool {
    0 < y && y < b.a3 && (0..=p + 1).all(|j| b.ms(y + j * b.a3) > n + j - 1)
}

fn is_fundamental(b: &Basis, n: i64, y: i64) -> bool {
    let lo = b.a3 - b.a2;
    lo <= y && y < lo + n
}

fn order_of_break(b: &Basis, n: i64, p: i64, y: i64) -> BreakOrder {
    // Periodicity in `a2` makes anything past p+1+a2 redundant; J' is the
    // proven bound. Both give the same answer, the min is just cheaper.
    let hi = break_order_limit(b, n).min(p + 1 + b.a2);
    (p + 2..=hi)
        .find(|&j| b.ms(y + j * b.a3) <= n + j - 1)
        .map_or(BreakOrder::Canonical, BreakOrder::Finite)
}

/// Classify `basis` at stamp parameter `n`; `None` unless SG1–SG3 hold.
pub fn classify(basis: &Basis, n: i64) -> Option<StrideGenerator> {
    if n < 1 || basis.validate().is_err() {
        return None;
    }
    let p = sg1_order(basis, n)?;
    let breaks: Vec<BreakInfo> = (1..basis.a3)
        .filter(|&y| is_break(basis, n, p, y))
        .map(|y| BreakInfo {
            y,
            order: order_of_break(basis, n, p, y),
            fundamental: is_fundamental(basis, n, y),
        })
        .collect();
    if breaks.is_empty() {
        return None;
    }
    Some(StrideGenerator { basis: *basis, n, p, breaks })
}

/// Maximum over `0 < x < a3` of the minimal order, if every value has one (SG1).
pub fn sg1_order(b: &Basis, n: i64) -> Option<i64> {
    let cap = order_cap(b, n);
    let mut p = 0;
    for x in 1..b.a3 {
        p = p.max(min_order(b, n, x, cap)?);
    }
    Some(p)
}

/// Order `p` if `basis` is an `SG(n,p)` with `p <= p_max`, else `None`.
///
/// Same answer as [`classify`] restricted to `p <= p_max`, but walks
/// threads instead of single values: a generation of `x` at order `i`
/// with `slack` spare stamps also generates `x+1 ..= x+slack` by adding
/// ones, so those need not be visited. Used by the enumerators.
pub fn sg_order(basis: &Basis, n: i64, p_max: i64) -> Option<i64> {
    if n < 1 {
        return None;
    }
    let b = basis;
    let cap = order_cap(b, n).min(p_max);
    let mut p = 0;
    let mut x = 1;
    while x < b.a3 {
        let (i, slack) = (0..=cap).find_map(|i| {
            let slack = n + i - b.ms(x + i * b.a3);
            (slack >= 0).then_some((i, slack))
        })?;
        p = p.max(i);
        x += slack + 1;
    }
    // A break exists iff some y in (0,a3) escapes every shortened thread.
    let mut y = 1;
    while y < b.a3 {
        let slack = (0..=p + 1).map(|j| n + j - 1 - b.ms(y + j * b.a3)).max().unwrap_or(-1);
        if slack < 0 {
            return Some(p);
        }
        y += slack + 1;
    }
    None
}

/// Order of break `y` for `SG(n,p)`; rejects values that are not breaks.
pub fn break_order(basis: &Basis, n: i64, p: i64, y: i64) -> Result<BreakInfo> {
    basis.validate()?;
    if !is_break(basis, n, p, y) {
        return Err(Error::Rejected(format!("{y} is not a break of {basis} at n={n}, p={p}")));
    }
    Ok(BreakInfo { y, order: order_of_break(basis, n, p, y), fundamental: is_fundamental(basis, n, y) })
}

/// Largest `n` at which a break is possible: a break needs `ms(y) >= n`.
fn series_n_max(b: &Basis) -> i64 {
    (1..b.a3).map(|y| b.ms(y)).max().unwrap_or(0)
}

/// Every stride generator defined by `basis`, by decreasing `n`.
pub fn sg_series(basis: &Basis) -> Vec<StrideGenerator> {
    if basis.validate().is_err() {
        return Vec::new();
    }
    (1..=series_n_max(basis))
        .rev()
        .filter(|&n| sg_order(basis, n, i64::MAX).is_some())
        .filter_map(|n| classify(basis, n))
        .collect()
}

/// The stride generator `SG(s-k, p)` underlying a non-trivial cover.
pub fn underlying_sg(basis: &Basis, s: i64) -> Result<(StrideGenerator, i64)> {
    let cover = cover3(basis, s)?;
    if cover.is_trivial() {
        return Err(Error::Rejected(format!("cover of {basis} at s={s} is trivial (X={})", cover.x)));
    }
    let k = cover.k;
    let sg = classify(basis, s - k)
        .ok_or_else(|| Error::Inconsistent(format!("{basis} is not an SG at n={} (s={s}, k={k})", s - k)))?;
    if sg.p > k {
        return Err(Error::Inconsistent(format!("{sg} of {basis} has p > k={k}")));
    }
    let y = sg
        .breaks
        .iter()
        .find(|br| br.order.exceeds(k + 1))
        .ok_or_else(|| Error::Inconsistent(format!("{sg} of {basis}: no break of order > {}", k + 1)))?
        .y;
    if cover.x != (k + 1) * basis.a3 + y - 1 {
        return Err(Error::Inconsistent(format!("{basis} s={s}: cover {} but break gives {}", cover.x, (k + 1) * basis.a3 + y - 1)));
    }
    Ok((sg, k))
}

/// `(s - n + 1)*a3 + y - 1` with `y` the first break.
pub fn potential_cover(sg: &StrideGenerator, s: i64) -> Result<i64> {
    if s < sg.n {
        return Err(Error::range("stamp budget", format!("s = {s} < n = {}", sg.n)));
    }
    (s - sg.n + 1)
        .checked_mul(sg.basis.a3)
        .and_then(|v| v.checked_add(sg.first_break().y - 1))
        .ok_or(Error::Overflow("potential cover"))
}

/// `{1, (k-1)n, kn}`, an `n`-stride generator of length `kn`.
pub fn construct_long_sg(n: i64, k: i64) -> Result<Basis> {
    if n <= 1 || k <= 1 {
        return Err(Error::range("long SG parameters", format!("n = {n}, k = {k}; need both > 1")));
    }
    let a2 = (k - 1).checked_mul(n).ok_or(Error::Overflow("construct_long_sg"))?;
    let a3 = k.checked_mul(n).ok_or(Error::Overflow("construct_long_sg"))?;
    Basis::new(a2, a3)
}
