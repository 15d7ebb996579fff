use std::sync::atomic::{AtomicI64, AtomicU64, Ordering::Relaxed};

use psp_core::{cover2, cover3, m2, Basis, Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::Guard;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct M3 {
    pub s: i64,
    #[serde(rename = "M")]
    pub m: i64,
    /// Every maximal basis, sorted by `(a2, a3)`.
    pub bases: Vec<Basis>,
    pub examined: u64,
    pub pruned: u64,
}

/// `M(3,s)` and all maximal bases by exhaustive search.
///
/// Only `a2 <= s+2` and `a3 <= C({1,a2},s) + 1` can beat `M(2,s)`: otherwise
/// some value below `a3` is out of reach of `{1,a2}`. Within an `a2` the
/// `a3` loop runs downwards and stops once `s*a3` (the largest value `s`
/// stamps reach) falls below the best cover found so far.
pub fn brute_m3(s: i64, guard: &Guard) -> Result<M3> {
    if s < 1 {
        return Err(Error::range("s", format!("s = {s}")));
    }
    guard.check_s(s)?;
    let (m2s, _) = m2(s)?;
    // Seeding with M(2,s)+1 prunes harder and doubles as the check M3 > M2.
    let best = AtomicI64::new(m2s + 1);
    let (examined, pruned) = (AtomicU64::new(0), AtomicU64::new(0));
    let parts: Vec<Vec<(i64, Basis)>> = (2..=s + 2)
        .into_par_iter()
        .map(|a2| {
            let hi = cover2(a2, s)? + 1;
            let mut found = Vec::new();
            for a3 in (a2 + 1..=hi).rev() {
                if s * a3 < best.load(Relaxed) {
                    pruned.fetch_add((a3 - a2) as u64, Relaxed);
                    break;
                }
                examined.fetch_add(1, Relaxed);
                let basis = Basis { a2, a3 };
                let x = cover3(&basis, s)?.x;
                if x >= best.load(Relaxed) {
                    best.fetch_max(x, Relaxed);
                    found.push((x, basis));
                }
            }
            Ok(found)
        })
        .collect::<Result<_>>()?;
    let all: Vec<(i64, Basis)> = parts.into_iter().flatten().collect();
    let m = all.iter().map(|&(x, _)| x).max().ok_or_else(|| Error::Inconsistent(format!("no basis beats M(2,{s}) = {m2s}")))?;
    let mut bases: Vec<Basis> = all.into_iter().filter(|&(x, _)| x == m).map(|(_, b)| b).collect();
    bases.sort();
    Ok(M3 { s, m, bases, examined: examined.into_inner(), pruned: pruned.into_inner() })
}
