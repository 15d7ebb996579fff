use std::collections::BTreeSet;

use psp_core::{Basis, Error, Result};
use psp_stride::classify;
use psp_threads::signature;
use serde::{Deserialize, Serialize};

/// Where the break sits relative to the end of the threads, by key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    /// key 1, break at the end of the `(p-1)`-thread
    A1,
    /// key 1, break at the end of the `p`-thread
    B1,
    /// key `p`, break at the end of the 0-thread
    A2,
    /// key `p`, break at the end of the `p`-thread
    B2,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::A1, Case::B1, Case::A2, Case::B2];

    pub fn label(self) -> &'static str {
        match self {
            Case::A1 => "1a",
            Case::B1 => "1b",
            Case::A2 => "2a",
            Case::B2 => "2b",
        }
    }

    fn key(self, p: i64) -> i64 {
        match self {
            Case::A1 | Case::B1 => 1,
            Case::A2 | Case::B2 => p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Key1pCases {
    pub n: i64,
    pub p: i64,
    /// `(basis, first break)` per case, in [`Case::ALL`] order, sorted.
    pub cases: [Vec<(Basis, i64)>; 4],
    /// Candidates the constraints admitted but classification refused.
    pub rejected: u64,
}

impl Key1pCases {
    pub fn counts(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|i| self.cases[i].len())
    }

    pub fn union(&self) -> BTreeSet<Basis> {
        self.cases.iter().flatten().map(|&(b, _)| b).collect()
    }

    fn best(&self, idx: [usize; 2]) -> Vec<Basis> {
        let all: BTreeSet<Basis> = idx.iter().flat_map(|&i| self.cases[i].iter().map(|&(b, _)| b)).collect();
        let top = all.iter().map(|b| b.a3).max();
        all.into_iter().filter(|b| Some(b.a3) == top).collect()
    }

    /// Longest key-1 generators (ties included).
    pub fn best_key1(&self) -> Vec<Basis> {
        self.best([0, 1])
    }

    /// Longest key-`p` generators (ties included).
    pub fn best_keyp(&self) -> Vec<Basis> {
        self.best([2, 3])
    }
}

/// Closed constraint systems for each case, as `(C2, C1)` candidates at `a2`.
fn candidates(n: i64, p: i64, a2: i64) -> Vec<(Case, i64, i64)> {
    let mut out = Vec::new();
    let c2_lo = (n - a2 + 3).max(1);
    let div = |v: i64| (v.rem_euclid(p) == 0).then_some(v.div_euclid(p));
    for c2 in c2_lo..=(n + 2) / (p + 1) {
        let c1 = a2 + p * c2 - 2 - n;
        if p * c1 > (p - 1) * a2 && (p + 1) * c1 <= p * a2 - c2 {
            out.push((Case::A1, c2, c1));
        }
        if let Some(c1) = div((p - 1) * a2 + n + 2 - (p + 1) * c2) {
            if (p + 1) * c1 >= p * a2 - c2 && (p + 1) * c1 <= p * a2 {
                out.push((Case::B1, c2, c1));
            }
        }
    }
    for c2 in c2_lo..=(n + p + 1) / (p + 1) {
        if let Some(c1) = div(a2 + c2 - n - 2) {
            if (p + 1) * (c1 + c2) >= a2 + p && (p + 1) * c1 <= a2 - p * c2 + p - 1 {
                out.push((Case::A2, c2, c1));
            }
        }
        let c1 = n + p + 1 - (p + 1) * c2;
        if (p + 1) * c1 >= a2 - p * c2 + p - 1 && (p - 1) * c1 < a2 + c2 - n - 2 {
            out.push((Case::B2, c2, c1));
        }
    }
    out
}

/// All `SG(n,p)` with key 1 or `p`, split into the four break-placement
/// cases. Each candidate from the constraint systems is re-classified, so
/// a wrong constraint can lose generators but never invent one.
pub fn enumerate_key1p(n: i64, p: i64) -> Result<Key1pCases> {
    if p < 2 || n < 1 {
        return Err(Error::range("enumerate_key1p", format!("n = {n}, p = {p}; need p >= 2")));
    }
    let mut cases: [Vec<(Basis, i64)>; 4] = Default::default();
    let mut rejected = 0;
    for a2 in 2..=n * (p + 1) + 1 {
        for (case, c2, c1) in candidates(n, p, a2) {
            let basis = Basis { a2, a3: c2 * a2 + c1 };
            if c1 < 0 || c1 >= a2 || basis.validate().is_err() {
                continue;
            }
            let accepted = classify(&basis, n)
                .filter(|sg| sg.p == p)
                .filter(|sg| signature(sg).ok().and_then(|s| s.key) == Some(case.key(p)));
            match accepted {
                Some(sg) => cases[case as usize].push((basis, sg.first_break().y)),
                None => rejected += 1,
            }
        }
    }
    for c in &mut cases {
        c.sort();
        c.dedup();
    }
    Ok(Key1pCases { n, p, cases, rejected })
}
