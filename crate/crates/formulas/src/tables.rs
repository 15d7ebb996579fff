use psp_core::{Basis, Error, Result};
use serde::{Deserialize, Serialize};

use crate::exact;

/// An optimal (or next-best) stride generator with its first break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OsgRow {
    pub n: i64,
    pub a2: i64,
    pub a3: i64,
    pub y: i64,
}

impl OsgRow {
    pub fn basis(&self) -> Basis {
        Basis { a2: self.a2, a3: self.a3 }
    }
}

/// Longest order-0 generators: one row for odd `n`, two (same `a3`) for even.
pub fn osg0(n: i64) -> Result<Vec<OsgRow>> {
    if n < 1 {
        return Err(Error::range("n", format!("n = {n}")));
    }
    let n2 = n * n;
    Ok(if n % 2 == 0 {
        let a3 = exact(n2 + 6 * n + 4, 4);
        vec![
            OsgRow { n, a2: exact(n + 2, 2), a3, y: exact(n2 + 4 * n, 4) },
            OsgRow { n, a2: exact(n + 4, 2), a3, y: exact(n2 + 4 * n - 4, 4) },
        ]
    } else {
        vec![OsgRow { n, a2: exact(n + 3, 2), a3: exact(n2 + 6 * n + 5, 4), y: exact(n2 + 4 * n - 1, 4) }]
    })
}

/// The longest order-1 generator for each `n`.
pub fn osg1(n: i64) -> Result<OsgRow> {
    if n < 1 {
        return Err(Error::range("n", format!("n = {n}")));
    }
    let n2 = n * n;
    Ok(match n % 3 {
        0 => OsgRow { n, a2: n + 4, a3: exact(n2 + 5 * n + 6, 3), y: exact(n2 + 3 * n - 9, 3) },
        1 => OsgRow { n, a2: n + 2, a3: exact(n2 + 5 * n + 6, 3), y: exact(n2 + 3 * n - 1, 3) },
        _ => OsgRow { n, a2: n + 3, a3: exact(n2 + 5 * n + 7, 3), y: exact(n2 + 3 * n - 4, 3) },
    })
}

/// Order-1 generators exactly one shorter than `osg1(n)`.
///
/// Empty for `n mod 3 = 2` (beyond `n = 2`) and for `n = 1`. At `n = 3`
/// the general row `{1,4,9}` and the small case `{1,6,9}` both qualify.
pub fn sg1_1(n: i64) -> Result<Vec<OsgRow>> {
    if n < 1 {
        return Err(Error::range("n", format!("n = {n}")));
    }
    let n2 = n * n;
    let mut rows = match n {
        1 => vec![],
        2 => vec![OsgRow { n, a2: 4, a3: 6, y: 3 }],
        3 => vec![OsgRow { n, a2: 6, a3: 9, y: 5 }],
        _ => vec![],
    };
    if n >= 3 {
        match n % 3 {
            0 => rows.push(OsgRow { n, a2: n + 1, a3: exact(n2 + 5 * n + 3, 3), y: exact(n2 + 3 * n, 3) }),
            1 => rows.push(OsgRow { n, a2: n + 5, a3: exact(n2 + 5 * n + 3, 3), y: exact(n2 + 3 * n - 16, 3) }),
            _ => {}
        }
    }
    rows.sort();
    Ok(rows)
}

/// Optimal stamp split for `M(3,s)` from the order-1 scan, `s = 9t + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoptRow {
    pub s: i64,
    pub t: i64,
    pub r: i64,
    pub k_opt: i64,
    pub n_opt: i64,
    #[serde(rename = "X_opt")]
    pub x_opt: i64,
}

fn split(s: i64) -> Result<(i64, i64)> {
    if s < 18 {
        return Err(Error::range("s", format!("s = {s}; closed forms hold for s >= 18")));
    }
    Ok((s / 9, s % 9))
}

pub fn mopt(s: i64) -> Result<MoptRow> {
    let (t, r) = split(s)?;
    let (t2, t3) = (t * t, t * t * t);
    let (k_opt, x_opt) = match r {
        0 => (3 * t - 1, 36 * t3 + 54 * t2 + 22 * t),
        1 => (3 * t, 36 * t3 + 66 * t2 + 36 * t + 4),
        2 => (3 * t, 36 * t3 + 78 * t2 + 53 * t + 8),
        3 => (3 * t + 1, 36 * t3 + 90 * t2 + 71 * t + 15),
        4 => (3 * t + 1, 36 * t3 + 102 * t2 + 92 * t + 22),
        5 => (3 * t + 1, 36 * t3 + 114 * t2 + 116 * t + 36),
        6 => (3 * t + 1, 36 * t3 + 126 * t2 + 143 * t + 49),
        7 => (3 * t + 2, 36 * t3 + 138 * t2 + 173 * t + 68),
        _ => (3 * t + 2, 36 * t3 + 150 * t2 + 204 * t + 86),
    };
    Ok(MoptRow { s, t, r, k_opt, n_opt: s - k_opt, x_opt })
}

/// `(n_opt, a2, a3)` of the generator behind `mopt(s)`, by residue.
pub fn optimal_sg(s: i64) -> Result<(i64, i64, i64)> {
    let (t, r) = split(s)?;
    let t2 = t * t;
    Ok(match r {
        0 | 1 => (6 * t + 1, 6 * t + 3, 12 * t2 + 14 * t + 4),
        2 | 3 => (6 * t + 2, 6 * t + 5, 12 * t2 + 18 * t + 7),
        4 => (6 * t + 3, 6 * t + 7, 12 * t2 + 22 * t + 10),
        5 => (6 * t + 4, 6 * t + 6, 12 * t2 + 26 * t + 14),
        6 | 7 => (6 * t + 5, 6 * t + 8, 12 * t2 + 30 * t + 19),
        _ => (6 * t + 6, 6 * t + 10, 12 * t2 + 34 * t + 24),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalSet {
    pub s: i64,
    pub a2: i64,
    pub a3: i64,
    #[serde(rename = "X_opt")]
    pub x_opt: i64,
}

impl MaximalSet {
    pub fn basis(&self) -> Basis {
        Basis { a2: self.a2, a3: self.a3 }
    }
}

/// Maximal set written as `a3 = C2*a2 + C1`, `X = α*a3 + β*a2 + γ`;
/// cross-checked against [`mopt`], [`optimal_sg`] and [`osg1`].
pub fn maximal_set(s: i64) -> Result<MaximalSet> {
    let (t, r) = split(s)?;
    // (a2, C2, C1, α, β, γ)
    let (a2, c2, c1, al, be, ga) = match r {
        0 => (6 * t + 3, 2 * t + 1, 2 * t + 1, 3 * t, 2 * t, 4 * t),
        1 => (6 * t + 3, 2 * t + 1, 2 * t + 1, 3 * t + 1, 2 * t, 4 * t),
        2 => (6 * t + 5, 2 * t + 1, 2 * t + 2, 3 * t + 1, 2 * t, 4 * t + 1),
        3 => (6 * t + 5, 2 * t + 1, 2 * t + 2, 3 * t + 2, 2 * t, 4 * t + 1),
        4 => (6 * t + 7, 2 * t + 1, 2 * t + 3, 3 * t + 2, 2 * t, 4 * t + 2),
        5 => (6 * t + 6, 2 * t + 2, 2 * t + 2, 3 * t + 2, 2 * t + 1, 4 * t + 2),
        6 => (6 * t + 8, 2 * t + 2, 2 * t + 3, 3 * t + 2, 2 * t + 1, 4 * t + 3),
        7 => (6 * t + 8, 2 * t + 2, 2 * t + 3, 3 * t + 3, 2 * t + 1, 4 * t + 3),
        _ => (6 * t + 10, 2 * t + 2, 2 * t + 4, 3 * t + 3, 2 * t + 1, 4 * t + 4),
    };
    let a3 = c2 * a2 + c1;
    let x_opt = al * a3 + be * a2 + ga;
    let m = mopt(s)?;
    let (n_opt, oa2, oa3) = optimal_sg(s)?;
    let o1 = osg1(m.n_opt)?;
    let consistent = x_opt == m.x_opt
        && n_opt == m.n_opt
        && (oa2, oa3) == (a2, a3)
        && (o1.a2, o1.a3) == (a2, a3)
        && x_opt == (m.k_opt + 1) * a3 + o1.y - 1;
    if !consistent {
        return Err(Error::Inconsistent(format!("maximal set tables disagree at s = {s}")));
    }
    Ok(MaximalSet { s, a2, a3, x_opt })
}
