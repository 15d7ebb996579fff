use psp_core::{Basis, Error, Result};
use psp_formulas::{mopt, osg1};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub k: i64,
    pub n: i64,
    pub basis: Basis,
    #[serde(rename = "Y")]
    pub y_cap: i64,
    /// `(k+1)*a3`
    pub base: i64,
    #[serde(rename = "X")]
    pub x: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scan {
    pub s: i64,
    pub rows: Vec<ScanRow>,
    /// Index into `rows` of the first maximum.
    pub argmax: usize,
}

impl Scan {
    pub fn best(&self) -> &ScanRow {
        &self.rows[self.argmax]
    }
}

/// Potential cover of `OSG(s-k, 1)` for each `k` in `k_lo..=k_hi`.
///
/// With the full range and `s >= 18` the maximum is checked against [`mopt`].
pub fn scan_osg1_cover(s: i64, k_range: Option<(i64, i64)>) -> Result<Scan> {
    if s < 4 {
        return Err(Error::range("s", format!("s = {s}; the scan needs s >= 4")));
    }
    let (k_lo, k_hi) = k_range.unwrap_or((0, s - 1));
    if k_lo < 0 || k_hi >= s || k_lo > k_hi {
        return Err(Error::range("k", format!("{k_lo}..={k_hi} for s = {s}")));
    }
    let rows = (k_lo..=k_hi)
        .map(|k| {
            let o = osg1(s - k)?;
            let base = (k + 1) * o.a3;
            Ok(ScanRow { k, n: o.n, basis: o.basis(), y_cap: o.y - 1, base, x: base + o.y - 1 })
        })
        .collect::<Result<Vec<_>>>()?;
    let top = rows.iter().map(|r| r.x).max().unwrap_or(0);
    let argmax = rows.iter().position(|r| r.x == top).unwrap_or(0);
    if s >= 18 && k_range.is_none() {
        let m = mopt(s)?;
        if top != m.x_opt || rows[m.k_opt as usize].x != top {
            return Err(Error::Inconsistent(format!("scan at s={s}: max {top}, closed form k={} X={}", m.k_opt, m.x_opt)));
        }
    }
    Ok(Scan { s, rows, argmax })
}
