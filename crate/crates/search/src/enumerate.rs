use psp_core::{Basis, Error, Result};
use psp_formulas::{a2_bounds, a3_upper};
use psp_stride::{classify, sg_order, StrideGenerator};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

fn check(n: i64, p_min: i64, p_max: i64) -> Result<()> {
    if n < 1 || p_min < 0 || p_min > p_max {
        return Err(Error::range("enumeration", format!("n = {n}, p = {p_min}..={p_max}")));
    }
    Ok(())
}

fn a3_max(n: i64, p_max: i64) -> Result<i64> {
    Ok(a3_upper(n, p_max)?.floor().to_integer())
}

/// Every `SG(n,p)`, `p_min <= p <= p_max`, of length `a3`.
fn sgs_at(n: i64, p_min: i64, p_max: i64, a3: i64) -> Result<Vec<StrideGenerator>> {
    // Lower a2 bound grows with p, upper bound too: take the loosest of each.
    let lo = a2_bounds(n, p_min, a3)?.0.ceil().to_integer().max(2);
    let hi = a2_bounds(n, p_max, a3)?.1.min(a3 - 1);
    let mut out = Vec::new();
    for a2 in lo..=hi {
        let basis = Basis { a2, a3 };
        let Some(q) = sg_order(&basis, n, p_max) else { continue };
        if q < p_min {
            continue;
        }
        match classify(&basis, n) {
            Some(sg) if sg.p == q => out.push(sg),
            other => {
                return Err(Error::Inconsistent(format!(
                    "{basis} at n={n}: fast order {q}, full classification {:?}",
                    other.map(|sg| sg.p)
                )))
            }
        }
    }
    Ok(out)
}

/// All `SG(n,p)` with `p_min <= p <= p_max`, sorted by `(a2, a3)`.
pub fn enumerate_sg(n: i64, p_min: i64, p_max: i64) -> Result<Vec<StrideGenerator>> {
    check(n, p_min, p_max)?;
    enumerate_sg_in(n, p_min, p_max, 3, a3_max(n, p_max)?)
}

/// [`enumerate_sg`] restricted to `a3_lo <= a3 <= a3_hi`.
pub fn enumerate_sg_in(n: i64, p_min: i64, p_max: i64, a3_lo: i64, a3_hi: i64) -> Result<Vec<StrideGenerator>> {
    check(n, p_min, p_max)?;
    let hi = a3_hi.min(a3_max(n, p_max)?);
    let parts: Vec<Vec<StrideGenerator>> =
        (a3_lo.max(3)..=hi).into_par_iter().map(|a3| sgs_at(n, p_min, p_max, a3)).collect::<Result<_>>()?;
    let mut all: Vec<StrideGenerator> = parts.into_iter().flatten().collect();
    all.sort_by_key(|sg| sg.basis);
    Ok(all)
}

/// The longest `SG(n,p)` and its ties, each with its first break.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Osg {
    pub n: i64,
    pub p: i64,
    pub a3: i64,
    pub bases: Vec<(Basis, i64)>,
}

const BLOCK: i64 = 32;

/// Longest `SG(n,p)`: scans `a3` down from the upper bound in blocks,
/// stopping at the first block with a hit.
pub fn best_osg(n: i64, p: i64) -> Result<Option<Osg>> {
    check(n, p, p)?;
    let mut top = a3_max(n, p)?;
    while top >= 3 {
        let lo = (top - BLOCK + 1).max(3);
        let hits: Vec<(i64, Vec<StrideGenerator>)> = (lo..=top)
            .into_par_iter()
            .map(|a3| Ok((a3, sgs_at(n, p, p, a3)?)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|(_, v)| !v.is_empty())
            .collect();
        if let Some((a3, sgs)) = hits.into_iter().last() {
            let bases = sgs.iter().map(|sg| (sg.basis, sg.first_break().y)).collect();
            return Ok(Some(Osg { n, p, a3, bases }));
        }
        top = lo - 1;
    }
    Ok(None)
}
