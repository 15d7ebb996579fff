//! Structural laws every stride generator obeys, as checkers returning a
//! description of the first violation. Shared by unit, property and
//! acceptance tests.

use psp_core::{cover3, Basis};

use crate::{potential_cover, underlying_sg, BreakOrder, StrideGenerator};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Break placement, fundamental-break count and canonicity laws.
pub fn check_breaks(sg: &StrideGenerator) -> Check {
    let Basis { a2, a3 } = sg.basis;
    let tag = || format!("{} = {sg}", sg.basis);
    ensure(!sg.breaks.is_empty(), || format!("{}: no breaks", tag()))?;
    ensure(sg.breaks.windows(2).all(|w| w[0].y < w[1].y), || format!("{}: breaks unsorted", tag()))?;
    for br in &sg.breaks {
        ensure(a3 - a2 <= br.y && br.y < a3, || format!("{}: break {} below a3-a2", tag(), br.y))?;
        if let BreakOrder::Finite(q) = br.order {
            ensure(q >= sg.p + 2, || format!("{}: break {} has order {q} <= p+1", tag(), br.y))?;
        }
        let fundamental = br.y < a3 - a2 + sg.n;
        ensure(br.fundamental == fundamental, || format!("{}: fundamental flag wrong at {}", tag(), br.y))?;
    }
    let nf = sg.fundamental_breaks().count();
    ensure((1..=2).contains(&nf), || format!("{}: {nf} fundamental breaks", tag()))?;

    let canon = sg.breaks.iter().filter(|b| b.order == BreakOrder::Canonical).count();
    ensure(canon == 0 || canon == sg.breaks.len(), || format!("{}: mixed canonical and finite breaks", tag()))?;
    if canon == 0 {
        let first = sg.breaks[0].order;
        ensure(sg.breaks[1..].iter().all(|b| b.order < first), || {
            format!("{}: first break order is not strictly highest", tag())
        })?;
    }
    if sg.p == 0 {
        ensure(canon == sg.breaks.len(), || format!("{}: order-0 SG with finite break", tag()))?;
    }

    if a3 > 2 * a2 {
        ensure(nf == sg.breaks.len(), || format!("{}: non-fundamental break with a3 > 2a2", tag()))?;
    }
    if a3 < 2 * a2 {
        // every later break continues a series from a fundamental one,
        // stepping by a3-a2 with break order dropping by one
        let step = a3 - a2;
        for br in sg.breaks.iter().filter(|b| !b.fundamental) {
            let prev = sg.breaks.iter().find(|b| b.y == br.y - step).ok_or_else(|| {
                format!("{}: break {} has no predecessor {}", tag(), br.y, br.y - step)
            })?;
            let expect = match prev.order {
                BreakOrder::Finite(q) => BreakOrder::Finite(q - 1),
                BreakOrder::Canonical => BreakOrder::Canonical,
            };
            ensure(br.order == expect, || format!("{}: break {} is {}, expected {expect}", tag(), br.y, br.order))?;
        }
    }
    Ok(())
}

/// Ordering laws of the full series of a basis.
pub fn check_series(basis: &Basis, series: &[StrideGenerator]) -> Check {
    ensure(!series.is_empty(), || format!("{basis}: empty series"))?;
    for w in series.windows(2) {
        ensure(w[1].n < w[0].n && w[1].p > w[0].p + 1, || format!("{basis}: {} then {}", w[0], w[1]))?;
    }
    let canon: Vec<bool> = series.iter().map(|sg| sg.is_canonical()).collect();
    ensure(canon.iter().rev().skip(1).all(|c| !c) && canon[canon.len() - 1], || {
        format!("{basis}: canonical flags {canon:?}")
    })?;
    if series.iter().any(|sg| sg.p == 0) {
        ensure(series.len() == 1, || format!("{basis}: order-0 SG alongside higher orders"))?;
    }
    Ok(())
}

/// Underlying SG exists and its potential cover is the actual cover.
pub fn check_underlying(basis: &Basis, s: i64) -> Check {
    let cover = cover3(basis, s).map_err(|e| e.to_string())?;
    if cover.is_trivial() {
        return Ok(());
    }
    let (sg, k) = underlying_sg(basis, s).map_err(|e| e.to_string())?;
    ensure(sg.n == s - k && sg.p <= k, || format!("{basis} s={s}: {sg} with k={k}"))?;
    let pc = potential_cover(&sg, s).map_err(|e| e.to_string())?;
    ensure(pc == cover.x, || format!("{basis} s={s}: potential {pc} != cover {}", cover.x))
}
