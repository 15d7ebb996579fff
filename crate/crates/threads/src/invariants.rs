//! Geometric laws of stride generators, as checkers.

use psp_core::Basis;
use psp_stride::StrideGenerator;

use crate::{check_no_covered_threads, relative_positions, sg_threads, signature, thread_at, threads_in};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// The three series laws, wherever both threads lie in the SG.
pub fn check_series_laws(sg: &StrideGenerator) -> Check {
    let b = &sg.basis;
    let (c2_, c1_) = b.c2c1();
    let inside = |i: i64, c2: i64| thread_at(b, sg.n, i, c2).filter(|t| t.start < b.a3 && t.end >= 0);
    for t in sg_threads(b, sg.n, sg.p) {
        if let Some(u) = inside(t.i, t.c2 + 1) {
            ensure(u.start == t.start + b.a2 && u.len == t.len - 1, || format!("{b}: same-order series at {t:?}"))?;
        }
        if t.i >= 1 {
            if let Some(u) = inside(t.i - 1, t.c2 - c2_) {
                ensure(u.start == t.start + c1_ && u.len == t.len + c2_ - 1, || format!("{b}: C2-series at {t:?}"))?;
            }
            if let Some(u) = inside(t.i - 1, t.c2 - 1) {
                ensure(u.start == t.start + b.a3 - b.a2 && u.len == t.len, || format!("{b}: diagonal series at {t:?}"))?;
            }
        }
    }
    Ok(())
}

/// Every thread slot below `a3` of order `<= p` is filled, exactly one
/// `k`-thread starts in `[a3-a2, a3)`, and every `0 < x < a3` is covered.
pub fn check_positions(sg: &StrideGenerator) -> Check {
    let b = &sg.basis;
    for k in 0..=sg.p {
        // largest c2 with start < a3; shorter threads are all to its left
        let c2 = (b.a3 - 1 + k * b.a3).div_euclid(b.a2);
        let top = thread_at(b, sg.n, k, c2).ok_or_else(|| format!("{b} {sg}: slot T_{k}({c2}) empty"))?;
        ensure(top.start >= b.a3 - b.a2, || format!("{b} {sg}: no {k}-thread starts in the last a2 values"))?;
    }
    let ts = sg_threads(b, sg.n, sg.p);
    for x in 1..b.a3 {
        ensure(ts.iter().any(|t| t.covers(x)), || format!("{b} {sg}: {x} uncovered"))?;
    }
    Ok(())
}

pub fn check_no_covered(sg: &StrideGenerator) -> Check {
    ensure(check_no_covered_threads(sg), || format!("{} {sg}: a thread is covered", sg.basis))
}

/// Signature laws: permutation, arithmetic progression by the key, key
/// coprime to `p+1`, last + second = `p+1`, two relative positions.
pub fn check_signature(sg: &StrideGenerator) -> Check {
    let b = &sg.basis;
    let sig = signature(sg).map_err(|e| e.to_string())?;
    let m = sg.p + 1;
    let mut sorted = sig.orders.clone();
    sorted.sort();
    ensure(sorted == (0..m).collect::<Vec<_>>() && sig.orders[0] == 0, || format!("{b} {sg}: signature {:?}", sig.orders))?;
    if sg.p == 0 {
        return ensure(sig.key.is_none(), || format!("{b} {sg}: key on order 0"));
    }
    let key = sig.key.ok_or_else(|| format!("{b} {sg}: no key"))?;
    ensure(gcd(key, m) == 1, || format!("{b} {sg}: key {key} shares a factor with {m}"))?;
    for (idx, &o) in sig.orders.iter().enumerate() {
        ensure(o == (idx as i64 * key) % m, || format!("{b} {sg}: signature {:?} not multiples of {key}", sig.orders))?;
    }
    ensure(sig.orders[sg.p as usize] + key == m, || format!("{b} {sg}: last + key != p+1"))?;
    if sg.p > 1 {
        let rel = relative_positions(sg).map_err(|e| e.to_string())?;
        let gaps: Vec<i64> = rel.iter().map(|r| r.0).collect();
        ensure(rel.len() == 2 && gaps.contains(&key) && gaps.contains(&(key - m)), || {
            format!("{b} {sg}: relative positions {rel:?}")
        })?;
    }
    Ok(())
}

/// Geometric break list equals the classifier's.
pub fn check_breaks_geometry(sg: &StrideGenerator) -> Check {
    let geo = crate::geometric_breaks(&sg.basis, sg.n, sg.p);
    let cls: Vec<(i64, Option<i64>)> = sg.breaks.iter().map(|br| (br.y, br.order.finite())).collect();
    ensure(geo == cls, || format!("{} {sg}: geometry {geo:?} vs classify {cls:?}", sg.basis))
}

/// Diagram marks in the second stride are exactly the breaks.
pub fn check_diagram(sg: &StrideGenerator) -> Check {
    let b: &Basis = &sg.basis;
    let d = crate::diagram(b, sg.n, sg.p, 0, 2 * b.a3);
    let ys: Vec<i64> = sg.breaks.iter().map(|br| br.y).collect();
    ensure(d.marks.iter().all(|&x| x >= b.a3) && d.breaks() == ys, || format!("{b} {sg}: marks {:?}", d.marks))?;
    let core: usize = d.threads.iter().filter(|t| t.thread.i >= 0 && t.thread.i <= sg.p && t.thread.start < b.a3).count();
    ensure(core == (0..=sg.p).map(|i| threads_in(b, sg.n, i, 0, b.a3).len()).sum::<usize>(), || format!("{b}: diagram thread count"))
}

pub fn check_all(sg: &StrideGenerator) -> Check {
    check_series_laws(sg)?;
    check_positions(sg)?;
    check_no_covered(sg)?;
    check_signature(sg)?;
    check_breaks_geometry(sg)?;
    check_diagram(sg)
}
