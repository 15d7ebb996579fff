use std::collections::BTreeSet;

use psp_core::{Error, Result};
use psp_stride::StrideGenerator;
use serde::{Deserialize, Serialize};

use crate::{thread_at, Thread};

/// Orders of the threads starting in `[0, a2)`, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub orders: Vec<i64>,
    /// Second element; absent for order 0.
    pub key: Option<i64>,
    pub threads: Vec<Thread>,
}

/// One thread of each order `0..=p` starts in `[0, a2)`, at
/// `c2 = ceil(i*a3 / a2)`.
pub fn signature(sg: &StrideGenerator) -> Result<Signature> {
    let b = &sg.basis;
    let mut threads = Vec::with_capacity(sg.p as usize + 1);
    for i in 0..=sg.p {
        let c2 = (i * b.a3 + b.a2 - 1) / b.a2;
        let t = thread_at(b, sg.n, i, c2)
            .ok_or_else(|| Error::Inconsistent(format!("{} of {b}: no {i}-thread starts in [0, a2)", sg)))?;
        threads.push(t);
    }
    threads.sort_by_key(|t| (t.start, t.i));
    let orders: Vec<i64> = threads.iter().map(|t| t.i).collect();
    let key = orders.get(1).copied();
    Ok(Signature { orders, key, threads })
}

/// `(order gap, start gap)` between successive threads of the signature
/// window, wrapping from the last thread to `T_0(1)` at `a2`.
pub fn relative_positions(sg: &StrideGenerator) -> Result<BTreeSet<(i64, i64)>> {
    if sg.p <= 1 {
        return Err(Error::Rejected(format!("relative positions need p > 1, got {sg}")));
    }
    let sig = signature(sg)?;
    let mut pts: Vec<(i64, i64)> = sig.threads.iter().map(|t| (t.i, t.start)).collect();
    pts.push((0, sg.basis.a2));
    Ok(pts.windows(2).map(|w| (w[1].0 - w[0].0, w[1].1 - w[0].1)).collect())
}

/// `floor(p*C1 / a2)`, reported alongside the key; no law ties the two.
pub fn key_m_diagnostic(sg: &StrideGenerator) -> i64 {
    let (_, c1) = sg.basis.c2c1();
    sg.p * c1 / sg.basis.a2
}
