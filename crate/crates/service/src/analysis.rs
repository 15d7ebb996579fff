use psp_core::{cover3, Basis, CoverResult, Result};
use psp_stride::{classify, order_cap, sg1_order, BreakInfo};
use psp_threads::{diagram, signature, DiagramThread};
use serde::{Deserialize, Serialize};

/// Orders drawn when a basis has no `SG1` order at `n`.
const FALLBACK_ORDERS: i64 = 4;

/// Full analysis of `{1,a2,a3}` at `n`: the JSON document shared by the
/// CLI and the service.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub basis: Basis,
    pub n: i64,
    /// Order of the generator; when not an SG, the largest minimal order
    /// if every value has one, else null.
    pub p: Option<i64>,
    pub is_sg: bool,
    pub breaks: Vec<BreakInfo>,
    pub canonical: bool,
    pub window: [i64; 2],
    pub threads: Vec<DiagramThread>,
    /// Uncovered values of the window below `2*a3`.
    pub marks: Vec<i64>,
    pub signature: Option<Vec<i64>>,
    pub key: Option<i64>,
    pub cover: Option<CoverResult>,
}

/// Analyse over `[from, to)`, defaulting to `[0, 2*a3)`; geometry is filled
/// in even when the basis is not a stride generator at `n`.
pub fn analyze(basis: &Basis, n: i64, s: Option<i64>, window: Option<(i64, i64)>) -> Result<Analysis> {
    basis.validate()?;
    let (from, to) = window.unwrap_or((0, 2 * basis.a3));
    let sg = classify(basis, n);
    let p = sg.as_ref().map(|sg| sg.p).or_else(|| sg1_order(basis, n));
    let drawn = p.unwrap_or_else(|| order_cap(basis, n).min(FALLBACK_ORDERS));
    let d = diagram(basis, n, drawn, from, to);
    let sig = sg.as_ref().map(signature).transpose()?;
    let cover = s.map(|s| cover3(basis, s)).transpose()?;
    Ok(Analysis {
        basis: *basis,
        n,
        p,
        is_sg: sg.is_some(),
        canonical: sg.as_ref().is_some_and(|sg| sg.is_canonical()),
        breaks: sg.map(|sg| sg.breaks).unwrap_or_default(),
        window: [from, to],
        threads: d.threads,
        marks: d.marks,
        key: sig.as_ref().and_then(|s| s.key),
        signature: sig.map(|s| s.orders),
        cover,
    })
}
