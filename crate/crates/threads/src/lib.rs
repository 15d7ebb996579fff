//! Thread geometry of stride generators.
//!
//! An `i`-thread `T_i(c2)` is the run of values `x` with
//! `x + i*a3 = c2*a2 + c1`, `c2 + c1 <= n + i`: it starts at
//! `c2*a2 - i*a3` and has length `n + i - c2 + 1`. Nothing here calls the
//! cover routines, so the geometry doubles as an oracle for `psp-stride`.

pub mod invariants;
mod signature;

use psp_core::Basis;
use serde::{Deserialize, Serialize};

pub use signature::{key_m_diagnostic, relative_positions, signature, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Thread {
    pub i: i64,
    pub c2: i64,
    pub start: i64,
    pub end: i64,
    pub len: i64,
}

impl Thread {
    /// `start <= x <= end`
    pub fn covers(&self, x: i64) -> bool {
        self.start <= x && x <= self.end
    }

    /// `start <= x < end`: covers both `x` and `x+1`.
    pub fn crosses(&self, x: i64) -> bool {
        self.start <= x && x < self.end
    }

    /// Covered in the sense that `other` spans this thread entirely.
    pub fn is_covered_by(&self, other: &Thread) -> bool {
        self.i != other.i && self.start >= other.start && self.end <= other.end
    }
}

/// `T_i(c2)` at stamp parameter `n`, if its length is positive.
///
/// Order `-1` is allowed: those threads start at `c2*a2 + a3` and mark
/// what order-0 generation reaches inside the next stride.
pub fn thread_at(b: &Basis, n: i64, i: i64, c2: i64) -> Option<Thread> {
    if c2 < 0 || i < -1 {
        return None;
    }
    let len = n + i - c2 + 1;
    if len < 1 {
        return None;
    }
    let start = c2 * b.a2 - i * b.a3;
    Some(Thread { i, c2, start, end: start + len - 1, len })
}

/// All `i`-threads meeting the half-open window `[from, to)`, by `c2`.
pub fn threads_in(b: &Basis, n: i64, i: i64, from: i64, to: i64) -> Vec<Thread> {
    if to <= from || i < -1 {
        return Vec::new();
    }
    // start <= to-1  <=>  c2 <= (to-1 + i*a3) / a2
    let hi = (to - 1 + i * b.a3).div_euclid(b.a2).min(n + i);
    // end >= from  <=>  c2*(a2-1) >= from + i*a3 - n - i
    let need = from + i * b.a3 - n - i;
    let lo = (need + b.a2 - 2).div_euclid(b.a2 - 1).max(0);
    (lo..=hi).filter_map(|c2| thread_at(b, n, i, c2)).filter(|t| t.end >= from && t.start < to).collect()
}

/// The threads of `SG(n,p)` itself: orders `0..=p` with `start < a3`, `end >= 0`.
pub fn sg_threads(b: &Basis, n: i64, p: i64) -> Vec<Thread> {
    (0..=p).flat_map(|i| threads_in(b, n, i, 0, b.a3)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layer {
    /// order -1, the start of the next stride
    Below,
    Core,
    /// order p+1, shown to read off break orders
    Above,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramThread {
    #[serde(flatten)]
    pub thread: Thread,
    pub layer: Layer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreadDiagram {
    pub basis: Basis,
    pub n: i64,
    pub p: i64,
    pub from: i64,
    pub to: i64,
    /// Sorted by `(i, c2)`; orders `-1 ..= p+1`.
    pub threads: Vec<DiagramThread>,
    /// Values in `(0, 2*a3)` covered by no thread of order `-1 ..= p`.
    pub marks: Vec<i64>,
}

impl ThreadDiagram {
    /// Marks inside the second stride, shifted back to break values.
    pub fn breaks(&self) -> Vec<i64> {
        self.marks.iter().filter(|&&x| x >= self.basis.a3).map(|x| x - self.basis.a3).collect()
    }
}

/// Thread diagram over the half-open window `[from, to)`.
pub fn diagram(b: &Basis, n: i64, p: i64, from: i64, to: i64) -> ThreadDiagram {
    let mut threads = Vec::new();
    for i in -1..=p + 1 {
        let layer = match i {
            -1 => Layer::Below,
            i if i > p => Layer::Above,
            _ => Layer::Core,
        };
        threads.extend(threads_in(b, n, i, from, to).into_iter().map(|thread| DiagramThread { thread, layer }));
    }
    let lo = from.max(1);
    let hi = to.min(2 * b.a3);
    let mut marks = Vec::new();
    if lo < hi {
        let width = (hi - lo) as usize;
        let mut depth = vec![0i32; width + 1];
        for t in threads.iter().filter(|t| t.layer != Layer::Above) {
            let (s, e) = (t.thread.start.max(lo), t.thread.end.min(hi - 1));
            if s <= e {
                depth[(s - lo) as usize] += 1;
                depth[(e - lo) as usize + 1] -= 1;
            }
        }
        let mut run = 0;
        for (k, d) in depth[..width].iter().enumerate() {
            run += d;
            if run == 0 {
                marks.push(lo + k as i64);
            }
        }
    }
    ThreadDiagram { basis: *b, n, p, from, to, threads, marks }
}

/// Breaks read off the geometry: values `0 < y < a3` crossed by no thread
/// of order `<= p+1`, each with the order of the first thread crossing it
/// (`None` when none does up to the termination bound).
pub fn geometric_breaks(b: &Basis, n: i64, p: i64) -> Vec<(i64, Option<i64>)> {
    let width = b.a3 as usize;
    let mut crossed = vec![0i32; width + 1];
    for i in 0..=p + 1 {
        for t in threads_in(b, n, i, 0, b.a3) {
            let (s, e) = (t.start.max(0), (t.end - 1).min(b.a3 - 1));
            if s <= e {
                crossed[s as usize] += 1;
                crossed[e as usize + 1] -= 1;
            }
        }
    }
    let mut run = 0;
    let mut ys = Vec::new();
    for (y, d) in crossed[..width].iter().enumerate() {
        run += d;
        if run == 0 && y > 0 {
            ys.push(y as i64);
        }
    }
    let limit = ((n - 1) * b.a2 + b.a3) / (b.a3 - b.a2);
    ys.into_iter()
        .map(|y| {
            let q = (p + 2..=limit).find(|&j| {
                // the j-thread starting at or before y that reaches furthest
                let c2 = (y + j * b.a3).div_euclid(b.a2);
                thread_at(b, n, j, c2).is_some_and(|t| t.crosses(y))
            });
            (y, q)
        })
        .collect()
}

/// True when some thread of order `<= p` (start below `a3`) is covered by
/// a thread of a different order.
pub fn has_covered_thread(b: &Basis, n: i64, p: i64) -> bool {
    let ts = sg_threads(b, n, p);
    ts.iter().any(|t| ts.iter().any(|u| t.is_covered_by(u)))
}

pub fn check_no_covered_threads(sg: &psp_stride::StrideGenerator) -> bool {
    !has_covered_thread(&sg.basis, sg.n, sg.p)
}
