//! Exhaustive engines behind the closed forms: brute-force `M(3,s)`,
//! stride-generator enumeration, the key-1/key-p case lists and a
//! table verifier that runs each of them against the published data.
//!
//! All searches fan out with rayon over disjoint ranges and merge in a
//! fixed order, so results do not depend on the worker count.

mod brute;
mod enumerate;
pub mod golden;
mod key1p;
mod scan;
mod verify;

pub use brute::{brute_m3, M3};
pub use enumerate::{best_osg, enumerate_sg, enumerate_sg_in, Osg};
pub use key1p::{enumerate_key1p, Case, Key1pCases};
pub use scan::{scan_osg1_cover, Scan, ScanRow};
pub use verify::{verify_tables, RowCheck, SearchReport, Table, VerifyOptions};

use psp_core::{Error, Result};

/// Desk-scale limits; searches beyond them need an explicit override.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub s_max: i64,
    pub n_max: i64,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { s_max: 60, n_max: 140 }
    }
}

impl Guard {
    pub fn unlimited() -> Self {
        Guard { s_max: i64::MAX, n_max: i64::MAX }
    }

    pub fn check_s(&self, s: i64) -> Result<()> {
        if s > self.s_max {
            return Err(Error::range("s", format!("s = {s} exceeds the guard {}; raise it to search further", self.s_max)));
        }
        Ok(())
    }

    pub fn check_n(&self, n: i64) -> Result<()> {
        if n > self.n_max {
            return Err(Error::range("n", format!("n = {n} exceeds the guard {}", self.n_max)));
        }
        Ok(())
    }
}
