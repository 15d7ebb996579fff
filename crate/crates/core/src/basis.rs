use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The denomination set `{1, a2, a3}`; `a1 = 1` is implicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Basis {
    pub a2: i64,
    pub a3: i64,
}

impl Basis {
    pub fn new(a2: i64, a3: i64) -> Result<Self> {
        if a2 <= 1 || a3 <= a2 {
            return Err(Error::InvalidBasis { a2, a3 });
        }
        Ok(Basis { a2, a3 })
    }

    pub fn validate(&self) -> Result<()> {
        Basis::new(self.a2, self.a3).map(|_| ())
    }

    /// Fewest stamps from `{1, a2}` summing to `v`.
    #[inline]
    pub fn ms(&self, v: i64) -> i64 {
        min_stamps2(self.a2, v)
    }

    /// `(C2, C1)` with `a3 = C2*a2 + C1`, `0 <= C1 < a2`.
    pub fn c2c1(&self) -> (i64, i64) {
        (self.a3 / self.a2, self.a3 % self.a2)
    }
}

impl std::fmt::Display for Basis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{1,{},{}}}", self.a2, self.a3)
    }
}

/// Greedy is optimal for two denominations `{1, a2}`.
#[inline]
pub fn min_stamps2(a2: i64, v: i64) -> i64 {
    debug_assert!(v >= 0 && a2 >= 1);
    v / a2 + v % a2
}
