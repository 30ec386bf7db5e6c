use crate::error::{Error, Result};

/// Default node budget for a single homomorphism search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Default bound on vertices+arcs of any constructed graph.
pub const DEFAULT_MAX_SIZE: u128 = 2_000_000;
/// Default order cap for exact isomorphism tests.
pub const DEFAULT_ISO_CAP: usize = 12;

/// Resource limits shared by every guarded construction and search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub node_budget: u64,
    pub max_size: u128,
    pub iso_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            node_budget: DEFAULT_BUDGET,
            max_size: DEFAULT_MAX_SIZE,
            iso_cap: DEFAULT_ISO_CAP,
        }
    }
}

impl Limits {
    /// Limits with the size guard disabled.
    pub fn unbounded_size(self) -> Self {
        Limits {
            max_size: u128::MAX,
            ..self
        }
    }

    pub fn with_budget(self, node_budget: u64) -> Self {
        Limits {
            node_budget,
            ..self
        }
    }

    pub fn with_max_size(self, max_size: u128) -> Self {
        Limits { max_size, ..self }
    }

    /// Fails with [`Error::SizeGuard`] when `estimate` exceeds the guard.
    pub fn check_size(&self, what: &str, estimate: u128) -> Result<()> {
        if estimate > self.max_size {
            return Err(Error::SizeGuard {
                what: what.to_string(),
                estimate,
                limit: self.max_size,
            });
        }
        Ok(())
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}
