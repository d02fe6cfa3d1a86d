use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Cooperative step counter. Long-running routines call [`Budget::tick`] and
/// abort with [`Error::BudgetExceeded`] once the limit is reached.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&self, steps: u64) -> Result<()> {
        let before = self.used.fetch_add(steps, Ordering::Relaxed);
        if before.saturating_add(steps) > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::unlimited()
    }
}
