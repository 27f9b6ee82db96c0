//! Expansion budgets and memo states shared by the exhaustive searches.

use crate::error::{Error, Result};

/// Default number of node expansions allowed for a single search.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Counts node expansions and fails once the limit is passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            limit: None,
            used: 0,
        }
    }

    pub fn new(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub(crate) fn tick(&mut self, memo_entries: usize) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::BudgetExhausted {
                budget: limit,
                memo_entries,
            }),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Memo<T> {
    InProgress,
    Done(Option<T>),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_runs_out() {
        let mut b = Budget::new(2);
        assert!(b.tick(0).is_ok());
        assert!(b.tick(0).is_ok());
        assert_eq!(
            b.tick(7),
            Err(Error::BudgetExhausted {
                budget: 2,
                memo_entries: 7
            })
        );
        let mut u = Budget::unlimited();
        for _ in 0..1000 {
            u.tick(0).unwrap();
        }
        assert_eq!(u.used(), 1000);
    }
}
