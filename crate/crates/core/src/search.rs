//! Budgeted search bookkeeping shared by the exhaustive procedures.

/// Node budget for a backtracking or candidate search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub const fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub const fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Charges one unit; returns false once the limit has been passed.
    #[inline]
    pub fn spend(&mut self) -> bool {
        self.used = self.used.saturating_add(1);
        self.used <= self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }

    pub fn is_exhausted(&self) -> bool {
        self.used > self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(50_000_000)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search space was exhausted without a solution.
    NotFound,
    /// The budget ran out before the search completed.
    BudgetExhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::NotFound => SearchOutcome::NotFound,
            SearchOutcome::BudgetExhausted => SearchOutcome::BudgetExhausted,
        }
    }
}

/// A search outcome together with the number of nodes it visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Search<T> {
    pub outcome: SearchOutcome<T>,
    pub nodes: u64,
}
