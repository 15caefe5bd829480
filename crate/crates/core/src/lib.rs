//! Reductions from weighted satisfiability of t-normalized formulas to
//! weighted path emulation and on to (directed) bandwidth of caterpillars,
//! together with exact toy-scale solvers, witness builders and checkers.

pub mod bw_solvers;
pub mod codec;
pub mod formula;
pub mod graph;
pub mod report;
pub mod sat2wpe;
mod slots;
pub mod wpe;
pub mod wpe2bw;
pub mod wpe2dbw;

use thiserror::Error;

/// Node budget shared by every exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: u64,
    /// Graphs above this size are refused by the exact bandwidth solvers.
    pub max_vertices: u64,
}

impl SearchLimits {
    pub const DEFAULT_MAX_NODES: u64 = 20_000_000;
    pub const DEFAULT_MAX_VERTICES: u64 = 64;

    pub fn new(max_nodes: u64) -> Self {
        SearchLimits { max_nodes, max_vertices: Self::DEFAULT_MAX_VERTICES }
    }
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self::new(Self::DEFAULT_MAX_NODES)
    }
}

/// An exact search declined to run or gave up at its budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Refused {
    #[error("refused: search exceeds the limit of {limit} nodes")]
    Nodes { limit: u64 },
    #[error("refused: input of size {size} exceeds the limit of {limit}")]
    Size { size: u64, limit: u64 },
}

impl Refused {
    pub(crate) fn check_size(size: u64, limit: u64) -> Result<(), Refused> {
        if size > limit {
            Err(Refused::Size { size, limit })
        } else {
            Ok(())
        }
    }
}

pub(crate) struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    pub(crate) fn new(limits: SearchLimits) -> Self {
        Budget { used: 0, limit: limits.max_nodes }
    }

    pub(crate) fn spend(&mut self, n: u64) -> Result<(), Refused> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(Refused::Nodes { limit: self.limit })
        } else {
            Ok(())
        }
    }
}
