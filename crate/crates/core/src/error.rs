use std::cell::Cell;

use thiserror::Error;

/// Errors surfaced by the engine. `Budget` is deliberately distinct from
/// every other variant: a search that runs out of budget must never be
/// reported as a definitive "no".
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("search budget exceeded: {used} nodes (limit {limit}) while {context}")]
    Budget {
        used: u64,
        limit: u64,
        context: String,
    },
    #[error("cap reconciliation failed: {context} (required cap {required})")]
    CapMismatch { required: usize, context: String },
    #[error("no finite decision bound: {0}")]
    NoFiniteBound(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;

/// Node-count budget threaded through every exhaustive search.
/// Interior mutability keeps the search functions pure in their inputs.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 10_000_000;

    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: Cell::new(0),
        }
    }

    pub fn spend(&self, n: u64, context: &str) -> Result<()> {
        let used = self.used.get().saturating_add(n);
        self.used.set(used);
        if used > self.limit {
            Err(EngineError::Budget {
                used,
                limit: self.limit,
                context: context.to_string(),
            })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_LIMIT)
    }
}
