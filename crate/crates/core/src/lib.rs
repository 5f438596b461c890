//! Exact computations with finite and lean simplicial sets: standard
//! complexes, finite (co)limits, lifting-problem solvers and fibration
//! classifiers, brute-force homotopy invariants, pro-objects over finite
//! codirected posets, doubly lean bisimplicial sets with Segal and
//! completeness checks, and a fibration-test-category axiom verifier.

pub mod builders;
pub mod cat;
pub mod colimits;
pub mod delta;
pub mod error;
pub mod lifting;
pub mod smap;
pub mod solver;
pub mod sset;

pub use error::{Budget, EngineError, Result};
pub use smap::SimplicialMap;
pub use sset::{Extension, SimplicialSet};

/// Global knobs shared by the CLI and the test suites.
#[derive(Debug, Clone)]
pub struct Config {
    pub degree_cap: usize,
    pub tower_bound: usize,
    pub search_budget: u64,
    pub flavor: Flavor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Kq,
    Joyal,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            degree_cap: 4,
            tower_bound: 4,
            search_budget: Budget::DEFAULT_LIMIT,
            flavor: Flavor::Kq,
        }
    }
}
mod foundation_tests;
mod lifting_tests;
