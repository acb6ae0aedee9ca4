//! Group leaders optimization.
//!
//! The population is split into `n` groups of `p` members. Every member is
//! pulled toward its group leader (the best member of the group) by a linear
//! mix of its own position, the leader and a random point, and groups swap
//! single variables through a one-way crossover. Replacements are greedy, so
//! no member ever gets worse.
//!
//! Three objective suites ship with the engine:
//!
//! * [`benchmarks`]: analytic test functions with known optima,
//! * [`lj`]: Lennard-Jones cluster energies,
//! * [`quantum`]: decomposition of unitary matrices into gate sequences.

pub mod benchmarks;
pub mod engine;
pub mod error;
pub mod fit;
pub mod lj;
pub mod objective;
pub mod quantum;
pub mod rng;

pub use engine::{
    BoundPolicy, Candidate, Gloa, GloaConfig, Group, GroupSet, IterationInfo, RandomTerm, Rate,
    Rates, Refinement, RunReport, RunState, Seeder, Target, TerminationReason,
};
pub use error::{Error, ObjectiveError, Result};
pub use objective::{FnObjective, Interval, Objective};
