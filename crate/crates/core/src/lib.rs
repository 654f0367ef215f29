//! Upper bounds on the domination number from a potential-function greedy
//! argument: the exact coefficient system, the greedy procedure with a
//! per-step gain audit, an exact oracle, and comparison with earlier bounds.

pub mod bounds;
pub mod cli;
pub mod coefficients;
pub mod error;
pub mod generate;
pub mod graph;
pub mod greedy;
pub mod oracle;
pub mod rational;

pub use coefficients::{bound_ratio, solve_coefficients, verify_conditions, CoefficientSet, ConditionReport};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use greedy::{run, Color, DominatorState, RunOptions, RunOutcome, StepRecord, Strategy};
pub use oracle::{exact_domination_number, OracleResult};
pub use rational::Rational;
