//! Iterative-deepening A* with lazy and rational-lazy evaluation of a second,
//! more expensive admissible heuristic.
//!
//! The crate is organised around the [`search::Domain`] contract. Any domain
//! that supplies successors, a goal test and two admissible heuristics can be
//! searched with plain IDA* (using either heuristic or their maximum), with
//! Lazy IDA* (the second heuristic is only consulted when the first one does
//! not already prune the node), or with Rational Lazy IDA* (a
//! [`metareason::DecisionPolicy`] decides per node whether the second
//! heuristic is worth its cost).
//!
//! Two domains ship with the crate: sliding-tile puzzles ([`tiles`]) and the
//! restricted container relocation problem ([`crp`]). The [`bench`] module
//! runs algorithm suites over instance sets and reports the usual
//! time / generated / h2 total / h2 helpful table.

pub mod bench;
pub mod crp;
pub mod error;
pub mod explicit;
pub mod metareason;
pub mod search;
pub mod tiles;

pub use error::ParseError;
pub use metareason::{DecisionPolicy, DecisionRule, SampleHistory, TimingModel};
pub use search::{
    ida_star, Algorithm, Cost, Domain, HeuristicChoice, SearchConfig, SearchError, SearchStats,
    Solution, Successor, INFINITE_COST,
};
