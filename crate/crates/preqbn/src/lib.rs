//! Bayesian-network structure learning by prequential plug-in MDL scoring.
//!
//! The library ranks candidate DAGs by the prequential plug-in score: the
//! accumulated next-step log-probability each node's conditional model assigns
//! to the data, with parameters fitted only on preceding samples. Conditional
//! models are either exact Dirichlet-smoothed probability tables (categorical
//! data) or small calibrated neural networks trained block-wise on a split
//! schedule (continuous data).

pub mod cli;
pub mod dataset;
pub mod datagen;
pub mod error;
pub mod graph;
pub mod neural;
pub mod scoring;
pub mod search;
pub mod tabular;

pub use dataset::Dataset;
pub use error::{Error, Result};
pub use graph::{Cpdag, Dag, ParentSet};
pub use scoring::{CpdScoreTable, SplitSchedule};
pub use search::RankedStructures;
