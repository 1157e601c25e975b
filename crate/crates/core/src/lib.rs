//! Aggregative gradual semantics for acyclic quantitative bipolar
//! argumentation frameworks.
//!
//! An argument's degree is computed in three stages: the degrees of its
//! attackers are aggregated into one weight, the degrees of its supporters
//! into another, and a combiner merges both with the argument's intrinsic
//! weight. [`engine`] runs this over a graph in topological order,
//! [`aggregators`] holds the functions and a postulate checker, and
//! [`principles`] searches for counterexamples to the classic argumentation
//! principles.

pub mod aggregators;
pub mod engine;
pub mod graph;
pub mod principles;

pub use aggregators::{catalog, final_from, AggError, Aggregator, Codomain, Combiner};
pub use engine::{AggregativeSemantics, DegreeMap, EvalError, Literature};
pub use graph::{parse_qbaf, topological_order, validate, ArgumentId, GraphError, Qbaf, QbafBuilder, Relation};
