//! Benchmark problems, reference values and table builders.

pub mod catalog;
pub mod dynamic;
pub mod reference;
pub mod tables;

pub use catalog::{case, BenchmarkCase, CaseOptions, Convention, CASE_IDS};
pub use dynamic::{AnyOutcome, AnyProblem, SolvedRun};
pub use tables::{
    comparison_table, compute, error_table, error_table_from, published, solution_table, ErrorTable, Table,
    TableId,
};
