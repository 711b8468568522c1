//! Error and solution tables for the benchmark cases.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::nonlinear::DecompositionKind;

use super::catalog::{case, BenchmarkCase, CaseOptions};
use super::dynamic::SolvedRun;
use super::reference;

/// A rectangular numeric table with named columns. Missing cells are NaN.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Table {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn cell(&self, row: usize, name: &str) -> Option<f64> {
        let j = self.column(name)?;
        self.rows.get(row).map(|r| r[j])
    }

    fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// |exact − partial_sum(k)| for k = 1..=K at each grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorTable {
    pub kind: DecompositionKind,
    /// (t, x) for each row.
    pub points: Vec<(f64, f64)>,
    /// `errors[row][k - 1]`.
    pub errors: Vec<Vec<f64>>,
}

impl ErrorTable {
    pub fn k_max(&self) -> usize {
        self.errors.first().map_or(0, Vec::len)
    }

    /// Largest error over the grid at iteration `k`.
    pub fn max_error(&self, k: usize) -> f64 {
        self.errors.iter().map(|r| r[k - 1]).fold(0.0, f64::max)
    }
}

fn no_exact(case: &BenchmarkCase) -> Error {
    Error::NoExactSolution {
        case: case.name(),
        alpha: case.problem.alpha(),
    }
}

/// Runs `kind` for `k_max` iterations and tabulates the errors.
pub fn error_table(case: &BenchmarkCase, kind: DecompositionKind, k_max: usize) -> Result<ErrorTable> {
    if case.problem.exact().is_none() {
        return Err(no_exact(case));
    }
    let run = case.problem.run(kind, k_max).into_result()?;
    error_table_from(case, run.as_ref(), k_max)
}

/// Error table from an existing run.
pub fn error_table_from(case: &BenchmarkCase, run: &dyn SolvedRun, k_max: usize) -> Result<ErrorTable> {
    let exact = case.problem.exact().ok_or_else(|| no_exact(case))?;
    let mut errors = Vec::with_capacity(case.grid.len());
    for &(t, x) in &case.grid {
        let u = exact.eval(x, t);
        let row = (1..=k_max)
            .map(|k| Ok((u - run.eval_partial(k, x, t)?).abs()))
            .collect::<Result<Vec<f64>>>()?;
        errors.push(row);
    }
    Ok(ErrorTable {
        kind: run.kind(),
        points: case.grid.clone(),
        errors,
    })
}

/// Runs both decompositions concurrently.
pub fn run_both(case: &BenchmarkCase, k_max: usize) -> Result<[Box<dyn SolvedRun>; 2]> {
    let (he, dj) = std::thread::scope(|s| {
        let he = s.spawn(|| case.problem.run(DecompositionKind::Hes, k_max).into_result());
        let dj = case.problem.run(DecompositionKind::DJ, k_max).into_result();
        (he.join().expect("He worker panicked"), dj)
    });
    Ok([he?, dj?])
}

/// Side-by-side errors of both decompositions in the published layout.
/// Iterations where the two coincide by construction share a column.
pub fn comparison_table(case: &BenchmarkCase, k_max: usize) -> Result<Table> {
    let [he, dj] = run_both(case, k_max)?;
    let he_err = error_table_from(case, he.as_ref(), k_max)?;
    let dj_err = error_table_from(case, dj.as_ref(), k_max)?;
    let merged = case.id == 2;
    let mut table = Table {
        title: format!("case {}: absolute errors", case.id),
        columns: error_columns(k_max, merged),
        rows: Vec::new(),
    };
    for (i, &(t, x)) in case.grid.iter().enumerate() {
        let mut row = vec![t, x];
        for k in 1..=k_max {
            if merged || k == 1 {
                row.push(dj_err.errors[i][k - 1]);
            } else {
                row.push(he_err.errors[i][k - 1]);
                row.push(dj_err.errors[i][k - 1]);
            }
        }
        table.push(row);
    }
    Ok(table)
}

/// Partial sums through u_k of both decompositions at `points` (t, x),
/// plus the exact value when one is known.
pub fn solution_table(case: &BenchmarkCase, k: usize, points: &[(f64, f64)]) -> Result<Table> {
    let [he, dj] = run_both(case, k)?;
    let exact = case.problem.exact();
    let mut cols = vec!["t", "x", "dj", "hes"];
    if exact.is_some() {
        cols.push("exact");
    }
    let mut table = Table::new(format!("case {}: approximate solutions, k = {k}", case.id), &cols);
    for &(t, x) in points {
        let mut row = vec![t, x, dj.eval_partial(k, x, t)?, he.eval_partial(k, x, t)?];
        if let Some(e) = exact {
            row.push(e.eval(x, t));
        }
        table.push(row);
    }
    Ok(table)
}

/// Iterations used by the case 3 solution table.
pub const CASE3_SOLUTION_K: usize = 4;
/// Iterations used by the case 3 early-time table.
pub const CASE3_EARLY_K: usize = 3;
pub const CASE3_EARLY_T: f64 = 0.001;
/// Iterations used by the case 4 solution table.
pub const CASE4_SOLUTION_K: usize = 5;

fn early_table(case: &BenchmarkCase) -> Result<Table> {
    let k = CASE3_EARLY_K;
    let [he, dj] = run_both(case, k)?;
    let exact = case.problem.exact().ok_or_else(|| no_exact(case))?;
    let mut table = Table::new(
        format!("case 3 at t = {CASE3_EARLY_T}, k = {k}"),
        &["x", "hes", "dj", "exact", "ae_hes", "ae_dj"],
    );
    let t = CASE3_EARLY_T;
    for r in &reference::CASE3_EARLY {
        let x = r[0];
        let (h, d, e) = (he.eval_partial(k, x, t)?, dj.eval_partial(k, x, t)?, exact.eval(x, t));
        table.push(vec![x, h, d, e, (e - h).abs(), (e - d).abs()]);
    }
    Ok(table)
}

/// The published tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableId {
    Errors1,
    Errors2,
    Errors3,
    Solutions3,
    Early3,
    Errors4,
    Solutions4,
    Costs,
    Errors5,
}

impl TableId {
    pub const ALL: [TableId; 9] = [
        TableId::Errors1,
        TableId::Errors2,
        TableId::Errors3,
        TableId::Solutions3,
        TableId::Early3,
        TableId::Errors4,
        TableId::Solutions4,
        TableId::Costs,
        TableId::Errors5,
    ];

    pub fn key(self) -> &'static str {
        match self {
            TableId::Errors1 => "1",
            TableId::Errors2 => "2",
            TableId::Errors3 => "3",
            TableId::Solutions3 => "4",
            TableId::Early3 => "5",
            TableId::Errors4 => "6",
            TableId::Solutions4 => "7",
            TableId::Costs => "8",
            TableId::Errors5 => "case5",
        }
    }

    /// Benchmark case the table belongs to; `None` for the cost table.
    pub fn case_id(self) -> Option<u8> {
        match self {
            TableId::Errors1 => Some(1),
            TableId::Errors2 => Some(2),
            TableId::Errors3 | TableId::Solutions3 | TableId::Early3 => Some(3),
            TableId::Errors4 | TableId::Solutions4 => Some(4),
            TableId::Errors5 => Some(5),
            TableId::Costs => None,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TableId::Errors1 => "case 1 absolute errors, k = 1..5",
            TableId::Errors2 => "case 2 absolute errors, k = 1..6",
            TableId::Errors3 => "case 3 absolute errors, k = 1..5",
            TableId::Solutions3 => "case 3 approximate solutions, k = 4",
            TableId::Early3 => "case 3 at t = 0.001, k = 3",
            TableId::Errors4 => "case 4 absolute errors, k = 1..5",
            TableId::Solutions4 => "case 4 approximate solutions, k = 5",
            TableId::Costs => "memory and time of both decompositions",
            TableId::Errors5 => "case 5 absolute errors, k = 1..4",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        TableId::ALL
            .into_iter()
            .find(|id| id.key() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown table '{s}', expected 1-8 or case5")))
    }
}

fn error_columns(k_max: usize, merged: bool) -> Vec<String> {
    let mut cols = vec!["t".to_string(), "x".to_string()];
    for k in 1..=k_max {
        if merged {
            cols.push(format!("hes_dj_k{k}"));
        } else if k == 1 {
            cols.push("dj_hes_k1".into());
        } else {
            cols.push(format!("hes_k{k}"));
            cols.push(format!("dj_k{k}"));
        }
    }
    cols
}

fn from_rows<const N: usize>(title: &str, columns: Vec<String>, rows: &[[f64; N]]) -> Table {
    Table {
        title: title.into(),
        columns,
        rows: rows.iter().map(|r| r.to_vec()).collect(),
    }
}

fn named(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|c| c.to_string()).collect()
}

/// Printed values of a table. The case 5 rows keep their printed (t, x)
/// labels.
pub fn published(id: TableId) -> Table {
    let title = id.description();
    match id {
        TableId::Errors1 => from_rows(title, error_columns(5, false), &reference::CASE1_ERRORS),
        TableId::Errors2 => from_rows(title, error_columns(6, true), &reference::CASE2_ERRORS),
        TableId::Errors3 => from_rows(title, error_columns(5, false), &reference::CASE3_ERRORS),
        TableId::Errors4 => from_rows(title, error_columns(5, false), &reference::CASE4_ERRORS),
        TableId::Errors5 => {
            let mut cols = error_columns(4, false);
            cols.extend(named(&["ntim", "qham"]));
            from_rows(title, cols, &reference::CASE5_ERRORS)
        }
        TableId::Solutions3 => from_rows(
            title,
            named(&["t", "x", "dj", "hes", "adm", "vim", "exact"]),
            &reference::CASE3_SOLUTIONS,
        ),
        TableId::Solutions4 => from_rows(
            title,
            named(&["t", "x", "dj", "hes", "gdtm", "adm", "vim", "exact"]),
            &reference::CASE4_SOLUTIONS,
        ),
        TableId::Early3 => from_rows(
            title,
            named(&[
                "x", "nim", "oafm", "hes", "dj", "exact", "ae_nim", "ae_oafm", "ae_hes", "ae_dj",
            ]),
            &reference::CASE3_EARLY,
        ),
        TableId::Costs => from_rows(
            title,
            named(&["case", "hes_mb", "dj_mb", "hes_seconds", "dj_seconds"]),
            &reference::COSTS,
        ),
    }
}

/// Recomputes a numeric table. Rows follow the published order. The cost
/// table is produced by the profiler instead.
pub fn compute(id: TableId, opts: &CaseOptions) -> Result<Table> {
    let Some(case_id) = id.case_id() else {
        return Err(Error::InvalidParameter(
            "the cost table is measured by the profiler, not computed".into(),
        ));
    };
    let c = case(case_id, opts)?;
    let mut table = match id {
        TableId::Solutions3 => {
            let pts: Vec<_> = reference::CASE3_SOLUTIONS.iter().map(|r| (r[0], r[1])).collect();
            solution_table(&c, CASE3_SOLUTION_K, &pts)?
        }
        TableId::Solutions4 => {
            let pts: Vec<_> = reference::CASE4_SOLUTIONS.iter().map(|r| (r[0], r[1])).collect();
            solution_table(&c, CASE4_SOLUTION_K, &pts)?
        }
        TableId::Early3 => early_table(&c)?,
        _ => comparison_table(&c, c.k_max)?,
    };
    table.title = id.description().to_string();
    Ok(table)
}
