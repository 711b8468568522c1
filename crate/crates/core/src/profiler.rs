//! Cost measurement of the two decompositions under a time and memory budget.

use std::time::{Duration, Instant};

use crate::bench::{BenchmarkCase, Table};
use crate::error::{Error, Result};
use crate::metrics::{self, Limits};
use crate::nonlinear::DecompositionKind;

/// Resource budget for one profiled run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Budget {
    pub seconds: f64,
    pub bytes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            seconds: 60.0,
            bytes: 512 << 20,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CostReport {
    pub case: String,
    pub kind: DecompositionKind,
    pub k_max: usize,
    pub wall_seconds: f64,
    /// Largest series, in spatial basis terms, formed during the run.
    pub peak_term_count: usize,
    pub total_multiplications: u64,
    /// Retained iterates plus the largest intermediate series.
    pub estimated_bytes: usize,
    pub completed: bool,
    /// Iteration that failed, when `completed` is false.
    pub failure_iteration: Option<usize>,
    pub failure: Option<String>,
    /// Spatial basis terms of each completed iterate.
    pub iterate_terms: Vec<usize>,
}

/// Runs `kind` on `case` for `k_max` iterations under `budget`.
pub fn profile(case: &BenchmarkCase, kind: DecompositionKind, k_max: usize, budget: Budget) -> CostReport {
    let limits = Limits {
        deadline: Some(Instant::now() + Duration::from_secs_f64(budget.seconds.max(0.0))),
        max_bytes: Some(budget.bytes),
    };
    metrics::with_limits(limits, || {
        metrics::reset_peaks();
        let before = metrics::snapshot();
        let clock = Instant::now();
        let outcome = case.problem.run(kind, k_max);
        let wall_seconds = clock.elapsed().as_secs_f64();
        let (peak_terms, peak_bytes) = metrics::peaks();
        let retained: usize = outcome.run.stats().iter().map(|s| s.bytes).sum();
        let iterate_terms = outcome.run.iterate_term_counts();
        CostReport {
            case: case.name(),
            kind,
            k_max,
            wall_seconds,
            peak_term_count: peak_terms.max(iterate_terms.iter().copied().max().unwrap_or(0)),
            total_multiplications: metrics::snapshot().multiplications_since(&before),
            estimated_bytes: retained + peak_bytes,
            completed: outcome.error.is_none(),
            failure_iteration: outcome.error.as_ref().and_then(Error::iteration),
            failure: outcome.error.as_ref().map(|e| e.root().to_string()),
            iterate_terms,
        }
    })
}

/// D-J over He ratios for one case.
#[derive(Clone, Debug, PartialEq)]
pub struct CostRatio {
    pub case: String,
    pub time: f64,
    pub multiplications: f64,
    pub peak_terms: f64,
    pub bytes: f64,
    pub both_completed: bool,
}

fn ratio(dj: f64, he: f64) -> f64 {
    if he == 0.0 {
        if dj == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        dj / he
    }
}

/// Pairs reports by case and returns D-J/He ratios in first-seen case order.
pub fn cost_comparison(reports: &[CostReport]) -> Result<Vec<CostRatio>> {
    let mut cases: Vec<&str> = Vec::new();
    for r in reports {
        if !cases.contains(&r.case.as_str()) {
            cases.push(&r.case);
        }
    }
    cases
        .into_iter()
        .map(|name| {
            let find = |kind| {
                reports
                    .iter()
                    .find(|r| r.case == name && r.kind == kind)
                    .ok_or_else(|| Error::MissingPair {
                        case: name.to_string(),
                        kind,
                    })
            };
            let he = find(DecompositionKind::Hes)?;
            let dj = find(DecompositionKind::DJ)?;
            Ok(CostRatio {
                case: name.to_string(),
                time: ratio(dj.wall_seconds, he.wall_seconds),
                multiplications: ratio(dj.total_multiplications as f64, he.total_multiplications as f64),
                peak_terms: ratio(dj.peak_term_count as f64, he.peak_term_count as f64),
                bytes: ratio(dj.estimated_bytes as f64, he.estimated_bytes as f64),
                both_completed: he.completed && dj.completed,
            })
        })
        .collect()
}

/// Cost reports as a table in the published column order, with MiB and
/// seconds. Unfinished runs report what they used before stopping.
pub fn cost_table(reports: &[CostReport]) -> Result<Table> {
    let mib = |b: usize| b as f64 / (1u64 << 20) as f64;
    let mut table = Table {
        title: "memory and time of both decompositions".into(),
        columns: [
            "case",
            "hes_mb",
            "dj_mb",
            "hes_seconds",
            "dj_seconds",
            "hes_multiplications",
            "dj_multiplications",
            "hes_peak_terms",
            "dj_peak_terms",
            "hes_completed",
            "dj_completed",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
        rows: Vec::new(),
    };
    for r in cost_comparison(reports)? {
        let find = |kind| reports.iter().find(|x| x.case == r.case && x.kind == kind).expect("paired");
        let (he, dj) = (find(DecompositionKind::Hes), find(DecompositionKind::DJ));
        let id = r.case.trim_start_matches("case").parse::<f64>().unwrap_or(f64::NAN);
        table.rows.push(vec![
            id,
            mib(he.estimated_bytes),
            mib(dj.estimated_bytes),
            he.wall_seconds,
            dj.wall_seconds,
            he.total_multiplications as f64,
            dj.total_multiplications as f64,
            he.peak_term_count as f64,
            dj.peak_term_count as f64,
            f64::from(u8::from(he.completed)),
            f64::from(u8::from(dj.completed)),
        ]);
    }
    Ok(table)
}
