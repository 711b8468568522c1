//! Command execution.

use rayon::prelude::*;

use fraciter::bench::{self, BenchmarkCase, CaseOptions, SolvedRun, TableId, CASE_IDS};
use fraciter::profiler::{self, CostReport};
use fraciter::{DecompositionKind, SeriesConfig};

use crate::config::{Command, Format, RunConfig};
use crate::emit::{to_text, Cell, OutTable};
use crate::error::CliError;

/// Output of a command.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub table: OutTable,
    /// Extra sections shown only in text format.
    pub notes: Vec<String>,
    /// False when some run stopped before reaching K.
    pub all_completed: bool,
}

impl Report {
    fn complete(table: OutTable) -> Self {
        Report {
            table,
            notes: Vec::new(),
            all_completed: true,
        }
    }
}

pub fn case_options(cfg: &RunConfig) -> CaseOptions {
    CaseOptions {
        alpha: cfg.alpha,
        beta: cfg.beta,
        c: cfg.c,
        convention: cfg.convention,
        config: SeriesConfig::default().with_term_cap(cfg.term_cap),
        force_float: cfg.float,
    }
}

fn columns(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn status(done: bool) -> Cell {
    Cell::Text(if done { "ok" } else { "failed" }.into())
}

struct Finished {
    case: BenchmarkCase,
    kind: DecompositionKind,
    k: usize,
    run: Box<dyn SolvedRun>,
    error: Option<fraciter::Error>,
}

/// Runs every requested (case, kind) pair on a pool of `cfg.jobs` threads.
/// Results keep the request order.
fn run_all(cfg: &RunConfig) -> Result<Vec<Finished>, CliError> {
    let opts = case_options(cfg);
    let mut jobs = Vec::new();
    for &id in &cfg.cases {
        let case = bench::case(id, &opts)?;
        for &kind in &cfg.kinds {
            jobs.push((case.clone(), kind));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Output(e.to_string()))?;
    Ok(pool.install(|| {
        jobs.into_par_iter()
            .map(|(case, kind)| {
                let k = cfg.k.unwrap_or(case.k_max);
                let out = case.problem.run(kind, k);
                Finished {
                    case,
                    kind,
                    k,
                    run: out.run,
                    error: out.error,
                }
            })
            .collect()
    }))
}

fn failure_notes(done: &[Finished]) -> Vec<String> {
    done.iter()
        .filter_map(|f| f.error.as_ref().map(|e| format!("warning: {e}")))
        .collect()
}

fn solve(cfg: &RunConfig) -> Result<Report, CliError> {
    let done = run_all(cfg)?;
    let mut table = OutTable {
        title: "partial sums u_0 + ... + u_k".into(),
        columns: columns(&["case", "kind", "k", "t", "x", "value", "exact", "status"]),
        rows: Vec::new(),
    };
    let mut notes = failure_notes(&done);
    for f in &done {
        let points = cfg.points.clone().unwrap_or_else(|| f.case.grid.clone());
        let exact = f.case.problem.exact();
        for k in 0..=f.k {
            for &(t, x) in &points {
                let value = if k < f.run.len() {
                    Cell::Num(f.run.eval_partial(k, x, t)?)
                } else {
                    Cell::Empty
                };
                let ok = k < f.run.len();
                table.rows.push(vec![
                    Cell::Int(f.case.id.into()),
                    Cell::Text(f.kind.key().into()),
                    Cell::Int(k as i64),
                    Cell::Num(t),
                    Cell::Num(x),
                    value,
                    exact.map_or(Cell::Empty, |e| Cell::Num(e.eval(x, t))),
                    status(ok),
                ]);
            }
        }
        if cfg.iterates {
            for k in 0..f.run.len() {
                notes.push(format!("case {} {} u_{k}:\n{}", f.case.id, f.kind, f.run.render_iterate(k)?));
            }
        }
    }
    Ok(Report {
        table,
        notes,
        all_completed: done.iter().all(|f| f.error.is_none()),
    })
}

fn bench_errors(cfg: &RunConfig) -> Result<Report, CliError> {
    let done = run_all(cfg)?;
    let mut table = OutTable {
        title: "absolute errors |exact - partial sum|".into(),
        columns: columns(&["case", "kind", "k", "t", "x", "error", "status"]),
        rows: Vec::new(),
    };
    for f in &done {
        let exact = f.case.problem.exact().ok_or_else(|| fraciter::Error::NoExactSolution {
            case: f.case.name(),
            alpha: f.case.problem.alpha(),
        })?;
        for k in 1..=f.k {
            for &(t, x) in &f.case.grid {
                let ok = k < f.run.len();
                let err = if ok {
                    Cell::Num((exact.eval(x, t) - f.run.eval_partial(k, x, t)?).abs())
                } else {
                    Cell::Empty
                };
                table.rows.push(vec![
                    Cell::Int(f.case.id.into()),
                    Cell::Text(f.kind.key().into()),
                    Cell::Int(k as i64),
                    Cell::Num(t),
                    Cell::Num(x),
                    err,
                    status(ok),
                ]);
            }
        }
    }
    Ok(Report {
        table,
        notes: failure_notes(&done),
        all_completed: done.iter().all(|f| f.error.is_none()),
    })
}

fn profile_all(cfg: &RunConfig, cases: &[u8]) -> Result<Vec<CostReport>, CliError> {
    let opts = case_options(cfg);
    let mut reports = Vec::new();
    // one profiled run at a time
    for &id in cases {
        let case = bench::case(id, &opts)?;
        let k = cfg.k.unwrap_or(5);
        for &kind in &cfg.kinds {
            reports.push(profiler::profile(&case, kind, k, cfg.budget));
        }
    }
    Ok(reports)
}

fn ratio_notes(reports: &[CostReport]) -> Vec<String> {
    let Ok(ratios) = profiler::cost_comparison(reports) else {
        return Vec::new();
    };
    let table = OutTable {
        title: "D-J / He ratios".into(),
        columns: columns(&["case", "time", "multiplications", "peak_terms", "bytes", "both_completed"]),
        rows: ratios
            .iter()
            .map(|r| {
                vec![
                    Cell::Text(r.case.clone()),
                    Cell::Num(r.time),
                    Cell::Num(r.multiplications),
                    Cell::Num(r.peak_terms),
                    Cell::Num(r.bytes),
                    Cell::Bool(r.both_completed),
                ]
            })
            .collect(),
    };
    vec![to_text(&table)]
}

fn cost(cfg: &RunConfig) -> Result<Report, CliError> {
    let reports = profile_all(cfg, &cfg.cases)?;
    let mut table = OutTable {
        title: "cost reports".into(),
        columns: columns(&[
            "case",
            "kind",
            "k",
            "wall_seconds",
            "peak_term_count",
            "total_multiplications",
            "estimated_bytes",
            "completed",
            "failure_iteration",
        ]),
        rows: Vec::new(),
    };
    let mut notes = Vec::new();
    for r in &reports {
        table.rows.push(vec![
            Cell::Text(r.case.clone()),
            Cell::Text(r.kind.key().into()),
            Cell::Int(r.k_max as i64),
            Cell::Num(r.wall_seconds),
            Cell::Int(r.peak_term_count as i64),
            Cell::Int(r.total_multiplications as i64),
            Cell::Int(r.estimated_bytes as i64),
            Cell::Bool(r.completed),
            r.failure_iteration.map_or(Cell::Empty, |i| Cell::Int(i as i64)),
        ]);
        if let Some(msg) = &r.failure {
            notes.push(format!("warning: {} {} stopped: {msg}", r.case, r.kind));
        }
    }
    notes.extend(ratio_notes(&reports));
    Ok(Report {
        table,
        notes,
        all_completed: reports.iter().all(|r| r.completed),
    })
}

fn table(cfg: &RunConfig) -> Result<Report, CliError> {
    let id = cfg.table.expect("table id checked during parsing");
    if cfg.published {
        return Ok(Report::complete(OutTable::from(&bench::published(id))));
    }
    if id == TableId::Costs {
        let mut cfg = cfg.clone();
        cfg.kinds = DecompositionKind::ALL.to_vec();
        let reports = profile_all(&cfg, &CASE_IDS)?;
        let t = profiler::cost_table(&reports)?;
        return Ok(Report {
            table: OutTable::from(&t),
            notes: ratio_notes(&reports),
            all_completed: reports.iter().all(|r| r.completed),
        });
    }
    let t = bench::compute(id, &case_options(cfg))?;
    Ok(Report::complete(OutTable::from(&t)))
}

fn list(cfg: &RunConfig) -> Result<Report, CliError> {
    let opts = case_options(cfg);
    let mut table = OutTable {
        title: "benchmark cases".into(),
        columns: columns(&["case", "title", "backend", "alpha", "k", "exact", "equation"]),
        rows: Vec::new(),
    };
    for id in CASE_IDS {
        let c = bench::case(id, &opts)?;
        table.rows.push(vec![
            Cell::Int(id.into()),
            Cell::Text(c.title.into()),
            Cell::Text(c.problem.backend().into()),
            Cell::Text(c.problem.alpha().to_string()),
            Cell::Int(c.k_max as i64),
            Cell::Bool(c.problem.exact().is_some()),
            Cell::Text(c.describe()),
        ]);
    }
    let tables = TableId::ALL
        .iter()
        .map(|t| format!("  {:>5}  {}", t.key(), t.description()))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report {
        table,
        notes: vec![format!("tables:\n{tables}")],
        all_completed: true,
    })
}

pub fn execute(cfg: &RunConfig) -> Result<Report, CliError> {
    match cfg.command {
        Command::Solve => solve(cfg),
        Command::Bench => bench_errors(cfg),
        Command::Cost => cost(cfg),
        Command::Table => table(cfg),
        Command::List => list(cfg),
    }
}

/// Renders a report. Notes are appended in text format only.
pub fn render_report(report: &Report, format: Format) -> Result<String, CliError> {
    let mut out = crate::emit::render(&report.table, format)?;
    if format == Format::Text {
        for n in &report.notes {
            out.push('\n');
            out.push_str(n);
            if !n.ends_with('\n') {
                out.push('\n');
            }
        }
    }
    Ok(out)
}
