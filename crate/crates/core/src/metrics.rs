//! Per-thread instrumentation: coefficient multiplication counts, peak series
//! sizes, and optional resource limits checked inside series products.
//!
//! Counters are thread-local so concurrent runs on different threads do not
//! interfere. A run that wants isolated numbers takes a [`Snapshot`] before
//! and after.

use std::cell::RefCell;
use std::time::Instant;

use crate::error::{Error, Result};

#[derive(Debug, Default)]
struct State {
    multiplications: u64,
    peak_terms: usize,
    peak_bytes: usize,
    limits: Limits,
}

thread_local! {
    static STATE: RefCell<State> = RefCell::new(State::default());
}

/// Resource limits enforced by series arithmetic on the current thread.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Limits {
    pub deadline: Option<Instant>,
    pub max_bytes: Option<usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Snapshot {
    pub multiplications: u64,
}

impl Snapshot {
    pub fn multiplications_since(&self, earlier: &Snapshot) -> u64 {
        self.multiplications - earlier.multiplications
    }
}

pub fn snapshot() -> Snapshot {
    STATE.with(|s| Snapshot {
        multiplications: s.borrow().multiplications,
    })
}

pub fn multiplications() -> u64 {
    STATE.with(|s| s.borrow().multiplications)
}

pub(crate) fn add_multiplications(n: u64) {
    STATE.with(|s| s.borrow_mut().multiplications += n);
}

/// Records the size of a freshly produced series and enforces limits.
pub(crate) fn observe(terms: usize, bytes: usize) -> Result<()> {
    STATE.with(|s| {
        let mut s = s.borrow_mut();
        s.peak_terms = s.peak_terms.max(terms);
        s.peak_bytes = s.peak_bytes.max(bytes);
        if let Some(max) = s.limits.max_bytes {
            if bytes > max {
                return Err(Error::BudgetExhausted(format!(
                    "series working set of {bytes} bytes exceeds {max} bytes"
                )));
            }
        }
        Ok(())
    })
}

/// Fails once the current thread's deadline has passed.
pub(crate) fn check_deadline() -> Result<()> {
    STATE.with(|s| match s.borrow().limits.deadline {
        Some(d) if Instant::now() > d => {
            Err(Error::BudgetExhausted("time budget exhausted".into()))
        }
        _ => Ok(()),
    })
}

/// Peak (terms, bytes) observed since the last [`reset_peaks`].
pub fn peaks() -> (usize, usize) {
    STATE.with(|s| {
        let s = s.borrow();
        (s.peak_terms, s.peak_bytes)
    })
}

pub fn reset_peaks() {
    STATE.with(|s| {
        let mut s = s.borrow_mut();
        s.peak_terms = 0;
        s.peak_bytes = 0;
    });
}

/// Runs `f` with `limits` installed, restoring the previous limits after.
pub fn with_limits<R>(limits: Limits, f: impl FnOnce() -> R) -> R {
    let previous = STATE.with(|s| std::mem::replace(&mut s.borrow_mut().limits, limits));
    let out = f();
    STATE.with(|s| s.borrow_mut().limits = previous);
    out
}
