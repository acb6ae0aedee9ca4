//! End-to-end checks, one per acceptance criterion.
//!
//! Each check runs the full experiment at its pinned settings and returns a
//! [`Verdict`]; the `acceptance` test target prints the verdicts and fails on
//! any that did not pass.

use std::fmt;

mod benchmarks;
mod clusters;
mod oracles;
mod properties;
mod synthesis;

pub use benchmarks::{multi_dimensional_errors, single_variable_optima};
pub use clusters::lj_small_clusters;
pub use oracles::numerical_oracles;
pub use properties::engine_properties;
pub use synthesis::quantum_synthesis;

#[derive(Debug, Clone)]
pub struct Verdict {
    pub criterion: u8,
    pub title: &'static str,
    pub passed: bool,
    /// Measurements behind the verdict, one item per sub-check.
    pub details: Vec<String>,
}

impl Verdict {
    fn new(criterion: u8, title: &'static str) -> Self {
        Verdict {
            criterion,
            title,
            passed: true,
            details: Vec::new(),
        }
    }

    /// Records a sub-check; any failing one fails the verdict.
    fn check(&mut self, ok: bool, detail: impl Into<String>) {
        let d = detail.into();
        self.details.push(if ok { d } else { format!("{d} [FAIL]") });
        self.passed &= ok;
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} criterion {} ({}): {}", self.criterion, self.title, self.details.join("; "))
    }
}

/// `count` of `total` is at least `fraction`.
fn share_at_least(count: usize, total: usize, fraction: f64) -> bool {
    count as f64 >= fraction * total as f64 - 1e-9
}
