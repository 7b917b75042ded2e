//! Structured pass/fail reporting shared by every verification suite.

use serde::Serialize;

/// Outcome of one named check: identity verified, residual observed, sample
/// count, and the tolerance it was held against (0 for exact checks).
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub max_residual: f64,
    pub tolerance: f64,
    pub samples: usize,
}

/// A named collection of check records.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    /// Records an exact (integer/rational) check.
    pub fn push_exact(&mut self, name: impl Into<String>, passed: bool, samples: usize) {
        self.checks.push(CheckRecord {
            name: name.into(),
            passed,
            max_residual: if passed { 0.0 } else { f64::INFINITY },
            tolerance: 0.0,
            samples,
        });
    }

    /// Records a numeric check that held `max_residual <= tolerance`.
    pub fn push_numeric(
        &mut self,
        name: impl Into<String>,
        max_residual: f64,
        tolerance: f64,
        samples: usize,
    ) {
        self.checks.push(CheckRecord {
            name: name.into(),
            passed: max_residual.is_finite() && max_residual <= tolerance,
            max_residual,
            tolerance,
            samples,
        });
    }

    /// True when every recorded check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Largest residual over all numeric checks.
    pub fn worst_residual(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.max_residual)
            .fold(0.0, f64::max)
    }

    /// Names of failing checks, for error messages.
    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }

    /// Absorbs another report's checks, prefixing them with its suite name.
    pub fn merge(&mut self, other: Report) {
        for mut check in other.checks {
            check.name = format!("{}: {}", other.suite, check.name);
            self.checks.push(check);
        }
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {} (residual {:.3e}, tol {:.1e}, samples {})",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.max_residual,
                c.tolerance,
                c.samples
            )?;
        }
        Ok(())
    }
}
