//! Structured verdicts for identity checks.

use crate::scalar::Scalar;

/// Witness cap applied when a caller does not choose one.
pub const DEFAULT_VIOLATION_CAP: usize = 16;

/// One failed instance of a named identity: the basis index tuple that was
/// checked and the nonzero residual it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Name of the identity that failed, e.g. "symmetric-jacobi".
    pub identity: &'static str,
    /// Basis indices of the failing instance (0-based).
    pub indices: Vec<usize>,
    /// Residual in the identity's output space, flattened.
    pub residual: Vec<Scalar>,
}

/// Result of a check: `passed` holds exactly when no instance failed.
/// `violations` lists at most the configured cap of witnesses, in
/// lexicographic index order; `violation_count` is the total number found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    /// Names of the identities this check evaluated.
    pub identities: Vec<&'static str>,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn pass(identities: Vec<&'static str>) -> CheckReport {
        CheckReport { passed: true, identities, violation_count: 0, violations: Vec::new() }
    }
}

/// Accumulates violations up to a cap while counting all of them.
#[derive(Debug)]
pub(crate) struct ReportBuilder {
    identities: Vec<&'static str>,
    cap: usize,
    count: usize,
    violations: Vec<Violation>,
}

impl ReportBuilder {
    pub fn new(identities: Vec<&'static str>, cap: usize) -> ReportBuilder {
        ReportBuilder { identities, cap: cap.max(1), count: 0, violations: Vec::new() }
    }

    pub fn violation(&mut self, identity: &'static str, indices: Vec<usize>, residual: Vec<Scalar>) {
        self.count += 1;
        if self.violations.len() < self.cap {
            self.violations.push(Violation { identity, indices, residual });
        }
    }

    /// Records a violation only when the residual is nonzero.
    pub fn check_residual(&mut self, identity: &'static str, indices: &[usize], residual: Vec<Scalar>) {
        if residual.iter().any(|s| !s.is_zero()) {
            self.violation(identity, indices.to_vec(), residual);
        }
    }

    /// Folds a sub-report into this one, preserving the cap.
    pub fn absorb(&mut self, sub: CheckReport) {
        for id in sub.identities {
            if !self.identities.contains(&id) {
                self.identities.push(id);
            }
        }
        self.count += sub.violation_count;
        for v in sub.violations {
            if self.violations.len() < self.cap {
                self.violations.push(v);
            }
        }
    }

    pub fn finish(self) -> CheckReport {
        CheckReport {
            passed: self.count == 0,
            identities: self.identities,
            violation_count: self.count,
            violations: self.violations,
        }
    }
}
