//! Uniform pass/fail reports with a deterministic first witness.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub enum Residual {
    /// Exact residual components (a vector, or a single entry).
    Exact(Vec<Scalar>),
    /// Norm of a floating-point residual.
    Numeric(f64),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Exact(values) => {
                f.write_str("[")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    f.write_str(&scalar::format(v))?;
                }
                f.write_str("]")
            }
            Residual::Numeric(value) => write!(f, "{value:e}"),
        }
    }
}

/// First violating index tuple found by a check, in iteration order.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub residual: Residual,
}

impl Witness {
    pub fn exact(indices: &[usize], residual: Vec<Scalar>) -> Self {
        Witness { indices: indices.to_vec(), residual: Residual::Exact(residual) }
    }

    pub fn numeric(indices: &[usize], residual: f64) -> Self {
        Witness { indices: indices.to_vec(), residual: Residual::Numeric(residual) }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    /// Largest residual seen, for floating-point checks.
    pub max_residual: Option<f64>,
    /// Seed of the sample batch, for randomized checks.
    pub seed: Option<u64>,
    /// Sub-checks, for suites.
    pub items: Vec<CheckReport>,
}

impl CheckReport {
    pub fn pass(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: true,
            witness: None,
            max_residual: None,
            seed: None,
            items: Vec::new(),
        }
    }

    pub fn fail(name: &str, witness: Witness) -> Self {
        CheckReport { passed: false, witness: Some(witness), ..CheckReport::pass(name) }
    }

    /// Failure without an index witness (shape problems, degenerate forms).
    pub fn fail_plain(name: &str) -> Self {
        CheckReport { passed: false, ..CheckReport::pass(name) }
    }

    pub fn from_witness(name: &str, witness: Option<Witness>) -> Self {
        match witness {
            None => CheckReport::pass(name),
            Some(w) => CheckReport::fail(name, w),
        }
    }

    /// Suite that passes iff every item passes. Carries the first failing
    /// item's witness.
    pub fn all(name: &str, items: Vec<CheckReport>) -> Self {
        let first_failure = items.iter().find(|item| !item.passed);
        let passed = first_failure.is_none();
        let witness = first_failure.and_then(|item| item.first_witness().cloned());
        let max_residual = items
            .iter()
            .filter_map(|item| item.max_residual)
            .fold(None, |acc: Option<f64>, r| Some(acc.map_or(r, |a| a.max(r))));
        CheckReport {
            name: name.to_string(),
            passed,
            witness,
            max_residual,
            seed: items.iter().find_map(|item| item.seed),
            items,
        }
    }

    pub fn with_max_residual(mut self, value: f64) -> Self {
        self.max_residual = Some(value);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        if let Some(w) = &self.witness {
            return Some(w);
        }
        self.items.iter().filter(|i| !i.passed).find_map(CheckReport::first_witness)
    }

    /// Depth-first search for a named sub-check.
    pub fn find(&self, name: &str) -> Option<&CheckReport> {
        if self.name == name {
            return Some(self);
        }
        self.items.iter().find_map(|item| item.find(name))
    }

    /// Names of failing leaf checks.
    pub fn failures(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_failures(&mut out);
        out
    }

    fn collect_failures<'a>(&'a self, out: &mut Vec<&'a str>) {
        if self.passed {
            return;
        }
        if self.items.is_empty() {
            out.push(&self.name);
        } else {
            for item in &self.items {
                item.collect_failures(out);
            }
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, if self.passed { "pass" } else { "fail" })?;
        if !self.passed {
            let failures = self.failures();
            if !failures.is_empty() && failures != [self.name.as_str()] {
                write!(f, " ({})", failures.join(", "))?;
            }
        }
        if let Some(w) = self.first_witness() {
            write!(f, " at {:?}, residual {}", w.indices, w.residual)?;
        }
        if let Some(r) = self.max_residual {
            write!(f, ", max residual {r:e}")?;
        }
        Ok(())
    }
}
