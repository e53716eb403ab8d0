//! Bounded machine verification of the structure theorems relating regular
//! words, the free Lie algebra and the Heisenberg-Weyl algebra.
//!
//! Every verification returns a [`VerificationReport`] listing each failed
//! check with its input, the expected value and the computed value. A
//! report passes when `failures` is empty.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod core_lie;
mod decomposition;
mod generation;
mod ideal;
mod inclusion;
mod kernel;

pub use core_lie::verify_core_lie;
pub use decomposition::verify_decomposition;
pub use generation::{generation_tree, verify_generation, Generator, LieExpr};
pub use ideal::{
    ideal_truncation, in_complement_of_normal_part, verify_ideal_membership,
    verify_ideal_membership_with, IdealTruncation,
};
pub use inclusion::verify_inclusion_compositions;
pub use kernel::{lie_image, verify_presentation_kernel};

/// One failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub bound: Vec<u64>,
    pub checks_run: u64,
    pub failures: Vec<Failure>,
    /// Observations that are not pass/fail checks, such as the closure
    /// depth needed for an ideal membership.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(name: &str, bound: Vec<u64>) -> Self {
        VerificationReport {
            name: name.to_string(),
            bound,
            checks_run: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one check; `describe` is only called when `ok` is false.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> Failure) {
        self.checks_run += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    /// Records an equality check between two displayable values.
    pub fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        input: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) {
        self.check(expected == actual, || Failure {
            input: input(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bound: Vec<String> = self.bound.iter().map(u64::to_string).collect();
        writeln!(
            f,
            "{}: {} (bound {}; {} checks, {} failures)",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            bound.join(", "),
            self.checks_run,
            self.failures.len()
        )?;
        for fail in &self.failures {
            writeln!(f, "  failure at {}", fail.input)?;
            writeln!(f, "    expected: {}", fail.expected)?;
            writeln!(f, "    actual:   {}", fail.actual)?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

/// The available verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    CoreLie,
    Decomposition,
    Generation,
    IdealMembership,
    InclusionCompositions,
    PresentationKernel,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::CoreLie,
        Suite::Decomposition,
        Suite::Generation,
        Suite::IdealMembership,
        Suite::InclusionCompositions,
        Suite::PresentationKernel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CoreLie => "core-lie",
            Suite::Decomposition => "decomposition",
            Suite::Generation => "generation",
            Suite::IdealMembership => "ideal-membership",
            Suite::InclusionCompositions => "inclusion-compositions",
            Suite::PresentationKernel => "presentation-kernel",
        }
    }

    /// Default `(bound, cap)`; `cap` is `None` for suites with one parameter.
    pub fn default_bounds(self) -> (u32, Option<u32>) {
        match self {
            Suite::CoreLie => (5, Some(12)),
            Suite::Decomposition => (8, Some(12)),
            Suite::Generation => (10, None),
            Suite::IdealMembership => (8, Some(10)),
            Suite::InclusionCompositions => (3, None),
            Suite::PresentationKernel => (8, None),
        }
    }

    /// Runs the suite. For `core-lie` the bound is the deepest
    /// lower-central-series index and the cap the largest power of `A`; for
    /// `decomposition` the bound is the total degree and the cap the basis
    /// exponent cap; for `ideal-membership` the bound is the target word
    /// length and the cap the truncation length. The cap defaults per
    /// [`Suite::default_bounds`] and is ignored by other suites.
    pub fn run(self, bound: u32, cap: Option<u32>) -> Result<VerificationReport> {
        let cap = cap.or(self.default_bounds().1);
        match self {
            Suite::CoreLie => verify_core_lie(cap.unwrap_or(bound + 2), bound),
            Suite::Decomposition => verify_decomposition(bound, cap.unwrap_or(bound)),
            Suite::Generation => verify_generation(bound),
            Suite::IdealMembership => verify_ideal_membership_with(bound, cap.unwrap_or(bound)),
            Suite::InclusionCompositions => verify_inclusion_compositions(bound),
            Suite::PresentationKernel => verify_presentation_kernel(bound),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Parse(format!(
                    "unknown verification `{s}` (expected one of: {})",
                    names.join(", ")
                ))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs every suite at its default bounds on separate threads and returns
/// the reports sorted by name.
pub fn run_all() -> Result<Vec<VerificationReport>> {
    let mut reports = std::thread::scope(|scope| {
        let handles: Vec<_> = Suite::ALL
            .into_iter()
            .map(|suite| {
                scope.spawn(move || {
                    let (bound, cap) = suite.default_bounds();
                    suite.run(bound, cap)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidBound(msg()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn report_records_failures_lazily() {
        let mut r = VerificationReport::new("demo", vec![1]);
        r.check_eq(|| "x".to_string(), &1, &1);
        r.check_eq(|| "y".to_string(), &1, &2);
        assert_eq!(r.checks_run, 2);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].input, "y");
        assert!(!r.passed());
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("notes"));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
