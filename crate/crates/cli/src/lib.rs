//! Std companion to `pqcert-core`: deterministic fixtures, latency-injected
//! providers, thread-backed composite signing, file IO, and the benchmark
//! harness behind the `pqcert` command-line tool.

pub mod bench;
pub mod files;
pub mod fixtures;
pub mod inspect;
pub mod latency;
pub mod parallel;
pub mod report;

use std::fmt;

/// Harness-level failures, mapped onto process exit codes by the binary:
/// bench assertion failures exit 3, everything else here exits 2.
/// Verification rejections are verdicts, not errors, and exit 1.
#[derive(Debug)]
pub enum HarnessError {
    Core(pqcert_core::Error),
    Io(std::io::Error),
    Usage(String),
    BenchAssertion(String),
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Core(e) => write!(f, "{}", e),
            Self::Io(e) => write!(f, "{}", e),
            Self::Usage(msg) => write!(f, "{}", msg),
            Self::BenchAssertion(msg) => write!(f, "benchmark assertion failed: {}", msg),
        }
    }
}

impl std::error::Error for HarnessError {}

impl From<pqcert_core::Error> for HarnessError {
    fn from(e: pqcert_core::Error) -> Self {
        Self::Core(e)
    }
}

impl From<std::io::Error> for HarnessError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}
