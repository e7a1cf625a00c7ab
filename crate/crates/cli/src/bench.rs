//! Benchmark harness: certificate lengths, signing-time structure with
//! injected latency, and the migration compatibility matrix. The qualitative
//! comparisons hold as orderings, so each bench asserts its ordering and
//! fails with a nonzero exit when one is violated.

use std::time::{Duration, Instant};

use pqcert_core::provider::SequentialExecutor;
use pqcert_core::x509::VerifierProfile;
use pqcert_core::Error;

use crate::fixtures::{Fixtures, Scheme};
use crate::latency::LatencyProviderSet;
use crate::parallel::ParallelExecutor;
use crate::report::{BenchReport, CompatMatrix};
use crate::HarnessError;

/// DER length per scheme. Asserts the strict ordering
/// composite < catalyst < chameleon.
pub fn bench_sizes(fixtures: &Fixtures) -> Result<BenchReport, HarnessError> {
    let pure = fixtures.issue_pure()?.to_der()?.len();
    let composite = fixtures.issue_composite()?.to_der()?.len();
    let catalyst = fixtures.issue_catalyst()?.to_der()?.len();
    let (outer, _) = fixtures.issue_chameleon()?;
    let chameleon = outer.to_der()?.len();

    let mut report = BenchReport::default();
    report.push(Scheme::Pure, "der_len", pure as f64, "bytes");
    report.push(Scheme::Composite, "der_len", composite as f64, "bytes");
    report.push(Scheme::Catalyst, "der_len", catalyst as f64, "bytes");
    report.push(Scheme::Chameleon, "der_len", chameleon as f64, "bytes");

    if !(composite < catalyst && catalyst < chameleon) {
        return Err(HarnessError::BenchAssertion(format!(
            "expected composite < catalyst < chameleon, got {} / {} / {}",
            composite, catalyst, chameleon
        )));
    }
    Ok(report)
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

fn time_issuance<F: FnMut() -> Result<(), Error>>(
    reps: usize,
    mut issue: F,
) -> Result<Duration, HarnessError> {
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        issue()?;
        samples.push(start.elapsed());
    }
    Ok(median(samples))
}

/// Median issuance wall time per scheme with `latency_ms` injected into
/// every sign call. Asserts the signing-order structure: the composite pair
/// signed concurrently stays under 1.5x the single-sign latency, while both
/// two-phase schemes (and the sequential composite fallback) need at least
/// two full latencies.
pub fn bench_times(
    latency_ms: u64,
    reps: usize,
    fixtures: &Fixtures,
) -> Result<BenchReport, HarnessError> {
    if latency_ms == 0 {
        return Err(HarnessError::Usage("latency must be positive".into()));
    }
    if reps < 3 {
        return Err(HarnessError::Usage("need at least 3 repetitions".into()));
    }
    let providers = LatencyProviderSet::new(&fixtures.registry, latency_ms);

    let pure = time_issuance(reps, || fixtures.issue_pure_with(&providers).map(drop))?;
    let concurrent = time_issuance(reps, || {
        fixtures
            .issue_composite_with(&providers, &ParallelExecutor)
            .map(drop)
    })?;
    let sequential = time_issuance(reps, || {
        fixtures
            .issue_composite_with(&providers, &SequentialExecutor)
            .map(drop)
    })?;
    let catalyst = time_issuance(reps, || fixtures.issue_catalyst_with(&providers).map(drop))?;
    let chameleon = time_issuance(reps, || fixtures.issue_chameleon_with(&providers).map(drop))?;

    let ms = |d: Duration| d.as_secs_f64() * 1e3;
    let mut report = BenchReport::default();
    report.push(Scheme::Pure, "median_issue_ms", ms(pure), "ms");
    report.push(
        Scheme::Composite,
        "median_issue_ms_concurrent",
        ms(concurrent),
        "ms",
    );
    report.push(
        Scheme::Composite,
        "median_issue_ms_sequential",
        ms(sequential),
        "ms",
    );
    report.push(Scheme::Catalyst, "median_issue_ms", ms(catalyst), "ms");
    report.push(Scheme::Chameleon, "median_issue_ms", ms(chameleon), "ms");

    let budget = Duration::from_millis(latency_ms * 3 / 2);
    let floor = Duration::from_millis(latency_ms * 2);
    let check = |label: &str, ok: bool, got: Duration| {
        if ok {
            Ok(())
        } else {
            Err(HarnessError::BenchAssertion(format!(
                "{} (measured {:?})",
                label, got
            )))
        }
    };
    check(
        "concurrent composite under 1.5x latency",
        concurrent < budget,
        concurrent,
    )?;
    check(
        "sequential composite needs two latencies",
        sequential >= floor,
        sequential,
    )?;
    check("catalyst needs two latencies", catalyst >= floor, catalyst)?;
    check(
        "chameleon needs two latencies",
        chameleon >= floor,
        chameleon,
    )?;
    Ok(report)
}

/// Verdict for every scheme under both verifier profiles, evaluated one
/// second into the validity window.
pub fn compat_matrix(fixtures: &Fixtures) -> Result<CompatMatrix, HarnessError> {
    let at = fixtures.clock + 1;
    let certs = [
        (Scheme::Pure, fixtures.issue_pure()?),
        (Scheme::Composite, fixtures.issue_composite()?),
        (Scheme::Catalyst, fixtures.issue_catalyst()?),
        (Scheme::Chameleon, fixtures.issue_chameleon()?.0),
    ];
    let mut matrix = CompatMatrix::default();
    for profile in [VerifierProfile::Legacy, VerifierProfile::PqcAware] {
        for (scheme, cert) in &certs {
            matrix.push(*scheme, profile, fixtures.verify(cert, profile, at));
        }
    }
    Ok(matrix)
}
