//! Acceptance suite. Each numbered criterion runs with its tolerances
//! pinned in code and prints one PASS/FAIL line; the suite runs the
//! criteria sequentially so the timing measurements are not disturbed.

use std::time::{Duration, Instant};

use pqcert::bench::{bench_sizes, bench_times, compat_matrix};
use pqcert::fixtures::{Fixtures, Scheme, DEFAULT_CLOCK, INNER_SERIAL};
use pqcert::report::ReportFormat;
use pqcert_core::catalyst::{alt_spki_of, build_pre_tbs, catalyst_issue, CatalystIssueParams};
use pqcert_core::chameleon::{chameleon_issue, reconstruct_delta, ChameleonIssueParams};
use pqcert_core::composite::{composite_issue, decode_pair, encode_pair, CompositeIssueParams};
use pqcert_core::der::{decode_value, decode_value_exact, encode_value, DerValue, Oid};
use pqcert_core::provider::{
    mock_provider, KeyPair, MockProviderSet, SequentialExecutor, SignatureProvider,
};
use pqcert_core::registry::{builtin_registry, Registry, COMPOSITE_MLDSA44_ECDSA_P256};
use pqcert_core::x509::{
    key_usage_extension, Certificate, KeyUsage, Name, RejectReason, Validity, Verdict,
    VerifierProfile,
};

/// xorshift64*; deterministic across runs and platforms.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed | 1)
    }

    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn seed32(&mut self) -> [u8; 32] {
        let mut out = [0u8; 32];
        for chunk in out.chunks_mut(8) {
            chunk.copy_from_slice(&self.next().to_le_bytes());
        }
        out
    }

    fn flip_random_bit(&mut self, bytes: &mut [u8]) {
        let bit = self.below(bytes.len() as u64 * 8) as usize;
        bytes[bit / 8] ^= 1 << (bit % 8);
    }
}

struct Ctx {
    registry: Registry,
    providers: MockProviderSet,
    fixtures: Fixtures,
}

impl Ctx {
    fn new() -> Self {
        let registry = builtin_registry();
        let providers = MockProviderSet::new(&registry);
        let fixtures = Fixtures::new([0; 32], DEFAULT_CLOCK).unwrap();
        Ctx {
            registry,
            providers,
            fixtures,
        }
    }

    fn keygen(&self, alg: &str, seed: [u8; 32]) -> KeyPair {
        mock_provider(&self.registry, alg)
            .unwrap()
            .keygen(&seed)
            .unwrap()
    }
}

type CriterionResult = Result<String, String>;

fn criterion_1_size_ordering(ctx: &Ctx) -> CriterionResult {
    let start = Instant::now();
    let report = bench_sizes(&ctx.fixtures).map_err(|e| e.to_string())?;
    let len = |s| report.value_of(s, "der_len").unwrap() as usize;
    let (composite, catalyst, chameleon) = (
        len(Scheme::Composite),
        len(Scheme::Catalyst),
        len(Scheme::Chameleon),
    );
    if !(composite < catalyst && catalyst < chameleon) {
        return Err(format!(
            "ordering violated: composite {} / catalyst {} / chameleon {}",
            composite, catalyst, chameleon
        ));
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {:?}, budget 1 s", elapsed));
    }
    Ok(format!(
        "composite {} < catalyst {} < chameleon {} bytes in {:?}",
        composite, catalyst, chameleon, elapsed
    ))
}

fn criterion_2_timing_structure(ctx: &Ctx) -> CriterionResult {
    let start = Instant::now();
    let report = bench_times(50, 5, &ctx.fixtures).map_err(|e| e.to_string())?;
    let value = |s, m| report.value_of(s, m).unwrap();
    let concurrent = value(Scheme::Composite, "median_issue_ms_concurrent");
    let sequential = value(Scheme::Composite, "median_issue_ms_sequential");
    let catalyst = value(Scheme::Catalyst, "median_issue_ms");
    let chameleon = value(Scheme::Chameleon, "median_issue_ms");

    let mut problems = Vec::new();
    if concurrent >= 75.0 {
        problems.push(format!(
            "composite concurrent {:.2} ms >= 75 ms",
            concurrent
        ));
    }
    for (label, ms) in [
        ("catalyst", catalyst),
        ("chameleon", chameleon),
        ("composite sequential", sequential),
    ] {
        if ms < 100.0 {
            problems.push(format!("{} {:.2} ms < 100 ms", label, ms));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(10) {
        problems.push(format!("took {:?}, budget 10 s", elapsed));
    }
    if problems.is_empty() {
        Ok(format!(
            "concurrent {:.1} ms < 75; sequential {:.1} / catalyst {:.1} / chameleon {:.1} ms >= 100 ({:?})",
            concurrent, sequential, catalyst, chameleon, elapsed
        ))
    } else {
        Err(problems.join("; "))
    }
}

fn criterion_3_migration_matrix(ctx: &Ctx) -> CriterionResult {
    let matrix = compat_matrix(&ctx.fixtures).map_err(|e| e.to_string())?;
    let expect = [
        (
            Scheme::Pure,
            VerifierProfile::Legacy,
            Verdict::Reject(RejectReason::UnknownAlgorithm),
        ),
        (
            Scheme::Composite,
            VerifierProfile::Legacy,
            Verdict::Reject(RejectReason::UnknownAlgorithm),
        ),
        (Scheme::Catalyst, VerifierProfile::Legacy, Verdict::Accept),
        (Scheme::Chameleon, VerifierProfile::Legacy, Verdict::Accept),
        (Scheme::Pure, VerifierProfile::PqcAware, Verdict::Accept),
        (
            Scheme::Composite,
            VerifierProfile::PqcAware,
            Verdict::Accept,
        ),
        (Scheme::Catalyst, VerifierProfile::PqcAware, Verdict::Accept),
        (
            Scheme::Chameleon,
            VerifierProfile::PqcAware,
            Verdict::Accept,
        ),
    ];
    for (scheme, profile, wanted) in expect {
        let got = matrix.verdict_of(scheme, profile);
        if got != Some(wanted) {
            return Err(format!(
                "cell ({}, {:?}): got {:?}, wanted {:?}",
                scheme, profile, got, wanted
            ));
        }
    }
    Ok("all 8 cells match, 0 tolerance".into())
}

fn criterion_4_composite_and_semantics(ctx: &Ctx) -> CriterionResult {
    let mut rng = Rng::new(0x0401);
    let mut trials = 0usize;
    let mut false_accepts = 0usize;
    for i in 0..100u64 {
        let subject_pqc = ctx.keygen("ML-DSA-44", rng.seed32());
        let subject_classical = ctx.keygen("ECDSA-P256", rng.seed32());
        let ca_pqc = ctx.keygen("ML-DSA-44", rng.seed32());
        let ca_classical = ctx.keygen("ECDSA-P256", rng.seed32());
        let params = CompositeIssueParams {
            subject: Name::new(&format!("Alice-{}", i)),
            subject_pqc_public_key: &subject_pqc.public_key,
            subject_classical_public_key: &subject_classical.public_key,
            issuer: Name::new("Example CA"),
            ca_pqc: &ca_pqc,
            ca_classical: &ca_classical,
            serial: 1 + rng.below(1_000_000),
            validity: Validity::days_from(DEFAULT_CLOCK, 1 + rng.below(3650) as i64),
        };
        let cert = composite_issue(
            &params,
            COMPOSITE_MLDSA44_ECDSA_P256,
            &ctx.registry,
            &ctx.providers,
            &SequentialExecutor,
        )
        .map_err(|e| e.to_string())?;
        let clean = decode_pair(&cert.sig).map_err(|e| e.to_string())?;

        for (tamper_pqc, tamper_classical) in
            [(false, false), (true, false), (false, true), (true, true)]
        {
            let mut pair = clean.clone();
            if tamper_pqc {
                rng.flip_random_bit(&mut pair.first);
            }
            if tamper_classical {
                rng.flip_random_bit(&mut pair.second);
            }
            let mut candidate = cert.clone();
            candidate.sig = encode_pair(&pair).map_err(|e| e.to_string())?;
            let verdict = pqcert_core::composite::composite_verify(
                &candidate,
                &ca_pqc.public_key,
                &ca_classical.public_key,
                VerifierProfile::PqcAware,
                DEFAULT_CLOCK + 1,
                &ctx.registry,
                &ctx.providers,
            );
            trials += 1;
            let should_accept = !tamper_pqc && !tamper_classical;
            match (should_accept, verdict.is_accept()) {
                (true, true) | (false, false) => {}
                (false, true) => false_accepts += 1,
                (true, false) => return Err(format!("valid composite rejected: {:?}", verdict)),
            }
        }
    }
    if false_accepts > 0 {
        return Err(format!(
            "{} false accepts out of {} trials",
            false_accepts, trials
        ));
    }
    Ok(format!(
        "{} tamper trials across 4 cells, 0 false accepts",
        trials
    ))
}

fn criterion_5_catalyst_pre_tbs(ctx: &Ctx) -> CriterionResult {
    let mut rng = Rng::new(0x0502);
    let pqc_provider = mock_provider(&ctx.registry, "ML-DSA-44").unwrap();
    for i in 0..100u64 {
        let subject_pqc = ctx.keygen("ML-DSA-44", rng.seed32());
        let subject_classical = ctx.keygen("ECDSA-P256", rng.seed32());
        let ca_pqc = ctx.keygen("ML-DSA-44", rng.seed32());
        let ca_classical = ctx.keygen("ECDSA-P256", rng.seed32());
        let params = CatalystIssueParams {
            subject: Name::new(&format!("Subject-{}", i)),
            subject_classical_algorithm: "ECDSA-P256",
            subject_classical_public_key: &subject_classical.public_key,
            subject_pqc_algorithm: "ML-DSA-44",
            subject_pqc_public_key: &subject_pqc.public_key,
            issuer: Name::new(&format!("CA-{}", rng.below(10))),
            ca_classical: &ca_classical,
            ca_pqc: &ca_pqc,
            serial: 1 + rng.below(1 << 40),
            validity: Validity::days_from(
                DEFAULT_CLOCK - rng.below(10_000) as i64,
                1 + rng.below(4000) as i64,
            ),
            usages: &[KeyUsage::DigitalSignature],
        };
        let cert =
            catalyst_issue(&params, &ctx.registry, &ctx.providers).map_err(|e| e.to_string())?;

        // Independently rebuild the TBS without ever adding Alt-SPKI, and
        // require byte equality with the stripped issued TBS.
        let mut reference = cert.tbs.clone();
        reference.extensions =
            vec![key_usage_extension(&[KeyUsage::DigitalSignature]).map_err(|e| e.to_string())?];
        let reference_bytes =
            pqcert_core::x509::encode_tbs(&reference).map_err(|e| e.to_string())?;
        let pre_bytes = build_pre_tbs(&cert.tbs).map_err(|e| e.to_string())?;
        if pre_bytes != reference_bytes {
            return Err(format!(
                "issuance {}: pre-TBS differs from independent construction",
                i
            ));
        }
        let alt = alt_spki_of(&cert).map_err(|e| e.to_string())?;
        if !pqc_provider.verify(&ca_pqc.public_key, &pre_bytes, &alt.sig) {
            return Err(format!(
                "issuance {}: PQC signature does not cover the pre-TBS bytes",
                i
            ));
        }
    }
    Ok("100 randomized issuances, pre-TBS byte-exact and PQC-verified".into())
}

fn criterion_6_chameleon_reconstruction(ctx: &Ctx) -> CriterionResult {
    let mut rng = Rng::new(0x0603);
    let usage_sets: [&[KeyUsage]; 3] = [
        &[KeyUsage::DigitalSignature],
        &[KeyUsage::DataEncipherment],
        &[KeyUsage::DigitalSignature, KeyUsage::DataEncipherment],
    ];
    for i in 0..100u64 {
        let subject_pqc = ctx.keygen("ML-DSA-44", rng.seed32());
        let subject_classical = ctx.keygen("ECDSA-P256", rng.seed32());
        let ca_pqc = ctx.keygen("ML-DSA-44", rng.seed32());
        let ca_classical = ctx.keygen("ECDSA-P256", rng.seed32());
        let outer_validity = Validity::days_from(DEFAULT_CLOCK, 1 + rng.below(3000) as i64);
        let same_validity = rng.below(2) == 0;
        let same_subject = rng.below(2) == 0;
        let outer_usages = usage_sets[rng.below(3) as usize];
        let inner_usages = usage_sets[rng.below(3) as usize];
        let params = ChameleonIssueParams {
            subject: Name::new(&format!("Holder-{}", i)),
            inner_subject: (!same_subject).then(|| Name::new(&format!("Holder-{}-delta", i))),
            subject_classical_algorithm: "ECDSA-P256",
            subject_classical_public_key: &subject_classical.public_key,
            subject_pqc_algorithm: "ML-DSA-44",
            subject_pqc_public_key: &subject_pqc.public_key,
            issuer: Name::new("Example CA"),
            ca_classical: &ca_classical,
            ca_pqc: &ca_pqc,
            outer_serial: 1 + rng.below(1 << 30),
            inner_serial: INNER_SERIAL + rng.below(1 << 30),
            outer_validity,
            inner_validity: (!same_validity)
                .then(|| Validity::days_from(DEFAULT_CLOCK + 60, 1 + rng.below(3000) as i64)),
            outer_usages,
            inner_usages,
        };
        let (outer, inner) =
            chameleon_issue(&params, &ctx.registry, &ctx.providers).map_err(|e| e.to_string())?;
        let rebuilt = reconstruct_delta(&outer).map_err(|e| e.to_string())?;
        let rebuilt_der = rebuilt.to_der().map_err(|e| e.to_string())?;
        let inner_der = inner.to_der().map_err(|e| e.to_string())?;
        if rebuilt_der != inner_der {
            return Err(format!(
                "issuance {}: reconstructed inner differs from original",
                i
            ));
        }
    }
    Ok("100 randomized issuances reconstruct byte-identically".into())
}

fn random_oid(rng: &mut Rng) -> Oid {
    let mut arcs = vec![rng.below(3), rng.below(40)];
    for _ in 0..rng.below(5) {
        arcs.push(rng.below(100_000));
    }
    Oid::new(arcs).unwrap()
}

fn random_bytes(rng: &mut Rng, max_len: u64) -> Vec<u8> {
    let len = rng.below(max_len + 1) as usize;
    (0..len).map(|_| rng.next() as u8).collect()
}

fn random_der_value(rng: &mut Rng, depth: usize) -> DerValue {
    let make_leaf = depth >= 5 || rng.below(100) < 55;
    if make_leaf {
        match rng.below(10) {
            0 => DerValue::boolean(rng.below(2) == 1),
            1 => DerValue::integer(rng.next()),
            2 => DerValue::octet_string(&random_bytes(rng, 700)),
            3 => DerValue::bit_string(&random_bytes(rng, 96)),
            4 => DerValue::null(),
            5 => DerValue::oid(&random_oid(rng)),
            6 => DerValue::utf8(&format!("v{}", rng.next())),
            7 => DerValue::printable("pqcert"),
            8 => DerValue::utc_time("250101000000Z"),
            _ => DerValue::context_primitive(rng.below(15) as u32, random_bytes(rng, 48)),
        }
    } else {
        let children: Vec<DerValue> = (0..rng.below(4))
            .map(|_| random_der_value(rng, depth + 1))
            .collect();
        match rng.below(3) {
            0 => DerValue::sequence(children),
            1 => DerValue::set(children),
            _ => DerValue::context(rng.below(15) as u32, children),
        }
    }
}

/// Stretch the outermost length field into a redundant long form.
fn lengthen_root_length(encoded: &[u8]) -> Vec<u8> {
    let mut out = encoded.to_vec();
    let len_byte = out[1];
    if len_byte < 0x80 {
        out[1] = 0x81;
        out.insert(2, len_byte);
    } else {
        let count = len_byte & 0x7F;
        out[1] = 0x80 | (count + 1);
        out.insert(2, 0x00);
    }
    out
}

fn criterion_7_der_round_trip(ctx: &Ctx) -> CriterionResult {
    let start = Instant::now();
    let mut rng = Rng::new(0x0704);
    for i in 0..1000u32 {
        let value = random_der_value(&mut rng, 1);
        let encoded = encode_value(&value).map_err(|e| e.to_string())?;
        let (decoded, used) = decode_value(&encoded).map_err(|e| format!("tree {}: {}", i, e))?;
        if used != encoded.len() || decoded != value {
            return Err(format!("tree {}: decode(encode(v)) != v", i));
        }
        if encode_value(&decoded).map_err(|e| e.to_string())? != encoded {
            return Err(format!("tree {}: encode(decode(b)) != b", i));
        }
        if decode_value(&lengthen_root_length(&encoded)).is_ok() {
            return Err(format!("tree {}: non-minimal length accepted", i));
        }
    }

    // Every issued certificate round-trips as well.
    let f = &ctx.fixtures;
    let (outer, inner) = f.issue_chameleon().map_err(|e| e.to_string())?;
    let certs: Vec<Certificate> = vec![
        f.issue_pure().map_err(|e| e.to_string())?,
        f.issue_pure_kem().map_err(|e| e.to_string())?,
        f.issue_composite().map_err(|e| e.to_string())?,
        f.issue_catalyst().map_err(|e| e.to_string())?,
        outer,
        inner,
    ];
    for (i, cert) in certs.iter().enumerate() {
        let der = cert.to_der().map_err(|e| e.to_string())?;
        let parsed = Certificate::from_der(&der).map_err(|e| format!("cert {}: {}", i, e))?;
        if &parsed != cert || parsed.to_der().map_err(|e| e.to_string())? != der {
            return Err(format!("certificate {} does not round-trip", i));
        }
        if decode_value_exact(&lengthen_root_length(&der)).is_ok() {
            return Err(format!("certificate {}: non-minimal length accepted", i));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(5) {
        return Err(format!("took {:?}, budget 5 s", elapsed));
    }
    Ok(format!(
        "1000 random trees + 6 issued certificates in {:?}",
        elapsed
    ))
}

fn criterion_8_dual_security(ctx: &Ctx) -> CriterionResult {
    let f = &ctx.fixtures;
    let at = DEFAULT_CLOCK + 1;
    let mut population: Vec<Certificate> = vec![f.issue_catalyst().map_err(|e| e.to_string())?];
    let (outer, _) = f.issue_chameleon().map_err(|e| e.to_string())?;
    population.push(outer);

    // Add variants whose PQC material is broken but whose outer signature
    // is re-signed: the implication must still hold (legacy keeps accepting).
    let mut rng = Rng::new(0x0805);
    for base in population.clone() {
        for _ in 0..20 {
            let mut tbs = base.tbs.clone();
            for ext in &mut tbs.extensions {
                if ext.oid == pqcert_core::x509::oids::alt_spki()
                    || ext.oid == pqcert_core::x509::oids::delta_descriptor()
                {
                    rng.flip_random_bit(&mut ext.value);
                }
            }
            let resigned = pqcert_core::x509::sign_certificate(
                tbs,
                &f.ca.classical,
                &ctx.registry,
                &ctx.providers,
            )
            .map_err(|e| e.to_string())?;
            population.push(resigned);
        }
    }

    let mut checked = 0usize;
    for cert in &population {
        let aware = f.verify(cert, VerifierProfile::PqcAware, at);
        let legacy = f.verify(cert, VerifierProfile::Legacy, at);
        if aware.is_accept() && !legacy.is_accept() {
            return Err(format!(
                "dual security violated: pqc-aware {:?} but legacy {:?}",
                aware, legacy
            ));
        }
        checked += 1;
    }
    Ok(format!(
        "pqc-aware accept implies legacy accept across {} certificates",
        checked
    ))
}

fn criterion_9_determinism(ctx: &Ctx) -> CriterionResult {
    let f = &ctx.fixtures;
    let again = Fixtures::new([0; 32], DEFAULT_CLOCK).map_err(|e| e.to_string())?;

    let a = bench_sizes(f)
        .map_err(|e| e.to_string())?
        .emit(ReportFormat::Csv);
    let b = bench_sizes(&again)
        .map_err(|e| e.to_string())?
        .emit(ReportFormat::Csv);
    if a != b {
        return Err("bench size reports differ across runs".into());
    }

    let pairs = [
        (
            f.issue_pure().map_err(|e| e.to_string())?,
            again.issue_pure().map_err(|e| e.to_string())?,
        ),
        (
            f.issue_composite().map_err(|e| e.to_string())?,
            again.issue_composite().map_err(|e| e.to_string())?,
        ),
        (
            f.issue_catalyst().map_err(|e| e.to_string())?,
            again.issue_catalyst().map_err(|e| e.to_string())?,
        ),
        (
            f.issue_chameleon().map_err(|e| e.to_string())?.0,
            again.issue_chameleon().map_err(|e| e.to_string())?.0,
        ),
        (
            f.issue_chameleon().map_err(|e| e.to_string())?.1,
            again.issue_chameleon().map_err(|e| e.to_string())?.1,
        ),
    ];
    for (i, (x, y)) in pairs.iter().enumerate() {
        if x.to_der().map_err(|e| e.to_string())? != y.to_der().map_err(|e| e.to_string())? {
            return Err(format!(
                "issuance {} differs across identically seeded runs",
                i
            ));
        }
    }
    Ok("bench size and all issuances byte-identical across reruns".into())
}

#[test]
fn acceptance() {
    let ctx = Ctx::new();
    type Criterion = fn(&Ctx) -> CriterionResult;
    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "1. size ordering (composite < catalyst < chameleon)",
            criterion_1_size_ordering,
        ),
        (
            "2. timing structure with 50 ms injected latency",
            criterion_2_timing_structure,
        ),
        ("3. migration matrix cells", criterion_3_migration_matrix),
        (
            "4. composite AND-semantics, 100 trials per cell",
            criterion_4_composite_and_semantics,
        ),
        (
            "5. catalyst pre-TBS exactness, 100 issuances",
            criterion_5_catalyst_pre_tbs,
        ),
        (
            "6. chameleon reconstruction, 100 issuances",
            criterion_6_chameleon_reconstruction,
        ),
        (
            "7. DER canonical round-trip, 1000 trees",
            criterion_7_der_round_trip,
        ),
        ("8. dual-security implication", criterion_8_dual_security),
        (
            "9. determinism of bench size and issue",
            criterion_9_determinism,
        ),
    ];

    let mut failures = Vec::new();
    for (name, run) in criteria {
        match run(&ctx) {
            Ok(detail) => println!("PASS {} — {}", name, detail),
            Err(detail) => {
                println!("FAIL {} — {}", name, detail);
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {:?}", failures);
}
