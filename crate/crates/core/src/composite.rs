//! Composite scheme: one certificate, one composite OID, both public keys
//! merged into a single SPKI bit string and both signatures merged into a
//! single Sig field. Verification is a logical AND over the components.
//!
//! The merged payload is a DER SEQUENCE of two BIT STRINGs rather than a raw
//! concatenation: the classical component is variable-length, so the
//! encoding has to be self-delimiting. The two component signatures cover
//! the same TBS bytes and have no ordering dependency, which is what lets a
//! thread-backed [`SignExecutor`] run them concurrently.

use alloc::vec;
use alloc::vec::Vec;

use crate::der::{self, tag, DerValue, Oid};
use crate::provider::{KeyPair, ProviderSet, SignExecutor, SignatureProvider};
use crate::registry::{Registry, Role};
use crate::x509::{
    self, key_usage_extension, Certificate, KeyUsage, Name, RejectReason, SubjectPublicKeyInfo,
    TbsCertificate, Validity, Verdict, VerifierProfile,
};
use crate::Error;

/// PQC component first, classical component second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositePair {
    pub first: Vec<u8>,
    pub second: Vec<u8>,
}

/// Encode the merged payload carried inside the outer BIT STRING.
pub fn encode_pair(pair: &CompositePair) -> Result<Vec<u8>, Error> {
    if pair.first.is_empty() || pair.second.is_empty() {
        return Err(Error::MalformedCertificate("empty composite component"));
    }
    let value = DerValue::sequence(vec![
        DerValue::bit_string(&pair.first),
        DerValue::bit_string(&pair.second),
    ]);
    Ok(der::encode_value(&value)?)
}

/// Exact inverse of [`encode_pair`].
pub fn decode_pair(bytes: &[u8]) -> Result<CompositePair, Error> {
    let malformed = Error::MalformedCertificate("composite payload is not a pair of BIT STRINGs");
    let value = der::decode_value_exact(bytes)?;
    let [first, second] = value
        .children()
        .filter(|_| value.is_universal(tag::SEQUENCE))
        .ok_or(malformed)?
    else {
        return Err(malformed);
    };
    let unpack = |v: &DerValue| -> Result<Vec<u8>, Error> {
        match v.as_bit_string() {
            Some((0, bits)) if !bits.is_empty() => Ok(bits.to_vec()),
            _ => Err(malformed),
        }
    };
    Ok(CompositePair {
        first: unpack(first)?,
        second: unpack(second)?,
    })
}

pub struct CompositeIssueParams<'a> {
    pub subject: Name,
    pub subject_pqc_public_key: &'a [u8],
    pub subject_classical_public_key: &'a [u8],
    pub issuer: Name,
    pub ca_pqc: &'a KeyPair,
    pub ca_classical: &'a KeyPair,
    pub serial: u64,
    pub validity: Validity,
}

/// Issue a composite certificate. Both component signatures cover the same
/// TBS bytes; the executor decides whether they run sequentially or
/// concurrently, and either way the output is identical.
pub fn composite_issue(
    params: &CompositeIssueParams<'_>,
    composite_name: &str,
    registry: &Registry,
    providers: &dyn ProviderSet,
    executor: &dyn SignExecutor,
) -> Result<Certificate, Error> {
    let composite = registry.require(composite_name)?;
    if composite.role != Role::CompositeSignature {
        return Err(Error::UnknownAlgorithm);
    }
    let [pqc_name, classical_name] = composite.component_names.as_slice() else {
        return Err(Error::UnknownAlgorithm);
    };
    if params.ca_pqc.algorithm != *pqc_name || params.ca_classical.algorithm != *classical_name {
        return Err(Error::ComponentMismatch);
    }
    let pqc_alg = registry.require(pqc_name)?;
    let classical_alg = registry.require(classical_name)?;
    if !pqc_alg
        .public_key_len
        .contains(params.subject_pqc_public_key.len())
        || !classical_alg
            .public_key_len
            .contains(params.subject_classical_public_key.len())
    {
        return Err(Error::MalformedCertificate(
            "subject key length off profile",
        ));
    }

    let spki_key = encode_pair(&CompositePair {
        first: params.subject_pqc_public_key.to_vec(),
        second: params.subject_classical_public_key.to_vec(),
    })?;
    let tbs = TbsCertificate {
        serial: params.serial,
        signature_alg: composite.oid.clone(),
        issuer: params.issuer.clone(),
        validity: params.validity,
        subject: params.subject.clone(),
        spki: SubjectPublicKeyInfo {
            alg_oid: composite.oid.clone(),
            key: spki_key,
        },
        extensions: vec![key_usage_extension(&[KeyUsage::DigitalSignature])?],
    };
    let tbs_bytes = x509::encode_tbs(&tbs)?;

    let pqc_provider: &dyn SignatureProvider = providers.require(pqc_name)?;
    let classical_provider: &dyn SignatureProvider = providers.require(classical_name)?;
    let (pqc_sig, classical_sig) = executor.sign_pair(
        &|| pqc_provider.sign(&params.ca_pqc.private_key, &tbs_bytes),
        &|| classical_provider.sign(&params.ca_classical.private_key, &tbs_bytes),
    );
    let sig = encode_pair(&CompositePair {
        first: pqc_sig?,
        second: classical_sig?,
    })?;

    Ok(Certificate {
        tbs,
        sig_alg: composite.oid.clone(),
        sig,
    })
}

/// Verify a composite certificate: both component signatures must pass. A
/// legacy verifier does not recognize the composite OID and rejects
/// unconditionally.
pub fn composite_verify(
    cert: &Certificate,
    ca_pqc_public_key: &[u8],
    ca_classical_public_key: &[u8],
    profile: VerifierProfile,
    at: i64,
    registry: &Registry,
    providers: &dyn ProviderSet,
) -> Verdict {
    let Some(entry) = registry.lookup_by_oid(&cert.sig_alg) else {
        return Verdict::Reject(RejectReason::UnknownAlgorithm);
    };
    if entry.role != Role::CompositeSignature || profile == VerifierProfile::Legacy {
        return Verdict::Reject(RejectReason::UnknownAlgorithm);
    }
    for ext in &cert.tbs.extensions {
        if ext.critical && !x509::extension_known(&ext.oid, profile) {
            return Verdict::Reject(RejectReason::UnknownCriticalExtension);
        }
    }
    if cert.tbs.signature_alg != cert.sig_alg {
        return Verdict::Reject(RejectReason::BadSignature);
    }
    let [pqc_name, classical_name] = entry.component_names.as_slice() else {
        return Verdict::Reject(RejectReason::UnknownAlgorithm);
    };
    let (Some(pqc_provider), Some(classical_provider)) =
        (providers.get(pqc_name), providers.get(classical_name))
    else {
        return Verdict::Reject(RejectReason::UnknownAlgorithm);
    };
    let Ok(sigs) = decode_pair(&cert.sig) else {
        return Verdict::Reject(RejectReason::BadSignature);
    };
    let Ok(tbs_bytes) = x509::encode_tbs(&cert.tbs) else {
        return Verdict::Reject(RejectReason::BadSignature);
    };
    if !pqc_provider.verify(ca_pqc_public_key, &tbs_bytes, &sigs.first)
        || !classical_provider.verify(ca_classical_public_key, &tbs_bytes, &sigs.second)
    {
        return Verdict::Reject(RejectReason::BadSignature);
    }
    if !cert.tbs.validity.contains(at) {
        return Verdict::Reject(RejectReason::Expired);
    }
    Verdict::Accept
}

/// Composite OID registered for the toolkit's running configuration.
pub fn composite_oid(registry: &Registry) -> Oid {
    registry
        .lookup(crate::registry::COMPOSITE_MLDSA44_ECDSA_P256)
        .expect("built-in composite entry")
        .oid
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::provider::{mock_provider, MockProviderSet, SequentialExecutor, SignatureProvider};
    use crate::registry::{builtin_registry, COMPOSITE_MLDSA44_ECDSA_P256};

    const CLOCK: i64 = 1_735_689_600;

    struct Env {
        registry: Registry,
        providers: MockProviderSet,
        ca_pqc: KeyPair,
        ca_classical: KeyPair,
        subject_pqc: KeyPair,
        subject_classical: KeyPair,
    }

    fn env() -> Env {
        let registry = builtin_registry();
        let providers = MockProviderSet::new(&registry);
        let ca_pqc = mock_provider(&registry, "ML-DSA-44")
            .unwrap()
            .keygen(&[1; 32])
            .unwrap();
        let ca_classical = mock_provider(&registry, "ECDSA-P256")
            .unwrap()
            .keygen(&[2; 32])
            .unwrap();
        let subject_pqc = mock_provider(&registry, "ML-DSA-44")
            .unwrap()
            .keygen(&[3; 32])
            .unwrap();
        let subject_classical = mock_provider(&registry, "ECDSA-P256")
            .unwrap()
            .keygen(&[4; 32])
            .unwrap();
        Env {
            registry,
            providers,
            ca_pqc,
            ca_classical,
            subject_pqc,
            subject_classical,
        }
    }

    fn issue(env: &Env) -> Certificate {
        let params = CompositeIssueParams {
            subject: Name::new("Alice"),
            subject_pqc_public_key: &env.subject_pqc.public_key,
            subject_classical_public_key: &env.subject_classical.public_key,
            issuer: Name::new("Example CA"),
            ca_pqc: &env.ca_pqc,
            ca_classical: &env.ca_classical,
            serial: 1,
            validity: Validity::days_from(CLOCK, 365),
        };
        composite_issue(
            &params,
            COMPOSITE_MLDSA44_ECDSA_P256,
            &env.registry,
            &env.providers,
            &SequentialExecutor,
        )
        .unwrap()
    }

    fn verify(env: &Env, cert: &Certificate, profile: VerifierProfile) -> Verdict {
        composite_verify(
            cert,
            &env.ca_pqc.public_key,
            &env.ca_classical.public_key,
            profile,
            CLOCK + 1,
            &env.registry,
            &env.providers,
        )
    }

    #[test]
    fn pair_round_trip_preserves_component_lengths() {
        let pair = CompositePair {
            first: vec![0xA5; 1312],
            second: vec![0x5A; 65],
        };
        let encoded = encode_pair(&pair).unwrap();
        let decoded = decode_pair(&encoded).unwrap();
        assert_eq!(decoded.first.len(), 1312);
        assert_eq!(decoded.second.len(), 65);
        assert_eq!(decoded, pair);

        let tiny = CompositePair {
            first: vec![1],
            second: vec![2],
        };
        assert_eq!(decode_pair(&encode_pair(&tiny).unwrap()).unwrap(), tiny);
    }

    #[test]
    fn pair_rejects_empty_components_and_wrong_arity() {
        assert!(encode_pair(&CompositePair {
            first: vec![],
            second: vec![1]
        })
        .is_err());

        let three = DerValue::sequence(vec![
            DerValue::bit_string(&[1]),
            DerValue::bit_string(&[2]),
            DerValue::bit_string(&[3]),
        ]);
        assert!(decode_pair(&der::encode_value(&three).unwrap()).is_err());

        let not_bits = DerValue::sequence(vec![DerValue::integer(1), DerValue::bit_string(&[2])]);
        assert!(decode_pair(&der::encode_value(&not_bits).unwrap()).is_err());
    }

    #[test]
    fn one_certificate_one_spki_one_sig_field() {
        let env = env();
        let cert = issue(&env);
        let composite = env.registry.lookup(COMPOSITE_MLDSA44_ECDSA_P256).unwrap();
        assert_eq!(cert.tbs.spki.alg_oid, composite.oid);
        assert_eq!(cert.sig_alg, composite.oid);

        let keys = decode_pair(&cert.tbs.spki.key).unwrap();
        assert_eq!(keys.first, env.subject_pqc.public_key);
        assert_eq!(keys.second, env.subject_classical.public_key);

        let sigs = decode_pair(&cert.sig).unwrap();
        assert_eq!(sigs.first.len(), 2420);
        assert!((70..=72).contains(&sigs.second.len()));
    }

    #[test]
    fn both_components_sign_identical_tbs_bytes() {
        let env = env();
        let cert = issue(&env);
        let tbs_bytes = x509::encode_tbs(&cert.tbs).unwrap();
        let sigs = decode_pair(&cert.sig).unwrap();
        let pqc = mock_provider(&env.registry, "ML-DSA-44").unwrap();
        let classical = mock_provider(&env.registry, "ECDSA-P256").unwrap();
        assert!(pqc.verify(&env.ca_pqc.public_key, &tbs_bytes, &sigs.first));
        assert!(classical.verify(&env.ca_classical.public_key, &tbs_bytes, &sigs.second));
    }

    #[test]
    fn and_semantics_over_all_tamper_combinations() {
        let env = env();
        let cert = issue(&env);
        let good = decode_pair(&cert.sig).unwrap();

        for (tamper_first, tamper_second) in
            [(false, false), (true, false), (false, true), (true, true)]
        {
            let mut pair = good.clone();
            if tamper_first {
                pair.first[0] ^= 0x01;
            }
            if tamper_second {
                pair.second[0] ^= 0x01;
            }
            let mut candidate = cert.clone();
            candidate.sig = encode_pair(&pair).unwrap();
            let verdict = verify(&env, &candidate, VerifierProfile::PqcAware);
            if tamper_first || tamper_second {
                assert_eq!(verdict, Verdict::Reject(RejectReason::BadSignature));
            } else {
                assert_eq!(verdict, Verdict::Accept);
            }
        }
    }

    #[test]
    fn legacy_profile_rejects_composite_unconditionally() {
        let env = env();
        let cert = issue(&env);
        assert_eq!(
            verify(&env, &cert, VerifierProfile::Legacy),
            Verdict::Reject(RejectReason::UnknownAlgorithm)
        );
        assert_eq!(
            verify(&env, &cert, VerifierProfile::PqcAware),
            Verdict::Accept
        );
    }

    #[test]
    fn issuance_is_deterministic() {
        let env = env();
        let a = issue(&env);
        let b = issue(&env);
        assert_eq!(a.to_der().unwrap(), b.to_der().unwrap());
    }

    #[test]
    fn mismatched_ca_keys_rejected() {
        let env = env();
        let params = CompositeIssueParams {
            subject: Name::new("Alice"),
            subject_pqc_public_key: &env.subject_pqc.public_key,
            subject_classical_public_key: &env.subject_classical.public_key,
            issuer: Name::new("Example CA"),
            ca_pqc: &env.ca_classical, // swapped on purpose
            ca_classical: &env.ca_pqc,
            serial: 1,
            validity: Validity::days_from(CLOCK, 365),
        };
        assert_eq!(
            composite_issue(
                &params,
                COMPOSITE_MLDSA44_ECDSA_P256,
                &env.registry,
                &env.providers,
                &SequentialExecutor,
            ),
            Err(Error::ComponentMismatch)
        );
    }

    #[test]
    fn expired_composite_rejected() {
        let env = env();
        let cert = issue(&env);
        let verdict = composite_verify(
            &cert,
            &env.ca_pqc.public_key,
            &env.ca_classical.public_key,
            VerifierProfile::PqcAware,
            CLOCK + 400 * 86_400,
            &env.registry,
            &env.providers,
        );
        assert_eq!(verdict, Verdict::Reject(RejectReason::Expired));
    }
}
