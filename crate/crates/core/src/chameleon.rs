//! Chameleon scheme: an outer classical certificate embeds a delta
//! certificate descriptor from which a complete inner PQC certificate is
//! reconstructed. Fields whose canonical DER bytes match the outer
//! certificate are elided from the descriptor; serial, SPKI, and the inner
//! signature are always present (the inner key necessarily differs).
//!
//! Descriptor layout, with the optional fields under explicit context tags
//! in fixed order:
//!
//! ```text
//! SEQUENCE {
//!   INTEGER      serial
//!   [0] AlgorithmIdentifier  OPTIONAL   -- inner signature algorithm
//!   [1] Name                 OPTIONAL   -- inner issuer
//!   [2] Validity             OPTIONAL
//!   [3] Name                 OPTIONAL   -- inner subject
//!   SubjectPublicKeyInfo
//!   [4] Extensions           OPTIONAL
//!   BIT STRING   sig                    -- inner certificate signature
//! }
//! ```
//!
//! Signing is inner-first: the inner certificate must exist before its
//! descriptor can be embedded and the outer TBS signed, so the two
//! signatures cannot be computed concurrently.

use alloc::vec;
use alloc::vec::Vec;

use crate::der::{self, tag, DerValue, Oid};
use crate::provider::{KeyPair, ProviderSet};
use crate::registry::Registry;
use crate::x509::{
    self, algorithm_identifier, extensions_value, key_usage_extension, name_value, oids,
    spki_value, validity_value, Certificate, Extension, KeyUsage, Name, RejectReason,
    SubjectPublicKeyInfo, TbsCertificate, Validity, Verdict, VerifierProfile,
};
use crate::Error;

/// Difference record between the inner certificate and the outer TBS. An
/// optional field is absent exactly when the inner value's canonical DER
/// equals the outer value's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaCertificateDescriptor {
    pub serial: u64,
    pub signature_alg: Option<Oid>,
    pub issuer: Option<Name>,
    pub validity: Option<Validity>,
    pub subject: Option<Name>,
    pub spki: SubjectPublicKeyInfo,
    pub extensions: Option<Vec<Extension>>,
    pub sig: Vec<u8>,
}

impl DeltaCertificateDescriptor {
    fn to_value(&self) -> Result<DerValue, Error> {
        if self.serial == 0 {
            return Err(Error::InvalidSerial);
        }
        let mut children = vec![DerValue::integer(self.serial)];
        if let Some(alg) = &self.signature_alg {
            children.push(DerValue::context(0, vec![algorithm_identifier(alg)]));
        }
        if let Some(issuer) = &self.issuer {
            children.push(DerValue::context(1, vec![name_value(issuer)?]));
        }
        if let Some(validity) = &self.validity {
            children.push(DerValue::context(2, vec![validity_value(validity)?]));
        }
        if let Some(subject) = &self.subject {
            children.push(DerValue::context(3, vec![name_value(subject)?]));
        }
        children.push(spki_value(&self.spki));
        if let Some(extensions) = &self.extensions {
            children.push(DerValue::context(4, vec![extensions_value(extensions)]));
        }
        children.push(DerValue::bit_string(&self.sig));
        Ok(DerValue::sequence(children))
    }

    /// Encode as the non-critical descriptor extension.
    pub fn to_extension(&self) -> Result<Extension, Error> {
        Ok(Extension {
            oid: oids::delta_descriptor(),
            critical: false,
            value: der::encode_value(&self.to_value()?)?,
        })
    }

    pub fn from_extension(ext: &Extension) -> Result<Self, Error> {
        if ext.oid != oids::delta_descriptor() {
            return Err(Error::MalformedDescriptor);
        }
        let value = der::decode_value_exact(&ext.value).map_err(|_| Error::MalformedDescriptor)?;
        Self::from_value(&value)
    }

    fn from_value(value: &DerValue) -> Result<Self, Error> {
        let malformed = Error::MalformedDescriptor;
        let children = value
            .children()
            .filter(|_| value.is_universal(tag::SEQUENCE))
            .ok_or(malformed)?;
        let mut iter = children.iter().peekable();

        let serial = iter.next().and_then(DerValue::as_u64).ok_or(malformed)?;
        if serial == 0 {
            return Err(malformed);
        }

        let signature_alg = match take_context(&mut iter, 0)? {
            Some(inner) => Some(decode_algorithm_value(inner)?),
            None => None,
        };
        let issuer = match take_context(&mut iter, 1)? {
            Some(inner) => Some(decode_name_value(inner)?),
            None => None,
        };
        let validity = match take_context(&mut iter, 2)? {
            Some(inner) => Some(decode_validity_value(inner)?),
            None => None,
        };
        let subject = match take_context(&mut iter, 3)? {
            Some(inner) => Some(decode_name_value(inner)?),
            None => None,
        };

        let spki_raw = iter.next().ok_or(malformed)?;
        let spki = decode_spki_value(spki_raw)?;

        let extensions = match take_context(&mut iter, 4)? {
            Some(inner) => Some(x509::decode_extensions(inner).map_err(|_| malformed)?),
            None => None,
        };

        let sig_raw = iter.next().ok_or(malformed)?;
        let sig = match sig_raw.as_bit_string() {
            Some((0, bits)) => bits.to_vec(),
            _ => return Err(malformed),
        };
        if iter.next().is_some() {
            return Err(malformed);
        }
        Ok(Self {
            serial,
            signature_alg,
            issuer,
            validity,
            subject,
            spki,
            extensions,
            sig,
        })
    }
}

/// Consume an optional `[number]` wrapper from the front of the child list,
/// returning its single inner value when present.
fn take_context<'a, I: Iterator<Item = &'a DerValue>>(
    iter: &mut core::iter::Peekable<I>,
    number: u32,
) -> Result<Option<&'a DerValue>, Error> {
    match iter.peek() {
        Some(v) if v.is_context(number) => {
            let wrapper = iter.next().expect("peeked");
            match wrapper.children() {
                Some([inner]) => Ok(Some(inner)),
                _ => Err(Error::MalformedDescriptor),
            }
        }
        _ => Ok(None),
    }
}

// Field decoders reused from the x509 wire shapes, with descriptor-flavored
// errors.
fn decode_algorithm_value(value: &DerValue) -> Result<Oid, Error> {
    x509::decode_algorithm(value).map_err(|_| Error::MalformedDescriptor)
}

fn decode_name_value(value: &DerValue) -> Result<Name, Error> {
    x509::decode_name(value).map_err(|_| Error::MalformedDescriptor)
}

fn decode_validity_value(value: &DerValue) -> Result<Validity, Error> {
    x509::decode_validity(value).map_err(|_| Error::MalformedDescriptor)
}

fn decode_spki_value(value: &DerValue) -> Result<SubjectPublicKeyInfo, Error> {
    x509::decode_spki(value).map_err(|_| Error::MalformedDescriptor)
}

/// Canonical-bytes equality for one field of the two certificates.
fn same_der<T, F>(a: &T, b: &T, encode: F) -> Result<bool, Error>
where
    F: Fn(&T) -> Result<Vec<u8>, Error>,
{
    Ok(encode(a)? == encode(b)?)
}

/// Build the descriptor for an already-signed inner certificate relative to
/// the outer TBS fields *before* the descriptor extension is added. Each
/// optional field is emitted exactly when its canonical DER differs.
pub fn build_descriptor(
    inner: &Certificate,
    outer: &TbsCertificate,
) -> Result<DeltaCertificateDescriptor, Error> {
    let alg_bytes = |oid: &Oid| Ok(der::encode_value(&algorithm_identifier(oid))?);
    let name_bytes = |n: &Name| Ok(der::encode_value(&name_value(n)?)?);
    let validity_bytes = |v: &Validity| Ok(der::encode_value(&validity_value(v)?)?);
    let ext_bytes = |e: &Vec<Extension>| Ok(der::encode_value(&extensions_value(e))?);

    Ok(DeltaCertificateDescriptor {
        serial: inner.tbs.serial,
        signature_alg: if same_der(&inner.tbs.signature_alg, &outer.signature_alg, alg_bytes)? {
            None
        } else {
            Some(inner.tbs.signature_alg.clone())
        },
        issuer: if same_der(&inner.tbs.issuer, &outer.issuer, name_bytes)? {
            None
        } else {
            Some(inner.tbs.issuer.clone())
        },
        validity: if same_der(&inner.tbs.validity, &outer.validity, validity_bytes)? {
            None
        } else {
            Some(inner.tbs.validity)
        },
        subject: if same_der(&inner.tbs.subject, &outer.subject, name_bytes)? {
            None
        } else {
            Some(inner.tbs.subject.clone())
        },
        spki: inner.tbs.spki.clone(),
        extensions: if same_der(&inner.tbs.extensions, &outer.extensions, ext_bytes)? {
            None
        } else {
            Some(inner.tbs.extensions.clone())
        },
        sig: inner.sig.clone(),
    })
}

/// Extract the single descriptor extension of an outer certificate.
pub fn descriptor_of(outer: &Certificate) -> Result<DeltaCertificateDescriptor, Error> {
    let descriptor_oid = oids::delta_descriptor();
    let mut found = outer.tbs.extensions_with_oid(&descriptor_oid);
    let first = found.next().ok_or(Error::MissingDescriptor)?;
    if found.next().is_some() {
        return Err(Error::MultipleDescriptors);
    }
    DeltaCertificateDescriptor::from_extension(first)
}

/// Rebuild the inner certificate from the outer one: descriptor fields
/// override, absent fields copy across, and the descriptor extension itself
/// never appears in the inner certificate.
pub fn reconstruct_delta(outer: &Certificate) -> Result<Certificate, Error> {
    let descriptor = descriptor_of(outer)?;
    let outer_minus_descriptor: Vec<Extension> = outer
        .tbs
        .extensions
        .iter()
        .filter(|e| e.oid != oids::delta_descriptor())
        .cloned()
        .collect();
    let signature_alg = descriptor
        .signature_alg
        .unwrap_or_else(|| outer.tbs.signature_alg.clone());
    let tbs = TbsCertificate {
        serial: descriptor.serial,
        signature_alg: signature_alg.clone(),
        issuer: descriptor
            .issuer
            .unwrap_or_else(|| outer.tbs.issuer.clone()),
        validity: descriptor.validity.unwrap_or(outer.tbs.validity),
        subject: descriptor
            .subject
            .unwrap_or_else(|| outer.tbs.subject.clone()),
        spki: descriptor.spki,
        extensions: descriptor.extensions.unwrap_or(outer_minus_descriptor),
    };
    Ok(Certificate {
        tbs,
        sig_alg: signature_alg,
        sig: descriptor.sig,
    })
}

pub struct ChameleonIssueParams<'a> {
    pub subject: Name,
    /// Inner subject when it differs from the outer one.
    pub inner_subject: Option<Name>,
    pub subject_classical_algorithm: &'a str,
    pub subject_classical_public_key: &'a [u8],
    pub subject_pqc_algorithm: &'a str,
    pub subject_pqc_public_key: &'a [u8],
    pub issuer: Name,
    pub ca_classical: &'a KeyPair,
    pub ca_pqc: &'a KeyPair,
    pub outer_serial: u64,
    pub inner_serial: u64,
    pub outer_validity: Validity,
    /// Inner validity when it differs from the outer one.
    pub inner_validity: Option<Validity>,
    pub outer_usages: &'a [KeyUsage],
    pub inner_usages: &'a [KeyUsage],
}

/// Issue the outer/inner pair. Phase 1 builds and signs the complete inner
/// PQC certificate; phase 2 embeds its descriptor and signs the outer
/// classical certificate. Strict happens-before between the phases.
pub fn chameleon_issue(
    params: &ChameleonIssueParams<'_>,
    registry: &Registry,
    providers: &dyn ProviderSet,
) -> Result<(Certificate, Certificate), Error> {
    let classical_alg = registry.require(params.subject_classical_algorithm)?;
    let pqc_alg = registry.require(params.subject_pqc_algorithm)?;
    let ca_classical_alg = registry.require(&params.ca_classical.algorithm)?;
    let ca_pqc_alg = registry.require(&params.ca_pqc.algorithm)?;
    if !classical_alg
        .public_key_len
        .contains(params.subject_classical_public_key.len())
        || !pqc_alg
            .public_key_len
            .contains(params.subject_pqc_public_key.len())
    {
        return Err(Error::MalformedCertificate(
            "subject key length off profile",
        ));
    }

    // Phase 1: complete inner certificate, PQC SPKI, PQC signature.
    let inner_tbs = TbsCertificate {
        serial: params.inner_serial,
        signature_alg: ca_pqc_alg.oid.clone(),
        issuer: params.issuer.clone(),
        validity: params.inner_validity.unwrap_or(params.outer_validity),
        subject: params
            .inner_subject
            .clone()
            .unwrap_or_else(|| params.subject.clone()),
        spki: SubjectPublicKeyInfo::for_key(pqc_alg, params.subject_pqc_public_key),
        extensions: vec![key_usage_extension(params.inner_usages)?],
    };
    let inner = x509::sign_certificate(inner_tbs, params.ca_pqc, registry, providers)?;

    // Phase 2: outer certificate with the descriptor appended.
    let mut outer_tbs = TbsCertificate {
        serial: params.outer_serial,
        signature_alg: ca_classical_alg.oid.clone(),
        issuer: params.issuer.clone(),
        validity: params.outer_validity,
        subject: params.subject.clone(),
        spki: SubjectPublicKeyInfo::for_key(classical_alg, params.subject_classical_public_key),
        extensions: vec![key_usage_extension(params.outer_usages)?],
    };
    let descriptor = build_descriptor(&inner, &outer_tbs)?;
    outer_tbs.extensions.push(descriptor.to_extension()?);
    let outer = x509::sign_certificate(outer_tbs, params.ca_classical, registry, providers)?;

    Ok((outer, inner))
}

/// Verify an outer chameleon certificate. Legacy verifiers check only the
/// classical signature; PQC-aware verifiers additionally reconstruct the
/// inner certificate and verify it against the CA's PQC key.
pub fn chameleon_verify(
    outer: &Certificate,
    ca_classical_public_key: &[u8],
    ca_pqc_public_key: &[u8],
    profile: VerifierProfile,
    at: i64,
    registry: &Registry,
    providers: &dyn ProviderSet,
) -> Verdict {
    let base = x509::verify(
        outer,
        ca_classical_public_key,
        profile,
        at,
        registry,
        providers,
    );
    if profile == VerifierProfile::Legacy || !base.is_accept() {
        return base;
    }
    let inner = match reconstruct_delta(outer) {
        Ok(inner) => inner,
        Err(_) => return Verdict::Reject(RejectReason::MalformedDelta),
    };
    x509::verify(&inner, ca_pqc_public_key, profile, at, registry, providers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::provider::{mock_provider, MockProviderSet, SignatureProvider};
    use crate::registry::builtin_registry;

    const CLOCK: i64 = 1_735_689_600;

    struct Env {
        registry: Registry,
        providers: MockProviderSet,
        ca_classical: KeyPair,
        ca_pqc: KeyPair,
        subject_classical: KeyPair,
        subject_pqc: KeyPair,
    }

    fn env() -> Env {
        let registry = builtin_registry();
        let providers = MockProviderSet::new(&registry);
        let ca_classical = mock_provider(&registry, "ECDSA-P256")
            .unwrap()
            .keygen(&[21; 32])
            .unwrap();
        let ca_pqc = mock_provider(&registry, "ML-DSA-44")
            .unwrap()
            .keygen(&[22; 32])
            .unwrap();
        let subject_classical = mock_provider(&registry, "ECDSA-P256")
            .unwrap()
            .keygen(&[23; 32])
            .unwrap();
        let subject_pqc = mock_provider(&registry, "ML-DSA-44")
            .unwrap()
            .keygen(&[24; 32])
            .unwrap();
        Env {
            registry,
            providers,
            ca_classical,
            ca_pqc,
            subject_classical,
            subject_pqc,
        }
    }

    fn params<'a>(env: &'a Env) -> ChameleonIssueParams<'a> {
        ChameleonIssueParams {
            subject: Name::new("Alice"),
            inner_subject: None,
            subject_classical_algorithm: "ECDSA-P256",
            subject_classical_public_key: &env.subject_classical.public_key,
            subject_pqc_algorithm: "ML-DSA-44",
            subject_pqc_public_key: &env.subject_pqc.public_key,
            issuer: Name::new("Example CA"),
            ca_classical: &env.ca_classical,
            ca_pqc: &env.ca_pqc,
            outer_serial: 1,
            inner_serial: 1001,
            outer_validity: Validity::days_from(CLOCK, 365),
            inner_validity: None,
            outer_usages: &[KeyUsage::DigitalSignature],
            inner_usages: &[KeyUsage::DigitalSignature],
        }
    }

    fn issue(env: &Env) -> (Certificate, Certificate) {
        chameleon_issue(&params(env), &env.registry, &env.providers).unwrap()
    }

    #[test]
    fn descriptor_elides_equal_fields() {
        let env = env();
        let (outer, _) = issue(&env);
        let d = descriptor_of(&outer).unwrap();
        // Signature algorithm and SPKI necessarily differ; everything the
        // certificates share is absent.
        assert!(d.signature_alg.is_some());
        assert!(d.issuer.is_none());
        assert!(d.validity.is_none());
        assert!(d.subject.is_none());
        assert!(d.extensions.is_none());
        assert_eq!(d.serial, 1001);
        assert_eq!(d.spki.key, env.subject_pqc.public_key);
    }

    #[test]
    fn descriptor_carries_differing_fields() {
        let env = env();
        let mut p = params(&env);
        p.inner_validity = Some(Validity::days_from(CLOCK, 180));
        p.inner_subject = Some(Name::new("Alice (delta)"));
        p.inner_usages = &[KeyUsage::DigitalSignature, KeyUsage::DataEncipherment];
        let (outer, inner) = chameleon_issue(&p, &env.registry, &env.providers).unwrap();
        let d = descriptor_of(&outer).unwrap();
        assert_eq!(d.validity, Some(Validity::days_from(CLOCK, 180)));
        assert_eq!(d.subject, Some(Name::new("Alice (delta)")));
        assert_eq!(
            d.extensions.as_deref(),
            Some(inner.tbs.extensions.as_slice())
        );
        assert!(d.issuer.is_none());
    }

    #[test]
    fn elision_follows_byte_equality_not_parameter_presence() {
        // Explicitly passing the same values as the outer certificate still
        // elides the fields: equality is decided on canonical DER bytes.
        let env = env();
        let mut p = params(&env);
        p.inner_validity = Some(p.outer_validity);
        p.inner_subject = Some(p.subject.clone());
        let (outer, inner) = chameleon_issue(&p, &env.registry, &env.providers).unwrap();
        let d = descriptor_of(&outer).unwrap();
        assert!(d.validity.is_none());
        assert!(d.subject.is_none());
        assert_eq!(reconstruct_delta(&outer).unwrap(), inner);
    }

    #[test]
    fn elision_is_exact_in_both_directions() {
        // A field appears in the descriptor exactly when its canonical bytes
        // differ between inner and outer.
        let env = env();
        let cases: [(Option<Validity>, Option<Name>, &[KeyUsage]); 4] = [
            (None, None, &[KeyUsage::DigitalSignature]),
            (
                Some(Validity::days_from(CLOCK, 30)),
                None,
                &[KeyUsage::DigitalSignature],
            ),
            (
                None,
                Some(Name::new("Delta Alice")),
                &[KeyUsage::DigitalSignature],
            ),
            (None, None, &[KeyUsage::DataEncipherment]),
        ];
        for (inner_validity, inner_subject, inner_usages) in cases {
            let mut p = params(&env);
            p.inner_validity = inner_validity;
            p.inner_subject = inner_subject.clone();
            p.inner_usages = inner_usages;
            let (outer, inner) = chameleon_issue(&p, &env.registry, &env.providers).unwrap();
            let d = descriptor_of(&outer).unwrap();
            assert_eq!(d.validity.is_some(), inner_validity.is_some());
            assert_eq!(d.subject.is_some(), inner_subject.is_some());
            assert_eq!(
                d.extensions.is_some(),
                inner_usages != [KeyUsage::DigitalSignature],
            );
            assert_eq!(reconstruct_delta(&outer).unwrap(), inner);
        }
    }

    #[test]
    fn reconstruction_is_byte_identical() {
        let env = env();
        let (outer, inner) = issue(&env);
        let rebuilt = reconstruct_delta(&outer).unwrap();
        assert_eq!(rebuilt.to_der().unwrap(), inner.to_der().unwrap());
        assert_eq!(rebuilt, inner);
    }

    #[test]
    fn reconstructed_inner_verifies_under_pqc_key() {
        let env = env();
        let (outer, _) = issue(&env);
        let inner = reconstruct_delta(&outer).unwrap();
        let verdict = x509::verify(
            &inner,
            &env.ca_pqc.public_key,
            VerifierProfile::PqcAware,
            CLOCK + 1,
            &env.registry,
            &env.providers,
        );
        assert_eq!(verdict, Verdict::Accept);
    }

    #[test]
    fn missing_or_duplicated_descriptor_is_an_error() {
        let env = env();
        let (outer, _) = issue(&env);

        let mut stripped = outer.clone();
        stripped
            .tbs
            .extensions
            .retain(|e| e.oid != oids::delta_descriptor());
        assert_eq!(reconstruct_delta(&stripped), Err(Error::MissingDescriptor));

        let mut doubled = outer.clone();
        let dup = doubled.tbs.extensions.last().unwrap().clone();
        doubled.tbs.extensions.push(dup);
        assert_eq!(reconstruct_delta(&doubled), Err(Error::MultipleDescriptors));
    }

    #[test]
    fn verify_profiles_split_as_expected() {
        let env = env();
        let (outer, _) = issue(&env);
        let verify = |cert: &Certificate, profile| {
            chameleon_verify(
                cert,
                &env.ca_classical.public_key,
                &env.ca_pqc.public_key,
                profile,
                CLOCK + 1,
                &env.registry,
                &env.providers,
            )
        };
        assert_eq!(verify(&outer, VerifierProfile::Legacy), Verdict::Accept);
        assert_eq!(verify(&outer, VerifierProfile::PqcAware), Verdict::Accept);

        // Tamper the inner signature inside the descriptor and re-sign the
        // outer: legacy still accepts, PQC-aware rejects.
        let mut d = descriptor_of(&outer).unwrap();
        d.sig[0] ^= 0x01;
        let mut tbs = outer.tbs.clone();
        tbs.extensions.retain(|e| e.oid != oids::delta_descriptor());
        tbs.extensions.push(d.to_extension().unwrap());
        let resigned =
            x509::sign_certificate(tbs, &env.ca_classical, &env.registry, &env.providers).unwrap();
        assert_eq!(verify(&resigned, VerifierProfile::Legacy), Verdict::Accept);
        assert_eq!(
            verify(&resigned, VerifierProfile::PqcAware),
            Verdict::Reject(RejectReason::BadSignature)
        );

        // Garbage descriptor bytes: malformed-delta under PQC-aware.
        let mut tbs = outer.tbs.clone();
        tbs.extensions.retain(|e| e.oid != oids::delta_descriptor());
        tbs.extensions.push(Extension {
            oid: oids::delta_descriptor(),
            critical: false,
            value: vec![0xDE, 0xAD, 0xBE, 0xEF],
        });
        let garbled =
            x509::sign_certificate(tbs, &env.ca_classical, &env.registry, &env.providers).unwrap();
        assert_eq!(verify(&garbled, VerifierProfile::Legacy), Verdict::Accept);
        assert_eq!(
            verify(&garbled, VerifierProfile::PqcAware),
            Verdict::Reject(RejectReason::MalformedDelta)
        );
    }

    #[test]
    fn elision_saves_bytes_over_two_full_certificates() {
        let env = env();
        let (outer, inner) = issue(&env);

        // The outer certificate without its descriptor extension.
        let mut plain_tbs = outer.tbs.clone();
        plain_tbs
            .extensions
            .retain(|e| e.oid != oids::delta_descriptor());
        let plain =
            x509::sign_certificate(plain_tbs, &env.ca_classical, &env.registry, &env.providers)
                .unwrap();

        let outer_len = outer.to_der().unwrap().len();
        let inner_len = inner.to_der().unwrap().len();
        let plain_len = plain.to_der().unwrap().len();
        assert!(outer_len < inner_len + plain_len);
        let savings = (inner_len + plain_len) as i64 - outer_len as i64;
        assert!(savings > 0, "elision saved nothing");
    }

    #[test]
    fn descriptor_round_trip_minimal_and_full() {
        let env = env();
        let (_, inner) = issue(&env);

        let minimal = DeltaCertificateDescriptor {
            serial: 7,
            signature_alg: None,
            issuer: None,
            validity: None,
            subject: None,
            spki: inner.tbs.spki.clone(),
            extensions: None,
            sig: vec![1, 2, 3],
        };
        let full = DeltaCertificateDescriptor {
            serial: 8,
            signature_alg: Some(inner.tbs.signature_alg.clone()),
            issuer: Some(Name::new("Other CA")),
            validity: Some(Validity::days_from(CLOCK, 10)),
            subject: Some(Name::new("Bob")),
            spki: inner.tbs.spki.clone(),
            extensions: Some(inner.tbs.extensions.clone()),
            sig: vec![9; 64],
        };
        for d in [minimal, full] {
            let ext = d.to_extension().unwrap();
            assert_eq!(DeltaCertificateDescriptor::from_extension(&ext).unwrap(), d);
        }
    }
}
