//! Deterministic certificate fixtures. One 32-byte master seed fans out to
//! the CA and subject key material, and one injected clock fixes every
//! validity window, so repeated runs with the same inputs are byte-identical.

use std::fmt;
use std::str::FromStr;

use pqcert_core::catalyst::{self, CatalystIssueParams};
use pqcert_core::chameleon::{self, ChameleonIssueParams};
use pqcert_core::composite::{self, CompositeIssueParams};
use pqcert_core::provider::{
    derive_seed, mock_provider, KeyPair, MockProviderSet, ProviderSet, SequentialExecutor,
    SignExecutor, SignatureProvider,
};
use pqcert_core::registry::{builtin_registry, Registry, Role, COMPOSITE_MLDSA44_ECDSA_P256};
use pqcert_core::x509::{
    self, oids, Certificate, CertificateSigningRequest, IssueParams, KeyUsage, Name, Validity,
    Verdict, VerifierProfile,
};
use pqcert_core::Error;

/// Default evaluation clock: 2025-01-01T00:00:00Z. Deterministic by default;
/// pass `--clock` for wall-clock behavior.
pub const DEFAULT_CLOCK: i64 = 1_735_689_600;

/// Serial assigned by the classical/outer counter in one issuance run.
pub const OUTER_SERIAL: u64 = 1;
/// The PQC/inner counter starts from an independent base, so inner serials
/// never collide with outer ones.
pub const INNER_SERIAL: u64 = 1001;

pub const CA_NAME: &str = "Example CA";
pub const SUBJECT_NAME: &str = "Alice";

/// The four certificate shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Pure,
    Composite,
    Catalyst,
    Chameleon,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [Self::Pure, Self::Composite, Self::Catalyst, Self::Chameleon];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Pure => "pure",
            Self::Composite => "composite",
            Self::Catalyst => "catalyst",
            Self::Chameleon => "chameleon",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pure" => Ok(Self::Pure),
            "composite" => Ok(Self::Composite),
            "catalyst" => Ok(Self::Catalyst),
            "chameleon" => Ok(Self::Chameleon),
            other => Err(format!("unknown scheme '{}'", other)),
        }
    }
}

/// CA key material: one PQC and one classical signing key.
pub struct CaMaterial {
    pub name: Name,
    pub pqc: KeyPair,
    pub classical: KeyPair,
}

/// Subject key material for all flows.
pub struct SubjectMaterial {
    pub name: Name,
    pub pqc: KeyPair,
    pub classical: KeyPair,
    pub kem: KeyPair,
}

/// Everything the harness needs to issue and verify deterministically.
pub struct Fixtures {
    pub registry: Registry,
    pub providers: MockProviderSet,
    pub ca: CaMaterial,
    pub subject: SubjectMaterial,
    pub clock: i64,
}

impl Fixtures {
    pub fn new(seed: [u8; 32], clock: i64) -> Result<Self, Error> {
        let registry = builtin_registry();
        let providers = MockProviderSet::new(&registry);
        let keygen = |alg: &str, label: &str| -> Result<KeyPair, Error> {
            Ok(mock_provider(&registry, alg)?.keygen(&derive_seed(&seed, label))?)
        };
        let ca = CaMaterial {
            name: Name::new(CA_NAME),
            pqc: keygen("ML-DSA-44", "ca/pqc")?,
            classical: keygen("ECDSA-P256", "ca/classical")?,
        };
        let subject = SubjectMaterial {
            name: Name::new(SUBJECT_NAME),
            pqc: keygen("ML-DSA-44", "subject/pqc")?,
            classical: keygen("ECDSA-P256", "subject/classical")?,
            kem: keygen("ML-KEM-512", "subject/kem")?,
        };
        Ok(Self {
            registry,
            providers,
            ca,
            subject,
            clock,
        })
    }

    pub fn validity(&self) -> Validity {
        Validity::days_from(self.clock, 365)
    }

    fn subject_csr(&self, keypair: &KeyPair) -> Result<CertificateSigningRequest, Error> {
        let usages = if keypair.algorithm.starts_with("ML-KEM") {
            [KeyUsage::DataEncipherment]
        } else {
            [KeyUsage::DigitalSignature]
        };
        x509::create_csr(
            self.subject.name.clone(),
            keypair,
            &usages,
            &self.registry,
            &self.providers,
        )
    }

    /// Pure PQC signature certificate (ML-DSA-44 subject and CA).
    pub fn issue_pure(&self) -> Result<Certificate, Error> {
        self.issue_pure_with(&self.providers)
    }

    pub fn issue_pure_with(&self, providers: &dyn ProviderSet) -> Result<Certificate, Error> {
        let csr = self.subject_csr(&self.subject.pqc)?;
        let params = IssueParams {
            issuer: self.ca.name.clone(),
            issuer_key: &self.ca.pqc,
            serial: OUTER_SERIAL,
            validity: self.validity(),
        };
        x509::issue(&csr, &params, &self.registry, providers)
    }

    /// Pure KEM-key certificate (ML-KEM-512 subject, ML-DSA-44 CA).
    pub fn issue_pure_kem(&self) -> Result<Certificate, Error> {
        let csr = self.subject_csr(&self.subject.kem)?;
        let params = IssueParams {
            issuer: self.ca.name.clone(),
            issuer_key: &self.ca.pqc,
            serial: OUTER_SERIAL,
            validity: self.validity(),
        };
        x509::issue(&csr, &params, &self.registry, &self.providers)
    }

    pub fn issue_composite(&self) -> Result<Certificate, Error> {
        self.issue_composite_with(&self.providers, &SequentialExecutor)
    }

    pub fn issue_composite_with(
        &self,
        providers: &dyn ProviderSet,
        executor: &dyn SignExecutor,
    ) -> Result<Certificate, Error> {
        let params = CompositeIssueParams {
            subject: self.subject.name.clone(),
            subject_pqc_public_key: &self.subject.pqc.public_key,
            subject_classical_public_key: &self.subject.classical.public_key,
            issuer: self.ca.name.clone(),
            ca_pqc: &self.ca.pqc,
            ca_classical: &self.ca.classical,
            serial: OUTER_SERIAL,
            validity: self.validity(),
        };
        composite::composite_issue(
            &params,
            COMPOSITE_MLDSA44_ECDSA_P256,
            &self.registry,
            providers,
            executor,
        )
    }

    pub fn issue_catalyst(&self) -> Result<Certificate, Error> {
        self.issue_catalyst_with(&self.providers)
    }

    pub fn issue_catalyst_with(&self, providers: &dyn ProviderSet) -> Result<Certificate, Error> {
        let params = CatalystIssueParams {
            subject: self.subject.name.clone(),
            subject_classical_algorithm: "ECDSA-P256",
            subject_classical_public_key: &self.subject.classical.public_key,
            subject_pqc_algorithm: "ML-DSA-44",
            subject_pqc_public_key: &self.subject.pqc.public_key,
            issuer: self.ca.name.clone(),
            ca_classical: &self.ca.classical,
            ca_pqc: &self.ca.pqc,
            serial: OUTER_SERIAL,
            validity: self.validity(),
            usages: &[KeyUsage::DigitalSignature],
        };
        catalyst::catalyst_issue(&params, &self.registry, providers)
    }

    pub fn issue_chameleon(&self) -> Result<(Certificate, Certificate), Error> {
        self.issue_chameleon_with(&self.providers)
    }

    pub fn issue_chameleon_with(
        &self,
        providers: &dyn ProviderSet,
    ) -> Result<(Certificate, Certificate), Error> {
        let params = ChameleonIssueParams {
            subject: self.subject.name.clone(),
            inner_subject: None,
            subject_classical_algorithm: "ECDSA-P256",
            subject_classical_public_key: &self.subject.classical.public_key,
            subject_pqc_algorithm: "ML-DSA-44",
            subject_pqc_public_key: &self.subject.pqc.public_key,
            issuer: self.ca.name.clone(),
            ca_classical: &self.ca.classical,
            ca_pqc: &self.ca.pqc,
            outer_serial: OUTER_SERIAL,
            inner_serial: INNER_SERIAL,
            outer_validity: self.validity(),
            inner_validity: None,
            outer_usages: &[KeyUsage::DigitalSignature],
            inner_usages: &[KeyUsage::DigitalSignature],
        };
        chameleon::chameleon_issue(&params, &self.registry, providers)
    }

    /// Classify a certificate by its signature algorithm and extensions.
    pub fn detect_scheme(&self, cert: &Certificate) -> Scheme {
        if self
            .registry
            .lookup_by_oid(&cert.sig_alg)
            .map(|e| e.role == Role::CompositeSignature)
            .unwrap_or(false)
        {
            return Scheme::Composite;
        }
        if cert
            .tbs
            .extensions_with_oid(&oids::delta_descriptor())
            .next()
            .is_some()
        {
            return Scheme::Chameleon;
        }
        if cert
            .tbs
            .extensions_with_oid(&oids::alt_spki())
            .next()
            .is_some()
        {
            return Scheme::Catalyst;
        }
        Scheme::Pure
    }

    /// Verify with the scheme-appropriate routine at evaluation time `at`.
    pub fn verify(&self, cert: &Certificate, profile: VerifierProfile, at: i64) -> Verdict {
        match self.detect_scheme(cert) {
            Scheme::Composite => composite::composite_verify(
                cert,
                &self.ca.pqc.public_key,
                &self.ca.classical.public_key,
                profile,
                at,
                &self.registry,
                &self.providers,
            ),
            Scheme::Catalyst => catalyst::catalyst_verify(
                cert,
                &self.ca.classical.public_key,
                &self.ca.pqc.public_key,
                profile,
                at,
                &self.registry,
                &self.providers,
            ),
            Scheme::Chameleon => chameleon::chameleon_verify(
                cert,
                &self.ca.classical.public_key,
                &self.ca.pqc.public_key,
                profile,
                at,
                &self.registry,
                &self.providers,
            ),
            Scheme::Pure => {
                let issuer_pk = self.issuer_key_for(cert);
                x509::verify(
                    cert,
                    issuer_pk,
                    profile,
                    at,
                    &self.registry,
                    &self.providers,
                )
            }
        }
    }

    /// Pick the CA public key matching the certificate's signature algorithm.
    fn issuer_key_for(&self, cert: &Certificate) -> &[u8] {
        match self.registry.lookup_by_oid(&cert.sig_alg) {
            Some(entry) if entry.name == self.ca.classical.algorithm => {
                &self.ca.classical.public_key
            }
            _ => &self.ca.pqc.public_key,
        }
    }
}

/// Parse a 64-hex-character seed string.
pub fn parse_seed(hex_seed: &str) -> Result<[u8; 32], String> {
    let bytes = hex::decode(hex_seed).map_err(|_| "seed must be hexadecimal".to_string())?;
    bytes
        .try_into()
        .map_err(|_| "seed must be exactly 64 hex characters (32 bytes)".to_string())
}
