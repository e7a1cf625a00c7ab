//! Certificate data model, TBS byte construction, pure issuance and
//! verification, and the minimal CSR intake.
//!
//! The model is a deliberately small X.509 profile: single-CN names, one
//! signature algorithm identifier (no parameters), a validity window, one
//! subject-public-key-info block, and a flat extension list. The TBS
//! encoding is a canonical DER SEQUENCE of those fields in declaration
//! order, and the signature in the envelope is always computed over exactly
//! those bytes.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::der::{self, tag, DerValue, Oid};
use crate::dertime;
use crate::provider::{KeyPair, ProviderSet};
use crate::registry::{AlgorithmId, Registry, Role};
use crate::Error;

/// Extension and attribute OIDs. Standard arcs are used where they exist
/// (common name, key usage); toolkit-specific extensions live under the
/// private `1.3.9999.3` arc documented in the README.
pub mod oids {
    use crate::der::Oid;

    pub fn common_name() -> Oid {
        Oid::from_arcs(&[2, 5, 4, 3])
    }

    pub fn key_usage() -> Oid {
        Oid::from_arcs(&[2, 5, 29, 15])
    }

    pub fn alt_spki() -> Oid {
        Oid::from_arcs(&[1, 3, 9999, 3, 1])
    }

    pub fn delta_descriptor() -> Oid {
        Oid::from_arcs(&[1, 3, 9999, 3, 2])
    }
}

/// Subject or issuer name; this profile models a single common name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Name {
    pub common_name: String,
}

impl Name {
    pub fn new(common_name: &str) -> Self {
        Self {
            common_name: String::from(common_name),
        }
    }
}

/// Validity window, seconds since the Unix epoch, UTC.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validity {
    pub not_before: i64,
    pub not_after: i64,
}

impl Validity {
    pub fn days_from(start: i64, days: i64) -> Self {
        Self {
            not_before: start,
            not_after: start + days * 86_400,
        }
    }

    pub fn contains(&self, at: i64) -> bool {
        (self.not_before..=self.not_after).contains(&at)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubjectPublicKeyInfo {
    pub alg_oid: Oid,
    pub key: Vec<u8>,
}

impl SubjectPublicKeyInfo {
    pub fn for_key(alg: &AlgorithmId, public_key: &[u8]) -> Self {
        Self {
            alg_oid: alg.oid.clone(),
            key: public_key.to_vec(),
        }
    }
}

/// Raw extension: OID, criticality, and the DER of the inner structure.
/// OIDs are unique within one certificate's extension list; issuance upholds
/// this by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub oid: Oid,
    pub critical: bool,
    pub value: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeyUsage {
    DigitalSignature,
    DataEncipherment,
}

impl KeyUsage {
    fn bit(&self) -> u8 {
        match self {
            // Named bits count from the most significant bit of the first
            // octet: digitalSignature is bit 0, dataEncipherment bit 3.
            Self::DigitalSignature => 0x80,
            Self::DataEncipherment => 0x10,
        }
    }
}

/// Build the standard keyUsage extension (critical, BIT STRING of named
/// bits). The usage set must be non-empty.
pub fn key_usage_extension(usages: &[KeyUsage]) -> Result<Extension, Error> {
    if usages.is_empty() {
        return Err(Error::EmptyKeyUsage);
    }
    let bits = usages.iter().fold(0u8, |acc, u| acc | u.bit());
    let value = der::encode_value(&DerValue::bit_string(&[bits]))?;
    Ok(Extension {
        oid: oids::key_usage(),
        critical: true,
        value,
    })
}

/// Read the usage set back out of a keyUsage extension value.
pub fn decode_key_usage(value: &[u8]) -> Result<Vec<KeyUsage>, Error> {
    let parsed = der::decode_value_exact(value)?;
    let (unused, bytes) = parsed
        .as_bit_string()
        .ok_or(Error::MalformedCertificate("keyUsage is not a BIT STRING"))?;
    if unused != 0 || bytes.len() != 1 {
        return Err(Error::MalformedCertificate("unexpected keyUsage width"));
    }
    let mut usages = Vec::new();
    if bytes[0] & 0x80 != 0 {
        usages.push(KeyUsage::DigitalSignature);
    }
    if bytes[0] & 0x10 != 0 {
        usages.push(KeyUsage::DataEncipherment);
    }
    if bytes[0] & !0x90 != 0 || usages.is_empty() {
        return Err(Error::MalformedCertificate("unknown keyUsage bits"));
    }
    Ok(usages)
}

/// The to-be-signed certificate body. `signature_alg` always equals the
/// envelope's signature algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TbsCertificate {
    pub serial: u64,
    pub signature_alg: Oid,
    pub issuer: Name,
    pub validity: Validity,
    pub subject: Name,
    pub spki: SubjectPublicKeyInfo,
    pub extensions: Vec<Extension>,
}

impl TbsCertificate {
    /// Extensions carrying the given OID, in list order.
    pub fn extensions_with_oid<'a>(&'a self, oid: &'a Oid) -> impl Iterator<Item = &'a Extension> {
        self.extensions.iter().filter(move |e| &e.oid == oid)
    }
}

/// Signed certificate envelope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub tbs: TbsCertificate,
    pub sig_alg: Oid,
    pub sig: Vec<u8>,
}

/// Minimal certificate signing request. KEM keys cannot sign, so their
/// requests carry no proof-of-possession (`pop_signature` is `None`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateSigningRequest {
    pub subject: Name,
    pub spki: SubjectPublicKeyInfo,
    pub requested_usages: Vec<KeyUsage>,
    pub pop_signature: Option<Vec<u8>>,
}

/// Verification capability of the relying party. A legacy verifier treats
/// every PQC and composite algorithm OID as unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifierProfile {
    Legacy,
    PqcAware,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    UnknownAlgorithm,
    BadSignature,
    Expired,
    UnknownCriticalExtension,
    MalformedAlt,
    MalformedDelta,
}

impl RejectReason {
    pub fn code(&self) -> &'static str {
        match self {
            Self::UnknownAlgorithm => "unknown-algorithm",
            Self::BadSignature => "bad-signature",
            Self::Expired => "expired",
            Self::UnknownCriticalExtension => "unknown-critical-extension",
            Self::MalformedAlt => "malformed-alt",
            Self::MalformedDelta => "malformed-delta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(RejectReason),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Self::Accept)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Accept => write!(f, "accept"),
            Self::Reject(reason) => write!(f, "reject {}", reason.code()),
        }
    }
}

// ---------------------------------------------------------------------------
// DER construction and parsing of the model types.

pub fn algorithm_identifier(oid: &Oid) -> DerValue {
    DerValue::sequence(vec![DerValue::oid(oid)])
}

pub(crate) fn decode_algorithm(value: &DerValue) -> Result<Oid, Error> {
    match value.children() {
        Some([inner]) if value.is_universal(tag::SEQUENCE) => inner.as_oid().ok_or(
            Error::MalformedCertificate("algorithm identifier without OID"),
        ),
        _ => Err(Error::MalformedCertificate("bad algorithm identifier")),
    }
}

pub fn name_value(name: &Name) -> Result<DerValue, Error> {
    if name.common_name.is_empty() {
        return Err(Error::EmptyName);
    }
    Ok(DerValue::sequence(vec![DerValue::set(vec![
        DerValue::sequence(vec![
            DerValue::oid(&oids::common_name()),
            DerValue::utf8(&name.common_name),
        ]),
    ])]))
}

pub(crate) fn decode_name(value: &DerValue) -> Result<Name, Error> {
    let malformed = Error::MalformedCertificate("bad name structure");
    let rdns = value
        .children()
        .filter(|_| value.is_universal(tag::SEQUENCE))
        .ok_or(malformed)?;
    let [rdn] = rdns else { return Err(malformed) };
    let [attr] = rdn
        .children()
        .filter(|_| rdn.is_universal(tag::SET))
        .ok_or(malformed)?
    else {
        return Err(malformed);
    };
    let [attr_oid, attr_value] = attr
        .children()
        .filter(|_| attr.is_universal(tag::SEQUENCE))
        .ok_or(malformed)?
    else {
        return Err(malformed);
    };
    if attr_oid.as_oid() != Some(oids::common_name()) {
        return Err(Error::MalformedCertificate(
            "expected a common-name attribute",
        ));
    }
    let cn = attr_value
        .as_utf8()
        .ok_or(Error::MalformedCertificate("CN is not UTF8String"))?;
    if cn.is_empty() {
        return Err(Error::EmptyName);
    }
    Ok(Name::new(cn))
}

pub fn validity_value(validity: &Validity) -> Result<DerValue, Error> {
    if validity.not_before >= validity.not_after {
        return Err(Error::InvalidValidity);
    }
    Ok(DerValue::sequence(vec![
        dertime::encode_time(validity.not_before)?,
        dertime::encode_time(validity.not_after)?,
    ]))
}

pub(crate) fn decode_validity(value: &DerValue) -> Result<Validity, Error> {
    let malformed = Error::MalformedCertificate("bad validity structure");
    let [before, after] = value
        .children()
        .filter(|_| value.is_universal(tag::SEQUENCE))
        .ok_or(malformed)?
    else {
        return Err(malformed);
    };
    let not_before = dertime::decode_time(before)?;
    let not_after = dertime::decode_time(after)?;
    // The UTCTime window is a convention of the writer; re-encoding must be
    // the identity, so off-convention forms are rejected here.
    if dertime::encode_time(not_before)? != *before || dertime::encode_time(not_after)? != *after {
        return Err(Error::MalformedCertificate("non-canonical time encoding"));
    }
    if not_before >= not_after {
        return Err(Error::InvalidValidity);
    }
    Ok(Validity {
        not_before,
        not_after,
    })
}

pub fn spki_value(spki: &SubjectPublicKeyInfo) -> DerValue {
    DerValue::sequence(vec![
        algorithm_identifier(&spki.alg_oid),
        DerValue::bit_string(&spki.key),
    ])
}

pub(crate) fn decode_spki(value: &DerValue) -> Result<SubjectPublicKeyInfo, Error> {
    let malformed = Error::MalformedCertificate("bad SPKI structure");
    let [alg, key] = value
        .children()
        .filter(|_| value.is_universal(tag::SEQUENCE))
        .ok_or(malformed)?
    else {
        return Err(malformed);
    };
    let alg_oid = decode_algorithm(alg)?;
    let (unused, bytes) = key
        .as_bit_string()
        .ok_or(Error::MalformedCertificate("SPKI key is not a BIT STRING"))?;
    if unused != 0 {
        return Err(Error::MalformedCertificate(
            "SPKI key has partial final byte",
        ));
    }
    Ok(SubjectPublicKeyInfo {
        alg_oid,
        key: bytes.to_vec(),
    })
}

fn extension_value(ext: &Extension) -> DerValue {
    let mut children = vec![DerValue::oid(&ext.oid)];
    if ext.critical {
        // DEFAULT FALSE: the flag is encoded only when true.
        children.push(DerValue::boolean(true));
    }
    children.push(DerValue::octet_string(&ext.value));
    DerValue::sequence(children)
}

fn decode_extension(value: &DerValue) -> Result<Extension, Error> {
    let malformed = Error::MalformedCertificate("bad extension structure");
    let children = value
        .children()
        .filter(|_| value.is_universal(tag::SEQUENCE))
        .ok_or(malformed)?;
    let (oid_value, critical, octets) = match children {
        [o, v] => (o, false, v),
        [o, c, v] => {
            if c.as_boolean() != Some(true) {
                // FALSE must be omitted in canonical form.
                return Err(Error::MalformedCertificate("non-canonical critical flag"));
            }
            (o, true, v)
        }
        _ => return Err(malformed),
    };
    let oid = oid_value.as_oid().ok_or(malformed)?;
    if !octets.is_universal(tag::OCTET_STRING) {
        return Err(Error::MalformedCertificate(
            "extension value is not an OCTET STRING",
        ));
    }
    let value = octets.primitive_content().ok_or(malformed)?.to_vec();
    Ok(Extension {
        oid,
        critical,
        value,
    })
}

pub fn extensions_value(extensions: &[Extension]) -> DerValue {
    DerValue::sequence(extensions.iter().map(extension_value).collect())
}

pub fn decode_extensions(value: &DerValue) -> Result<Vec<Extension>, Error> {
    value
        .children()
        .filter(|_| value.is_universal(tag::SEQUENCE))
        .ok_or(Error::MalformedCertificate("bad extensions list"))?
        .iter()
        .map(decode_extension)
        .collect()
}

pub fn tbs_value(tbs: &TbsCertificate) -> Result<DerValue, Error> {
    if tbs.serial == 0 {
        return Err(Error::InvalidSerial);
    }
    Ok(DerValue::sequence(vec![
        DerValue::integer(tbs.serial),
        algorithm_identifier(&tbs.signature_alg),
        name_value(&tbs.issuer)?,
        validity_value(&tbs.validity)?,
        name_value(&tbs.subject)?,
        spki_value(&tbs.spki),
        extensions_value(&tbs.extensions),
    ]))
}

/// Canonical TBS bytes: the exact message every signature in this toolkit
/// is computed over. Pure function of the input.
pub fn encode_tbs(tbs: &TbsCertificate) -> Result<Vec<u8>, Error> {
    Ok(der::encode_value(&tbs_value(tbs)?)?)
}

pub fn decode_tbs(value: &DerValue) -> Result<TbsCertificate, Error> {
    let malformed = Error::MalformedCertificate("bad TBS structure");
    let [serial, alg, issuer, validity, subject, spki, extensions] = value
        .children()
        .filter(|_| value.is_universal(tag::SEQUENCE))
        .ok_or(malformed)?
    else {
        return Err(malformed);
    };
    let serial_number = serial
        .as_u64()
        .ok_or(Error::MalformedCertificate("bad serial"))?;
    if serial_number == 0 {
        return Err(Error::InvalidSerial);
    }
    Ok(TbsCertificate {
        serial: serial_number,
        signature_alg: decode_algorithm(alg)?,
        issuer: decode_name(issuer)?,
        validity: decode_validity(validity)?,
        subject: decode_name(subject)?,
        spki: decode_spki(spki)?,
        extensions: decode_extensions(extensions)?,
    })
}

impl Certificate {
    pub fn to_der(&self) -> Result<Vec<u8>, Error> {
        let value = DerValue::sequence(vec![
            tbs_value(&self.tbs)?,
            algorithm_identifier(&self.sig_alg),
            DerValue::bit_string(&self.sig),
        ]);
        Ok(der::encode_value(&value)?)
    }

    pub fn from_der(bytes: &[u8]) -> Result<Self, Error> {
        let value = der::decode_value_exact(bytes)?;
        let malformed = Error::MalformedCertificate("bad certificate envelope");
        let [tbs, alg, sig] = value
            .children()
            .filter(|_| value.is_universal(tag::SEQUENCE))
            .ok_or(malformed)?
        else {
            return Err(malformed);
        };
        let (unused, sig_bytes) = sig
            .as_bit_string()
            .ok_or(Error::MalformedCertificate("signature is not a BIT STRING"))?;
        if unused != 0 {
            return Err(Error::MalformedCertificate(
                "signature has partial final byte",
            ));
        }
        Ok(Self {
            tbs: decode_tbs(tbs)?,
            sig_alg: decode_algorithm(alg)?,
            sig: sig_bytes.to_vec(),
        })
    }
}

fn csr_body_value(csr: &CertificateSigningRequest) -> Result<DerValue, Error> {
    if csr.requested_usages.is_empty() {
        return Err(Error::EmptyKeyUsage);
    }
    let bits = csr
        .requested_usages
        .iter()
        .fold(0u8, |acc, u| acc | u.bit());
    Ok(DerValue::sequence(vec![
        name_value(&csr.subject)?,
        spki_value(&csr.spki),
        DerValue::bit_string(&[bits]),
    ]))
}

/// The exact bytes a proof-of-possession signature covers.
pub fn csr_body_bytes(csr: &CertificateSigningRequest) -> Result<Vec<u8>, Error> {
    Ok(der::encode_value(&csr_body_value(csr)?)?)
}

impl CertificateSigningRequest {
    pub fn to_der(&self) -> Result<Vec<u8>, Error> {
        let pop = self.pop_signature.as_deref().unwrap_or(&[]);
        let value = DerValue::sequence(vec![csr_body_value(self)?, DerValue::bit_string(pop)]);
        Ok(der::encode_value(&value)?)
    }

    pub fn from_der(bytes: &[u8]) -> Result<Self, Error> {
        let value = der::decode_value_exact(bytes)?;
        let malformed = Error::MalformedCertificate("bad CSR envelope");
        let [body, pop] = value
            .children()
            .filter(|_| value.is_universal(tag::SEQUENCE))
            .ok_or(malformed)?
        else {
            return Err(malformed);
        };
        let [subject, spki, usage_bits] = body
            .children()
            .filter(|_| body.is_universal(tag::SEQUENCE))
            .ok_or(malformed)?
        else {
            return Err(malformed);
        };
        let (unused, bits) = usage_bits
            .as_bit_string()
            .ok_or(Error::MalformedCertificate("bad CSR usage bits"))?;
        if unused != 0 || bits.len() != 1 || bits[0] & !0x90 != 0 || bits[0] == 0 {
            return Err(Error::MalformedCertificate("bad CSR usage bits"));
        }
        let mut requested_usages = Vec::new();
        if bits[0] & 0x80 != 0 {
            requested_usages.push(KeyUsage::DigitalSignature);
        }
        if bits[0] & 0x10 != 0 {
            requested_usages.push(KeyUsage::DataEncipherment);
        }
        let (pop_unused, pop_bytes) = pop
            .as_bit_string()
            .ok_or(Error::MalformedCertificate("bad CSR pop"))?;
        if pop_unused != 0 {
            return Err(Error::MalformedCertificate("bad CSR pop"));
        }
        Ok(Self {
            subject: decode_name(subject)?,
            spki: decode_spki(spki)?,
            requested_usages,
            pop_signature: if pop_bytes.is_empty() {
                None
            } else {
                Some(pop_bytes.to_vec())
            },
        })
    }
}

// ---------------------------------------------------------------------------
// Issuance and verification.

/// Build a CSR for a key pair, self-signing the body when the key can sign.
pub fn create_csr(
    subject: Name,
    keypair: &KeyPair,
    usages: &[KeyUsage],
    registry: &Registry,
    providers: &dyn ProviderSet,
) -> Result<CertificateSigningRequest, Error> {
    let entry = registry.require(&keypair.algorithm)?;
    let mut csr = CertificateSigningRequest {
        subject,
        spki: SubjectPublicKeyInfo::for_key(entry, &keypair.public_key),
        requested_usages: usages.to_vec(),
        pop_signature: None,
    };
    match entry.role {
        Role::Signature => {
            let body = csr_body_bytes(&csr)?;
            let provider = providers.require(&entry.name)?;
            csr.pop_signature = Some(provider.sign(&keypair.private_key, &body)?);
        }
        Role::Kem => {}
        Role::CompositeSignature => return Err(Error::UnknownAlgorithm),
    }
    Ok(csr)
}

/// Issuance parameters supplied by the CA.
pub struct IssueParams<'a> {
    pub issuer: Name,
    pub issuer_key: &'a KeyPair,
    pub serial: u64,
    pub validity: Validity,
}

/// Issue a pure (single-algorithm) certificate from a CSR. Signature-role
/// subjects get `digitalSignature`; KEM subjects get `dataEncipherment`.
pub fn issue(
    csr: &CertificateSigningRequest,
    params: &IssueParams<'_>,
    registry: &Registry,
    providers: &dyn ProviderSet,
) -> Result<Certificate, Error> {
    let subject_alg = registry.require_by_oid(&csr.spki.alg_oid)?;
    if !subject_alg.public_key_len.contains(csr.spki.key.len()) {
        return Err(Error::MalformedCertificate(
            "subject key length off profile",
        ));
    }
    let usages = match subject_alg.role {
        Role::Signature => {
            let pop = csr.pop_signature.as_deref().ok_or(Error::InvalidPop)?;
            let body = csr_body_bytes(csr)?;
            let provider = providers.require(&subject_alg.name)?;
            if !provider.verify(&csr.spki.key, &body, pop) {
                return Err(Error::InvalidPop);
            }
            [KeyUsage::DigitalSignature]
        }
        Role::Kem => {
            if csr.pop_signature.is_some() {
                // A KEM key cannot have produced a signature.
                return Err(Error::InvalidPop);
            }
            [KeyUsage::DataEncipherment]
        }
        Role::CompositeSignature => return Err(Error::UnknownAlgorithm),
    };

    let ca_alg = registry.require(&params.issuer_key.algorithm)?;
    let tbs = TbsCertificate {
        serial: params.serial,
        signature_alg: ca_alg.oid.clone(),
        issuer: params.issuer.clone(),
        validity: params.validity,
        subject: csr.subject.clone(),
        spki: csr.spki.clone(),
        extensions: vec![key_usage_extension(&usages)?],
    };
    sign_certificate(tbs, params.issuer_key, registry, providers)
}

/// Sign a finished TBS with the issuer key, producing the envelope. The
/// TBS `signature_alg` must already name the issuer's algorithm.
pub fn sign_certificate(
    tbs: TbsCertificate,
    issuer_key: &KeyPair,
    registry: &Registry,
    providers: &dyn ProviderSet,
) -> Result<Certificate, Error> {
    let entry = registry.require(&issuer_key.algorithm)?;
    let bytes = encode_tbs(&tbs)?;
    let provider = providers.require(&entry.name)?;
    let sig = provider.sign(&issuer_key.private_key, &bytes)?;
    Ok(Certificate {
        tbs,
        sig_alg: entry.oid.clone(),
        sig,
    })
}

/// Whether the profile recognizes the algorithm OID at all.
pub fn algorithm_known(entry: &AlgorithmId, profile: VerifierProfile) -> bool {
    match profile {
        VerifierProfile::Legacy => entry.role == Role::Signature && entry.is_classical(),
        VerifierProfile::PqcAware => {
            matches!(entry.role, Role::Signature | Role::CompositeSignature)
        }
    }
}

/// Whether the profile understands an extension OID. Everything else is
/// ignored when non-critical and fatal when critical.
pub fn extension_known(oid: &Oid, profile: VerifierProfile) -> bool {
    if *oid == oids::key_usage() {
        return true;
    }
    profile == VerifierProfile::PqcAware
        && (*oid == oids::alt_spki() || *oid == oids::delta_descriptor())
}

/// Verify a single-algorithm certificate against the issuer's public key at
/// evaluation time `at`. Never fails; outcomes are verdicts.
pub fn verify(
    cert: &Certificate,
    issuer_public_key: &[u8],
    profile: VerifierProfile,
    at: i64,
    registry: &Registry,
    providers: &dyn ProviderSet,
) -> Verdict {
    let Some(entry) = registry.lookup_by_oid(&cert.sig_alg) else {
        return Verdict::Reject(RejectReason::UnknownAlgorithm);
    };
    if !algorithm_known(entry, profile) || entry.role != Role::Signature {
        return Verdict::Reject(RejectReason::UnknownAlgorithm);
    }
    for ext in &cert.tbs.extensions {
        if ext.critical && !extension_known(&ext.oid, profile) {
            return Verdict::Reject(RejectReason::UnknownCriticalExtension);
        }
    }
    if cert.tbs.signature_alg != cert.sig_alg {
        return Verdict::Reject(RejectReason::BadSignature);
    }
    let Ok(tbs_bytes) = encode_tbs(&cert.tbs) else {
        return Verdict::Reject(RejectReason::BadSignature);
    };
    let Some(provider) = providers.get(&entry.name) else {
        return Verdict::Reject(RejectReason::UnknownAlgorithm);
    };
    if !provider.verify(issuer_public_key, &tbs_bytes, &cert.sig) {
        return Verdict::Reject(RejectReason::BadSignature);
    }
    if !cert.tbs.validity.contains(at) {
        return Verdict::Reject(RejectReason::Expired);
    }
    Verdict::Accept
}
