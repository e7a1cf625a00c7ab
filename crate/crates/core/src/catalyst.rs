//! Catalyst scheme: a classical base certificate plus one non-critical
//! `Alt-SPKI` extension carrying the subject's PQC algorithm and key and the
//! CA's PQC signature over the *pre-TBS*: the TBS with the Alt-SPKI
//! extension removed entirely.
//!
//! Signing is strictly two-phase: the PQC signature is computed first over
//! the pre-TBS, then embedded, then the classical signature covers the full
//! TBS. The classical signature's message therefore contains the PQC
//! signature, which forces sequential issuance.

use alloc::vec;
use alloc::vec::Vec;

use crate::der::{self, tag, DerValue, Oid};
use crate::provider::{KeyPair, ProviderSet};
use crate::registry::{Registry, Role};
use crate::x509::{
    self, key_usage_extension, oids, Certificate, Extension, KeyUsage, Name, RejectReason,
    SubjectPublicKeyInfo, TbsCertificate, Validity, Verdict, VerifierProfile,
};
use crate::Error;

/// Contents of the Alt-SPKI extension: the subject's PQC algorithm and key,
/// and the CA's PQC signature over the pre-TBS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltSpki {
    pub alg_oid: Oid,
    pub key: Vec<u8>,
    pub sig: Vec<u8>,
}

impl AltSpki {
    /// Encode as one non-critical extension: SEQUENCE { OID, BIT STRING key,
    /// BIT STRING sig }.
    pub fn to_extension(&self) -> Result<Extension, Error> {
        let value = DerValue::sequence(vec![
            DerValue::oid(&self.alg_oid),
            DerValue::bit_string(&self.key),
            DerValue::bit_string(&self.sig),
        ]);
        Ok(Extension {
            oid: oids::alt_spki(),
            critical: false,
            value: der::encode_value(&value)?,
        })
    }

    pub fn from_extension(ext: &Extension) -> Result<Self, Error> {
        if ext.oid != oids::alt_spki() {
            return Err(Error::MalformedAltSpki);
        }
        let value = der::decode_value_exact(&ext.value).map_err(|_| Error::MalformedAltSpki)?;
        let [alg, key, sig] = value
            .children()
            .filter(|_| value.is_universal(tag::SEQUENCE))
            .ok_or(Error::MalformedAltSpki)?
        else {
            return Err(Error::MalformedAltSpki);
        };
        let alg_oid = alg.as_oid().ok_or(Error::MalformedAltSpki)?;
        let unpack = |v: &DerValue| match v.as_bit_string() {
            Some((0, bits)) => Ok(bits.to_vec()),
            _ => Err(Error::MalformedAltSpki),
        };
        Ok(Self {
            alg_oid,
            key: unpack(key)?,
            sig: unpack(sig)?,
        })
    }
}

/// The message the PQC signature covers: the TBS re-encoded with its single
/// Alt-SPKI extension removed. Pure function; the input TBS is not changed.
pub fn build_pre_tbs(tbs: &TbsCertificate) -> Result<Vec<u8>, Error> {
    let count = tbs.extensions_with_oid(&oids::alt_spki()).count();
    match count {
        0 => return Err(Error::MissingAltSpki),
        1 => {}
        _ => return Err(Error::MultipleAltSpki),
    }
    let mut stripped = tbs.clone();
    stripped.extensions.retain(|e| e.oid != oids::alt_spki());
    x509::encode_tbs(&stripped)
}

pub struct CatalystIssueParams<'a> {
    pub subject: Name,
    pub subject_classical_algorithm: &'a str,
    pub subject_classical_public_key: &'a [u8],
    pub subject_pqc_algorithm: &'a str,
    pub subject_pqc_public_key: &'a [u8],
    pub issuer: Name,
    pub ca_classical: &'a KeyPair,
    pub ca_pqc: &'a KeyPair,
    pub serial: u64,
    pub validity: Validity,
    pub usages: &'a [KeyUsage],
}

/// Two-phase issuance. Phase 1 signs the TBS without the Alt-SPKI extension
/// using the CA's PQC key; phase 2 embeds the extension and signs the full
/// TBS with the CA's classical key. Phase 2 strictly happens after phase 1.
pub fn catalyst_issue(
    params: &CatalystIssueParams<'_>,
    registry: &Registry,
    providers: &dyn ProviderSet,
) -> Result<Certificate, Error> {
    // One PQC algorithm serves both the subject's alt key and the CA's alt
    // signature; mixed configurations are rejected.
    if params.subject_pqc_algorithm != params.ca_pqc.algorithm {
        return Err(Error::MixedPqcAlgorithms);
    }
    let classical_alg = registry.require(params.subject_classical_algorithm)?;
    let pqc_alg = registry.require(params.subject_pqc_algorithm)?;
    if pqc_alg.role != Role::Signature || pqc_alg.is_classical() {
        return Err(Error::MixedPqcAlgorithms);
    }
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
    let ca_classical_alg = registry.require(&params.ca_classical.algorithm)?;

    // Phase 1: pre-TBS (no Alt-SPKI), PQC signature.
    let mut tbs = TbsCertificate {
        serial: params.serial,
        signature_alg: ca_classical_alg.oid.clone(),
        issuer: params.issuer.clone(),
        validity: params.validity,
        subject: params.subject.clone(),
        spki: SubjectPublicKeyInfo::for_key(classical_alg, params.subject_classical_public_key),
        extensions: vec![key_usage_extension(params.usages)?],
    };
    let pre_bytes = x509::encode_tbs(&tbs)?;
    let pqc_provider = providers.require(&params.ca_pqc.algorithm)?;
    let alt_sig = pqc_provider.sign(&params.ca_pqc.private_key, &pre_bytes)?;

    // Phase 2: embed the extension, classical signature over the full TBS.
    let alt = AltSpki {
        alg_oid: pqc_alg.oid.clone(),
        key: params.subject_pqc_public_key.to_vec(),
        sig: alt_sig,
    };
    tbs.extensions.push(alt.to_extension()?);
    x509::sign_certificate(tbs, params.ca_classical, registry, providers)
}

/// Extract the single Alt-SPKI extension of a certificate.
pub fn alt_spki_of(cert: &Certificate) -> Result<AltSpki, Error> {
    let alt_oid = oids::alt_spki();
    let mut found = cert.tbs.extensions_with_oid(&alt_oid);
    let first = found.next().ok_or(Error::MissingAltSpki)?;
    if found.next().is_some() {
        return Err(Error::MultipleAltSpki);
    }
    AltSpki::from_extension(first)
}

/// Verify a catalyst certificate. A legacy verifier checks only the
/// classical outer signature and ignores the Alt-SPKI extension; a
/// PQC-aware verifier additionally checks the PQC signature over the
/// recomputed pre-TBS.
pub fn catalyst_verify(
    cert: &Certificate,
    ca_classical_public_key: &[u8],
    ca_pqc_public_key: &[u8],
    profile: VerifierProfile,
    at: i64,
    registry: &Registry,
    providers: &dyn ProviderSet,
) -> Verdict {
    let base = x509::verify(
        cert,
        ca_classical_public_key,
        profile,
        at,
        registry,
        providers,
    );
    if profile == VerifierProfile::Legacy || !base.is_accept() {
        return base;
    }
    let alt = match alt_spki_of(cert) {
        Ok(alt) => alt,
        Err(_) => return Verdict::Reject(RejectReason::MalformedAlt),
    };
    let Some(alt_alg) = registry.lookup_by_oid(&alt.alg_oid) else {
        return Verdict::Reject(RejectReason::UnknownAlgorithm);
    };
    if alt_alg.role != Role::Signature || alt_alg.is_classical() {
        return Verdict::Reject(RejectReason::MalformedAlt);
    }
    let Some(provider) = providers.get(&alt_alg.name) else {
        return Verdict::Reject(RejectReason::UnknownAlgorithm);
    };
    let Ok(pre_bytes) = build_pre_tbs(&cert.tbs) else {
        return Verdict::Reject(RejectReason::MalformedAlt);
    };
    if !provider.verify(ca_pqc_public_key, &pre_bytes, &alt.sig) {
        return Verdict::Reject(RejectReason::BadSignature);
    }
    Verdict::Accept
}
