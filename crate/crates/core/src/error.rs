use core::fmt;

use crate::der::DerError;
use crate::provider::ProviderError;

/// Errors surfaced by certificate construction, decoding, and file framing.
/// Verification failures are not errors; they are [`crate::x509::Verdict`]
/// values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    Der(DerError),
    Provider(ProviderError),
    /// Algorithm name or OID not present in the registry.
    UnknownAlgorithm,
    /// Serial numbers must be positive.
    InvalidSerial,
    /// notBefore must precede notAfter.
    InvalidValidity,
    /// Common names must be non-empty.
    EmptyName,
    /// A key usage extension needs at least one usage.
    EmptyKeyUsage,
    /// Proof-of-possession signature missing or failed to verify.
    InvalidPop,
    /// Hybrid issuance requires the subject and CA to share one PQC algorithm.
    MixedPqcAlgorithms,
    /// CA key pair algorithms do not match the composite's components.
    ComponentMismatch,
    /// Expected exactly one Alt-SPKI extension.
    MissingAltSpki,
    MultipleAltSpki,
    MalformedAltSpki,
    /// Expected exactly one delta certificate descriptor extension.
    MissingDescriptor,
    MultipleDescriptors,
    MalformedDescriptor,
    /// Structure decoded as DER but does not match the certificate model.
    MalformedCertificate(&'static str),
    /// PEM framing lines missing or inconsistent.
    BadPemFraming,
    /// PEM body is not valid base64.
    BadBase64,
    /// PEM label outside the supported set.
    UnsupportedPemLabel,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Der(e) => write!(f, "DER error: {}", e),
            Self::Provider(e) => write!(f, "provider error: {}", e),
            Self::UnknownAlgorithm => write!(f, "algorithm not registered"),
            Self::InvalidSerial => write!(f, "serial number must be positive"),
            Self::InvalidValidity => write!(f, "notBefore must precede notAfter"),
            Self::EmptyName => write!(f, "common name must be non-empty"),
            Self::EmptyKeyUsage => write!(f, "key usage set must be non-empty"),
            Self::InvalidPop => write!(f, "proof-of-possession signature invalid"),
            Self::MixedPqcAlgorithms => {
                write!(f, "subject and CA must use the same PQC algorithm")
            }
            Self::ComponentMismatch => {
                write!(f, "CA keys do not match the composite components")
            }
            Self::MissingAltSpki => write!(f, "no Alt-SPKI extension present"),
            Self::MultipleAltSpki => write!(f, "more than one Alt-SPKI extension"),
            Self::MalformedAltSpki => write!(f, "malformed Alt-SPKI extension"),
            Self::MissingDescriptor => write!(f, "no delta certificate descriptor present"),
            Self::MultipleDescriptors => write!(f, "more than one delta certificate descriptor"),
            Self::MalformedDescriptor => write!(f, "malformed delta certificate descriptor"),
            Self::MalformedCertificate(what) => write!(f, "malformed certificate: {}", what),
            Self::BadPemFraming => write!(f, "bad PEM framing"),
            Self::BadBase64 => write!(f, "bad base64 in PEM body"),
            Self::UnsupportedPemLabel => write!(f, "unsupported PEM label"),
        }
    }
}

impl core::error::Error for Error {}

impl From<DerError> for Error {
    fn from(e: DerError) -> Self {
        Self::Der(e)
    }
}

impl From<ProviderError> for Error {
    fn from(e: ProviderError) -> Self {
        Self::Provider(e)
    }
}
