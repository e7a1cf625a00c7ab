//! Certificate file IO. PEM is detected by the dash framing; anything else
//! is treated as raw DER.

use std::fs;
use std::path::Path;

use pqcert_core::pem::{pem_decode, pem_encode, LABEL_CERTIFICATE, LABEL_CERTIFICATE_REQUEST};
use pqcert_core::x509::{Certificate, CertificateSigningRequest};

use crate::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertFormat {
    Pem,
    Der,
}

pub fn read_certificate(path: &Path) -> Result<Certificate, HarnessError> {
    let bytes = fs::read(path)?;
    let der = if bytes.starts_with(b"-----") {
        let text = String::from_utf8(bytes)
            .map_err(|_| HarnessError::Usage(format!("{}: not valid PEM text", path.display())))?;
        let (label, der) = pem_decode(&text)?;
        if label != LABEL_CERTIFICATE {
            return Err(HarnessError::Usage(format!(
                "{}: expected a CERTIFICATE block, found {}",
                path.display(),
                label
            )));
        }
        der
    } else {
        bytes
    };
    Ok(Certificate::from_der(&der)?)
}

pub fn write_certificate(
    path: &Path,
    cert: &Certificate,
    format: CertFormat,
) -> Result<(), HarnessError> {
    let der = cert.to_der()?;
    match format {
        CertFormat::Pem => fs::write(path, pem_encode(LABEL_CERTIFICATE, &der)?)?,
        CertFormat::Der => fs::write(path, der)?,
    }
    Ok(())
}

pub fn certificate_text(cert: &Certificate, format: CertFormat) -> Result<Vec<u8>, HarnessError> {
    let der = cert.to_der()?;
    Ok(match format {
        CertFormat::Pem => pem_encode(LABEL_CERTIFICATE, &der)?.into_bytes(),
        CertFormat::Der => der,
    })
}

pub fn read_csr(path: &Path) -> Result<CertificateSigningRequest, HarnessError> {
    let bytes = fs::read(path)?;
    let der = if bytes.starts_with(b"-----") {
        let text = String::from_utf8(bytes)
            .map_err(|_| HarnessError::Usage(format!("{}: not valid PEM text", path.display())))?;
        let (label, der) = pem_decode(&text)?;
        if label != LABEL_CERTIFICATE_REQUEST {
            return Err(HarnessError::Usage(format!(
                "{}: expected a CERTIFICATE REQUEST block, found {}",
                path.display(),
                label
            )));
        }
        der
    } else {
        bytes
    };
    Ok(CertificateSigningRequest::from_der(&der)?)
}

pub fn write_csr(path: &Path, csr: &CertificateSigningRequest) -> Result<(), HarnessError> {
    let der = csr.to_der()?;
    fs::write(path, pem_encode(LABEL_CERTIFICATE_REQUEST, &der)?)?;
    Ok(())
}
