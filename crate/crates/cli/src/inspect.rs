//! Human-readable certificate dump: field values, decoded extensions, and
//! for hybrid shapes the decoded component keys and signatures.

use std::fmt::Write;

use pqcert_core::catalyst::AltSpki;
use pqcert_core::chameleon::DeltaCertificateDescriptor;
use pqcert_core::composite::decode_pair;
use pqcert_core::der::Oid;
use pqcert_core::dertime::civil_from_unix;
use pqcert_core::registry::{Registry, Role};
use pqcert_core::x509::{decode_key_usage, oids, Certificate, Extension, KeyUsage, Validity};

fn timestamp(t: i64) -> String {
    let c = civil_from_unix(t);
    format!(
        "{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z",
        c.year, c.month, c.day, c.hour, c.minute, c.second
    )
}

fn alg_name(registry: &Registry, oid: &Oid) -> String {
    match registry.lookup_by_oid(oid) {
        Some(entry) => format!("{} ({})", entry.name, oid),
        None => format!("unknown ({})", oid),
    }
}

fn usage_list(usages: &[KeyUsage]) -> String {
    usages
        .iter()
        .map(|u| match u {
            KeyUsage::DigitalSignature => "digitalSignature",
            KeyUsage::DataEncipherment => "dataEncipherment",
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn validity_line(v: &Validity) -> String {
    format!("{} .. {}", timestamp(v.not_before), timestamp(v.not_after))
}

fn render_extension(out: &mut String, registry: &Registry, ext: &Extension) {
    let criticality = if ext.critical {
        "critical"
    } else {
        "non-critical"
    };
    if ext.oid == oids::key_usage() {
        let usages = decode_key_usage(&ext.value)
            .map(|u| usage_list(&u))
            .unwrap_or_else(|_| "<malformed>".into());
        let _ = writeln!(
            out,
            "    keyUsage ({}, {}): {}",
            ext.oid, criticality, usages
        );
    } else if ext.oid == oids::alt_spki() {
        match AltSpki::from_extension(ext) {
            Ok(alt) => {
                let _ = writeln!(out, "    altSpki ({}, {}):", ext.oid, criticality);
                let _ = writeln!(out, "      algorithm: {}", alg_name(registry, &alt.alg_oid));
                let _ = writeln!(out, "      key: {} bytes", alt.key.len());
                let _ = writeln!(out, "      signature: {} bytes", alt.sig.len());
            }
            Err(_) => {
                let _ = writeln!(
                    out,
                    "    altSpki ({}, {}): <malformed>",
                    ext.oid, criticality
                );
            }
        }
    } else if ext.oid == oids::delta_descriptor() {
        match DeltaCertificateDescriptor::from_extension(ext) {
            Ok(d) => {
                let _ = writeln!(
                    out,
                    "    deltaCertificateDescriptor ({}, {}):",
                    ext.oid, criticality
                );
                let _ = writeln!(out, "      serial: {}", d.serial);
                if let Some(alg) = &d.signature_alg {
                    let _ = writeln!(out, "      signatureAlgorithm: {}", alg_name(registry, alg));
                }
                if let Some(issuer) = &d.issuer {
                    let _ = writeln!(out, "      issuer: CN={}", issuer.common_name);
                }
                if let Some(validity) = &d.validity {
                    let _ = writeln!(out, "      validity: {}", validity_line(validity));
                }
                if let Some(subject) = &d.subject {
                    let _ = writeln!(out, "      subject: CN={}", subject.common_name);
                }
                let _ = writeln!(
                    out,
                    "      spki: {} ({} bytes)",
                    alg_name(registry, &d.spki.alg_oid),
                    d.spki.key.len()
                );
                if let Some(exts) = &d.extensions {
                    let _ = writeln!(out, "      extensions: {} entries", exts.len());
                }
                let _ = writeln!(out, "      signature: {} bytes", d.sig.len());
                let elided: Vec<&str> = [
                    ("signatureAlgorithm", d.signature_alg.is_none()),
                    ("issuer", d.issuer.is_none()),
                    ("validity", d.validity.is_none()),
                    ("subject", d.subject.is_none()),
                    ("extensions", d.extensions.is_none()),
                ]
                .into_iter()
                .filter_map(|(name, absent)| absent.then_some(name))
                .collect();
                if !elided.is_empty() {
                    let _ = writeln!(out, "      elided (same as outer): {}", elided.join(", "));
                }
            }
            Err(_) => {
                let _ = writeln!(
                    out,
                    "    deltaCertificateDescriptor ({}, {}): <malformed>",
                    ext.oid, criticality
                );
            }
        }
    } else {
        let _ = writeln!(
            out,
            "    {} ({}): {} bytes",
            ext.oid,
            criticality,
            ext.value.len()
        );
    }
}

pub fn render_certificate(registry: &Registry, cert: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "certificate:");
    let _ = writeln!(out, "  serial: {}", cert.tbs.serial);
    let _ = writeln!(out, "  issuer: CN={}", cert.tbs.issuer.common_name);
    let _ = writeln!(out, "  subject: CN={}", cert.tbs.subject.common_name);
    let _ = writeln!(out, "  validity: {}", validity_line(&cert.tbs.validity));

    let composite = registry
        .lookup_by_oid(&cert.tbs.spki.alg_oid)
        .map(|e| e.role == Role::CompositeSignature)
        .unwrap_or(false);
    let _ = writeln!(out, "  spki:");
    let _ = writeln!(
        out,
        "    algorithm: {}",
        alg_name(registry, &cert.tbs.spki.alg_oid)
    );
    if composite {
        match decode_pair(&cert.tbs.spki.key) {
            Ok(pair) => {
                let _ = writeln!(out, "    pqc component key: {} bytes", pair.first.len());
                let _ = writeln!(
                    out,
                    "    classical component key: {} bytes",
                    pair.second.len()
                );
            }
            Err(_) => {
                let _ = writeln!(out, "    key: <malformed composite pair>");
            }
        }
    } else {
        let _ = writeln!(out, "    key: {} bytes", cert.tbs.spki.key.len());
    }

    let _ = writeln!(out, "  extensions:");
    for ext in &cert.tbs.extensions {
        render_extension(&mut out, registry, ext);
    }

    let _ = writeln!(out, "  signature:");
    let _ = writeln!(out, "    algorithm: {}", alg_name(registry, &cert.sig_alg));
    if composite {
        match decode_pair(&cert.sig) {
            Ok(pair) => {
                let _ = writeln!(out, "    pqc component: {} bytes", pair.first.len());
                let _ = writeln!(out, "    classical component: {} bytes", pair.second.len());
            }
            Err(_) => {
                let _ = writeln!(out, "    value: <malformed composite pair>");
            }
        }
    } else {
        let _ = writeln!(out, "    value: {} bytes", cert.sig.len());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{Fixtures, DEFAULT_CLOCK};

    #[test]
    fn composite_inspection_shows_both_components() {
        let f = Fixtures::new([0; 32], DEFAULT_CLOCK).unwrap();
        let text = render_certificate(&f.registry, &f.issue_composite().unwrap());
        assert!(text.contains("id-MLDSA44-ECDSA-P256-SHA256"));
        assert!(text.contains("pqc component key: 1312 bytes"));
        assert!(text.contains("classical component key: 65 bytes"));
        assert!(text.contains("pqc component: 2420 bytes"));
    }

    #[test]
    fn catalyst_inspection_decodes_alt_spki() {
        let f = Fixtures::new([0; 32], DEFAULT_CLOCK).unwrap();
        let text = render_certificate(&f.registry, &f.issue_catalyst().unwrap());
        assert!(text.contains("altSpki"));
        assert!(text.contains("ML-DSA-44"));
        assert!(text.contains("signature: 2420 bytes"));
    }

    #[test]
    fn chameleon_inspection_lists_elided_fields() {
        let f = Fixtures::new([0; 32], DEFAULT_CLOCK).unwrap();
        let (outer, _) = f.issue_chameleon().unwrap();
        let text = render_certificate(&f.registry, &outer);
        assert!(text.contains("deltaCertificateDescriptor"));
        assert!(text.contains("elided (same as outer): issuer, validity, subject, extensions"));
    }
}
