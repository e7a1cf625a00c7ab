//! Registry of known algorithms: name, object identifier, role, security
//! level, and size profile.
//!
//! OIDs here are stable placeholders under a private arc (`1.3.9999.*`),
//! since interop with external PKI is out of scope; the full assignment
//! table lives in the repository README. Key and signature sizes follow the
//! published parameter sets (FIPS 203/204/205, SEC1) so that certificate
//! lengths come out realistic.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::der::Oid;
use crate::Error;

/// What an algorithm is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Signature,
    Kem,
    CompositeSignature,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Signature => "signature",
            Self::Kem => "kem",
            Self::CompositeSignature => "composite-signature",
        }
    }
}

/// Byte-length profile for keys and signatures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeSpec {
    Fixed(usize),
    Variable { min: usize, max: usize },
}

impl SizeSpec {
    pub fn contains(&self, len: usize) -> bool {
        match *self {
            Self::Fixed(n) => len == n,
            Self::Variable { min, max } => (min..=max).contains(&len),
        }
    }
}

/// One registry entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmId {
    pub name: String,
    pub oid: Oid,
    pub role: Role,
    /// NIST strength category 1–5; `None` for classical algorithms.
    pub security_level: Option<u8>,
    /// Component algorithm names, populated only for composite signatures.
    pub component_names: Vec<String>,
    pub public_key_len: SizeSpec,
    /// `None` for KEM algorithms.
    pub signature_len: Option<SizeSpec>,
    /// Whether the built-in deterministic stand-in can serve this entry.
    pub has_builtin_provider: bool,
}

impl AlgorithmId {
    pub fn is_classical(&self) -> bool {
        self.security_level.is_none()
    }
}

/// Immutable after construction; lookups by name and by OID resolve to the
/// same entries.
#[derive(Debug, Clone)]
pub struct Registry {
    entries: Vec<AlgorithmId>,
    by_name: BTreeMap<String, usize>,
    by_oid: BTreeMap<Oid, usize>,
}

impl Registry {
    fn from_entries(entries: Vec<AlgorithmId>) -> Self {
        let mut by_name = BTreeMap::new();
        let mut by_oid = BTreeMap::new();
        for (index, entry) in entries.iter().enumerate() {
            let prev_name = by_name.insert(entry.name.clone(), index);
            let prev_oid = by_oid.insert(entry.oid.clone(), index);
            debug_assert!(prev_name.is_none(), "duplicate algorithm name");
            debug_assert!(prev_oid.is_none(), "duplicate algorithm OID");
        }
        Self {
            entries,
            by_name,
            by_oid,
        }
    }

    pub fn lookup(&self, name: &str) -> Option<&AlgorithmId> {
        self.by_name.get(name).map(|&i| &self.entries[i])
    }

    pub fn lookup_by_oid(&self, oid: &Oid) -> Option<&AlgorithmId> {
        self.by_oid.get(oid).map(|&i| &self.entries[i])
    }

    pub fn require(&self, name: &str) -> Result<&AlgorithmId, Error> {
        self.lookup(name).ok_or(Error::UnknownAlgorithm)
    }

    pub fn require_by_oid(&self, oid: &Oid) -> Result<&AlgorithmId, Error> {
        self.lookup_by_oid(oid).ok_or(Error::UnknownAlgorithm)
    }

    /// Entries in table order.
    pub fn entries(&self) -> &[AlgorithmId] {
        &self.entries
    }

    /// Replace the size profile of an entry. Sizes are advisory defaults for
    /// the stand-in providers, so deployments measuring other parameter sets
    /// can adjust them without rebuilding the table.
    pub fn override_sizes(
        &mut self,
        name: &str,
        public_key_len: SizeSpec,
        signature_len: Option<SizeSpec>,
    ) -> Result<(), Error> {
        let &index = self.by_name.get(name).ok_or(Error::UnknownAlgorithm)?;
        self.entries[index].public_key_len = public_key_len;
        self.entries[index].signature_len = signature_len;
        Ok(())
    }
}

fn sig(
    name: &str,
    oid_arcs: &[u64],
    level: Option<u8>,
    pk: usize,
    sig_len: SizeSpec,
    provided: bool,
) -> AlgorithmId {
    AlgorithmId {
        name: name.to_owned(),
        oid: Oid::from_arcs(oid_arcs),
        role: Role::Signature,
        security_level: level,
        component_names: Vec::new(),
        public_key_len: SizeSpec::Fixed(pk),
        signature_len: Some(sig_len),
        has_builtin_provider: provided,
    }
}

fn kem(name: &str, oid_arcs: &[u64], level: u8, pk: usize) -> AlgorithmId {
    AlgorithmId {
        name: name.to_owned(),
        oid: Oid::from_arcs(oid_arcs),
        role: Role::Kem,
        security_level: Some(level),
        component_names: Vec::new(),
        public_key_len: SizeSpec::Fixed(pk),
        signature_len: None,
        has_builtin_provider: true,
    }
}

/// Composite signature name used throughout the toolkit.
pub const COMPOSITE_MLDSA44_ECDSA_P256: &str = "id-MLDSA44-ECDSA-P256-SHA256";

/// Build the built-in table: the ML-DSA family, the twelve SLH-DSA parameter
/// sets, the ML-KEM family, classical ECDSA P-256, and the composite
/// ML-DSA-44 + ECDSA-P256 pair.
pub fn builtin_registry() -> Registry {
    let mut entries = vec![
        sig(
            "ML-DSA-44",
            &[1, 3, 9999, 1, 1],
            Some(2),
            1312,
            SizeSpec::Fixed(2420),
            true,
        ),
        sig(
            "ML-DSA-65",
            &[1, 3, 9999, 1, 2],
            Some(3),
            1952,
            SizeSpec::Fixed(3309),
            true,
        ),
        sig(
            "ML-DSA-87",
            &[1, 3, 9999, 1, 3],
            Some(5),
            2592,
            SizeSpec::Fixed(4627),
            true,
        ),
    ];

    // SLH-DSA parameter sets are registered for completeness but carry no
    // built-in provider.
    let slh = [
        ("SLH-DSA-SHA2-128s", 10, 1, 32, 7856),
        ("SLH-DSA-SHAKE-128s", 11, 1, 32, 7856),
        ("SLH-DSA-SHA2-128f", 12, 1, 32, 17088),
        ("SLH-DSA-SHAKE-128f", 13, 1, 32, 17088),
        ("SLH-DSA-SHA2-192s", 14, 3, 48, 16224),
        ("SLH-DSA-SHAKE-192s", 15, 3, 48, 16224),
        ("SLH-DSA-SHA2-192f", 16, 3, 48, 35664),
        ("SLH-DSA-SHAKE-192f", 17, 3, 48, 35664),
        ("SLH-DSA-SHA2-256s", 18, 5, 64, 29792),
        ("SLH-DSA-SHAKE-256s", 19, 5, 64, 29792),
        ("SLH-DSA-SHA2-256f", 20, 5, 64, 49856),
        ("SLH-DSA-SHAKE-256f", 21, 5, 64, 49856),
    ];
    for (name, arc, level, pk, sig_len) in slh {
        entries.push(sig(
            name,
            &[1, 3, 9999, 1, arc],
            Some(level),
            pk,
            SizeSpec::Fixed(sig_len),
            false,
        ));
    }

    entries.push(kem("ML-KEM-512", &[1, 3, 9999, 1, 30], 1, 800));
    entries.push(kem("ML-KEM-768", &[1, 3, 9999, 1, 31], 3, 1184));
    entries.push(kem("ML-KEM-1024", &[1, 3, 9999, 1, 32], 5, 1568));

    // Uncompressed SEC1 point; DER-encoded signature length jitters with the
    // leading bits of r and s.
    entries.push(sig(
        "ECDSA-P256",
        &[1, 3, 9999, 1, 40],
        None,
        65,
        SizeSpec::Variable { min: 70, max: 72 },
        true,
    ));

    entries.push(AlgorithmId {
        name: COMPOSITE_MLDSA44_ECDSA_P256.to_owned(),
        oid: Oid::from_arcs(&[1, 3, 9999, 2, 1]),
        role: Role::CompositeSignature,
        security_level: Some(2),
        component_names: vec!["ML-DSA-44".to_owned(), "ECDSA-P256".to_owned()],
        public_key_len: SizeSpec::Variable {
            min: 2,
            max: usize::MAX,
        },
        signature_len: Some(SizeSpec::Variable {
            min: 2,
            max: usize::MAX,
        }),
        has_builtin_provider: false,
    });

    Registry::from_entries(entries)
}
