//! Pluggable signature providers and the deterministic built-in stand-ins.
//!
//! The stand-ins are **not secure**: signing expands a SHA-256 digest of
//! public inputs to the registered signature length, and verification
//! recomputes the same expansion. What they guarantee is exact size
//! fidelity, determinism from a 32-byte seed, and rejection of any tampered
//! message or signature, which is what the certificate-shape comparisons
//! need. Real algorithm implementations slot in behind
//! [`SignatureProvider`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use sha2::{Digest, Sha256};

use crate::registry::{AlgorithmId, Registry, Role, SizeSpec};

pub const SEED_LEN: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProviderError {
    /// Algorithm not in the registry.
    UnknownAlgorithm,
    /// Registered, but no implementation is wired in (the SLH-DSA entries).
    NoProvider,
    /// Private key bytes do not match the expected seed‖public-key layout.
    KeyLengthMismatch,
    /// Signing requested for a non-signature role (KEM keys cannot sign).
    NotASignatureAlgorithm,
}

impl fmt::Display for ProviderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnknownAlgorithm => write!(f, "unknown algorithm"),
            Self::NoProvider => write!(f, "no provider for algorithm"),
            Self::KeyLengthMismatch => write!(f, "private key length mismatch"),
            Self::NotASignatureAlgorithm => write!(f, "algorithm cannot sign"),
        }
    }
}

impl core::error::Error for ProviderError {}

/// Key material for one algorithm. Private keys of the stand-ins are
/// `seed ‖ public_key`, so regeneration from the same seed is byte-identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyPair {
    pub algorithm: String,
    pub public_key: Vec<u8>,
    pub private_key: Vec<u8>,
    pub seed: [u8; SEED_LEN],
}

/// Behavior contract for a signature or key-generation backend. Providers
/// are stateless and safe for concurrent use.
pub trait SignatureProvider: Sync {
    fn algorithm(&self) -> &AlgorithmId;

    fn keygen(&self, seed: &[u8; SEED_LEN]) -> Result<KeyPair, ProviderError>;

    fn sign(&self, private_key: &[u8], message: &[u8]) -> Result<Vec<u8>, ProviderError>;

    fn verify(&self, public_key: &[u8], message: &[u8], signature: &[u8]) -> bool;
}

/// Derive a labeled sub-seed from a master seed: `H(master ‖ label)`.
/// Fixture tooling uses this to fan one CLI seed out to CA and subject keys.
pub fn derive_seed(master: &[u8; SEED_LEN], label: &str) -> [u8; SEED_LEN] {
    digest_parts(&[master, label.as_bytes()])
}

/// Counter-mode rehashing: `H(x‖0) ‖ H(x‖1) ‖ …` truncated to `len` bytes.
fn expand(x: &[u8], len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len + 32);
    let mut counter: u32 = 0;
    while out.len() < len {
        let mut h = Sha256::new();
        h.update(x);
        h.update(counter.to_be_bytes());
        out.extend_from_slice(&h.finalize());
        counter += 1;
    }
    out.truncate(len);
    out
}

fn digest_parts(parts: &[&[u8]]) -> [u8; 32] {
    let mut h = Sha256::new();
    for part in parts {
        h.update(part);
    }
    h.finalize().into()
}

/// Deterministic, size-faithful stand-in for one registered algorithm.
#[derive(Debug, Clone)]
pub struct MockProvider {
    alg: AlgorithmId,
}

impl MockProvider {
    /// Build a stand-in for the entry, or report that none exists.
    pub fn new(alg: &AlgorithmId) -> Result<Self, ProviderError> {
        if !alg.has_builtin_provider {
            return Err(ProviderError::NoProvider);
        }
        Ok(Self { alg: alg.clone() })
    }

    fn public_key_len(&self) -> usize {
        match self.alg.public_key_len {
            SizeSpec::Fixed(n) => n,
            // No built-in entry has a variable public key; keep the minimum
            // as a safe fallback for overridden profiles.
            SizeSpec::Variable { min, .. } => min,
        }
    }

    fn signature_len(&self, digest: &[u8; 32]) -> Result<usize, ProviderError> {
        match self.alg.signature_len {
            Some(SizeSpec::Fixed(n)) => Ok(n),
            Some(SizeSpec::Variable { min, max }) => {
                // Deterministic length jitter drawn from the digest, mimicking
                // DER integer-pair encodings that shrink with leading zeros.
                let span = max - min + 1;
                Ok(min + usize::from(digest[0]) % span)
            }
            None => Err(ProviderError::NotASignatureAlgorithm),
        }
    }
}

impl SignatureProvider for MockProvider {
    fn algorithm(&self) -> &AlgorithmId {
        &self.alg
    }

    fn keygen(&self, seed: &[u8; SEED_LEN]) -> Result<KeyPair, ProviderError> {
        let digest = digest_parts(&[b"pk", self.alg.name.as_bytes(), seed]);
        let public_key = expand(&digest, self.public_key_len());
        let mut private_key = Vec::with_capacity(SEED_LEN + public_key.len());
        private_key.extend_from_slice(seed);
        private_key.extend_from_slice(&public_key);
        Ok(KeyPair {
            algorithm: self.alg.name.clone(),
            public_key,
            private_key,
            seed: *seed,
        })
    }

    fn sign(&self, private_key: &[u8], message: &[u8]) -> Result<Vec<u8>, ProviderError> {
        if self.alg.role == Role::Kem {
            return Err(ProviderError::NotASignatureAlgorithm);
        }
        if private_key.len() != SEED_LEN + self.public_key_len() {
            return Err(ProviderError::KeyLengthMismatch);
        }
        let public_key = &private_key[SEED_LEN..];
        let digest = digest_parts(&[b"sig", self.alg.name.as_bytes(), public_key, message]);
        let len = self.signature_len(&digest)?;
        Ok(expand(&digest, len))
    }

    fn verify(&self, public_key: &[u8], message: &[u8], signature: &[u8]) -> bool {
        let digest = digest_parts(&[b"sig", self.alg.name.as_bytes(), public_key, message]);
        let Ok(len) = self.signature_len(&digest) else {
            return false;
        };
        expand(&digest, len).as_slice() == signature
    }
}

/// Lookup of providers by algorithm name; the seam where deployments swap
/// in real implementations or wrappers.
pub trait ProviderSet {
    fn get(&self, name: &str) -> Option<&dyn SignatureProvider>;

    fn require(&self, name: &str) -> Result<&dyn SignatureProvider, ProviderError> {
        self.get(name).ok_or(ProviderError::NoProvider)
    }
}

/// The built-in stand-ins for every registry entry that has one.
pub struct MockProviderSet {
    providers: BTreeMap<String, MockProvider>,
}

impl MockProviderSet {
    pub fn new(registry: &Registry) -> Self {
        let providers = registry
            .entries()
            .iter()
            .filter(|e| e.has_builtin_provider)
            .map(|e| (e.name.clone(), MockProvider { alg: e.clone() }))
            .collect();
        Self { providers }
    }
}

impl ProviderSet for MockProviderSet {
    fn get(&self, name: &str) -> Option<&dyn SignatureProvider> {
        self.providers
            .get(name)
            .map(|p| p as &dyn SignatureProvider)
    }
}

pub type SignResult = Result<Vec<u8>, ProviderError>;

/// Runs the two data-independent component signatures of a composite
/// issuance. The sequential implementation lives here; a thread-backed one
/// ships with the std companion crate.
pub trait SignExecutor {
    fn sign_pair(
        &self,
        first: &(dyn Fn() -> SignResult + Sync),
        second: &(dyn Fn() -> SignResult + Sync),
    ) -> (SignResult, SignResult);
}

/// One signature after the other on the calling thread.
pub struct SequentialExecutor;

impl SignExecutor for SequentialExecutor {
    fn sign_pair(
        &self,
        first: &(dyn Fn() -> SignResult + Sync),
        second: &(dyn Fn() -> SignResult + Sync),
    ) -> (SignResult, SignResult) {
        (first(), second())
    }
}

/// Convenience: build the stand-in provider for a registered name.
pub fn mock_provider(registry: &Registry, name: &str) -> Result<MockProvider, ProviderError> {
    let alg = registry
        .lookup(name)
        .ok_or(ProviderError::UnknownAlgorithm)?;
    MockProvider::new(alg)
}
