//! Latency injection for the signing-time experiment: a wrapper provider
//! whose `sign` takes at least a configured wall-clock delay. Keygen and
//! verification pass straight through, and concurrent callers are not
//! serialized; the delay applies per call.

use std::collections::BTreeMap;
use std::thread;
use std::time::Duration;

use pqcert_core::provider::{
    mock_provider, KeyPair, MockProvider, ProviderError, ProviderSet, SignatureProvider, SEED_LEN,
};
use pqcert_core::registry::{AlgorithmId, Registry};

pub struct LatencyProvider<P: SignatureProvider> {
    inner: P,
    delay: Duration,
}

impl<P: SignatureProvider> LatencyProvider<P> {
    pub fn new(inner: P, delay: Duration) -> Self {
        Self { inner, delay }
    }
}

/// Wrap a provider so each sign call takes at least `delay_ms` milliseconds.
pub fn with_latency<P: SignatureProvider>(inner: P, delay_ms: u64) -> LatencyProvider<P> {
    LatencyProvider::new(inner, Duration::from_millis(delay_ms))
}

impl<P: SignatureProvider> SignatureProvider for LatencyProvider<P> {
    fn algorithm(&self) -> &AlgorithmId {
        self.inner.algorithm()
    }

    fn keygen(&self, seed: &[u8; SEED_LEN]) -> Result<KeyPair, ProviderError> {
        self.inner.keygen(seed)
    }

    fn sign(&self, private_key: &[u8], message: &[u8]) -> Result<Vec<u8>, ProviderError> {
        thread::sleep(self.delay);
        self.inner.sign(private_key, message)
    }

    fn verify(&self, public_key: &[u8], message: &[u8], signature: &[u8]) -> bool {
        self.inner.verify(public_key, message, signature)
    }
}

/// Every built-in provider, each wrapped with the same sign delay.
pub struct LatencyProviderSet {
    providers: BTreeMap<String, LatencyProvider<MockProvider>>,
}

impl LatencyProviderSet {
    pub fn new(registry: &Registry, delay_ms: u64) -> Self {
        let providers = registry
            .entries()
            .iter()
            .filter(|e| e.has_builtin_provider)
            .map(|e| {
                let provider = mock_provider(registry, &e.name).expect("builtin provider");
                (e.name.clone(), with_latency(provider, delay_ms))
            })
            .collect();
        Self { providers }
    }
}

impl ProviderSet for LatencyProviderSet {
    fn get(&self, name: &str) -> Option<&dyn SignatureProvider> {
        self.providers
            .get(name)
            .map(|p| p as &dyn SignatureProvider)
    }
}
