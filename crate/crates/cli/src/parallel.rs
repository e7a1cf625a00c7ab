//! Thread-backed executor for the two data-independent composite component
//! signatures: one runs on a scoped worker thread, the other on the calling
//! thread. Output order is fixed regardless of completion order, so the
//! issued certificate is identical to the sequential path's.

use pqcert_core::provider::{SignExecutor, SignResult};

pub struct ParallelExecutor;

impl SignExecutor for ParallelExecutor {
    fn sign_pair(
        &self,
        first: &(dyn Fn() -> SignResult + Sync),
        second: &(dyn Fn() -> SignResult + Sync),
    ) -> (SignResult, SignResult) {
        std::thread::scope(|scope| {
            let handle = scope.spawn(first);
            let second_result = second();
            let first_result = handle.join().expect("component signer panicked");
            (first_result, second_result)
        })
    }
}
