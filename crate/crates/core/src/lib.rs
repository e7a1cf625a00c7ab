//! Core model for hybrid post-quantum X.509 certificates.
//!
//! This crate is the algorithmic half of the toolkit. It carries a minimal
//! canonical DER encoder/decoder, an algorithm registry, deterministic
//! stand-in signature providers behind a pluggable trait, and the four
//! certificate shapes the toolkit issues and verifies:
//!
//! * **pure**: a single-algorithm certificate (PQC signature or KEM key);
//! * **composite**: both public keys under one composite OID, both
//!   signatures merged into one Sig field, AND-verification;
//! * **catalyst**: a classical certificate carrying a non-critical
//!   `Alt-SPKI` extension with a PQC key and a PQC signature over the TBS
//!   with that extension removed;
//! * **chameleon**: an outer classical certificate embedding a delta
//!   descriptor from which a full inner PQC certificate is reconstructed.
//!
//! Everything here is pure: no IO, no clocks (evaluation time is an
//! argument), no threads. The crate is `no_std`-compatible with `alloc`;
//! the `pqcert` companion crate adds file formats, latency injection,
//! parallel signing, and the command-line front end.
//!
//! The built-in providers are **not** cryptographically secure. They are
//! deterministic SHA-256 expansions with the exact key and signature sizes
//! of the algorithms they stand in for, so that encoding sizes, signing
//! order, and verification plumbing are byte-for-byte testable. Real
//! implementations plug in through [`provider::SignatureProvider`].

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod catalyst;
pub mod chameleon;
pub mod composite;
pub mod der;
pub mod dertime;
pub mod pem;
pub mod provider;
pub mod registry;
pub mod x509;

mod error;

pub use error::Error;
