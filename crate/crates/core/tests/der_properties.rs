//! Property tests for the canonical DER layer: round trips in both
//! directions, encoding determinism, and rejection of non-minimal length
//! mutations.

use pqcert_core::der::{decode_value, decode_value_exact, encode_value, DerValue, Oid};
use proptest::prelude::*;

fn arb_oid() -> impl Strategy<Value = Oid> {
    (
        0u64..=2,
        0u64..40,
        proptest::collection::vec(0u64..100_000, 0..5),
    )
        .prop_map(|(first, second, rest)| {
            let mut arcs = vec![first, second];
            arcs.extend(rest);
            Oid::new(arcs).expect("generated arcs are valid")
        })
}

fn arb_leaf() -> impl Strategy<Value = DerValue> {
    prop_oneof![
        any::<bool>().prop_map(DerValue::boolean),
        any::<u64>().prop_map(DerValue::integer),
        proptest::collection::vec(any::<u8>(), 0..600).prop_map(|b| DerValue::octet_string(&b)),
        proptest::collection::vec(any::<u8>(), 0..64).prop_map(|b| DerValue::bit_string(&b)),
        Just(DerValue::null()),
        arb_oid().prop_map(|o| DerValue::oid(&o)),
        "[a-zA-Z0-9 .-]{0,40}".prop_map(|s| DerValue::utf8(&s)),
        "[a-zA-Z0-9 ]{0,40}".prop_map(|s| DerValue::printable(&s)),
        Just(DerValue::utc_time("250101000000Z")),
        Just(DerValue::generalized_time("20500101000000Z")),
        (0u32..15, proptest::collection::vec(any::<u8>(), 0..32))
            .prop_map(|(n, b)| DerValue::context_primitive(n, b)),
    ]
}

fn arb_value() -> impl Strategy<Value = DerValue> {
    arb_leaf().prop_recursive(5, 24, 4, |inner| {
        prop_oneof![
            proptest::collection::vec(inner.clone(), 0..4).prop_map(DerValue::sequence),
            proptest::collection::vec(inner.clone(), 0..4).prop_map(DerValue::set),
            (0u32..15, proptest::collection::vec(inner, 0..3))
                .prop_map(|(n, children)| DerValue::context(n, children)),
        ]
    })
}

/// Stretch the outermost length field into a redundant long form.
fn lengthen_root_length(encoded: &[u8]) -> Vec<u8> {
    let mut out = encoded.to_vec();
    let len_byte = out[1];
    if len_byte < 0x80 {
        // Short form rewritten as a pointless one-byte long form.
        out[1] = 0x81;
        out.insert(2, len_byte);
    } else {
        // Long form padded with a leading zero octet.
        let count = len_byte & 0x7F;
        out[1] = 0x80 | (count + 1);
        out.insert(2, 0x00);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn decode_inverts_encode(value in arb_value()) {
        let encoded = encode_value(&value).unwrap();
        let decoded = decode_value_exact(&encoded).unwrap();
        prop_assert_eq!(decoded, value);
    }

    #[test]
    fn encode_inverts_decode(value in arb_value()) {
        let encoded = encode_value(&value).unwrap();
        let (decoded, used) = decode_value(&encoded).unwrap();
        prop_assert_eq!(used, encoded.len());
        prop_assert_eq!(encode_value(&decoded).unwrap(), encoded);
    }

    #[test]
    fn encoding_is_deterministic(value in arb_value()) {
        prop_assert_eq!(encode_value(&value).unwrap(), encode_value(&value).unwrap());
    }

    #[test]
    fn non_minimal_length_mutation_is_rejected(value in arb_value()) {
        let encoded = encode_value(&value).unwrap();
        let mutated = lengthen_root_length(&encoded);
        prop_assert!(decode_value(&mutated).is_err());
    }

    #[test]
    fn truncation_is_rejected(value in arb_value()) {
        let encoded = encode_value(&value).unwrap();
        // Chopping the final byte must never decode cleanly.
        let short = &encoded[..encoded.len() - 1];
        prop_assert!(decode_value_exact(short).is_err());
    }
}
