//! Minimal canonical DER encoder/decoder.
//!
//! Covers exactly the ASN.1 subset the certificate model needs:
//!
//! ```text
//! BOOLEAN(1) INTEGER(2) BIT STRING(3) OCTET STRING(4) NULL(5)
//! OBJECT IDENTIFIER(6) UTF8String(12) SEQUENCE(16) SET(17)
//! PrintableString(19) UTCTime(23) GeneralizedTime(24)
//! ```
//!
//! plus context-specific tags for optional fields. Encoding is canonical:
//! definite lengths only, minimal length octets, and re-encoding a decoded
//! value reproduces the input bytes exactly. BER forms (indefinite lengths,
//! non-minimal lengths, constructed strings) are rejected on decode.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Universal tag numbers supported by this subset.
pub mod tag {
    pub const BOOLEAN: u32 = 1;
    pub const INTEGER: u32 = 2;
    pub const BIT_STRING: u32 = 3;
    pub const OCTET_STRING: u32 = 4;
    pub const NULL: u32 = 5;
    pub const OBJECT_IDENTIFIER: u32 = 6;
    pub const UTF8_STRING: u32 = 12;
    pub const SEQUENCE: u32 = 16;
    pub const SET: u32 = 17;
    pub const PRINTABLE_STRING: u32 = 19;
    pub const UTC_TIME: u32 = 23;
    pub const GENERALIZED_TIME: u32 = 24;
}

/// Deepest nesting accepted on decode. Bounds recursion on hostile input.
pub const MAX_DEPTH: usize = 32;

/// DER encode/decode errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerError {
    /// Input ended before the announced length was satisfied.
    Truncated,
    /// Indefinite length octet (0x80) (BER only, never DER).
    IndefiniteLength,
    /// Length encoded in more octets than necessary.
    NonMinimalLength,
    /// Reserved or oversized length encoding.
    InvalidLength,
    /// Universal tag outside the supported subset, or high-tag-number form.
    UnsupportedTag(u32),
    /// Application or private class identifier.
    UnsupportedClass(u8),
    /// Primitive/constructed bit disagrees with the tag's required form.
    ConstructedMismatch(u32),
    /// Bytes left over when an exact decode was requested.
    TrailingBytes,
    /// Nesting deeper than [`MAX_DEPTH`].
    DepthExceeded,
    /// BOOLEAN content not exactly one octet of 0x00 or 0xFF.
    InvalidBoolean,
    /// NULL with non-empty content.
    InvalidNull,
    /// BIT STRING without a valid unused-bits prefix octet.
    InvalidBitString,
    /// INTEGER content empty or too wide for the requested conversion.
    InvalidInteger,
    /// Malformed object identifier content or arcs.
    InvalidOid,
    /// Time string outside the supported forms or calendar range.
    InvalidTime,
}

impl fmt::Display for DerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Truncated => write!(f, "truncated input"),
            Self::IndefiniteLength => write!(f, "indefinite length is not DER"),
            Self::NonMinimalLength => write!(f, "non-minimal length encoding"),
            Self::InvalidLength => write!(f, "invalid length encoding"),
            Self::UnsupportedTag(n) => write!(f, "unsupported tag {}", n),
            Self::UnsupportedClass(c) => write!(f, "unsupported tag class {:#04b}", c),
            Self::ConstructedMismatch(n) => {
                write!(f, "wrong primitive/constructed form for tag {}", n)
            }
            Self::TrailingBytes => write!(f, "trailing bytes after value"),
            Self::DepthExceeded => write!(f, "nesting deeper than {} levels", MAX_DEPTH),
            Self::InvalidBoolean => write!(f, "invalid BOOLEAN content"),
            Self::InvalidNull => write!(f, "invalid NULL content"),
            Self::InvalidBitString => write!(f, "invalid BIT STRING content"),
            Self::InvalidInteger => write!(f, "invalid INTEGER content"),
            Self::InvalidOid => write!(f, "invalid object identifier"),
            Self::InvalidTime => write!(f, "invalid time value"),
        }
    }
}

impl core::error::Error for DerError {}

/// Tag class. Only universal and context-specific identifiers occur in the
/// certificate model; application and private classes are decode errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TagClass {
    Universal,
    Context,
}

/// Content of a value: raw octets for primitive forms, an ordered list of
/// child values for constructed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerContent {
    Primitive(Vec<u8>),
    Constructed(Vec<DerValue>),
}

/// One node of a DER tree: tag class, tag number, and content. The
/// constructed bit is implied by the content variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerValue {
    pub class: TagClass,
    pub number: u32,
    pub content: DerContent,
}

impl DerValue {
    pub fn boolean(v: bool) -> Self {
        Self::primitive(tag::BOOLEAN, vec![if v { 0xFF } else { 0x00 }])
    }

    /// INTEGER from a non-negative value, minimal two's complement.
    pub fn integer(v: u64) -> Self {
        let mut bytes = v.to_be_bytes().to_vec();
        while bytes.len() > 1 && bytes[0] == 0 && bytes[1] & 0x80 == 0 {
            bytes.remove(0);
        }
        if bytes[0] & 0x80 != 0 {
            bytes.insert(0, 0);
        }
        Self::primitive(tag::INTEGER, bytes)
    }

    /// BIT STRING holding whole bytes (unused-bits prefix fixed at zero).
    pub fn bit_string(bits: &[u8]) -> Self {
        let mut content = Vec::with_capacity(bits.len() + 1);
        content.push(0);
        content.extend_from_slice(bits);
        Self::primitive(tag::BIT_STRING, content)
    }

    pub fn octet_string(bytes: &[u8]) -> Self {
        Self::primitive(tag::OCTET_STRING, bytes.to_vec())
    }

    pub fn null() -> Self {
        Self::primitive(tag::NULL, Vec::new())
    }

    pub fn oid(oid: &Oid) -> Self {
        Self::primitive(tag::OBJECT_IDENTIFIER, encode_oid(oid))
    }

    pub fn utf8(s: &str) -> Self {
        Self::primitive(tag::UTF8_STRING, s.as_bytes().to_vec())
    }

    pub fn printable(s: &str) -> Self {
        Self::primitive(tag::PRINTABLE_STRING, s.as_bytes().to_vec())
    }

    pub fn utc_time(s: &str) -> Self {
        Self::primitive(tag::UTC_TIME, s.as_bytes().to_vec())
    }

    pub fn generalized_time(s: &str) -> Self {
        Self::primitive(tag::GENERALIZED_TIME, s.as_bytes().to_vec())
    }

    pub fn sequence(children: Vec<DerValue>) -> Self {
        Self {
            class: TagClass::Universal,
            number: tag::SEQUENCE,
            content: DerContent::Constructed(children),
        }
    }

    pub fn set(children: Vec<DerValue>) -> Self {
        Self {
            class: TagClass::Universal,
            number: tag::SET,
            content: DerContent::Constructed(children),
        }
    }

    /// Explicit context tag `[number]` wrapping child values.
    pub fn context(number: u32, children: Vec<DerValue>) -> Self {
        Self {
            class: TagClass::Context,
            number,
            content: DerContent::Constructed(children),
        }
    }

    /// Primitive context tag `[number]` with raw content.
    pub fn context_primitive(number: u32, bytes: Vec<u8>) -> Self {
        Self {
            class: TagClass::Context,
            number,
            content: DerContent::Primitive(bytes),
        }
    }

    fn primitive(number: u32, content: Vec<u8>) -> Self {
        Self {
            class: TagClass::Universal,
            number,
            content: DerContent::Primitive(content),
        }
    }

    pub fn is_constructed(&self) -> bool {
        matches!(self.content, DerContent::Constructed(_))
    }

    /// True when the value carries the given universal tag.
    pub fn is_universal(&self, number: u32) -> bool {
        self.class == TagClass::Universal && self.number == number
    }

    /// True when the value carries the given context tag.
    pub fn is_context(&self, number: u32) -> bool {
        self.class == TagClass::Context && self.number == number
    }

    pub fn primitive_content(&self) -> Option<&[u8]> {
        match &self.content {
            DerContent::Primitive(bytes) => Some(bytes),
            DerContent::Constructed(_) => None,
        }
    }

    pub fn children(&self) -> Option<&[DerValue]> {
        match &self.content {
            DerContent::Constructed(children) => Some(children),
            DerContent::Primitive(_) => None,
        }
    }

    pub fn as_boolean(&self) -> Option<bool> {
        if !self.is_universal(tag::BOOLEAN) {
            return None;
        }
        match self.primitive_content()? {
            [0x00] => Some(false),
            [0xFF] => Some(true),
            _ => None,
        }
    }

    /// INTEGER as u64. None for negative, non-minimal, or over-wide values.
    pub fn as_u64(&self) -> Option<u64> {
        if !self.is_universal(tag::INTEGER) {
            return None;
        }
        let bytes = self.primitive_content()?;
        if bytes.is_empty() || bytes[0] & 0x80 != 0 {
            return None;
        }
        if bytes.len() > 1 && bytes[0] == 0 && bytes[1] & 0x80 == 0 {
            return None;
        }
        let trimmed = if bytes[0] == 0 { &bytes[1..] } else { bytes };
        if trimmed.len() > 8 {
            return None;
        }
        Some(trimmed.iter().fold(0u64, |acc, &b| acc << 8 | u64::from(b)))
    }

    /// BIT STRING as (unused bit count, value bytes).
    pub fn as_bit_string(&self) -> Option<(u8, &[u8])> {
        if !self.is_universal(tag::BIT_STRING) {
            return None;
        }
        let bytes = self.primitive_content()?;
        bytes.split_first().map(|(&unused, rest)| (unused, rest))
    }

    pub fn as_oid(&self) -> Option<Oid> {
        if !self.is_universal(tag::OBJECT_IDENTIFIER) {
            return None;
        }
        decode_oid(self.primitive_content()?).ok()
    }

    pub fn as_utf8(&self) -> Option<&str> {
        if !self.is_universal(tag::UTF8_STRING) {
            return None;
        }
        core::str::from_utf8(self.primitive_content()?).ok()
    }
}

/// Encode a value to canonical DER bytes. Pure function of the input.
pub fn encode_value(value: &DerValue) -> Result<Vec<u8>, DerError> {
    let mut out = Vec::new();
    encode_into(value, &mut out)?;
    Ok(out)
}

fn encode_into(value: &DerValue, out: &mut Vec<u8>) -> Result<(), DerError> {
    if value.number >= 0x1F {
        return Err(DerError::UnsupportedTag(value.number));
    }
    if value.class == TagClass::Universal {
        let requires_constructed = universal_constructed(value.number)?;
        if requires_constructed != value.is_constructed() {
            return Err(DerError::ConstructedMismatch(value.number));
        }
        if let DerContent::Primitive(bytes) = &value.content {
            validate_primitive(value.number, bytes)?;
        }
    }

    let class_bits = match value.class {
        TagClass::Universal => 0x00,
        TagClass::Context => 0x80,
    };
    let constructed_bit = if value.is_constructed() { 0x20 } else { 0x00 };
    out.push(class_bits | constructed_bit | value.number as u8);

    match &value.content {
        DerContent::Primitive(bytes) => {
            push_length(bytes.len(), out);
            out.extend_from_slice(bytes);
        }
        DerContent::Constructed(children) => {
            let mut inner = Vec::new();
            for child in children {
                encode_into(child, &mut inner)?;
            }
            push_length(inner.len(), out);
            out.extend_from_slice(&inner);
        }
    }
    Ok(())
}

fn push_length(len: usize, out: &mut Vec<u8>) {
    if len < 0x80 {
        out.push(len as u8);
        return;
    }
    let mut bytes = Vec::new();
    let mut v = len;
    while v > 0 {
        bytes.insert(0, (v & 0xFF) as u8);
        v >>= 8;
    }
    out.push(0x80 | bytes.len() as u8);
    out.extend_from_slice(&bytes);
}

/// Whether the universal tag must be constructed; error for tags outside
/// the supported subset.
fn universal_constructed(number: u32) -> Result<bool, DerError> {
    match number {
        tag::SEQUENCE | tag::SET => Ok(true),
        tag::BOOLEAN
        | tag::INTEGER
        | tag::BIT_STRING
        | tag::OCTET_STRING
        | tag::NULL
        | tag::OBJECT_IDENTIFIER
        | tag::UTF8_STRING
        | tag::PRINTABLE_STRING
        | tag::UTC_TIME
        | tag::GENERALIZED_TIME => Ok(false),
        other => Err(DerError::UnsupportedTag(other)),
    }
}

fn validate_primitive(number: u32, bytes: &[u8]) -> Result<(), DerError> {
    match number {
        tag::BOOLEAN => match bytes {
            [0x00] | [0xFF] => Ok(()),
            _ => Err(DerError::InvalidBoolean),
        },
        tag::NULL => {
            if bytes.is_empty() {
                Ok(())
            } else {
                Err(DerError::InvalidNull)
            }
        }
        tag::BIT_STRING => {
            let (&unused, value) = bytes.split_first().ok_or(DerError::InvalidBitString)?;
            if unused > 7 || (value.is_empty() && unused != 0) {
                return Err(DerError::InvalidBitString);
            }
            // Unused trailing bits must be zero for a canonical encoding.
            if let Some(&last) = value.last() {
                if last & ((1u16 << unused) - 1) as u8 != 0 {
                    return Err(DerError::InvalidBitString);
                }
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

/// Decode one value from the front of `bytes`, returning it together with
/// the number of bytes consumed.
pub fn decode_value(bytes: &[u8]) -> Result<(DerValue, usize), DerError> {
    decode_at(bytes, 1)
}

/// Decode a value that must occupy the whole input.
pub fn decode_value_exact(bytes: &[u8]) -> Result<DerValue, DerError> {
    let (value, used) = decode_value(bytes)?;
    if used != bytes.len() {
        return Err(DerError::TrailingBytes);
    }
    Ok(value)
}

fn decode_at(bytes: &[u8], depth: usize) -> Result<(DerValue, usize), DerError> {
    if depth > MAX_DEPTH {
        return Err(DerError::DepthExceeded);
    }
    let &identifier = bytes.first().ok_or(DerError::Truncated)?;
    let class = match identifier >> 6 {
        0b00 => TagClass::Universal,
        0b10 => TagClass::Context,
        other => return Err(DerError::UnsupportedClass(other)),
    };
    let constructed = identifier & 0x20 != 0;
    let number = u32::from(identifier & 0x1F);
    if number == 0x1F {
        // High-tag-number form is outside the subset.
        return Err(DerError::UnsupportedTag(number));
    }
    if class == TagClass::Universal && universal_constructed(number)? != constructed {
        return Err(DerError::ConstructedMismatch(number));
    }

    let (length, length_octets) = parse_length(&bytes[1..])?;
    let header = 1 + length_octets;
    let end = header.checked_add(length).ok_or(DerError::Truncated)?;
    let content = bytes.get(header..end).ok_or(DerError::Truncated)?;

    let value = if constructed {
        let mut children = Vec::new();
        let mut offset = 0;
        while offset < content.len() {
            let (child, used) = decode_at(&content[offset..], depth + 1)?;
            children.push(child);
            offset += used;
        }
        DerValue {
            class,
            number,
            content: DerContent::Constructed(children),
        }
    } else {
        if class == TagClass::Universal {
            validate_primitive(number, content)?;
        }
        DerValue {
            class,
            number,
            content: DerContent::Primitive(content.to_vec()),
        }
    };
    Ok((value, header + length))
}

/// Parse a definite, minimally encoded length. Returns (length, octets used).
fn parse_length(bytes: &[u8]) -> Result<(usize, usize), DerError> {
    let &first = bytes.first().ok_or(DerError::Truncated)?;
    if first < 0x80 {
        return Ok((usize::from(first), 1));
    }
    if first == 0x80 {
        return Err(DerError::IndefiniteLength);
    }
    if first == 0xFF {
        return Err(DerError::InvalidLength);
    }
    let count = usize::from(first & 0x7F);
    let raw = bytes.get(1..1 + count).ok_or(DerError::Truncated)?;
    if raw[0] == 0 {
        return Err(DerError::NonMinimalLength);
    }
    if count > core::mem::size_of::<usize>() {
        return Err(DerError::InvalidLength);
    }
    let value = raw.iter().fold(0usize, |acc, &b| acc << 8 | usize::from(b));
    if value < 0x80 {
        return Err(DerError::NonMinimalLength);
    }
    Ok((value, 1 + count))
}

/// Object identifier: at least two arcs, first arc 0-2, second arc below 40
/// unless the first arc is 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Oid {
    arcs: Vec<u64>,
}

impl Oid {
    pub fn new(arcs: Vec<u64>) -> Result<Self, DerError> {
        if arcs.len() < 2 || arcs[0] > 2 || (arcs[0] < 2 && arcs[1] >= 40) {
            return Err(DerError::InvalidOid);
        }
        // First two arcs must pack into one base-128 subidentifier.
        if arcs[0]
            .checked_mul(40)
            .and_then(|v| v.checked_add(arcs[1]))
            .is_none()
        {
            return Err(DerError::InvalidOid);
        }
        Ok(Self { arcs })
    }

    /// Construct from a slice of arcs known to be valid; panics otherwise.
    pub fn from_arcs(arcs: &[u64]) -> Self {
        Self::new(arcs.to_vec()).expect("valid OID arcs")
    }

    pub fn arcs(&self) -> &[u64] {
        &self.arcs
    }
}

impl fmt::Display for Oid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, arc) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}", arc)?;
        }
        Ok(())
    }
}

impl FromStr for Oid {
    type Err = DerError;

    fn from_str(s: &str) -> Result<Self, DerError> {
        let arcs = s
            .split('.')
            .map(|part| part.parse::<u64>().map_err(|_| DerError::InvalidOid))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(arcs)
    }
}

/// Encode the content octets of an OBJECT IDENTIFIER (tag 6). The first two
/// arcs pack as `40·a1 + a2`; remaining arcs use base-128 with continuation
/// bits.
pub fn encode_oid(oid: &Oid) -> Vec<u8> {
    let arcs = oid.arcs();
    let mut out = Vec::new();
    push_base128(arcs[0] * 40 + arcs[1], &mut out);
    for &arc in &arcs[2..] {
        push_base128(arc, &mut out);
    }
    out
}

fn push_base128(value: u64, out: &mut Vec<u8>) {
    let mut chunks = vec![(value & 0x7F) as u8];
    let mut v = value >> 7;
    while v > 0 {
        chunks.push((v & 0x7F) as u8 | 0x80);
        v >>= 7;
    }
    chunks.reverse();
    out.extend_from_slice(&chunks);
}

/// Decode OBJECT IDENTIFIER content octets. Inverse of [`encode_oid`].
pub fn decode_oid(bytes: &[u8]) -> Result<Oid, DerError> {
    if bytes.is_empty() {
        return Err(DerError::InvalidOid);
    }
    let mut arcs = Vec::new();
    let mut value: u64 = 0;
    let mut in_subid = false;
    for &b in bytes {
        if !in_subid && b == 0x80 {
            // Padded subidentifier is non-minimal.
            return Err(DerError::InvalidOid);
        }
        if value > u64::MAX >> 7 {
            return Err(DerError::InvalidOid);
        }
        value = value << 7 | u64::from(b & 0x7F);
        in_subid = b & 0x80 != 0;
        if !in_subid {
            if arcs.is_empty() {
                let (first, second) = match value {
                    v if v < 40 => (0, v),
                    v if v < 80 => (1, v - 40),
                    v => (2, v - 80),
                };
                arcs.push(first);
                arcs.push(second);
            } else {
                arcs.push(value);
            }
            value = 0;
        }
    }
    if in_subid {
        // Dangling continuation bit.
        return Err(DerError::InvalidOid);
    }
    Oid::new(arcs)
}
