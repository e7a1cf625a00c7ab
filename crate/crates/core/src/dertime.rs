//! Unix-time conversion to and from DER time values.
//!
//! Validity timestamps are `i64` seconds since the Unix epoch, UTC, second
//! precision. Years 1950-2049 encode as UTCTime (`YYMMDDHHMMSSZ`); everything
//! else in 0-9999 as GeneralizedTime (`YYYYMMDDHHMMSSZ`), the usual X.509
//! convention.

use alloc::format;
use alloc::vec::Vec;

use crate::der::{tag, DerError, DerValue};

/// Broken-down UTC time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Civil {
    pub year: i64,
    pub month: u8,
    pub day: u8,
    pub hour: u8,
    pub minute: u8,
    pub second: u8,
}

// Days-from-civil and civil-from-days follow the classic proleptic-Gregorian
// era arithmetic (shift the year so the cycle starts on March 1).
fn days_from_civil(year: i64, month: u8, day: u8) -> i64 {
    let y = year - i64::from(month <= 2);
    let era = if y >= 0 { y } else { y - 399 } / 400;
    let yoe = y - era * 400;
    let m = i64::from(month);
    let doy = (153 * (m + if m > 2 { -3 } else { 9 }) + 2) / 5 + i64::from(day) - 1;
    let doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    era * 146_097 + doe - 719_468
}

fn civil_from_days(days: i64) -> (i64, u8, u8) {
    let z = days + 719_468;
    let era = if z >= 0 { z } else { z - 146_096 } / 146_097;
    let doe = z - era * 146_097;
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let y = yoe + era * 400;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let d = (doy - (153 * mp + 2) / 5 + 1) as u8;
    let m = if mp < 10 { mp + 3 } else { mp - 9 } as u8;
    (y + i64::from(m <= 2), m, d)
}

/// Split a Unix timestamp into UTC components.
pub fn civil_from_unix(t: i64) -> Civil {
    let days = t.div_euclid(86_400);
    let secs = t.rem_euclid(86_400);
    let (year, month, day) = civil_from_days(days);
    Civil {
        year,
        month,
        day,
        hour: (secs / 3600) as u8,
        minute: (secs % 3600 / 60) as u8,
        second: (secs % 60) as u8,
    }
}

/// Rebuild a Unix timestamp from UTC components.
pub fn unix_from_civil(c: &Civil) -> i64 {
    days_from_civil(c.year, c.month, c.day) * 86_400
        + i64::from(c.hour) * 3600
        + i64::from(c.minute) * 60
        + i64::from(c.second)
}

/// Encode a timestamp as UTCTime or GeneralizedTime depending on the year.
pub fn encode_time(t: i64) -> Result<DerValue, DerError> {
    let c = civil_from_unix(t);
    if (1950..=2049).contains(&c.year) {
        Ok(DerValue::utc_time(&format!(
            "{:02}{:02}{:02}{:02}{:02}{:02}Z",
            c.year % 100,
            c.month,
            c.day,
            c.hour,
            c.minute,
            c.second
        )))
    } else if (0..=9999).contains(&c.year) {
        Ok(DerValue::generalized_time(&format!(
            "{:04}{:02}{:02}{:02}{:02}{:02}Z",
            c.year, c.month, c.day, c.hour, c.minute, c.second
        )))
    } else {
        Err(DerError::InvalidTime)
    }
}

/// Decode a UTCTime or GeneralizedTime value back to a Unix timestamp.
pub fn decode_time(value: &DerValue) -> Result<i64, DerError> {
    let (content, generalized) = if value.is_universal(tag::UTC_TIME) {
        (value.primitive_content(), false)
    } else if value.is_universal(tag::GENERALIZED_TIME) {
        (value.primitive_content(), true)
    } else {
        return Err(DerError::InvalidTime);
    };
    let bytes = content.ok_or(DerError::InvalidTime)?;
    let expected_len = if generalized { 15 } else { 13 };
    if bytes.len() != expected_len || bytes[expected_len - 1] != b'Z' {
        return Err(DerError::InvalidTime);
    }
    let digits = &bytes[..expected_len - 1];
    if !digits.iter().all(u8::is_ascii_digit) {
        return Err(DerError::InvalidTime);
    }
    let num = |range: core::ops::Range<usize>| -> i64 {
        digits[range]
            .iter()
            .fold(0i64, |acc, &d| acc * 10 + i64::from(d - b'0'))
    };
    let (year, rest) = if generalized {
        (num(0..4), 4)
    } else {
        let yy = num(0..2);
        (if yy >= 50 { 1900 + yy } else { 2000 + yy }, 2)
    };
    let c = Civil {
        year,
        month: num(rest..rest + 2) as u8,
        day: num(rest + 2..rest + 4) as u8,
        hour: num(rest + 4..rest + 6) as u8,
        minute: num(rest + 6..rest + 8) as u8,
        second: num(rest + 8..rest + 10) as u8,
    };
    if c.month == 0 || c.month > 12 || c.day == 0 || c.hour > 23 || c.minute > 59 || c.second > 59 {
        return Err(DerError::InvalidTime);
    }
    let t = unix_from_civil(&c);
    // Round-tripping catches out-of-range days (for example February 30th).
    if civil_from_unix(t) != c {
        return Err(DerError::InvalidTime);
    }
    Ok(t)
}

/// Encoded time bytes for a timestamp, used for canonical field comparison.
pub fn time_bytes(t: i64) -> Result<Vec<u8>, DerError> {
    crate::der::encode_value(&encode_time(t)?)
}
