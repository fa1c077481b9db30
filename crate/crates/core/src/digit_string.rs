//! Decimal digit strings, unresolved column sequences, and segmentation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::digit::Digit;
use crate::error::{Error, Result};

/// Largest supported segment length. Products of two segments and sums of
/// many of them must fit comfortably in an `i64` column.
pub const MAX_SEGMENT_LEN: usize = 6;

/// A non-negative integer as canonical decimal digits, most significant first.
///
/// Never empty, and never has a leading zero unless it is exactly `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    digits: Vec<Digit>,
}

impl DigitString {
    pub fn zero() -> DigitString {
        DigitString { digits: vec![Digit::ZERO] }
    }

    /// Canonicalizes any digit sequence, dropping leading zeros.
    pub fn from_digits(digits: impl IntoIterator<Item = Digit>) -> DigitString {
        let mut digits: Vec<Digit> = digits.into_iter().skip_while(|d| *d == Digit::ZERO).collect();
        if digits.is_empty() {
            digits.push(Digit::ZERO);
        }
        DigitString { digits }
    }

    /// Like [`from_digits`](Self::from_digits) for raw values; fails on values above 9.
    pub fn from_values(values: &[u8]) -> Result<DigitString> {
        let digits = values.iter().map(|&v| Digit::new(v)).collect::<Result<Vec<_>>>()?;
        Ok(DigitString::from_digits(digits))
    }

    pub fn from_u64(mut value: u64) -> DigitString {
        let mut rev = Vec::new();
        loop {
            rev.push(Digit::from_u8_unchecked((value % 10) as u8));
            value /= 10;
            if value == 0 {
                break;
            }
        }
        rev.reverse();
        DigitString { digits: rev }
    }

    /// The value if it fits in a `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        self.digits.iter().try_fold(0u64, |acc, d| {
            acc.checked_mul(10)?.checked_add(d.get() as u64)
        })
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn digit_values(&self) -> impl ExactSizeIterator<Item = i64> + '_ {
        self.digits.iter().map(|d| d.as_i64())
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Always false; a digit string has at least one digit.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.digits == [Digit::ZERO]
    }

    /// Appends `places` zeros, i.e. multiplies by `10^places`.
    pub fn shifted(&self, places: usize) -> DigitString {
        if self.is_zero() {
            return self.clone();
        }
        let mut digits = self.digits.clone();
        digits.extend(std::iter::repeat_n(Digit::ZERO, places));
        DigitString { digits }
    }

    pub fn to_bigint(&self) -> BigInt {
        self.digits
            .iter()
            .fold(BigInt::from(0), |acc, d| acc * 10 + d.get())
    }

    /// The digits as a column sequence with every column in `0..=9`.
    pub fn to_columns(&self) -> SignedDigitString {
        SignedDigitString::new(self.digit_values().collect())
    }
}

impl FromStr for DigitString {
    type Err = Error;

    /// Accepts decimal digits with optional space or underscore grouping.
    fn from_str(text: &str) -> Result<DigitString> {
        let mut digits = Vec::with_capacity(text.len());
        for ch in text.trim().chars() {
            match ch {
                '0'..='9' => digits.push(Digit::from_u8_unchecked(ch as u8 - b'0')),
                ' ' | '_' => {}
                _ => return Err(Error::InvalidNumeral(text.to_string())),
            }
        }
        if digits.is_empty() {
            return Err(Error::InvalidNumeral(text.to_string()));
        }
        Ok(DigitString::from_digits(digits))
    }
}

/// Parses a numeral; same as `text.parse::<DigitString>()`.
pub fn parse(text: &str) -> Result<DigitString> {
    text.parse()
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Column values awaiting carry resolution, most significant first.
///
/// Column `i` of `n` has weight `R^(n-1-i)` where `R` is the radix the
/// columns were produced in (10 unless segments are in use). Columns may be
/// negative or exceed the radix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SignedDigitString {
    columns: Vec<i64>,
}

impl SignedDigitString {
    pub fn new(columns: Vec<i64>) -> SignedDigitString {
        SignedDigitString { columns }
    }

    pub fn columns(&self) -> &[i64] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn into_columns(self) -> Vec<i64> {
        self.columns
    }
}

impl From<Vec<i64>> for SignedDigitString {
    fn from(columns: Vec<i64>) -> Self {
        SignedDigitString::new(columns)
    }
}

impl fmt::Display for SignedDigitString {
    /// `(c1,c2,...)` with no spaces, negative columns with a minus sign.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Value of base-10 columns. The empty sequence is 0.
pub fn value_of(s: &SignedDigitString) -> BigInt {
    value_in_radix(s, 1)
}

/// Value of columns in radix `10^segment_len`.
pub fn value_in_radix(s: &SignedDigitString, segment_len: usize) -> BigInt {
    let radix = BigInt::from(10u32).pow(segment_len as u32);
    s.columns
        .iter()
        .fold(BigInt::from(0), |acc, &c| acc * &radix + c)
}

/// Digits of a number grouped into fixed-length segments, most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SegmentString {
    segment_len: usize,
    segments: Vec<i64>,
}

impl SegmentString {
    pub fn segment_len(&self) -> usize {
        self.segment_len
    }

    pub fn segments(&self) -> &[i64] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Reassembles the segments in radix `10^L`.
    pub fn reassemble(&self) -> DigitString {
        let mut digits = Vec::with_capacity(self.segments.len() * self.segment_len);
        for &seg in &self.segments {
            push_segment_digits(&mut digits, seg, self.segment_len);
        }
        DigitString::from_digits(digits)
    }
}

fn check_segment_len(segment_len: usize) -> Result<()> {
    if segment_len == 0 || segment_len > MAX_SEGMENT_LEN {
        Err(Error::SegmentLength {
            got: segment_len,
            max: MAX_SEGMENT_LEN,
        })
    } else {
        Ok(())
    }
}

fn push_segment_digits(out: &mut Vec<Digit>, mut seg: i64, segment_len: usize) {
    let start = out.len();
    for _ in 0..segment_len {
        out.push(Digit::from_u8_unchecked((seg % 10) as u8));
        seg /= 10;
    }
    out[start..].reverse();
}

/// Splits into segments of `segment_len` digits, left-padding with zeros so
/// the digit count is a multiple of `segment_len`.
pub fn segment(ds: &DigitString, segment_len: usize) -> Result<SegmentString> {
    check_segment_len(segment_len)?;
    let pad = (segment_len - ds.len() % segment_len) % segment_len;
    let padded: Vec<i64> = std::iter::repeat_n(0, pad)
        .chain(ds.digit_values())
        .collect();
    let segments = padded
        .chunks(segment_len)
        .map(|chunk| chunk.iter().fold(0i64, |acc, &d| acc * 10 + d))
        .collect();
    Ok(SegmentString { segment_len, segments })
}

/// Resolves carries in radix `10^segment_len` and returns canonical digits.
///
/// Columns are processed least significant first. Each keeps its floored
/// remainder and passes the floored quotient on as carry, so negative
/// columns borrow from the next column up.
pub fn normalize(s: &SignedDigitString, segment_len: usize) -> Result<DigitString> {
    normalize_counted(s, segment_len).map(|(ds, _)| ds)
}

/// [`normalize`] that also reports how many columns passed on a non-zero carry.
pub fn normalize_counted(s: &SignedDigitString, segment_len: usize) -> Result<(DigitString, u64)> {
    check_segment_len(segment_len)?;
    let radix = 10i64.pow(segment_len as u32);
    let mut carries = 0u64;
    let mut carry = 0i64;
    let mut limbs = Vec::with_capacity(s.len() + 2);
    for &col in s.columns.iter().rev() {
        let total = col + carry;
        limbs.push(total.rem_euclid(radix));
        carry = total.div_euclid(radix);
        if carry != 0 {
            carries += 1;
        }
    }
    if carry < 0 {
        return Err(Error::NegativeValue);
    }
    while carry > 0 {
        limbs.push(carry % radix);
        carry /= radix;
        if carry != 0 {
            carries += 1;
        }
    }
    let mut digits = Vec::with_capacity(limbs.len() * segment_len);
    for &limb in limbs.iter().rev() {
        push_segment_digits(&mut digits, limb, segment_len);
    }
    Ok((DigitString::from_digits(digits), carries))
}
