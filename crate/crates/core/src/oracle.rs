//! Reference arithmetic on natural numbers.
//!
//! Plain schoolbook routines over radix-10 limbs stored least significant
//! first. Nothing here touches the plum-blossom machinery, so agreement with
//! this module is meaningful evidence. It is slow on purpose: every step is
//! easy to audit by hand.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::digit::Digit;
use crate::digit_string::DigitString;
use crate::error::{Error, Result};

/// A natural number as decimal limbs, least significant first, no high zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Nat {
    limbs: Vec<u8>,
}

impl Nat {
    pub fn zero() -> Nat {
        Nat { limbs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn from_u64(mut v: u64) -> Nat {
        let mut limbs = Vec::new();
        while v > 0 {
            limbs.push((v % 10) as u8);
            v /= 10;
        }
        Nat { limbs }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.limbs
            .iter()
            .rev()
            .try_fold(0u64, |acc, &d| acc.checked_mul(10)?.checked_add(d as u64))
    }

    /// Builds from little-endian limbs, each `0..=9`.
    pub fn from_limbs(mut limbs: Vec<u8>) -> Nat {
        assert!(limbs.iter().all(|&d| d <= 9), "limb out of range");
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        Nat { limbs }
    }

    pub fn limbs(&self) -> &[u8] {
        &self.limbs
    }

    pub fn digit_count(&self) -> usize {
        self.limbs.len().max(1)
    }

    /// Multiplies by `10^places`.
    pub fn shl_digits(&self, places: usize) -> Nat {
        if self.is_zero() {
            return Nat::zero();
        }
        let mut limbs = vec![0; places];
        limbs.extend_from_slice(&self.limbs);
        Nat { limbs }
    }

    pub fn from_digit_string(ds: &DigitString) -> Nat {
        Nat::from_limbs(ds.digits().iter().rev().map(|d| d.get()).collect())
    }

    pub fn to_digit_string(&self) -> DigitString {
        DigitString::from_digits(
            self.limbs
                .iter()
                .rev()
                .map(|&d| Digit::new(d).expect("limbs are decimal digits")),
        )
    }
}

impl From<&DigitString> for Nat {
    fn from(ds: &DigitString) -> Nat {
        Nat::from_digit_string(ds)
    }
}

impl From<u64> for Nat {
    fn from(v: u64) -> Nat {
        Nat::from_u64(v)
    }
}

impl FromStr for Nat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Nat> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidNumeral(s.to_string()));
        }
        Ok(Nat::from_limbs(s.bytes().rev().map(|b| b - b'0').collect()))
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.limbs.is_empty() {
            return f.write_str("0");
        }
        for d in self.limbs.iter().rev() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl PartialOrd for Nat {
    fn partial_cmp(&self, other: &Nat) -> Option<Ordering> {
        Some(Ord::cmp(self, other))
    }
}

impl Ord for Nat {
    fn cmp(&self, other: &Nat) -> Ordering {
        cmp(self, other)
    }
}

pub fn cmp(x: &Nat, y: &Nat) -> Ordering {
    x.limbs
        .len()
        .cmp(&y.limbs.len())
        .then_with(|| x.limbs.iter().rev().cmp(y.limbs.iter().rev()))
}

pub fn add(x: &Nat, y: &Nat) -> Nat {
    let n = x.limbs.len().max(y.limbs.len());
    let mut out = Vec::with_capacity(n + 1);
    let mut carry = 0u8;
    for i in 0..n {
        let s = x.limbs.get(i).copied().unwrap_or(0) + y.limbs.get(i).copied().unwrap_or(0) + carry;
        out.push(s % 10);
        carry = s / 10;
    }
    if carry > 0 {
        out.push(carry);
    }
    Nat::from_limbs(out)
}

pub fn sub(x: &Nat, y: &Nat) -> Result<Nat> {
    if cmp(x, y) == Ordering::Less {
        return Err(Error::Underflow);
    }
    let mut out = Vec::with_capacity(x.limbs.len());
    let mut borrow = 0i8;
    for i in 0..x.limbs.len() {
        let mut d = x.limbs[i] as i8 - borrow - y.limbs.get(i).copied().unwrap_or(0) as i8;
        if d < 0 {
            d += 10;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push(d as u8);
    }
    Ok(Nat::from_limbs(out))
}

/// Work done by one schoolbook multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SchoolbookStats {
    /// Single-digit products formed.
    pub digit_mults: u64,
    /// Inner steps that passed on a non-zero carry.
    pub carries: u64,
    /// Largest value held in one position before it was split into digit and carry.
    pub max_intermediate: u64,
    /// Sum of those values, for averaging.
    pub intermediate_sum: u64,
}

pub fn mul(x: &Nat, y: &Nat) -> Nat {
    mul_counted(x, y).0
}

pub fn mul_counted(x: &Nat, y: &Nat) -> (Nat, SchoolbookStats) {
    let mut stats = SchoolbookStats::default();
    if x.is_zero() || y.is_zero() {
        return (Nat::zero(), stats);
    }
    let mut acc = vec![0u8; x.limbs.len() + y.limbs.len()];
    for (i, &xi) in x.limbs.iter().enumerate() {
        let mut carry = 0u32;
        for (j, &yj) in y.limbs.iter().enumerate() {
            stats.digit_mults += 1;
            let t = acc[i + j] as u32 + xi as u32 * yj as u32 + carry;
            stats.max_intermediate = stats.max_intermediate.max(t as u64);
            stats.intermediate_sum += t as u64;
            acc[i + j] = (t % 10) as u8;
            carry = t / 10;
            if carry != 0 {
                stats.carries += 1;
            }
        }
        let mut k = i + y.limbs.len();
        while carry > 0 {
            let t = acc[k] as u32 + carry;
            acc[k] = (t % 10) as u8;
            carry = t / 10;
            if carry != 0 {
                stats.carries += 1;
            }
            k += 1;
        }
    }
    (Nat::from_limbs(acc), stats)
}

/// Digit-by-digit long division; each quotient digit found by repeated
/// compare-and-subtract.
pub fn divmod(x: &Nat, y: &Nat) -> Result<(Nat, Nat)> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut quotient = vec![0u8; x.limbs.len()];
    let mut rem = Nat::zero();
    for i in (0..x.limbs.len()).rev() {
        rem = add(&rem.shl_digits(1), &Nat::from_u64(x.limbs[i] as u64));
        let mut q = 0u8;
        while cmp(&rem, y) != Ordering::Less {
            rem = sub(&rem, y)?;
            q += 1;
        }
        quotient[i] = q;
    }
    Ok((Nat::from_limbs(quotient), rem))
}
