//! Single-digit primitives: the plum-blossom product `♣`, its carry `J`,
//! the carry offset `δ`, and the wedge product `⋈`.
//!
//! For integers `x` and `y`, `x ♣ y` is the representative of `x·y mod 10`
//! in `-6..=3`: the ones digit of the product when it is at most 3, otherwise
//! the ones digit minus ten. The carry is whatever is left over, so that
//! `x·y = 10·J(x ♣ y) + x ♣ y` always holds.
//!
//! The wedge product of a digit pair `(a, b)` with a multiplier `c` is
//! `a ♣ c + J(b ♣ c)`: the residue of the higher digit plus the carry arriving
//! from the lower one. It always lands in `-6..=11`.

use std::fmt;

use crate::error::{Error, Result};

/// A decimal digit, `0..=9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Digit(u8);

impl Digit {
    pub const ZERO: Digit = Digit(0);
    pub const ONE: Digit = Digit(1);
    pub const NINE: Digit = Digit(9);

    pub fn new(value: u8) -> Result<Digit> {
        if value <= 9 {
            Ok(Digit(value))
        } else {
            Err(Error::DigitOutOfRange(value as i64, "0..=9"))
        }
    }

    /// Converts any integer, rejecting everything outside `0..=9`.
    pub fn from_i64(value: i64) -> Result<Digit> {
        if (0..=9).contains(&value) {
            Ok(Digit(value as u8))
        } else {
            Err(Error::DigitOutOfRange(value, "0..=9"))
        }
    }

    #[inline]
    pub const fn get(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn as_i64(self) -> i64 {
        self.0 as i64
    }

    pub const fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// All ten digits in increasing order.
    pub fn all() -> impl DoubleEndedIterator<Item = Digit> + Clone {
        (0..=9).map(Digit)
    }

    /// The non-zero digits `1..=9`.
    pub fn nonzero() -> impl DoubleEndedIterator<Item = Digit> + Clone {
        (1..=9).map(Digit)
    }

    /// Builds a digit from a value already known to be in range.
    pub(crate) const fn from_u8_unchecked(value: u8) -> Digit {
        debug_assert!(value <= 9);
        Digit(value)
    }
}

impl TryFrom<u8> for Digit {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Digit::new(value)
    }
}

impl From<Digit> for u8 {
    fn from(d: Digit) -> u8 {
        d.0
    }
}

impl From<Digit> for i64 {
    fn from(d: Digit) -> i64 {
        d.0 as i64
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A plum-blossom residue, always in `-6..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedResidue(i8);

impl SignedResidue {
    pub const MIN: i64 = -6;
    pub const MAX: i64 = 3;

    pub fn new(value: i64) -> Result<SignedResidue> {
        if (Self::MIN..=Self::MAX).contains(&value) {
            Ok(SignedResidue(value as i8))
        } else {
            Err(Error::DigitOutOfRange(value, "-6..=3"))
        }
    }

    #[inline]
    pub const fn get(self) -> i64 {
        self.0 as i64
    }
}

impl From<SignedResidue> for i64 {
    fn from(r: SignedResidue) -> i64 {
        r.get()
    }
}

impl fmt::Display for SignedResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A product split as `10·carry + residue`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CarrySplit {
    pub carry: i64,
    pub residue: SignedResidue,
}

impl CarrySplit {
    pub fn of(x: i64, y: i64) -> CarrySplit {
        let residue = clubsuit(x, y);
        CarrySplit {
            carry: (x * y - residue.get()) / 10,
            residue,
        }
    }

    /// `10·carry + residue`.
    pub fn value(&self) -> i64 {
        10 * self.carry + self.residue.get()
    }
}

/// Residue of `x·y` modulo 10, shifted into `-6..=3`.
#[inline]
pub(crate) fn residue_of(product: i64) -> i64 {
    (product + 6).rem_euclid(10) - 6
}

/// The plum-blossom product `x ♣ y`.
///
/// Defined for every pair of integers. On non-negative inputs this is the
/// ones digit of `x·y` if it is at most 3 and the ones digit minus ten
/// otherwise.
#[inline]
pub fn clubsuit(x: i64, y: i64) -> SignedResidue {
    SignedResidue(residue_of(x * y) as i8)
}

/// The carry `J(x ♣ y)`, so that `x·y = 10·J + x ♣ y`.
#[inline]
pub fn carry(x: i64, y: i64) -> i64 {
    let p = x * y;
    (p - residue_of(p)) / 10
}

fn require_nonzero(d: Digit) -> Result<()> {
    if d.get() == 0 {
        Err(Error::DigitOutOfRange(0, "1..=9"))
    } else {
        Ok(())
    }
}

/// The carry computed from the four-case theorem instead of from the product.
///
/// With `a ≤ b` (the arguments are ordered first), the clauses are checked
/// in order:
/// 1. `(a = 1 or b = 9) and b − a ≥ 3` gives `a`;
/// 2. `b − a ≥ 5` gives `a`;
/// 3. `3 ≤ a ≤ b ≤ 7 and b − a ≤ 1` gives `a − 2`;
/// 4. otherwise `a − 1`.
///
/// Only defined for digits `1..=9`.
pub fn carry_closed_form(a: Digit, b: Digit) -> Result<i64> {
    require_nonzero(a)?;
    require_nonzero(b)?;
    let (lo, hi) = if a <= b { (a.as_i64(), b.as_i64()) } else { (b.as_i64(), a.as_i64()) };
    let gap = hi - lo;
    let value = if ((lo == 1 || hi == 9) && gap >= 3) || gap >= 5 {
        lo
    } else if 3 <= lo && hi <= 7 && gap <= 1 {
        lo - 2
    } else {
        lo - 1
    };
    Ok(value)
}

/// `δ(a, b) = J(a ♣ b) − min(a, b)`, which is always 0, −1 or −2.
pub fn delta(a: Digit, b: Digit) -> Result<i64> {
    require_nonzero(a)?;
    require_nonzero(b)?;
    Ok(delta_raw(a.as_i64(), b.as_i64()))
}

#[inline]
pub(crate) fn delta_raw(a: i64, b: i64) -> i64 {
    carry(a, b) - a.min(b)
}

/// The wedge product `(a, b) ⋈ c = a ♣ c + J(b ♣ c)`.
#[inline]
pub fn wedge(a: Digit, b: Digit, c: Digit) -> i64 {
    wedge_raw(a.as_i64(), b.as_i64(), c.as_i64())
}

#[inline]
pub(crate) fn wedge_raw(a: i64, b: i64, c: i64) -> i64 {
    residue_of(a * c) + carry(b, c)
}

/// Lowest and highest values a wedge product of digits can take.
pub const WEDGE_MIN: i64 = -6;
pub const WEDGE_MAX: i64 = 11;

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: u8) -> Digit {
        Digit::new(v).unwrap()
    }

    #[test]
    fn clubsuit_examples() {
        assert_eq!(clubsuit(3, 7).get(), 1);
        assert_eq!(clubsuit(7, 7).get(), -1);
        assert_eq!(clubsuit(5, 5).get(), -5);
        assert_eq!(clubsuit(5, 8).get(), 0);
        assert_eq!(clubsuit(0, 5).get(), 0);
        assert_eq!(clubsuit(2, 7).get(), -6);
    }

    #[test]
    fn clubsuit_extends_to_negatives() {
        // -1·7 = -7 ≡ 3 (mod 10)
        assert_eq!(clubsuit(-1, 7).get(), 3);
        assert_eq!(clubsuit(-4, 1).get(), -4);
        assert_eq!(carry(-1, 7), -1);
    }

    #[test]
    fn carry_examples() {
        assert_eq!(carry(5, 7), 4);
        assert_eq!(carry(6, 8), 5);
        assert_eq!(carry(0, 9), 0);
        assert_eq!(carry(1, 6), 1);
    }

    #[test]
    fn split_matches_product() {
        for x in 0..10 {
            for y in 0..10 {
                let s = CarrySplit::of(x, y);
                assert_eq!(s.value(), x * y);
                assert!((-6..=3).contains(&s.residue.get()));
            }
        }
    }

    #[test]
    fn ones_digit_rule_agrees_up_to_99() {
        for x in 0..100i64 {
            for y in 0..100i64 {
                let ones = (x * y) % 10;
                let expected = if ones <= 3 { ones } else { ones - 10 };
                assert_eq!(clubsuit(x, y).get(), expected, "{x} ♣ {y}");
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(carry_closed_form(d(3), d(3)), Ok(1));
        assert_eq!(carry_closed_form(d(1), d(9)), Ok(1));
        assert_eq!(carry_closed_form(d(8), d(9)), Ok(7));
        assert_eq!(carry_closed_form(d(9), d(8)), Ok(7));
        assert!(carry_closed_form(d(0), d(4)).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(d(5), d(7)), Ok(-1));
        assert_eq!(delta(d(3), d(3)), Ok(-2));
        assert_eq!(delta(d(1), d(6)), Ok(0));
        assert!(delta(d(4), d(0)).is_err());
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(wedge(d(3), d(5), d(7)), 5);
        assert_eq!(wedge(d(4), d(6), d(8)), 7);
        assert_eq!(wedge(d(5), d(9), d(7)), 1);
        assert_eq!(wedge(d(4), d(6), d(9)), 2);
        assert_eq!(wedge(d(7), d(4), d(2)), -5);
        for c in Digit::all() {
            assert_eq!(wedge(Digit::ZERO, Digit::ZERO, c), 0);
        }
    }

    #[test]
    fn digit_bounds() {
        assert!(Digit::new(10).is_err());
        assert!(Digit::from_i64(-1).is_err());
        assert!(SignedResidue::new(4).is_err());
        assert!(SignedResidue::new(-7).is_err());
        assert_eq!(Digit::all().count(), 10);
        assert_eq!(Digit::nonzero().count(), 9);
    }
}
