//! Long division by partial plum-blossom (or wedge) products.
//!
//! Dividing `a = (a_1, …, a_s)` by `b = (b_1, …, b_t)` yields the quotient
//! digits `c_1, …, c_{s−t+1}` (where `c_1` may be zero). Step `n` takes the
//! previous partial remainder, brings down `a_n`, and subtracts the partial
//! product `PP_n` in two parts:
//!
//! * `PP_n⁰` holds every term of `b × c` landing in place `n` that does not
//!   involve the newest digit `c_n`:
//!   `Σ_{i≥2} b_i ♣ c_{n+1−i} + Σ_{i≥3} J(b_i ♣ c_{n+2−i})`, or with wedge
//!   products `Σ_{i≥2} (b_i, b_{i+1}) ⋈ c_{n+1−i}` where `b_{t+1} = 0`.
//! * `PP_n¹ = b_1·c_n + J(b_2 ♣ c_n)` once `c_n` is known.
//!
//! So `r_n = 10·r_{n−1} + a_n − PP_n⁰ − PP_n¹`, and after the last dividend
//! digit `r_s` is the remainder. Partial remainders may go negative along the
//! way; only the last one is guaranteed to lie in `0..b`.
//!
//! Quotient digits are chosen exactly, as in ordinary long division, using
//! the reference arithmetic in [`crate::oracle`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::cross_mul::{Term, TermKind};
use crate::digit::{carry, clubsuit, wedge_raw, Digit};
use crate::digit_string::DigitString;
use crate::error::{Error, Result};
use crate::oracle::{self, Nat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivMethod {
    Plum,
    Wedge,
}

impl DivMethod {
    pub fn name(self) -> &'static str {
        match self {
            DivMethod::Plum => "plum",
            DivMethod::Wedge => "wedge",
        }
    }
}

impl fmt::Display for DivMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DivMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plum" => Ok(DivMethod::Plum),
            "wedge" => Ok(DivMethod::Wedge),
            other => Err(Error::UnknownMethod(other.to_string())),
        }
    }
}

/// Quotient digit `c_j` (1-based), zero outside the known digits.
fn quotient_digit(c: &[Digit], j: isize) -> Option<i64> {
    if j >= 1 {
        c.get(j as usize - 1).map(|d| d.as_i64())
    } else {
        None
    }
}

/// `PP_n⁰` from residues and carries, with its terms.
///
/// `c` holds the quotient digits known so far; anything past its end counts
/// as zero and contributes no term.
pub fn pp0_plum(b: &DigitString, c: &[Digit], n: usize) -> (i64, Vec<Term>) {
    let bs: Vec<i64> = b.digit_values().collect();
    let t = bs.len();
    let n = n as isize;
    let mut terms = Vec::new();
    for i in 2..=t {
        let j = n + 1 - i as isize;
        if let Some(cj) = quotient_digit(c, j) {
            terms.push(Term { kind: TermKind::Residue, i, j: j as usize, value: clubsuit(bs[i - 1], cj).get() });
        }
    }
    for i in 3..=t {
        let j = n + 2 - i as isize;
        if let Some(cj) = quotient_digit(c, j) {
            terms.push(Term { kind: TermKind::Carry, i, j: j as usize, value: carry(bs[i - 1], cj) });
        }
    }
    (terms.iter().map(|t| t.value).sum(), terms)
}

/// `PP_n⁰` from wedge products `(b_i, b_{i+1}) ⋈ c_{n+1−i}`; same value as [`pp0_plum`].
pub fn pp0_wedge(b: &DigitString, c: &[Digit], n: usize) -> (i64, Vec<Term>) {
    let bs: Vec<i64> = b.digit_values().collect();
    let t = bs.len();
    let n = n as isize;
    let mut terms = Vec::new();
    for i in 2..=t {
        let j = n + 1 - i as isize;
        if let Some(cj) = quotient_digit(c, j) {
            let next = bs.get(i).copied().unwrap_or(0);
            terms.push(Term { kind: TermKind::Wedge, i, j: j as usize, value: wedge_raw(bs[i - 1], next, cj) });
        }
    }
    (terms.iter().map(|t| t.value).sum(), terms)
}

/// `PP_n¹ = b_1·c_n + J(b_2 ♣ c_n)`, taking `b_2 = 0` for one-digit divisors.
///
/// The terms are tagged with `j = 0`; the caller knows which step they belong to.
pub fn pp1(b: &DigitString, cn: Digit) -> (i64, Vec<Term>) {
    let mut bs = b.digit_values();
    let b1 = bs.next().unwrap_or(0);
    let b2 = bs.next().unwrap_or(0);
    let c = cn.as_i64();
    let terms = vec![
        Term { kind: TermKind::Product, i: 1, j: 0, value: b1 * c },
        Term { kind: TermKind::Carry, i: 2, j: 0, value: carry(b2, c) },
    ];
    (terms.iter().map(|t| t.value).sum(), terms)
}

/// One step of the division: bring down a digit, subtract `PP_n⁰`, pick
/// `c_n`, subtract `PP_n¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionStep {
    /// 1-based step index `n`.
    pub index: usize,
    pub brought_down: Option<Digit>,
    /// `10·r_{n−1} + a_n`.
    pub combined: BigInt,
    pub pp0: i64,
    pub pp0_terms: Vec<Term>,
    /// `combined − pp0`.
    pub after_pp0: BigInt,
    pub quotient_digit: Option<Digit>,
    pub pp1: Option<i64>,
    pub pp1_terms: Vec<Term>,
    /// `r_n`.
    pub remainder: BigInt,
}

impl DivisionStep {
    /// `PP_n = PP_n⁰ + PP_n¹`.
    pub fn pp(&self) -> i64 {
        self.pp0 + self.pp1.unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionTrace {
    pub method: DivMethod,
    pub dividend: DigitString,
    pub divisor: DigitString,
    /// All `s − t + 1` quotient digits, a leading zero included.
    pub quotient_digits: Vec<Digit>,
    pub steps: Vec<DivisionStep>,
    pub quotient: DigitString,
    pub remainder: DigitString,
}

impl DivisionTrace {
    /// Index of the first step with a non-zero quotient digit. Earlier
    /// steps only copy the dividend prefix through.
    pub fn first_active_step(&self) -> Option<usize> {
        self.quotient_digits
            .iter()
            .position(|d| *d != Digit::ZERO)
            .map(|p| p + 1)
    }

    /// `Σ_n PP_n·10^(s−n)`; equals `divisor × quotient` for every division.
    pub fn reconstructed_product(&self) -> BigInt {
        self.steps
            .iter()
            .fold(BigInt::from(0), |acc, step| acc * 10 + step.pp())
    }
}

/// Largest digit `d` with `d·unit ≤ remaining`; subtracts `d·unit` from `remaining`.
fn select_digit(remaining: &mut Nat, unit: &Nat) -> Digit {
    let mut taken = Nat::zero();
    let mut d = 0u8;
    loop {
        let next = oracle::add(&taken, unit);
        if d == 9 || next > *remaining {
            break;
        }
        taken = next;
        d += 1;
    }
    *remaining = oracle::sub(remaining, &taken).expect("selected multiple never exceeds remainder");
    Digit::new(d).expect("at most nine")
}

fn bigint_to_digits(v: &BigInt) -> DigitString {
    v.to_string().parse().expect("non-negative remainder")
}

/// Divides `a` by `b`, returning quotient, remainder and the full trace.
pub fn divmod(a: &DigitString, b: &DigitString, method: DivMethod) -> Result<(DigitString, DigitString, DivisionTrace)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (s, t) = (a.len(), b.len());
    if s < t {
        let trace = DivisionTrace {
            method,
            dividend: a.clone(),
            divisor: b.clone(),
            quotient_digits: Vec::new(),
            steps: Vec::new(),
            quotient: DigitString::zero(),
            remainder: a.clone(),
        };
        return Ok((DigitString::zero(), a.clone(), trace));
    }
    let q_len = s - t + 1;
    let divisor = Nat::from(b);
    let mut remaining = Nat::from(a);
    let mut c: Vec<Digit> = Vec::with_capacity(q_len);
    let mut steps = Vec::with_capacity(s);
    let mut r = BigInt::from(0);

    for (n0, &an) in a.digits().iter().enumerate() {
        let n = n0 + 1;
        let combined: BigInt = &r * 10 + an.get();
        let (pp0, pp0_terms) = match method {
            DivMethod::Plum => pp0_plum(b, &c, n),
            DivMethod::Wedge => pp0_wedge(b, &c, n),
        };
        let after_pp0: BigInt = &combined - pp0;
        let (quotient_digit, pp1v, pp1_terms, remainder) = if n <= q_len {
            let unit = divisor.shl_digits(q_len - n);
            let cn = select_digit(&mut remaining, &unit);
            c.push(cn);
            let (v, mut terms) = pp1(b, cn);
            for term in &mut terms {
                term.j = n;
            }
            (Some(cn), Some(v), terms, &after_pp0 - v)
        } else {
            (None, None, Vec::new(), after_pp0.clone())
        };
        steps.push(DivisionStep {
            index: n,
            brought_down: Some(an),
            combined,
            pp0,
            pp0_terms,
            after_pp0,
            quotient_digit,
            pp1: pp1v,
            pp1_terms,
            remainder: remainder.clone(),
        });
        r = remainder;
    }

    let quotient = DigitString::from_digits(c.iter().copied());
    let remainder = bigint_to_digits(&r);
    let trace = DivisionTrace {
        method,
        dividend: a.clone(),
        divisor: b.clone(),
        quotient_digits: c,
        steps,
        quotient: quotient.clone(),
        remainder: remainder.clone(),
    };
    Ok((quotient, remainder, trace))
}

/// Quotient to `places` decimal places.
///
/// Divides `a·10^places` by `b`. The returned remainder is that of the scaled
/// division, so its true size is `remainder·10^(−places)`.
pub fn div_decimal(
    a: &DigitString,
    b: &DigitString,
    places: usize,
    method: DivMethod,
) -> Result<(String, DigitString, DivisionTrace)> {
    let (q, r, trace) = divmod(&a.shifted(places), b, method)?;
    Ok((format_fixed(&q, places), r, trace))
}

/// Writes `q·10^(−places)` with exactly `places` fractional digits.
pub fn format_fixed(q: &DigitString, places: usize) -> String {
    let digits = q.to_string();
    if places == 0 {
        return digits;
    }
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = padded.split_at(padded.len() - places);
    format!("{int}.{frac}")
}
