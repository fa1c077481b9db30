//! Column-wise long multiplication.
//!
//! All methods lay the product out as a sequence of column values that are
//! only resolved into digits at the very end by [`normalize`]:
//!
//! * **cross**: each column is a cross product sum of (possibly segmented)
//!   operands, `Σ a_i·b_j` over `i + j = k`.
//! * **plum**: each digit product `a_i·b_j` is split into its residue
//!   `a_i ♣ b_j`, kept in its own column, and its carry `J(a_i ♣ b_j)`, moved
//!   one column up. The leading product `a_1·b_1` is kept whole and the
//!   trailing product `a_m·b_n` is split into its ordinary units and tens.
//! * **wedge**: the multiplicand is padded with a zero on each side and read
//!   as overlapping windows `(a_i, a_{i+1})`; each window times a multiplier
//!   digit contributes one wedge product, so the carry of the lower digit is
//!   already folded in.

use std::fmt;
use std::str::FromStr;

use crate::digit::{carry, clubsuit, wedge_raw, Digit};
use crate::digit_string::{normalize_counted, segment, DigitString, SegmentString, SignedDigitString};
use crate::error::{Error, Result};

/// `Σ xs[i]·ys[n-1-i]`, the cross product sum of two equal-length sequences.
pub fn cross_sum(xs: &[i64], ys: &[i64]) -> Result<i64> {
    if xs.len() != ys.len() || xs.is_empty() {
        return Err(Error::LengthMismatch(xs.len(), ys.len()));
    }
    Ok(xs.iter().zip(ys.iter().rev()).map(|(x, y)| x * y).sum())
}

/// The `m + n − 1` cross product sums of two segmented numbers, in radix `10^L`.
///
/// Operands are swapped if needed so the first has at least as many segments.
pub fn rapid_mul_columns(a: &SegmentString, b: &SegmentString) -> Result<SignedDigitString> {
    if a.segment_len() != b.segment_len() {
        return Err(Error::SegmentLength {
            got: b.segment_len(),
            max: a.segment_len(),
        });
    }
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let (xs, ys) = (a.segments(), b.segments());
    let (m, n) = (xs.len(), ys.len());
    let mut columns = Vec::with_capacity(m + n - 1);
    for k in 0..(m + n - 1) {
        // pairs (i, j) with i + j = k
        let lo = k.saturating_sub(n - 1);
        let hi = k.min(m - 1);
        columns.push(cross_sum(&xs[lo..=hi], &ys[k - hi..=k - lo])?);
    }
    Ok(SignedDigitString::new(columns))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MulMethod {
    Cross,
    Plum,
    Wedge,
    WedgeSingle,
}

impl MulMethod {
    pub fn name(self) -> &'static str {
        match self {
            MulMethod::Cross => "cross",
            MulMethod::Plum => "plum",
            MulMethod::Wedge => "wedge",
            MulMethod::WedgeSingle => "wedge_single",
        }
    }
}

impl fmt::Display for MulMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MulMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cross" => Ok(MulMethod::Cross),
            "plum" => Ok(MulMethod::Plum),
            "wedge" => Ok(MulMethod::Wedge),
            "wedge_single" | "wedge-single" => Ok(MulMethod::WedgeSingle),
            other => Err(Error::UnknownMethod(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermKind {
    /// A whole product `a_i·b_j` (segments for the cross method).
    Product,
    /// `a_i ♣ b_j`.
    Residue,
    /// `J(a_i ♣ b_j)`.
    Carry,
    /// Units digit of the trailing product.
    Units,
    /// Tens part of the trailing product.
    Tens,
    /// `(a_i, a_{i+1}) ⋈ b_j` on the zero-padded multiplicand.
    Wedge,
}

/// One contribution to a column.
///
/// `i` and `j` are 1-based positions in the multiplicand and multiplier. For
/// wedge terms `i` names the window `(a_i, a_{i+1})` with `a_0` and
/// `a_{m+1}` the padding zeros, so `i` runs from 0 to `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub kind: TermKind,
    pub i: usize,
    pub j: usize,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Column {
    pub terms: Vec<Term>,
    pub total: i64,
}

impl Column {
    fn from_terms(terms: Vec<Term>) -> Column {
        let total = terms.iter().map(|t| t.value).sum();
        Column { terms, total }
    }
}

/// Everything a multiplication did, column by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulTrace {
    pub method: MulMethod,
    pub lhs: DigitString,
    pub rhs: DigitString,
    /// Segment length the columns are expressed in; 1 except for segmented cross products.
    pub segment_len: usize,
    pub columns: Vec<Column>,
    pub unresolved: SignedDigitString,
    pub product: DigitString,
    /// Columns that passed on a non-zero carry during normalization.
    pub carries: u64,
}

impl MulTrace {
    fn finish(
        method: MulMethod,
        lhs: &DigitString,
        rhs: &DigitString,
        segment_len: usize,
        columns: Vec<Column>,
    ) -> Result<MulTrace> {
        let unresolved = SignedDigitString::new(columns.iter().map(|c| c.total).collect());
        let (product, carries) = normalize_counted(&unresolved, segment_len)?;
        Ok(MulTrace {
            method,
            lhs: lhs.clone(),
            rhs: rhs.clone(),
            segment_len,
            columns,
            unresolved,
            product,
            carries,
        })
    }

    fn zero(method: MulMethod, lhs: &DigitString, rhs: &DigitString, segment_len: usize) -> MulTrace {
        MulTrace {
            method,
            lhs: lhs.clone(),
            rhs: rhs.clone(),
            segment_len,
            columns: vec![Column::default()],
            unresolved: SignedDigitString::new(vec![0]),
            product: DigitString::zero(),
            carries: 0,
        }
    }

    /// Single-digit (or single-segment) multiplications the method performed.
    ///
    /// A residue and carry of the same pair share one product, a trailing
    /// units/tens split is one product, and a wedge product needs two.
    pub fn digit_mults(&self) -> u64 {
        self.columns
            .iter()
            .flat_map(|c| c.terms.iter())
            .map(|t| match t.kind {
                TermKind::Product | TermKind::Residue | TermKind::Units => 1,
                TermKind::Carry | TermKind::Tens => 0,
                TermKind::Wedge => 2,
            })
            .sum()
    }

    pub fn max_abs_column(&self) -> i64 {
        self.unresolved.columns().iter().map(|c| c.abs()).max().unwrap_or(0)
    }
}

/// Cross-product multiplication on segments of length `segment_len`.
pub fn rapid_mul(a: &DigitString, b: &DigitString, segment_len: usize) -> Result<(DigitString, MulTrace)> {
    let sa = segment(a, segment_len)?;
    let sb = segment(b, segment_len)?;
    if a.is_zero() || b.is_zero() {
        let t = MulTrace::zero(MulMethod::Cross, a, b, segment_len);
        return Ok((t.product.clone(), t));
    }
    let (xs, ys) = (sa.segments(), sb.segments());
    let (m, n) = (xs.len(), ys.len());
    let mut columns = vec![Vec::new(); m + n - 1];
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in ys.iter().enumerate() {
            columns[i + j].push(Term {
                kind: TermKind::Product,
                i: i + 1,
                j: j + 1,
                value: x * y,
            });
        }
    }
    for col in &mut columns {
        col.sort_by_key(|t| t.i);
    }
    let columns = columns.into_iter().map(Column::from_terms).collect();
    let trace = MulTrace::finish(MulMethod::Cross, a, b, segment_len, columns)?;
    Ok((trace.product.clone(), trace))
}

/// Plum-blossom product multiplication.
pub fn plum_mul(a: &DigitString, b: &DigitString) -> (DigitString, MulTrace) {
    if a.is_zero() || b.is_zero() {
        let t = MulTrace::zero(MulMethod::Plum, a, b, 1);
        return (t.product.clone(), t);
    }
    let xs: Vec<i64> = a.digit_values().collect();
    let ys: Vec<i64> = b.digit_values().collect();
    let (m, n) = (xs.len(), ys.len());
    let width = m + n - 1;
    // Per column: leading/residue terms first, then the carries, each in order of i.
    let mut heads: Vec<Vec<Term>> = vec![Vec::new(); width];
    let mut tails: Vec<Vec<Term>> = vec![Vec::new(); width];
    for (i0, &x) in xs.iter().enumerate() {
        for (j0, &y) in ys.iter().enumerate() {
            let (i, j) = (i0 + 1, j0 + 1);
            let col = i0 + j0;
            if i == 1 && j == 1 {
                heads[0].push(Term { kind: TermKind::Product, i, j, value: x * y });
            } else if i == m && j == n {
                heads[col].push(Term { kind: TermKind::Units, i, j, value: x * y % 10 });
                tails[col - 1].push(Term { kind: TermKind::Tens, i, j, value: x * y / 10 });
            } else {
                heads[col].push(Term { kind: TermKind::Residue, i, j, value: clubsuit(x, y).get() });
                tails[col - 1].push(Term { kind: TermKind::Carry, i, j, value: carry(x, y) });
            }
        }
    }
    let columns = heads
        .into_iter()
        .zip(tails)
        .map(|(mut head, mut tail)| {
            head.sort_by_key(|t| t.i);
            tail.sort_by_key(|t| t.i);
            head.extend(tail);
            Column::from_terms(head)
        })
        .collect();
    let trace = MulTrace::finish(MulMethod::Plum, a, b, 1, columns).expect("product of naturals is non-negative");
    (trace.product.clone(), trace)
}

/// The multiplicand with one zero prepended and one appended.
fn padded(a: &DigitString) -> Vec<i64> {
    let mut p = Vec::with_capacity(a.len() + 2);
    p.push(0);
    p.extend(a.digit_values());
    p.push(0);
    p
}

/// Multiplication by one digit as a stream of consecutive wedge products.
///
/// Produces exactly `len(a) + 1` columns, each in `-6..=11`.
pub fn wedge_mul_single(a: &DigitString, c: Digit) -> (DigitString, MulTrace) {
    let rhs = DigitString::from_digits([c]);
    let p = padded(a);
    let c = c.as_i64();
    let columns = p
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            Column::from_terms(vec![Term {
                kind: TermKind::Wedge,
                i,
                j: 1,
                value: wedge_raw(w[0], w[1], c),
            }])
        })
        .collect();
    let trace = MulTrace::finish(MulMethod::WedgeSingle, a, &rhs, 1, columns).expect("product of naturals is non-negative");
    (trace.product.clone(), trace)
}

/// General wedge multiplication; column `k` collects every window `i` and
/// multiplier digit `j` with `i + j = k`.
pub fn wedge_mul(a: &DigitString, b: &DigitString) -> (DigitString, MulTrace) {
    if a.is_zero() || b.is_zero() {
        let t = MulTrace::zero(MulMethod::Wedge, a, b, 1);
        return (t.product.clone(), t);
    }
    let p = padded(a);
    let ys: Vec<i64> = b.digit_values().collect();
    let windows = a.len() + 1;
    let mut columns = vec![Vec::new(); windows + ys.len() - 1];
    for (i, w) in p.windows(2).enumerate() {
        for (j0, &y) in ys.iter().enumerate() {
            columns[i + j0].push(Term {
                kind: TermKind::Wedge,
                i,
                j: j0 + 1,
                value: wedge_raw(w[0], w[1], y),
            });
        }
    }
    let columns = columns.into_iter().map(Column::from_terms).collect();
    let trace = MulTrace::finish(MulMethod::Wedge, a, b, 1, columns).expect("product of naturals is non-negative");
    (trace.product.clone(), trace)
}

/// Runs `method` on `a × b`. `segment_len` only affects the cross method;
/// the single-digit wedge method requires `b` to be one digit.
pub fn multiply(a: &DigitString, b: &DigitString, method: MulMethod, segment_len: usize) -> Result<MulTrace> {
    match method {
        MulMethod::Cross => rapid_mul(a, b, segment_len).map(|(_, t)| t),
        MulMethod::Plum => Ok(plum_mul(a, b).1),
        MulMethod::Wedge => Ok(wedge_mul(a, b).1),
        MulMethod::WedgeSingle => {
            if b.len() != 1 {
                return Err(Error::DigitOutOfRange(b.len() as i64, "a one-digit multiplier"));
            }
            Ok(wedge_mul_single(a, b.digits()[0]).1)
        }
    }
}
