//! Plain-text layouts of multiplication and division traces.
//!
//! Multiplication renders one line per column (its terms, their values and
//! the column total), then the unresolved column tuple, then the product.
//!
//! Division renders a vertical tableau. Every row is right-aligned so its
//! last character sits under the dividend digit of its step. Subtracted
//! partial products carry a `pp0`/`pp1` tag in the left gutter and the terms
//! they were built from on the right. Negative values use a leading minus
//! sign. Steps before the first non-zero quotient digit produce no rows, and
//! the first active step starts directly with its subtrahend, since the
//! dividend prefix is already visible above.

use std::fmt;

use num_bigint::BigInt;

use crate::cross_mul::{MulMethod, MulTrace, Term, TermKind};
use crate::digit_string::segment;
use crate::plum_div::{DivMethod, DivisionTrace};

/// Symbols used in rendered traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Glyphs {
    pub wedge: &'static str,
    pub club: &'static str,
    pub times: &'static str,
}

impl Glyphs {
    pub const UNICODE: Glyphs = Glyphs { wedge: "⋈", club: "♣", times: "×" };
    pub const ASCII: Glyphs = Glyphs { wedge: "><", club: "*~", times: "x" };

    pub fn new(ascii: bool) -> Glyphs {
        if ascii {
            Glyphs::ASCII
        } else {
            Glyphs::UNICODE
        }
    }
}

impl Default for Glyphs {
    fn default() -> Self {
        Glyphs::UNICODE
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedTrace {
    pub method: String,
    pub operands: (String, String),
    pub lines: Vec<String>,
}

impl fmt::Display for RenderedTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// `2 + 1 - 1` style listing.
fn signed_sum(values: impl IntoIterator<Item = i64>) -> String {
    let mut out = String::new();
    for (k, v) in values.into_iter().enumerate() {
        match (k, v < 0) {
            (0, _) => out.push_str(&v.to_string()),
            (_, false) => out.push_str(&format!(" + {v}")),
            (_, true) => out.push_str(&format!(" - {}", -v)),
        }
    }
    out
}

/// Digit `k` (1-based) of a digit list, or zero outside it.
fn at(digits: &[i64], k: usize) -> i64 {
    if k == 0 {
        0
    } else {
        digits.get(k - 1).copied().unwrap_or(0)
    }
}

fn mul_term_label(t: &MulTrace, term: &Term, g: Glyphs) -> String {
    if t.method == MulMethod::Cross {
        let seg = |ds| segment(ds, t.segment_len).map(|s| s.segments().to_vec()).unwrap_or_default();
        let (xs, ys) = (seg(&t.lhs), seg(&t.rhs));
        return format!("{}{}{}", at(&xs, term.i), g.times, at(&ys, term.j));
    }
    let xs: Vec<i64> = t.lhs.digit_values().collect();
    let ys: Vec<i64> = t.rhs.digit_values().collect();
    let (x, y) = (at(&xs, term.i), at(&ys, term.j));
    match term.kind {
        TermKind::Product => format!("{x}{}{y}", g.times),
        TermKind::Residue => format!("{x}{}{y}", g.club),
        TermKind::Carry => format!("J({x}{}{y})", g.club),
        TermKind::Units => format!("units({x}{}{y})", g.times),
        TermKind::Tens => format!("tens({x}{}{y})", g.times),
        TermKind::Wedge => format!("{x}{}{}{y}", at(&xs, term.i + 1), g.wedge),
    }
}

pub fn render_mul(t: &MulTrace) -> RenderedTrace {
    render_mul_with(t, Glyphs::default())
}

pub fn render_mul_with(t: &MulTrace, g: Glyphs) -> RenderedTrace {
    let mut lines = Vec::with_capacity(t.columns.len() + 3);
    let header = if t.method == MulMethod::Cross && t.segment_len > 1 {
        format!("{} {} {} [{}, segment length {}]", t.lhs, g.times, t.rhs, t.method, t.segment_len)
    } else {
        format!("{} {} {} [{}]", t.lhs, g.times, t.rhs, t.method)
    };
    lines.push(header);
    let width = t.columns.len().to_string().len();
    for (k, col) in t.columns.iter().enumerate() {
        let line = if col.terms.is_empty() {
            format!("  col {:>width$}: 0 = {}", k + 1, col.total)
        } else {
            let labels: Vec<String> = col.terms.iter().map(|term| mul_term_label(t, term, g)).collect();
            format!(
                "  col {:>width$}: {} = {} = {}",
                k + 1,
                labels.join(" + "),
                signed_sum(col.terms.iter().map(|term| term.value)),
                col.total
            )
        };
        lines.push(line);
    }
    lines.push(format!("= {}", t.unresolved));
    lines.push(format!("= {}", t.product));
    RenderedTrace {
        method: t.method.to_string(),
        operands: (t.lhs.to_string(), t.rhs.to_string()),
        lines,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivRowKind {
    /// `10·r_{n−1} + a_n`.
    BroughtDown,
    Pp0,
    AfterPp0,
    Pp1,
    Remainder,
}

impl DivRowKind {
    pub fn is_subtrahend(self) -> bool {
        matches!(self, DivRowKind::Pp0 | DivRowKind::Pp1)
    }
}

/// One line of the vertical division, before layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivRow {
    pub step: usize,
    pub kind: DivRowKind,
    pub value: BigInt,
    pub terms: Vec<Term>,
}

/// The rows of a division tableau, in display order.
pub fn division_rows(t: &DivisionTrace) -> Vec<DivRow> {
    let mut rows = Vec::new();
    let Some(first) = t.first_active_step() else {
        return rows;
    };
    let row = |step, kind, value: &BigInt, terms: &[Term]| DivRow {
        step,
        kind,
        value: value.clone(),
        terms: terms.to_vec(),
    };
    for s in t.steps.iter().filter(|s| s.index >= first) {
        let pp1 = s.pp1.map(BigInt::from);
        if s.index == first {
            if let Some(v) = &pp1 {
                rows.push(row(s.index, DivRowKind::Pp1, v, &s.pp1_terms));
            }
            rows.push(row(s.index, DivRowKind::Remainder, &s.remainder, &[]));
            continue;
        }
        rows.push(row(s.index, DivRowKind::BroughtDown, &s.combined, &[]));
        let show_pp0 = !s.pp0_terms.is_empty();
        if show_pp0 {
            rows.push(row(s.index, DivRowKind::Pp0, &BigInt::from(s.pp0), &s.pp0_terms));
        }
        match &pp1 {
            Some(v) => {
                if show_pp0 {
                    rows.push(row(s.index, DivRowKind::AfterPp0, &s.after_pp0, &[]));
                }
                rows.push(row(s.index, DivRowKind::Pp1, v, &s.pp1_terms));
                rows.push(row(s.index, DivRowKind::Remainder, &s.remainder, &[]));
            }
            None if show_pp0 => rows.push(row(s.index, DivRowKind::Remainder, &s.remainder, &[])),
            None => {}
        }
    }
    rows
}

fn div_term_label(t: &DivisionTrace, term: &Term, g: Glyphs) -> String {
    let bs: Vec<i64> = t.divisor.digit_values().collect();
    let c = t
        .quotient_digits
        .get(term.j.wrapping_sub(1))
        .map(|d| d.as_i64())
        .unwrap_or(0);
    let b = at(&bs, term.i);
    match term.kind {
        TermKind::Product => format!("{b}{}{c}", g.times),
        TermKind::Residue => format!("{b}{}{c}", g.club),
        TermKind::Carry => format!("J({b}{}{c})", g.club),
        TermKind::Wedge => format!("{b}{}{}{c}", at(&bs, term.i + 1), g.wedge),
        TermKind::Units | TermKind::Tens => unreachable!("not produced by division"),
    }
}

pub fn render_div(t: &DivisionTrace) -> RenderedTrace {
    render_div_with(t, Glyphs::default())
}

pub fn render_div_with(t: &DivisionTrace, g: Glyphs) -> RenderedTrace {
    let divisor = t.divisor.to_string();
    let dividend = t.dividend.to_string();
    let gutter = (divisor.len() + 3).max(4);
    let s = dividend.len();
    let mut lines = Vec::new();

    let quotient = t.quotient.to_string();
    lines.push(format!("{:gutter$}{quotient:>s$}", ""));
    lines.push(format!("{divisor:>w$} ) {dividend}", w = gutter - 3));

    for row in division_rows(t) {
        let tag = match row.kind {
            DivRowKind::Pp0 => "pp0",
            DivRowKind::Pp1 => "pp1",
            _ => "",
        };
        let mut line = format!("{tag:<gutter$}{:>w$}", row.value.to_string(), w = row.step);
        if !row.terms.is_empty() {
            let labels: Vec<String> = row.terms.iter().map(|term| div_term_label(t, term, g)).collect();
            let pad = (s + 1).saturating_sub(row.step);
            line.push_str(&format!("{:pad$}  {}", "", labels.join(" + ")));
        }
        lines.push(line.trim_end().to_string());
    }

    let method = match t.method {
        DivMethod::Plum => "plum",
        DivMethod::Wedge => "wedge",
    };
    lines.push(format!("q = {}, r = {}", t.quotient, t.remainder));
    RenderedTrace {
        method: method.to_string(),
        operands: (dividend, divisor),
        lines,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cross_mul::{plum_mul, rapid_mul, wedge_mul, wedge_mul_single};
    use crate::digit::Digit;
    use crate::digit_string::DigitString;
    use crate::plum_div::divmod;

    fn ds(s: &str) -> DigitString {
        s.parse().unwrap()
    }

    #[test]
    fn wedge_mul_layout() {
        let (_, t) = wedge_mul(&ds("348"), &ds("697"));
        let r = render_mul(&t);
        assert_eq!(r.lines[0], "348 × 697 [wedge]");
        assert_eq!(r.lines[3], "  col 3: 03⋈7 + 34⋈9 + 48⋈6 = 2 + 1 - 1 = 2");
        assert!(r.lines.contains(&"= (2,4,2,5,6,-4)".to_string()));
        assert_eq!(r.lines.last().unwrap(), "= 242556");
    }

    #[test]
    fn streaming_layout_has_one_line_per_window() {
        let (_, t) = wedge_mul_single(&ds("35649758"), Digit::NINE);
        let r = render_mul(&t);
        let windows: Vec<&String> = r.lines.iter().filter(|l| l.contains("⋈9")).collect();
        assert_eq!(windows.len(), 9);
        assert!(windows[0].contains("03⋈9"));
        assert!(windows[8].contains("80⋈9"));
    }

    #[test]
    fn plum_mul_layout() {
        let (_, t) = plum_mul(&ds("386"), &ds("47"));
        let text = render_mul_with(&t, Glyphs::ASCII).to_string();
        assert!(text.is_ascii());
        assert!(text.contains("col 1: 3x4 + J(3*~7) + J(8*~4) = 12 + 2 + 3 = 17"), "{text}");
        assert!(text.contains("= (17,12,-6,2)"));
    }

    #[test]
    fn zero_product_layout() {
        let (_, t) = plum_mul(&ds("123"), &ds("0"));
        let r = render_mul(&t);
        assert_eq!(r.lines, vec!["123 × 0 [plum]", "  col 1: 0 = 0", "= (0)", "= 0"]);
    }

    #[test]
    fn segmented_header() {
        let (_, t) = rapid_mul(&ds("2976"), &ds("2924"), 2).unwrap();
        let r = render_mul(&t);
        assert_eq!(r.lines[0], "2976 × 2924 [cross, segment length 2]");
        assert_eq!(r.lines[2], "  col 2: 29×24 + 76×29 = 696 + 2204 = 2900");
    }

    #[test]
    fn division_rows_56789() {
        let (_, _, t) = divmod(&ds("56789"), &ds("369"), DivMethod::Plum).unwrap();
        let rows = division_rows(&t);
        let subs: Vec<i64> = rows
            .iter()
            .filter(|r| r.kind.is_subtrahend())
            .map(|r| i64::try_from(&r.value).unwrap())
            .collect();
        assert_eq!(subs, vec![4, -3, 18, 4, 11, -4, -3]);
        let rest: Vec<i64> = rows
            .iter()
            .filter(|r| !r.kind.is_subtrahend())
            .map(|r| i64::try_from(&r.value).unwrap())
            .collect();
        assert_eq!(rest, vec![1, 16, 19, 1, 17, 13, 2, 28, 32, 329, 332]);
    }

    #[test]
    fn division_layout_56789() {
        let (_, _, t) = divmod(&ds("56789"), &ds("369"), DivMethod::Plum).unwrap();
        let r = render_div(&t);
        let expected = [
            "        153",
            "369 ) 56789",
            "pp1   4       3×1 + J(6♣1)",
            "      1",
            "      16",
            "pp0   -3      6♣1 + J(9♣1)",
            "      19",
        ];
        assert_eq!(&r.lines[..expected.len()], &expected);
        assert_eq!(r.lines.last().unwrap(), "q = 153, r = 332");
    }

    #[test]
    fn short_division_layout() {
        let (_, _, t) = divmod(&ds("12"), &ds("345"), DivMethod::Plum).unwrap();
        let r = render_div(&t);
        assert_eq!(r.lines.len(), 3);
        assert_eq!(r.lines[2], "q = 0, r = 12");
    }

    #[test]
    fn ascii_division() {
        let (_, _, t) = divmod(&ds("242558"), &ds("697"), DivMethod::Wedge).unwrap();
        let text = render_div_with(&t, Glyphs::ASCII).to_string();
        assert!(text.is_ascii());
        assert!(text.contains("97><4 + 70><3"), "{text}");
    }

    #[test]
    fn signed_sums() {
        assert_eq!(signed_sum([2, 1, -1]), "2 + 1 - 1");
        assert_eq!(signed_sum([-6, 4]), "-6 + 4");
    }
}
