//! Exhaustive verifiers for the algebraic laws of `♣`, `J` and `⋈`, and for
//! the regularities visible in the wedge tables.
//!
//! Every law is checked over its whole finite domain; nothing is sampled.
//! A law holds exactly when its report has no violations.

use std::fmt;
use std::str::FromStr;

use crate::digit::{carry, carry_closed_form, clubsuit, delta_raw, wedge_raw, Digit};
use crate::error::Error;
use crate::table::{wedge_table, WedgeTable};

/// One input on which a law failed, as display text.
///
/// For equalities `expected` is the value the law predicts. For bound and
/// membership laws it is the bound that was crossed, or the first allowed
/// value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// `(a,b,c)` formatting for violation inputs.
pub(crate) fn tuple_text<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub domain_size: usize,
    pub violation_count: usize,
    /// The violations found; sweeps over large domains may keep only the first few.
    pub violations: Vec<Violation>,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.violation_count == 0
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} cases, {} violations)",
            self.law,
            self.domain_size,
            self.violation_count
        )
    }
}

/// Collects checks for a single law.
struct Checker {
    report: LawReport,
}

impl Checker {
    fn new(law: &str) -> Checker {
        Checker {
            report: LawReport {
                law: law.to_string(),
                domain_size: 0,
                violation_count: 0,
                violations: Vec::new(),
            },
        }
    }

    fn eq(&mut self, input: &[i64], expected: i64, actual: i64) {
        self.report.domain_size += 1;
        if expected != actual {
            self.fail(input, expected, actual);
        }
    }

    fn ok(&mut self, input: &[i64], pass: bool, expected: i64, actual: i64) {
        self.report.domain_size += 1;
        if !pass {
            self.fail(input, expected, actual);
        }
    }

    fn fail(&mut self, input: &[i64], expected: i64, actual: i64) {
        self.report.violation_count += 1;
        self.report.violations.push(Violation {
            input: tuple_text(input),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn finish(self) -> LawReport {
        self.report
    }
}

fn club(x: i64, y: i64) -> i64 {
    clubsuit(x, y).get()
}

/// The digit-level law suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LawSuite {
    ClubsuitLaws,
    CarryTheorem,
    WedgeProps,
    WedgeTheorems,
    TablePatterns,
    All,
}

impl LawSuite {
    pub const EACH: [LawSuite; 5] = [
        LawSuite::ClubsuitLaws,
        LawSuite::CarryTheorem,
        LawSuite::WedgeProps,
        LawSuite::WedgeTheorems,
        LawSuite::TablePatterns,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawSuite::ClubsuitLaws => "clubsuit-laws",
            LawSuite::CarryTheorem => "carry-theorem",
            LawSuite::WedgeProps => "wedge-props",
            LawSuite::WedgeTheorems => "wedge-theorems",
            LawSuite::TablePatterns => "table-patterns",
            LawSuite::All => "all",
        }
    }
}

impl FromStr for LawSuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let suite = match s {
            "clubsuit-laws" => LawSuite::ClubsuitLaws,
            "carry-theorem" => LawSuite::CarryTheorem,
            "wedge-props" => LawSuite::WedgeProps,
            "wedge-theorems" => LawSuite::WedgeTheorems,
            "table-patterns" => LawSuite::TablePatterns,
            "all" => LawSuite::All,
            other => return Err(Error::UnknownSuite(other.to_string())),
        };
        Ok(suite)
    }
}

impl fmt::Display for LawSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs a suite by name.
pub fn verify_laws_named(suite: &str) -> Result<Vec<LawReport>, Error> {
    Ok(verify_laws(suite.parse()?))
}

pub fn verify_laws(suite: LawSuite) -> Vec<LawReport> {
    match suite {
        LawSuite::ClubsuitLaws => clubsuit_laws(),
        LawSuite::CarryTheorem => vec![carry_theorem()],
        LawSuite::WedgeProps => wedge_props(),
        LawSuite::WedgeTheorems => vec![double_digit_theorem(), successor_theorem()],
        LawSuite::TablePatterns => table_patterns(),
        LawSuite::All => LawSuite::EACH.iter().flat_map(|&s| verify_laws(s)).collect(),
    }
}

fn clubsuit_laws() -> Vec<LawReport> {
    let digits = 0..=9i64;

    let mut commutative = Checker::new("clubsuit-commutative");
    for a in digits.clone() {
        for b in digits.clone() {
            commutative.eq(&[a, b], club(b, a), club(a, b));
        }
    }

    let mut associative = Checker::new("clubsuit-associative");
    let mut mixed = Checker::new("clubsuit-product-shift");
    for a in digits.clone() {
        for b in digits.clone() {
            for c in digits.clone() {
                associative.eq(&[a, b, c], club(a, club(b, c)), club(club(a, b), c));
                mixed.eq(&[a, b, c], club(a, b * c), club(a * b, c));
            }
        }
    }

    let mut shift_ten = Checker::new("clubsuit-ten-shift");
    for a in 10..=19i64 {
        for b in 10..=19i64 {
            let base = club(a, b);
            let ok = club(a - 10, b) == base && club(a, b - 10) == base && club(a - 10, b - 10) == base;
            shift_ten.ok(&[a, b], ok, base, club(a - 10, b - 10));
        }
    }

    let mut even_five = Checker::new("clubsuit-even-five-shift");
    for a in digits.clone().filter(|a| a % 2 == 0) {
        for b in 5..=9i64 {
            even_five.eq(&[a, b], club(a, b), club(a, b - 5));
        }
    }

    let mut mixed_parity = Checker::new("clubsuit-mixed-parity-five-shift");
    for a in 5..=9i64 {
        for b in (5..=9i64).filter(|b| (a + b) % 2 == 1) {
            mixed_parity.eq(&[a, b], club(a, b), club(a - 5, b - 5));
        }
    }

    vec![
        commutative.finish(),
        associative.finish(),
        mixed.finish(),
        shift_ten.finish(),
        even_five.finish(),
        mixed_parity.finish(),
    ]
}

/// The four-case carry formula against the product definition, plus the
/// range of `δ`, over all 81 ordered pairs of non-zero digits.
fn carry_theorem() -> LawReport {
    let mut check = Checker::new("carry-closed-form");
    for a in Digit::nonzero() {
        for b in Digit::nonzero() {
            let (x, y) = (a.as_i64(), b.as_i64());
            let closed = carry_closed_form(a, b).expect("non-zero digits");
            let true_carry = carry(x, y);
            let delta_ok = (-2..=0).contains(&delta_raw(x, y));
            check.ok(&[x, y], closed == true_carry && delta_ok, true_carry, closed);
        }
    }
    check.finish()
}

/// Extremes of the wedge product over all 1000 digit triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeBounds {
    pub min: i64,
    pub max: i64,
    /// Every `(a, b, c)` reaching `max`.
    pub argmax: Vec<(u8, u8, u8)>,
    /// The largest value over multipliers `c ≠ 9`.
    pub max_without_nine: i64,
}

/// Largest wedge product over `c ≠ 9`, established by exhaustive search.
pub const WEDGE_MAX_WITHOUT_NINE: i64 = 9;

pub fn wedge_bounds() -> WedgeBounds {
    let mut min = i64::MAX;
    let mut max = i64::MIN;
    let mut argmax = Vec::new();
    let mut max_without_nine = i64::MIN;
    for a in 0..=9u8 {
        for b in 0..=9u8 {
            for c in 0..=9u8 {
                let w = wedge_raw(a as i64, b as i64, c as i64);
                min = min.min(w);
                if w > max {
                    max = w;
                    argmax.clear();
                }
                if w == max {
                    argmax.push((a, b, c));
                }
                if c != 9 {
                    max_without_nine = max_without_nine.max(w);
                }
            }
        }
    }
    WedgeBounds { min, max, argmax, max_without_nine }
}

fn wedge_props() -> Vec<LawReport> {
    let mut range = Checker::new("wedge-range");
    let mut no_nine = Checker::new("wedge-max-without-nine");
    let mut odd_shift = Checker::new("wedge-even-c-tens-five-shift");
    let mut ones_shift = Checker::new("wedge-even-c-ones-five-shift");
    let mut monotone = Checker::new("wedge-monotone-in-ones");
    let mut step = Checker::new("wedge-tens-step");

    for a in 0..=9i64 {
        for b in 0..=9i64 {
            for c in 0..=9i64 {
                let w = wedge_raw(a, b, c);
                let input = [a, b, c];
                range.ok(&input, (-6..=11).contains(&w), if w < -6 { -6 } else { 11 }, w);
                if c != 9 {
                    no_nine.ok(&input, w <= WEDGE_MAX_WITHOUT_NINE, WEDGE_MAX_WITHOUT_NINE, w);
                }
                if c % 2 == 0 && a <= 4 {
                    odd_shift.eq(&input, w, wedge_raw(a + 5, b, c));
                }
                if c % 2 == 0 && b <= 4 {
                    ones_shift.eq(&input, w + c / 2, wedge_raw(a, b + 5, c));
                }
                if b <= 8 {
                    let next = wedge_raw(a, b + 1, c);
                    monotone.ok(&input, w <= next, w, next);
                }
                if a <= 8 {
                    let diff = wedge_raw(a + 1, b, c) - w;
                    step.ok(&input, diff == c || diff == c - 10, c, diff);
                }
            }
        }
    }

    let bounds = wedge_bounds();
    let mut extremes = Checker::new("wedge-extremes");
    extremes.eq(&[], -6, bounds.min);
    extremes.eq(&[], 11, bounds.max);
    extremes.ok(&[], bounds.argmax == vec![(7, 9, 9)], 1, bounds.argmax.len() as i64);
    extremes.eq(&[], WEDGE_MAX_WITHOUT_NINE, bounds.max_without_nine);

    vec![
        range.finish(),
        extremes.finish(),
        no_nine.finish(),
        odd_shift.finish(),
        ones_shift.finish(),
        monotone.finish(),
        step.finish(),
    ]
}

/// `(a, a) ⋈ b` read off from the ordinary product `a·b = 10c + d`.
fn double_digit_theorem() -> LawReport {
    let mut check = Checker::new("wedge-repeated-digit");
    for a in 1..=9i64 {
        for b in 1..=9i64 {
            let (tens, ones) = (a * b / 10, a * b % 10);
            let expected = if ones <= 3 { tens + ones } else { tens + ones - 9 };
            check.eq(&[a, b], expected, wedge_raw(a, a, b));
        }
    }
    check.finish()
}

/// `(a, b) ⋈ c` through `(a+1) ♣ c` and `δ(b, c)` when `b ≥ c`.
///
/// `a = 9` is left out because `a + 1` is no longer a digit.
fn successor_theorem() -> LawReport {
    let mut check = Checker::new("wedge-successor");
    for a in 0..=8i64 {
        for c in 1..=9i64 {
            for b in c..=9 {
                let next = a + 1;
                let same = delta_raw(next, c) == delta_raw(a, c);
                let first_case = (a >= c && same) || (a < c && !same);
                let base = club(next, c) + delta_raw(b, c);
                let expected = if first_case { base } else { base + 10 };
                check.eq(&[a, b, c], expected, wedge_raw(a, b, c));
            }
        }
    }
    check.finish()
}

fn table(c: u8) -> WedgeTable {
    wedge_table(Digit::from_u8_unchecked(c)).expect("non-zero multiplier")
}

fn cell(t: &WedgeTable, a: i64, b: i64) -> i64 {
    t.cells()[a as usize][b as usize] as i64
}

/// Columns inside each group are identical in every row.
fn column_groups(law: &str, c: u8, groups: &[&[i64]]) -> LawReport {
    let t = table(c);
    let mut check = Checker::new(law);
    for a in 0..=9 {
        for group in groups {
            let first = cell(&t, a, group[0]);
            for &b in &group[1..] {
                check.eq(&[a, b, c as i64], first, cell(&t, a, b));
            }
        }
    }
    check.finish()
}

/// Moving from column `b` to `b + 3` (for `b ≤ 6`) adds `step`, except in
/// the listed `(b, step)` columns.
fn ones_shift(law: &str, c: u8, step: i64, exceptions: &[(i64, i64)]) -> LawReport {
    let t = table(c);
    let mut check = Checker::new(law);
    for a in 0..=9 {
        for b in 0..=6 {
            let step = exceptions.iter().find(|e| e.0 == b).map_or(step, |e| e.1);
            check.eq(&[a, b, c as i64], cell(&t, a, b) + step, cell(&t, a, b + 3));
        }
    }
    check.finish()
}

/// Moving from row `a` to `a + shift` (for rows that stay in range) adds
/// `step`, except in the listed `(a, step)` rows.
fn tens_shift(law: &str, c: u8, shift: i64, step: i64, exceptions: &[(i64, i64)]) -> LawReport {
    let t = table(c);
    let mut check = Checker::new(law);
    for a in 0..=(9 - shift) {
        let step = exceptions.iter().find(|e| e.0 == a).map_or(step, |e| e.1);
        for b in 0..=9 {
            check.eq(&[a, b, c as i64], cell(&t, a, b) + step, cell(&t, a + shift, b));
        }
    }
    check.finish()
}

fn table_patterns() -> Vec<LawReport> {
    let mut reports = vec![
        column_groups("c1-column-groups", 1, &[&[0, 1, 2, 3], &[4, 5, 6, 7, 8, 9]]),
        column_groups("c2-column-groups", 2, &[&[0, 1], &[2, 3, 4, 5, 6], &[7, 8, 9]]),
        ones_shift("c3-ones-plus-three", 3, 1, &[]),
        tens_shift("c3-tens-plus-three", 3, 3, -1, &[]),
        column_groups("c3-column-triples", 3, &[&[0, 1], &[2, 3, 4], &[5, 6, 7], &[8, 9]]),
        column_groups("c4-columns-a", 4, &[&[1, 2, 3]]),
        column_groups("c4-columns-b", 4, &[&[4, 5]]),
        column_groups("c4-columns-c", 4, &[&[6, 7, 8]]),
        tens_shift("c5-row-period-two", 5, 2, 0, &[]),
        ones_shift("c6-ones-plus-three", 6, 2, &[(4, 1)]),
        tens_shift("c6-tens-plus-three", 6, 3, -2, &[(4, 8)]),
        column_groups("c6-column-pairs", 6, &[&[1, 2], &[4, 5], &[6, 7]]),
        ones_shift("c7-ones-plus-three", 7, 2, &[]),
        tens_shift("c7-tens-plus-three", 7, 3, 1, &[]),
        column_groups("c7-column-pairs", 7, &[&[2, 3], &[5, 6], &[8, 9]]),
        column_groups("c8-column-pairs", 8, &[&[3, 4], &[8, 9]]),
        column_groups("c9-columns-six-seven", 9, &[&[6, 7]]),
    ];

    let nine = table(9);
    let mut low_low = Checker::new("c9-low-low");
    let mut low_high = Checker::new("c9-low-high");
    let mut high_high = Checker::new("c9-high-high");
    for a in 0..=9i64 {
        for b in 0..=9i64 {
            let v = cell(&nine, a, b);
            match (a <= 6, b <= 6) {
                (true, true) => low_low.eq(&[a, b], b - a, v),
                (true, false) => low_high.eq(&[a, b], b - a - 1, v),
                (false, false) => high_high.eq(&[a, b], 9 + (b - a), v),
                (false, true) => {}
            }
        }
    }
    reports.extend([low_low.finish(), low_high.finish(), high_high.finish()]);
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_sizes() {
        assert_eq!(verify_laws(LawSuite::ClubsuitLaws).len(), 6);
        assert_eq!(verify_laws(LawSuite::CarryTheorem).len(), 1);
        assert_eq!(verify_laws(LawSuite::WedgeTheorems).len(), 2);
        assert_eq!(verify_laws(LawSuite::TablePatterns).len(), 20);
        let all = verify_laws(LawSuite::All);
        assert_eq!(all.len(), 6 + 1 + 7 + 2 + 20);
    }

    #[test]
    fn every_law_holds() {
        for report in verify_laws(LawSuite::All) {
            assert!(report.holds(), "{report}: {:?}", report.violations);
            assert!(report.domain_size > 0, "{}", report.law);
        }
    }

    #[test]
    fn carry_theorem_domain() {
        let r = carry_theorem();
        assert_eq!(r.domain_size, 81);
    }

    #[test]
    fn bounds_are_frozen() {
        let b = wedge_bounds();
        assert_eq!(b.min, -6);
        assert_eq!(b.max, 11);
        assert_eq!(b.argmax, vec![(7, 9, 9)]);
        assert_eq!(b.max_without_nine, 9);
        assert_eq!(wedge_raw(7, 8, 9), 10);
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(
            verify_laws_named("nope"),
            Err(Error::UnknownSuite("nope".into()))
        );
        assert_eq!("table-patterns".parse::<LawSuite>(), Ok(LawSuite::TablePatterns));
    }

    #[test]
    fn a_broken_law_is_reported() {
        // A wrong bound must show up as violations rather than pass silently.
        let mut check = Checker::new("wrong");
        for a in 0..=9i64 {
            check.ok(&[a], wedge_raw(a, 9, 9) <= 8, 8, wedge_raw(a, 9, 9));
        }
        let r = check.finish();
        assert!(!r.holds());
        assert_eq!(r.violations[0].input, "(7)");
    }
}
