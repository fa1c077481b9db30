//! Differential checks of every multiplication and division method against
//! the reference arithmetic.
//!
//! Small operands are swept exhaustively with the word-sized kernels in
//! [`crate::compact`], compared with machine arithmetic. Large operands are
//! drawn from a seeded generator and run through the traced methods, compared
//! with [`crate::oracle`].

use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::compact::{self, Operand};
use crate::cross_mul::{multiply, MulMethod};
use crate::digit_string::{value_in_radix, DigitString};
use crate::laws::{tuple_text, LawReport, Violation};
use crate::oracle::{self, Nat};
use crate::plum_div::{divmod, DivMethod};

/// Violations kept per report; `violation_count` is still exact.
const MAX_KEPT: usize = 16;

/// Segment lengths the cross method is checked with on random operands.
pub const CROSS_SEGMENTS: [usize; 3] = [1, 2, 3];

struct Tally {
    report: LawReport,
}

impl Tally {
    fn new(law: String) -> Tally {
        Tally {
            report: LawReport { law, domain_size: 0, violation_count: 0, violations: Vec::new() },
        }
    }

    fn check(&mut self, pass: bool, input: impl FnOnce() -> String, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.report.domain_size += 1;
        if !pass {
            self.report.violation_count += 1;
            if self.report.violations.len() < MAX_KEPT {
                self.report.violations.push(Violation {
                    input: input(),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                });
            }
        }
    }

    /// Appends a later part of the same sweep.
    fn absorb(&mut self, part: Tally) {
        let r = part.report;
        self.report.domain_size += r.domain_size;
        self.report.violation_count += r.violation_count;
        let room = MAX_KEPT - self.report.violations.len();
        self.report.violations.extend(r.violations.into_iter().take(room));
    }

    fn finish(self) -> LawReport {
        self.report
    }
}

/// Runs `row(a, tallies)` for every `a < rows` in parallel and merges the
/// parts in order of `a`, so the kept violations do not depend on scheduling.
fn sweep<const K: usize>(laws: [String; K], rows: usize, row: impl Fn(usize, &mut [Tally; K]) + Sync) -> [LawReport; K] {
    let parts: Vec<[Tally; K]> = (0..rows)
        .into_par_iter()
        .map(|a| {
            let mut part = std::array::from_fn(|_| Tally::new(String::new()));
            row(a, &mut part);
            part
        })
        .collect();
    let mut total = laws.map(Tally::new);
    for part in parts {
        for (t, p) in total.iter_mut().zip(part) {
            t.absorb(p);
        }
    }
    total.map(Tally::finish)
}

fn method_label(method: MulMethod, segment_len: usize) -> String {
    match method {
        MulMethod::Cross => format!("cross-L{segment_len}"),
        other => other.name().to_string(),
    }
}

fn mul_cases(segments: &[usize]) -> Vec<(MulMethod, usize)> {
    let mut cases: Vec<(MulMethod, usize)> = segments.iter().map(|&l| (MulMethod::Cross, l)).collect();
    cases.extend([(MulMethod::Plum, 1), (MulMethod::Wedge, 1), (MulMethod::WedgeSingle, 1)]);
    cases
}

struct QuotRem((u32, u32));

impl fmt::Display for QuotRem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0 .0, self.0 .1)
    }
}

/// `0..bound` as compact operands.
fn operands(bound: u32) -> Vec<Operand> {
    assert!(bound <= compact::LIMIT, "exhaustive bound above compact::LIMIT");
    (0..bound).map(|v| Operand::new(v).expect("below the limit")).collect()
}

/// Every method on every `a, b < bound` (`b < 10` for the single-digit
/// wedge method), against `u64` multiplication. The cross method runs on
/// single digits here.
pub fn mul_exhaustive(bound: u32) -> Vec<LawReport> {
    let ops = operands(bound);
    let mut out = Vec::new();
    for (method, l) in mul_cases(&[1]) {
        let b_bound = if method == MulMethod::WedgeSingle { ops.len().min(10) } else { ops.len() };
        let [report] = sweep([format!("mul-exhaustive-{}", method_label(method, l))], ops.len(), |a, [tally]| {
            let x = &ops[a];
            for (b, y) in ops[..b_bound].iter().enumerate() {
                let got = compact::product_operands(x, y, method, l);
                let want = a as u64 * b as u64;
                tally.check(got == want, || tuple_text(&[a, b]), want, got);
            }
        });
        out.push(report);
    }
    out
}

/// Both division methods on every `a < bound`, `1 <= b < bound`, against
/// `u32` division, plus the partial-product reconstruction `Σ PP_k·10^(s−k) = b·q`.
pub fn div_exhaustive(bound: u32) -> Vec<LawReport> {
    let ops = operands(bound);
    let mut out = Vec::new();
    for method in [DivMethod::Plum, DivMethod::Wedge] {
        let laws = [format!("div-exhaustive-{method}"), format!("div-reconstruction-{method}")];
        let reports = sweep(laws, ops.len(), |a, [agree, recon]| {
            let x = &ops[a];
            let a = a as u32;
            for (b, y) in ops.iter().enumerate().skip(1) {
                let b = b as u32;
                let (q, r, rebuilt) = compact::divmod_operands(x, y, method);
                let want = (a / b, a % b);
                agree.check((q, r) == want, || tuple_text(&[a, b]), QuotRem(want), QuotRem((q, r)));
                let bq = b as i64 * q as i64;
                recon.check(rebuilt == bq, || tuple_text(&[a, b]), bq, rebuilt);
            }
        });
        out.extend(reports);
    }
    out
}

/// A random natural with `1..=max_digits` digits and no leading zero.
pub fn random_digits(rng: &mut ChaCha8Rng, max_digits: usize) -> DigitString {
    let len = rng.gen_range(1..=max_digits);
    let digits: Vec<u8> = (0..len)
        .map(|k| if k == 0 && len > 1 { rng.gen_range(1..=9) } else { rng.gen_range(0..=9) })
        .collect();
    DigitString::from_values(&digits).expect("generated digits are in range")
}

/// Traced methods on `pairs` random operand pairs against the oracle. Also
/// checks that every trace's unresolved columns carry the product's value.
pub fn mul_random(pairs: usize, max_digits: usize, seed: u64) -> Vec<LawReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases = mul_cases(&CROSS_SEGMENTS);
    let mut agree: Vec<Tally> = cases
        .iter()
        .map(|&(m, l)| Tally::new(format!("mul-random-{}", method_label(m, l))))
        .collect();
    let mut sound = Tally::new("mul-trace-columns-value".to_string());
    for _ in 0..pairs {
        let a = random_digits(&mut rng, max_digits);
        let b = random_digits(&mut rng, max_digits);
        let c = random_digits(&mut rng, 1);
        for (tally, &(method, l)) in agree.iter_mut().zip(&cases) {
            let rhs = if method == MulMethod::WedgeSingle { &c } else { &b };
            let expected = oracle::mul(&Nat::from(&a), &Nat::from(rhs)).to_digit_string();
            let input = || format!("({a},{rhs})");
            match multiply(&a, rhs, method, l) {
                Ok(trace) => {
                    tally.check(trace.product == expected, input, &expected, &trace.product);
                    let value = value_in_radix(&trace.unresolved, trace.segment_len);
                    sound.check(value == expected.to_bigint(), input, &expected, value);
                }
                Err(e) => tally.check(false, input, &expected, e),
            }
        }
    }
    let mut out: Vec<LawReport> = agree.into_iter().map(Tally::finish).collect();
    out.push(sound.finish());
    out
}

/// Traced divisions on `pairs` random pairs against the oracle, with the
/// reconstruction identity checked on every trace.
pub fn div_random(pairs: usize, max_digits: usize, seed: u64) -> Vec<LawReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let methods = [DivMethod::Plum, DivMethod::Wedge];
    let mut agree: Vec<Tally> = methods.iter().map(|m| Tally::new(format!("div-random-{m}"))).collect();
    let mut recon = Tally::new("div-random-reconstruction".to_string());
    for _ in 0..pairs {
        let a = random_digits(&mut rng, max_digits);
        // divisor no longer than the dividend, so most pairs take several steps
        let mut b = random_digits(&mut rng, a.len());
        if b.is_zero() {
            b = DigitString::from_u64(1);
        }
        let (eq, er) = oracle::divmod(&Nat::from(&a), &Nat::from(&b)).expect("non-zero divisor");
        let expected = format!("({eq},{er})");
        for (tally, &method) in agree.iter_mut().zip(&methods) {
            let input = || format!("({a},{b})");
            match divmod(&a, &b, method) {
                Ok((q, r, trace)) => {
                    let got = format!("({q},{r})");
                    tally.check(got == expected, input, &expected, &got);
                    let bq: BigInt = oracle::mul(&Nat::from(&b), &Nat::from(&q)).to_digit_string().to_bigint();
                    let rebuilt = trace.reconstructed_product();
                    recon.check(rebuilt == bq, input, &bq, rebuilt);
                }
                Err(e) => tally.check(false, input, &expected, e),
            }
        }
    }
    let mut out: Vec<LawReport> = agree.into_iter().map(Tally::finish).collect();
    out.push(recon.finish());
    out
}

/// Sizes used by the `mul-equiv` and `div-equiv` suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivConfig {
    /// Exhaustive sweeps cover operands below this.
    pub bound: u32,
    pub pairs: usize,
    pub max_digits: usize,
    pub seed: u64,
}

impl Default for EquivConfig {
    fn default() -> Self {
        EquivConfig { bound: 10_000, pairs: 1000, max_digits: 64, seed: 2024 }
    }
}

pub fn mul_equivalence(config: &EquivConfig) -> Vec<LawReport> {
    let mut out = mul_exhaustive(config.bound);
    out.extend(mul_random(config.pairs, config.max_digits, config.seed));
    out
}

pub fn div_equivalence(config: &EquivConfig) -> Vec<LawReport> {
    let mut out = div_exhaustive(config.bound);
    out.extend(div_random(config.pairs, config.max_digits, config.seed));
    out
}
