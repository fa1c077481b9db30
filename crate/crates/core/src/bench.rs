//! Seeded benchmark harness comparing how the multiplication methods carry.
//!
//! Operands for trial `k` at size `n` come from a ChaCha8 generator seeded
//! with the run seed and switched to stream `(n << 32) | k`, so every trial
//! sees the same operands whether trials run serially or in parallel.
//! Each product is checked against the reference multiplication before any
//! of its numbers are counted.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cross_mul::{plum_mul, rapid_mul, wedge_mul, wedge_mul_single, MulTrace};
use crate::digit::Digit;
use crate::digit_string::DigitString;
use crate::error::{Error, Result};
use crate::oracle::{self, Nat};

pub const CSV_HEADER: &str = "method,size,trials,mul_count,carry_count,max_abs_col,mean_abs_col,elapsed_ns";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BenchMethod {
    Schoolbook,
    Cross,
    Plum,
    Wedge,
    WedgeSingle,
}

impl BenchMethod {
    pub const ALL: [BenchMethod; 5] = [
        BenchMethod::Schoolbook,
        BenchMethod::Cross,
        BenchMethod::Plum,
        BenchMethod::Wedge,
        BenchMethod::WedgeSingle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchMethod::Schoolbook => "schoolbook",
            BenchMethod::Cross => "cross",
            BenchMethod::Plum => "plum",
            BenchMethod::Wedge => "wedge",
            BenchMethod::WedgeSingle => "wedge_single",
        }
    }
}

impl fmt::Display for BenchMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BenchMethod::ALL
            .into_iter()
            .find(|m| m.name() == s || m.name().replace('_', "-") == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    /// Operand digit counts.
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub methods: Vec<BenchMethod>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![8, 16, 32, 64],
            trials: 100,
            seed: 0x5eed,
            methods: BenchMethod::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchMetrics {
    pub method: BenchMethod,
    pub size: usize,
    pub trials: usize,
    /// Digit counts of the two operands.
    pub operand_digits: (usize, usize),
    pub mul_count: u64,
    pub carry_count: u64,
    pub max_abs_col: u64,
    pub mean_abs_col: f64,
    pub elapsed_ns: u128,
}

impl BenchMetrics {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.4},{}",
            self.method,
            self.size,
            self.trials,
            self.mul_count,
            self.carry_count,
            self.max_abs_col,
            self.mean_abs_col,
            self.elapsed_ns
        )
    }
}

pub fn to_csv(metrics: &[BenchMetrics]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for m in metrics {
        let _ = writeln!(out, "{}", m.csv_row());
    }
    out
}

/// Operands for one trial: two `size`-digit numbers and a non-zero digit.
pub fn trial_operands(seed: u64, size: usize, trial: usize) -> (DigitString, DigitString, Digit) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((size as u64) << 32) | trial as u64);
    let number = |rng: &mut ChaCha8Rng| {
        DigitString::from_values(
            &(0..size)
                .map(|k| if k == 0 { rng.gen_range(1..=9) } else { rng.gen_range(0..=9) })
                .collect::<Vec<u8>>(),
        )
        .expect("generated digits are in range")
    };
    let a = number(&mut rng);
    let b = number(&mut rng);
    let c = Digit::new(rng.gen_range(1..=9)).expect("digit");
    (a, b, c)
}

#[derive(Debug, Clone, Copy, Default)]
struct TrialStats {
    mul_count: u64,
    carry_count: u64,
    max_abs_col: u64,
    abs_col_sum: u64,
    columns: u64,
    elapsed_ns: u128,
}

impl TrialStats {
    fn from_trace(t: &MulTrace, elapsed_ns: u128) -> TrialStats {
        let cols = t.unresolved.columns();
        TrialStats {
            mul_count: t.digit_mults(),
            carry_count: t.carries,
            max_abs_col: cols.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0),
            abs_col_sum: cols.iter().map(|c| c.unsigned_abs()).sum(),
            columns: cols.len() as u64,
            elapsed_ns,
        }
    }
}

fn run_trial(method: BenchMethod, seed: u64, size: usize, trial: usize) -> Result<TrialStats> {
    let (a, b, c) = trial_operands(seed, size, trial);
    let rhs = match method {
        BenchMethod::WedgeSingle => DigitString::from_digits([c]),
        _ => b.clone(),
    };
    let expected = oracle::mul(&Nat::from(&a), &Nat::from(&rhs)).to_digit_string();

    let start = Instant::now();
    let (product, stats) = match method {
        BenchMethod::Schoolbook => {
            let (p, s) = oracle::mul_counted(&Nat::from(&a), &Nat::from(&rhs));
            let elapsed = start.elapsed().as_nanos();
            let stats = TrialStats {
                mul_count: s.digit_mults,
                carry_count: s.carries,
                max_abs_col: s.max_intermediate,
                abs_col_sum: s.intermediate_sum,
                columns: s.digit_mults,
                elapsed_ns: elapsed,
            };
            (p.to_digit_string(), stats)
        }
        BenchMethod::Cross => timed(start, rapid_mul(&a, &rhs, 1)?),
        BenchMethod::Plum => timed(start, plum_mul(&a, &rhs)),
        BenchMethod::Wedge => timed(start, wedge_mul(&a, &rhs)),
        BenchMethod::WedgeSingle => timed(start, wedge_mul_single(&a, c)),
    };
    if product != expected {
        return Err(Error::OracleMismatch {
            method: method.to_string(),
            lhs: a.to_string(),
            rhs: rhs.to_string(),
            got: product.to_string(),
            expected: expected.to_string(),
        });
    }
    Ok(stats)
}

fn timed(start: Instant, (product, trace): (DigitString, MulTrace)) -> (DigitString, TrialStats) {
    let elapsed = start.elapsed().as_nanos();
    (product, TrialStats::from_trace(&trace, elapsed))
}

/// Runs every `(method, size)` cell; output is sorted by method name, then size.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchMetrics>> {
    if config.methods.is_empty() {
        return Err(Error::BenchConfig("no methods selected".into()));
    }
    if config.trials == 0 {
        return Err(Error::BenchConfig("trials must be at least 1".into()));
    }
    if config.sizes.is_empty() || config.sizes.contains(&0) {
        return Err(Error::BenchConfig("sizes must be non-empty and at least 1".into()));
    }

    let mut methods = config.methods.clone();
    methods.sort_by_key(|m| m.name());
    methods.dedup();
    let mut sizes = config.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();

    let mut out = Vec::with_capacity(methods.len() * sizes.len());
    for &method in &methods {
        for &size in &sizes {
            let trials: Vec<TrialStats> = (0..config.trials)
                .into_par_iter()
                .map(|k| run_trial(method, config.seed, size, k))
                .collect::<Result<_>>()?;
            let total = trials.iter().fold(TrialStats::default(), |acc, t| TrialStats {
                mul_count: acc.mul_count + t.mul_count,
                carry_count: acc.carry_count + t.carry_count,
                max_abs_col: acc.max_abs_col.max(t.max_abs_col),
                abs_col_sum: acc.abs_col_sum + t.abs_col_sum,
                columns: acc.columns + t.columns,
                elapsed_ns: acc.elapsed_ns + t.elapsed_ns,
            });
            let rhs_digits = if method == BenchMethod::WedgeSingle { 1 } else { size };
            out.push(BenchMetrics {
                method,
                size,
                trials: config.trials,
                operand_digits: (size, rhs_digits),
                mul_count: total.mul_count,
                carry_count: total.carry_count,
                max_abs_col: total.max_abs_col,
                mean_abs_col: if total.columns == 0 {
                    0.0
                } else {
                    total.abs_col_sum as f64 / total.columns as f64
                },
                elapsed_ns: total.elapsed_ns,
            });
        }
    }
    Ok(out)
}
