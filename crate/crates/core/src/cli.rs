//! The `plum` command line.
//!
//! [`run`] takes the full argument list and two writers and returns the exit
//! code, so it can be driven from tests without spawning a process. Exit
//! codes: 0 on success, 1 for usage and parse errors, 2 for failed
//! verification and arithmetic errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, to_csv, BenchConfig, BenchMethod};
use crate::cross_mul::{multiply, MulMethod};
use crate::digit::{carry, clubsuit, wedge, Digit};
use crate::digit_string::{parse, DigitString};
use crate::equivalence::{div_equivalence, mul_equivalence, EquivConfig};
use crate::error::Error;
use crate::laws::{verify_laws, LawReport, LawSuite};
use crate::oracle::{self, Nat};
use crate::plum_div::{div_decimal, format_fixed, DivMethod};
use crate::table::wedge_table;
use crate::trace::{render_div_with, render_mul_with, Glyphs};

#[derive(Debug, Parser)]
#[command(name = "plum", version, about = "Plum-blossom product arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a ♣ b.
    Club {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Print the carry J(a ♣ b).
    Carry {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Print (a, b) ⋈ c, with the pair written as one two-digit numeral.
    Wedge {
        #[arg(allow_hyphen_values = true)]
        ab: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Print the wedge table for multiplier C.
    Table {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        ascii: bool,
    },
    /// Multiply two naturals.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value_t = MulChoice::Plum)]
        method: MulChoice,
        /// Segment length for the cross method.
        #[arg(long, default_value_t = 1)]
        segment: usize,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        ascii: bool,
    },
    /// Divide two naturals.
    Div {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value_t = DivChoice::Plum)]
        method: DivChoice,
        /// Fractional digits of the quotient.
        #[arg(long, default_value_t = 0)]
        decimals: usize,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        ascii: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteChoice::All)]
        suite: SuiteChoice,
        /// Exhaustive sweeps in the equivalence suites cover operands below this.
        #[arg(long, default_value_t = 10_000)]
        bound: u32,
        /// Random operand pairs in the equivalence suites.
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Run the seeded benchmark and emit CSV.
    Bench {
        /// Comma-separated operand digit counts.
        #[arg(long, value_delimiter = ',', default_values_t = [8usize, 16, 32, 64])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Comma-separated methods; default all.
        #[arg(long, value_delimiter = ',')]
        methods: Vec<String>,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MulChoice {
    Cross,
    Plum,
    Wedge,
    WedgeSingle,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DivChoice {
    Plum,
    Wedge,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteChoice {
    ClubsuitLaws,
    CarryTheorem,
    WedgeProps,
    WedgeTheorems,
    TablePatterns,
    MulEquiv,
    DivEquiv,
    All,
}

/// A failure, with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }

    fn arithmetic(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::DivisionByZero | Error::Underflow | Error::OracleMismatch { .. } => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::arithmetic(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line. `args[0]` is the program name.
pub fn run<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let rendered = e.render().to_string();
                    let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid usage");
                    let _ = writeln!(err, "plum: {}", line.trim_start_matches("error: "));
                    1
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "plum: {}", f.message);
            f.code
        }
    }
}

fn numeral(text: &str) -> std::result::Result<DigitString, Failure> {
    if text.trim_start().starts_with('-') {
        return Err(Failure::usage(format!("negative input {text:?} is not supported")));
    }
    Ok(parse(text)?)
}

fn small(text: &str) -> std::result::Result<i64, Failure> {
    numeral(text)?
        .to_u64()
        .filter(|&v| v <= u32::MAX as u64)
        .map(|v| v as i64)
        .ok_or_else(|| Failure::usage(format!("{text:?} is too large")))
}

fn digit(text: &str) -> std::result::Result<Digit, Failure> {
    let v = small(text)?;
    Digit::from_i64(v).map_err(Failure::from)
}

fn execute(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Club { a, b } => writeln!(out, "{}", clubsuit(small(&a)?, small(&b)?).get())?,
        Command::Carry { a, b } => writeln!(out, "{}", carry(small(&a)?, small(&b)?))?,
        Command::Wedge { ab, c } => {
            let pair = numeral(&ab)?;
            let ds = pair.digits();
            let (a, b) = match ds {
                [b] => (Digit::ZERO, *b),
                [a, b] => (*a, *b),
                _ => return Err(Failure::usage(format!("{ab:?} is not a two-digit pair"))),
            };
            writeln!(out, "{}", wedge(a, b, digit(&c)?))?;
        }
        Command::Table { c, csv, ascii } => {
            let table = wedge_table(digit(&c)?)?;
            if csv {
                write!(out, "{}", table.to_csv())?;
            } else {
                write!(out, "{}", table.to_text(ascii))?;
            }
        }
        Command::Mul { a, b, method, segment, trace, ascii } => {
            let (a, b) = (numeral(&a)?, numeral(&b)?);
            let method = match method {
                MulChoice::Oracle => {
                    writeln!(out, "{}", oracle::mul(&Nat::from(&a), &Nat::from(&b)))?;
                    return Ok(());
                }
                MulChoice::Cross => MulMethod::Cross,
                MulChoice::Plum => MulMethod::Plum,
                MulChoice::Wedge => MulMethod::Wedge,
                MulChoice::WedgeSingle => MulMethod::WedgeSingle,
            };
            let t = multiply(&a, &b, method, segment)?;
            if trace {
                write!(out, "{}", render_mul_with(&t, Glyphs::new(ascii)))?;
            }
            writeln!(out, "{}", t.product)?;
        }
        Command::Div { a, b, method, decimals, trace, ascii } => {
            let (a, b) = (numeral(&a)?, numeral(&b)?);
            let method = match method {
                DivChoice::Oracle => {
                    let (q, r) = oracle::divmod(&Nat::from(&a.shifted(decimals)), &Nat::from(&b))?;
                    writeln!(out, "{} r {}", format_fixed(&q.to_digit_string(), decimals), r)?;
                    return Ok(());
                }
                DivChoice::Plum => DivMethod::Plum,
                DivChoice::Wedge => DivMethod::Wedge,
            };
            let (q, r, t) = div_decimal(&a, &b, decimals, method)?;
            if trace {
                write!(out, "{}", render_div_with(&t, Glyphs::new(ascii)))?;
            }
            writeln!(out, "{q} r {r}")?;
        }
        Command::Verify { suite, bound, pairs, seed } => {
            let config = EquivConfig { bound, pairs, max_digits: 64, seed };
            return verify(suite, &config, out);
        }
        Command::Bench { sizes, trials, seed, methods, csv } => {
            let methods = if methods.is_empty() {
                BenchMethod::ALL.to_vec()
            } else {
                methods.iter().map(|m| m.parse()).collect::<crate::error::Result<Vec<BenchMethod>>>()?
            };
            let metrics = run_bench(&BenchConfig { sizes, trials, seed, methods })?;
            let text = to_csv(&metrics);
            match csv {
                Some(path) => std::fs::write(&path, text)?,
                None => write!(out, "{text}")?,
            }
        }
    }
    Ok(())
}

fn suite_reports(suite: SuiteChoice, config: &EquivConfig) -> Vec<(&'static str, Vec<LawReport>)> {
    let law = |s: LawSuite| (s.name(), verify_laws(s));
    match suite {
        SuiteChoice::ClubsuitLaws => vec![law(LawSuite::ClubsuitLaws)],
        SuiteChoice::CarryTheorem => vec![law(LawSuite::CarryTheorem)],
        SuiteChoice::WedgeProps => vec![law(LawSuite::WedgeProps)],
        SuiteChoice::WedgeTheorems => vec![law(LawSuite::WedgeTheorems)],
        SuiteChoice::TablePatterns => vec![law(LawSuite::TablePatterns)],
        SuiteChoice::MulEquiv => vec![("mul-equiv", mul_equivalence(config))],
        SuiteChoice::DivEquiv => vec![("div-equiv", div_equivalence(config))],
        SuiteChoice::All => {
            let mut all: Vec<_> = LawSuite::EACH.iter().map(|&s| law(s)).collect();
            all.push(("mul-equiv", mul_equivalence(config)));
            all.push(("div-equiv", div_equivalence(config)));
            all
        }
    }
}

fn verify(suite: SuiteChoice, config: &EquivConfig, out: &mut impl Write) -> Outcome {
    let mut failed = Vec::new();
    for (name, reports) in suite_reports(suite, config) {
        for r in &reports {
            writeln!(out, "  {r}")?;
            for v in &r.violations {
                writeln!(out, "    at {}: expected {}, got {}", v.input, v.expected, v.actual)?;
            }
        }
        let held = reports.iter().filter(|r| r.holds()).count();
        let status = if held == reports.len() { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {name}: {held}/{} checks hold", reports.len())?;
        if held != reports.len() {
            failed.push(name);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::arithmetic(format!("verification failed: {}", failed.join(", "))))
    }
}
