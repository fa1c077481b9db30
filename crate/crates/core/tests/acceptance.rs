//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::time::Instant;

use num_bigint::BigInt;
use plum_blossom::bench::to_csv;
use plum_blossom::cross_mul::{plum_mul, rapid_mul, wedge_mul, wedge_mul_single, MulTrace};
use plum_blossom::digit::{Digit, WEDGE_MAX, WEDGE_MIN};
use plum_blossom::digit_string::{normalize, value_of, SignedDigitString};
use plum_blossom::equivalence::{div_exhaustive, div_random, mul_exhaustive, mul_random};
use plum_blossom::laws::{verify_laws, wedge_bounds, LawReport, LawSuite, WEDGE_MAX_WITHOUT_NINE};
use plum_blossom::oracle::{self, Nat};
use plum_blossom::plum_div::{div_decimal, divmod, DivMethod, DivisionTrace};
use plum_blossom::table::wedge_table;
use plum_blossom::trace::division_rows;
use plum_blossom::{run_bench, BenchConfig, BenchMethod, DigitString};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::published_tables::PUBLISHED_WEDGE_TABLES;
use common::{ds, plum};

const SEED: u64 = 20_240_601;
const EXHAUSTIVE_BOUND: u32 = 10_000;
const RANDOM_PAIRS: usize = 1000;
const RANDOM_DIGITS: usize = 64;

/// The failed checks of one criterion.
#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn reports(&mut self, reports: &[LawReport]) {
        for r in reports {
            if !r.holds() {
                let first = r
                    .violations
                    .first()
                    .map(|v| format!(" (first at {}: expected {}, got {})", v.input, v.expected, v.actual))
                    .unwrap_or_default();
                self.failures.push(format!("{r}{first}"));
            }
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

fn oracle_product(a: &DigitString, b: &DigitString) -> DigitString {
    oracle::mul(&Nat::from(a), &Nat::from(b)).to_digit_string()
}

fn oracle_divmod(a: &DigitString, b: &DigitString) -> (DigitString, DigitString) {
    let (q, r) = oracle::divmod(&Nat::from(a), &Nat::from(b)).expect("non-zero divisor");
    (q.to_digit_string(), r.to_digit_string())
}

fn reconstruction_holds(t: &DivisionTrace) -> bool {
    t.reconstructed_product() == oracle_product(&t.divisor, &t.quotient).to_bigint()
}

fn product_case(o: &mut Outcome, label: &str, trace: &MulTrace, product: &str, columns: Option<&[i64]>) {
    let want = oracle_product(&trace.lhs, &trace.rhs);
    o.eq(want.to_string().as_str(), product, &format!("{label} oracle vs published product"));
    o.eq(&trace.product, &want, &format!("{label} product"));
    if let Some(cols) = columns {
        o.eq(trace.unresolved.columns(), cols, &format!("{label} columns"));
    }
}

fn c1_worked_products() -> Outcome {
    let mut o = Outcome::default();
    let (_, t) = rapid_mul(&ds("123"), &ds("456"), 1).unwrap();
    product_case(&mut o, "123×456 cross", &t, "56088", Some(&[4, 13, 28, 27, 18]));
    for l in [1, 2] {
        let (_, t) = rapid_mul(&ds("2976"), &ds("2924"), l).unwrap();
        product_case(&mut o, &format!("2976×2924 cross L={l}"), &t, "8701824", None);
    }
    let (_, t) = plum_mul(&ds("386"), &ds("47"));
    product_case(&mut o, "386×47 plum", &t, "18142", Some(&[17, 12, -6, 2]));
    let (_, t) = plum_mul(&ds("456"), &ds("789"));
    product_case(&mut o, "456×789 plum", &t, "359784", Some(&[35, 9, 8, -2, 4]));
    let (_, t) = wedge_mul_single(&ds("35649758"), Digit::NINE);
    product_case(&mut o, "35649758×9 wedge", &t, "320847822", Some(&[3, 2, 1, -2, 4, 7, 8, 2, 2]));
    let (_, t) = wedge_mul(&ds("348"), &ds("697"));
    product_case(&mut o, "348×697 wedge", &t, "242556", Some(&[2, 4, 2, 5, 6, -4]));
    o
}

fn subtrahends(t: &DivisionTrace) -> Vec<BigInt> {
    division_rows(t)
        .into_iter()
        .filter(|r| r.kind.is_subtrahend())
        .map(|r| r.value)
        .collect()
}

fn big(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

/// Division traces of the published examples, shared with criterion 7.
fn published_divisions() -> Vec<DivisionTrace> {
    [
        ("56789", "369", DivMethod::Plum),
        ("5678900", "369", DivMethod::Plum),
        ("2728018", "3456", DivMethod::Plum),
        ("242558", "697", DivMethod::Wedge),
    ]
    .iter()
    .map(|&(a, b, m)| divmod(&ds(a), &ds(b), m).unwrap().2)
    .collect()
}

fn c2_worked_divisions() -> Outcome {
    let mut o = Outcome::default();
    let traces = published_divisions();
    let want = [("153", "332"), ("15389", "359"), ("789", "1234"), ("348", "2")];
    for (t, (q, r)) in traces.iter().zip(want) {
        let label = format!("{}÷{} [{}]", t.dividend, t.divisor, t.method);
        let (oq, or) = oracle_divmod(&t.dividend, &t.divisor);
        o.eq((oq.to_string(), or.to_string()), (q.to_string(), r.to_string()), &format!("{label} oracle vs published"));
        o.eq((&t.quotient, &t.remainder), (&oq, &or), &format!("{label} result"));
    }
    let remainders: Vec<BigInt> = traces[0].steps.iter().map(|s| s.remainder.clone()).collect();
    o.eq(remainders, big(&[1, 1, 2, 32, 332]), "56789÷369 step remainders");
    o.eq(subtrahends(&traces[0]), big(&[4, -3, 18, 4, 11, -4, -3]), "56789÷369 subtrahends");
    o.eq(subtrahends(&traces[3]), big(&[21, -1, 28, 0, 55, 6, -4]), "242558÷697 wedge pp values");

    let (fixed, r, _) = div_decimal(&ds("56789"), &ds("369"), 2, DivMethod::Plum).unwrap();
    o.eq((fixed.as_str(), r.to_string().as_str()), ("153.89", "359"), "56789÷369 to two places");
    let (code, out, _) = plum(&["div", "56789", "369", "--decimals", "2"]);
    o.eq((code, out.as_str()), (0, "153.89 r 359\n"), "cli div --decimals 2");
    o
}

fn c3_law_suites() -> Outcome {
    let mut o = Outcome::default();
    for suite in [LawSuite::ClubsuitLaws, LawSuite::CarryTheorem, LawSuite::WedgeProps, LawSuite::WedgeTheorems] {
        let reports = verify_laws(suite);
        o.check(!reports.is_empty(), format!("{suite} is empty"));
        o.reports(&reports);
        let cases: usize = reports.iter().map(|r| r.domain_size).sum();
        o.note(format!("{suite}: {} laws, {cases} cases", reports.len()));
    }
    let carry = verify_laws(LawSuite::CarryTheorem);
    o.check(carry[0].domain_size >= 45, "carry theorem covers every pair a ≤ b");
    o
}

fn c4_tables_and_patterns() -> Outcome {
    let mut o = Outcome::default();
    let mut cells = 0;
    for c in 1..=9u8 {
        let table = wedge_table(Digit::new(c).unwrap()).unwrap();
        for (a, (computed, published)) in table.cells().iter().zip(&PUBLISHED_WEDGE_TABLES[c as usize - 1]).enumerate() {
            for (b, (&got, &want)) in computed.iter().zip(published).enumerate() {
                cells += 1;
                o.check(got == want, format!("table c={c} cell ({a},{b}): computed {got}, published {want}"));
            }
        }
    }
    o.eq(cells, 900, "cells compared");
    let patterns = verify_laws(LawSuite::TablePatterns);
    o.eq(patterns.len(), 20, "pattern statements");
    o.reports(&patterns);
    o.note(format!("{cells} cells, {} patterns", patterns.len()));
    o
}

fn c5_wedge_bounds() -> Outcome {
    let mut o = Outcome::default();
    let b = wedge_bounds();
    o.eq((b.min, b.max), (-6, 11), "brute-force min and max");
    o.eq((b.min, b.max), (WEDGE_MIN, WEDGE_MAX), "bounds constants");
    o.eq(b.max_without_nine, WEDGE_MAX_WITHOUT_NINE, "max over c ≠ 9");
    o.note(format!("max {} at {:?}; max over c ≠ 9 is {}", b.max, b.argmax, b.max_without_nine));
    o
}

/// Reports computed once and checked by more than one criterion.
#[derive(Default)]
struct Shared {
    timing: Vec<String>,
    reconstruction: Vec<LawReport>,
}

fn c6_oracle_equivalence(shared: &mut Shared) -> Outcome {
    let mut o = Outcome::default();
    let start = Instant::now();
    let exhaustive: Vec<LawReport> = mul_exhaustive(EXHAUSTIVE_BOUND)
        .into_iter()
        .chain(div_exhaustive(EXHAUSTIVE_BOUND))
        .collect();
    shared.timing.push(format!("exhaustive sweeps {:.1?}", start.elapsed()));
    o.reports(&exhaustive);
    let pairs: usize = exhaustive.iter().map(|r| r.domain_size).sum();

    let start = Instant::now();
    let random: Vec<LawReport> = mul_random(RANDOM_PAIRS, RANDOM_DIGITS, SEED)
        .into_iter()
        .chain(div_random(RANDOM_PAIRS, RANDOM_DIGITS, SEED))
        .collect();
    shared.timing.push(format!("random sweeps {:.1?}", start.elapsed()));
    shared.reconstruction = exhaustive
        .iter()
        .chain(&random)
        .filter(|r| r.law.contains("reconstruction"))
        .cloned()
        .collect();
    o.reports(&random);
    for r in &random {
        o.check(r.domain_size >= RANDOM_PAIRS, format!("{} ran only {} cases", r.law, r.domain_size));
    }
    o.note(format!(
        "{} exhaustive reports over {pairs} cases below {EXHAUSTIVE_BOUND}, {} random reports on {RANDOM_PAIRS} pairs up to {RANDOM_DIGITS} digits",
        exhaustive.len(),
        random.len()
    ));
    o
}

fn random_signed(rng: &mut ChaCha8Rng) -> SignedDigitString {
    let len = rng.gen_range(1..=24);
    let mut cols: Vec<i64> = (0..len).map(|_| rng.gen_range(-1000..=1000)).collect();
    if rng.gen_bool(0.8) {
        cols[0] = rng.gen_range(1000..=5000);
    }
    SignedDigitString::new(cols)
}

fn c7_structural_invariants(shared: &mut Shared) -> Outcome {
    let mut o = Outcome::default();
    for t in published_divisions() {
        o.check(reconstruction_holds(&t), format!("reconstruction on {}÷{}", t.dividend, t.divisor));
    }
    o.eq(shared.reconstruction.len(), 3, "reconstruction reports from criterion 6");
    o.reports(&shared.reconstruction);
    let traces: usize = shared.reconstruction.iter().map(|r| r.domain_size).sum();
    o.note(format!("reconstruction checked on {traces} division traces"));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut negative, mut kept) = (0, 0);
    for _ in 0..10_000 {
        let s = random_signed(&mut rng);
        let value = value_of(&s);
        match normalize(&s, 1) {
            Ok(d) => {
                kept += 1;
                o.check(d.to_bigint() == value, format!("normalize {s}"));
            }
            Err(_) => {
                negative += 1;
                o.check(value < BigInt::from(0), format!("normalize rejected non-negative {s}"));
            }
        }
    }
    o.note(format!("normalize: {kept} values preserved, {negative} negatives rejected"));

    for _ in 0..1000 {
        let a = plum_blossom::equivalence::random_digits(&mut rng, RANDOM_DIGITS);
        let c = Digit::new(rng.gen_range(0..=9)).unwrap();
        let (_, t) = wedge_mul_single(&a, c);
        o.check(
            t.unresolved.columns().iter().all(|v| (WEDGE_MIN..=WEDGE_MAX).contains(v)),
            format!("wedge_mul_single {a}×{c} columns {}", t.unresolved),
        );
        o.eq(t.unresolved.len(), a.len() + 1, "wedge_mul_single column count");
    }
    o
}

fn without_elapsed(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|line| line.rsplit_once(',').map(|(head, _)| head.to_string()).unwrap_or_default())
        .collect()
}

fn c8_bench_determinism() -> Outcome {
    let mut o = Outcome::default();
    let config = BenchConfig {
        sizes: vec![4, 16, 64],
        trials: 25,
        seed: SEED,
        methods: BenchMethod::ALL.to_vec(),
    };
    let first = to_csv(&run_bench(&config).unwrap());
    let second = to_csv(&run_bench(&config).unwrap());
    o.eq(without_elapsed(&first), without_elapsed(&second), "CSV without elapsed_ns");
    o.eq(first.lines().count(), 1 + 5 * 3, "CSV rows");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let path = path.to_str().unwrap();
    let args = ["bench", "--sizes", "4,16", "--trials", "10", "--seed", "9", "--csv", path];
    let (code, _, _) = plum(&args);
    let a = std::fs::read_to_string(path).unwrap_or_default();
    let (code2, _, _) = plum(&args);
    let b = std::fs::read_to_string(path).unwrap_or_default();
    o.eq((code, code2), (0, 0), "cli bench exit codes");
    o.eq(without_elapsed(&a), without_elapsed(&b), "cli bench CSV without elapsed_ns");
    o
}

type Criterion = Box<dyn FnOnce(&mut Shared) -> Outcome>;

fn main() {
    let started = Instant::now();
    let mut shared = Shared::default();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 worked products", Box::new(|_| c1_worked_products())),
        ("2 worked divisions", Box::new(|_| c2_worked_divisions())),
        ("3 law suites", Box::new(|_| c3_law_suites())),
        ("4 tables and patterns", Box::new(|_| c4_tables_and_patterns())),
        ("5 wedge bounds", Box::new(|_| c5_wedge_bounds())),
        ("6 oracle equivalence", Box::new(c6_oracle_equivalence)),
        ("7 structural invariants", Box::new(c7_structural_invariants)),
        ("8 bench determinism", Box::new(|_| c8_bench_determinism())),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let outcome = run(&mut shared);
        let status = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} criterion {name} [{:.1?}]", t.elapsed());
        for note in &outcome.notes {
            println!("     {note}");
        }
        for f in outcome.failures.iter().take(10) {
            println!("     ! {f}");
        }
        failed += usize::from(!outcome.failures.is_empty());
    }
    for t in &shared.timing {
        println!("     {t}");
    }
    println!("acceptance: {} of 8 criteria passed in {:.1?}", 8 - failed, started.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
