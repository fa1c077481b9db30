//! Checks every method against the reference arithmetic: exhaustively below
//! a bound, then on random long operands.
//!
//! `cargo run --release --example equivalence -- 10000` runs the full sweep.

use plum_blossom::equivalence::{div_equivalence, mul_equivalence, EquivConfig};

fn main() {
    let bound = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(300);
    let config = EquivConfig { bound, pairs: 200, ..EquivConfig::default() };
    let mut ok = true;
    for report in mul_equivalence(&config).into_iter().chain(div_equivalence(&config)) {
        println!("{report}");
        ok &= report.holds();
    }
    if !ok {
        std::process::exit(1);
    }
}
