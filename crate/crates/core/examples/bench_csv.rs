//! A small seeded benchmark run, printed as CSV.
//!
//! `cargo run --release --example bench_csv -- 1234` changes the seed.

use plum_blossom::bench::to_csv;
use plum_blossom::{run_bench, BenchConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let config = BenchConfig {
        sizes: vec![4, 16, 64],
        trials: 20,
        seed,
        ..BenchConfig::default()
    };
    let metrics = run_bench(&config).expect("every product matches the oracle");
    print!("{}", to_csv(&metrics));
}
