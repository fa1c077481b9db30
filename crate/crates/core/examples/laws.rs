//! Runs every digit-level law suite and prints one line per law.

use plum_blossom::{verify_laws, LawSuite};

fn main() {
    let mut failed = 0;
    for suite in LawSuite::EACH {
        println!("[{suite}]");
        for report in verify_laws(suite) {
            println!("  {report}");
            for v in report.violations.iter().take(3) {
                println!("    at {}: expected {}, got {}", v.input, v.expected, v.actual);
            }
            failed += usize::from(!report.holds());
        }
    }
    if failed > 0 {
        eprintln!("{failed} laws failed");
        std::process::exit(1);
    }
}
