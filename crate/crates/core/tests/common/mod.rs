#![allow(dead_code)]

pub mod published_tables;

use plum_blossom::DigitString;

pub fn ds(s: &str) -> DigitString {
    s.parse().expect("test numeral")
}

/// Runs the CLI in-process and returns (exit code, stdout, stderr).
pub fn plum(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("plum").chain(args.iter().copied());
    let code = plum_blossom::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
