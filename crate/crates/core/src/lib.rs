//! Long-integer arithmetic built from the plum-blossom product.
//!
//! `x ♣ y = ((x·y + 6) mod 10) − 6` keeps the units of a digit product as a
//! signed residue in `-6..=3`, and `J(x ♣ y) = (x·y − x ♣ y) / 10` is what
//! moves to the next column. The wedge product `(a, b) ⋈ c = a ♣ c + J(b ♣ c)`
//! folds the carry from the digit below into one small signed value.
//!
//! The crate offers:
//!
//! * digit primitives, wedge tables and exhaustive law checks ([`digit`],
//!   [`table`], [`laws`]);
//! * digit strings, signed column strings and normalization ([`digit_string`]);
//! * column multiplication by cross products, plum-blossom products or wedge
//!   products, with full traces ([`cross_mul`]);
//! * long division by partial plum-blossom products ([`plum_div`]);
//! * plain reference arithmetic to check all of the above ([`oracle`],
//!   [`equivalence`]);
//! * text rendering of traces ([`trace`]), a seeded benchmark ([`bench`]) and
//!   the `plum` command line ([`cli`]).
//!
//! ```
//! use plum_blossom::{plum_mul, divmod, DigitString, DivMethod};
//!
//! let a: DigitString = "456".parse().unwrap();
//! let b: DigitString = "789".parse().unwrap();
//! let (product, trace) = plum_mul(&a, &b);
//! assert_eq!(product.to_string(), "359784");
//! assert_eq!(trace.unresolved.columns(), &[35, 9, 8, -2, 4]);
//!
//! let (q, r, _) = divmod(&"56789".parse().unwrap(), &"369".parse().unwrap(), DivMethod::Plum).unwrap();
//! assert_eq!((q.to_string(), r.to_string()), ("153".into(), "332".into()));
//! ```

pub mod bench;
pub mod cli;
pub mod compact;
pub mod cross_mul;
pub mod digit;
pub mod digit_string;
pub mod equivalence;
pub mod error;
pub mod laws;
pub mod oracle;
pub mod plum_div;
pub mod table;
pub mod trace;

pub use bench::{run_bench, BenchConfig, BenchMethod, BenchMetrics};
pub use cross_mul::{multiply, plum_mul, rapid_mul, wedge_mul, wedge_mul_single, MulMethod, MulTrace};
pub use digit::{carry, carry_closed_form, clubsuit, delta, wedge, CarrySplit, Digit, SignedResidue};
pub use digit_string::{normalize, segment, value_of, DigitString, SegmentString, SignedDigitString};
pub use error::{Error, Result};
pub use laws::{verify_laws, LawReport, LawSuite, Violation};
pub use plum_div::{div_decimal, divmod, DivMethod, DivisionTrace};
pub use table::{wedge_table, WedgeTable};
pub use trace::{render_div, render_mul, RenderedTrace};
