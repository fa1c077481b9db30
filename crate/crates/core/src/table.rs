//! Wedge-product tables `(a, b) ⋈ c` for a fixed multiplier `c`.

use std::fmt::Write as _;

use crate::digit::{wedge, Digit};
use crate::error::{Error, Result};

/// A 10×10 grid of `(a, b) ⋈ c`; rows are the tens digit `a`, columns the ones digit `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeTable {
    multiplier: Digit,
    cells: [[i8; 10]; 10],
}

impl WedgeTable {
    pub fn multiplier(&self) -> Digit {
        self.multiplier
    }

    pub fn cells(&self) -> &[[i8; 10]; 10] {
        &self.cells
    }

    pub fn get(&self, a: Digit, b: Digit) -> i64 {
        self.cells[a.get() as usize][b.get() as usize] as i64
    }

    pub fn row(&self, a: Digit) -> &[i8; 10] {
        &self.cells[a.get() as usize]
    }

    /// Header `⋈(c=K)` (or `><(c=K)` in ASCII mode) followed by ten rows of
    /// ten right-aligned values, each three characters wide and separated by
    /// a single space.
    pub fn to_text(&self, ascii: bool) -> String {
        let mut out = String::new();
        let glyph = if ascii { "><" } else { "⋈" };
        let _ = writeln!(out, "{glyph}(c={})", self.multiplier);
        for row in &self.cells {
            let line: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// `a,b,value` rows under an `a,b,value` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,value\n");
        for (a, row) in self.cells.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                let _ = writeln!(out, "{a},{b},{v}");
            }
        }
        out
    }
}

/// Builds the table for multiplier `c` straight from the wedge definition.
pub fn wedge_table(c: Digit) -> Result<WedgeTable> {
    if c == Digit::ZERO {
        return Err(Error::DigitOutOfRange(0, "1..=9"));
    }
    let mut cells = [[0i8; 10]; 10];
    for a in Digit::all() {
        for b in Digit::all() {
            cells[a.get() as usize][b.get() as usize] = wedge(a, b, c) as i8;
        }
    }
    Ok(WedgeTable { multiplier: c, cells })
}
