//! Allocation-free versions of the multiplication and division methods for
//! machine-word operands.
//!
//! These compute the same columns and partial products as the traced
//! versions in [`crate::cross_mul`] and [`crate::plum_div`], but keep
//! everything in fixed buffers and return only the final value. They exist
//! for sweeps over millions of operand pairs.

use std::sync::OnceLock;

use crate::cross_mul::MulMethod;
use crate::digit::{carry, clubsuit, wedge_raw};
use crate::plum_div::DivMethod;

/// Largest accepted operand plus one; products stay below `10^18`.
pub const LIMIT: u32 = 1_000_000_000;

const POW10: [u32; 10] = [1, 10, 100, 1_000, 10_000, 100_000, 1_000_000, 10_000_000, 100_000_000, 1_000_000_000];

/// A number below [`LIMIT`] with its decimal digits, most significant first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Operand {
    value: u32,
    digits: [u8; 9],
    len: u8,
}

impl Operand {
    pub fn new(value: u32) -> Option<Operand> {
        if value >= LIMIT {
            return None;
        }
        let mut digits = [0u8; 9];
        let mut len = 1;
        while len < 9 && POW10[len] <= value {
            len += 1;
        }
        let mut v = value;
        for k in (0..len).rev() {
            digits[k] = (v % 10) as u8;
            v /= 10;
        }
        Some(Operand { value, digits, len: len as u8 })
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits[..self.len as usize]
    }
}

fn operand(v: u32) -> Operand {
    Operand::new(v).expect("operand below compact::LIMIT")
}

/// `♣`, `J` and `⋈` on digits, tabulated from [`crate::digit`].
struct Tables {
    club: [[i8; 10]; 10],
    carry: [[i8; 10]; 10],
    wedge: [[[i8; 10]; 10]; 10],
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut t = Tables { club: [[0; 10]; 10], carry: [[0; 10]; 10], wedge: [[[0; 10]; 10]; 10] };
        for x in 0..10 {
            for y in 0..10 {
                t.club[x][y] = clubsuit(x as i64, y as i64).get() as i8;
                t.carry[x][y] = carry(x as i64, y as i64) as i8;
                for c in 0..10 {
                    t.wedge[x][y][c] = wedge_raw(x as i64, y as i64, c as i64) as i8;
                }
            }
        }
        t
    })
}

/// Value of columns read most significant first in the given radix.
#[inline]
fn columns_value(cols: &[i64], radix: i64) -> u64 {
    let v = cols.iter().fold(0i64, |acc, &c| acc * radix + c);
    u64::try_from(v).expect("columns of a product of naturals are non-negative")
}

/// Cross-product method on segments of `segment_len` digits (1 to 6).
pub fn cross_operands(a: &Operand, b: &Operand, segment_len: usize) -> u64 {
    assert!((1..=6).contains(&segment_len), "segment length must be 1..=6");
    let segs = |x: &Operand| {
        let mut buf = [0i64; 9];
        let ds = x.digits();
        let n = ds.len().div_ceil(segment_len);
        // the first segment takes whatever is left over on the left
        let mut left = ds.len() - (n - 1) * segment_len;
        let mut k = 0;
        for &d in ds {
            if left == 0 {
                k += 1;
                left = segment_len;
            }
            buf[k] = buf[k] * 10 + d as i64;
            left -= 1;
        }
        (buf, n)
    };
    let (xs, m) = segs(a);
    let (ys, n) = segs(b);
    let mut cols = [0i64; 17];
    for i in 0..m {
        for j in 0..n {
            cols[i + j] += xs[i] * ys[j];
        }
    }
    columns_value(&cols[..m + n - 1], POW10[segment_len] as i64)
}

/// Plum-blossom method: residues in place, carries one column up, the
/// leading product whole and the trailing product split into units and tens.
pub fn plum_operands(a: &Operand, b: &Operand) -> u64 {
    if a.value == 0 || b.value == 0 {
        return 0;
    }
    let t = tables();
    let (xs, ys) = (a.digits(), b.digits());
    let (m, n) = (xs.len(), ys.len());
    let mut cols = [0i64; 17];
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in ys.iter().enumerate() {
            let (x, y) = (x as usize, y as usize);
            let col = i + j;
            if col == 0 {
                cols[0] += (x * y) as i64;
            } else if i == m - 1 && j == n - 1 {
                cols[col] += (x * y % 10) as i64;
                cols[col - 1] += (x * y / 10) as i64;
            } else {
                cols[col] += t.club[x][y] as i64;
                cols[col - 1] += t.carry[x][y] as i64;
            }
        }
    }
    columns_value(&cols[..m + n - 1], 10)
}

/// Wedge method over the zero-padded windows of `a`.
pub fn wedge_operands(a: &Operand, b: &Operand) -> u64 {
    if a.value == 0 || b.value == 0 {
        return 0;
    }
    let t = tables();
    let (xs, ys) = (a.digits(), b.digits());
    let mut padded = [0u8; 11];
    padded[1..=xs.len()].copy_from_slice(xs);
    let windows = xs.len() + 1;
    let mut cols = [0i64; 18];
    for i in 0..windows {
        let pair = &t.wedge[padded[i] as usize][padded[i + 1] as usize];
        for (j, &y) in ys.iter().enumerate() {
            cols[i + j] += pair[y as usize] as i64;
        }
    }
    columns_value(&cols[..windows + ys.len() - 1], 10)
}

/// Runs `method` on `a × b`; `segment_len` only matters for the cross method.
/// The single-digit wedge method requires `b < 10`.
pub fn product_operands(a: &Operand, b: &Operand, method: MulMethod, segment_len: usize) -> u64 {
    match method {
        MulMethod::Cross => cross_operands(a, b, segment_len),
        MulMethod::Plum => plum_operands(a, b),
        MulMethod::Wedge => wedge_operands(a, b),
        MulMethod::WedgeSingle => {
            assert!(b.len() == 1, "single-digit wedge needs a one-digit multiplier");
            wedge_operands(a, b)
        }
    }
}

pub fn cross_product(a: u32, b: u32, segment_len: usize) -> u64 {
    cross_operands(&operand(a), &operand(b), segment_len)
}

pub fn plum_product(a: u32, b: u32) -> u64 {
    plum_operands(&operand(a), &operand(b))
}

pub fn wedge_product(a: u32, b: u32) -> u64 {
    wedge_operands(&operand(a), &operand(b))
}

/// [`product_operands`] on plain numbers below [`LIMIT`].
pub fn product(a: u32, b: u32, method: MulMethod, segment_len: usize) -> u64 {
    product_operands(&operand(a), &operand(b), method, segment_len)
}

/// Partial-product division on plain numbers below [`LIMIT`]. Returns
/// `(quotient, remainder)`.
///
/// # Panics
///
/// If `b` is zero.
pub fn divmod(a: u32, b: u32, method: DivMethod) -> (u32, u32) {
    let (q, r, _) = divmod_operands(&operand(a), &operand(b), method);
    (q, r)
}

/// Partial-product division that also returns `Σ PP_k·10^(s−k)`, which
/// should be `b·q`.
///
/// Quotient digits not yet chosen are held as zeros, which contribute
/// nothing to `PP_n⁰`, exactly like the absent terms they stand for.
pub fn divmod_operands(a: &Operand, b: &Operand, method: DivMethod) -> (u32, u32, i64) {
    assert!(b.value != 0, "division by zero");
    let t = tables();
    let (xs, bs) = (a.digits(), b.digits());
    let (s, tl) = (xs.len(), bs.len());
    if s < tl {
        return (0, a.value, 0);
    }
    let q_len = s - tl + 1;
    // c[OFF + j - 1] is c_j; the padding on the left stands for j < 1
    const OFF: usize = 9;
    let mut c = [0u8; OFF + 10];
    let mut remaining = a.value;
    let mut r: i64 = 0;
    let mut rebuilt: i64 = 0;
    let mut q: u32 = 0;
    let b1 = bs[0] as i64;
    let b2 = bs.get(1).copied().unwrap_or(0) as usize;
    for n in 1..=s {
        let mut pp0 = 0i64;
        match method {
            DivMethod::Plum => {
                for i in 2..=tl {
                    let cj = c[OFF + n - i] as usize;
                    pp0 += t.club[bs[i - 1] as usize][cj] as i64;
                }
                for i in 3..=tl {
                    let cj = c[OFF + n + 1 - i] as usize;
                    pp0 += t.carry[bs[i - 1] as usize][cj] as i64;
                }
            }
            DivMethod::Wedge => {
                for i in 2..=tl {
                    let cj = c[OFF + n - i] as usize;
                    let next = bs.get(i).copied().unwrap_or(0) as usize;
                    pp0 += t.wedge[bs[i - 1] as usize][next][cj] as i64;
                }
            }
        }
        r = 10 * r + xs[n - 1] as i64 - pp0;
        let mut pp = pp0;
        if n <= q_len {
            let unit = b.value * POW10[q_len - n];
            let cn = remaining / unit;
            remaining -= cn * unit;
            c[OFF + n - 1] = cn as u8;
            q = q * 10 + cn;
            let pp1 = b1 * cn as i64 + t.carry[b2][cn as usize] as i64;
            r -= pp1;
            pp += pp1;
        }
        rebuilt = rebuilt * 10 + pp;
    }
    let r = u32::try_from(r).expect("final remainder lies in 0..b");
    (q, r, rebuilt)
}
