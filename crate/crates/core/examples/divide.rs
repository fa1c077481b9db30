//! Long division by partial products, with the vertical layout.
//!
//! `cargo run --example divide -- 2728018 3456 wedge`

use plum_blossom::trace::division_rows;
use plum_blossom::{div_decimal, divmod, render_div, DigitString, DivMethod};

fn main() {
    let mut args = std::env::args().skip(1);
    let a: DigitString = args.next().as_deref().unwrap_or("56789").parse().expect("dividend");
    let b: DigitString = args.next().as_deref().unwrap_or("369").parse().expect("divisor");
    let method: DivMethod = args.next().as_deref().unwrap_or("plum").parse().expect("plum or wedge");

    let (q, r, trace) = divmod(&a, &b, method).expect("non-zero divisor");
    print!("{}", render_div(&trace));
    println!();

    let subtrahends: Vec<String> = division_rows(&trace)
        .iter()
        .filter(|row| row.kind.is_subtrahend())
        .map(|row| row.value.to_string())
        .collect();
    println!("subtracted: {}", subtrahends.join(", "));
    println!("Σ PP·10^k = {} = {b} × {q}", trace.reconstructed_product());
    println!("{a} = {b} × {q} + {r}");

    let (fixed, scaled_r, _) = div_decimal(&a, &b, 2, method).unwrap();
    println!("to two places: {fixed} r {scaled_r}");
}
