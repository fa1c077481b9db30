//! Multiplies two numbers with every column method and prints the traces.
//!
//! `cargo run --example multiply -- 456 789`

use plum_blossom::{multiply, render_mul, DigitString, MulMethod};

fn main() {
    let mut args = std::env::args().skip(1);
    let a: DigitString = args.next().as_deref().unwrap_or("348").parse().expect("first operand");
    let b: DigitString = args.next().as_deref().unwrap_or("697").parse().expect("second operand");

    for (method, segment) in [(MulMethod::Cross, 1), (MulMethod::Cross, 2), (MulMethod::Plum, 1), (MulMethod::Wedge, 1)] {
        let trace = multiply(&a, &b, method, segment).expect("valid segment length");
        print!("{}", render_mul(&trace));
        println!(
            "  {} digit products, {} carries, widest column {}",
            trace.digit_mults(),
            trace.carries,
            trace.max_abs_column()
        );
        println!();
    }

    if let Some(&c) = b.digits().last() {
        let trace = multiply(&a, &DigitString::from_digits([c]), MulMethod::WedgeSingle, 1).unwrap();
        print!("{}", render_mul(&trace));
    }
}
