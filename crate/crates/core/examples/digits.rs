//! Digit-level primitives: `♣`, its carry, the wedge product and one table.
//!
//! `cargo run --example digits -- 7` prints the table for another multiplier.

use plum_blossom::{carry, carry_closed_form, clubsuit, wedge, wedge_table, CarrySplit, Digit};

fn main() {
    let c: u8 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let c = Digit::new(c).expect("multiplier must be a digit");

    for (x, y) in [(7, 8), (4, 6), (9, 9), (2, 3)] {
        let split = CarrySplit::of(x, y);
        println!(
            "{x}×{y} = {} = 10·{} + ({})",
            split.value(),
            carry(x, y),
            clubsuit(x, y).get()
        );
    }

    let (a, b) = (Digit::new(3).unwrap(), Digit::new(8).unwrap());
    println!("J(3♣8) = {} by the closed form", carry_closed_form(a, b).unwrap());

    let (hi, lo, m) = (Digit::new(3).unwrap(), Digit::new(5).unwrap(), Digit::new(7).unwrap());
    println!("(3,5)⋈7 = {}", wedge(hi, lo, m));
    println!();

    print!("{}", wedge_table(c).unwrap().to_text(false));
}
