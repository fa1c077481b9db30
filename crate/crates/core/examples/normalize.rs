//! Signed column strings, segmentation and carry resolution.

use plum_blossom::digit_string::normalize_counted;
use plum_blossom::{normalize, segment, value_of, DigitString, SignedDigitString};

fn main() {
    let columns = SignedDigitString::new(vec![35, 9, 8, -2, 4]);
    let (digits, carries) = normalize_counted(&columns, 1).unwrap();
    println!("{columns} has value {} and resolves to {digits} after {carries} carries", value_of(&columns));

    let negative = SignedDigitString::new(vec![2, -12, 3]);
    println!("{negative} resolves to {}", normalize(&negative, 1).unwrap());

    let n: DigitString = "8_701_824".parse().unwrap();
    for l in 1..=4 {
        let s = segment(&n, l).unwrap();
        println!("L={l}: {:?} -> {}", s.segments(), s.reassemble());
    }

    let wide = SignedDigitString::new(vec![-1, 2900, 2204]);
    println!("{wide} in radix 100 resolves to {}", normalize(&wide, 2).unwrap());
}
