//! The exact scalar tower `Q ⊂ Q(i) ⊂ Q(zeta_N)`.
//!
//! Demonstrates cyclotomic polynomials, exact field operations with
//! automatic conductor promotion, inversion via extended gcd, and the
//! float adapter used on output paths.
//!
//! Run with: cargo run --example cyclotomic_arithmetic

use kleinalg::scalars::{cyclotomic_polynomial, parse_scalar, rat, Cyclotomic};

fn show_poly(n: u32) {
    let coeffs = cyclotomic_polynomial(n);
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match (k, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".into(),
            (1, -1) => "-x".into(),
            (k, 1) => format!("x^{k}"),
            (k, -1) => format!("-x^{k}"),
            (k, c) => format!("{c}x^{k}"),
        })
        .collect();
    println!("Phi_{n}(x) = {}", terms.join(" + ").replace("+ -", "- "));
}

fn main() {
    println!("--- cyclotomic polynomials ---");
    for n in [1, 2, 4, 6, 8, 12] {
        show_poly(n);
    }

    println!("\n--- arithmetic in Q(i) ---");
    let i = Cyclotomic::i();
    println!("i * i = {}", i.checked_mul(&i).unwrap());
    let a = Cyclotomic::gaussian(rat(1, 1), rat(1, 1));
    let b = Cyclotomic::gaussian(rat(1, 1), rat(-1, 1));
    println!("(1 + i)(1 - i) = {}", a.checked_mul(&b).unwrap());

    println!("\n--- inversion via extended gcd mod Phi_8 ---");
    let z8 = Cyclotomic::root_of_unity(8, 1);
    let inv = z8.inverse().unwrap();
    println!("zeta(8)^-1      = {inv}");
    println!("zeta(8,7)       = {}", Cyclotomic::root_of_unity(8, 7));
    println!("product         = {}", z8.checked_mul(&inv).unwrap());

    println!("\n--- conductor promotion ---");
    // i lives at conductor 4; zeta_12^3 is the same element at conductor 12
    let i12 = Cyclotomic::root_of_unity(12, 3);
    println!("i == zeta(12,3): {}", i == i12);
    let mixed = i.checked_add(&Cyclotomic::root_of_unity(12, 1)).unwrap();
    println!("i + zeta(12) = {mixed} (conductor {})", mixed.conductor());

    println!("\n--- the scalar literal grammar ---");
    for text in ["3/2", "1 + 2*i", "zeta(8,1)*zeta(8,-1)", "-(1 - i)"] {
        println!("parse({text:?}) = {}", parse_scalar(text).unwrap());
    }

    println!("\n--- float adapter (output paths only) ---");
    for value in [Cyclotomic::i(), Cyclotomic::root_of_unity(8, 1)] {
        let f = value.to_float();
        println!("{value} ~ {:.6} + {:.6}i", f.re, f.im);
    }
}
