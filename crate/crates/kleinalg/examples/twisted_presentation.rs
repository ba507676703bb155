//! Generators and relations of the twisted and untwisted group algebras.
//!
//! Multiplies out the defining relations as exact algebra identities and
//! shows the one sign that separates the two flavors: `sY = -Ys` against
//! `sY = Ys`.
//!
//! Run with: cargo run --example twisted_presentation

use kleinalg::algebra::{verify_presentation, AlgebraElement, Flavor};
use kleinalg::group::GroupElement;

fn main() {
    for flavor in [Flavor::Twisted, Flavor::Untwisted] {
        println!("--- {flavor} presentation ---");
        let report = verify_presentation(flavor);
        for relation in &report.relations {
            println!(
                "  {:<18} {}",
                relation.name,
                if relation.holds { "= 0" } else { "NONZERO" }
            );
        }
    }

    println!("\n--- the sign in the s-Y exchange ---");
    for flavor in [Flavor::Twisted, Flavor::Untwisted] {
        let s = AlgebraElement::n_s(flavor);
        let y = AlgebraElement::n_y(flavor);
        println!("{flavor}: N_s N_Y     = {}", &s * &y);
        println!("{flavor}: N_Y N_s     = {}", &y * &s);
        println!("{flavor}: N_s N_Y N_s = {}", &(&s * &y) * &s);
    }

    println!("\n--- the subalgebra generated by N_X, N_Y is commutative ---");
    let x = AlgebraElement::n_x(Flavor::Twisted);
    let y = AlgebraElement::n_y(Flavor::Twisted);
    let square = (&x + &y) * (&x + &y);
    println!("(N_X + N_Y)^2 = {square}");

    println!("\n--- conjugation by N_s on the generators ---");
    let s = AlgebraElement::n_s(Flavor::Twisted);
    let x_inv = AlgebraElement::basis(Flavor::Twisted, GroupElement::X.inverse());
    println!("N_s N_X N_s = {} (equals N_X^-1: {})", &(&s * &x) * &s, (&(&s * &x) * &s) == x_inv);
}
