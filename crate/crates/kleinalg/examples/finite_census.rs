//! Census of simple modules over finite quotients: the involution orbits of
//! characters, the resulting dimension counts, and the identity
//! `sum of squared dimensions = 2 N^2`.
//!
//! The twisted involution `(w, z) ↦ (-w, 1/z)` is free, so every simple is
//! 2-dimensional; the untwisted involution `(w, z) ↦ (w, 1/z)` has fixed
//! points at `z = ±1`, each contributing two 1-dimensional simples.
//!
//! Run with: cargo run --example finite_census

use kleinalg::algebra::Flavor;
use kleinalg::repr::finite_census;

fn main() {
    for n in [2u32, 4, 6] {
        for flavor in [Flavor::Twisted, Flavor::Untwisted] {
            let report = finite_census(n, flavor).unwrap();
            let counts: Vec<String> = report
                .dim_counts
                .iter()
                .map(|(dim, count)| format!("{count} x dim {dim}"))
                .collect();
            println!(
                "N = {n:>2} {flavor:<10}: {:<22} sum d^2 = {:>3} = 2N^2 = {:>3}  [{}]",
                counts.join(" + "),
                report.sum_of_squares,
                2 * n * n,
                if report.pass() { "ok" } else { "FAILED" }
            );
        }
    }

    println!("\norbit detail at N = 2, twisted:");
    let report = finite_census(2, Flavor::Twisted).unwrap();
    for orbit in &report.orbits {
        println!("  {orbit:?}");
    }

    println!("\norbit detail at N = 2, untwisted:");
    let report = finite_census(2, Flavor::Untwisted).unwrap();
    for orbit in &report.orbits {
        println!("  {orbit:?}");
    }
}
