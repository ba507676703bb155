//! Surface classification of torus quotients: freeness by integer linear
//! algebra, Euler characteristic, orientability, and first homology as an
//! independent certificate.
//!
//! The two Klein-bottle presets come from the two charts of the Weyl
//! involution: the quarter-turn swap in (b, c) angles (order 4 including
//! the sign shift) and the half-turn reflection in (w, z) angles (order 2).
//!
//! Run with: cargo run --example classify_quotients

use kleinalg::topology::{classify, fixed_points, smith_normal_form, Preset};

fn main() {
    for preset in [
        Preset::QuarterTurn,
        Preset::HalfTurn,
        Preset::Reflection,
        Preset::DiagonalShift,
        Preset::Trivial,
    ] {
        let group = preset.deck_group();
        let report = classify(&group);
        println!("--- preset {} (order {}) ---", preset.label(), report.order);
        println!("  free: {}", report.free);
        if let Some((element, locus)) = &report.not_free_witness {
            println!("  witness: {element}");
            println!("  fixed locus: {locus}");
        }
        if let Some(euler) = report.euler {
            println!("  euler characteristic: {euler}");
        }
        println!("  orientable: {}", report.orientable);
        if let Some(h1) = &report.h1 {
            println!("  H1 = {h1}");
        }
        println!("  => {}", report.classification);
    }

    println!("\n--- the fixed-point engine ---");
    let generator = Preset::Reflection.generators().pop().unwrap();
    println!("reflection generator: {generator}");
    println!("fixed locus: {}", fixed_points(&generator));

    println!("\n--- Smith normal form, the integer workhorse ---");
    for matrix in [vec![vec![2i64, 0], vec![0, 3]], vec![vec![-2i64, 4]]] {
        let snf = smith_normal_form(&matrix);
        println!("SNF{matrix:?} has diagonal {:?}", snf.diagonal());
    }
}
