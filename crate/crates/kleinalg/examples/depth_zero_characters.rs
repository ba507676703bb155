//! The depth-zero model of tame quadratic/quartic extension norms.
//!
//! Everything is reduced modulo principal units, so an element is a
//! uniformizer exponent plus a Teichmuller exponent, and the norm maps and
//! depth-zero characters become finite modular arithmetic. The run prints
//! the norm data, the character values, and the exhaustive identity checks
//! for q = 5 and q = 13.
//!
//! Run with: cargo run --example depth_zero_characters

use kleinalg::localfield::{DepthZeroElement, ResidueData, TameExtensionSpec};

fn main() {
    for q in [5u32, 13] {
        let field = ResidueData::new(q).unwrap();
        println!("=== residue order q = {q} ===");

        let e2 = TameExtensionSpec::quadratic();
        let e4 = TameExtensionSpec::quartic();
        let pi = DepthZeroElement::uniformizer();
        let zeta = DepthZeroElement::teichmuller(1);

        println!("norms to the base field:");
        println!("  quadratic: N(pi_E) = {}", field.norm(&e2, pi));
        println!("  quartic:   N(pi_E) = {}", field.norm(&e4, pi));
        println!(
            "  quartic:   N(pi_E) from the conjugate product = {}",
            field.quartic_uniformizer_norm_from_conjugates()
        );
        println!("  quartic:   N(zeta) = {}", field.norm(&e4, zeta));

        println!("character values:");
        println!("  eta(zeta)  = {}", field.eval_char(&field.eta(), zeta));
        println!("  eta(pi)    = {}", field.eval_char(&field.eta(), pi));
        println!("  chi0(pi)   = {}", field.eval_char(&field.chi0(), pi));
        for v in 0..3 {
            println!(
                "  chi4 at valuation {v}: {}",
                field.chi4(DepthZeroElement::new(v, 3))
            );
        }

        let m0 = field.enumerate_m0(1);
        println!("norm-one triples with |v| <= 1: {}", m0.len());
        let quadratic = m0
            .iter()
            .all(|m| field.sigma0(m) * field.sigma0(m) == kleinalg::scalars::Mu4::ONE);
        println!("sigma0 is a quadratic character on all of them: {quadratic}");

        for report in [
            field.verify_norm_character_identities(2),
            field.verify_weyl_twist(2),
        ] {
            for item in &report.items {
                println!(
                    "  [{}] {} ({} cases)",
                    if item.pass { "PASS" } else { "FAIL" },
                    item.name,
                    item.cases
                );
            }
        }
        println!();
    }

    println!("q = 7 is rejected by the 4 | q - 1 precondition:");
    println!("  {:?}", ResidueData::new(7).err().map(|e| e.to_string()));
}
