//! Simple modules of both flavors: construction, irreducibility
//! certificates, isomorphism testing, and the collapse of the
//! one-dimensional theory under the twist.
//!
//! Run with: cargo run --example simple_modules

use kleinalg::algebra::{AlgebraElement, Flavor};
use kleinalg::group::GroupElement;
use kleinalg::repr::{
    commutant_dimension, find_intertwiner, induce_from_character, involution_partner,
    make_twisted_simple, make_untwisted_character, make_untwisted_simple, restrict_to_b,
    solve_one_dimensional, BCharacter, OneDimSolution,
};
use kleinalg::scalars::Cyclotomic;

fn main() {
    let one = Cyclotomic::from_int(1);
    let two = Cyclotomic::from_int(2);

    println!("--- the twisted module at (w, z) = (1, 2) ---");
    let rep = make_twisted_simple(&one, &two).unwrap();
    println!("s -> \n{}", rep.s_image());
    println!("X -> \n{}", rep.x_image());
    println!("Y -> \n{}", rep.y_image());
    for (name, ok) in rep.relation_checks() {
        println!("  {name}: {}", if ok { "holds" } else { "fails" });
    }
    println!("commutant dimension (1 = irreducible): {}", commutant_dimension(&rep));

    println!("\n--- evaluating algebra elements in the module ---");
    let x_avg = AlgebraElement::basis(Flavor::Twisted, GroupElement::X)
        + AlgebraElement::basis(Flavor::Twisted, GroupElement::X.inverse());
    println!("N_X + N_X^-1 acts as\n{}", rep.evaluate(&x_avg).unwrap());

    println!("--- restriction to the commutative subalgebra ---");
    for chi in restrict_to_b(&rep).unwrap() {
        println!("  eigencharacter {chi}");
    }

    println!("\n--- the isomorphism M(w,z) ~ M(-w, 1/z) ---");
    let chi = BCharacter::new(one.clone(), two.clone()).unwrap();
    let partner = involution_partner(Flavor::Twisted, &chi);
    let partner_rep = make_twisted_simple(&partner.w, &partner.z).unwrap();
    match find_intertwiner(&rep, &partner_rep).unwrap() {
        Some(t) => println!("intertwiner to ({}, {}):\n{t}", partner.w, partner.z),
        None => println!("no intertwiner found (unexpected)"),
    }
    let stranger = make_twisted_simple(&one, &Cyclotomic::from_int(3)).unwrap();
    println!(
        "intertwiner to the off-orbit (1, 3): {:?}",
        find_intertwiner(&rep, &stranger).unwrap().map(|_| "found")
    );

    println!("\n--- induction from a character ---");
    let induced = induce_from_character(Flavor::Twisted, &chi).unwrap();
    println!(
        "induced module equals the direct construction: {}",
        induced.x_image() == rep.x_image()
            && induced.y_image() == rep.y_image()
            && induced.s_image() == rep.s_image()
    );
    // at an untwisted fixed point the induced module splits
    let fixed = BCharacter::new(Cyclotomic::from_int(4), one.clone()).unwrap();
    let reducible = induce_from_character(Flavor::Untwisted, &fixed).unwrap();
    println!(
        "untwisted induction at z = 1: commutant dimension {} (reducible)",
        commutant_dimension(&reducible)
    );

    println!("\n--- one-dimensional modules ---");
    match solve_one_dimensional(Flavor::Twisted) {
        OneDimSolution::Empty { witness_equation } => {
            println!("twisted: none exist ({witness_equation})");
        }
        other => println!("twisted: {other:?}"),
    }
    match solve_one_dimensional(Flavor::Untwisted) {
        OneDimSolution::Family {
            x_choices,
            s_choices,
        } => println!("untwisted: X in {x_choices:?}, s in {s_choices:?}, Y free and nonzero"),
        other => println!("untwisted: {other:?}"),
    }
    let character = make_untwisted_character(&Cyclotomic::from_int(5), 1, -1).unwrap();
    println!(
        "example character (Y, X, s) -> (5, 1, -1) satisfies the relations: {}",
        character.relations_hold()
    );
    println!(
        "untwisted 2-dim constructor rejects z = 1: {:?}",
        make_untwisted_simple(&one, &one).err().map(|e| e.to_string())
    );
}
