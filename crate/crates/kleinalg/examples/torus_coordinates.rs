//! The coordinate pipeline on the parameter torus: homogeneous triples,
//! the (b, c) chart modulo the sign group J, the square-root chart (w, z),
//! and the Weyl involution in each picture.
//!
//! Run with: cargo run --example torus_coordinates

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kleinalg::scalars::Cyclotomic;
use kleinalg::torus::{
    bc_to_wz, bc_to_wz_angles, comparison_map_check, random_triple, s_action_homogeneous, tau_bc,
    tau_bc_angles, tau_wz, tau_wz_angles, to_bc, triples_equivalent, wz_to_bc, AnglePoint,
    HomogeneousTriple, WZPoint,
};

fn main() {
    let one = Cyclotomic::one();

    println!("--- kernel classes ---");
    let reference = HomogeneousTriple::new(one.clone(), one.clone(), one.clone()).unwrap();
    let diagonal = HomogeneousTriple::new(
        Cyclotomic::from_int(3),
        Cyclotomic::from_int(3),
        Cyclotomic::from_int(3),
    )
    .unwrap();
    let flipped = HomogeneousTriple::new(one.clone(), one.clone(), -one.clone()).unwrap();
    println!("(3 : 3 : 3)  ~ (1 : 1 : 1): {}", triples_equivalent(&diagonal, &reference));
    println!("(1 : 1 : -1) ~ (1 : 1 : 1): {}", triples_equivalent(&flipped, &reference));

    println!("\n--- chart maps ---");
    let t = HomogeneousTriple::new(
        Cyclotomic::from_int(2),
        Cyclotomic::from_int(6),
        Cyclotomic::from_int(2),
    )
    .unwrap();
    let bc = to_bc(&t);
    println!("to_bc(2 : 6 : 2) = {bc}");
    let wz = bc_to_wz(&bc);
    println!("bc_to_wz         = {wz}");

    println!("\n--- square roots back to (b, c) ---");
    let point = WZPoint::new((-one.clone()).promote(4).unwrap(), one.clone()).unwrap();
    println!("wz_to_bc(-1, 1) = {}", wz_to_bc(&point).unwrap());
    let no_root = WZPoint::new(Cyclotomic::from_int(2), one.clone()).unwrap();
    println!(
        "wz_to_bc(2, 1)  = {:?} (use the angle chart for such points)",
        wz_to_bc(&no_root).err().map(|e| e.to_string())
    );

    println!("\n--- the Weyl action in each chart ---");
    println!("s . (1 : 1 : 1) = {}", s_action_homogeneous(&reference));
    println!("tau_bc(b, c)    = {}", tau_bc(&bc));
    println!("tau_wz(w, z)    = {}", tau_wz(&wz));

    println!("\n--- the commuting square on a random triple ---");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sample = random_triple(&mut rng);
    let via_action = to_bc(&s_action_homogeneous(&sample));
    let via_chart = tau_bc(&to_bc(&sample));
    println!("transport equals tau_bc up to J: {}", via_action.j_equivalent(&via_chart));

    println!("\n--- angle forms on the unitary locus ---");
    let p = AnglePoint::from_fractions((1, 8), (3, 8));
    println!("point (theta, phi)     = {p}");
    println!("bc angles -> wz angles = {}", bc_to_wz_angles(&p));
    println!("tau in bc angles       = {}", tau_bc_angles(&p));
    println!("tau in wz angles       = {}", tau_wz_angles(&p));

    println!("\n--- the two torus presentations agree ---");
    let report = comparison_map_check(&mut rng, 30);
    println!(
        "kernel: {}, action: {}, orbits: {}, sign class: {}",
        report.kernel_classes_coincide,
        report.action_formulas_coincide,
        report.orbit_structures_coincide,
        report.sign_class_is_kernel_class
    );
}
