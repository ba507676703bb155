//! Mesh export: triangulated fundamental domains with gluing metadata, both
//! flat and as 3-space immersions colored by domain coordinates.
//!
//! Writes into a `mesh-out/` directory next to the working directory.
//!
//! Run with: cargo run --example export_mesh

use std::path::Path;

use kleinalg::topology::mesh::export_mesh;
use kleinalg::topology::Preset;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out_dir = Path::new("mesh-out");
    std::fs::create_dir_all(out_dir)?;

    // the Klein bottle quotient, flat fundamental domain
    let klein = Preset::HalfTurn.deck_group();
    let summary = export_mesh(&klein, 32, &out_dir.join("klein_flat.obj"), false)?;
    println!(
        "{}: {} vertices, {} triangles -> {}",
        summary.kind, summary.vertices, summary.triangles, summary.geometry_path
    );
    for pair in &summary.gluing {
        println!(
            "  glue {} to {}: {}",
            pair.side_a,
            pair.side_b,
            if pair.reversed { "reversed" } else { "straight" }
        );
    }

    // the same surface immersed in 3-space, colored by domain coordinates
    let immersed = export_mesh(&klein, 48, &out_dir.join("klein_immersed.obj"), true)?;
    println!(
        "{}: immersion with {} triangles -> {}",
        immersed.kind, immersed.triangles, immersed.geometry_path
    );

    // the plain torus for comparison
    let torus = export_mesh(
        &Preset::Trivial.deck_group(),
        32,
        &out_dir.join("torus.obj"),
        true,
    )?;
    println!(
        "{}: {} triangles -> {}",
        torus.kind, torus.triangles, torus.geometry_path
    );

    // a non-free action has no surface quotient to mesh
    let refused = export_mesh(
        &Preset::Reflection.deck_group(),
        16,
        &out_dir.join("nope.obj"),
        false,
    );
    println!("reflection preset: {:?}", refused.err().map(|e| e.to_string()));

    Ok(())
}
