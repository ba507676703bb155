//! Mesh export for free torus quotients: a triangulated fundamental domain
//! with side-gluing metadata, and optionally a 3-space immersion colored by
//! the fundamental-domain coordinates.
//!
//! Geometry file: ASCII, `v x y z` (or `v x y z r g b` with `--immerse`
//! colors) and `f i j k` lines, 1-indexed. The gluing sidecar pairs the four
//! sides of the square domain and flags the orientation of each
//! identification. Floats are printed in scientific form with 9 significant
//! digits so output is bit-stable.

use std::fmt::Write as _;
use std::path::Path;

use super::{classify, DeckGroup, SurfaceClass};
use crate::{Error, Result};

/// How the square's sides glue up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingPair {
    pub side_a: &'static str,
    pub side_b: &'static str,
    pub reversed: bool,
}

/// Summary of one export.
#[derive(Clone, Debug)]
pub struct MeshSummary {
    pub kind: SurfaceClass,
    pub vertices: usize,
    pub triangles: usize,
    pub gluing: Vec<GluingPair>,
    pub geometry_path: String,
    pub gluing_path: String,
}

fn fmt_float(x: f64) -> String {
    // 9 significant digits, deterministic
    format!("{x:.8e}")
}

/// Write the triangulated fundamental domain of the quotient of the torus
/// by `group` (which must act freely) at the given grid resolution. The
/// domain is the unit square of the quotient's standard model: both side
/// pairs glue straight for a torus, and one pair glues reversed for a Klein
/// bottle. With `immerse` the vertices are placed on a standard torus
/// embedding or Klein-bottle immersion in 3-space and colored by the domain
/// coordinates; otherwise the domain is written flat in the `z = 0` plane.
pub fn export_mesh(
    group: &DeckGroup,
    resolution: u32,
    path: &Path,
    immerse: bool,
) -> Result<MeshSummary> {
    if resolution == 0 {
        return Err(Error::BadResolution(resolution));
    }
    let report = classify(group);
    let kind = match report.classification {
        SurfaceClass::NotFreeAction => return Err(Error::NotFreeAction),
        other => other,
    };

    let res = resolution as usize;
    let verts_per_side = res + 1;
    let mut geometry = String::new();
    let _ = writeln!(geometry, "# triangulated fundamental domain ({kind})");
    let _ = writeln!(geometry, "# resolution {res}, group order {}", report.order);
    for row in 0..verts_per_side {
        for col in 0..verts_per_side {
            let u = col as f64 / res as f64;
            let v = row as f64 / res as f64;
            let (x, y, z) = if immerse {
                match kind {
                    SurfaceClass::Torus => torus_embedding(u, v),
                    SurfaceClass::KleinBottle => klein_immersion(u, v),
                    SurfaceClass::NotFreeAction => unreachable!(),
                }
            } else {
                (u, v, 0.0)
            };
            let mut line = format!("v {} {} {}", fmt_float(x), fmt_float(y), fmt_float(z));
            if immerse {
                // color by fundamental-domain coordinates
                let _ = write!(line, " {} {} {}", fmt_float(u), fmt_float(v), fmt_float(0.5));
            }
            let _ = writeln!(geometry, "{line}");
        }
    }
    let index = |row: usize, col: usize| row * verts_per_side + col + 1;
    let mut triangles = 0usize;
    for row in 0..res {
        for col in 0..res {
            let _ = writeln!(
                geometry,
                "f {} {} {}",
                index(row, col),
                index(row, col + 1),
                index(row + 1, col + 1)
            );
            let _ = writeln!(
                geometry,
                "f {} {} {}",
                index(row, col),
                index(row + 1, col + 1),
                index(row + 1, col)
            );
            triangles += 2;
        }
    }

    let gluing = match kind {
        SurfaceClass::Torus => vec![
            GluingPair {
                side_a: "bottom",
                side_b: "top",
                reversed: false,
            },
            GluingPair {
                side_a: "left",
                side_b: "right",
                reversed: false,
            },
        ],
        SurfaceClass::KleinBottle => vec![
            GluingPair {
                side_a: "bottom",
                side_b: "top",
                reversed: false,
            },
            GluingPair {
                side_a: "left",
                side_b: "right",
                reversed: true,
            },
        ],
        SurfaceClass::NotFreeAction => unreachable!(),
    };

    let mut sidecar = String::new();
    let _ = writeln!(sidecar, "# side gluing for the fundamental domain ({kind})");
    let _ = writeln!(sidecar, "side 0 bottom v=0 u-increasing");
    let _ = writeln!(sidecar, "side 1 right u=1 v-increasing");
    let _ = writeln!(sidecar, "side 2 top v=1 u-increasing");
    let _ = writeln!(sidecar, "side 3 left u=0 v-increasing");
    for pair in &gluing {
        let flag = if pair.reversed { "reversed" } else { "straight" };
        let _ = writeln!(sidecar, "pair {} {} {flag}", pair.side_a, pair.side_b);
    }

    std::fs::write(path, geometry)?;
    let gluing_path = {
        let mut os = path.as_os_str().to_owned();
        os.push(".gluing");
        std::path::PathBuf::from(os)
    };
    std::fs::write(&gluing_path, sidecar)?;

    Ok(MeshSummary {
        kind,
        vertices: verts_per_side * verts_per_side,
        triangles,
        gluing,
        geometry_path: path.display().to_string(),
        gluing_path: gluing_path.display().to_string(),
    })
}

fn torus_embedding(u: f64, v: f64) -> (f64, f64, f64) {
    let (big_r, small_r) = (2.0, 1.0);
    let (su, cu) = (2.0 * std::f64::consts::PI * u).sin_cos();
    let (sv, cv) = (2.0 * std::f64::consts::PI * v).sin_cos();
    ((big_r + small_r * cv) * cu, (big_r + small_r * cv) * su, small_r * sv)
}

/// Figure-eight immersion; the `u` direction is the one glued with a
/// reversal, and the parametrization satisfies `F(1, v) = F(0, 1 - v)`, so
/// the seam matches the sidecar's reversed pair.
fn klein_immersion(u: f64, v: f64) -> (f64, f64, f64) {
    let a = 2.0;
    let s = 2.0 * std::f64::consts::PI * u;
    let t = 2.0 * std::f64::consts::PI * v;
    let radial = a + (s / 2.0).cos() * t.sin() - (s / 2.0).sin() * (2.0 * t).sin();
    let x = radial * s.cos();
    let y = radial * s.sin();
    let z = (s / 2.0).sin() * t.sin() + (s / 2.0).cos() * (2.0 * t).sin();
    (x, y, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::Preset;

    #[test]
    fn half_turn_mesh_counts_and_gluing() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.obj");
        let summary = export_mesh(&Preset::HalfTurn.deck_group(), 32, &path, false).unwrap();
        assert_eq!(summary.kind, SurfaceClass::KleinBottle);
        assert_eq!(summary.triangles, 2 * 32 * 32);
        assert_eq!(summary.vertices, 33 * 33);
        let reversed: Vec<_> = summary.gluing.iter().filter(|p| p.reversed).collect();
        assert_eq!(reversed.len(), 1);
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(
            text.lines().filter(|l| l.starts_with("v ")).count(),
            33 * 33
        );
        assert_eq!(
            text.lines().filter(|l| l.starts_with("f ")).count(),
            2 * 32 * 32
        );
        let sidecar = std::fs::read_to_string(format!("{}.gluing", path.display())).unwrap();
        assert!(sidecar.contains("pair left right reversed"));
        assert!(sidecar.contains("pair bottom top straight"));
    }

    #[test]
    fn trivial_group_gives_plain_torus_mesh() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("torus.obj");
        let summary = export_mesh(&Preset::Trivial.deck_group(), 8, &path, true).unwrap();
        assert_eq!(summary.kind, SurfaceClass::Torus);
        assert!(summary.gluing.iter().all(|p| !p.reversed));
    }

    #[test]
    fn degenerate_resolution_and_preconditions() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tiny.obj");
        let summary = export_mesh(&Preset::Trivial.deck_group(), 1, &path, false).unwrap();
        assert_eq!(summary.triangles, 2);
        assert!(matches!(
            export_mesh(&Preset::Trivial.deck_group(), 0, &path, false),
            Err(Error::BadResolution(0))
        ));
        assert!(matches!(
            export_mesh(&Preset::Reflection.deck_group(), 4, &path, false),
            Err(Error::NotFreeAction)
        ));
    }

    #[test]
    fn klein_immersion_seam_matches_reversed_gluing() {
        for v in [0.0, 0.125, 0.3, 0.75] {
            let lhs = klein_immersion(1.0, v);
            let rhs = klein_immersion(0.0, 1.0 - v);
            assert!((lhs.0 - rhs.0).abs() < 1e-9);
            assert!((lhs.1 - rhs.1).abs() < 1e-9);
            assert!((lhs.2 - rhs.2).abs() < 1e-9);
        }
    }

    #[test]
    fn float_format_is_stable() {
        assert_eq!(fmt_float(1.0), "1.00000000e0");
        assert_eq!(fmt_float(-0.5), "-5.00000000e-1");
    }
}
