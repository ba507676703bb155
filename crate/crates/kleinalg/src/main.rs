//! Batch command-line surface over the library: verification suites,
//! censuses, module inspection, surface classification, and mesh export.
//!
//! Exit codes: 0 success, 1 runtime failure (including failed checks),
//! 2 usage or precondition violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kleinalg::algebra::Flavor;
use kleinalg::checks::{self, RunConfig};
use kleinalg::localfield::ResidueData;
use kleinalg::repr::{
    commutant_dimension, find_intertwiner, finite_census, involution_partner, make_twisted_simple,
    make_untwisted_simple, restrict_to_b, BCharacter, CensusOrbit, Representation,
};
use kleinalg::scalars::{parse_scalar, Cyclotomic};
use kleinalg::topology::{classify, generate_group, mesh, DeckGroup, Preset, TorusAutomorphism};
use kleinalg::torus::Turn;
use kleinalg::Error;

#[derive(Parser)]
#[command(
    name = "kleinalg",
    version,
    about = "Exact verification of a twisted dihedral group algebra, its simple modules, and the Klein bottle in its unitary parameter space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum FormatArg {
    Text,
    /// single deterministic JSON document per run
    #[value(alias = "json")]
    Structured,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum FlavorArg {
    Twisted,
    Untwisted,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Twisted => Flavor::Twisted,
            FlavorArg::Untwisted => Flavor::Untwisted,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum PresetArg {
    /// order-4 swap with quarter-turn shift (free, Klein bottle)
    QuarterTurn,
    /// order-2 half shift with reflection (free, Klein bottle)
    HalfTurn,
    /// plain reflection (not free: fixed circles)
    Reflection,
    /// diagonal half shift (free, torus)
    DiagonalShift,
    /// trivial group (the torus itself)
    Trivial,
    /// generators supplied via --matrix / --translation
    Custom,
}

#[derive(Args)]
struct CustomGroupArgs {
    /// linear part "a,b,c,d" of a custom generator (row major, det ±1)
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
    /// translation "p/q,r/s" of a custom generator
    #[arg(long, allow_hyphen_values = true)]
    translation: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every verification suite and report per-check results
    Verify {
        /// window bound on |m|, |n| for exhaustive cocycle checks
        #[arg(long, default_value_t = 3)]
        window: i64,
        /// residue orders for the local-field suite (need 4 | q - 1)
        #[arg(long = "q", value_delimiter = ',', default_values_t = vec![5u32, 13])]
        q_list: Vec<u32>,
        /// even census moduli
        #[arg(long = "census-n", value_delimiter = ',', default_values_t = vec![2u32, 4, 6])]
        census_n: Vec<u32>,
        /// seed for randomized checks
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// also write the rendered report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate and verify the simple modules of a finite quotient
    Census {
        /// even modulus N (quotient order 2N^2)
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
    },
    /// Classify a torus quotient: freeness, Euler characteristic,
    /// orientability, first homology, surface type
    ClassifySurface {
        #[arg(long, value_enum)]
        preset: PresetArg,
        #[command(flatten)]
        custom: CustomGroupArgs,
    },
    /// Build one module, check its relations, and report its invariants
    Module {
        /// exact scalar literal, e.g. "1", "3/2", "1+2*i", "zeta(8,1)"
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        /// print the generator matrices
        #[arg(long)]
        show_matrices: bool,
    },
    /// Print the involution orbit of a character of the commutative
    /// subalgebra
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
    },
    /// Run the depth-zero local-field identity checks for one residue order
    Localfield {
        #[arg(long)]
        q: u32,
        /// valuation bound for the exhaustive loops
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Export a triangulated fundamental domain with gluing metadata
    Mesh {
        #[arg(long, value_enum)]
        preset: PresetArg,
        #[arg(long, default_value_t = 32)]
        resolution: u32,
        #[arg(long)]
        out: PathBuf,
        /// place vertices on a 3-space immersion colored by domain coordinates
        #[arg(long)]
        immerse: bool,
        #[command(flatten)]
        custom: CustomGroupArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn dispatch(cli: Cli) -> kleinalg::Result<ExitCode> {
    match cli.command {
        Command::Verify {
            window,
            q_list,
            census_n,
            seed,
            format,
            out,
        } => {
            let cfg = RunConfig {
                window,
                q_list,
                census_n,
                seed,
            };
            cfg.validate()?;
            let report = checks::run_all(&cfg);
            let rendered = match format {
                FormatArg::Text => checks::render_text(&report),
                FormatArg::Structured => checks::render_structured(&report),
            };
            print!("{rendered}");
            if let Some(path) = out {
                std::fs::write(path, &rendered)?;
            }
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Census { n, flavor } => {
            let report = finite_census(n, flavor.into())?;
            println!(
                "census of the {} quotient algebra at N = {} (dimension {})",
                report.flavor,
                report.modulus,
                2 * u64::from(report.modulus).pow(2)
            );
            println!("orbits of characters (exponent pairs for a primitive N-th root):");
            for orbit in &report.orbits {
                match orbit {
                    CensusOrbit::Free { pair } => println!(
                        "  free orbit {{({}, {}), ({}, {})}} -> one simple of dim 2",
                        pair[0].0, pair[0].1, pair[1].0, pair[1].1
                    ),
                    CensusOrbit::Fixed { point } => println!(
                        "  fixed point ({}, {}) -> two simples of dim 1",
                        point.0, point.1
                    ),
                }
            }
            let counts: Vec<String> = report
                .dim_counts
                .iter()
                .map(|(dim, count)| format!("{count} simples of dim {dim}"))
                .collect();
            let verdict = if report.pass() { "ok" } else { "FAILED" };
            println!(
                "{}; sum of squared dims {} = {} [{}]",
                counts.join(" + "),
                report.sum_of_squares,
                2 * u64::from(report.modulus).pow(2),
                verdict
            );
            println!(
                "relations verified: {}; commutants trivial: {}; non-isomorphism pairs checked: {}",
                report.relations_verified, report.commutants_verified, report.nonisomorphic_pairs_checked
            );
            Ok(if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::ClassifySurface { preset, custom } => {
            let group = resolve_group(preset, &custom)?;
            let report = classify(&group);
            println!(
                "group order {}: {}",
                report.order,
                if report.free { "free action" } else { "NOT FREE" }
            );
            if let Some((element, locus)) = &report.not_free_witness {
                println!("  witness: {element} fixes {locus}");
            }
            if let Some(euler) = report.euler {
                println!("  euler characteristic {euler}");
            }
            println!(
                "  orientation: {}",
                if report.orientable {
                    "preserved by every element"
                } else {
                    "reversed by some element"
                }
            );
            if let Some(h1) = &report.h1 {
                println!("  first homology: {h1}");
            }
            println!("  classification: {}", report.classification);
            Ok(ExitCode::SUCCESS)
        }
        Command::Module {
            w,
            z,
            flavor,
            show_matrices,
        } => {
            let w = parse_scalar(&w)?;
            let z = parse_scalar(&z)?;
            let flavor: Flavor = flavor.into();
            let rep = build_module(flavor, &w, &z)?;
            match rep {
                BuiltModule::Simple(rep) => {
                    println!("{} module at (w, z) = ({w}, {z}), dimension 2", flavor);
                    if show_matrices {
                        println!("s ->\n{}", rep.s_image());
                        println!("X ->\n{}", rep.x_image());
                        println!("Y ->\n{}", rep.y_image());
                    }
                    for (name, ok) in rep.relation_checks() {
                        println!("  relation {name}: {}", if ok { "holds" } else { "FAILS" });
                    }
                    println!("  commutant dimension: {}", commutant_dimension(&rep));
                    let chi = BCharacter::new(w, z).expect("nonzero");
                    let partner = involution_partner(flavor, &chi);
                    println!("  orbit partner: (w, z) = ({}, {})", partner.w, partner.z);
                    let partner_rep = build_module(flavor, &partner.w, &partner.z)?;
                    if let BuiltModule::Simple(partner_rep) = partner_rep {
                        let intertwined = find_intertwiner(&rep, &partner_rep)?.is_some();
                        println!(
                            "  intertwiner with the partner: {}",
                            if intertwined { "found" } else { "NOT FOUND" }
                        );
                    }
                    println!(
                        "  restriction to the commutative subalgebra: {}",
                        restrict_to_b(&rep)?
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                }
                BuiltModule::ReducibleAtFixedPoint => {
                    println!(
                        "{} module at z = ±1 is reducible: it splits into the two sign characters s -> ±1",
                        flavor
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit { w, z, flavor } => {
            let w = parse_scalar(&w)?;
            let z = parse_scalar(&z)?;
            let flavor: Flavor = flavor.into();
            let chi = BCharacter::new(w, z)?;
            let partner = involution_partner(flavor, &chi);
            println!("character:      {chi}");
            println!("involution map: {partner}");
            if chi == partner {
                println!("fixed point of the {flavor} involution (size-1 orbit)");
            } else {
                println!("free orbit of size 2 under the {flavor} involution");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Localfield { q, bound } => {
            let field = ResidueData::new(q)?;
            let norms = field.verify_norm_character_identities(bound);
            let twist = field.verify_weyl_twist(bound);
            let mut all = true;
            println!("depth-zero identities at q = {q} (valuations |v| <= {bound})");
            for item in norms.items.iter().chain(twist.items.iter()) {
                all &= item.pass;
                println!(
                    "  [{}] {} ({} cases)",
                    if item.pass { "PASS" } else { "FAIL" },
                    item.name,
                    item.cases
                );
                if let Some(ce) = &item.counterexample {
                    println!("        counterexample: {ce}");
                }
            }
            Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Mesh {
            preset,
            resolution,
            out,
            immerse,
            custom,
        } => {
            let group = resolve_group(preset, &custom)?;
            let summary = mesh::export_mesh(&group, resolution, &out, immerse)?;
            println!(
                "{}: {} vertices, {} triangles",
                summary.kind, summary.vertices, summary.triangles
            );
            for pair in &summary.gluing {
                println!(
                    "  glue {} to {} ({})",
                    pair.side_a,
                    pair.side_b,
                    if pair.reversed { "reversed" } else { "straight" }
                );
            }
            println!("geometry: {}", summary.geometry_path);
            println!("gluing:   {}", summary.gluing_path);
            Ok(ExitCode::SUCCESS)
        }
    }
}

enum BuiltModule {
    Simple(Representation),
    ReducibleAtFixedPoint,
}

fn build_module(flavor: Flavor, w: &Cyclotomic, z: &Cyclotomic) -> kleinalg::Result<BuiltModule> {
    match flavor {
        Flavor::Twisted => Ok(BuiltModule::Simple(make_twisted_simple(w, z)?)),
        Flavor::Untwisted => match make_untwisted_simple(w, z) {
            Ok(rep) => Ok(BuiltModule::Simple(rep)),
            Err(Error::ReducibleInduction) => Ok(BuiltModule::ReducibleAtFixedPoint),
            Err(e) => Err(e),
        },
    }
}

fn resolve_group(preset: PresetArg, custom: &CustomGroupArgs) -> kleinalg::Result<DeckGroup> {
    let preset = match preset {
        PresetArg::QuarterTurn => Preset::QuarterTurn,
        PresetArg::HalfTurn => Preset::HalfTurn,
        PresetArg::Reflection => Preset::Reflection,
        PresetArg::DiagonalShift => Preset::DiagonalShift,
        PresetArg::Trivial => Preset::Trivial,
        PresetArg::Custom => {
            let matrix = custom
                .matrix
                .as_deref()
                .ok_or_else(|| Error::Parse("custom preset requires --matrix".into()))?;
            let translation = custom
                .translation
                .as_deref()
                .ok_or_else(|| Error::Parse("custom preset requires --translation".into()))?;
            let generator = parse_generator(matrix, translation)?;
            return generate_group(&[generator], 8);
        }
    };
    if custom.matrix.is_some() || custom.translation.is_some() {
        return Err(Error::Parse(
            "--matrix/--translation are only valid with --preset custom".into(),
        ));
    }
    Ok(preset.deck_group())
}

fn parse_generator(matrix: &str, translation: &str) -> kleinalg::Result<TorusAutomorphism> {
    let entries: Vec<i64> = matrix
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad matrix entry {s:?}")))
        })
        .collect::<kleinalg::Result<_>>()?;
    if entries.len() != 4 {
        return Err(Error::Parse(
            "matrix must have four entries a,b,c,d".into(),
        ));
    }
    let parts: Vec<&str> = translation.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse("translation must be two fractions p/q,r/s".into()));
    }
    let parse_turn = |s: &str| -> kleinalg::Result<Turn> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad numerator {n:?}")))?,
                d.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad denominator {d:?}")))?,
            ),
            None => (
                s.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad translation {s:?}")))?,
                1,
            ),
        };
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Turn::from_fraction(num, den))
    };
    TorusAutomorphism::new(
        [[entries[0], entries[1]], [entries[2], entries[3]]],
        (parse_turn(parts[0])?, parse_turn(parts[1])?),
    )
}
