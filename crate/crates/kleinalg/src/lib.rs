//! Exact verification toolkit for the twisted group algebra of
//! `Gamma = (Z ⋊ Z/2) × Z` and its untwisted counterpart.
//!
//! Everything algebraic is decided in exact arithmetic over the cyclotomic
//! tower `Q ⊂ Q(i) ⊂ Q(zeta_N)`; floating point exists only on output paths
//! (reports and mesh export). The crate covers:
//!
//! - [`scalars`]: rationals, fourth roots of unity, and dense cyclotomic
//!   field elements with exact inversion;
//! - [`group`]: the group `Gamma`, its even finite quotients, 2-cocycles,
//!   coboundaries, and the commutator-bicharacter obstruction;
//! - [`algebra`]: twisted and untwisted group algebra elements and the
//!   generator-and-relation presentation checks;
//! - [`repr`]: construction and classification of simple modules,
//!   intertwiners, commutants, and the finite-quotient census;
//! - [`localfield`]: a depth-zero model of tame quadratic/quartic extension
//!   norms and the character identities they satisfy;
//! - [`torus`]: homogeneous coordinates on the parameter torus, the
//!   square-root chart, and the Weyl involution in each chart;
//! - [`topology`]: classification of free affine torus quotients (Euler
//!   characteristic, orientability, first homology) and mesh export;
//! - [`checks`]: the batch verification suites behind the CLI.

pub mod algebra;
pub mod checks;
pub mod group;
pub mod linalg;
pub mod localfield;
pub mod repr;
pub mod scalars;
pub mod topology;
pub mod torus;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible conductors {0} and {1}: neither divides the other")]
    ConductorMismatch(u32, u32),
    #[error("no exact square root in Q(zeta_{0}); use the angle form instead")]
    NoExactSquareRoot(u32),
    #[error("cocycle does not descend: modulus {0} is odd")]
    OddModulus(u32),
    #[error("bicharacter undefined: the elements do not commute")]
    NonCommutingPair,
    #[error("flavor mismatch between twisted and untwisted operands")]
    FlavorMismatch,
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("reducible: use the character constructor (z = ±1)")]
    ReducibleInduction,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("X-image is not diagonal in the chosen basis")]
    NonDiagonalizable,
    #[error("residue order q = {0} rejected: need a prime power with 4 | q - 1")]
    BadResidueOrder(u32),
    #[error("norm-one constraint violated")]
    NormOneViolated,
    #[error("census modulus {0} rejected: need an even N with 2 <= N <= 12")]
    BadCensusModulus(u32),
    #[error("group too large or infinite: closure exceeded {0} elements")]
    GroupTooLarge(usize),
    #[error("the action is not free")]
    NotFreeAction,
    #[error("invalid resolution {0}: must be >= 1")]
    BadResolution(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
