//! Coordinate charts on the parameter torus and the Weyl involution in each
//! chart.
//!
//! Three charts are linked here:
//! - homogeneous triples `(a1 : a2 : a3)` modulo the kernel generated by
//!   `(a, a, a)` and `(b, b, -b)`;
//! - the `(b, c)` chart, a pair of nonzero scalars modulo the simultaneous
//!   sign flip `J`;
//! - the `(w, z)` chart via the square-root substitution `w = bc, z = b/c`.
//!
//! Unit-circle points carry a parallel exact representation as rational
//! angles ([`Turn`], fractions of a full turn), where every involution in
//! play is affine; the topology layer consumes that affine data.

use std::fmt;

use rand::Rng;

use crate::scalars::{rat, Cyclotomic, Rational};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Rational angles
// ---------------------------------------------------------------------------

/// A rational angle in fractions of a full turn, normalized into `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Turn(Rational);

impl Turn {
    pub fn new(r: Rational) -> Turn {
        Turn(normalize_mod_one(r))
    }

    pub fn from_fraction(num: i64, den: i64) -> Turn {
        Turn::new(rat(num, den))
    }

    pub fn zero() -> Turn {
        Turn::from_fraction(0, 1)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn add(&self, other: &Turn) -> Turn {
        Turn::new(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Turn) -> Turn {
        Turn::new(&self.0 - &other.0)
    }

    pub fn neg(&self) -> Turn {
        Turn::new(-&self.0)
    }

    /// Halve the angle, picking the representative in `[0, 1/2)`; the other
    /// square root differs by half a turn.
    pub fn half(&self) -> Turn {
        Turn::new(&self.0 / rat(2, 1))
    }

    pub fn times(&self, k: i64) -> Turn {
        Turn::new(&self.0 * rat(k, 1))
    }

    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.0.is_zero()
    }

    /// The unit-circle point `exp(2 pi i * turn)` as an exact root of unity.
    pub fn to_cyclotomic(&self) -> Cyclotomic {
        use num_traits::ToPrimitive;
        let den = self.0.denom().to_u32().expect("denominator fits u32");
        let num = self.0.numer().to_i64().expect("numerator fits i64");
        Cyclotomic::root_of_unity(den, num)
    }
}

fn normalize_mod_one(r: Rational) -> Rational {
    let floor = r.floor();
    r - floor
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A point of the unitary torus in angle coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AnglePoint {
    pub theta: Turn,
    pub phi: Turn,
}

impl AnglePoint {
    pub fn new(theta: Turn, phi: Turn) -> AnglePoint {
        AnglePoint { theta, phi }
    }

    pub fn from_fractions(theta: (i64, i64), phi: (i64, i64)) -> AnglePoint {
        AnglePoint {
            theta: Turn::from_fraction(theta.0, theta.1),
            phi: Turn::from_fraction(phi.0, phi.1),
        }
    }
}

impl fmt::Display for AnglePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.theta, self.phi)
    }
}

// ---------------------------------------------------------------------------
// Exact charts
// ---------------------------------------------------------------------------

/// A homogeneous triple of nonzero scalars, considered modulo the kernel
/// generated by `(a, a, a)` and `(b, b, -b)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousTriple {
    pub a1: Cyclotomic,
    pub a2: Cyclotomic,
    pub a3: Cyclotomic,
}

impl HomogeneousTriple {
    pub fn new(a1: Cyclotomic, a2: Cyclotomic, a3: Cyclotomic) -> Result<HomogeneousTriple> {
        if a1.is_zero() || a2.is_zero() || a3.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(HomogeneousTriple { a1, a2, a3 })
    }
}

impl fmt::Display for HomogeneousTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.a1, self.a2, self.a3)
    }
}

/// A `(b, c)` pair of nonzero scalars; consumers treat it modulo the
/// `J`-action `(b, c) ~ (-b, -c)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BCPair {
    pub b: Cyclotomic,
    pub c: Cyclotomic,
}

impl BCPair {
    pub fn new(b: Cyclotomic, c: Cyclotomic) -> Result<BCPair> {
        if b.is_zero() || c.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(BCPair { b, c })
    }

    /// Equality as `J`-classes.
    pub fn j_equivalent(&self, other: &BCPair) -> bool {
        (self.b == other.b && self.c == other.c)
            || (self.b == -other.b.clone() && self.c == -other.c.clone())
    }

    /// The simultaneous sign flip.
    pub fn j_flip(&self) -> BCPair {
        BCPair {
            b: -self.b.clone(),
            c: -self.c.clone(),
        }
    }
}

impl fmt::Display for BCPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(b = {}, c = {})", self.b, self.c)
    }
}

/// A `(w, z)` point with both coordinates nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WZPoint {
    pub w: Cyclotomic,
    pub z: Cyclotomic,
}

impl WZPoint {
    pub fn new(w: Cyclotomic, z: Cyclotomic) -> Result<WZPoint> {
        if w.is_zero() || z.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(WZPoint { w, z })
    }
}

impl fmt::Display for WZPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(w = {}, z = {})", self.w, self.z)
    }
}

/// Multiply by `i`, promoting the conductor as needed.
fn times_i(a: &Cyclotomic) -> Cyclotomic {
    let target = {
        let n = a.conductor();
        n / num_integer::gcd(n, 4) * 4
    };
    a.promote(target)
        .expect("conductor divides lcm")
        .checked_mul(&Cyclotomic::i().promote(target).expect("4 divides lcm"))
        .expect("same conductor")
}

/// Exact equivalence of homogeneous triples: `t2 = (λ a1, λ a2, ±λ a3)` for
/// some nonzero `λ`, decided by ratio comparison.
pub fn triples_equivalent(t1: &HomogeneousTriple, t2: &HomogeneousTriple) -> bool {
    let lambda = match t2.a1.checked_div(&t1.a1) {
        Ok(l) => l,
        Err(_) => return false,
    };
    let a2_matches = match t1.a2.checked_mul(&lambda) {
        Ok(v) => v == t2.a2,
        Err(_) => false,
    };
    if !a2_matches {
        return false;
    }
    match t1.a3.checked_mul(&lambda) {
        Ok(v) => v == t2.a3 || -v == t2.a3,
        Err(_) => false,
    }
}

/// Chart map `(a1 : a2 : a3) ↦ (a1/a3, a2/a3)`. The diagonal kernel
/// generator cancels outright and the sign generator lands on the
/// `J`-action, so this is well defined on classes.
pub fn to_bc(t: &HomogeneousTriple) -> BCPair {
    BCPair {
        b: t.a1.checked_div(&t.a3).expect("a3 nonzero"),
        c: t.a2.checked_div(&t.a3).expect("a3 nonzero"),
    }
}

/// The square-root chart: `(w, z) = (b c, b / c)`; invariant under `J`.
pub fn bc_to_wz(p: &BCPair) -> WZPoint {
    WZPoint {
        w: p.b.checked_mul(&p.c).expect("conductors"),
        z: p.b.checked_div(&p.c).expect("c nonzero"),
    }
}

/// Invert the square-root chart: solve `b^2 = w z`, `c^2 = w / z`, fixing
/// the sign of `c` so that `b c = w`. The two remaining solutions form one
/// `J`-class.
pub fn wz_to_bc(p: &WZPoint) -> Result<BCPair> {
    let b = p.w.checked_mul(&p.z)?.sqrt()?;
    let mut c = p.w.checked_div(&p.z)?.sqrt()?;
    let product = b.checked_mul(&c)?;
    if product != p.w {
        c = -c;
        debug_assert_eq!(b.checked_mul(&c)?, p.w);
    }
    Ok(BCPair { b, c })
}

/// The Weyl action on homogeneous triples:
/// `(a1 : a2 : a3) ↦ (a2 : a1 : -i a3)`, which is the same class as
/// `(i a2 : i a1 : a3)`.
pub fn s_action_homogeneous(t: &HomogeneousTriple) -> HomogeneousTriple {
    let result = HomogeneousTriple {
        a1: t.a2.clone(),
        a2: t.a1.clone(),
        a3: -times_i(&t.a3),
    };
    debug_assert!(triples_equivalent(
        &result,
        &HomogeneousTriple {
            a1: times_i(&t.a2),
            a2: times_i(&t.a1),
            a3: t.a3.clone(),
        }
    ));
    result
}

/// The Weyl action in the `(b, c)` chart: `(b, c) ↦ (i c, i b)`. Its square
/// is the `J`-action, so it is an involution on `J`-classes.
pub fn tau_bc(p: &BCPair) -> BCPair {
    BCPair {
        b: times_i(&p.c),
        c: times_i(&p.b),
    }
}

/// The Weyl action in the `(w, z)` chart: `(w, z) ↦ (-w, z^{-1})`.
pub fn tau_wz(p: &WZPoint) -> WZPoint {
    WZPoint {
        w: -p.w.clone(),
        z: p.z.inverse().expect("z nonzero"),
    }
}

/// The untwisted involution `(w, z) ↦ (w, z^{-1})`; its fixed locus is
/// exactly `z ∈ {1, -1}`.
pub fn untwisted_involution(p: &WZPoint) -> WZPoint {
    WZPoint {
        w: p.w.clone(),
        z: p.z.inverse().expect("z nonzero"),
    }
}

/// Whether a point is fixed by [`untwisted_involution`].
pub fn untwisted_fixed(p: &WZPoint) -> bool {
    p.z == Cyclotomic::one() || p.z == -Cyclotomic::one()
}

// ---------------------------------------------------------------------------
// Angle-chart versions (exact on the unitary locus)
// ---------------------------------------------------------------------------

/// `(theta_b, theta_c) ↦ (theta_b + theta_c, theta_b - theta_c)`.
pub fn bc_to_wz_angles(p: &AnglePoint) -> AnglePoint {
    AnglePoint {
        theta: p.theta.add(&p.phi),
        phi: p.theta.sub(&p.phi),
    }
}

/// Inverse of [`bc_to_wz_angles`] by exact halving, with the `c`-angle
/// corrected so the angles recombine to `w` (not `-w`).
pub fn wz_to_bc_angles(p: &AnglePoint) -> AnglePoint {
    let b = p.theta.add(&p.phi).half();
    let mut c = p.theta.sub(&p.phi).half();
    if b.add(&c) != p.theta {
        c = c.add(&Turn::from_fraction(1, 2));
    }
    debug_assert!(b.add(&c) == p.theta);
    AnglePoint { theta: b, phi: c }
}

/// `tau` in `(b, c)` angles: `(theta, phi) ↦ (phi + 1/4, theta + 1/4)`.
pub fn tau_bc_angles(p: &AnglePoint) -> AnglePoint {
    let quarter = Turn::from_fraction(1, 4);
    AnglePoint {
        theta: p.phi.add(&quarter),
        phi: p.theta.add(&quarter),
    }
}

/// `tau` in `(w, z)` angles: `(theta, phi) ↦ (theta + 1/2, -phi)`.
pub fn tau_wz_angles(p: &AnglePoint) -> AnglePoint {
    AnglePoint {
        theta: p.theta.add(&Turn::from_fraction(1, 2)),
        phi: p.phi.neg(),
    }
}

/// The `J`-action in `(b, c)` angles: shift both by half a turn.
pub fn j_action_angles(p: &AnglePoint) -> AnglePoint {
    let half = Turn::from_fraction(1, 2);
    AnglePoint {
        theta: p.theta.add(&half),
        phi: p.phi.add(&half),
    }
}

/// The untwisted involution in `(w, z)` angles: `(theta, phi) ↦ (theta, -phi)`.
pub fn untwisted_involution_angles(p: &AnglePoint) -> AnglePoint {
    AnglePoint {
        theta: p.theta.clone(),
        phi: p.phi.neg(),
    }
}

// ---------------------------------------------------------------------------
// Comparison of the two torus presentations
// ---------------------------------------------------------------------------

/// Outcome of comparing the two torus presentations datum by datum.
#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub kernel_classes_coincide: bool,
    pub action_formulas_coincide: bool,
    pub orbit_structures_coincide: bool,
    pub sign_class_is_kernel_class: bool,
    pub samples: usize,
}

impl ComparisonReport {
    pub fn pass(&self) -> bool {
        self.kernel_classes_coincide
            && self.action_formulas_coincide
            && self.orbit_structures_coincide
            && self.sign_class_is_kernel_class
    }
}

/// The second presentation's Weyl action, written out independently so the
/// comparison below checks one formula against the other.
fn second_presentation_action(t: &HomogeneousTriple) -> HomogeneousTriple {
    HomogeneousTriple {
        a1: t.a2.clone(),
        a2: t.a1.clone(),
        a3: -times_i(&t.a3),
    }
}

fn second_presentation_equivalent(t1: &HomogeneousTriple, t2: &HomogeneousTriple) -> bool {
    // kernel generated by (a, a, a) and (b, b, -b)
    let lambda = match t2.a1.checked_div(&t1.a1) {
        Ok(l) => l,
        Err(_) => return false,
    };
    if !matches!(t1.a2.checked_mul(&lambda), Ok(v) if v == t2.a2) {
        return false;
    }
    match t1.a3.checked_mul(&lambda) {
        Ok(v) => v == t2.a3 || -v == t2.a3,
        Err(_) => false,
    }
}

/// Verify that the two torus presentations carry the same structure: the
/// same kernel classes, the same Weyl action formula, and the same orbit
/// structure on randomized points; also that `(1 : 1 : -1)` is a kernel
/// class representative.
pub fn comparison_map_check<R: Rng>(rng: &mut R, samples: usize) -> ComparisonReport {
    let one = Cyclotomic::one();
    let reference = HomogeneousTriple::new(one.clone(), one.clone(), one.clone()).unwrap();

    let mut kernel_ok = true;
    let mut action_ok = true;
    let mut orbit_ok = true;
    for _ in 0..samples {
        let lambda = random_nonzero_gaussian(rng);
        let diag = HomogeneousTriple::new(lambda.clone(), lambda.clone(), lambda.clone()).unwrap();
        let signed =
            HomogeneousTriple::new(lambda.clone(), lambda.clone(), -lambda.clone()).unwrap();
        kernel_ok &= triples_equivalent(&diag, &reference)
            && triples_equivalent(&signed, &reference)
            && second_presentation_equivalent(&diag, &reference)
            && second_presentation_equivalent(&signed, &reference);

        let t = random_triple(rng);
        let first = s_action_homogeneous(&t);
        let second = second_presentation_action(&t);
        action_ok &= first == second && triples_equivalent(&first, &second);

        // the action is an involution on classes in both presentations
        let twice_first = s_action_homogeneous(&first);
        let twice_second = second_presentation_action(&second);
        orbit_ok &= triples_equivalent(&twice_first, &t)
            && second_presentation_equivalent(&twice_second, &t)
            && !triples_equivalent(&first, &t);
    }

    let sign_class = HomogeneousTriple::new(one.clone(), one.clone(), -one.clone()).unwrap();
    let sign_ok = triples_equivalent(&sign_class, &reference);

    ComparisonReport {
        kernel_classes_coincide: kernel_ok,
        action_formulas_coincide: action_ok,
        orbit_structures_coincide: orbit_ok,
        sign_class_is_kernel_class: sign_ok,
        samples,
    }
}

/// A random nonzero Gaussian rational with small numerators.
pub fn random_nonzero_gaussian<R: Rng>(rng: &mut R) -> Cyclotomic {
    loop {
        let re = rat(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3));
        let im = rat(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3));
        let c = Cyclotomic::gaussian(re, im);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random triple of nonzero Gaussian rationals.
pub fn random_triple<R: Rng>(rng: &mut R) -> HomogeneousTriple {
    HomogeneousTriple {
        a1: random_nonzero_gaussian(rng),
        a2: random_nonzero_gaussian(rng),
        a3: random_nonzero_gaussian(rng),
    }
}

/// A random rational angle with denominator at most `max_den`.
pub fn random_angle<R: Rng>(rng: &mut R, max_den: i64) -> Turn {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(0..den.max(1));
    Turn::from_fraction(num, den)
}
