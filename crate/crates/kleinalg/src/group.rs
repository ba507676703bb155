//! The group `Gamma = (Z_A ⋊ Z/2) × Z_B`, its even finite quotients, and the
//! 2-cocycle machinery: the distinguished cocycle `mu^T`, coboundaries, the
//! commutator bicharacter, and the cohomology-class indicator on `<s, Y>`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::scalars::Mu4;
use crate::{Error, Result};

/// An element `(m, eps, n)` of `Gamma`, with multiplication
/// `(m1,e1,n1)*(m2,e2,n2) = (m1 + (-1)^e1 m2, e1 xor e2, n1 + n2)`.
///
/// The derived `Ord` is lexicographic on `(m, eps, n)`; algebra supports rely
/// on that canonical order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement {
    pub m: i64,
    pub eps: bool,
    pub n: i64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        m: 0,
        eps: false,
        n: 0,
    };
    /// The involution generator of the `Z/2` factor.
    pub const S: GroupElement = GroupElement {
        m: 0,
        eps: true,
        n: 0,
    };
    /// The generator of `Z_A`.
    pub const X: GroupElement = GroupElement {
        m: 1,
        eps: false,
        n: 0,
    };
    /// The generator of `Z_B`.
    pub const Y: GroupElement = GroupElement {
        m: 0,
        eps: false,
        n: 1,
    };

    pub fn new(m: i64, eps: bool, n: i64) -> GroupElement {
        GroupElement { m, eps, n }
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupElement::IDENTITY
    }

    pub fn inverse(&self) -> GroupElement {
        let m = if self.eps { self.m } else { -self.m };
        GroupElement {
            m,
            eps: self.eps,
            n: -self.n,
        }
    }

    /// `X^k`, `Y^k`, `s^k` as elements.
    pub fn x_pow(k: i64) -> GroupElement {
        GroupElement::new(k, false, 0)
    }

    pub fn y_pow(k: i64) -> GroupElement {
        GroupElement::new(0, false, k)
    }

    pub fn s_pow(k: i64) -> GroupElement {
        GroupElement::new(0, k.rem_euclid(2) == 1, 0)
    }

    /// True when `self * other == other * self`.
    pub fn commutes_with(&self, other: &GroupElement) -> bool {
        *self * *other == *other * *self
    }
}

impl std::ops::Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        let m = self.m + if self.eps { -rhs.m } else { rhs.m };
        GroupElement {
            m,
            eps: self.eps ^ rhs.eps,
            n: self.n + rhs.n,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m, u8::from(self.eps), self.n)
    }
}

/// Generator symbols for word evaluation.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Gen {
    S,
    X,
    Y,
}

/// Evaluate a word of generator powers left to right. The empty word is the
/// identity.
pub fn word_evaluate(word: &[(Gen, i64)]) -> GroupElement {
    word.iter().fold(GroupElement::IDENTITY, |acc, &(g, k)| {
        let factor = match g {
            Gen::S => GroupElement::s_pow(k),
            Gen::X => GroupElement::x_pow(k),
            Gen::Y => GroupElement::y_pow(k),
        };
        acc * factor
    })
}

// ---------------------------------------------------------------------------
// Finite quotients
// ---------------------------------------------------------------------------

/// An element of the quotient `(Z/N ⋊ Z/2) × Z/N`; group order `2 N^2`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FiniteQuotientElement {
    pub modulus: u32,
    pub m: u32,
    pub eps: bool,
    pub n: u32,
}

impl FiniteQuotientElement {
    pub fn identity(modulus: u32) -> FiniteQuotientElement {
        FiniteQuotientElement {
            modulus,
            m: 0,
            eps: false,
            n: 0,
        }
    }

    pub fn multiply(&self, rhs: &FiniteQuotientElement) -> FiniteQuotientElement {
        assert_eq!(self.modulus, rhs.modulus, "mixed quotient moduli");
        let nn = self.modulus as i64;
        let m = (self.m as i64 + if self.eps { -(rhs.m as i64) } else { rhs.m as i64 })
            .rem_euclid(nn) as u32;
        FiniteQuotientElement {
            modulus: self.modulus,
            m,
            eps: self.eps ^ rhs.eps,
            n: ((self.n + rhs.n) as i64).rem_euclid(nn) as u32,
        }
    }

    pub fn inverse(&self) -> FiniteQuotientElement {
        let nn = self.modulus as i64;
        let m = if self.eps {
            self.m as i64
        } else {
            -(self.m as i64)
        };
        FiniteQuotientElement {
            modulus: self.modulus,
            m: m.rem_euclid(nn) as u32,
            eps: self.eps,
            n: (-(self.n as i64)).rem_euclid(nn) as u32,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.m == 0 && !self.eps && self.n == 0
    }

    /// All `2 N^2` quotient elements, in canonical order.
    pub fn enumerate(modulus: u32) -> Vec<FiniteQuotientElement> {
        let mut out = Vec::with_capacity(2 * (modulus as usize).pow(2));
        for m in 0..modulus {
            for eps in [false, true] {
                for n in 0..modulus {
                    out.push(FiniteQuotientElement {
                        modulus,
                        m,
                        eps,
                        n,
                    });
                }
            }
        }
        out
    }
}

/// Reduce `g` modulo an even `N`. The cocycle `mu^T` only descends for even
/// moduli, since `(-1)^{eps * n}` must depend on `n` mod `N` alone.
pub fn quotient_project(g: &GroupElement, modulus: u32) -> Result<FiniteQuotientElement> {
    if modulus == 0 || modulus % 2 != 0 {
        return Err(Error::OddModulus(modulus));
    }
    let nn = modulus as i64;
    Ok(FiniteQuotientElement {
        modulus,
        m: g.m.rem_euclid(nn) as u32,
        eps: g.eps,
        n: g.n.rem_euclid(nn) as u32,
    })
}

/// The descended cocycle on a finite quotient: `(-1)^{eps_g * n_h}`.
pub fn mu_t_quotient(g: &FiniteQuotientElement, h: &FiniteQuotientElement) -> Mu4 {
    if g.eps {
        Mu4::sign(h.n as i64)
    } else {
        Mu4::ONE
    }
}

// ---------------------------------------------------------------------------
// Cocycles
// ---------------------------------------------------------------------------

/// The distinguished 2-cocycle: `mu^T(g, h) = (-1)^{eps_g * n_h}`.
pub fn mu_t(g: &GroupElement, h: &GroupElement) -> Mu4 {
    if g.eps {
        Mu4::sign(h.n)
    } else {
        Mu4::ONE
    }
}

/// A unit-valued function on `Gamma` with `f(e) = 1`, supported on a finite
/// window and extended by 1 elsewhere. Used to build coboundaries.
#[derive(Clone, Debug)]
pub struct UnitFunction {
    values: BTreeMap<GroupElement, Mu4>,
}

impl UnitFunction {
    /// Build from explicit values; the identity is forced to 1.
    pub fn from_values(mut values: BTreeMap<GroupElement, Mu4>) -> UnitFunction {
        values.insert(GroupElement::IDENTITY, Mu4::ONE);
        UnitFunction { values }
    }

    pub fn constant_one() -> UnitFunction {
        UnitFunction {
            values: BTreeMap::new(),
        }
    }

    /// Random values in `{1, i, -1, -i}` on the window `|m|,|n| <= window`,
    /// 1 outside.
    pub fn random<R: Rng>(window: i64, rng: &mut R) -> UnitFunction {
        let mut values = BTreeMap::new();
        for m in -window..=window {
            for eps in [false, true] {
                for n in -window..=window {
                    let g = GroupElement::new(m, eps, n);
                    values.insert(g, Mu4::from_exponent(rng.gen_range(0..4)));
                }
            }
        }
        UnitFunction::from_values(values)
    }

    pub fn eval(&self, g: &GroupElement) -> Mu4 {
        self.values.get(g).copied().unwrap_or(Mu4::ONE)
    }
}

/// A 2-cocycle on `Gamma` with values in the fourth roots of unity.
#[derive(Clone, Debug)]
pub enum Cocycle {
    /// Identically 1.
    Trivial,
    /// The distinguished cocycle `(-1)^{eps_g * n_h}`.
    MuT,
    /// `base * df` for a unit function `f` (a cohomologous twist).
    Modified {
        base: Box<Cocycle>,
        twist: UnitFunction,
    },
    /// Arbitrary rule; lets tests feed in deliberately broken functions.
    Custom {
        label: &'static str,
        rule: fn(&GroupElement, &GroupElement) -> Mu4,
    },
}

impl Cocycle {
    pub fn eval(&self, g: &GroupElement, h: &GroupElement) -> Mu4 {
        match self {
            Cocycle::Trivial => Mu4::ONE,
            Cocycle::MuT => mu_t(g, h),
            Cocycle::Modified { base, twist } => {
                let df = twist.eval(g) * twist.eval(h) / twist.eval(&(*g * *h));
                base.eval(g, h) * df
            }
            Cocycle::Custom { rule, .. } => rule(g, h),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Cocycle::Trivial => "trivial",
            Cocycle::MuT => "muT",
            Cocycle::Modified { .. } => "coboundary-modified",
            Cocycle::Custom { label, .. } => label,
        }
    }
}

/// Multiply `c` by the coboundary `df(g,h) = f(g) f(h) / f(gh)`.
pub fn apply_coboundary(c: &Cocycle, f: UnitFunction) -> Cocycle {
    Cocycle::Modified {
        base: Box::new(c.clone()),
        twist: f,
    }
}

/// Witness for a failed cocycle check.
#[derive(Clone, Debug)]
pub struct CocycleCounterexample {
    pub triple: (GroupElement, GroupElement, GroupElement),
    pub lhs: Mu4,
    pub rhs: Mu4,
}

impl fmt::Display for CocycleCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at (g, h, k) = ({}, {}, {}): mu(g,h) mu(gh,k) = {} but mu(h,k) mu(g,hk) = {}",
            self.triple.0, self.triple.1, self.triple.2, self.lhs, self.rhs
        )
    }
}

/// Result of an exhaustive cocycle check.
#[derive(Clone, Debug)]
pub struct CocycleReport {
    pub normalized: bool,
    pub identity_holds: bool,
    pub triples_checked: u64,
    pub counterexample: Option<CocycleCounterexample>,
}

impl CocycleReport {
    pub fn pass(&self) -> bool {
        self.normalized && self.identity_holds
    }
}

/// Exhaustively check normalization and the 2-cocycle identity
/// `mu(g,h) mu(gh,k) = mu(h,k) mu(g,hk)` on all triples from the window
/// `|m|, |n| <= window`.
pub fn check_cocycle_identity(c: &Cocycle, window: i64) -> CocycleReport {
    let elements = window_elements(window);
    let mut normalized = true;
    for g in &elements {
        if !c.eval(&GroupElement::IDENTITY, g).is_one() || !c.eval(g, &GroupElement::IDENTITY).is_one()
        {
            normalized = false;
            break;
        }
    }
    let mut triples_checked = 0u64;
    for g in &elements {
        for h in &elements {
            let gh = *g * *h;
            let mu_gh = c.eval(g, h);
            for k in &elements {
                triples_checked += 1;
                let lhs = mu_gh * c.eval(&gh, k);
                let rhs = c.eval(h, k) * c.eval(g, &(*h * *k));
                if lhs != rhs {
                    return CocycleReport {
                        normalized,
                        identity_holds: false,
                        triples_checked,
                        counterexample: Some(CocycleCounterexample {
                            triple: (*g, *h, *k),
                            lhs,
                            rhs,
                        }),
                    };
                }
            }
        }
    }
    CocycleReport {
        normalized,
        identity_holds: true,
        triples_checked,
        counterexample: None,
    }
}

/// Exhaustively check the descended cocycle on the full finite quotient.
pub fn check_descended_cocycle(modulus: u32) -> Result<CocycleReport> {
    if modulus == 0 || modulus % 2 != 0 {
        return Err(Error::OddModulus(modulus));
    }
    let elements = FiniteQuotientElement::enumerate(modulus);
    let mut normalized = true;
    let identity = FiniteQuotientElement::identity(modulus);
    for g in &elements {
        if !mu_t_quotient(&identity, g).is_one() || !mu_t_quotient(g, &identity).is_one() {
            normalized = false;
        }
    }
    let mut triples_checked = 0u64;
    for g in &elements {
        for h in &elements {
            let gh = g.multiply(h);
            let mu_gh = mu_t_quotient(g, h);
            for k in &elements {
                triples_checked += 1;
                let lhs = mu_gh * mu_t_quotient(&gh, k);
                let rhs = mu_t_quotient(h, k) * mu_t_quotient(g, &h.multiply(k));
                if lhs != rhs {
                    return Ok(CocycleReport {
                        normalized,
                        identity_holds: false,
                        triples_checked,
                        counterexample: None,
                    });
                }
            }
        }
    }
    Ok(CocycleReport {
        normalized,
        identity_holds: true,
        triples_checked,
        counterexample: None,
    })
}

/// All elements with `|m|, |n| <= window`.
pub fn window_elements(window: i64) -> Vec<GroupElement> {
    let mut out = Vec::new();
    for m in -window..=window {
        for eps in [false, true] {
            for n in -window..=window {
                out.push(GroupElement::new(m, eps, n));
            }
        }
    }
    out
}

/// `b_c(g, h) = c(g,h) / c(h,g)` for a commuting pair; coboundary-invariant.
pub fn commutator_bicharacter(c: &Cocycle, g: &GroupElement, h: &GroupElement) -> Result<Mu4> {
    if !g.commutes_with(h) {
        return Err(Error::NonCommutingPair);
    }
    Ok(c.eval(g, h) / c.eval(h, g))
}

/// Cohomology class of a cocycle restricted to the abelian subgroup `<s, Y>`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CohomologyClass {
    Trivial,
    Nontrivial,
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyClass::Trivial => write!(f, "trivial"),
            CohomologyClass::Nontrivial => write!(f, "nontrivial"),
        }
    }
}

/// Decide the class of `c` on `<s, Y> ≅ Z/2 × Z`: the commutator bicharacter
/// at `(s, Y)` is a complete invariant there, because that subgroup carries
/// exactly two cohomology classes.
pub fn cohomology_class_indicator(c: &Cocycle) -> CohomologyClass {
    let b = commutator_bicharacter(c, &GroupElement::S, &GroupElement::Y)
        .expect("s and Y commute");
    if b.is_one() {
        CohomologyClass::Trivial
    } else {
        CohomologyClass::Nontrivial
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn involution_squares_to_identity() {
        assert_eq!(GroupElement::S * GroupElement::S, GroupElement::IDENTITY);
    }

    #[test]
    fn s_conjugates_x_to_inverse() {
        let sx = GroupElement::S * GroupElement::X;
        assert_eq!(sx, GroupElement::new(-1, true, 0));
        assert_eq!(sx, GroupElement::X.inverse() * GroupElement::S);
    }

    #[test]
    fn x_and_y_commute() {
        assert_eq!(
            GroupElement::X * GroupElement::Y,
            GroupElement::Y * GroupElement::X
        );
        assert_eq!(GroupElement::X * GroupElement::Y, GroupElement::new(1, false, 1));
    }

    #[test]
    fn group_axioms_on_window() {
        let elements = window_elements(4);
        for g in &elements {
            assert_eq!(*g * GroupElement::IDENTITY, *g);
            assert_eq!(GroupElement::IDENTITY * *g, *g);
            assert_eq!(*g * g.inverse(), GroupElement::IDENTITY);
            assert_eq!(g.inverse() * *g, GroupElement::IDENTITY);
        }
        for a in &elements {
            for b in &elements {
                for c in &elements {
                    assert_eq!((*a * *b) * *c, *a * (*b * *c));
                }
            }
        }
    }

    #[test]
    fn word_evaluation() {
        assert_eq!(
            word_evaluate(&[(Gen::S, 1), (Gen::X, 1), (Gen::S, 1)]),
            GroupElement::X.inverse()
        );
        assert_eq!(word_evaluate(&[]), GroupElement::IDENTITY);
        assert_eq!(
            word_evaluate(&[(Gen::X, 2), (Gen::Y, -1), (Gen::S, 1)]),
            GroupElement::new(2, true, -1)
        );
    }

    #[test]
    fn mu_t_values() {
        assert_eq!(mu_t(&GroupElement::S, &GroupElement::Y), Mu4::MINUS_ONE);
        assert_eq!(mu_t(&GroupElement::Y, &GroupElement::S), Mu4::ONE);
        for h in window_elements(2) {
            assert_eq!(mu_t(&GroupElement::X, &h), Mu4::ONE);
        }
    }

    #[test]
    fn mu_t_trivial_on_named_subgroups() {
        // on Z_A ⋊ Z/2 (n = 0 both sides), on Z_B alone, and on Z/2 alone
        for m1 in -3..=3 {
            for e1 in [false, true] {
                for m2 in -3..=3 {
                    for e2 in [false, true] {
                        let g = GroupElement::new(m1, e1, 0);
                        let h = GroupElement::new(m2, e2, 0);
                        assert_eq!(mu_t(&g, &h), Mu4::ONE);
                    }
                }
            }
        }
        for n1 in -3..=3 {
            for n2 in -3..=3 {
                let g = GroupElement::new(0, false, n1);
                let h = GroupElement::new(0, false, n2);
                assert_eq!(mu_t(&g, &h), Mu4::ONE);
            }
        }
    }

    #[test]
    fn cocycle_identity_window() {
        assert!(check_cocycle_identity(&Cocycle::MuT, 3).pass());
        assert!(check_cocycle_identity(&Cocycle::Trivial, 3).pass());
    }

    #[test]
    fn corrupted_rule_fails_with_witness() {
        fn broken(g: &GroupElement, _h: &GroupElement) -> Mu4 {
            Mu4::sign(i64::from(g.eps))
        }
        let c = Cocycle::Custom {
            label: "broken",
            rule: broken,
        };
        let report = check_cocycle_identity(&c, 2);
        assert!(!report.pass());
        assert!(report.counterexample.is_some() || !report.normalized);
    }

    #[test]
    fn coboundaries_are_cocycles() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = UnitFunction::random(2, &mut rng);
        let df = apply_coboundary(&Cocycle::Trivial, f);
        assert!(check_cocycle_identity(&df, 2).pass());
    }

    #[test]
    fn bicharacter_values() {
        assert_eq!(
            commutator_bicharacter(&Cocycle::MuT, &GroupElement::S, &GroupElement::Y).unwrap(),
            Mu4::MINUS_ONE
        );
        assert_eq!(
            commutator_bicharacter(&Cocycle::MuT, &GroupElement::X, &GroupElement::Y).unwrap(),
            Mu4::ONE
        );
        assert_eq!(
            commutator_bicharacter(&Cocycle::Trivial, &GroupElement::S, &GroupElement::Y).unwrap(),
            Mu4::ONE
        );
        assert!(matches!(
            commutator_bicharacter(&Cocycle::MuT, &GroupElement::S, &GroupElement::X),
            Err(Error::NonCommutingPair)
        ));
    }

    #[test]
    fn class_indicator_is_coboundary_invariant() {
        assert_eq!(
            cohomology_class_indicator(&Cocycle::MuT),
            CohomologyClass::Nontrivial
        );
        assert_eq!(
            cohomology_class_indicator(&Cocycle::Trivial),
            CohomologyClass::Trivial
        );
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let f = UnitFunction::random(3, &mut rng);
            let modified = apply_coboundary(&Cocycle::MuT, f);
            assert_eq!(
                cohomology_class_indicator(&modified),
                CohomologyClass::Nontrivial
            );
        }
        let identity_twist = apply_coboundary(&Cocycle::MuT, UnitFunction::constant_one());
        for g in window_elements(2) {
            for h in window_elements(2) {
                assert_eq!(identity_twist.eval(&g, &h), mu_t(&g, &h));
            }
        }
    }

    #[test]
    fn quotient_projection() {
        assert_eq!(
            quotient_project(&GroupElement::new(5, true, 3), 4).unwrap(),
            FiniteQuotientElement {
                modulus: 4,
                m: 1,
                eps: true,
                n: 3
            }
        );
        assert_eq!(
            quotient_project(&GroupElement::new(0, true, 2), 2).unwrap(),
            FiniteQuotientElement {
                modulus: 2,
                m: 0,
                eps: true,
                n: 0
            }
        );
        assert_eq!(
            quotient_project(&GroupElement::new(1, false, -1), 6).unwrap(),
            FiniteQuotientElement {
                modulus: 6,
                m: 1,
                eps: false,
                n: 5
            }
        );
        assert!(matches!(
            quotient_project(&GroupElement::IDENTITY, 3),
            Err(Error::OddModulus(3))
        ));
    }

    #[test]
    fn descended_cocycle_passes_for_small_even_moduli() {
        for n in [2u32, 4, 6, 8] {
            let report = check_descended_cocycle(n).unwrap();
            assert!(report.pass(), "modulus {n}");
            let order = 2 * u64::from(n) * u64::from(n);
            assert_eq!(report.triples_checked, order.pow(3));
        }
    }

    #[test]
    fn quotient_group_axioms() {
        for n in [2u32, 4] {
            let elements = FiniteQuotientElement::enumerate(n);
            assert_eq!(elements.len(), 2 * (n as usize).pow(2));
            let e = FiniteQuotientElement::identity(n);
            for g in &elements {
                assert_eq!(g.multiply(&g.inverse()), e);
                assert_eq!(g.inverse().multiply(g), e);
            }
        }
    }
}
