//! The twisted group algebra `C[Gamma, mu^T]` and its untwisted counterpart.
//!
//! Elements are finite formal sums of basis symbols `N_g` with exact
//! coefficients, multiplied by the rule `N_g N_h = mu(g,h) N_{gh}` where
//! `mu = mu^T` in the twisted flavor and `mu = 1` in the untwisted one.

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{mu_t, mu_t_quotient, FiniteQuotientElement, GroupElement};
use crate::scalars::{Cyclotomic, Mu4};
use crate::{Error, Result};

/// Which multiplication rule an element obeys.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Flavor {
    Twisted,
    Untwisted,
}

impl Flavor {
    /// The cocycle value used by this flavor's multiplication.
    pub fn cocycle_value(self, g: &GroupElement, h: &GroupElement) -> Mu4 {
        match self {
            Flavor::Twisted => mu_t(g, h),
            Flavor::Untwisted => Mu4::ONE,
        }
    }

    pub fn cocycle_value_quotient(
        self,
        g: &FiniteQuotientElement,
        h: &FiniteQuotientElement,
    ) -> Mu4 {
        match self {
            Flavor::Twisted => mu_t_quotient(g, h),
            Flavor::Untwisted => Mu4::ONE,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Twisted => write!(f, "twisted"),
            Flavor::Untwisted => write!(f, "untwisted"),
        }
    }
}

/// A finitely supported element of the (un)twisted group algebra.
///
/// The support map never stores zero coefficients, and its `BTreeMap` keeps
/// terms in the canonical lexicographic order on `(m, eps, n)`, so equality
/// is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    flavor: Flavor,
    terms: BTreeMap<GroupElement, Cyclotomic>,
}

impl AlgebraElement {
    pub fn zero(flavor: Flavor) -> AlgebraElement {
        AlgebraElement {
            flavor,
            terms: BTreeMap::new(),
        }
    }

    /// The basis symbol `N_g`.
    pub fn basis(flavor: Flavor, g: GroupElement) -> AlgebraElement {
        let mut terms = BTreeMap::new();
        terms.insert(g, Cyclotomic::one());
        AlgebraElement { flavor, terms }
    }

    /// The unit `N_e`.
    pub fn unit(flavor: Flavor) -> AlgebraElement {
        AlgebraElement::basis(flavor, GroupElement::IDENTITY)
    }

    pub fn n_s(flavor: Flavor) -> AlgebraElement {
        AlgebraElement::basis(flavor, GroupElement::S)
    }

    pub fn n_x(flavor: Flavor) -> AlgebraElement {
        AlgebraElement::basis(flavor, GroupElement::X)
    }

    pub fn n_y(flavor: Flavor) -> AlgebraElement {
        AlgebraElement::basis(flavor, GroupElement::Y)
    }

    pub fn from_terms(
        flavor: Flavor,
        terms: impl IntoIterator<Item = (GroupElement, Cyclotomic)>,
    ) -> AlgebraElement {
        let mut out = AlgebraElement::zero(flavor);
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    fn add_term(&mut self, g: GroupElement, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&g) {
            None => {
                self.terms.insert(g, c);
            }
            Some(existing) => {
                let sum = existing + c;
                if !sum.is_zero() {
                    self.terms.insert(g, sum);
                }
            }
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, Cyclotomic> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &GroupElement) -> Cyclotomic {
        self.terms.get(g).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn checked_add(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        if self.flavor != rhs.flavor {
            return Err(Error::FlavorMismatch);
        }
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(*g, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        self.checked_add(&-rhs)
    }

    /// Bilinear extension of `N_g N_h = mu(g,h) N_{gh}`.
    pub fn checked_mul(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        if self.flavor != rhs.flavor {
            return Err(Error::FlavorMismatch);
        }
        let mut out = AlgebraElement::zero(self.flavor);
        for (g, a) in &self.terms {
            for (h, b) in &rhs.terms {
                let mu = self.flavor.cocycle_value(g, h);
                let coeff = a.checked_mul(b)?.checked_mul(&mu.to_cyclotomic())?;
                out.add_term(*g * *h, coeff);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclotomic) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(self.flavor);
        }
        AlgebraElement {
            flavor: self.flavor,
            terms: self
                .terms
                .iter()
                .map(|(g, a)| (*g, a.checked_mul(c).expect("scalar conductor")))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::unit(self.flavor);
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }
}

impl std::ops::Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            flavor: self.flavor,
            terms: self.terms.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }
}

impl std::ops::Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

macro_rules! forward_algebra_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &AlgebraElement {
            type Output = AlgebraElement;
            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                self.$checked(rhs).expect("flavor mismatch")
            }
        }
        impl std::ops::$trait for AlgebraElement {
            type Output = AlgebraElement;
            fn $method(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$checked(&rhs).expect("flavor mismatch")
            }
        }
    };
}

forward_algebra_binop!(Add, add, checked_add);
forward_algebra_binop!(Sub, sub, checked_sub);
forward_algebra_binop!(Mul, mul, checked_mul);

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| {
                if c.is_one() {
                    format!("N{g}")
                } else {
                    format!("({c})*N{g}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// Presentation checks
// ---------------------------------------------------------------------------

/// Outcome of evaluating one defining relation as an algebra identity.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
    pub residual: AlgebraElement,
}

/// Per-relation report for one flavor's presentation.
#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub flavor: Flavor,
    pub relations: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn pass(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

/// Evaluate the four defining relations of the flavor's presentation, plus
/// the conjugation consequence `N_s N_Y N_s^{-1} = ∓ N_Y`, as exact algebra
/// identities.
pub fn verify_presentation(flavor: Flavor) -> PresentationReport {
    let s = AlgebraElement::n_s(flavor);
    let x = AlgebraElement::n_x(flavor);
    let y = AlgebraElement::n_y(flavor);
    let x_inv = AlgebraElement::basis(flavor, GroupElement::X.inverse());
    let unit = AlgebraElement::unit(flavor);

    let mut relations = Vec::new();
    let mut push = |name: &str, residual: AlgebraElement| {
        relations.push(RelationCheck {
            name: name.to_string(),
            holds: residual.is_zero(),
            residual,
        });
    };

    push("s^2 - 1", &(&s * &s) - &unit);
    match flavor {
        Flavor::Twisted => push("s*Y + Y*s", &(&s * &y) + &(&y * &s)),
        Flavor::Untwisted => push("s*Y - Y*s", &(&s * &y) - &(&y * &s)),
    }
    push("s*X - X^{-1}*s", &(&s * &x) - &(&x_inv * &s));
    push("X*Y - Y*X", &(&x * &y) - &(&y * &x));

    // N_s is its own inverse, so conjugation is s * Y * s.
    let conjugated = &(&s * &y) * &s;
    match flavor {
        Flavor::Twisted => push("s*Y*s^{-1} + Y", conjugated + y.clone()),
        Flavor::Untwisted => push("s*Y*s^{-1} - Y", conjugated - y.clone()),
    }

    PresentationReport { flavor, relations }
}

// ---------------------------------------------------------------------------
// Finite quotient algebras
// ---------------------------------------------------------------------------

/// The group algebra of an even finite quotient, twisted by the descended
/// cocycle. Mostly a carrier for the dimension identity `2 N^2` and the
/// structure-constant rule.
#[derive(Copy, Clone, Debug)]
pub struct FiniteAlgebra {
    pub modulus: u32,
    pub flavor: Flavor,
}

impl FiniteAlgebra {
    pub fn new(modulus: u32, flavor: Flavor) -> Result<FiniteAlgebra> {
        if modulus == 0 || modulus % 2 != 0 {
            return Err(Error::OddModulus(modulus));
        }
        Ok(FiniteAlgebra { modulus, flavor })
    }

    /// Linear dimension, `2 N^2`.
    pub fn dimension(&self) -> u64 {
        2 * u64::from(self.modulus) * u64::from(self.modulus)
    }

    /// Structure constants: `N_g N_h = mu(g,h) N_{gh}` in the quotient.
    pub fn basis_product(
        &self,
        g: &FiniteQuotientElement,
        h: &FiniteQuotientElement,
    ) -> (Mu4, FiniteQuotientElement) {
        (self.flavor.cocycle_value_quotient(g, h), g.multiply(h))
    }
}

/// Linear dimension of the finite quotient algebra: `2 N^2` for even `N`.
pub fn finite_dimension(modulus: u32) -> Result<u64> {
    Ok(FiniteAlgebra::new(modulus, Flavor::Twisted)?.dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat_int;

    fn sy() -> GroupElement {
        GroupElement::S * GroupElement::Y
    }

    #[test]
    fn twisted_s_y_product_picks_up_sign() {
        let s = AlgebraElement::n_s(Flavor::Twisted);
        let y = AlgebraElement::n_y(Flavor::Twisted);
        let expected = -AlgebraElement::basis(Flavor::Twisted, sy());
        assert_eq!(&s * &y, expected);
    }

    #[test]
    fn s_squares_to_unit() {
        for flavor in [Flavor::Twisted, Flavor::Untwisted] {
            let s = AlgebraElement::n_s(flavor);
            assert_eq!(&s * &s, AlgebraElement::unit(flavor));
        }
    }

    #[test]
    fn binomial_square_of_x_plus_y() {
        for flavor in [Flavor::Twisted, Flavor::Untwisted] {
            let x = AlgebraElement::n_x(flavor);
            let y = AlgebraElement::n_y(flavor);
            let square = (&x + &y).pow(2).unwrap();
            let expected = AlgebraElement::from_terms(
                flavor,
                [
                    (GroupElement::x_pow(2), Cyclotomic::one()),
                    (
                        GroupElement::X * GroupElement::Y,
                        Cyclotomic::from_int(2),
                    ),
                    (GroupElement::y_pow(2), Cyclotomic::one()),
                ],
            );
            assert_eq!(square, expected, "flavor {flavor}");
        }
    }

    #[test]
    fn presentation_reports_pass() {
        for flavor in [Flavor::Twisted, Flavor::Untwisted] {
            let report = verify_presentation(flavor);
            assert_eq!(report.relations.len(), 5);
            assert!(report.pass(), "flavor {flavor}: {report:?}");
        }
    }

    #[test]
    fn unit_is_two_sided() {
        let a = AlgebraElement::from_terms(
            Flavor::Twisted,
            [
                (GroupElement::new(1, true, -2), Cyclotomic::i()),
                (GroupElement::new(0, false, 1), Cyclotomic::from_rational(crate::scalars::rat(3, 2))),
            ],
        );
        let unit = AlgebraElement::unit(Flavor::Twisted);
        assert_eq!(&a * &unit, a);
        assert_eq!(&unit * &a, a);
    }

    #[test]
    fn subalgebra_generated_by_x_y_is_commutative() {
        // twisted flavor: mu^T is trivial on <X, Y>, so N_X, N_Y commute
        let x = AlgebraElement::n_x(Flavor::Twisted);
        let y = AlgebraElement::n_y(Flavor::Twisted);
        let a = &(&x + &y) * &(&x + &(&y * &y));
        let b = &(&x + &(&y * &y)) * &(&x + &y);
        assert_eq!(a, b);
        assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn conjugation_action_on_generators() {
        for flavor in [Flavor::Twisted, Flavor::Untwisted] {
            let s = AlgebraElement::n_s(flavor);
            let x = AlgebraElement::n_x(flavor);
            let y = AlgebraElement::n_y(flavor);
            let x_inv = AlgebraElement::basis(flavor, GroupElement::X.inverse());
            assert_eq!(&(&s * &x) * &s, x_inv, "s X s = X^-1, flavor {flavor}");
            let conj_y = &(&s * &y) * &s;
            match flavor {
                Flavor::Twisted => assert_eq!(conj_y, -&y),
                Flavor::Untwisted => assert_eq!(conj_y, y.clone()),
            }
        }
    }

    #[test]
    fn flavor_mismatch_is_rejected() {
        let t = AlgebraElement::n_s(Flavor::Twisted);
        let u = AlgebraElement::n_s(Flavor::Untwisted);
        assert!(matches!(t.checked_mul(&u), Err(Error::FlavorMismatch)));
        assert!(matches!(t.checked_add(&u), Err(Error::FlavorMismatch)));
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let x = AlgebraElement::n_x(Flavor::Twisted);
        let zero = &x - &x;
        assert!(zero.is_zero());
        assert!(zero.terms().is_empty());
        let scaled = x.scale(&Cyclotomic::zero());
        assert!(scaled.is_zero());
    }

    #[test]
    fn finite_dimensions() {
        assert_eq!(finite_dimension(2).unwrap(), 8);
        assert_eq!(finite_dimension(4).unwrap(), 32);
        assert_eq!(finite_dimension(6).unwrap(), 72);
        assert!(matches!(finite_dimension(3), Err(Error::OddModulus(3))));
    }

    #[test]
    fn finite_structure_constants_match_infinite_ones() {
        let alg = FiniteAlgebra::new(4, Flavor::Twisted).unwrap();
        let g = crate::group::quotient_project(&GroupElement::S, 4).unwrap();
        let h = crate::group::quotient_project(&GroupElement::Y, 4).unwrap();
        let (mu, gh) = alg.basis_product(&g, &h);
        assert_eq!(mu, Mu4::MINUS_ONE);
        assert_eq!(gh, crate::group::quotient_project(&sy(), 4).unwrap());
    }

    #[test]
    fn scale_by_exact_scalar() {
        let y = AlgebraElement::n_y(Flavor::Untwisted);
        let scaled = y.scale(&Cyclotomic::from_int(5));
        assert_eq!(
            scaled.coefficient(&GroupElement::Y),
            Cyclotomic::from_rational(rat_int(5))
        );
    }
}
