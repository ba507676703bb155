//! Depth-zero model of the multiplicative groups of a local field and its
//! tame quadratic/quartic extensions, modulo principal units.
//!
//! An element is a pair `(v, t)`: valuation exponent of the chosen
//! uniformizer and Teichmuller exponent of the fixed primitive (q-1)-st root
//! of unity `zeta`. Every character in play is depth zero (trivial on
//! principal units), so this finite model is faithful for all the identities
//! verified here. Norm maps act by `t ↦ d*t` on units and send the
//! uniformizer to stored data: `(1, 0)` for the quadratic extension and
//! `(1, 1)` for the quartic one (the latter cross-checked against the
//! conjugate-product computation).

use std::fmt;

use crate::scalars::Mu4;
use crate::{Error, Result};

/// An element of `E^x / (1 + p_E)`: uniformizer exponent `v` and Teichmuller
/// exponent `t`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct DepthZeroElement {
    pub v: i64,
    pub t: i64,
}

impl DepthZeroElement {
    pub fn new(v: i64, t: i64) -> DepthZeroElement {
        DepthZeroElement { v, t }
    }

    pub fn uniformizer() -> DepthZeroElement {
        DepthZeroElement { v: 1, t: 0 }
    }

    pub fn teichmuller(t: i64) -> DepthZeroElement {
        DepthZeroElement { v: 0, t }
    }

    pub fn identity() -> DepthZeroElement {
        DepthZeroElement { v: 0, t: 0 }
    }

    pub fn is_unit(&self) -> bool {
        self.v == 0
    }
}

impl fmt::Display for DepthZeroElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi^{} zeta^{}", self.v, self.t)
    }
}

/// A tame totally ramified extension of degree `d ∈ {1, 2, 4}`: unit norms
/// raise Teichmuller exponents to the d-th power, and the uniformizer's norm
/// is stored in base-field coordinates.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct TameExtensionSpec {
    pub degree: u32,
    pub uniformizer_norm: DepthZeroElement,
}

impl TameExtensionSpec {
    /// The base field itself.
    pub fn trivial() -> TameExtensionSpec {
        TameExtensionSpec {
            degree: 1,
            uniformizer_norm: DepthZeroElement::uniformizer(),
        }
    }

    /// Splitting field of `X^2 + pi`: the uniformizer squares to `-pi`, and
    /// the product of the two conjugates `±pi_E` is `-pi_E^2 = pi`.
    pub fn quadratic() -> TameExtensionSpec {
        TameExtensionSpec {
            degree: 2,
            uniformizer_norm: DepthZeroElement::new(1, 0),
        }
    }

    /// Splitting field of `X^4 + zeta*pi`: the norm of the uniformizer is
    /// `zeta * pi`.
    pub fn quartic() -> TameExtensionSpec {
        TameExtensionSpec {
            degree: 4,
            uniformizer_norm: DepthZeroElement::new(1, 1),
        }
    }
}

/// A depth-zero character: value on the uniformizer (a fourth root of
/// unity) and the exponent `k` with `zeta ↦ i^k`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct DepthZeroCharacter {
    pub uniformizer_value: Mu4,
    pub zeta_exponent: i64,
}

impl DepthZeroCharacter {
    pub fn pow(&self, e: i64) -> DepthZeroCharacter {
        DepthZeroCharacter {
            uniformizer_value: self.uniformizer_value.pow(e),
            zeta_exponent: self.zeta_exponent * e,
        }
    }

    pub fn inverse(&self) -> DepthZeroCharacter {
        self.pow(-1)
    }
}

/// An element of the norm-one group: `x, y` in quadratic-extension
/// coordinates, `z` in quartic-extension coordinates, with the product of
/// their norms trivial in the base field.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct M0Element {
    pub x: DepthZeroElement,
    pub y: DepthZeroElement,
    pub z: DepthZeroElement,
}

impl M0Element {
    /// Swap the two quadratic coordinates; the constraint is symmetric in
    /// them, so this stays in the group.
    pub fn weyl_swap(&self) -> M0Element {
        M0Element {
            x: self.y,
            y: self.x,
            z: self.z,
        }
    }
}

/// One named identity verified exhaustively.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
    pub cases: u64,
    pub counterexample: Option<String>,
}

/// A bundle of exhaustive identity checks.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub q: u32,
    pub items: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.items.iter().all(|c| c.pass)
    }
}

/// The residue datum: a prime power `q` with `4 | q - 1`, which pins the
/// depth-zero character `eta` by `eta(zeta) = i`.
#[derive(Copy, Clone, Debug)]
pub struct ResidueData {
    q: u32,
}

impl ResidueData {
    pub fn new(q: u32) -> Result<ResidueData> {
        if q < 2 || !is_prime_power(q) || (q - 1) % 4 != 0 {
            return Err(Error::BadResidueOrder(q));
        }
        Ok(ResidueData { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    fn modulus(&self) -> i64 {
        i64::from(self.q) - 1
    }

    /// Canonicalize the Teichmuller exponent into `[0, q-2]`.
    pub fn reduce(&self, e: DepthZeroElement) -> DepthZeroElement {
        DepthZeroElement {
            v: e.v,
            t: e.t.rem_euclid(self.modulus()),
        }
    }

    /// The componentwise group law.
    pub fn compose(&self, a: DepthZeroElement, b: DepthZeroElement) -> DepthZeroElement {
        self.reduce(DepthZeroElement {
            v: a.v + b.v,
            t: a.t + b.t,
        })
    }

    /// Norm map to the base field: `(v, t) ↦ (0, d t) * (uniformizer norm)^v`.
    pub fn norm(&self, ext: &TameExtensionSpec, e: DepthZeroElement) -> DepthZeroElement {
        self.reduce(DepthZeroElement {
            v: e.v * ext.uniformizer_norm.v,
            t: i64::from(ext.degree) * e.t + e.v * ext.uniformizer_norm.t,
        })
    }

    /// The quartic uniformizer norm computed from the four conjugates
    /// `i^j * pi_E` instead of the stored data: the product is
    /// `i^6 pi_E^4 = -pi_E^4 = zeta * pi`.
    pub fn quartic_uniformizer_norm_from_conjugates(&self) -> DepthZeroElement {
        let quarter = self.modulus() / 4;
        // i = zeta^{(q-1)/4}; total i-exponent over the conjugates is 0+1+2+3
        let i_part = 6 * quarter;
        // pi_E^4 = -zeta * pi: Teichmuller exponent (q-1)/2 + 1, valuation 1
        let pi4_t = self.modulus() / 2 + 1;
        self.reduce(DepthZeroElement {
            v: 1,
            t: i_part + pi4_t,
        })
    }

    /// `chi(e) = u^v * i^{k t}`.
    pub fn eval_char(&self, chi: &DepthZeroCharacter, e: DepthZeroElement) -> Mu4 {
        let e = self.reduce(e);
        chi.uniformizer_value.pow(e.v) * Mu4::from_exponent(chi.zeta_exponent * e.t)
    }

    /// `eta`: trivial on the uniformizer, `zeta ↦ i`. Requires `4 | q - 1`
    /// (guaranteed by construction) so this is well defined on residues.
    pub fn eta(&self) -> DepthZeroCharacter {
        DepthZeroCharacter {
            uniformizer_value: Mu4::ONE,
            zeta_exponent: 1,
        }
    }

    /// The unramified character with `pi ↦ -i`.
    pub fn chi0(&self) -> DepthZeroCharacter {
        DepthZeroCharacter {
            uniformizer_value: Mu4::MINUS_I,
            zeta_exponent: 0,
        }
    }

    /// `chi4 = eta^{-1} ∘ N` on quartic-extension elements; always equals
    /// `(-i)^v`.
    pub fn chi4(&self, z: DepthZeroElement) -> Mu4 {
        let value = self.eval_char(&self.eta().inverse(), self.norm(&TameExtensionSpec::quartic(), z));
        debug_assert_eq!(value, Mu4::MINUS_I.pow(z.v));
        value
    }

    /// Validate the norm-one constraint and build an element of the group.
    pub fn m0(
        &self,
        x: DepthZeroElement,
        y: DepthZeroElement,
        z: DepthZeroElement,
    ) -> Result<M0Element> {
        let e2 = TameExtensionSpec::quadratic();
        let e4 = TameExtensionSpec::quartic();
        let product = self.compose(
            self.compose(self.norm(&e2, x), self.norm(&e2, y)),
            self.norm(&e4, z),
        );
        if product != DepthZeroElement::identity() {
            return Err(Error::NormOneViolated);
        }
        Ok(M0Element { x, y, z })
    }

    /// All norm-one triples with component valuations in `[-bound, bound]`
    /// and all Teichmuller residues.
    pub fn enumerate_m0(&self, bound: i64) -> Vec<M0Element> {
        let md = self.modulus();
        let mut out = Vec::new();
        for vx in -bound..=bound {
            for vy in -bound..=bound {
                let vz = -(vx + vy);
                if vz.abs() > bound {
                    continue;
                }
                for tx in 0..md {
                    for ty in 0..md {
                        for tz in 0..md {
                            // norm-one: valuations already sum to zero;
                            // Teichmuller parts of the norms must as well
                            let teich = 2 * tx + 2 * ty + 4 * tz + vz;
                            if teich.rem_euclid(md) == 0 {
                                out.push(M0Element {
                                    x: DepthZeroElement::new(vx, tx),
                                    y: DepthZeroElement::new(vy, ty),
                                    z: DepthZeroElement::new(vz, tz),
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The quadratic character of the norm-one group:
    /// `sigma0(x, y, z) = eta(N(y))`.
    pub fn sigma0(&self, m: &M0Element) -> Mu4 {
        self.eval_char(&self.eta(), self.norm(&TameExtensionSpec::quadratic(), m.y))
    }

    /// Exhaustively verify the four norm-character identities over all
    /// Teichmuller residues and valuations `|v| <= bound`:
    ///
    /// 1. `eta(N(x)) = eta^{-1}(N(y)) * eta^{-1}(N(z))` on the norm-one group;
    /// 2. `eta^2 ∘ N` is trivial on the whole quadratic extension;
    /// 3. `eta^2(N(z)) = 1` for norm-one third components;
    /// 4. `eta^{-1} ∘ N` is trivial on quartic units.
    pub fn verify_norm_character_identities(&self, bound: i64) -> IdentityReport {
        let e2 = TameExtensionSpec::quadratic();
        let e4 = TameExtensionSpec::quartic();
        let eta = self.eta();
        let eta_inv = eta.inverse();
        let eta2 = eta.pow(2);
        let md = self.modulus();
        let mut items = Vec::new();

        let m0 = self.enumerate_m0(bound);

        {
            let mut pass = true;
            let mut witness = None;
            for m in &m0 {
                let lhs = self.eval_char(&eta, self.norm(&e2, m.x));
                let rhs = self.eval_char(&eta_inv, self.norm(&e2, m.y))
                    * self.eval_char(&eta_inv, self.norm(&e4, m.z));
                if lhs != rhs {
                    pass = false;
                    witness = Some(format!("x={}, y={}, z={}", m.x, m.y, m.z));
                    break;
                }
            }
            items.push(IdentityCheck {
                name: "eta(N(x)) = eta^{-1}(N(y)) eta^{-1}(N(z)) on norm-one triples".into(),
                pass,
                cases: m0.len() as u64,
                counterexample: witness,
            });
        }

        {
            let mut pass = true;
            let mut cases = 0;
            let mut witness = None;
            'outer: for v in -bound..=bound {
                for t in 0..md {
                    cases += 1;
                    let e = DepthZeroElement::new(v, t);
                    if self.eval_char(&eta2, self.norm(&e2, e)) != Mu4::ONE {
                        pass = false;
                        witness = Some(format!("{e}"));
                        break 'outer;
                    }
                }
            }
            items.push(IdentityCheck {
                name: "eta^2 trivial on quadratic norms".into(),
                pass,
                cases,
                counterexample: witness,
            });
        }

        {
            let mut pass = true;
            let mut witness = None;
            for m in &m0 {
                if self.eval_char(&eta2, self.norm(&e4, m.z)) != Mu4::ONE {
                    pass = false;
                    witness = Some(format!("{}", m.z));
                    break;
                }
            }
            items.push(IdentityCheck {
                name: "eta^2 trivial on quartic norms of norm-one third components".into(),
                pass,
                cases: m0.len() as u64,
                counterexample: witness,
            });
        }

        {
            let mut pass = true;
            let mut witness = None;
            for t in 0..md {
                let u = DepthZeroElement::teichmuller(t);
                if self.eval_char(&eta_inv, self.norm(&e4, u)) != Mu4::ONE {
                    pass = false;
                    witness = Some(format!("{u}"));
                    break;
                }
            }
            items.push(IdentityCheck {
                name: "eta^{-1} trivial on quartic unit norms".into(),
                pass,
                cases: md as u64,
                counterexample: witness,
            });
        }

        IdentityReport {
            q: self.q,
            items,
        }
    }

    /// Exhaustively verify that swapping the two quadratic coordinates
    /// twists `sigma0` by the unramified character `(1 : 1 : -i)`:
    /// `sigma0(swap(m)) = chi4(z) * sigma0(m)`, with
    /// `chi4(z) = (-i)^{val(N(z))}` and `val(N(z)) = v(z)`, all on the
    /// enumerated norm-one group.
    pub fn verify_weyl_twist(&self, bound: i64) -> IdentityReport {
        let e4 = TameExtensionSpec::quartic();
        let m0 = self.enumerate_m0(bound);
        let mut items = Vec::new();

        {
            let mut pass = true;
            let mut witness = None;
            for m in &m0 {
                let lhs = self.sigma0(&m.weyl_swap());
                let rhs = self.chi4(m.z) * self.sigma0(m);
                if lhs != rhs {
                    pass = false;
                    witness = Some(format!("x={}, y={}, z={}", m.x, m.y, m.z));
                    break;
                }
            }
            items.push(IdentityCheck {
                name: "sigma0(swap(m)) = chi4(z) sigma0(m)".into(),
                pass,
                cases: m0.len() as u64,
                counterexample: witness,
            });
        }

        {
            // chi4 is unramified with coordinates (1 : 1 : -i): its value is
            // (-i) to the base-field valuation of the norm, which equals v(z)
            // because the extension is totally ramified. This holds for every
            // element of the quartic extension, not just norm-one components.
            let mut pass = true;
            let mut cases = 0;
            let mut witness = None;
            'outer: for v in -bound..=bound {
                for t in 0..self.modulus() {
                    cases += 1;
                    let z = DepthZeroElement::new(v, t);
                    let val_f = self.norm(&e4, z).v;
                    if val_f != z.v || self.chi4(z) != Mu4::MINUS_I.pow(val_f) {
                        pass = false;
                        witness = Some(format!("{z}"));
                        break 'outer;
                    }
                }
            }
            items.push(IdentityCheck {
                name: "chi4(z) = (-i)^{val(N(z))} with val(N(z)) = v(z), all z".into(),
                pass,
                cases,
                counterexample: witness,
            });
        }

        {
            let mut pass = true;
            let mut witness = None;
            for m in &m0 {
                if m.z.v % 2 != 0 {
                    pass = false;
                    witness = Some(format!("{}", m.z));
                    break;
                }
            }
            items.push(IdentityCheck {
                name: "third components have even valuation".into(),
                pass,
                cases: m0.len() as u64,
                counterexample: witness,
            });
        }

        IdentityReport {
            q: self.q,
            items,
        }
    }
}

fn is_prime_power(q: u32) -> bool {
    let mut q = q;
    let mut p = 2u32;
    while p * p <= q {
        if q % p == 0 {
            while q % p == 0 {
                q /= p;
            }
            return q == 1;
        }
        p += 1;
    }
    q > 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q5() -> ResidueData {
        ResidueData::new(5).unwrap()
    }

    fn q13() -> ResidueData {
        ResidueData::new(13).unwrap()
    }

    #[test]
    fn residue_data_preconditions() {
        assert!(ResidueData::new(5).is_ok());
        assert!(ResidueData::new(13).is_ok());
        assert!(ResidueData::new(9).is_ok()); // 3^2, 4 | 8
        assert!(ResidueData::new(25).is_ok());
        assert!(matches!(ResidueData::new(7), Err(Error::BadResidueOrder(7))));
        assert!(matches!(ResidueData::new(12), Err(Error::BadResidueOrder(12))));
        assert!(matches!(ResidueData::new(21), Err(Error::BadResidueOrder(21))));
    }

    #[test]
    fn norms_of_uniformizers_and_units() {
        let f = q5();
        let e2 = TameExtensionSpec::quadratic();
        let e4 = TameExtensionSpec::quartic();
        assert_eq!(
            f.norm(&e4, DepthZeroElement::uniformizer()),
            DepthZeroElement::new(1, 1)
        );
        assert_eq!(
            f.norm(&e4, DepthZeroElement::teichmuller(1)),
            DepthZeroElement::new(0, 0) // 4 ≡ 0 mod 4
        );
        let f13 = q13();
        assert_eq!(
            f13.norm(&e4, DepthZeroElement::teichmuller(1)),
            DepthZeroElement::new(0, 4)
        );
        assert_eq!(
            f.norm(&e2, DepthZeroElement::uniformizer()),
            DepthZeroElement::new(1, 0)
        );
    }

    #[test]
    fn quartic_uniformizer_norm_agrees_with_conjugate_product() {
        for f in [q5(), q13()] {
            let stored = f.norm(&TameExtensionSpec::quartic(), DepthZeroElement::uniformizer());
            assert_eq!(stored, f.quartic_uniformizer_norm_from_conjugates());
            assert_eq!(stored, DepthZeroElement::new(1, 1));
        }
    }

    #[test]
    fn character_values() {
        let f = q5();
        let eta = f.eta();
        assert_eq!(f.eval_char(&eta, DepthZeroElement::teichmuller(1)), Mu4::I);
        assert_eq!(f.eval_char(&eta, DepthZeroElement::uniformizer()), Mu4::ONE);
        let chi0 = f.chi0();
        assert_eq!(f.eval_char(&chi0, DepthZeroElement::uniformizer()), Mu4::MINUS_I);
        // eta^4 is trivial everywhere in the model
        let eta4 = eta.pow(4);
        for v in -2..=2 {
            for t in 0..4 {
                assert_eq!(f.eval_char(&eta4, DepthZeroElement::new(v, t)), Mu4::ONE);
            }
        }
    }

    #[test]
    fn chi4_depends_only_on_valuation() {
        let f = q13();
        for t in 0..12 {
            assert_eq!(f.chi4(DepthZeroElement::new(1, t)), Mu4::MINUS_I);
            assert_eq!(f.chi4(DepthZeroElement::new(0, t)), Mu4::ONE);
            assert_eq!(f.chi4(DepthZeroElement::new(2, t)), Mu4::MINUS_ONE);
        }
    }

    #[test]
    fn m0_constraint_and_enumeration() {
        let f = q5();
        let triples = f.enumerate_m0(1);
        assert!(!triples.is_empty());
        for m in &triples {
            assert_eq!(m.x.v + m.y.v + m.z.v, 0);
            let teich = 2 * m.x.t + 2 * m.y.t + 4 * m.z.t + m.z.v;
            assert_eq!(teich.rem_euclid(4), 0);
            assert_eq!(m.z.v % 2, 0, "third component valuation must be even");
        }
        let identity = M0Element {
            x: DepthZeroElement::identity(),
            y: DepthZeroElement::identity(),
            z: DepthZeroElement::identity(),
        };
        assert!(triples.contains(&identity));
        // constructor rejects a violating triple
        assert!(matches!(
            f.m0(
                DepthZeroElement::teichmuller(1),
                DepthZeroElement::identity(),
                DepthZeroElement::identity()
            ),
            Err(Error::NormOneViolated)
        ));
    }

    #[test]
    fn sigma0_examples() {
        let f = q5();
        // y = zeta with compensating x: eta(N(y)) = eta(zeta^2) = -1
        let m = f
            .m0(
                DepthZeroElement::teichmuller(1),
                DepthZeroElement::teichmuller(1),
                DepthZeroElement::identity(),
            )
            .unwrap();
        assert_eq!(f.sigma0(&m), Mu4::MINUS_ONE);
        // y = uniformizer with compensating x: eta is trivial on pi
        let m2 = f
            .m0(
                DepthZeroElement::new(-1, 0),
                DepthZeroElement::uniformizer(),
                DepthZeroElement::identity(),
            )
            .unwrap();
        assert_eq!(f.sigma0(&m2), Mu4::ONE);
        // sigma0 is quadratic on the whole enumerated group
        for m in f.enumerate_m0(1) {
            let s = f.sigma0(&m);
            assert_eq!(s * s, Mu4::ONE);
        }
    }

    #[test]
    fn norm_identities_hold_for_default_fields() {
        for f in [q5(), q13()] {
            let report = f.verify_norm_character_identities(2);
            assert!(report.pass(), "q = {}: {report:?}", f.q());
            assert_eq!(report.items.len(), 4);
        }
    }

    #[test]
    fn weyl_twist_holds_for_default_fields() {
        for f in [q5(), q13()] {
            let report = f.verify_weyl_twist(2);
            assert!(report.pass(), "q = {}: {report:?}", f.q());
        }
    }

    #[test]
    fn valuation_commutes_with_norm() {
        let f = q13();
        for ext in [TameExtensionSpec::quadratic(), TameExtensionSpec::quartic()] {
            for v in -2..=2 {
                for t in 0..12 {
                    let e = DepthZeroElement::new(v, t);
                    assert_eq!(f.norm(&ext, e).v, e.v);
                }
            }
        }
    }
}
