//! Exact scalar tower `Q ⊂ Q(i) ⊂ Q(zeta_N)`.
//!
//! A [`Cyclotomic`] stores an element of `Q[x]/(Phi_N(x))` as a dense
//! coefficient vector over [`Rational`], with `zeta_N ↦ x`. All field
//! operations are exact; [`Cyclotomic::to_float`] is the only bridge to
//! floating point and is reserved for report and mesh output.
//!
//! [`Mu4`] is the multiplicative group `{1, i, -1, -i}` kept as an exponent
//! of `i`; cocycle values and depth-zero character values live there, which
//! keeps the hot exhaustive loops on plain integer arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rational = BigRational;

/// Shorthand for a rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------------------
// Fourth roots of unity
// ---------------------------------------------------------------------------

/// A fourth root of unity `i^k`, `k` mod 4.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mu4 {
    k: u8,
}

impl Mu4 {
    pub const ONE: Mu4 = Mu4 { k: 0 };
    pub const I: Mu4 = Mu4 { k: 1 };
    pub const MINUS_ONE: Mu4 = Mu4 { k: 2 };
    pub const MINUS_I: Mu4 = Mu4 { k: 3 };

    /// `i^k` for any integer exponent.
    pub fn from_exponent(k: i64) -> Mu4 {
        Mu4 {
            k: k.rem_euclid(4) as u8,
        }
    }

    /// `(-1)^k` for any integer exponent.
    pub fn sign(k: i64) -> Mu4 {
        if k.rem_euclid(2) == 0 {
            Mu4::ONE
        } else {
            Mu4::MINUS_ONE
        }
    }

    pub fn exponent(self) -> u8 {
        self.k
    }

    pub fn inv(self) -> Mu4 {
        Mu4::from_exponent(-(self.k as i64))
    }

    pub fn pow(self, e: i64) -> Mu4 {
        Mu4::from_exponent(self.k as i64 * e.rem_euclid(4))
    }

    pub fn is_one(self) -> bool {
        self.k == 0
    }

    /// Embed into the cyclotomic tower at conductor 4.
    pub fn to_cyclotomic(self) -> Cyclotomic {
        match self.k {
            0 => Cyclotomic::one(),
            1 => Cyclotomic::i(),
            2 => -Cyclotomic::one(),
            _ => -Cyclotomic::i(),
        }
    }
}

impl std::ops::Mul for Mu4 {
    type Output = Mu4;
    // roots of unity multiply by adding exponents
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Mu4) -> Mu4 {
        Mu4::from_exponent(self.k as i64 + rhs.k as i64)
    }
}

impl std::ops::Div for Mu4 {
    type Output = Mu4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Mu4) -> Mu4 {
        self * rhs.inv()
    }
}

impl std::ops::Neg for Mu4 {
    type Output = Mu4;
    fn neg(self) -> Mu4 {
        self * Mu4::MINUS_ONE
    }
}

impl fmt::Display for Mu4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.k {
            0 => "1",
            1 => "i",
            2 => "-1",
            _ => "-i",
        };
        write!(f, "{s}")
    }
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

/// Euler totient; degree of the N-th cyclotomic polynomial.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The N-th cyclotomic polynomial, ascending integer coefficients.
///
/// Computed by dividing `x^N - 1` by the product of `Phi_d` over the proper
/// divisors `d | N`. The division is exact over the integers.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "conductor must be positive");
    // x^n - 1
    let mut numerator = vec![0i64; n as usize + 1];
    numerator[0] = -1;
    numerator[n as usize] = 1;
    let mut poly = numerator;
    for d in 1..n {
        if n % d == 0 {
            poly = int_poly_div_exact(&poly, &cyclotomic_polynomial_cached(d));
        }
    }
    poly
}

fn cyclotomic_polynomial_cached(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p = cyclotomic_polynomial(n);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

/// Exact division of integer polynomials (ascending coefficients), monic divisor.
fn int_poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    assert_eq!(den[dn], 1, "divisor must be monic");
    let mut rem: Vec<i64> = num.to_vec();
    let qn = num.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

fn phi_rational(n: u32) -> Vec<Rational> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p: Vec<Rational> = cyclotomic_polynomial_cached(n)
        .iter()
        .map(|&c| rat_int(c))
        .collect();
    cache.lock().unwrap().insert(n, p.clone());
    p
}

// ---------------------------------------------------------------------------
// Cyclotomic field elements
// ---------------------------------------------------------------------------

/// An element of `Q(zeta_N)`, stored as a polynomial in `zeta_N` of degree
/// `< phi(N)` with rational coefficients.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    fn from_reduced(conductor: u32, coeffs: Vec<Rational>) -> Cyclotomic {
        debug_assert_eq!(coeffs.len(), euler_phi(conductor) as usize);
        Cyclotomic { conductor, coeffs }
    }

    /// Zero, at conductor 1.
    pub fn zero() -> Cyclotomic {
        Cyclotomic::from_rational(Rational::zero())
    }

    /// One, at conductor 1.
    pub fn one() -> Cyclotomic {
        Cyclotomic::from_rational(Rational::one())
    }

    /// Embed a rational at conductor 1.
    pub fn from_rational(r: Rational) -> Cyclotomic {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// Embed an integer at conductor 1.
    pub fn from_int(n: i64) -> Cyclotomic {
        Cyclotomic::from_rational(rat_int(n))
    }

    /// `i = zeta_4`, at conductor 4.
    pub fn i() -> Cyclotomic {
        Cyclotomic::root_of_unity(4, 1)
    }

    /// Gaussian rational `re + im*i`, at conductor 4.
    pub fn gaussian(re: Rational, im: Rational) -> Cyclotomic {
        Cyclotomic {
            conductor: 4,
            coeffs: vec![re, im],
        }
    }

    /// `zeta_N^k`, reduced mod `Phi_N`.
    pub fn root_of_unity(n: u32, k: i64) -> Cyclotomic {
        assert!(n >= 1, "conductor must be positive");
        let k = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Cyclotomic::from_reduced(n, reduce_mod_phi(n, coeffs))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients of the representing polynomial, ascending.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express at a larger conductor `to` (requires `conductor | to`).
    pub fn promote(&self, to: u32) -> Result<Cyclotomic> {
        if self.conductor == to {
            return Ok(self.clone());
        }
        if to % self.conductor != 0 {
            return Err(Error::ConductorMismatch(self.conductor, to));
        }
        let step = (to / self.conductor) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[j * step] = c.clone();
        }
        Ok(Cyclotomic::from_reduced(to, reduce_mod_phi(to, raw)))
    }

    fn aligned(&self, other: &Cyclotomic) -> Result<(Cyclotomic, Cyclotomic)> {
        if self.conductor == other.conductor {
            return Ok((self.clone(), other.clone()));
        }
        if other.conductor % self.conductor == 0 {
            Ok((self.promote(other.conductor)?, other.clone()))
        } else if self.conductor % other.conductor == 0 {
            Ok((self.clone(), other.promote(self.conductor)?))
        } else {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        }
    }

    pub fn checked_add(&self, rhs: &Cyclotomic) -> Result<Cyclotomic> {
        let (a, b) = self.aligned(rhs)?;
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        Ok(Cyclotomic::from_reduced(a.conductor, coeffs))
    }

    pub fn checked_sub(&self, rhs: &Cyclotomic) -> Result<Cyclotomic> {
        self.checked_add(&(-rhs))
    }

    pub fn checked_mul(&self, rhs: &Cyclotomic) -> Result<Cyclotomic> {
        let (a, b) = self.aligned(rhs)?;
        let mut raw = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (j, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[j + k] += x * y;
                }
            }
        }
        Ok(Cyclotomic::from_reduced(a.conductor, reduce_mod_phi(a.conductor, raw)))
    }

    pub fn checked_div(&self, rhs: &Cyclotomic) -> Result<Cyclotomic> {
        self.checked_mul(&rhs.inverse()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `Q[x]` modulo `Phi_N`.
    pub fn inverse(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Cyclotomic {
                conductor: self.conductor,
                coeffs: {
                    let mut v = vec![Rational::zero(); self.coeffs.len()];
                    v[0] = Rational::one() / r;
                    v
                },
            });
        }
        let phi = phi_rational(self.conductor);
        let (g, u) = poly_ext_gcd_bezout(&self.coeffs, &phi);
        // g is a nonzero constant since Phi_N is irreducible over Q.
        debug_assert_eq!(poly_degree(&g), Some(0));
        let ginv = Rational::one() / g[0].clone();
        let mut inv: Vec<Rational> = u.into_iter().map(|c| c * &ginv).collect();
        inv.resize(self.coeffs.len(), Rational::zero());
        let inv = reduce_mod_phi(self.conductor, inv);
        Ok(Cyclotomic::from_reduced(self.conductor, inv))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Cyclotomic> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = Cyclotomic::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            base = base.checked_mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// If the element is `q * zeta_N^j` for a rational `q`, return `(q, j)`.
    pub fn as_rational_multiple_of_root(&self) -> Option<(Rational, u32)> {
        for j in 0..self.conductor {
            let candidate = self
                .checked_mul(&Cyclotomic::root_of_unity(self.conductor, -(j as i64)))
                .expect("same conductor");
            if let Some(q) = candidate.as_rational() {
                if !q.is_zero() {
                    return Some((q, j));
                }
            }
        }
        None
    }

    /// Exact square root, when one is representable.
    ///
    /// Handles elements of the form `q * zeta_N^j` with `q` a rational whose
    /// numerator and denominator are perfect squares (up to sign; a factor
    /// `sqrt(-1)` promotes the conductor to `lcm(N, 4)`). The returned root
    /// is normalized so its argument lies in `[0, 1/2)` turns.
    pub fn sqrt(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Ok(Cyclotomic::zero());
        }
        let (q, j) = self
            .as_rational_multiple_of_root()
            .ok_or(Error::NoExactSquareRoot(self.conductor))?;
        let n = self.conductor;
        // zeta_N^j has square root zeta_N^{j/2} when j is even; otherwise it
        // needs conductor 2N, which we refuse (the angle form handles it).
        if j % 2 != 0 {
            // Try again viewing the root at conductor 2N only if that stays small.
            let doubled = self.promote_sqrt_via_double()?;
            return Ok(doubled);
        }
        let mut root = Cyclotomic::root_of_unity(n, (j / 2) as i64);
        let mut q = q;
        if q.is_negative() {
            q = -q;
            let target = lcm_u32(n, 4);
            root = root
                .promote(target)?
                .checked_mul(&Cyclotomic::root_of_unity(target, (target / 4) as i64))?;
        }
        let num = q.numer().sqrt();
        let den = q.denom().sqrt();
        if &num * &num != *q.numer() || &den * &den != *q.denom() {
            return Err(Error::NoExactSquareRoot(self.conductor));
        }
        let result = root.scale(&Rational::new(num, den));
        Ok(normalize_half_turn(result))
    }

    fn promote_sqrt_via_double(&self) -> Result<Cyclotomic> {
        let doubled = 2 * self.conductor;
        if doubled > 48 {
            return Err(Error::NoExactSquareRoot(self.conductor));
        }
        let lifted = self.promote(doubled)?;
        let (q, j) = lifted
            .as_rational_multiple_of_root()
            .ok_or(Error::NoExactSquareRoot(self.conductor))?;
        if j % 2 != 0 {
            return Err(Error::NoExactSquareRoot(self.conductor));
        }
        let mut root = Cyclotomic::root_of_unity(doubled, (j / 2) as i64);
        let mut q = q;
        if q.is_negative() {
            q = -q;
            let target = lcm_u32(doubled, 4);
            root = root
                .promote(target)?
                .checked_mul(&Cyclotomic::root_of_unity(target, (target / 4) as i64))?;
        }
        let num = q.numer().sqrt();
        let den = q.denom().sqrt();
        if &num * &num != *q.numer() || &den * &den != *q.denom() {
            return Err(Error::NoExactSquareRoot(self.conductor));
        }
        Ok(normalize_half_turn(root.scale(&Rational::new(num, den))))
    }

    /// Double-precision complex value; output paths only, never equality.
    pub fn to_float(&self) -> Complex64 {
        let n = self.conductor as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            let angle = 2.0 * std::f64::consts::PI * (j as f64) / n;
            let c = c.to_f64().unwrap_or(f64::NAN);
            acc += Complex64::from_polar(1.0, angle) * c;
        }
        acc
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / num_integer::gcd(a, b) * b
}

/// Pick the representative of `{x, -x}` whose float argument lies in
/// `[0, 1/2)` turns; makes square roots deterministic.
fn normalize_half_turn(x: Cyclotomic) -> Cyclotomic {
    if let Some((q, j)) = x.as_rational_multiple_of_root() {
        let n = x.conductor;
        // argument in turns: j/n, plus 1/2 if q < 0
        let mut num = 2 * j as i64;
        let den = 2 * n as i64;
        if q.is_negative() {
            num += n as i64;
        }
        num = num.rem_euclid(den);
        if 2 * num >= den {
            return -x;
        }
    }
    x
}

fn reduce_mod_phi(conductor: u32, mut raw: Vec<Rational>) -> Vec<Rational> {
    let deg = euler_phi(conductor) as usize;
    let phi = phi_rational(conductor);
    while raw.len() > deg {
        let top = raw.len() - 1;
        let c = raw[top].clone();
        if !c.is_zero() {
            // subtract c * x^(top-deg) * Phi
            let shift = top - deg;
            for (j, p) in phi.iter().enumerate() {
                if !p.is_zero() {
                    let update = &c * p;
                    raw[shift + j] -= update;
                }
            }
        }
        raw.pop();
    }
    raw.resize(deg, Rational::zero());
    raw
}

fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Extended gcd in `Q[x]`: returns `(g, u)` with `u*a + v*b = g` (the `v`
/// cofactor is not needed by callers).
fn poly_ext_gcd_bezout(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0: Vec<Rational> = a.to_vec();
    let mut r1: Vec<Rational> = b.to_vec();
    let mut u0 = vec![Rational::one()];
    let mut u1 = vec![Rational::zero()];
    while poly_degree(&r1).is_some() {
        let (q, rem) = poly_div_rem(&r0, &r1);
        let next_u = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = next_u;
    }
    (r0, u0)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (j, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[j + k] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (j, x) in a.iter().enumerate() {
        out[j] += x;
    }
    for (j, y) in b.iter().enumerate() {
        out[j] -= y;
    }
    out
}

fn poly_div_rem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = poly_degree(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem: Vec<Rational> = num.to_vec();
    let nd = match poly_degree(&rem) {
        Some(d) if d >= dd => d,
        _ => return (vec![Rational::zero()], rem),
    };
    let mut quot = vec![Rational::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone() / lead.clone();
        if !c.is_zero() {
            quot[k] = c.clone();
            for (j, d) in den.iter().enumerate().take(dd + 1) {
                let update = &c * d;
                rem[k + j] -= update;
            }
        }
    }
    while rem.len() > dd {
        rem.pop();
    }
    (quot, rem)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Cyclotomic) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        // Compare inside the common extension.
        let l = lcm_u32(self.conductor, other.conductor);
        match (self.promote(l), other.promote(l)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl Eq for Cyclotomic {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).expect("incompatible conductors")
            }
        }
        impl std::ops::$trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$checked(&rhs).expect("incompatible conductors")
            }
        }
        impl std::ops::$trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$checked(rhs).expect("incompatible conductors")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let base = match (j, self.conductor) {
                (0, _) => String::new(),
                (1, 4) => "i".to_string(),
                (j, n) => {
                    if j == 1 {
                        format!("zeta({n})")
                    } else {
                        format!("zeta({n})^{j}")
                    }
                }
            };
            let term = if base.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                base
            } else if (-c).is_one() {
                format!("-{base}")
            } else {
                format!("{c}*{base}")
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (idx, term) in parts.iter().enumerate() {
            if idx == 0 {
                out.push_str(term);
            } else if let Some(stripped) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(term);
            }
        }
        write!(f, "{out}")
    }
}

// ---------------------------------------------------------------------------
// Scalar literal parser (CLI surface)
// ---------------------------------------------------------------------------

/// Parse an exact scalar literal.
///
/// Grammar: integers, fractions `p/q`, the imaginary unit `i`, roots of
/// unity `zeta(N,k)`, unary minus, `+ - * /`, and parentheses.
pub fn parse_scalar(input: &str) -> Result<Cyclotomic> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input at byte {}",
            p.pos
        )));
    }
    Ok(value)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some('-') => {
                    self.bump();
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                Some('/') => {
                    self.bump();
                    acc = acc.checked_div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Cyclotomic> {
        match self.peek() {
            Some('-') => {
                self.bump();
                Ok(-self.factor()?)
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                Ok(inner)
            }
            Some('i') => {
                self.bump();
                Ok(Cyclotomic::i())
            }
            Some('z') => self.zeta(),
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Cyclotomic::from_int(n))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn zeta(&mut self) -> Result<Cyclotomic> {
        for expected in "zeta".chars() {
            if self.bump() != Some(expected) {
                return Err(Error::Parse("expected 'zeta'".into()));
            }
        }
        if self.bump() != Some('(') {
            return Err(Error::Parse("expected '(' after zeta".into()));
        }
        let n = self.integer()?;
        if self.bump() != Some(',') {
            return Err(Error::Parse("expected ',' in zeta(N,k)".into()));
        }
        let k = self.signed_integer()?;
        if self.bump() != Some(')') {
            return Err(Error::Parse("expected ')' after zeta(N,k)".into()));
        }
        if n < 1 {
            return Err(Error::Parse("zeta conductor must be >= 1".into()));
        }
        Ok(Cyclotomic::root_of_unity(n as u32, k))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected an integer".into()));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| Error::Parse(format!("integer out of range: {text}")))
    }

    fn signed_integer(&mut self) -> Result<i64> {
        if self.peek() == Some('-') {
            self.bump();
            Ok(-self.integer()?)
        } else {
            self.integer()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        // Oracle: divide x^6 - 1 by Phi_1 * Phi_2 * Phi_3 by hand:
        // (x^6 - 1) / (x^4 + x^3 - x - 1) = x^2 - x + 1.
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn i_squares_to_minus_one() {
        let i = Cyclotomic::i();
        assert_eq!(i.checked_mul(&i).unwrap(), Cyclotomic::from_int(-1));
    }

    #[test]
    fn gaussian_product() {
        // (1 + i)(1 - i) = 2
        let a = Cyclotomic::gaussian(rat_int(1), rat_int(1));
        let b = Cyclotomic::gaussian(rat_int(1), rat_int(-1));
        assert_eq!(a.checked_mul(&b).unwrap(), Cyclotomic::from_int(2));
    }

    #[test]
    fn inverse_of_zeta8() {
        // Oracle: zeta_8 * zeta_8^7 = zeta_8^8 = 1.
        let z = Cyclotomic::root_of_unity(8, 1);
        let inv = z.inverse().unwrap();
        assert_eq!(inv, Cyclotomic::root_of_unity(8, 7));
        assert!(z.checked_mul(&inv).unwrap().is_one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(
            Cyclotomic::zero().inverse(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn root_of_unity_reduction() {
        assert_eq!(Cyclotomic::root_of_unity(4, 1), Cyclotomic::i());
        assert_eq!(Cyclotomic::root_of_unity(4, 2), Cyclotomic::from_int(-1));
        assert_eq!(Cyclotomic::root_of_unity(8, 4), Cyclotomic::from_int(-1));
    }

    #[test]
    fn roots_of_unity_multiply_by_adding_exponents() {
        for n in 1..=12u32 {
            for k in 0..n as i64 {
                for l in 0..n as i64 {
                    let lhs = Cyclotomic::root_of_unity(n, k)
                        .checked_mul(&Cyclotomic::root_of_unity(n, l))
                        .unwrap();
                    assert_eq!(lhs, Cyclotomic::root_of_unity(n, k + l), "n={n} k={k} l={l}");
                }
            }
        }
    }

    #[test]
    fn i_inside_larger_conductors() {
        for n in [4u32, 8, 12, 20, 24] {
            let i = Cyclotomic::root_of_unity(n, (n / 4) as i64);
            assert_eq!(
                i.checked_mul(&i).unwrap(),
                Cyclotomic::from_int(-1),
                "n = {n}"
            );
            assert_eq!(i, Cyclotomic::i(), "promotion identifies i at n = {n}");
        }
    }

    #[test]
    fn incompatible_conductors_error() {
        let a = Cyclotomic::root_of_unity(8, 1);
        let b = Cyclotomic::root_of_unity(12, 1);
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::ConductorMismatch(8, 12))
        ));
    }

    #[test]
    fn float_adapter() {
        let i = Cyclotomic::i().to_float();
        assert!((i.re).abs() < 1e-12 && (i.im - 1.0).abs() < 1e-12);
        let m1 = Cyclotomic::from_int(-1).to_float();
        assert!((m1.re + 1.0).abs() < 1e-12 && m1.im.abs() < 1e-12);
        let z8 = Cyclotomic::root_of_unity(8, 1).to_float();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((z8.re - s).abs() < 1e-12 && (z8.im - s).abs() < 1e-12);
    }

    #[test]
    fn sqrt_examples() {
        // b^2 = -1 has the deterministic root i in Q(i).
        let r = Cyclotomic::from_int(-1).promote(4).unwrap().sqrt().unwrap();
        assert_eq!(r, Cyclotomic::i());
        let four = Cyclotomic::from_int(4).sqrt().unwrap();
        assert_eq!(four, Cyclotomic::from_int(2));
        let quarter = Cyclotomic::from_rational(rat(9, 4)).sqrt().unwrap();
        assert_eq!(quarter, Cyclotomic::from_rational(rat(3, 2)));
        // No exact square root of 2 in the tower.
        assert!(Cyclotomic::from_int(2).sqrt().is_err());
    }

    #[test]
    fn mu4_arithmetic() {
        assert_eq!(Mu4::I * Mu4::I, Mu4::MINUS_ONE);
        assert_eq!(Mu4::MINUS_I * Mu4::I, Mu4::ONE);
        assert_eq!(Mu4::from_exponent(-1), Mu4::MINUS_I);
        assert_eq!(Mu4::I.pow(3), Mu4::MINUS_I);
        assert_eq!(Mu4::sign(5), Mu4::MINUS_ONE);
        assert_eq!(Mu4::I.to_cyclotomic(), Cyclotomic::i());
    }

    #[test]
    fn parser_round_trips() {
        assert_eq!(parse_scalar("3").unwrap(), Cyclotomic::from_int(3));
        assert_eq!(parse_scalar("3/2").unwrap(), Cyclotomic::from_rational(rat(3, 2)));
        assert_eq!(
            parse_scalar("1 + 2*i").unwrap(),
            Cyclotomic::gaussian(rat_int(1), rat_int(2))
        );
        assert_eq!(
            parse_scalar("-(1 - i)").unwrap(),
            Cyclotomic::gaussian(rat_int(-1), rat_int(1))
        );
        assert_eq!(
            parse_scalar("zeta(8,3)").unwrap(),
            Cyclotomic::root_of_unity(8, 3)
        );
        assert_eq!(parse_scalar("zeta(8,1)*zeta(8,-1)").unwrap(), Cyclotomic::one());
        assert!(parse_scalar("2 +").is_err());
        assert!(parse_scalar("zeta(0,1)").is_err());
    }
}
