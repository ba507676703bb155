//! Classification of torus quotients by finite groups of affine
//! automorphisms: freeness via integer linear algebra, Euler characteristic,
//! orientability, first homology of the quotient through abelianized lift
//! groups and Smith normal form, and the closed-surface trichotomy.

pub mod mesh;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::scalars::Rational;
use crate::torus::Turn;
use crate::{Error, Result};

/// An affine self-map of the 2-torus: integer linear part `A` with
/// `det A = ±1`, rational translation `t` taken modulo 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TorusAutomorphism {
    a: [[i64; 2]; 2],
    t: (Turn, Turn),
}

impl TorusAutomorphism {
    pub fn new(a: [[i64; 2]; 2], t: (Turn, Turn)) -> Result<TorusAutomorphism> {
        let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if det != 1 && det != -1 {
            return Err(Error::Parse(format!(
                "linear part must have determinant ±1, got {det}"
            )));
        }
        Ok(TorusAutomorphism { a, t })
    }

    pub fn identity() -> TorusAutomorphism {
        TorusAutomorphism {
            a: [[1, 0], [0, 1]],
            t: (Turn::zero(), Turn::zero()),
        }
    }

    pub fn linear_part(&self) -> [[i64; 2]; 2] {
        self.a
    }

    pub fn translation(&self) -> &(Turn, Turn) {
        &self.t
    }

    pub fn det(&self) -> i64 {
        self.a[0][0] * self.a[1][1] - self.a[0][1] * self.a[1][0]
    }

    pub fn is_identity(&self) -> bool {
        *self == TorusAutomorphism::identity()
    }

    /// `(A1, t1) ∘ (A2, t2) = (A1 A2, A1 t2 + t1)`.
    pub fn compose(&self, rhs: &TorusAutomorphism) -> TorusAutomorphism {
        let a = mat_mul(self.a, rhs.a);
        let at = apply_linear(self.a, &rhs.t);
        TorusAutomorphism {
            a,
            t: (at.0.add(&self.t.0), at.1.add(&self.t.1)),
        }
    }

    pub fn inverse(&self) -> TorusAutomorphism {
        let det = self.det();
        let adj = [[self.a[1][1], -self.a[0][1]], [-self.a[1][0], self.a[0][0]]];
        let a_inv = if det == 1 {
            adj
        } else {
            [[-adj[0][0], -adj[0][1]], [-adj[1][0], -adj[1][1]]]
        };
        let minus_t = (self.t.0.neg(), self.t.1.neg());
        let t = apply_linear(a_inv, &minus_t);
        TorusAutomorphism { a: a_inv, t }
    }

    /// Apply to a point of the torus.
    pub fn apply(&self, p: &(Turn, Turn)) -> (Turn, Turn) {
        let lin = apply_linear(self.a, p);
        (lin.0.add(&self.t.0), lin.1.add(&self.t.1))
    }

    /// Order as a torus map, capped; `None` if the cap is exceeded.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }
}

impl fmt::Display for TorusAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]] + ({}, {})",
            self.a[0][0], self.a[0][1], self.a[1][0], self.a[1][1], self.t.0, self.t.1
        )
    }
}

fn mat_mul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

fn apply_linear(a: [[i64; 2]; 2], t: &(Turn, Turn)) -> (Turn, Turn) {
    (
        t.0.times(a[0][0]).add(&t.1.times(a[0][1])),
        t.0.times(a[1][0]).add(&t.1.times(a[1][1])),
    )
}

/// A finite group of torus automorphisms, closed under composition and
/// inverse, remembering the generators it was built from.
#[derive(Clone, Debug)]
pub struct DeckGroup {
    elements: Vec<TorusAutomorphism>,
    generators: Vec<TorusAutomorphism>,
}

impl DeckGroup {
    pub fn elements(&self) -> &[TorusAutomorphism] {
        &self.elements
    }

    pub fn generators(&self) -> &[TorusAutomorphism] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Close the generators under composition and inverse. Errors out if the
/// closure exceeds `4 * bound^2` elements (runaway generation).
pub fn generate_group(gens: &[TorusAutomorphism], bound: u32) -> Result<DeckGroup> {
    let cap = 4 * (bound as usize).pow(2);
    let mut seen: BTreeSet<TorusAutomorphism> = BTreeSet::new();
    seen.insert(TorusAutomorphism::identity());
    let mut frontier: Vec<TorusAutomorphism> = vec![TorusAutomorphism::identity()];
    let mut gen_set: Vec<TorusAutomorphism> = Vec::new();
    for g in gens {
        gen_set.push(g.clone());
        gen_set.push(g.inverse());
    }
    while let Some(current) = frontier.pop() {
        for g in &gen_set {
            let next = current.compose(g);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                frontier.push(next);
            }
        }
    }
    Ok(DeckGroup {
        elements: seen.into_iter().collect(),
        generators: gens.iter().filter(|g| !g.is_identity()).cloned().collect(),
    })
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

/// `U * M * V = D` with `U, V` unimodular and `D` diagonal with
/// `d_i | d_{i+1}`, `d_i >= 0`.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub d: Vec<Vec<i64>>,
    pub u: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
}

impl SmithNormalForm {
    /// The diagonal entries, including zeros, up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<i64> {
        let r = self.d.len();
        let c = if r == 0 { 0 } else { self.d[0].len() };
        (0..r.min(c)).map(|k| self.d[k][k]).collect()
    }
}

/// Diagonalize an integer matrix by unimodular row and column operations.
pub fn smith_normal_form(m: &[Vec<i64>]) -> SmithNormalForm {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut d: Vec<Vec<i64>> = m.to_vec();
    let mut u = identity_matrix(rows);
    let mut v = identity_matrix(cols);

    let limit = rows.min(cols);
    for k in 0..limit {
        'pivot: loop {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if d[i][j] != 0 {
                        let better = match best {
                            None => true,
                            Some((bi, bj)) => d[i][j].abs() < d[bi][bj].abs(),
                        };
                        if better {
                            best = Some((i, j));
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, u, v, limit);
            };
            if pi != k {
                d.swap(pi, k);
                u.swap(pi, k);
            }
            if pj != k {
                swap_cols(&mut d, pj, k);
                swap_cols(&mut v, pj, k);
            }
            // clear column k below and row k to the right
            let mut dirty = false;
            for i in k + 1..rows {
                if d[i][k] != 0 {
                    let q = div_round(d[i][k], d[k][k]);
                    if q != 0 {
                        row_sub(&mut d, i, k, q);
                        row_sub(&mut u, i, k, q);
                    }
                    if d[i][k] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..cols {
                if d[k][j] != 0 {
                    let q = div_round(d[k][j], d[k][k]);
                    if q != 0 {
                        col_sub(&mut d, j, k, q);
                        col_sub(&mut v, j, k, q);
                    }
                    if d[k][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // enforce divisibility of the trailing block by the pivot
            for i in k + 1..rows {
                for j in k + 1..cols {
                    if d[i][j] % d[k][k] != 0 {
                        // add row i to row k and restart the pivot step
                        row_add(&mut d, k, i);
                        row_add(&mut u, k, i);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
    }
    finish(d, u, v, limit)
}

fn finish(
    mut d: Vec<Vec<i64>>,
    mut u: Vec<Vec<i64>>,
    v: Vec<Vec<i64>>,
    limit: usize,
) -> SmithNormalForm {
    for k in 0..limit {
        if d[k][k] < 0 {
            for x in d[k].iter_mut() {
                *x = -*x;
            }
            for x in u[k].iter_mut() {
                *x = -*x;
            }
        }
    }
    SmithNormalForm { d, u, v }
}

fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn swap_cols(m: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// row_i -= q * row_k
fn row_sub(m: &mut [Vec<i64>], i: usize, k: usize, q: i64) {
    for j in 0..m[i].len() {
        m[i][j] -= q * m[k][j];
    }
}

/// row_k += row_i
fn row_add(m: &mut [Vec<i64>], k: usize, i: usize) {
    for j in 0..m[k].len() {
        m[k][j] += m[i][j];
    }
}

/// col_j -= q * col_k
fn col_sub(m: &mut [Vec<i64>], j: usize, k: usize, q: i64) {
    for row in m.iter_mut() {
        row[j] -= q * row[k];
    }
}

/// Round-to-nearest division keeps pivot magnitudes shrinking.
fn div_round(a: i64, b: i64) -> i64 {
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + r.signum() * b.signum()
    } else {
        q
    }
}

// ---------------------------------------------------------------------------
// Fixed loci
// ---------------------------------------------------------------------------

/// A circle inside the torus: `base + span * direction` with an integer
/// direction vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Circle {
    pub base: (Turn, Turn),
    pub direction: (i64, i64),
}

/// Fixed-point locus of a torus automorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FixedLocus {
    Empty,
    Points(Vec<(Turn, Turn)>),
    Circles(Vec<Circle>),
    Everything,
}

impl FixedLocus {
    pub fn is_empty(&self) -> bool {
        matches!(self, FixedLocus::Empty)
    }
}

impl fmt::Display for FixedLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedLocus::Empty => write!(f, "empty"),
            FixedLocus::Points(ps) => {
                write!(f, "{} isolated point(s):", ps.len())?;
                for p in ps {
                    write!(f, " ({}, {})", p.0, p.1)?;
                }
                Ok(())
            }
            FixedLocus::Circles(cs) => {
                write!(f, "{} circle(s):", cs.len())?;
                for c in cs {
                    write!(
                        f,
                        " base ({}, {}) direction ({}, {})",
                        c.base.0, c.base.1, c.direction.0, c.direction.1
                    )?;
                }
                Ok(())
            }
            FixedLocus::Everything => write!(f, "the whole torus"),
        }
    }
}

/// Solve `(A - I) x ≡ -t (mod Z^2)` by Smith normal form of `A - I`.
pub fn fixed_points(m: &TorusAutomorphism) -> FixedLocus {
    let a = m.linear_part();
    let a_minus_i = vec![
        vec![a[0][0] - 1, a[0][1]],
        vec![a[1][0], a[1][1] - 1],
    ];
    let snf = smith_normal_form(&a_minus_i);
    // rhs in the transformed coordinates: c = U * (-t)
    let minus_t = (m.translation().0.neg(), m.translation().1.neg());
    let c = (
        minus_t
            .0
            .times(snf.u[0][0])
            .add(&minus_t.1.times(snf.u[0][1])),
        minus_t
            .0
            .times(snf.u[1][0])
            .add(&minus_t.1.times(snf.u[1][1])),
    );
    let d = [snf.d[0][0], snf.d[1][1]];
    let c = [c.0, c.1];

    // per-coordinate solution sets for d_i * y ≡ c_i (mod 1)
    let mut finite: Vec<Vec<Turn>> = Vec::new();
    let mut free_axes: Vec<usize> = Vec::new();
    for i in 0..2 {
        if d[i] == 0 {
            if c[i].is_zero() {
                free_axes.push(i);
                finite.push(vec![]);
            } else {
                return FixedLocus::Empty;
            }
        } else {
            let mut sols = Vec::new();
            for j in 0..d[i].unsigned_abs() {
                let y = Turn::new(
                    (c[i].value() + Rational::from_integer(num_bigint::BigInt::from(j)))
                        / Rational::from_integer(num_bigint::BigInt::from(d[i])),
                );
                sols.push(y);
            }
            sols.sort();
            sols.dedup();
            finite.push(sols);
        }
    }

    let to_x = |y0: &Turn, y1: &Turn| -> (Turn, Turn) {
        (
            y0.times(snf.v[0][0]).add(&y1.times(snf.v[0][1])),
            y0.times(snf.v[1][0]).add(&y1.times(snf.v[1][1])),
        )
    };

    match free_axes.len() {
        0 => {
            let mut points = Vec::new();
            for y0 in &finite[0] {
                for y1 in &finite[1] {
                    points.push(to_x(y0, y1));
                }
            }
            points.sort();
            points.dedup();
            FixedLocus::Points(points)
        }
        1 => {
            let free = free_axes[0];
            let fixed = 1 - free;
            let direction = (snf.v[0][free], snf.v[1][free]);
            let zero = Turn::zero();
            let mut circles = Vec::new();
            for y in &finite[fixed] {
                let base = if fixed == 0 {
                    to_x(y, &zero)
                } else {
                    to_x(&zero, y)
                };
                circles.push(Circle { base, direction });
            }
            circles.sort_by(|a, b| a.base.cmp(&b.base));
            FixedLocus::Circles(circles)
        }
        _ => FixedLocus::Everything,
    }
}

// ---------------------------------------------------------------------------
// First homology of free quotients
// ---------------------------------------------------------------------------

/// An abelian group given by free rank and nontrivial invariant factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct H1 {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl fmt::Display for H1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// First homology of the quotient of the torus by a free deck group,
/// computed from the abelianized lift group: generators are the two lattice
/// translations and one lift per deck generator; relations are the
/// conjugation relations `(A - I) e_j = 0` and one power relation
/// `k g = accumulated translation` per generator.
pub fn h1_of_quotient(group: &DeckGroup) -> Result<H1> {
    for g in group.elements() {
        if !g.is_identity() && !fixed_points(g).is_empty() {
            return Err(Error::NotFreeAction);
        }
    }
    let gens = group.generators();
    let unknowns = 2 + gens.len();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (idx, g) in gens.iter().enumerate() {
        let a = g.linear_part();
        for j in 0..2 {
            let mut row = vec![0i64; unknowns];
            row[0] = a[0][j] - i64::from(j == 0);
            row[1] = a[1][j] - i64::from(j == 1);
            rows.push(row);
        }
        let order = g
            .order(4 * group.order().max(4))
            .expect("elements of a finite group have finite order");
        // accumulated translation of the k-th power of the chosen affine lift
        let tau = accumulated_translation(g, order);
        let mut row = vec![0i64; unknowns];
        row[0] = -tau.0;
        row[1] = -tau.1;
        row[2 + idx] = i64::try_from(order).expect("small order");
        rows.push(row);
    }
    if rows.is_empty() {
        return Ok(H1 {
            free_rank: 2,
            torsion: vec![],
        });
    }
    let snf = smith_normal_form(&rows);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|&&d| d != 0).count();
    let torsion: Vec<i64> = diag.iter().copied().filter(|&d| d > 1).collect();
    Ok(H1 {
        free_rank: unknowns - rank,
        torsion,
    })
}

/// Exact translation vector of the `k`-th power of the affine lift of `g`
/// whose translation representative lies in `[0, 1)^2`. For `g` of order `k`
/// on the torus this is an integer vector.
fn accumulated_translation(g: &TorusAutomorphism, k: usize) -> (i64, i64) {
    let mut acc = (Rational::zero(), Rational::zero());
    let mut lin = [[1i64, 0], [0, 1]]; // A^j
    let t = (
        g.translation().0.value().clone(),
        g.translation().1.value().clone(),
    );
    for _ in 0..k {
        acc.0 += Rational::from_integer(lin[0][0].into()) * &t.0
            + Rational::from_integer(lin[0][1].into()) * &t.1;
        acc.1 += Rational::from_integer(lin[1][0].into()) * &t.0
            + Rational::from_integer(lin[1][1].into()) * &t.1;
        lin = mat_mul(lin, g.linear_part());
    }
    let to_int = |r: &Rational| -> i64 {
        assert!(r.is_integer(), "power relation translation must be integral");
        r.numer().to_i64().expect("small translation")
    };
    (to_int(&acc.0), to_int(&acc.1))
}

// ---------------------------------------------------------------------------
// Surface classification
// ---------------------------------------------------------------------------

/// Homeomorphism type of the quotient (or the reason there is no surface).
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SurfaceClass {
    Torus,
    KleinBottle,
    NotFreeAction,
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceClass::Torus => write!(f, "TORUS"),
            SurfaceClass::KleinBottle => write!(f, "KLEIN BOTTLE"),
            SurfaceClass::NotFreeAction => write!(f, "NOT A FREE ACTION"),
        }
    }
}

/// Full classification record for one deck group.
#[derive(Clone, Debug)]
pub struct SurfaceReport {
    pub order: usize,
    pub free: bool,
    pub not_free_witness: Option<(TorusAutomorphism, FixedLocus)>,
    pub orientable: bool,
    /// `chi(torus) / order` when the action is free.
    pub euler: Option<i64>,
    pub h1: Option<H1>,
    pub classification: SurfaceClass,
}

/// Classify the quotient by the closed-surface trichotomy: free actions
/// give `chi = 0`, so the quotient is a torus when every linear part
/// preserves orientation and a Klein bottle otherwise. The first homology
/// is attached as an independent certificate.
pub fn classify(group: &DeckGroup) -> SurfaceReport {
    let mut witness = None;
    for g in group.elements() {
        if g.is_identity() {
            continue;
        }
        let locus = fixed_points(g);
        if !locus.is_empty() {
            witness = Some((g.clone(), locus));
            break;
        }
    }
    let free = witness.is_none();
    let orientable = group.elements().iter().all(|g| g.det() == 1);
    let (euler, h1, classification) = if free {
        let h1 = h1_of_quotient(group).expect("freeness just checked");
        let class = if orientable {
            SurfaceClass::Torus
        } else {
            SurfaceClass::KleinBottle
        };
        (Some(0), Some(h1), class)
    } else {
        (None, None, SurfaceClass::NotFreeAction)
    };
    SurfaceReport {
        order: group.order(),
        free,
        not_free_witness: witness,
        orientable,
        euler,
        h1,
        classification,
    }
}

// ---------------------------------------------------------------------------
// Shipped presets
// ---------------------------------------------------------------------------

/// Named generator data for the shipped quotients.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Preset {
    /// Order-4 group generated by the coordinate swap with a quarter-turn
    /// shift; the free Klein-bottle action in `(b, c)` angles.
    QuarterTurn,
    /// Order-2 group generated by `(theta, phi) ↦ (theta + 1/2, -phi)`; the
    /// free Klein-bottle action in `(w, z)` angles.
    HalfTurn,
    /// The reflection `(theta, phi) ↦ (theta, -phi)`: not free, fixed
    /// circles at `phi ∈ {0, 1/2}`.
    Reflection,
    /// The diagonal half shift `(theta, phi) ↦ (theta + 1/2, phi + 1/2)`:
    /// free and orientation-preserving, an intermediate torus.
    DiagonalShift,
    /// The trivial group.
    Trivial,
}

impl Preset {
    pub fn label(&self) -> &'static str {
        match self {
            Preset::QuarterTurn => "quarter-turn",
            Preset::HalfTurn => "half-turn",
            Preset::Reflection => "reflection",
            Preset::DiagonalShift => "diagonal-shift",
            Preset::Trivial => "trivial",
        }
    }

    pub fn generators(&self) -> Vec<TorusAutomorphism> {
        match self {
            Preset::QuarterTurn => vec![TorusAutomorphism::new(
                [[0, 1], [1, 0]],
                (Turn::from_fraction(1, 4), Turn::from_fraction(1, 4)),
            )
            .unwrap()],
            Preset::HalfTurn => vec![TorusAutomorphism::new(
                [[1, 0], [0, -1]],
                (Turn::from_fraction(1, 2), Turn::zero()),
            )
            .unwrap()],
            Preset::Reflection => vec![TorusAutomorphism::new(
                [[1, 0], [0, -1]],
                (Turn::zero(), Turn::zero()),
            )
            .unwrap()],
            Preset::DiagonalShift => vec![TorusAutomorphism::new(
                [[1, 0], [0, 1]],
                (Turn::from_fraction(1, 2), Turn::from_fraction(1, 2)),
            )
            .unwrap()],
            Preset::Trivial => vec![],
        }
    }

    pub fn deck_group(&self) -> DeckGroup {
        generate_group(&self.generators(), 8).expect("preset groups are small")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(m: &[Vec<i64>]) -> i64 {
        // cofactor expansion; test matrices are tiny
        let n = m.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return m[0][0];
        }
        let mut acc = 0;
        for j in 0..n {
            if m[0][j] == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            acc += sign * m[0][j] * det(&minor);
        }
        acc
    }

    fn check_snf(m: &[Vec<i64>]) {
        let snf = smith_normal_form(m);
        // U M V = D
        let rows = m.len();
        let cols = m[0].len();
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = 0i64;
                for k in 0..rows {
                    for l in 0..cols {
                        acc += snf.u[i][k] * m[k][l] * snf.v[l][j];
                    }
                }
                assert_eq!(acc, snf.d[i][j], "UMV mismatch at ({i}, {j})");
            }
        }
        // diagonal with d_i | d_{i+1}
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    assert_eq!(snf.d[i][j], 0);
                }
            }
        }
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if w[0] != 0 {
                assert_eq!(w[1] % w[0], 0, "divisibility fails in {diag:?}");
            } else {
                assert_eq!(w[1], 0);
            }
        }
        assert_eq!(det(&snf.u).abs(), 1);
        assert_eq!(det(&snf.v).abs(), 1);
    }

    #[test]
    fn snf_examples() {
        check_snf(&[vec![1, 0], vec![0, 1]]);
        let id = smith_normal_form(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(id.diagonal(), vec![1, 1]);

        check_snf(&[vec![2, 0], vec![0, 3]]);
        let d = smith_normal_form(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(d.diagonal(), vec![1, 6]);

        check_snf(&[vec![-2, 4]]);
        let row = smith_normal_form(&[vec![-2, 4]]);
        assert_eq!(row.diagonal(), vec![2]);

        check_snf(&[vec![0, 0], vec![0, -2]]);
        check_snf(&[vec![6, 4], vec![4, 6]]);
        check_snf(&[vec![-1, 1, 0], vec![1, -1, 0], vec![-1, -1, 4]]);
    }

    #[test]
    fn composition_and_inverse() {
        let g = Preset::QuarterTurn.generators().pop().unwrap();
        let gi = g.inverse();
        assert!(g.compose(&gi).is_identity());
        assert!(gi.compose(&g).is_identity());
        assert_eq!(g.order(10), Some(4));
        // square is the diagonal half shift
        let sq = g.compose(&g);
        assert_eq!(sq, Preset::DiagonalShift.generators().pop().unwrap());
    }

    #[test]
    fn group_generation() {
        assert_eq!(Preset::QuarterTurn.deck_group().order(), 4);
        assert_eq!(Preset::HalfTurn.deck_group().order(), 2);
        assert_eq!(Preset::Reflection.deck_group().order(), 2);
        assert_eq!(Preset::DiagonalShift.deck_group().order(), 2);
        assert_eq!(Preset::Trivial.deck_group().order(), 1);
        // a shear does not close up within the bound
        let shear = TorusAutomorphism::new([[1, 1], [0, 1]], (Turn::zero(), Turn::zero())).unwrap();
        assert!(matches!(
            generate_group(&[shear], 4),
            Err(Error::GroupTooLarge(_))
        ));
    }

    #[test]
    fn determinant_validation() {
        assert!(TorusAutomorphism::new([[2, 0], [0, 1]], (Turn::zero(), Turn::zero())).is_err());
    }

    #[test]
    fn fixed_point_examples() {
        // pure nonzero translation: empty
        let j = Preset::DiagonalShift.generators().pop().unwrap();
        assert_eq!(fixed_points(&j), FixedLocus::Empty);
        // the quarter-turn swap is free
        let q = Preset::QuarterTurn.generators().pop().unwrap();
        assert_eq!(fixed_points(&q), FixedLocus::Empty);
        // the reflection fixes two circles phi ∈ {0, 1/2}
        let r = Preset::Reflection.generators().pop().unwrap();
        match fixed_points(&r) {
            FixedLocus::Circles(circles) => {
                assert_eq!(circles.len(), 2);
                let mut phis: Vec<Turn> = circles.iter().map(|c| c.base.1.clone()).collect();
                phis.sort();
                assert_eq!(phis, vec![Turn::zero(), Turn::from_fraction(1, 2)]);
                for c in &circles {
                    // direction is the free theta axis
                    assert_eq!(c.direction.1, 0);
                    assert_ne!(c.direction.0, 0);
                }
            }
            other => panic!("expected circles, got {other:?}"),
        }
        // identity fixes everything
        assert_eq!(
            fixed_points(&TorusAutomorphism::identity()),
            FixedLocus::Everything
        );
        // an elliptic rotation with a shifted center has isolated fixed points
        let rot =
            TorusAutomorphism::new([[0, -1], [1, 0]], (Turn::from_fraction(1, 2), Turn::zero()))
                .unwrap();
        match fixed_points(&rot) {
            FixedLocus::Points(ps) => assert_eq!(ps.len(), 2),
            other => panic!("expected points, got {other:?}"),
        }
    }

    #[test]
    fn homology_of_presets() {
        let klein = H1 {
            free_rank: 1,
            torsion: vec![2],
        };
        assert_eq!(
            h1_of_quotient(&Preset::QuarterTurn.deck_group()).unwrap(),
            klein
        );
        assert_eq!(
            h1_of_quotient(&Preset::HalfTurn.deck_group()).unwrap(),
            klein
        );
        assert_eq!(
            h1_of_quotient(&Preset::Trivial.deck_group()).unwrap(),
            H1 {
                free_rank: 2,
                torsion: vec![]
            }
        );
        assert_eq!(
            h1_of_quotient(&Preset::DiagonalShift.deck_group()).unwrap(),
            H1 {
                free_rank: 2,
                torsion: vec![]
            }
        );
        assert!(matches!(
            h1_of_quotient(&Preset::Reflection.deck_group()),
            Err(Error::NotFreeAction)
        ));
    }

    #[test]
    fn classification_of_presets() {
        let quarter = classify(&Preset::QuarterTurn.deck_group());
        assert!(quarter.free);
        assert_eq!(quarter.order, 4);
        assert_eq!(quarter.euler, Some(0));
        assert!(!quarter.orientable);
        assert_eq!(quarter.classification, SurfaceClass::KleinBottle);

        let half = classify(&Preset::HalfTurn.deck_group());
        assert_eq!(half.classification, SurfaceClass::KleinBottle);
        assert_eq!(half.order, 2);
        assert_eq!(half.h1, quarter.h1);

        let reflection = classify(&Preset::Reflection.deck_group());
        assert_eq!(reflection.classification, SurfaceClass::NotFreeAction);
        assert!(reflection.not_free_witness.is_some());

        let shift = classify(&Preset::DiagonalShift.deck_group());
        assert_eq!(shift.classification, SurfaceClass::Torus);
        assert!(shift.orientable && shift.free);

        let trivial = classify(&Preset::Trivial.deck_group());
        assert_eq!(trivial.classification, SurfaceClass::Torus);
    }

    #[test]
    fn h1_torsion_tracks_orientability() {
        for preset in [
            Preset::QuarterTurn,
            Preset::HalfTurn,
            Preset::DiagonalShift,
            Preset::Trivial,
        ] {
            let group = preset.deck_group();
            let report = classify(&group);
            let h1 = report.h1.expect("free presets");
            if report.orientable {
                assert_eq!((h1.free_rank, h1.torsion.is_empty()), (2, true));
            } else {
                assert_eq!(h1.free_rank, 1);
                assert_eq!(h1.torsion, vec![2]);
            }
        }
    }
}
