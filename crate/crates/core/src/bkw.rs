//! Transfer matrices for rings of twist tangles, their equimodular curves
//! and the accumulation of zeros of `α₁Λ₁ⁿ + α₂Λ₂ⁿ - 1`.
//!
//! A 2-tangle is recorded in the bracket skein module as `(f, g)` with
//! `T = f·[0] + g·[∞]`, where `[0]` joins `NW–NE`, `SW–SE`. Then
//!
//! * tangle sum: `(f₁, g₁) + (f₂, g₂) = (f₁f₂, f₁g₂ + g₁f₂ + δg₁g₂)`,
//! * numerator closure: `N(f, g) = δf + g`,
//! * denominator closure: `D(f, g) = f + δg`,
//!
//! with `δ = -A² - A⁻²`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bracket::{delta, pretzel_ring};
use crate::error::{BkwError, RootError};
use crate::laurent::{LaurentPoly, Var};
use crate::roots::find_roots;

fn a_poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(Var::A, terms.iter().copied())
}

/// A 2-tangle as a vector over the skein basis `{[0], [∞]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleVector {
    pub f: LaurentPoly,
    pub g: LaurentPoly,
}

impl TangleVector {
    pub fn zero_tangle() -> Self {
        TangleVector {
            f: LaurentPoly::one(Var::A),
            g: LaurentPoly::zero(Var::A),
        }
    }

    pub fn infinity_tangle() -> Self {
        TangleVector {
            f: LaurentPoly::zero(Var::A),
            g: LaurentPoly::one(Var::A),
        }
    }

    /// Tangle sum, `other` placed on the right.
    pub fn add(&self, other: &TangleVector) -> TangleVector {
        let d = delta();
        TangleVector {
            f: &self.f * &other.f,
            g: &(&self.f * &other.g) + &(&(&self.g * &other.f) + &(&d * &(&self.g * &other.g))),
        }
    }

    /// Vertical stacking, `other` placed below.
    pub fn stack(&self, other: &TangleVector) -> TangleVector {
        let d = delta();
        TangleVector {
            f: &(&d * &(&self.f * &other.f)) + &(&(&self.f * &other.g) + &(&self.g * &other.f)),
            g: &self.g * &other.g,
        }
    }

    /// Quarter turn: `[0]` and `[∞]` trade places.
    pub fn rotate(&self) -> TangleVector {
        TangleVector {
            f: self.g.clone(),
            g: self.f.clone(),
        }
    }

    /// Crossing change everywhere: `A -> A⁻¹`.
    pub fn mirror(&self) -> TangleVector {
        TangleVector {
            f: self.f.mirror(),
            g: self.g.mirror(),
        }
    }

    pub fn numerator(&self) -> LaurentPoly {
        &(&delta() * &self.f) + &self.g
    }

    pub fn denominator(&self) -> LaurentPoly {
        &self.f + &(&delta() * &self.g)
    }
}

/// 2×2 matrix over `Z[A, A⁻¹]` acting on [`TangleVector`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinMatrix {
    pub m: [[LaurentPoly; 2]; 2],
}

impl SkeinMatrix {
    pub fn identity() -> Self {
        let (o, z) = (LaurentPoly::one(Var::A), LaurentPoly::zero(Var::A));
        SkeinMatrix {
            m: [[o.clone(), z.clone()], [z, o]],
        }
    }

    /// The action `T -> T + V` of adding the tangle `v` on the right.
    pub fn adding(v: &TangleVector) -> Self {
        SkeinMatrix {
            m: [
                [v.f.clone(), LaurentPoly::zero(Var::A)],
                [v.g.clone(), &v.f + &(&delta() * &v.g)],
            ],
        }
    }

    pub fn mul(&self, other: &SkeinMatrix) -> SkeinMatrix {
        let e = |i: usize, j: usize| &(&self.m[i][0] * &other.m[0][j]) + &(&self.m[i][1] * &other.m[1][j]);
        SkeinMatrix {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn apply(&self, v: &TangleVector) -> TangleVector {
        TangleVector {
            f: &(&self.m[0][0] * &v.f) + &(&self.m[0][1] * &v.g),
            g: &(&self.m[1][0] * &v.f) + &(&self.m[1][1] * &v.g),
        }
    }

    pub fn pow(&self, mut e: u32) -> SkeinMatrix {
        let mut base = self.clone();
        let mut acc = SkeinMatrix::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn mirror(&self) -> SkeinMatrix {
        SkeinMatrix {
            m: self.m.clone().map(|row| row.map(|p| p.mirror())),
        }
    }

    /// Diagonal entries, which are the eigenvalues when the matrix is lower
    /// triangular (every matrix built here is).
    pub fn triangular_eigenvalues(&self) -> Option<(LaurentPoly, LaurentPoly)> {
        self.m[0][1]
            .is_zero()
            .then(|| (self.m[0][0].clone(), self.m[1][1].clone()))
    }
}

/// Adding one positive crossing `[1] = A·[0] + A⁻¹·[∞]` on the right:
/// `[[A, 0], [A⁻¹, -A⁻³]]`.
pub fn crossing_matrix() -> SkeinMatrix {
    SkeinMatrix {
        m: [
            [a_poly(&[(1, 1)]), LaurentPoly::zero(Var::A)],
            [a_poly(&[(-1, 1)]), a_poly(&[(-3, -1)])],
        ],
    }
}

/// The horizontal integer tangle `[s]`, i.e. `crossing_matrix()^|s|` applied
/// to `[0]`, mirrored for negative `s`.
pub fn twist_vector(s: i64) -> Result<TangleVector, BkwError> {
    if s == 0 {
        return Err(BkwError::ZeroTwist);
    }
    let m = crossing_matrix().pow(s.unsigned_abs() as u32);
    let m = if s < 0 { m.mirror() } else { m };
    Ok(m.apply(&TangleVector::zero_tangle()))
}

/// The vertical tangle `1/[s]`.
pub fn vertical_twist_vector(s: i64) -> Result<TangleVector, BkwError> {
    Ok(twist_vector(s)?.mirror().rotate())
}

/// Bracket of the ring `1/[s] + ... + 1/[s]` (`n` copies), closed by the
/// numerator.
pub fn ring_bracket(s: i64, n: u32) -> Result<LaurentPoly, BkwError> {
    let v = vertical_twist_vector(s)?;
    let ring = SkeinMatrix::adding(&v).pow(n).apply(&TangleVector::zero_tangle());
    Ok(ring.numerator())
}

fn normalised(bracket: LaurentPoly, writhe: i64) -> Result<LaurentPoly, BkwError> {
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let f = bracket.shift(-3 * writhe).scale(&BigInt::from(sign));
    Ok(match f.change_variable(Var::T) {
        Ok(j) => j,
        Err(_) => f.change_variable(Var::Q)?,
    })
}

/// Jones polynomial of the pretzel link `P(s, ..., s)` with `n` columns.
///
/// The bracket comes from the transfer matrix; the writhe from the
/// orientation of the diagram built by [`pretzel_ring`].
pub fn ring_family_jones(s: i64, n: u32) -> Result<LaurentPoly, BkwError> {
    if n == 0 {
        return Err(BkwError::Diagram(crate::error::DiagramError::InvalidCode(
            "ring needs at least one tangle".into(),
        )));
    }
    let w = pretzel_ring(s, n as usize)?.writhe()?;
    normalised(ring_bracket(s, n)?, w)
}

/// `(-A³)^{-sn}⟨ring⟩`: the member `n` of the eigenvalue family
/// [`EigenFamily::twist_ring`]. Agrees with [`ring_family_jones`] whenever
/// the ring is a knot.
pub fn ring_family_polynomial(s: i64, n: u32) -> Result<LaurentPoly, BkwError> {
    normalised(ring_bracket(s, n)?, s * n as i64)
}

/// `(-t)^s` for possibly negative `s`.
fn minus_t_pow(t: Complex64, s: i64) -> Complex64 {
    (-t).powi(s as i32)
}

/// `|1 - (-t)^s| - |1 + (t + t⁻¹ + 1)(-t)^s|`, zero on the equimodular
/// curve of index `s`. Negative `s` gives the mirror curve.
pub fn equimodular_residual(t: Complex64, s: i64) -> Result<f64, BkwError> {
    if t == Complex64::new(0.0, 0.0) {
        return Err(BkwError::PoleAtZero);
    }
    let x = minus_t_pow(t, s);
    let c = t + t.inv() + 1.0;
    Ok((Complex64::new(1.0, 0.0) - x).norm() - (1.0 + c * x).norm())
}

/// Accepted residual for equimodular points.
pub const EQUIMODULAR_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EquimodularPoint {
    pub t_star: Complex64,
    /// Twist index; negative values lie on the mirror curve.
    pub s: i64,
    pub residual: f64,
    /// `|Λ₁| = |Λ₂| > 1` for the pair `1 - (-t)^s`, `1 + (t + t⁻¹ + 1)(-t)^s`.
    pub dominant: bool,
    /// The same for the pair rescaled by `1/δ`, which is the pair governing
    /// the Jones polynomials of the pretzel rings.
    pub dominant_scaled: bool,
}

fn bisect_edge(s: i64, mut a: Complex64, mut b: Complex64, mut ra: f64) -> Option<(Complex64, f64)> {
    for _ in 0..200 {
        let m = (a + b) * 0.5;
        let rm = equimodular_residual(m, s).ok()?;
        if rm.abs() <= EQUIMODULAR_TOL && (b - a).norm() < 1e-12 || rm == 0.0 {
            return Some((m, rm.abs()));
        }
        if (rm < 0.0) == (ra < 0.0) {
            a = m;
            ra = rm;
        } else {
            b = m;
        }
        if (b - a).norm() <= 1e-15 * m.norm().max(1.0) {
            break;
        }
    }
    let m = (a + b) * 0.5;
    let rm = equimodular_residual(m, s).ok()?.abs();
    (rm <= EQUIMODULAR_TOL).then_some((m, rm))
}

fn points_for_s(t0: Complex64, eps: f64, s: i64) -> Vec<(Complex64, f64)> {
    const HALF: i64 = 20;
    let h = eps / 40.0;
    let node = |i: i64, j: i64| t0 + Complex64::new(i as f64 * h, j as f64 * h);
    let inside = |i: i64, j: i64| ((i * i + j * j) as f64).sqrt() * h <= eps / 2.0 + 1e-15;
    let side = (2 * HALF + 1) as usize;
    let mut res = vec![None; side * side];
    for i in -HALF..=HALF {
        for j in -HALF..=HALF {
            if inside(i, j) {
                res[((i + HALF) as usize) * side + (j + HALF) as usize] =
                    equimodular_residual(node(i, j), s).ok();
            }
        }
    }
    let at = |i: i64, j: i64| -> Option<f64> {
        if i.abs() > HALF || j.abs() > HALF {
            return None;
        }
        res[((i + HALF) as usize) * side + (j + HALF) as usize]
    };
    let mut found = Vec::new();
    for i in -HALF..=HALF {
        for j in -HALF..=HALF {
            let Some(r) = at(i, j) else { continue };
            if r.abs() <= EQUIMODULAR_TOL {
                found.push((node(i, j), r.abs()));
                continue;
            }
            for (di, dj) in [(1, 0), (0, 1)] {
                if let Some(r2) = at(i + di, j + dj) {
                    if r2.abs() > EQUIMODULAR_TOL && (r < 0.0) != (r2 < 0.0) {
                        if let Some(p) = bisect_edge(s, node(i, j), node(i + di, j + dj), r) {
                            found.push(p);
                        }
                    }
                }
            }
        }
    }
    found
}

/// Order in which twist indices are tried: `1, -1, 2, -2, ...`.
pub fn twist_scan_order(s_max: u32) -> impl Iterator<Item = i64> {
    (1..=s_max as i64).flat_map(|s| [s, -s])
}

/// Searches the disc `|t - t0| <= eps/2` for a point of an equimodular
/// curve, trying `s` in [`twist_scan_order`]. For the first `s` with any
/// accepted point, returns the one closest to `t0`.
pub fn find_equimodular_near(t0: Complex64, eps: f64, s_max: u32) -> Result<EquimodularPoint, BkwError> {
    if t0 == Complex64::new(0.0, 0.0) {
        return Err(BkwError::PoleAtZero);
    }
    for s in twist_scan_order(s_max) {
        let best = points_for_s(t0, eps, s)
            .into_iter()
            .min_by(|a, b| (a.0 - t0).norm().total_cmp(&(b.0 - t0).norm()));
        if let Some((t_star, residual)) = best {
            let paper = EigenFamily::paper_relation(s)?;
            let scaled = EigenFamily::twist_ring(s)?;
            return Ok(EquimodularPoint {
                t_star,
                s,
                residual,
                dominant: paper.is_dominant_at(t_star),
                dominant_scaled: scaled.is_dominant_at(t_star),
            });
        }
    }
    Err(BkwError::NoEquimodularPointFound {
        t0: format!("{t0}"),
        s_max,
    })
}

/// `δ = -(√t + 1/√t)` on the principal branch, i.e. `-A² - A⁻²` with `A² = t^{-1/2}`.
pub fn delta_at(t: Complex64) -> Complex64 {
    let r = t.sqrt();
    -(r + r.inv())
}

pub type ComplexFn = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// Pretzel rings `P(s, ..., s)` normalised with writhe `s·n`.
    TwistRing(i64),
    /// The pair `1 - (-t)^s`, `1 + (t + t⁻¹ + 1)(-t)^s` with the closure weights
    /// of the rings.
    PaperRelation(i64),
    Custom,
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::TwistRing(s) => write!(f, "twist_ring:{s}"),
            Preset::PaperRelation(s) => write!(f, "paper_relation:{s}"),
            Preset::Custom => write!(f, "custom"),
        }
    }
}

/// `F_n(t) = α₁(t)Λ₁(t)ⁿ + α₂(t)Λ₂(t)ⁿ + c`.
#[derive(Clone)]
pub struct EigenFamily {
    pub alpha1: ComplexFn,
    pub alpha2: ComplexFn,
    pub lambda1: ComplexFn,
    pub lambda2: ComplexFn,
    pub constant_term: Complex64,
    pub preset: Preset,
}

impl fmt::Debug for EigenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EigenFamily")
            .field("preset", &self.preset)
            .field("constant_term", &self.constant_term)
            .finish_non_exhaustive()
    }
}

/// Dominance tolerance on `||Λ₁| - |Λ₂||`.
pub const DOMINANCE_TOL: f64 = 1e-6;

impl EigenFamily {
    /// Builds a family after checking at three sample points that `Λ₁/Λ₂`
    /// is not constant.
    pub fn custom(
        alpha1: ComplexFn,
        alpha2: ComplexFn,
        lambda1: ComplexFn,
        lambda2: ComplexFn,
        constant_term: Complex64,
    ) -> Result<Self, BkwError> {
        Self::checked(EigenFamily {
            alpha1,
            alpha2,
            lambda1,
            lambda2,
            constant_term,
            preset: Preset::Custom,
        })
    }

    fn checked(fam: EigenFamily) -> Result<Self, BkwError> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6a6f6e6573);
        let ratios: Vec<Complex64> = (0..3)
            .map(|_| {
                let t = Complex64::from_polar(rng.random_range(0.5..2.0), rng.random_range(0.1..3.0));
                (fam.lambda1)(t) / (fam.lambda2)(t)
            })
            .collect();
        let scale = ratios.iter().map(|r| r.norm()).fold(1.0, f64::max);
        let constant = ratios
            .iter()
            .all(|r| r.is_finite() && (r - ratios[0]).norm() <= 1e-12 * scale)
            || ratios.iter().all(|r| !r.is_finite());
        if constant {
            return Err(BkwError::ProportionalEigenvalues);
        }
        Ok(fam)
    }

    fn with_weights(s: i64, scale_by_delta: bool, preset: Preset) -> Result<Self, BkwError> {
        if s == 0 {
            return Err(BkwError::ZeroTwist);
        }
        let k = move |t: Complex64| {
            if scale_by_delta {
                delta_at(t).inv()
            } else {
                Complex64::new(1.0, 0.0)
            }
        };
        let lambda1: ComplexFn = Arc::new(move |t| (1.0 - minus_t_pow(t, s)) * k(t));
        let lambda2: ComplexFn = Arc::new(move |t| (1.0 + (t + t.inv() + 1.0) * minus_t_pow(t, s)) * k(t));
        let alpha1: ComplexFn = Arc::new(|t| (t + 1.0 + t.inv()) / delta_at(t));
        let alpha2: ComplexFn = Arc::new(|t| delta_at(t).inv());
        Self::checked(EigenFamily {
            alpha1,
            alpha2,
            lambda1,
            lambda2,
            constant_term: Complex64::new(-1.0, 0.0),
            preset,
        })
    }

    /// `J(P(s, ..., s)) - 1` as an eigenvalue family: `Λ₁ = (1 - (-t)^s)/δ`,
    /// `Λ₂ = (1 + (t + t⁻¹ + 1)(-t)^s)/δ`, `α₁ = (δ² - 1)/δ`, `α₂ = 1/δ`.
    pub fn twist_ring(s: i64) -> Result<Self, BkwError> {
        Self::with_weights(s, true, Preset::TwistRing(s))
    }

    /// As [`EigenFamily::twist_ring`] with both eigenvalues multiplied by `δ`.
    pub fn paper_relation(s: i64) -> Result<Self, BkwError> {
        Self::with_weights(s, false, Preset::PaperRelation(s))
    }

    /// Parses `twist_ring:s` or `paper_relation:s`.
    pub fn from_preset_name(name: &str) -> Result<Self, BkwError> {
        let bad = || BkwError::Poly(crate::error::PolyError::Parse(format!("unknown preset '{name}'")));
        let (kind, s) = name.split_once(':').ok_or_else(bad)?;
        let s: i64 = s.trim().parse().map_err(|_| bad())?;
        match kind.trim() {
            "twist_ring" => Self::twist_ring(s),
            "paper_relation" => Self::paper_relation(s),
            _ => Err(bad()),
        }
    }

    pub fn eval(&self, t: Complex64, n: u32) -> Complex64 {
        (self.alpha1)(t) * (self.lambda1)(t).powu(n)
            + (self.alpha2)(t) * (self.lambda2)(t).powu(n)
            + self.constant_term
    }

    /// Size of the largest term of `F_n(t)`, for relative tolerances.
    fn scale(&self, t: Complex64, n: u32) -> f64 {
        let a = (self.alpha1)(t).norm() * (self.lambda1)(t).norm().powi(n as i32);
        let b = (self.alpha2)(t).norm() * (self.lambda2)(t).norm().powi(n as i32);
        a.max(b).max(self.constant_term.norm())
    }

    /// Same multiplier on both eigenvalues.
    pub fn rescaled(&self, c: Complex64) -> EigenFamily {
        let (l1, l2) = (self.lambda1.clone(), self.lambda2.clone());
        EigenFamily {
            lambda1: Arc::new(move |t| c * l1(t)),
            lambda2: Arc::new(move |t| c * l2(t)),
            preset: Preset::Custom,
            ..self.clone()
        }
    }

    pub fn is_dominant_at(&self, t: Complex64) -> bool {
        let (m1, m2) = ((self.lambda1)(t).norm(), (self.lambda2)(t).norm());
        (m1 - m2).abs() <= DOMINANCE_TOL && m1.min(m2) > 1.0 + DOMINANCE_TOL
    }
}

/// Checks at `samples` seeded random points that multiplying both
/// eigenvalues by `c` keeps `Λ₁/Λ₂` and the sign of `|Λ₁| - |Λ₂|` (scaled
/// by `|c|`).
pub fn rescale_check(fam: &EigenFamily, c: Complex64, samples: usize) -> bool {
    const TOL: f64 = 1e-12;
    if c.norm() == 0.0 {
        return false;
    }
    let scaled = fam.rescaled(c);
    let mut rng = ChaCha8Rng::seed_from_u64(samples as u64 ^ 0x5eed);
    (0..samples).all(|_| {
        let t = Complex64::from_polar(rng.random_range(0.3..3.0), rng.random_range(-3.1..3.1));
        let (l1, l2) = ((fam.lambda1)(t), (fam.lambda2)(t));
        let (m1, m2) = ((scaled.lambda1)(t), (scaled.lambda2)(t));
        let ratio_err = (m1 / m2 - l1 / l2).norm() / (l1 / l2).norm().max(1.0);
        let gap = l1.norm() - l2.norm();
        let gap_err = ((m1.norm() - m2.norm()) / c.norm() - gap).abs() / l1.norm().max(l2.norm()).max(1.0);
        ratio_err < TOL && gap_err < TOL
    })
}

/// Grid resolution per side of the zero search box.
const ZERO_GRID: i64 = 60;
const NEWTON_STEP: f64 = 1e-6;
const ZERO_TOL: f64 = 1e-8;

fn newton_on_family(fam: &EigenFamily, n: u32, mut z: Complex64) -> Option<Complex64> {
    for _ in 0..60 {
        let f = fam.eval(z, n);
        if !f.is_finite() {
            return None;
        }
        if f.norm() <= ZERO_TOL * fam.scale(z, n) {
            return Some(z);
        }
        let h = Complex64::new(NEWTON_STEP, 0.0);
        let df = (fam.eval(z + h, n) - fam.eval(z - h, n)) / (2.0 * NEWTON_STEP);
        if df.norm() == 0.0 || !df.is_finite() {
            return None;
        }
        let step = f / df;
        // keep the iteration local
        let step = if step.norm() > 0.05 {
            step * (0.05 / step.norm())
        } else {
            step
        };
        z -= step;
    }
    let f = fam.eval(z, n);
    (f.norm() <= ZERO_TOL * fam.scale(z, n)).then_some(z)
}

/// Zeros of `F_n` in the disc `|t - center| <= radius`, found from the
/// local minima of `|F_n|` on a grid by Newton's method.
pub fn zeros_in_box(fam: &EigenFamily, center: Complex64, n: u32, radius: f64) -> Vec<Complex64> {
    let h = radius / ZERO_GRID as f64;
    let side = (2 * ZERO_GRID + 1) as usize;
    let node = |i: i64, j: i64| center + Complex64::new(i as f64 * h, j as f64 * h);
    let mut mag = vec![f64::INFINITY; side * side];
    let idx = |i: i64, j: i64| ((i + ZERO_GRID) as usize) * side + (j + ZERO_GRID) as usize;
    for i in -ZERO_GRID..=ZERO_GRID {
        for j in -ZERO_GRID..=ZERO_GRID {
            let t = node(i, j);
            if (t - center).norm() <= radius && t.norm() > 0.0 {
                let v = fam.eval(t, n).norm() / fam.scale(t, n);
                if v.is_finite() {
                    mag[idx(i, j)] = v;
                }
            }
        }
    }
    let mut seeds = vec![center];
    for i in -ZERO_GRID..=ZERO_GRID {
        for j in -ZERO_GRID..=ZERO_GRID {
            let v = mag[idx(i, j)];
            if !v.is_finite() {
                continue;
            }
            let is_min = (-1..=1).all(|di: i64| {
                (-1..=1).all(|dj: i64| {
                    let (a, b) = (i + di, j + dj);
                    (di == 0 && dj == 0) || a.abs() > ZERO_GRID || b.abs() > ZERO_GRID || mag[idx(a, b)] >= v
                })
            });
            if is_min {
                seeds.push(node(i, j));
            }
        }
    }
    let mut zeros: Vec<Complex64> = Vec::new();
    for seed in seeds {
        if let Some(z) = newton_on_family(fam, n, seed) {
            if (z - center).norm() <= radius && !zeros.iter().any(|w| (w - z).norm() < 1e-9) {
                zeros.push(z);
            }
        }
    }
    zeros
}

/// Zeros in the disc of the exact ring polynomial `ring_family_polynomial(s, n) - 1`.
fn ring_zeros_in_box(s: i64, n: u32, center: Complex64, radius: f64) -> Result<Vec<Complex64>, BkwError> {
    let j = ring_family_polynomial(s, n)?;
    let f = &j - &LaurentPoly::one(j.var());
    if f.is_zero() {
        return Ok(Vec::new());
    }
    let zeros: Vec<Complex64> = match j.var() {
        Var::T => find_roots(&f)?.roots.into_iter().map(|r| r.z).collect(),
        _ => {
            // roots in q = √t, principal branch only
            let in_q = LaurentPoly::from_terms(Var::T, f.terms().map(|(e, c)| (e, c.clone())));
            find_roots(&in_q)?
                .roots
                .into_iter()
                .filter(|r| r.z.re > 0.0 || (r.z.re == 0.0 && r.z.im > 0.0))
                .map(|r| r.z * r.z)
                .collect()
        }
    };
    Ok(zeros
        .into_iter()
        .filter(|z| (z - center).norm() <= radius)
        .collect())
}

/// How the zeros of one `F_n` were located.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroMethod {
    /// Roots of the exact integer polynomial.
    ExactRoots,
    /// Grid minima refined by Newton's method on the eigenvalue form.
    GridNewton,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AccumulationRow {
    pub n: u32,
    pub nearest_zero: Complex64,
    pub distance: f64,
    pub method: ZeroMethod,
}

/// For each `n`, the zero of `F_n` nearest to the dominant equimodular
/// point `t_star` within `box_radius`.
///
/// Ring presets use the exact polynomial first. Its float roots lose
/// accuracy once the degree reaches a few hundred; when the root finder
/// gives up, the grid search on the eigenvalue form is used instead and the
/// row says so.
pub fn jw_zero_accumulation(
    fam: &EigenFamily,
    t_star: Complex64,
    n_list: &[u32],
    box_radius: f64,
) -> Result<Vec<AccumulationRow>, BkwError> {
    if fam.constant_term != Complex64::new(-1.0, 0.0) {
        return Err(BkwError::NotJwFamily);
    }
    if t_star.norm() == 0.0 {
        return Err(BkwError::PoleAtZero);
    }
    let (m1, m2) = ((fam.lambda1)(t_star).norm(), (fam.lambda2)(t_star).norm());
    let degenerate = (fam.alpha1)(t_star).norm() == 0.0 && (fam.alpha2)(t_star).norm() == 0.0;
    if degenerate || !fam.is_dominant_at(t_star) {
        return Err(BkwError::DominanceViolated {
            t_star: format!("{t_star}"),
            modulus1: m1,
            modulus2: m2,
        });
    }
    n_list
        .iter()
        .map(|&n| {
            let grid = || (zeros_in_box(fam, t_star, n, box_radius), ZeroMethod::GridNewton);
            let (zeros, method) = match fam.preset {
                Preset::TwistRing(s) => match ring_zeros_in_box(s, n, t_star, box_radius) {
                    Ok(z) => (z, ZeroMethod::ExactRoots),
                    Err(BkwError::Root(RootError::NoConvergence { .. })) => grid(),
                    Err(e) => return Err(e),
                },
                _ => grid(),
            };
            zeros
                .into_iter()
                .map(|z| AccumulationRow {
                    n,
                    nearest_zero: z,
                    distance: (z - t_star).norm(),
                    method,
                })
                .min_by(|a, b| a.distance.total_cmp(&b.distance))
                .ok_or(BkwError::NoZeroInBox { n })
        })
        .collect()
}
