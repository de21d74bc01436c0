//! Double-twist knots `K_n = C(2n, 3)` and the equation `J_n(t) = 1`.
//!
//! `J_n(t) = t^(-3n-3) · N_n(t) / (1 + t)` with
//! `N_n(t) = t^(2n)(1 + t^2 + t^4) + t^3 - t^2 - 1`. Clearing the
//! denominator of `J_n = 1` gives `P_n = N_n - t^(3n+3)(1 + t)`; with
//! `x = ζ^n` this becomes a cubic in `x` with the factor `x - 1`, so
//! every root of unity `ζ ≠ -1` of order `N` solves `J_N(ζ) = 1`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::DtwistError;
use crate::laurent::{cyclotomic, LaurentPoly, Var};

/// Index `n ≥ 1` of the knot `K_n = C(2n, 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubleTwistIndex(u64);

impl DoubleTwistIndex {
    pub fn new(n: u64) -> Result<Self, DtwistError> {
        if n == 0 {
            Err(DtwistError::InvalidIndex)
        } else {
            Ok(DoubleTwistIndex(n))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    fn exp(self) -> i64 {
        self.0 as i64
    }
}

impl TryFrom<u64> for DoubleTwistIndex {
    type Error = DtwistError;

    fn try_from(n: u64) -> Result<Self, Self::Error> {
        Self::new(n)
    }
}

impl fmt::Display for DoubleTwistIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn t_poly<const N: usize>(terms: [(i64, i64); N]) -> LaurentPoly {
    LaurentPoly::from_terms(Var::T, terms)
}

fn one_plus_t() -> LaurentPoly {
    t_poly([(0, 1), (1, 1)])
}

/// `N_n(t) = t^(2n)(1 + t^2 + t^4) + t^3 - t^2 - 1`.
pub fn numerator_nn(n: DoubleTwistIndex) -> LaurentPoly {
    let k = 2 * n.exp();
    t_poly([(k, 1), (k + 2, 1), (k + 4, 1), (3, 1), (2, -1), (0, -1)])
}

/// Closed-form Jones polynomial of `K_n`, normalised so `J_n(1) = 1`.
pub fn jones_closed(n: DoubleTwistIndex) -> LaurentPoly {
    numerator_nn(n)
        .div_exact(&one_plus_t())
        .expect("N_n(-1) = 0, so 1 + t divides N_n")
        .shift(-3 * n.exp() - 3)
}

/// `P_n = N_n - t^(3n+3)(1 + t) = t^(3n+3)(1 + t)(J_n - 1)`.
pub fn pn(n: DoubleTwistIndex) -> LaurentPoly {
    let k = 3 * n.exp() + 3;
    numerator_nn(n) - t_poly([(k, 1), (k + 1, 1)])
}

/// `J_n(-1) = (-1)^n (6n + 1)`; `6n + 1` is the determinant of `K_n`.
pub fn det_at_minus_one(n: DoubleTwistIndex) -> i64 {
    let magnitude = 6 * n.exp() + 1;
    if n.get().is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

/// Polynomial in `x` whose coefficients are Laurent polynomials in `ζ`;
/// `coeffs[k]` multiplies `x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyInX {
    coeffs: Vec<LaurentPoly>,
}

impl PolyInX {
    pub fn new(coeffs: Vec<LaurentPoly>) -> Self {
        let mut p = PolyInX { coeffs };
        while p.coeffs.last().is_some_and(|c| c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(Var::T))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &PolyInX) -> PolyInX {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return PolyInX::new(Vec::new());
        }
        let mut out = vec![LaurentPoly::zero(Var::T); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyInX::new(out)
    }

    pub fn eval(&self, zeta: Complex64, x: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| {
            acc * x + c.eval_complex(zeta).expect("coefficients are polynomials in ζ")
        })
    }
}

/// `c3 x^3 + c2 x^2 + c1 x + c0` with coefficients in `ζ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicInX {
    pub c3: LaurentPoly,
    pub c2: LaurentPoly,
    pub c1: LaurentPoly,
    pub c0: LaurentPoly,
}

impl CubicInX {
    pub fn as_poly(&self) -> PolyInX {
        PolyInX::new(vec![
            self.c0.clone(),
            self.c1.clone(),
            self.c2.clone(),
            self.c3.clone(),
        ])
    }

    pub fn eval(&self, zeta: Complex64, x: Complex64) -> Complex64 {
        self.as_poly().eval(zeta, x)
    }
}

/// The cubic obtained from `P_n(ζ) = 0` by writing `x = ζ^n`:
/// `ζ^3(1+ζ)x^3 - (1+ζ^2+ζ^4)x^2 + (1+ζ^2-ζ^3) = 0`.
pub fn cubic_for_zeta() -> CubicInX {
    CubicInX {
        c3: t_poly([(3, 1), (4, 1)]),
        c2: t_poly([(0, -1), (2, -1), (4, -1)]),
        c1: LaurentPoly::zero(Var::T),
        c0: t_poly([(0, 1), (2, 1), (3, -1)]),
    }
}

/// The two factors `(x - 1)` and `ζ^3(1+ζ)x^2 + (ζ^3-1-ζ^2)(x+1)`.
pub fn cubic_factors() -> (PolyInX, PolyInX) {
    let linear = PolyInX::new(vec![t_poly([(0, -1)]), t_poly([(0, 1)])]);
    let b = t_poly([(3, 1), (0, -1), (2, -1)]);
    let quadratic = PolyInX::new(vec![b.clone(), b, t_poly([(3, 1), (4, 1)])]);
    (linear, quadratic)
}

/// Expands the factorisation symbolically and compares it with
/// [`cubic_for_zeta`].
pub fn factor_identity_check() -> bool {
    let (linear, quadratic) = cubic_factors();
    linear.mul(&quadratic) == cubic_for_zeta().as_poly()
}

/// Primitive root of unity `e^(2πik/N)` with `gcd(k, N) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    k: u64,
    order: u64,
}

impl RootOfUnity {
    pub fn new(k: u64, order: u64) -> Result<Self, DtwistError> {
        if order == 0 || k >= order || k.gcd(&order) != 1 {
            return Err(DtwistError::InvalidRootOfUnity { k, order });
        }
        Ok(RootOfUnity { k, order })
    }

    /// All primitive `order`-th roots of unity.
    pub fn primitive(order: u64) -> impl Iterator<Item = RootOfUnity> {
        (0..order).filter_map(move |k| RootOfUnity::new(k, order).ok())
    }

    pub fn k(self) -> u64 {
        self.k
    }

    pub fn order(self) -> u64 {
        self.order
    }

    pub fn is_minus_one(self) -> bool {
        self.order == 2
    }

    pub fn value(self) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * PI * self.k as f64 / self.order as f64)
    }
}

/// Outcome of [`witness_n`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Witness {
    pub n: u64,
    /// `|J_n(ζ) - 1|` in floating point.
    pub residual: f64,
    /// `Φ_N` divides `P_n` exactly.
    pub certified: bool,
}

pub const WITNESS_TOLERANCE: f64 = 1e-9;

/// The minimal `n` with `J_n(ζ) = 1`, namely `n = ord(ζ)`.
pub fn witness_n(zeta: RootOfUnity) -> Result<Witness, DtwistError> {
    if zeta.is_minus_one() {
        let n = DoubleTwistIndex(zeta.order());
        return Err(DtwistError::MinusOneExcluded {
            obstruction: det_at_minus_one(n),
        });
    }
    let n = DoubleTwistIndex(zeta.order());
    let residual = (jones_closed(n)
        .eval_complex(zeta.value())
        .expect("ζ lies on the unit circle")
        - 1.0)
        .norm();
    let certified = pn(n)
        .is_divisible_by(&cyclotomic(zeta.order()))
        .expect("cyclotomic polynomials are nonzero");
    Ok(Witness {
        n: n.get(),
        residual,
        certified,
    })
}

const LEADING_EPS: f64 = 1e-14;

/// Roots of the quadratic factor `ζ^3(1+ζ)x^2 + (ζ^3-1-ζ^2)x + (ζ^3-1-ζ^2)`.
pub fn quadratic_roots(zeta: Complex64) -> Result<(Complex64, Complex64), DtwistError> {
    let z2 = zeta * zeta;
    let z3 = z2 * zeta;
    let a = z3 * (1.0 + zeta);
    if a.norm() < LEADING_EPS {
        return Err(DtwistError::DegenerateLeadingCoefficient(a.norm()));
    }
    let b = z3 - 1.0 - z2;
    let c = b;
    let disc = (b * b - 4.0 * a * c).sqrt();
    // pick the sign that avoids cancellation in b ± disc
    let sum = if (b.conj() * disc).re >= 0.0 {
        b + disc
    } else {
        b - disc
    };
    let q = -0.5 * sum;
    if q.norm() == 0.0 {
        return Ok((Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)));
    }
    Ok((q / a, c / q))
}
