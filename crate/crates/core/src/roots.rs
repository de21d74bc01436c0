//! Complex zeros of integer Laurent polynomials in `t`.
//!
//! Roots are found all at once by Aberth–Ehrlich iteration, polished by
//! Newton's method and grouped into multiple roots. The factor `(t - 1)^m`
//! is removed exactly beforehand since every `J(t) - 1` carries it with
//! `m >= 2`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::RootError;
use crate::laurent::{big_to_f64, cyclotomic, LaurentPoly, Var};

/// Sweep budget for the simultaneous iteration.
pub const MAX_SWEEPS: usize = 500;
/// Reported roots must have a scaled residual at most this.
pub const RESIDUAL_BOUND: f64 = 1e-8;
/// Roots closer than this are always merged.
pub const CLUSTER_RADIUS: f64 = 1e-7;

/// Wider radius inside which a merge needs the derivative test to pass.
const MERGE_RADIUS: f64 = 1e-3;
const DERIVATIVE_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub z: Complex64,
    pub multiplicity: usize,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootReport {
    pub roots: Vec<Root>,
    pub source: String,
    /// Set when the input was identically zero after subtracting one, i.e.
    /// every `t` solves `J(t) = 1`.
    pub degenerate_identity: bool,
}

impl RootReport {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Root nearest to `z`, if any.
    pub fn nearest(&self, z: Complex64) -> Option<&Root> {
        self.roots
            .iter()
            .min_by(|a, b| (a.z - z).norm().total_cmp(&(b.z - z).norm()))
    }
}

/// Float copy of a polynomial `Σ c[k] t^k` with Horner helpers.
#[derive(Clone, Debug)]
struct Dense {
    c: Vec<f64>,
}

impl Dense {
    fn from_big(coeffs: &[BigInt]) -> Result<Self, RootError> {
        let c: Vec<f64> = coeffs.iter().map(big_to_f64).collect();
        if c.iter().any(|x| !x.is_finite()) {
            return Err(RootError::CoefficientOverflow);
        }
        Ok(Dense { c })
    }

    fn degree(&self) -> usize {
        self.c.len() - 1
    }

    fn eval(&self, z: Complex64) -> Complex64 {
        self.c.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a)
    }

    /// `Σ |c_k| |z|^k`, the natural size of the terms of `p(z)`.
    fn abs_eval(&self, r: f64) -> f64 {
        self.c.iter().rev().fold(0.0, |acc, &a| acc * r + a.abs())
    }

    fn l1(&self) -> f64 {
        self.c.iter().map(|a| a.abs()).sum()
    }

    fn derivative(&self) -> Dense {
        if self.c.len() <= 1 {
            return Dense { c: vec![0.0] };
        }
        Dense {
            c: self
                .c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &a)| k as f64 * a)
                .collect(),
        }
    }

    fn reversed(&self) -> Dense {
        Dense {
            c: self.c.iter().rev().copied().collect(),
        }
    }

    /// Newton correction `p(z)/p'(z)`, computed through the reversed
    /// polynomial outside the unit disc.
    fn newton_ratio(&self, dp: &Dense, rev: &Dense, drev: &Dense, z: Complex64) -> Complex64 {
        if z.norm() <= 1.0 {
            self.eval(z) / dp.eval(z)
        } else {
            let w = z.inv();
            let n = self.degree() as f64;
            z / (n - w * drev.eval(w) / rev.eval(w))
        }
    }
}

/// `|p(z)| / max(1, ‖p‖₁ |z|^deg)`.
fn scaled_residual(p: &Dense, z: Complex64) -> f64 {
    let denom = (p.l1() * z.norm().powi(p.degree() as i32)).max(1.0);
    p.eval(z).norm() / denom
}

fn aberth(p: &Dense) -> Result<Vec<Complex64>, RootError> {
    let n = p.degree();
    if n == 0 {
        return Ok(Vec::new());
    }
    let dp = p.derivative();
    let rev = p.reversed();
    let drev = rev.derivative();
    let radius = (p.c[0].abs() / p.c[n].abs()).powf(1.0 / n as f64);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];
    for _ in 0..MAX_SWEEPS {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let zi = z[i];
            if p.eval(zi).norm() <= 8.0 * f64::EPSILON * p.abs_eval(zi.norm()) {
                done[i] = true;
                continue;
            }
            let ratio = p.newton_ratio(&dp, &rev, &drev, zi);
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (zi - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                done[i] = true;
                continue;
            }
            z[i] = zi - step;
            if step.norm() <= 4.0 * f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
    }
    Err(RootError::NoConvergence {
        sweeps: MAX_SWEEPS,
        unconverged: (0..n).filter(|&i| !done[i]).collect(),
    })
}

/// Newton on `p^{(k-1)}`, which has a simple root where `p` has a `k`-fold one.
fn polish(p: &Dense, z: Complex64, multiplicity: usize) -> Complex64 {
    let mut f = p.clone();
    for _ in 1..multiplicity {
        f = f.derivative();
    }
    let df = f.derivative();
    let mut best = z;
    let mut best_val = f.eval(z).norm();
    let mut cur = z;
    for _ in 0..8 {
        let d = df.eval(cur);
        if d.norm() == 0.0 {
            break;
        }
        cur -= f.eval(cur) / d;
        let v = f.eval(cur).norm();
        // NaN also stops the iteration
        if v.partial_cmp(&best_val) != Some(std::cmp::Ordering::Less) {
            break;
        }
        best = cur;
        best_val = v;
    }
    best
}

/// Whether the first `k` Taylor coefficients of `p` at `c` vanish to
/// working precision.
fn has_multiplicity(p: &Dense, c: Complex64, k: usize) -> bool {
    let mut f = p.clone();
    for j in 0..k {
        if j > 0 {
            f = f.derivative();
        }
        let scale = f.abs_eval(c.norm()).max(f64::MIN_POSITIVE);
        if f.eval(c).norm() / scale > DERIVATIVE_TOL {
            return false;
        }
    }
    true
}

struct Cluster {
    members: Vec<Complex64>,
}

impl Cluster {
    fn centroid(&self) -> Complex64 {
        self.members.iter().sum::<Complex64>() / self.members.len() as f64
    }
}

fn cluster(p: &Dense, zs: Vec<Complex64>) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<Cluster> = Vec::new();
    for z in zs {
        match clusters
            .iter_mut()
            .find(|c| c.members.iter().any(|m| (m - z).norm() <= CLUSTER_RADIUS))
        {
            Some(c) => c.members.push(z),
            None => clusters.push(Cluster { members: vec![z] }),
        }
    }
    // absorb near neighbours when the merged point is a root of the
    // combined multiplicity
    loop {
        let mut merged = false;
        'outer: for i in 0..clusters.len() {
            for j in i + 1..clusters.len() {
                let (ci, cj) = (clusters[i].centroid(), clusters[j].centroid());
                if (ci - cj).norm() > MERGE_RADIUS * ci.norm().max(1.0) {
                    continue;
                }
                let mut all = clusters[i].members.clone();
                all.extend(&clusters[j].members);
                let joint = Cluster { members: all };
                let k = joint.members.len();
                if has_multiplicity(p, polish(p, joint.centroid(), k), k) {
                    clusters[i] = joint;
                    clusters.swap_remove(j);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            break;
        }
    }
    clusters
        .into_iter()
        .map(|c| {
            let k = c.members.len();
            (polish(p, c.centroid(), k), k)
        })
        .collect()
}

/// All roots of `p` with multiplicities, after stripping the `t^k` factor.
pub fn find_roots(p: &LaurentPoly) -> Result<RootReport, RootError> {
    find_roots_with_source(p, p.to_string())
}

fn find_roots_with_source(p: &LaurentPoly, source: String) -> Result<RootReport, RootError> {
    if p.var() != Var::T {
        return Err(RootError::WrongVariable(p.var()));
    }
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let lo = p.min_exp().expect("nonzero");
    let cleared = p.shift(-lo);
    let t_minus_one = LaurentPoly::from_terms(Var::T, [(0, -1), (1, 1)]);
    let mut rest = cleared.clone();
    let mut m_one = 0;
    while rest.max_exp() > Some(0) && rest.eval_at_one().is_zero() {
        rest = rest.div_exact(&t_minus_one)?;
        m_one += 1;
    }
    let full = Dense::from_big(&cleared.to_dense().1)?;
    let reduced = Dense::from_big(&rest.to_dense().1)?;

    let mut found = cluster(&reduced, aberth(&reduced)?);
    if m_one > 0 {
        found.push((Complex64::new(1.0, 0.0), m_one));
    }
    let mut roots: Vec<Root> = found
        .into_iter()
        .map(|(z, multiplicity)| Root {
            z,
            multiplicity,
            residual: scaled_residual(&full, z),
        })
        .collect();
    roots.sort_by(|a, b| {
        a.z.arg()
            .total_cmp(&b.z.arg())
            .then(a.z.norm().total_cmp(&b.z.norm()))
    });
    let bad: Vec<usize> = roots
        .iter()
        .enumerate()
        .filter(|(_, r)| r.residual.is_nan() || r.residual > RESIDUAL_BOUND)
        .map(|(i, _)| i)
        .collect();
    if !bad.is_empty() {
        return Err(RootError::NoConvergence {
            sweeps: MAX_SWEEPS,
            unconverged: bad,
        });
    }
    Ok(RootReport {
        roots,
        source,
        degenerate_identity: false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassifyOptions {
    /// Largest root-of-unity order tried.
    pub dmax: u64,
    /// Tolerance on `||z| - 1|`.
    pub tol_circle: f64,
    /// The polynomial carries a factor `1 + t` that is not part of the
    /// equation being solved (as in `P_n`), so a root at `-1` is spurious.
    pub minus_one_spurious: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            dmax: 200,
            tol_circle: 1e-6,
            minus_one_spurious: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub on_unit_circle: bool,
    pub rou_order: Option<u64>,
    pub excluded_minus_one: bool,
}

/// Denominators of the continued-fraction convergents of `x` up to `qmax`.
fn convergent_denominators(x: f64, qmax: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let (mut p0, mut q0, mut p1, mut q1) = (0u64, 1u64, 1u64, 0u64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a > 1e12 {
            break;
        }
        let a = a as u64;
        let (p2, q2) = (a * p1 + p0, a * q1 + q0);
        if q2 > qmax {
            break;
        }
        out.push((p2, q2));
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = r - r.floor();
        if frac < 1e-12 {
            break;
        }
        r = frac.recip();
    }
    out
}

/// Unit-circle membership and a certified root-of-unity order for `z`.
pub fn classify(z: Complex64, p: &LaurentPoly, opts: &ClassifyOptions) -> Classification {
    let on_unit_circle = (z.norm() - 1.0).abs() <= opts.tol_circle;
    let excluded_minus_one = opts.minus_one_spurious && (z + 1.0).norm() <= opts.tol_circle;
    let mut rou_order = None;
    if on_unit_circle && !excluded_minus_one && p.var() == Var::T && !p.is_zero() {
        let theta = (z.arg() / std::f64::consts::TAU).rem_euclid(1.0);
        for (num, d) in convergent_denominators(theta, opts.dmax) {
            let d = d.max(1);
            let num = num % d;
            let dist = (theta - num as f64 / d as f64)
                .abs()
                .min(1.0 - (theta - num as f64 / d as f64).abs());
            if dist > opts.tol_circle || num.gcd(&d) != 1 && !(num == 0 && d == 1) {
                continue;
            }
            if p.is_divisible_by(&cyclotomic(d)).unwrap_or(false) {
                rou_order = Some(d);
                break;
            }
        }
    }
    Classification {
        on_unit_circle,
        rou_order,
        excluded_minus_one,
    }
}

/// Roots of `t^m (j - 1)` with `m` clearing the denominator of `j`.
///
/// A root near `-1` is kept only when `j(-1) = 1` holds exactly.
pub fn solutions_of_jones_equals_one(j: &LaurentPoly) -> Result<RootReport, RootError> {
    if j.var() != Var::T {
        return Err(RootError::WrongVariable(j.var()));
    }
    let source = format!("J(t) - 1 for J = {j}");
    let f = j - &LaurentPoly::one(Var::T);
    if f.is_zero() {
        return Ok(RootReport {
            roots: Vec::new(),
            source,
            degenerate_identity: true,
        });
    }
    let mut report = find_roots_with_source(&f, source)?;
    let minus_one_holds = j.eval_at_minus_one() == BigInt::from(1);
    report
        .roots
        .retain(|r| r.z.norm() > 0.0 && ((r.z + 1.0).norm() > 1e-6 || minus_one_holds));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dtwist::{jones_closed, pn, DoubleTwistIndex};

    fn t(s: &str) -> LaurentPoly {
        LaurentPoly::parse_in(s, Var::T).unwrap()
    }

    fn idx(n: u64) -> DoubleTwistIndex {
        DoubleTwistIndex::new(n).unwrap()
    }

    fn has_root(r: &RootReport, z: Complex64, m: usize) -> bool {
        r.roots
            .iter()
            .any(|x| (x.z - z).norm() < 1e-8 && x.multiplicity == m)
    }

    fn cis(turns: f64) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::TAU * turns)
    }

    #[test]
    fn double_root_at_one() {
        let r = find_roots(&t("1 - 2*t + t^2")).unwrap();
        assert_eq!(r.roots.len(), 1);
        assert_eq!(r.roots[0].z, Complex64::new(1.0, 0.0));
        assert_eq!(r.roots[0].multiplicity, 2);
    }

    #[test]
    fn roots_of_p1() {
        let r = find_roots(&pn(idx(1))).unwrap();
        assert_eq!(r.total_multiplicity(), 7);
        assert!(has_root(&r, 1.0.into(), 2));
        for z in [
            (-1.0).into(),
            Complex64::i(),
            -Complex64::i(),
            cis(1.0 / 3.0),
            cis(-1.0 / 3.0),
        ] {
            assert!(has_root(&r, z, 1), "{z}");
        }
        assert!(r.roots.iter().all(|x| x.residual < 1e-10));
    }

    #[test]
    fn roots_of_phi6() {
        let r = find_roots(&cyclotomic(6)).unwrap();
        assert_eq!(r.roots.len(), 2);
        assert!(has_root(&r, cis(1.0 / 6.0), 1));
        assert!(has_root(&r, cis(-1.0 / 6.0), 1));
    }

    #[test]
    fn monomial_factor_is_stripped() {
        let r = find_roots(&t("t^-3 - t^-1")).unwrap();
        assert_eq!(r.total_multiplicity(), 2);
    }

    #[test]
    fn input_errors() {
        assert_eq!(
            find_roots(&LaurentPoly::zero(Var::T)),
            Err(RootError::ZeroPolynomial)
        );
        assert_eq!(
            find_roots(&LaurentPoly::one(Var::Q)),
            Err(RootError::WrongVariable(Var::Q))
        );
        assert!(find_roots(&t("5")).unwrap().roots.is_empty());
    }

    #[test]
    fn triple_root_off_one() {
        // (t + 2)^3 (t^2 + 1)
        let p = t("t + 2").pow(3) * t("t^2 + 1");
        let r = find_roots(&p).unwrap();
        assert!(
            r.roots
                .iter()
                .any(|x| (x.z + 2.0).norm() < 1e-6 && x.multiplicity == 3),
            "{r:?}"
        );
        assert_eq!(r.total_multiplicity(), 5);
    }

    #[test]
    fn classification_examples() {
        let p3 = pn(idx(3));
        let c = classify(cis(1.0 / 3.0), &p3, &ClassifyOptions::default());
        assert_eq!(
            c,
            Classification {
                on_unit_circle: true,
                rou_order: Some(3),
                excluded_minus_one: false
            }
        );
        let off = classify(Complex64::new(0.0, 0.9), &p3, &ClassifyOptions::default());
        assert!(!off.on_unit_circle);
        assert_eq!(off.rou_order, None);
        let opts = ClassifyOptions {
            minus_one_spurious: true,
            ..Default::default()
        };
        let m = classify((-1.0).into(), &pn(idx(2)), &opts);
        assert!(m.excluded_minus_one);
        assert_eq!(m.rou_order, None);
        assert_eq!(classify(1.0.into(), &p3, &opts).rou_order, Some(1));
    }

    #[test]
    fn uncertified_when_cyclotomic_does_not_divide() {
        // 7th roots of unity are not roots of P_3
        let c = classify(cis(1.0 / 7.0), &pn(idx(3)), &ClassifyOptions::default());
        assert!(c.on_unit_circle);
        assert_eq!(c.rou_order, None);
    }

    #[test]
    fn jones_solutions() {
        let r = solutions_of_jones_equals_one(&jones_closed(idx(1))).unwrap();
        assert_eq!(r.total_multiplicity(), 6);
        assert!(has_root(&r, 1.0.into(), 2));
        for z in [Complex64::i(), -Complex64::i(), cis(1.0 / 3.0), cis(-1.0 / 3.0)] {
            assert!(has_root(&r, z, 1), "{z}");
        }
        let unknot = solutions_of_jones_equals_one(&LaurentPoly::one(Var::T)).unwrap();
        assert!(unknot.degenerate_identity && unknot.roots.is_empty());
        let tref = solutions_of_jones_equals_one(&t("t + t^3 - t^4")).unwrap();
        assert!(tref
            .roots
            .iter()
            .any(|x| (x.z - 1.0).norm() < 1e-9 && x.multiplicity >= 2));
        assert!(has_root(&tref, cis(1.0 / 3.0), 1));
        assert!(has_root(&tref, cis(-1.0 / 3.0), 1));
    }

    #[test]
    fn deterministic() {
        let p = pn(idx(7));
        assert_eq!(find_roots(&p).unwrap(), find_roots(&p).unwrap());
    }
}
