use jones_one::bracket::{bundled_table, jones_from_pd};
use jones_one::dtwist::{pn, DoubleTwistIndex};
use jones_one::roots::{classify, find_roots, solutions_of_jones_equals_one, ClassifyOptions, RootReport};
use jones_one::{LaurentPoly, Var};
use num_complex::Complex64;
use num_traits::ToPrimitive;

fn idx(n: u64) -> DoubleTwistIndex {
    DoubleTwistIndex::new(n).unwrap()
}

/// Leja ordering keeps intermediate coefficients of the product small.
fn leja(mut zs: Vec<Complex64>) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(zs.len());
    while !zs.is_empty() {
        let score = |z: &Complex64| -> f64 {
            if out.is_empty() {
                z.norm()
            } else {
                out.iter()
                    .map(|w: &Complex64| (z - w).norm().max(1e-300).ln())
                    .sum()
            }
        };
        let best = (0..zs.len())
            .max_by(|&a, &b| score(&zs[a]).total_cmp(&score(&zs[b])))
            .unwrap();
        out.push(zs.swap_remove(best));
    }
    out
}

/// Expands `lead · Π (t - z)^m` into float coefficients.
fn expand(report: &RootReport, lead: f64) -> Vec<Complex64> {
    let zs = report
        .roots
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.z, r.multiplicity))
        .collect();
    let mut c = vec![Complex64::new(lead, 0.0)];
    for z in leja(zs) {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (k, a) in c.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * z;
        }
        c = next;
    }
    c
}

fn assert_reconstructs(p: &LaurentPoly) {
    let report = find_roots(p).unwrap();
    let (_, dense) = p.to_dense();
    let coeffs: Vec<f64> = dense.iter().map(|c| c.to_f64().unwrap()).collect();
    assert_eq!(report.total_multiplicity(), coeffs.len() - 1, "{p}");
    let expanded = expand(&report, *coeffs.last().unwrap());
    let scale = coeffs.iter().map(|c| c.abs()).fold(1.0, f64::max);
    for (a, b) in coeffs.iter().zip(&expanded) {
        assert!((b - a).norm() <= 1e-6 * scale, "{p}: {a} vs {b}");
    }
}

#[test]
fn reconstruction_of_pn() {
    for n in 1..=18 {
        // degree 3n + 4 stays within 60
        assert_reconstructs(&pn(idx(n)));
    }
}

#[test]
fn reconstruction_of_table_polynomials() {
    for entry in bundled_table().iter().skip(1).step_by(7) {
        let j = jones_from_pd(&entry.pd, false).unwrap();
        let f = &j - &LaurentPoly::one(Var::T);
        assert_reconstructs(&f);
    }
}

#[test]
fn divisors_are_certified_and_minus_one_excluded() {
    let opts = ClassifyOptions {
        minus_one_spurious: true,
        ..Default::default()
    };
    for n in 1..=20u64 {
        let p = pn(idx(n));
        let report = find_roots(&p).unwrap();
        let classes: Vec<_> = report.roots.iter().map(|r| classify(r.z, &p, &opts)).collect();
        for d in (1..=n).filter(|d| n % d == 0 && *d != 2) {
            assert!(classes.iter().any(|c| c.rou_order == Some(d)), "n = {n}, d = {d}");
        }
        let minus_one = report
            .roots
            .iter()
            .position(|r| (r.z + 1.0).norm() < 1e-6)
            .unwrap_or_else(|| panic!("-1 missing for n = {n}"));
        assert!(classes[minus_one].excluded_minus_one);
        assert_eq!(classes[minus_one].rou_order, None);
        for (r, c) in report.roots.iter().zip(&classes) {
            assert!(r.residual <= 1e-8);
            if c.rou_order.is_some() {
                assert!(c.on_unit_circle);
            }
        }
    }
}

#[test]
fn every_tabulated_knot_solves_at_one_and_cube_roots() {
    let omega = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
    for entry in bundled_table().iter().skip(1) {
        let j = jones_from_pd(&entry.pd, false).unwrap();
        let report = solutions_of_jones_equals_one(&j).unwrap();
        assert!(!report.degenerate_identity);
        assert!(
            report
                .roots
                .iter()
                .any(|r| (r.z - 1.0).norm() < 1e-9 && r.multiplicity >= 2),
            "{}",
            entry.name
        );
        for z in [omega, omega.conj()] {
            let r = report.nearest(z).unwrap();
            assert!((r.z - z).norm() < 1e-6, "{}: {z}", entry.name);
        }
    }
}

#[test]
fn reports_are_bit_identical() {
    for n in [5, 11, 19] {
        let a = find_roots(&pn(idx(n))).unwrap();
        let b = find_roots(&pn(idx(n))).unwrap();
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }
}
