use jones_one::dtwist::*;
use jones_one::laurent::cyclotomic;
use jones_one::DtwistError;
use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

fn idx(n: u64) -> DoubleTwistIndex {
    DoubleTwistIndex::new(n).unwrap()
}

proptest! {
    #[test]
    fn closed_form_special_values(n in 1u64..300) {
        let j = jones_closed(idx(n));
        prop_assert_eq!(j.eval_at_one(), BigInt::from(1));
        prop_assert_eq!(j.eval_at_minus_one(), BigInt::from(det_at_minus_one(idx(n))));
    }

    #[test]
    fn jones_minus_one_is_pn_over_monomial(n in 1u64..120) {
        // t^{3n+3}(1 + t)(J_n - 1) = P_n
        let j = jones_closed(idx(n));
        let lhs = (&j - &jones_one::LaurentPoly::one(jones_one::Var::T))
            * jones_one::LaurentPoly::parse_in("1 + t", jones_one::Var::T).unwrap();
        prop_assert_eq!(lhs.shift(3 * n as i64 + 3), pn(idx(n)));
    }

    #[test]
    fn cubic_vanishes_on_the_torus(a in 0.0f64..6.3, b in 0.0f64..6.3) {
        let zeta = Complex64::from_polar(1.0, a);
        let x = Complex64::from_polar(1.0, b);
        let (lin, quad) = cubic_factors();
        let lhs = cubic_for_zeta().eval(zeta, x);
        let rhs = lin.eval(zeta, x) * quad.eval(zeta, x);
        prop_assert!((lhs - rhs).norm() < 1e-9);
    }

    #[test]
    fn quadratic_roots_solve_the_quadratic(a in 0.05f64..3.1) {
        let zeta = Complex64::from_polar(1.0, a);
        let (r1, r2) = quadratic_roots(zeta).unwrap();
        let (_, quad) = cubic_factors();
        prop_assert!(quad.eval(zeta, r1).norm() < 1e-9 * (1.0 + r1.norm_sqr()));
        prop_assert!(quad.eval(zeta, r2).norm() < 1e-9 * (1.0 + r2.norm_sqr()));
    }

    #[test]
    fn cyclotomic_divisibility(n in 1u64..40) {
        let p = pn(idx(n));
        for d in (1..=n).filter(|d| n % d == 0) {
            prop_assert!(p.is_divisible_by(&cyclotomic(d)).unwrap());
        }
    }
}

#[test]
fn witnesses_are_orders() {
    for order in 1..=24u64 {
        for zeta in RootOfUnity::primitive(order) {
            if zeta.is_minus_one() {
                assert_eq!(
                    witness_n(zeta),
                    Err(DtwistError::MinusOneExcluded { obstruction: 13 })
                );
                continue;
            }
            let w = witness_n(zeta).unwrap();
            assert_eq!(w.n, order);
            assert!(w.residual < WITNESS_TOLERANCE);
            assert!(w.certified);
        }
    }
}
