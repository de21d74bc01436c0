use jones_one::laurent::cyclotomic;
use jones_one::{LaurentPoly, PolyError, TermOrder, Var};
use num_complex::Complex64;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, prop::collection::vec(-20i64..20, 0..8)).prop_map(|(lo, coeffs)| {
        LaurentPoly::from_terms(
            Var::T,
            coeffs.into_iter().enumerate().map(|(k, c)| (lo + k as i64, c)),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn unit_point() -> impl Strategy<Value = Complex64> {
    (0.5f64..1.5, -3.0f64..3.0).prop_map(|(r, th)| Complex64::from_polar(r, th))
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, LaurentPoly::zero(Var::T));
        prop_assert_eq!(&p * &LaurentPoly::one(Var::T), p.clone());
    }

    #[test]
    fn division_undoes_multiplication(p in poly(), q in nonzero_poly()) {
        let prod = &p * &q;
        prop_assert_eq!(prod.div_exact(&q).unwrap(), p);
    }

    #[test]
    fn evaluation_is_multiplicative(p in poly(), q in poly(), z in unit_point()) {
        let lhs = (&p * &q).eval_complex(z).unwrap();
        let rhs = p.eval_complex(z).unwrap() * q.eval_complex(z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
    }

    #[test]
    fn render_parse_round_trip(p in poly()) {
        prop_assert_eq!(LaurentPoly::parse_in(&p.render(TermOrder::Ascending), Var::T).unwrap(), p.clone());
        prop_assert_eq!(LaurentPoly::parse_in(&p.render(TermOrder::Descending), Var::T).unwrap(), p);
    }

    #[test]
    fn mirror_is_an_involution_and_a_homomorphism(p in poly(), q in poly()) {
        prop_assert_eq!(p.mirror().mirror(), p.clone());
        prop_assert_eq!((&p * &q).mirror(), &p.mirror() * &q.mirror());
    }

    #[test]
    fn variable_change_round_trips(p in poly()) {
        let a = p.change_variable(Var::A).unwrap();
        prop_assert_eq!(a.change_variable(Var::T).unwrap(), p.clone());
        let q = p.change_variable(Var::Q).unwrap();
        prop_assert_eq!(q.change_variable(Var::T).unwrap(), p);
    }

    #[test]
    fn leibniz_rule(p in poly(), q in poly()) {
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn mixing_variables_is_an_error() {
    let t = LaurentPoly::one(Var::T);
    let a = LaurentPoly::one(Var::A);
    assert!(matches!(
        t.checked_add(&a),
        Err(PolyError::VariableMismatch { .. })
    ));
    assert_eq!(
        t.div_exact(&LaurentPoly::zero(Var::T)),
        Err(PolyError::DivisionByZero)
    );
}

#[test]
fn cyclotomic_degrees_are_totients() {
    let phi = |n: u64| (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as i64;
    for d in 1..=120 {
        assert_eq!(cyclotomic(d).max_exp(), Some(phi(d)), "d = {d}");
    }
}
