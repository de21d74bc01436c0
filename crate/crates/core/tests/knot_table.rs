use std::collections::HashMap;

use jones_one::bracket::{bundled_table, jones_from_pd, special_values};
use jones_one::{LaurentPoly, Var};
use num_bigint::BigInt;

const REFERENCE: &str = include_str!("../data/knots_upto_10_jones.tsv");

fn reference() -> HashMap<String, LaurentPoly> {
    REFERENCE
        .lines()
        .map(|line| {
            let (name, poly) = line.split_once('\t').unwrap();
            (name.to_string(), LaurentPoly::parse_in(poly, Var::T).unwrap())
        })
        .collect()
}

#[test]
fn jones_matches_knotinfo_up_to_mirror() {
    let reference = reference();
    let table = bundled_table();
    assert_eq!(table.len(), 250);
    for entry in &table {
        let j = jones_from_pd(&entry.pd, false).unwrap();
        assert_eq!(j.var(), Var::T, "{}", entry.name);
        let r = &reference[&entry.name];
        assert!(
            &j == r || &j.mirror() == r,
            "{}: got {j}, reference {r}",
            entry.name
        );
    }
}

#[test]
fn classical_special_values() {
    for entry in bundled_table() {
        let j = jones_from_pd(&entry.pd, false).unwrap();
        assert_eq!(j.eval_at_one(), BigInt::from(1), "{}", entry.name);
        let sv = special_values(&entry.pd).unwrap();
        assert!((sv.v1 - 1.0).norm() < 1e-9, "{}", entry.name);
        assert!(sv.dv1.norm() < 1e-9, "{}", entry.name);
        assert!((sv.v_omega - 1.0).norm() < 1e-9, "{}", entry.name);
    }
}

#[test]
fn writhe_is_reversal_invariant_and_mirror_negates() {
    for entry in bundled_table().iter().filter(|e| e.pd.num_crossings() > 0) {
        let w = entry.pd.writhe().unwrap();
        assert_eq!(entry.pd.mirror().writhe().unwrap(), -w, "{}", entry.name);
        let j = jones_from_pd(&entry.pd, false).unwrap();
        assert_eq!(
            jones_from_pd(&entry.pd.mirror(), false).unwrap(),
            j.mirror(),
            "{}",
            entry.name
        );
    }
}
