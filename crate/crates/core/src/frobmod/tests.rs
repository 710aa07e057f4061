use std::sync::Arc;

use super::*;
use crate::idealops::RingSpec;

fn fermat7() -> Arc<RingSpec> {
    Arc::new(RingSpec::new(7, &["x", "y", "z"], &["x^3+y^3+z^3"]).unwrap())
}

fn quotient(r: &Arc<RingSpec>, gens: &[&str]) -> Presentation {
    presentation_of_quotient(r, &r.ideal_from_strs(gens).unwrap()).unwrap()
}

#[test]
fn quotient_presentations() {
    let r = fermat7();
    let p = quotient(&r, &["z", "3*x-y"]);
    assert_eq!(p.row_twists(), &[0]);
    assert_eq!(p.col_twists(), &[1, 1]);
    assert_eq!(p.to_string(), "[z, 3*x - y]");
    let h = quotient(&r, &["x^2+y*z"]);
    assert_eq!(h.col_twists(), &[2]);
    let m = quotient(&r, &["x", "y", "z"]);
    assert_eq!(m.columns().len(), 3);
}

#[test]
fn presentation_rejects_bad_degrees() {
    let r = fermat7();
    let err = Presentation::from_rows(&r, vec![0], vec![2], &[vec!["x"]]).unwrap_err();
    assert!(matches!(err, Error::Inhomogeneous(_)));
    let err = Presentation::from_rows(&r, vec![0], vec![1, 1], &[vec!["x"]]).unwrap_err();
    assert!(matches!(err, Error::Invalid(_)));
}

#[test]
fn pullbacks() {
    let r = fermat7();
    let p = quotient(&r, &["z", "3*x-y"]);
    let p0 = frobenius_pullback(&p, 0).unwrap();
    assert_eq!(p0.to_string(), p.to_string());
    let p1 = frobenius_pullback(&p, 1).unwrap();
    assert_eq!(p1.to_string(), "[z^7, 3*x^7 - y^7]");
    assert_eq!(p1.col_twists(), &[7, 7]);

    let plane = Arc::new(RingSpec::polynomial_ring(3, &["x", "y"]).unwrap());
    let k = frobenius_pullback(&quotient(&plane, &["x", "y"]), 1).unwrap();
    assert_eq!(k.to_string(), "[x^3, y^3]");
}

#[test]
fn principal_ideal_vanishes() {
    let r = fermat7();
    let p = quotient(&r, &["x"]);
    for e in 0..=2 {
        assert_eq!(ghk_value(&p, e), Ok(0));
    }
}

#[test]
fn maximal_ideal_of_the_plane() {
    let plane = Arc::new(RingSpec::polynomial_ring(5, &["x", "y"]).unwrap());
    let p = quotient(&plane, &["x", "y"]);
    for e in 0..=2 {
        let q = 5u64.pow(e);
        assert_eq!(ghk_value(&p, e), Ok(q * q));
    }
}

#[test]
fn classical_values() {
    let plane = Arc::new(RingSpec::polynomial_ring(3, &["x", "y"]).unwrap());
    let i = plane.ideal_from_strs(&["x^2", "y"]).unwrap();
    assert_eq!(hk_value(&i, 1), Ok(18));
    assert_eq!(hk_value(&plane.ideal_from_strs(&["x"]).unwrap(), 1), Err(Error::NotPrimary));

    let r = fermat7();
    let m = r.irrelevant_ideal();
    let box7 = r.ideal_from_strs(&["x^7", "y^7", "z^7"]).unwrap();
    let direct = colength_difference(&box7, &r.unit_ideal()).unwrap();
    assert_eq!(hk_value(&m, 1), Ok(direct));
    assert_eq!(ghk_value(&quotient(&r, &["x", "y", "z"]), 1), Ok(direct));
}

#[test]
fn point_ideal_first_value() {
    let r = fermat7();
    let p = quotient(&r, &["z", "3*x-y"]);
    let l1 = ghk_value(&p, 1).unwrap();
    // the same value through the explicit saturation route
    let image = frobenius_pullback(&p, 1).unwrap().image().unwrap();
    let sat = saturate_irrelevant(&image).unwrap();
    assert_eq!(colength_difference(&image, &sat), Ok(l1));
    assert!(l1 > 0);
}

#[test]
fn direct_sums_add() {
    let r = fermat7();
    let a = quotient(&r, &["z", "3*x-y"]);
    let b = quotient(&r, &["x", "y", "z"]);
    let sum = a.direct_sum(&b).unwrap();
    let doubled = a.direct_sum(&a).unwrap();
    let ta = ghk_table(&a, 1).unwrap();
    let tb = ghk_table(&b, 1).unwrap();
    assert_eq!(ghk_table(&sum, 1).unwrap().length(1), Some(ta.length(1).unwrap() + tb.length(1).unwrap()));
    assert_eq!(ghk_table(&doubled, 1).unwrap().length(1), Some(2 * ta.length(1).unwrap()));
}

#[test]
fn redundant_generator_and_multiplier() {
    let r = fermat7();
    let p = quotient(&r, &["z", "3*x-y"]);
    let redundant = quotient(&r, &["z", "3*x-y", "x*z-3*x^2+x*y"]);
    let scaled = quotient(&r, &["x*z", "3*x^2-x*y"]);
    let l = ghk_value(&p, 1).unwrap();
    assert_eq!(ghk_value(&redundant, 1), Ok(l));
    assert_eq!(ghk_value(&scaled, 1), Ok(l));
}

#[test]
fn wrong_dimension_is_rejected() {
    let space = Arc::new(RingSpec::polynomial_ring(5, &["x", "y", "z"]).unwrap());
    let p = quotient(&space, &["x"]);
    assert_eq!(ghk_value(&p, 1), Err(Error::WrongDimension(3)));
}

#[test]
fn budgets_mark_rows_absent() {
    let r = fermat7();
    let p = quotient(&r, &["z", "3*x-y"]);
    let budget = Budget {
        max_degree: Some(20),
        max_pairs: None,
    };
    let t = ghk_table_with(&p, 0..=2, &budget).unwrap();
    assert_eq!(t.rows.iter().map(|r| r.e).collect::<Vec<_>>(), vec![0, 1]);
    assert_eq!(t.absent.len(), 1);
    assert_eq!(t.absent[0].e, 2);
    assert_eq!(t.to_csv().lines().next(), Some("e,q,length"));
}
