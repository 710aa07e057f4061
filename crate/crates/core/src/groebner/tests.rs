use super::*;
use crate::arith::{parse_poly, MonomialOrder, PositionRule};

fn ring(p: u64, vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(p, vars).unwrap()
}

fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Submodule {
    Submodule::ideal(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect()).unwrap()
}

fn polys(gb: &GroebnerBasis) -> Vec<String> {
    gb.elements().iter().map(|v| v.component(0).to_string()).collect()
}

#[test]
fn hand_buchberger_example() {
    let r = ring(3, &["x", "y"]);
    let gb = buchberger(&ideal(&r, &["x^2+y^2", "x*y"])).unwrap();
    let mut got = polys(&gb);
    got.sort();
    assert_eq!(got, vec!["x*y", "x^2 + y^2", "y^3"]);
}

#[test]
fn principal_ideal_is_its_own_basis() {
    let r = ring(7, &["x", "y", "z"]);
    let gb = buchberger(&ideal(&r, &["3*x"])).unwrap();
    assert_eq!(polys(&gb), vec!["x"]);
}

#[test]
fn normal_form_examples() {
    let r = ring(3, &["x", "y"]);
    let p = |s| ModVector::from_poly(parse_poly(s, &r).unwrap());
    let gx = buchberger(&ideal(&r, &["x"])).unwrap();
    assert_eq!(normal_form(&p("y^2"), &gx).unwrap(), p("y^2"));
    let g2 = buchberger(&ideal(&r, &["x*y", "x^2+y^2"])).unwrap();
    assert!(normal_form(&p("x^2*y"), &g2).unwrap().is_zero());
    // inhomogeneous input is reduced part by part
    assert_eq!(normal_form(&p("x^2*y + x + y"), &gx).unwrap(), p("y"));
}

#[test]
fn membership_examples() {
    let r = ring(5, &["x", "y"]);
    let p = |s| ModVector::from_poly(parse_poly(s, &r).unwrap());
    assert!(is_member(&p("x^2*y"), &ideal(&r, &["x*y"])).unwrap());
    assert!(!is_member(&p("y"), &ideal(&r, &["x"])).unwrap());
    let other = ring(7, &["x", "y"]);
    let q = ModVector::from_poly(parse_poly("x", &other).unwrap());
    assert!(is_member(&q, &ideal(&r, &["x"])).is_err());
}

#[test]
fn module_example_in_rank_two() {
    let r = ring(5, &["x", "y"]);
    let p = |s| parse_poly(s, &r).unwrap();
    let tw = vec![0, 0];
    let gens = vec![
        ModVector::new(vec![p("x"), p("0")], tw.clone()).unwrap(),
        ModVector::new(vec![p("0"), p("x")], tw.clone()).unwrap(),
        ModVector::new(vec![p("y"), p("y")], tw.clone()).unwrap(),
    ];
    let u = Submodule::new(&r, tw.clone(), gens).unwrap();
    let gb = buchberger(&u).unwrap();
    // the only S-vector, y(x,0) - x(y,y) = (0,-xy), reduces to zero by (0,x)
    assert_eq!(gb.len(), 3);
    let in_u = ModVector::new(vec![p("x*y"), p("x*y")], tw.clone()).unwrap();
    let not_in_u = ModVector::new(vec![p("y"), p("0")], tw.clone()).unwrap();
    assert!(is_member(&in_u, &u).unwrap());
    assert!(!is_member(&not_in_u, &u).unwrap());
    let y2 = ModVector::new(vec![p("y^2"), p("0")], tw.clone()).unwrap();
    assert!(!is_member(&y2, &u).unwrap());
    let both = ModVector::new(vec![p("y^2"), p("y^2")], tw.clone()).unwrap();
    assert!(is_member(&both, &u).unwrap());
}

#[test]
fn inhomogeneous_generators_rejected() {
    let r = ring(5, &["x", "y"]);
    let g = parse_poly("x^2 + y", &r).unwrap();
    assert!(matches!(Submodule::ideal(&r, vec![g]), Err(Error::Inhomogeneous(_))));
    let tw = vec![0, 1];
    let v = ModVector::new(vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()], tw.clone()).unwrap();
    assert!(!v.is_homogeneous());
    let w = ModVector::new(vec![parse_poly("x^2", &r).unwrap(), parse_poly("y", &r).unwrap()], tw.clone()).unwrap();
    assert_eq!(w.degree(), Some(2));
}

#[test]
fn budget_is_enforced() {
    let r = ring(7, &["x", "y", "z"]);
    let u = ideal(&r, &["x^3+y^3+z^3", "x^2*y + z^3", "x*y*z"]);
    let tight = Budget { max_degree: Some(3), max_pairs: None };
    assert!(matches!(buchberger_with(&u, &tight), Err(Error::BudgetExceeded(_))));
    let few = Budget { max_degree: None, max_pairs: Some(1) };
    assert!(matches!(buchberger_with(&u, &few), Err(Error::BudgetExceeded(_))));
    assert!(buchberger(&u).is_ok());
}

#[test]
fn orders_agree_on_membership() {
    let r = ring(5, &["x", "y", "z"]);
    let gens = ["x^2 - y*z", "x*y - z^2", "y^3 + x*z^2"];
    let base = ideal(&r, &gens);
    let probe = ModVector::from_poly(parse_poly("x^3*y - x*y^2*z + 2*(x*y - z^2)*z^2", &r).unwrap());
    for mo in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::GradedLex] {
        for pos in [PositionRule::TermOverPosition, PositionRule::PositionOverTerm] {
            let u = base.clone().with_order(ModuleOrder::new(mo, pos));
            assert!(is_member(&probe, &u).unwrap(), "{mo:?} {pos:?}");
        }
    }
}

#[test]
fn quotient_relations_are_adjoined() {
    let r = ring(7, &["x", "y", "z"]);
    let f = parse_poly("x^3+y^3+z^3", &r).unwrap();
    let u = Submodule::ideal_over_quotient(&r, vec![parse_poly("z", &r).unwrap()], Arc::new(vec![f])).unwrap();
    let probe = ModVector::from_poly(parse_poly("x^3 + y^3", &r).unwrap());
    assert!(u.contains(&probe).unwrap());
    assert_eq!(u.all_generators().len(), 2);
}
