mod common;

use std::sync::Arc;

use ghk_core::arith::{ModuleOrder, MonomialOrder, Poly, PolyRing, PositionRule};
use ghk_core::frobmod::{ghk_value, presentation_of_quotient};
use ghk_core::groebner::{ModVector, Submodule};
use ghk_core::idealops::{
    bracket_power, colon, hilbert_series, intersect, reflexive_hull, saturate, saturate_irrelevant, RingSpec,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{ideal_dim, in_ideal, monomials, quotient_dim, random_form};

const VARS: [&str; 3] = ["x", "y", "z"];

fn ring(p: u64, n: usize) -> Arc<PolyRing> {
    PolyRing::new(p, &VARS[..n]).unwrap()
}

fn random_gens(r: &Arc<PolyRing>, count: usize, max_deg: u32, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_form(r, d, rng.gen_range(1..4), rng)
        })
        .filter(|f| !f.is_zero())
        .collect()
}

fn to_ideal(r: &Arc<PolyRing>, gens: &[Poly]) -> Submodule {
    Submodule::ideal(r, gens.to_vec()).unwrap()
}

fn params() -> impl Strategy<Value = (u64, usize, u64)> {
    (prop::sample::select(vec![2u64, 3, 5, 7]), 2usize..=3, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn membership_matches_linear_algebra((p, n, seed) in params()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring(p, n);
        let gens = random_gens(&r, 3, 3, &mut rng);
        let i = to_ideal(&r, &gens);
        for _ in 0..4 {
            let d = rng.gen_range(1..=4);
            let mut f = random_form(&r, d, 3, &mut rng);
            if rng.gen_bool(0.5) {
                // force membership sometimes
                for g in &gens {
                    if let Some(dg) = g.degree() {
                        if dg <= d {
                            f = &random_form(&r, d - dg, 2, &mut rng) * g;
                        }
                    }
                }
            }
            let expected = in_ideal(&f, &gens, p, n);
            prop_assert_eq!(i.contains(&ModVector::from_poly(f.clone())).unwrap(), expected, "{}", f);
        }
    }

    #[test]
    fn hilbert_function_matches_linear_algebra((p, n, seed) in params()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring(p, n);
        let gens = random_gens(&r, 3, 3, &mut rng);
        let hs = hilbert_series(&to_ideal(&r, &gens)).unwrap();
        for d in 0..=7 {
            prop_assert_eq!(hs.coefficient(d as i64), quotient_dim(&gens, p, n, d) as i128, "degree {}", d);
        }
    }

    #[test]
    fn hilbert_function_in_quotient_ring(p in prop::sample::select(vec![5u64, 7]), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = RingSpec::new(p, &VARS, &["x^3+y^3+z^3"]).unwrap();
        let r = spec.ring().clone();
        let gens = random_gens(&r, 2, 3, &mut rng);
        let hs = hilbert_series(&spec.ideal(gens.clone()).unwrap()).unwrap();
        let mut all = gens;
        all.push(spec.relations()[0].clone());
        for d in 0..=7 {
            prop_assert_eq!(hs.coefficient(d as i64), quotient_dim(&all, p, 3, d) as i128);
        }
    }

    #[test]
    fn hilbert_series_ignores_the_order((p, n, seed) in params()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring(p, n);
        let i = to_ideal(&r, &random_gens(&r, 3, 3, &mut rng));
        let base = hilbert_series(&i).unwrap();
        let lex = i.clone().with_order(ModuleOrder::new(MonomialOrder::Lex, PositionRule::TermOverPosition));
        prop_assert_eq!(hilbert_series(&lex).unwrap(), base);
    }

    #[test]
    fn intersection_dimensions((p, n, seed) in params()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring(p, n);
        let a = random_gens(&r, 2, 2, &mut rng);
        let b = random_gens(&r, 2, 2, &mut rng);
        let meet = intersect(&to_ideal(&r, &a), &to_ideal(&r, &b)).unwrap();
        let meet_gens = meet.ideal_generators();
        let both: Vec<Poly> = a.iter().chain(&b).cloned().collect();
        for d in 0..=5 {
            let dim = ideal_dim(&a, p, n, d) + ideal_dim(&b, p, n, d) - ideal_dim(&both, p, n, d);
            prop_assert_eq!(ideal_dim(&meet_gens, p, n, d), dim, "degree {}", d);
        }
    }

    #[test]
    fn single_colon_dimensions((p, n, seed) in params()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring(p, n);
        let u = random_gens(&r, 3, 3, &mut rng);
        let g = random_gens(&r, 1, 2, &mut rng);
        prop_assume!(!g.is_empty());
        let a = g[0].degree().unwrap();
        let c = colon(&to_ideal(&r, &u), &to_ideal(&r, &g)).unwrap().ideal_generators();
        let ug: Vec<Poly> = u.iter().chain(&g).cloned().collect();
        for d in 0..=4 {
            // multiplication by g is injective on S_d
            let image = ideal_dim(&ug, p, n, d + a) - ideal_dim(&u, p, n, d + a);
            let expected = monomials(n, d).len() - image;
            prop_assert_eq!(ideal_dim(&c, p, n, d), expected, "degree {}", d);
        }
    }

    #[test]
    fn colon_is_intersection_of_single_colons((p, n, seed) in params()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring(p, n);
        let u = to_ideal(&r, &random_gens(&r, 3, 3, &mut rng));
        let g = random_gens(&r, 2, 2, &mut rng);
        prop_assume!(g.len() == 2);
        let whole = colon(&u, &to_ideal(&r, &g)).unwrap();
        let parts = intersect(
            &colon(&u, &to_ideal(&r, &g[..1])).unwrap(),
            &colon(&u, &to_ideal(&r, &g[1..])).unwrap(),
        ).unwrap();
        prop_assert!(whole.same_submodule(&parts).unwrap());
    }

    #[test]
    fn fast_saturation_is_the_iterated_colon((p, n, seed) in params()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring(p, n);
        let mut gens = random_gens(&r, 2, 2, &mut rng);
        // an m-primary factor guarantees a nontrivial saturation
        let m_pow: Vec<Poly> = (0..n).map(|i| r.var(i).pow(2).unwrap()).collect();
        if let Some(h) = gens.pop() {
            gens.extend(m_pow.iter().map(|v| v * &h));
        }
        let u = to_ideal(&r, &gens);
        let m = to_ideal(&r, &(0..n).map(|i| r.var(i)).collect::<Vec<_>>());
        let slow = saturate(&u, &m).unwrap();
        let fast = saturate_irrelevant(&u).unwrap();
        prop_assert!(slow.same_submodule(&fast).unwrap());
        prop_assert!(u.is_contained_in(&fast).unwrap());
        prop_assert!(saturate_irrelevant(&fast).unwrap().same_submodule(&fast).unwrap());
    }

    #[test]
    fn bracket_powers_compose(p in prop::sample::select(vec![2u64, 3]), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring(p, 3);
        let i = to_ideal(&r, &random_gens(&r, 2, 2, &mut rng));
        let twice = bracket_power(&bracket_power(&i, p).unwrap(), p).unwrap();
        prop_assert!(twice.same_submodule(&bracket_power(&i, p * p).unwrap()).unwrap());
    }
}

fn fermat7() -> Arc<RingSpec> {
    Arc::new(RingSpec::new(7, &VARS, &["x^3+y^3+z^3"]).unwrap())
}

/// F_7-rational points of the Fermat cubic and two linear forms cutting out each.
fn rational_point_ideals(spec: &RingSpec) -> Vec<Vec<Poly>> {
    let mut out = Vec::new();
    for a in 0..7u64 {
        for b in 0..7u64 {
            for c in 0..7u64 {
                let v = [a, b, c];
                // normalize: first nonzero coordinate is 1
                let Some(k) = v.iter().position(|&t| t != 0) else { continue };
                if v[k] != 1 || (a.pow(3) + b.pow(3) + c.pow(3)) % 7 != 0 {
                    continue;
                }
                // kernel of the row (a, b, c)
                let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
                let forms = others
                    .iter()
                    .map(|&i| {
                        // x_i - v_i x_k vanishes at the point
                        let s = format!("{} - {}*{}", VARS[i], v[i], VARS[k]);
                        spec.parse(&s).unwrap()
                    })
                    .collect();
                out.push(forms);
            }
        }
    }
    out
}

#[test]
fn the_cubic_has_rational_points() {
    let pts = rational_point_ideals(&fermat7());
    assert!(pts.len() >= 6, "{}", pts.len());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn reflexive_hull_idempotent_and_choice_free(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = fermat7();
        let pts = rational_point_ideals(&spec);
        let p1 = &pts[rng.gen_range(0..pts.len())];
        let p2 = &pts[rng.gen_range(0..pts.len())];
        let gens: Vec<Poly> = p1.iter().flat_map(|f| p2.iter().map(move |g| f * g)).collect();
        let i = spec.ideal(gens.clone()).unwrap();
        let h1 = reflexive_hull(&i, Some(&gens[0])).unwrap();
        let h2 = reflexive_hull(&i, Some(&gens[gens.len() - 1])).unwrap();
        prop_assert!(h1.same_submodule(&h2).unwrap());
        prop_assert!(i.is_contained_in(&h1).unwrap());
        prop_assert!(reflexive_hull(&h1, None).unwrap().same_submodule(&h1).unwrap());
    }

    #[test]
    fn multiplier_and_presentation_invariance(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = fermat7();
        let pts = rational_point_ideals(&spec);
        let pt = pts[rng.gen_range(0..pts.len())].clone();
        let f = random_form(spec.ring(), rng.gen_range(1..=2), 2, &mut rng);
        prop_assume!(!f.is_zero());
        let base = presentation_of_quotient(&spec, &spec.ideal(pt.clone()).unwrap()).unwrap();
        let scaled: Vec<Poly> = pt.iter().map(|g| &f * g).collect();
        let scaled = presentation_of_quotient(&spec, &spec.ideal(scaled).unwrap()).unwrap();
        let extra = &(&pt[0] * &spec.ring().var(0)) + &(&pt[1] * &spec.ring().var(2));
        let redundant = presentation_of_quotient(&spec, &spec.ideal(vec![pt[0].clone(), pt[1].clone(), extra]).unwrap()).unwrap();
        let l = ghk_value(&base, 1).unwrap();
        prop_assert_eq!(ghk_value(&scaled, 1).unwrap(), l);
        prop_assert_eq!(ghk_value(&redundant, 1).unwrap(), l);
    }

    #[test]
    fn principal_ideals_have_no_finite_part(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = fermat7();
        let h = random_form(spec.ring(), rng.gen_range(1..=3), 3, &mut rng);
        prop_assume!(!h.is_zero());
        let p = presentation_of_quotient(&spec, &spec.ideal(vec![h]).unwrap()).unwrap();
        prop_assert_eq!(ghk_value(&p, 1).unwrap(), 0);
    }
}
