use proptest::prelude::*;

use super::*;
use crate::parse::parse_polynomial;

fn bi() -> RingSpec {
    RingSpec::with_block_sizes(32003, &[2, 2]).unwrap()
}

/// Same variables, y-block declared first (y0 > y1 > x0 > x1).
fn bi_y_first() -> RingSpec {
    RingSpec::from_names(32003, &[&["y0", "y1"], &["x0", "x1"]]).unwrap()
}

fn xy() -> RingSpec {
    RingSpec::from_names(32003, &[&["x", "y"]]).unwrap()
}

fn p(ring: &RingSpec, s: &str) -> Polynomial {
    parse_polynomial(s, ring).unwrap()
}

fn ideal(ring: &RingSpec, gens: &[&str]) -> Ideal {
    Ideal::parse(ring, gens).unwrap()
}

fn rendered(basis: &GroebnerBasis, ring: &RingSpec) -> Vec<String> {
    let names = ring.var_names();
    basis.elements().iter().map(|g| g.render(&names)).collect()
}

#[test]
fn single_generator_is_its_own_basis() {
    let r = bi();
    let g = ideal(&r, &["3*x0*y1 - 3*x1*y0"]).groebner().unwrap();
    assert_eq!(rendered(&g, &r), vec!["x1*y0 - x0*y1"]);
    assert!(g.verify().unwrap());
}

#[test]
fn one_s_pair_adds_a_cubic() {
    // with x-block first, x1*y0 leads the diagonal form and the S-pair with
    // x0*y0 leaves -x0^2*y1
    let r = bi();
    let g = ideal(&r, &["x0*y1 - x1*y0", "x0*y0"]).groebner().unwrap();
    assert_eq!(rendered(&g, &r), vec!["x1*y0 - x0*y1", "x0*y0", "x0^2*y1"]);
    assert!(g.verify().unwrap());

    // with y-block first, x0*y1 leads and the new element is x1*y0^2
    let r = bi_y_first();
    let g = ideal(&r, &["x0*y1 - x1*y0", "x0*y0"]).groebner().unwrap();
    let names = r.var_names();
    let elems: Vec<String> = g.elements().iter().map(|e| e.render(&names)).collect();
    assert!(elems.contains(&"y0^2*x1".to_string()), "{elems:?}");
    assert_eq!(g.len(), 3);
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let r = xy();
    let g = ideal(&r, &["x*y", "x^2"]).groebner().unwrap();
    assert_eq!(rendered(&g, &r), vec!["x*y", "x^2"]);
}

#[test]
fn normal_forms() {
    let r = bi_y_first();
    let g = ideal(&r, &["x0*y1 - x1*y0"]).groebner().unwrap();
    assert!(normal_form(&Polynomial::zero_in(&r), &g).is_zero());
    assert_eq!(normal_form(&p(&r, "x0*y1"), &g), p(&r, "x1*y0"));
    assert!(normal_form(&p(&r, "x0*y1 - x1*y0"), &g).is_zero());

    let r = bi();
    let g = ideal(&r, &["x0*y1 - x1*y0"]).groebner().unwrap();
    assert_eq!(normal_form(&p(&r, "x1*y0"), &g), p(&r, "x0*y1"));
}

#[test]
fn elimination_examples() {
    let r = RingSpec::from_names(32003, &[&["t"], &["x"], &["y"]]).unwrap();
    let e = elimination_ideal(&ideal(&r, &["y - t*x"]), &[0]).unwrap();
    assert!(e.is_zero());

    let r = RingSpec::from_names(32003, &[&["t"], &["x0", "x1"], &["y0", "y1"]]).unwrap();
    let j = ideal(&r, &["y0 - t*x0", "y1 - t*x1"]);
    let e = elimination_ideal(&j, &[0]).unwrap();
    assert!(e.same_ideal(&ideal(&r, &["x0*y1 - x1*y0"])).unwrap());
    // membership by substitution y_i -> t*x_i
    assert!(elimination_ideal(&j, &[]).unwrap().same_ideal(&j).unwrap());
    assert!(elimination_ideal(&j, &[1]).is_err());
}

#[test]
fn quotient_examples() {
    let r = xy();
    let q = ideal_quotient(&ideal(&r, &["x^2", "x*y"]), &p(&r, "x")).unwrap();
    assert!(q.same_ideal(&ideal(&r, &["x", "y"])).unwrap());
    let q = ideal_quotient(&ideal(&r, &["x"]), &p(&r, "y")).unwrap();
    assert!(q.same_ideal(&ideal(&r, &["x"])).unwrap());
    let q = ideal_quotient(&Ideal::zero(&r), &p(&r, "x + y")).unwrap();
    assert!(q.is_zero());
    assert!(ideal_quotient(&ideal(&r, &["x"]), &Polynomial::zero_in(&r)).is_err());
}

#[test]
fn saturation_examples() {
    let r = xy();
    let m = ideal(&r, &["x", "y"]);
    let s = saturation(&ideal(&r, &["x^2", "x*y"]), &m).unwrap();
    assert!(s.same_ideal(&ideal(&r, &["x"])).unwrap());
    let s = saturation(&ideal(&r, &["x^3", "x^2*y", "y^2"]), &m).unwrap();
    assert!(s.is_unit().unwrap());

    let r = bi();
    let n = ideal_intersection(&Ideal::block_ideal(&r, 0), &Ideal::block_ideal(&r, 1)).unwrap();
    let diag = ideal(&r, &["x0*y1 - x1*y0"]);
    let s = saturation(&diag, &n).unwrap();
    assert!(s.same_ideal(&diag).unwrap());
}

#[test]
fn saturation_by_non_monomial_uses_auxiliary_variable() {
    let r = xy();
    // (x^2*(x+y)) : (x+y)^∞ = (x^2)
    let s = saturation(&ideal(&r, &["x^3 + x^2*y"]), &ideal(&r, &["x + y"])).unwrap();
    assert!(s.same_ideal(&ideal(&r, &["x^2"])).unwrap());
    // inhomogeneous input takes the same route
    let s = saturation(&ideal(&r, &["x*y - x"]), &ideal(&r, &["x"])).unwrap();
    assert!(s.same_ideal(&ideal(&r, &["y - 1"])).unwrap());
}

#[test]
fn intersection_examples() {
    let r = xy();
    let i = ideal_intersection(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
    assert!(i.same_ideal(&ideal(&r, &["x*y"])).unwrap());
    let j = ideal(&r, &["x^2 - y^2", "x*y"]);
    let i = ideal_intersection(&j, &Ideal::unit(&r)).unwrap();
    assert!(i.same_ideal(&j).unwrap());
    let i = ideal_intersection(&j, &j).unwrap();
    assert!(i.same_ideal(&j).unwrap());
}

#[test]
fn irrelevant_ideal_of_p1_p1() {
    let r = bi();
    let n = ideal_intersection(&Ideal::block_ideal(&r, 0), &Ideal::block_ideal(&r, 1)).unwrap();
    let expect = ideal(&r, &["x0*y0", "x0*y1", "x1*y0", "x1*y1"]);
    assert!(n.same_ideal(&expect).unwrap());
}

#[test]
fn budget_is_enforced() {
    let r = RingSpec::with_block_sizes(32003, &[4]).unwrap();
    let j = ideal(
        &r,
        &[
            "x0^2 - x1*x2",
            "x1^2 - x2*x3",
            "x2^2 - x0*x3",
            "x3^2 - x0*x1",
        ],
    )
    .with_pair_budget(2);
    match j.groebner() {
        Err(Error::BudgetExceeded { budget, pairs, .. }) => {
            assert_eq!(budget, 2);
            assert_eq!(pairs, 2);
        }
        other => panic!("expected budget error, got {other:?}"),
    }
}

#[test]
fn saturation_contains_and_equality_criterion() {
    let r = xy();
    let m = ideal(&r, &["x", "y"]);
    for gens in [&["x^2", "x*y"][..], &["x*y"][..], &["x^3", "y^2"][..]] {
        let j = ideal(&r, gens);
        let s = saturation(&j, &m).unwrap();
        assert!(j.is_contained_in(&s).unwrap());
        // J : K is the intersection of the colons by the generators of K
        let colon = m
            .generators()
            .iter()
            .map(|k| ideal_quotient(&j, k).unwrap())
            .reduce(|a, b| ideal_intersection(&a, &b).unwrap())
            .unwrap();
        let colon_stable = colon.same_ideal(&j).unwrap();
        assert_eq!(s.same_ideal(&j).unwrap(), colon_stable, "{gens:?}");
    }
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = Vec<(u32, Vec<u32>)>> {
    prop::collection::vec((1u32..32003, prop::collection::vec(0u32..3, nvars)), 1..4)
}

fn build(ring: &RingSpec, terms: &[(u32, Vec<u32>)]) -> Polynomial {
    let t = terms
        .iter()
        .map(|(c, e)| (*c, crate::monomial::Monomial::from_exponents(e).unwrap()))
        .collect();
    Polynomial::from_terms(ring.field(), ring.nvars(), TermOrder::DegRevLex, t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn basis_independent_of_generator_order(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
        let r = RingSpec::with_block_sizes(32003, &[3]).unwrap();
        let (pa, pb, pc) = (build(&r, &a), build(&r, &b), build(&r, &c));
        let g1 = Ideal::new(&r, vec![pa.clone(), pb.clone(), pc.clone()]).groebner().unwrap();
        let g2 = Ideal::new(&r, vec![pc, pa, pb]).groebner().unwrap();
        prop_assert!(g1.verify().unwrap());
        prop_assert_eq!(g1, g2);
    }

    #[test]
    fn combinations_reduce_to_zero(a in arb_poly(3), b in arb_poly(3), m1 in arb_poly(3), m2 in arb_poly(3), extra in arb_poly(3)) {
        let r = RingSpec::with_block_sizes(32003, &[3]).unwrap();
        let (pa, pb) = (build(&r, &a), build(&r, &b));
        let j = Ideal::new(&r, vec![pa.clone(), pb.clone()]);
        let g = j.groebner().unwrap();
        let comb = &(&pa * &build(&r, &m1)) + &(&pb * &build(&r, &m2));
        prop_assert!(normal_form(&comb, &g).is_zero());
        // a random element is in the ideal exactly when its remainder vanishes
        let e = build(&r, &extra);
        let rem = normal_form(&e, &g);
        prop_assert!(normal_form(&(&e - &rem), &g).is_zero());
    }

    #[test]
    fn saturation_is_idempotent(a in arb_poly(2), b in arb_poly(2)) {
        let r = xy();
        let hom = |t: &Vec<(u32, Vec<u32>)>| {
            // force homogeneity by keeping the terms of the first term's degree
            let d: u32 = t[0].1.iter().sum();
            t.iter().filter(|(_, e)| e.iter().sum::<u32>() == d).cloned().collect::<Vec<_>>()
        };
        let j = Ideal::new(&r, vec![build(&r, &hom(&a)), build(&r, &hom(&b))]);
        let m = ideal(&r, &["x", "y"]);
        let s1 = saturation(&j, &m).unwrap();
        let s2 = saturation(&s1, &m).unwrap();
        prop_assert!(s1.same_ideal(&s2).unwrap());
    }

    #[test]
    fn intersection_membership(a in arb_poly(2), b in arb_poly(2), f in arb_poly(2)) {
        let r = xy();
        let j1 = Ideal::new(&r, vec![build(&r, &a)]);
        let j2 = Ideal::new(&r, vec![build(&r, &b)]);
        let i = ideal_intersection(&j1, &j2).unwrap();
        // f*a*b lies in both, hence in the intersection
        let prod = &(&build(&r, &f) * &build(&r, &a)) * &build(&r, &b);
        prop_assert!(i.contains(&prod).unwrap());
        for g in i.generators() {
            prop_assert!(j1.contains(g).unwrap() && j2.contains(g).unwrap());
        }
    }
}
