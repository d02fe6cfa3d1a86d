use super::*;
use crate::monomial::Monomial;
use crate::monomial_ideal::stable_closure;
use proptest::prelude::*;

fn ring(p: u32, n: usize) -> Ring {
    Ring::new(p, n).unwrap()
}

fn monomial_ideal(r: Ring, rows: &[&[u32]]) -> GradedIdeal {
    GradedIdeal::from_monomial_ideal(r, &MonomialIdeal::from_exponents(r.nvars, rows)).unwrap()
}

fn minors_2x4(p: u32) -> GradedIdeal {
    let r = ring(p, 8);
    let x = |i: usize| r.var(i);
    let mut gens = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            gens.push(&(&x(a) * &x(b + 4)) - &(&x(b) * &x(a + 4)));
        }
    }
    GradedIdeal::new(r, gens).unwrap()
}

fn check(f: &GradedFreeComplex) {
    assert!(f.is_complex());
    assert!(f.is_minimal());
    assert!(f.is_acyclic(&Budget::unlimited()).unwrap());
}

#[test]
fn koszul_shape() {
    for n in 1..=5 {
        let r = ring(31013, n);
        let m = GradedIdeal::from_monomial_ideal(r, &MonomialIdeal::variables(n, 0..n)).unwrap();
        let f = minimal_resolution(&m, MonomialOrder::Degrevlex).unwrap();
        check(&f);
        let totals = f.betti_table().unwrap().totals();
        let expected: Vec<u64> = (0..=n as i64).map(|i| crate::monomial::binomial(n as i64, i)).collect();
        assert_eq!(totals, expected);
        assert_eq!(f.ideal_regularity().unwrap(), 1);
    }
}

#[test]
fn minors_eagon_northcott() {
    let f = minimal_resolution(&minors_2x4(31013), MonomialOrder::Degrevlex).unwrap();
    check(&f);
    let t = f.betti_table().unwrap();
    assert_eq!(t.totals(), vec![1, 6, 8, 3]);
    assert_eq!(t.shifts(1), vec![2; 6]);
    assert_eq!(t.shifts(2), vec![3; 8]);
    assert_eq!(t.shifts(3), vec![4; 3]);
    assert!(t.to_ideal().is_linear(2));
}

#[test]
fn hilbert_burch_example() {
    let r = ring(31013, 2);
    let i = monomial_ideal(r, &[&[2, 0], &[1, 1], &[0, 3]]);
    let f = minimal_resolution(&i, MonomialOrder::Degrevlex).unwrap();
    check(&f);
    let t = f.betti_table().unwrap().to_ideal();
    assert_eq!(t.totals(), vec![3, 2]);
    assert_eq!(t.shifts(0), vec![2, 2, 3]);
    assert_eq!(t.shifts(1), vec![3, 4]);
    assert_eq!(t, MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 3]]).ek_betti().unwrap().to_ideal());
}

#[test]
fn complete_intersection_regularity() {
    for e in 1..=4 {
        let r = ring(31013, 3);
        let i = monomial_ideal(r, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, e]]);
        let f = minimal_resolution(&i, MonomialOrder::Degrevlex).unwrap();
        assert_eq!(f.ideal_regularity().unwrap(), e as i64);
    }
}

#[test]
fn rp2_regularity_over_f3() {
    let r = ring(3, 6);
    let sr = crate::simplicial::SimplicialComplex::real_projective_plane().stanley_reisner();
    let i = GradedIdeal::from_monomial_ideal(r, &sr).unwrap();
    let f = minimal_resolution(&i, MonomialOrder::Degrevlex).unwrap();
    check(&f);
    assert_eq!(f.ideal_regularity().unwrap(), 3);
    assert_eq!(f.betti_table().unwrap().totals(), vec![1, 10, 15, 6]);
    // over F_2 the resolution is longer and not linear
    let r2 = ring(2, 6);
    let i2 = GradedIdeal::from_monomial_ideal(r2, &sr).unwrap();
    let f2 = minimal_resolution(&i2, MonomialOrder::Degrevlex).unwrap();
    check(&f2);
    assert!(f2.ideal_regularity().unwrap() > 3);
}

#[test]
fn linear_part_examples() {
    let r = ring(31013, 2);
    let i = monomial_ideal(r, &[&[2, 0], &[0, 1]]);
    let f = minimal_resolution(&i, MonomialOrder::Degrevlex).unwrap();
    let lin = f.ideal_part().linear_part();
    assert!(lin.is_complex());
    assert_eq!(lin.linear_part(), lin);
    let d = lin.differential(1);
    assert_eq!(d.nrows(), 2);
    assert_eq!(d.ncols(), 1);
    let nonzero: Vec<&Polynomial> = (0..2).map(|k| d.entry(k, 0)).filter(|e| !e.is_zero()).collect();
    assert_eq!(nonzero.len(), 1);
    assert_eq!(nonzero[0].degree(), Some(1));
    let b = Budget::unlimited();
    assert!(lin.is_acyclic(&b).unwrap());
    assert!(lin.is_acyclic_buchsbaum_eisenbud(&b).unwrap());

    let ci = monomial_ideal(r, &[&[2, 0], &[0, 2]]);
    let f = minimal_resolution(&ci, MonomialOrder::Degrevlex).unwrap();
    let lin = f.ideal_part().linear_part();
    assert!(lin.differential(1).is_zero());
    assert!(!lin.is_acyclic(&b).unwrap());
    assert!(!lin.is_acyclic_buchsbaum_eisenbud(&b).unwrap());
    // a resolution is acyclic by both routes
    let full = f.ideal_part();
    assert!(full.is_acyclic(&b).unwrap());
    assert!(full.is_acyclic_buchsbaum_eisenbud(&b).unwrap());
}

#[test]
fn taylor_minimizes_to_minimal_resolution() {
    let r = ring(7, 3);
    let cases: [&[&[u32]]; 4] = [
        &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1]],
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]],
        &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]],
    ];
    for rows in cases {
        let m = MonomialIdeal::from_exponents(3, rows);
        let taylor = taylor_resolution(r, &m).unwrap();
        assert!(taylor.is_complex());
        let b = Budget::unlimited();
        assert!(taylor.is_acyclic(&b).unwrap());
        let small = taylor.minimize();
        assert!(small.is_minimal());
        assert!(small.is_complex());
        assert!(small.is_acyclic(&b).unwrap());
        let engine = minimal_resolution(&GradedIdeal::from_monomial_ideal(r, &m).unwrap(), MonomialOrder::Degrevlex).unwrap();
        assert_eq!(small.betti_table().unwrap(), engine.betti_table().unwrap());
        // the cokernel of the first map is unchanged
        let coker = |c: &GradedFreeComplex| GradedIdeal::new(r, c.differential(1).rows()[0].clone()).unwrap().hilbert_function(6);
        assert_eq!(coker(&taylor), coker(&small));
    }
    let m = MonomialIdeal::from_exponents(3, cases[2]);
    let taylor = taylor_resolution(r, &m).unwrap();
    assert!(!taylor.is_minimal());
    assert!(matches!(taylor.betti_table(), Err(Error::NotMinimal(_))));
}

#[test]
fn betti_invariant_under_coordinate_change() {
    let i = minors_2x4(31013);
    let phi = crate::groebner::RandomCoordinateChange::sample(i.ring().field, 8, 3);
    let j = crate::groebner::apply_coordinate_change(&i, &phi).unwrap();
    assert_eq!(betti_numbers(&i).unwrap(), betti_numbers(&j).unwrap());
    let init = i.initial_ideal(MonomialOrder::Lex);
    let ti = GradedIdeal::from_monomial_ideal(i.ring(), &init).unwrap();
    assert!(betti_numbers(&i).unwrap().dominated_by(&betti_numbers(&ti).unwrap()));
}

#[test]
fn budget_exhaustion_is_an_error() {
    let b = Budget::new(10);
    let r = minimal_resolution_with_budget(&minors_2x4(31013), MonomialOrder::Degrevlex, &b);
    assert!(matches!(r, Err(Error::BudgetExceeded(10))));
}

fn random_forms() -> impl Strategy<Value = GradedIdeal> {
    let r = ring(31013, 3);
    proptest::collection::vec((1u32..=3, proptest::collection::vec(0i64..5, 10)), 1..4).prop_map(move |specs| {
        let gens: Vec<Polynomial> = specs
            .into_iter()
            .map(|(d, coefs)| {
                let ms = crate::monomial::monomials_of_degree(3, d);
                Polynomial::from_terms(r, MonomialOrder::Degrevlex, ms.into_iter().zip(coefs).map(|(m, c)| (c, m)))
            })
            .collect();
        GradedIdeal::new(r, gens).unwrap()
    })
}

fn random_stable() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(0u32..3, n), 1..4)
            .prop_map(move |rows| stable_closure(n, rows.iter().map(|r| Monomial::from_slice(r)).filter(|m| !m.is_one())))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolutions_are_exact_and_minimal(i in random_forms()) {
        prop_assume!(!i.is_zero());
        let f = minimal_resolution(&i, MonomialOrder::Degrevlex).unwrap();
        prop_assert!(f.is_complex());
        prop_assert!(f.is_minimal());
        prop_assert!(f.length() <= 3);
        prop_assert!(f.is_acyclic(&Budget::unlimited()).unwrap());
        prop_assert!(f.linear_part().is_complex());
        // Euler characteristic equals the Hilbert series numerator
        let init = i.initial_ideal(MonomialOrder::Degrevlex);
        prop_assert_eq!(f.betti_table().unwrap().euler_polynomial(), init.hilbert_numerator());
        // semicontinuity against the initial ideal
        let ti = GradedIdeal::from_monomial_ideal(i.ring(), &init).unwrap();
        let bi = betti_numbers(&ti).unwrap();
        prop_assert!(f.betti_table().unwrap().dominated_by(&bi));
        // generator order does not matter
        let mut rev = i.generators().to_vec();
        rev.reverse();
        let j = GradedIdeal::new(i.ring(), rev).unwrap();
        prop_assert_eq!(betti_numbers(&j).unwrap(), f.betti_table().unwrap());
    }

    #[test]
    fn eliahou_kervaire_matches_engine(m in random_stable()) {
        prop_assume!(!m.is_zero());
        let r = ring(31013, m.nvars());
        let i = GradedIdeal::from_monomial_ideal(r, &m).unwrap();
        prop_assert_eq!(betti_numbers(&i).unwrap(), m.ek_betti().unwrap());
    }
}
