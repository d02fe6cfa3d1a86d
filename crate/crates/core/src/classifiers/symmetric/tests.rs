use super::*;
use crate::criteria::{test_cwl_gin, test_cwl_linear_part, CriteriaConfig, Decision};
use crate::polynomial::{Polynomial, Ring};
use crate::resolution::betti_numbers;
use proptest::prelude::*;

/// Symmetric matrix with doubled degrees `d2`.
fn sym(r: Ring, d2: &[i64], e: Vec<Vec<Polynomial>>) -> HomogeneousMatrix {
    let k2 = d2[0].rem_euclid(2);
    let g: Vec<i64> = d2.iter().map(|d| (k2 - d) / 2).collect();
    let f: Vec<i64> = d2.iter().map(|d| (k2 + d) / 2).collect();
    HomogeneousMatrix::new(r, g, f, e).unwrap()
}

fn pow(p: &Polynomial, k: u32) -> Polynomial {
    (0..k).fold(p.ring().one(), |a, _| &a * p)
}

/// `[[0, x1, x2], [x1, x3², x4²], [x2, x4², x5²]]`, d = (0, 1, 1).
fn block_instance() -> HomogeneousMatrix {
    let r = Ring::new(31013, 5).unwrap();
    let x = |i| r.var(i);
    let q = |i| pow(&x(i), 2);
    sym(r, &[0, 2, 2], vec![vec![r.zero(), x(0), x(1)], vec![x(0), q(2), q(3)], vec![x(1), q(3), q(4)]])
}

fn linear_instance() -> HomogeneousMatrix {
    let r = Ring::new(31013, 6).unwrap();
    let x = |i| r.var(i);
    sym(r, &[1, 1, 1], vec![vec![x(0), x(1), x(2)], vec![x(1), x(3), x(4)], vec![x(2), x(4), x(5)]])
}

/// d = (1/2, 1/2, 3/2): not componentwise linear.
fn mixed_instance() -> HomogeneousMatrix {
    let r = Ring::new(31013, 6).unwrap();
    let x = |i| r.var(i);
    sym(r, &[1, 1, 3], vec![
        vec![x(0), x(1), pow(&x(2), 2)],
        vec![x(1), x(3), pow(&x(4), 2)],
        vec![pow(&x(2), 2), pow(&x(4), 2), pow(&x(5), 3)],
    ])
}

/// d = (-1/2, 1/2, 1, 1) doubled (-2, 2, 4, 4)... with a zero corner.
fn even_instance() -> HomogeneousMatrix {
    let r = Ring::new(31013, 8).unwrap();
    let x = |i| r.var(i);
    let z = r.zero();
    sym(r, &[-2, 2, 4, 4], vec![
        vec![z.clone(), z, x(0), x(1)],
        vec![r.zero(), pow(&x(2), 2), pow(&x(3), 3), pow(&x(4), 3)],
        vec![x(0), pow(&x(3), 3), pow(&x(5), 4), pow(&x(6), 4)],
        vec![x(1), pow(&x(4), 3), pow(&x(6), 4), pow(&x(7), 4)],
    ])
}

fn cfg() -> CriteriaConfig {
    CriteriaConfig { seed: 5, ..Default::default() }
}

#[test]
fn input_data() {
    let i = SymmetricInput::new(vec![2, 0, 2]).unwrap();
    assert_eq!(i.doubled(), &[0, 2, 2]);
    assert_eq!((i.m(), i.s(), i.t(), i.e(), i.big_d()), (3, 1, 2, 2, 4));
    assert_eq!(i.degree_matrix().rows(), &[vec![0, 1, 1], vec![1, 2, 2], vec![1, 2, 2]]);
    assert!(matches!(SymmetricInput::new(vec![1, 2]), Err(Error::DegreeData(_))));
    assert!(SymmetricInput::new(vec![1]).is_err());
    let from = SymmetricInput::from_matrix(&block_instance()).unwrap();
    assert_eq!(from.doubled(), &[0, 2, 2]);
    assert!(SymmetricInput::from_matrix(&block_instance().linearize()).is_ok());
}

#[test]
fn degree_classification() {
    let yes = |d: Vec<i64>| classify_symmetric(&SymmetricInput::new(d).unwrap()).unwrap().decision == Decision::Yes;
    assert!(yes(vec![0, 2, 2]));
    assert!(yes(vec![-2, -2, 4, 4, 4]));
    for m in 2..=6 {
        assert!(yes(vec![1; m]));
    }
    assert!(!yes(vec![0, 0, 2, 2]));
    assert!(!yes(vec![1, 1, 3]));
    assert!(!yes(vec![0, 0, 2]));
    assert!(!yes(vec![-2, 2, 4, 4]));
    // d_1 + d_m = 1 fails
    assert!(!yes(vec![0, 4, 4]));
    let v = classify_symmetric(&SymmetricInput::new(vec![0, 2, 2]).unwrap()).unwrap();
    assert_eq!(v.characteristic, None);
}

#[test]
fn concrete_instances_agree() {
    for (a, expected) in [
        (block_instance(), Decision::Yes),
        (linear_instance(), Decision::Yes),
        (mixed_instance(), Decision::No),
    ] {
        let by_degrees = classify_symmetric(&SymmetricInput::from_matrix(&a).unwrap()).unwrap().decision;
        let by_height = test_cwl_symmetric(&a).unwrap().decision;
        let ideal = a.minors_ideal(2);
        assert_eq!(by_degrees, expected, "{a}");
        assert_eq!(by_height, expected, "{a}");
        assert_eq!(test_cwl_gin(&ideal, &cfg()).unwrap().decision, expected, "{a}");
        assert_eq!(test_cwl_linear_part(&ideal, &cfg()).unwrap().decision, expected, "{a}");
        // Józefiak's complex is the minimal resolution
        let input = SymmetricInput::from_matrix(&a).unwrap();
        assert_eq!(betti_numbers(&ideal).unwrap(), jozefiak_table(&input), "{a}");
    }
}

#[test]
fn block_instance_linear_part() {
    let a = block_instance();
    // I_2(A^lin) is the square of the ideal (x1, x2)
    let lin = a.linearize().minors_ideal(2);
    assert_eq!(lin.as_monomial_ideal().unwrap(), MonomialIdeal::power_of_first_variables(5, 2, 2));
    assert_eq!(lin.height(), 2);
    let b = betti_numbers(&a.minors_ideal(2)).unwrap();
    assert_eq!(b, jozefiak_betti(3, 2).unwrap());
    assert_eq!(b.to_ideal().strands().len(), 3);
}

#[test]
fn even_size_with_separated_blocks() {
    let a = even_instance();
    let input = SymmetricInput::from_matrix(&a).unwrap();
    assert_eq!((input.s(), input.t()), (1, 3));
    assert!(a.linearize().minors_ideal(3).height() <= 1);
    assert_eq!(test_cwl_symmetric(&a).unwrap().decision, Decision::No);
    assert_eq!(classify_symmetric(&input).unwrap().decision, Decision::No);
}

#[test]
fn height_is_verified() {
    let r = Ring::new(31013, 3).unwrap();
    let x = |i| r.var(i);
    let a = sym(r, &[1, 1, 1], vec![vec![x(0), x(1), x(2)], vec![x(1), x(0), x(2)], vec![x(2), x(2), x(0)]]);
    assert!(matches!(test_cwl_symmetric(&a), Err(Error::HeightMismatch { expected: 3, .. })));
}

#[test]
fn jozefiak_ranks() {
    for m in [3usize, 5, 7] {
        let ek = MonomialIdeal::power_of_first_variables(3, 3, (m - 1) as u32).ek_betti().unwrap();
        assert_eq!(jozefiak_betti(m, 1).unwrap(), ek);
    }
    let t = jozefiak_betti(5, 2).unwrap().to_ideal();
    assert_eq!((t.get(0, 4), t.get(0, 5), t.get(0, 6)), (6, 6, 3));
    assert_eq!(jozefiak_betti(3, 1).unwrap().totals(), vec![1, 6, 8, 3]);
    assert!(jozefiak_betti(4, 2).is_err());
    assert!(jozefiak_betti(3, 0).is_err());
    // the rank formula agrees with the shift table of the block pattern
    for m in (3..=11).step_by(2) {
        for e in 1..=5i64 {
            let s = (m - 1) / 2;
            let mut d = vec![2 - e; s];
            d.extend(vec![e; s + 1]);
            let table = jozefiak_table(&SymmetricInput::new(d).unwrap());
            let strands = table.to_ideal().strands().len();
            assert_eq!(table, jozefiak_betti(m, e).unwrap(), "m={m} e={e}");
            assert_eq!(strands, if e == 1 { 1 } else { 3 });
        }
    }
}

#[test]
fn tr_examples() {
    assert_eq!(compute_tr(1), (-1, 0));
    assert_eq!(compute_tr(2), (-1, 1));
    assert_eq!(compute_tr(5), (0, 0));
}

fn window(s: i64, t: i64) -> i64 {
    (2 * s - t..=2 * s).sum()
}

#[test]
fn tr_identity_bounds_and_uniqueness() {
    for s in 1..=100u64 {
        let (t, r) = compute_tr(s);
        let si = s as i64;
        assert_eq!(r + window(si, t), binomial(si, 2) as i64);
        assert!(t >= -1 && r >= 0 && r <= 2 * si - 2 - t, "s={s}");
        if s >= 2 {
            assert!(t <= si - 3, "s={s}");
        }
        if s <= 30 {
            let sols: Vec<(i64, i64)> = (-1..=2 * si)
                .flat_map(|t| (0..=(2 * si - 2 - t).max(-1)).map(move |r| (t, r)))
                .filter(|&(t, r)| r + window(si, t) == binomial(si, 2) as i64)
                .collect();
            assert_eq!(sols, vec![(t, r)], "s={s}");
        }
    }
}

#[test]
fn companion_linear_case_verifies() {
    for m in (3..=15).step_by(2) {
        let c = symmetric_companion(m, 1).unwrap();
        assert_eq!(c.check, CompanionCheck::Verified, "m={m}");
        assert!(c.dropped_terms.is_empty());
    }
}

#[test]
fn companion_formula_outcomes_are_reported() {
    // s = 5: t = r = 0, so the second summand is zero by convention
    let c = symmetric_companion(11, 2).unwrap();
    assert_eq!((c.t, c.r), (0, 0));
    assert_eq!(c.dropped_terms, vec![2]);
    match &c.check {
        CompanionCheck::Mismatch { expected, found } => {
            assert_eq!(expected, &jozefiak_betti(11, 2).unwrap());
            assert_eq!(found, &c.ideal.ek_betti().unwrap());
        }
        other => panic!("unexpected outcome {other:?}"),
    }
    // s = 2: the fourth summand carries x3^(e+t-2) = x3^(-1)
    let c = symmetric_companion(5, 2).unwrap();
    assert_eq!((c.t, c.r), (-1, 1));
    assert_eq!(c.dropped_terms, vec![4]);
    assert_ne!(c.check, CompanionCheck::Verified);
    // the outcome is always the honest comparison
    for m in (3..=11).step_by(2) {
        for e in 2..=4 {
            let c = symmetric_companion(m, e).unwrap();
            let honest = c.ideal.is_strongly_stable() && c.ideal.ek_betti().unwrap() == jozefiak_betti(m, e).unwrap();
            assert_eq!(c.check == CompanionCheck::Verified, honest);
        }
    }
    assert!(symmetric_companion(4, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// The Hilbert numerator of a height three quotient vanishes to order
    /// three at 1, so the moments of orders 0, 1, 2 of the table vanish.
    #[test]
    fn jozefiak_tables_have_height_three_numerators(
        parity in 0i64..2,
        raw in proptest::collection::vec(-2i64..4, 2..7),
    ) {
        let d: Vec<i64> = raw.iter().map(|x| 2 * x + parity).collect();
        let t = jozefiak_table(&SymmetricInput::new(d).unwrap());
        for k in 0..3u32 {
            let moment: i128 = t
                .entries()
                .map(|(i, j, b)| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    sign * b as i128 * (j as i128).pow(k)
                })
                .sum();
            prop_assert_eq!(moment, 0);
        }
    }
}
