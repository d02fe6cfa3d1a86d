//! Gorenstein ideals: componentwise linear exactly when they are complete
//! intersections with at most one nonlinear minimal generator.

use crate::criteria::{CwlVerdict, Method};
use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;
use crate::monomial::{Monomial, MAX_VARS};
use crate::monomial_ideal::MonomialIdeal;

/// Gorensteinness is not checked; the caller vouches for it with
/// `assume_gorenstein`.
pub fn classify_gorenstein(ideal: &GradedIdeal, assume_gorenstein: bool) -> Result<CwlVerdict> {
    if !assume_gorenstein {
        return Err(Error::InvalidArgument(
            "the Gorenstein classifier needs the caller to assert that the ideal is Gorenstein".into(),
        ));
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.minimal_generators();
    let beta0 = gens.len();
    let height = ideal.height();
    let linear = gens.iter().filter(|g| g.degree() == Some(1)).count();
    let yes = beta0 == height && linear + 1 >= beta0;
    let reason = format!("{beta0} minimal generators, {linear} linear, height {height}");
    Ok(CwlVerdict::classifier(
        Method::Gorenstein,
        yes,
        reason,
        Some(ideal.ring().characteristic()),
    ))
}

/// `(x_1, ..., x_{c-1}, x_c^e)` in `c` variables.
pub fn gorenstein_companion(c: usize, e: u32) -> Result<MonomialIdeal> {
    if c == 0 || c > MAX_VARS || e == 0 {
        return Err(Error::InvalidArgument(format!("need 1 <= c <= {MAX_VARS} and e >= 1, got c={c}, e={e}")));
    }
    let mut gens: Vec<Monomial> = (0..c - 1).map(|i| Monomial::var(c, i)).collect();
    let mut last = vec![0u32; c];
    last[c - 1] = e;
    gens.push(Monomial::from_slice(&last));
    Ok(MonomialIdeal::new(c, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{test_cwl_gin, test_cwl_linear_part, CriteriaConfig, Decision};
    use crate::polynomial::Ring;
    use crate::resolution::betti_numbers;

    fn ideal(rows: &[&[u32]]) -> GradedIdeal {
        let n = rows[0].len();
        let r = Ring::new(31013, n).unwrap();
        GradedIdeal::from_monomial_ideal(r, &MonomialIdeal::from_exponents(n, rows)).unwrap()
    }

    #[test]
    fn classifier_examples() {
        let cases: [(&[&[u32]], bool); 4] = [
            (&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]], true),
            (&[&[2, 0, 0], &[0, 2, 0]], false),
            (&[&[1, 0, 0], &[0, 1, 0]], true),
            (&[&[0, 0, 3]], true),
        ];
        for (rows, expected) in cases {
            let i = ideal(rows);
            let v = classify_gorenstein(&i, true).unwrap();
            assert_eq!(v.decision == Decision::Yes, expected, "{i}");
            let cfg = CriteriaConfig::default();
            assert_eq!(test_cwl_gin(&i, &cfg).unwrap().decision, v.decision);
            assert_eq!(test_cwl_linear_part(&i, &cfg).unwrap().decision, v.decision);
        }
        assert!(classify_gorenstein(&ideal(&[&[1, 0]]), false).is_err());
    }

    #[test]
    fn general_forms() {
        // a linear form and a quadric in general position
        let r = Ring::new(31013, 3).unwrap();
        let x = |i| r.var(i);
        let l = &(&x(0) + &x(1)) + &x(2);
        let q = &(&x(0) * &x(1)) + &(&x(2) * &x(2));
        let i = GradedIdeal::new(r, [l, q]).unwrap();
        assert_eq!(classify_gorenstein(&i, true).unwrap().decision, Decision::Yes);
        let b = betti_numbers(&i).unwrap();
        assert_eq!(b, gorenstein_companion(2, 2).unwrap().ek_betti().unwrap());
    }

    #[test]
    fn companion_matches_koszul() {
        assert_eq!(
            gorenstein_companion(3, 2).unwrap(),
            MonomialIdeal::from_exponents(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]])
        );
        assert_eq!(gorenstein_companion(4, 1).unwrap(), MonomialIdeal::variables(4, 0..4));
        assert!(gorenstein_companion(0, 1).is_err());
        for c in 1..=4 {
            for e in 1..=3 {
                let j = gorenstein_companion(c, e).unwrap();
                assert!(j.is_strongly_stable());
                let r = Ring::new(31013, c).unwrap();
                let engine = betti_numbers(&GradedIdeal::from_monomial_ideal(r, &j).unwrap()).unwrap();
                assert_eq!(j.ek_betti().unwrap(), engine);
                // Koszul complex on c-1 linear forms and one form of degree e
                assert_eq!(engine.totals(), (0..=c as i64).map(|i| crate::monomial::binomial(c as i64, i)).collect::<Vec<_>>());
            }
        }
    }
}
