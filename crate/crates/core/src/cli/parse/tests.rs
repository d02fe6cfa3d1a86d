use super::*;
use crate::classifiers::{classify_determinantal, DeterminantalInput};
use crate::criteria::Decision;
use proptest::prelude::*;

const MINORS: &str = "ring 31013 8\n\
ideal x1*x6-x2*x5, x1*x7-x3*x5, x1*x8-x4*x5,\n\
      x2*x7-x3*x6, x2*x8-x4*x6, x3*x8-x4*x7\n";

fn roundtrip(text: &str) -> Input {
    let a = parse_input(text, None).unwrap();
    let printed = print_input(&a);
    let b = parse_input(&printed, None).unwrap();
    assert_eq!(print_input(&b), printed, "unstable print of {text:?}");
    b
}

fn parse_err(text: &str) -> (usize, usize, String) {
    match parse_input(text, None) {
        Err(Error::Parse { line, column, message }) => (line, column, message),
        other => panic!("expected a parse error for {text:?}, got {other:?}"),
    }
}

#[test]
fn minors_ideal() {
    let Input::Ideal(i) = roundtrip(MINORS) else { panic!() };
    assert_eq!(i.ring().nvars, 8);
    assert_eq!(i.ring().characteristic(), 31013);
    assert_eq!(i.beta0(), 6);
    assert_eq!(i.generators()[0].to_string(), "-x2*x5+x1*x6");
}

#[test]
fn implicit_ring_and_syntax_variants() {
    let Input::Ideal(i) = roundtrip("ideal (2x1^2x2 - 3 * x2^3, x3 x1 x2)") else { panic!() };
    assert_eq!(i.ring().nvars, 3);
    assert_eq!(i.ring().characteristic(), DEFAULT_CHARACTERISTIC);
    assert_eq!(i.generators()[0].to_string(), "2*x1^2*x2-3*x2^3");
    assert_eq!(i.generators()[1].to_string(), "x1*x2*x3");
}

#[test]
fn characteristic_override_reduces_coefficients() {
    let Input::Ideal(i) = parse_input("ring 31013 2\nideal 3*x1 + x2, x1^2 - x2^2", Some(3)).unwrap() else {
        panic!()
    };
    assert_eq!(i.ring().characteristic(), 3);
    assert_eq!(i.generators()[0].to_string(), "x2");
    let Input::Ideal(j) = parse_input("ideal x1^2 - x2^2", Some(2)).unwrap() else { panic!() };
    assert_eq!(j.generators()[0].to_string(), "x1^2+x2^2");
}

#[test]
fn rp2_complex() {
    let text = "complex 6 facets: 125 126 134 136 145 234 235 246 356 456";
    let Input::Complex(d) = roundtrip(text) else { panic!() };
    assert_eq!(d, SimplicialComplex::real_projective_plane());
    let Input::Complex(e) = roundtrip("complex 11 facets: {1,2,10} {11} {}") else { panic!() };
    assert_eq!(e.facets(), vec![vec![10], vec![0, 1, 9]]);
}

#[test]
fn determinantal_example_matrix() {
    let text = "ring 31013 2\nmatrix 3 2 rowdeg 0 0 1 coldeg 1 2 entries: x2 0 / -x1 x2^2 / 0 -x1";
    let Input::Matrix(a) = roundtrip(text) else { panic!() };
    assert_eq!((a.nrows(), a.ncols()), (3, 2));
    assert_eq!(a.entry(1, 1).to_string(), "x2^2");
    let minors = a.maximal_minors_ideal();
    assert_eq!(minors.beta0(), 3);
    let v = classify_determinantal(&DeterminantalInput::from_matrix(&a).unwrap()).unwrap();
    assert_eq!(v.decision, Decision::Yes);
    // one row per line works as well
    let multi = "ring 31013 2\nmatrix 3 2 rowdeg 0 0 1 coldeg 1 2 entries:\n x2 0\n -x1 x2^2\n 0 -x1\n";
    let Input::Matrix(b) = parse_input(multi, None).unwrap() else { panic!() };
    assert_eq!(a, b);
}

#[test]
fn degree_data() {
    let Input::Degrees(d) = roundtrip("degmatrix 3 2: 1 0 / 2 1 / 2 1") else { panic!() };
    assert_eq!(d.get(1, 0), 2);
    let Input::Symmetric(s) = roundtrip("symmetric doubled: 2 0 2") else { panic!() };
    assert_eq!(s.doubled(), &[0, 2, 2]);
}

#[test]
fn errors_carry_positions() {
    let (l, c, m) = parse_err("ring 31013 3\nideal x1^2 + x2");
    assert_eq!((l, c), (2, 7));
    assert!(m.contains("inhomogeneous"), "{m}");
    let (l, c, _) = parse_err("ring 31013 3\nideal x1, x4");
    assert_eq!((l, c), (2, 11));
    let (l, c, _) = parse_err("ideal x1,\n  x2 +* x3");
    assert_eq!((l, c), (2, 7));
    let (l, _, m) = parse_err("degmatrix 2 2: 1 0 / 5 1");
    assert_eq!(l, 1);
    assert!(m.contains("inconsistent"), "{m}");
    let (_, _, m) = parse_err("ring 31013 2\nmatrix 2 1 rowdeg 0 0 coldeg 1 entries: x1 / x2^2");
    assert!(m.contains("degree 2"), "{m}");
    let (l, c, _) = parse_err("\n\nfoo x1");
    assert_eq!((l, c), (3, 1));
    let (_, _, m) = parse_err("ring 4 2\nideal x1");
    assert!(m.contains("prime"), "{m}");
    parse_err("ideal x1\nideal x2");
    parse_err("ring 31013 2");
    parse_err("complex 3 facets: 14");
}

#[test]
fn comments_and_blank_lines() {
    let Input::Ideal(i) = parse_input("# minors\n\nring 31013 2 # two variables\nideal x1, # first\n  x2\n", None).unwrap()
    else {
        panic!()
    };
    assert_eq!(i.beta0(), 2);
}

fn arb_poly() -> impl Strategy<Value = String> {
    let term = (1i64..40, prop::collection::vec(0u32..3, 4)).prop_map(|(c, e)| {
        // pad to degree 3 with x4 so the polynomial is homogeneous
        let d: u32 = e[..3].iter().sum();
        let pad = 3u32.saturating_sub(d);
        let mut s = format!("{c}");
        for (i, k) in e[..3].iter().enumerate() {
            if *k > 0 {
                s.push_str(&format!("*x{}^{k}", i + 1));
            }
        }
        if d <= 3 {
            if pad > 0 {
                s.push_str(&format!("*x4^{pad}"));
            }
            Some(s)
        } else {
            None
        }
    });
    prop::collection::vec(term, 1..5).prop_map(|ts| {
        let ts: Vec<String> = ts.into_iter().flatten().collect();
        if ts.is_empty() {
            "x4^3".to_string()
        } else {
            ts.join(" - ")
        }
    })
}

proptest! {
    #[test]
    fn ideal_roundtrip(gens in prop::collection::vec(arb_poly(), 1..4), p in prop::sample::select(vec![2u32, 3, 31013])) {
        let text = format!("ring {p} 4\nideal {}", gens.join(", "));
        let a = parse_input(&text, None).unwrap();
        let printed = print_input(&a);
        let b = parse_input(&printed, None).unwrap();
        prop_assert_eq!(print_input(&b), printed);
        let (Input::Ideal(a), Input::Ideal(b)) = (a, b) else { unreachable!() };
        prop_assert_eq!(a.generators().len(), b.generators().len());
        for (f, g) in a.generators().iter().zip(b.generators()) {
            prop_assert_eq!(f.terms(), g.terms());
        }
    }

    #[test]
    fn degmatrix_roundtrip(g in prop::collection::vec(-3i64..3, 1..5), f in prop::collection::vec(-3i64..3, 1..5)) {
        let d = DegreeMatrix::from_degrees(&g, &f);
        let text = print_input(&Input::Degrees(d.clone()));
        let Input::Degrees(e) = parse_input(&text, None).unwrap() else { unreachable!() };
        prop_assert_eq!(d, e);
    }
}
