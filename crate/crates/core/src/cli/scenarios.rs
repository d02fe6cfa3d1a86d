//! Named reproductions of the worked examples, each with its own session
//! settings. `cwlin paper-examples` runs them all.

use serde::Serialize;

use super::parse::{parse_input, Input};
use super::SessionConfig;
use crate::betti::BettiTable;
use crate::classifiers::{
    classify_determinantal, classify_gorenstein, compute_tr, determinantal_companion, gorenstein_companion,
    jozefiak_betti, symmetric_companion, CompanionCheck, DeterminantalInput,
};
use crate::criteria::{test_cwl_gin, test_cwl_linear_part, CriteriaConfig, Decision};
use crate::error::{Error, Result};
use crate::groebner::{apply_coordinate_change, GradedIdeal, RandomCoordinateChange};
use crate::matrix::{DegreeMatrix, HomogeneousMatrix};
use crate::monomial::{binomial, MonomialOrder};
use crate::monomial_ideal::MonomialIdeal;
use crate::polynomial::Ring;
use crate::resolution::betti_numbers;
use crate::simplicial::SimplicialComplex;

/// 2-minors of the generic 2×4 matrix `[x1 x2 x3 x4; x5 x6 x7 x8]`.
pub const MINORS_2X4: &str = "ring 31013 8\n\
ideal x1*x6-x2*x5, x1*x7-x3*x5, x1*x8-x4*x5, x2*x7-x3*x6, x2*x8-x4*x6, x3*x8-x4*x7\n";

/// Expected lex-initial ideal of the minors after a generic change of coordinates.
pub const MINORS_2X4_LEX_GIN: &str =
    "ring 31013 8\nideal x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x2^2, x2*x3^2, x2*x3*x4, x2*x3*x5, x2*x4^3, x3^4\n";

/// Six-vertex triangulation of the real projective plane.
pub const RP2: &str = "complex 6 facets: 125 126 134 136 145 234 235 246 356 456\n";

/// `[[y, 0], [-x, y^2], [0, -x]]` with `x = x1`, `y = x2`.
pub const DETERMINANTAL_3X2: &str = "ring 31013 2\nmatrix 3 2 rowdeg 0 0 1 coldeg 1 2 entries: x2 0 / -x1 x2^2 / 0 -x1\n";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioResult {
    pub name: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub struct Scenario {
    pub name: &'static str,
    pub description: &'static str,
    run: fn(&SessionConfig) -> Result<(bool, String)>,
}

impl Scenario {
    pub fn run(&self, config: &SessionConfig) -> ScenarioResult {
        let (passed, detail) = match (self.run)(config) {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        ScenarioResult {
            name: self.name,
            description: self.description,
            passed,
            detail,
        }
    }
}

pub fn ideal(text: &str, p: Option<u32>) -> Result<GradedIdeal> {
    match parse_input(text, p)? {
        Input::Ideal(i) => Ok(i),
        other => Err(Error::InvalidArgument(format!("expected an ideal, found {}", other.kind()))),
    }
}

pub fn monomial_ideal(text: &str) -> Result<MonomialIdeal> {
    ideal(text, None)?
        .as_monomial_ideal()
        .ok_or_else(|| Error::InvalidArgument("expected monomial generators".into()))
}

pub fn rp2_ideal(p: u32) -> Result<GradedIdeal> {
    let d = SimplicialComplex::real_projective_plane();
    GradedIdeal::from_monomial_ideal(Ring::new(p, 6)?, &d.stanley_reisner())
}

pub fn determinantal_3x2() -> Result<HomogeneousMatrix> {
    match parse_input(DETERMINANTAL_3X2, None)? {
        Input::Matrix(a) => Ok(a),
        other => Err(Error::InvalidArgument(format!("expected a matrix, found {}", other.kind()))),
    }
}

fn check(ok: bool, what: &str, failures: &mut Vec<String>) {
    if !ok {
        failures.push(what.to_string());
    }
}

fn finish(failures: Vec<String>, summary: String) -> Result<(bool, String)> {
    if failures.is_empty() {
        Ok((true, summary))
    } else {
        Ok((false, format!("{summary}; failed: {}", failures.join(", "))))
    }
}

fn criteria(config: &SessionConfig) -> CriteriaConfig {
    config.criteria()
}

fn lex_gin_of_minors(config: &SessionConfig) -> Result<(bool, String)> {
    let i = ideal(MINORS_2X4, None)?;
    let phi = RandomCoordinateChange::sample(i.ring().field, 8, config.seed);
    let lead = apply_coordinate_change(&i, &phi)?.initial_ideal(MonomialOrder::Lex);
    let j = monomial_ideal(MINORS_2X4_LEX_GIN)?;
    let mut f = Vec::new();
    check(lead == j, "in_lex(phi I) = J", &mut f);
    check(j.is_stable(), "J stable", &mut f);
    check(j.beta0() == 11, "beta0(J) = 11", &mut f);
    check(i.beta0() == 6, "beta0(I) = 6", &mut f);
    finish(f, format!("in_lex(phi I) = {lead}, beta0 {} vs {}", lead.beta0(), i.beta0()))
}

fn revlex_gin_of_minors(config: &SessionConfig) -> Result<(bool, String)> {
    let i = ideal(MINORS_2X4, None)?;
    let v = test_cwl_gin(&i, &criteria(config))?;
    let t = betti_numbers(&i)?.to_ideal();
    let mut f = Vec::new();
    check(v.decision == Decision::Yes, "gin verdict yes", &mut f);
    check(t.totals() == vec![6, 8, 3], "totals (6, 8, 3)", &mut f);
    check(t.is_linear(2), "2-linear", &mut f);
    let crate::criteria::Witness::Gin { gin, .. } = &v.witness else {
        unreachable!("gin verdicts carry a gin witness")
    };
    let g = monomial_ideal(&format!("ideal {gin}"))?;
    check(g.ek_betti()?.to_ideal() == t, "gin Betti table equals I's", &mut f);
    finish(f, format!("{:?}, gin = {gin}, totals {:?}", v.decision, t.totals()))
}

fn rp2(p: u32, expected: Decision, config: &SessionConfig) -> Result<(bool, String)> {
    let i = rp2_ideal(p)?;
    let cfg = CriteriaConfig {
        trials: config.trials.max(8),
        ..criteria(config)
    };
    let g = test_cwl_gin(&i, &cfg)?;
    let l = test_cwl_linear_part(&i, &cfg)?;
    let mut f = Vec::new();
    check(g.decision == expected, "gin verdict", &mut f);
    check(l.decision == expected, "linear-part verdict", &mut f);
    finish(f, format!("F_{p}: gin {:?}, linear part {:?}", g.decision, l.decision))
}

fn rp2_self_dual(_: &SessionConfig) -> Result<(bool, String)> {
    let d = match parse_input(RP2, None)? {
        Input::Complex(d) => d,
        _ => unreachable!(),
    };
    let dual = d.alexander_dual();
    let mut f = Vec::new();
    check(d == SimplicialComplex::real_projective_plane(), "listed facets", &mut f);
    check(dual.stanley_reisner() == d.stanley_reisner(), "I_dual = I", &mut f);
    check(d.stanley_reisner().beta0() == 10, "10 cubic generators", &mut f);
    finish(f, format!("I = {}", d.stanley_reisner()))
}

fn determinantal_example(_: &SessionConfig) -> Result<(bool, String)> {
    let a = determinantal_3x2()?;
    let lin_height = a.linearize().maximal_minors_ideal().height();
    let v = classify_determinantal(&DeterminantalInput::from_matrix(&a)?)?;
    let minors = a.maximal_minors_ideal();
    let m = minors.as_monomial_ideal().expect("monomial minors");
    let ek = m.ek_betti()?.to_ideal();
    let engine = betti_numbers(&minors)?.to_ideal();
    let mut f = Vec::new();
    check(lin_height == 1, "height I_2(A^lin) = 1", &mut f);
    check(v.decision == Decision::Yes, "classifier yes", &mut f);
    check(m == monomial_ideal("ideal x1^2, x1*x2, x2^3")?, "I = (x^2, xy, y^3)", &mut f);
    check(ek == engine, "EK table = resolution", &mut f);
    check(ek.totals() == vec![3, 2], "totals (3, 2)", &mut f);
    check(ek.shifts(0) == vec![2, 2, 3] && ek.shifts(1) == vec![3, 4], "shifts", &mut f);
    finish(f, format!("I = {m}, totals {:?}, lin height {lin_height}", ek.totals()))
}

fn gorenstein(config: &SessionConfig) -> Result<(bool, String)> {
    let cfg = criteria(config);
    let mut f = Vec::new();
    let mut summary = Vec::new();
    for (text, expected) in [("ideal x1, x2, x3^2", Decision::Yes), ("ideal x1^2, x2^2", Decision::No)] {
        let i = ideal(text, None)?;
        let c = classify_gorenstein(&i, true)?.decision;
        let g = test_cwl_gin(&i, &cfg)?.decision;
        let l = test_cwl_linear_part(&i, &cfg)?.decision;
        check(c == expected && g == expected && l == expected, text, &mut f);
        summary.push(format!("{}: {c:?}/{g:?}/{l:?}", &text[6..]));
    }
    let j = gorenstein_companion(3, 2)?;
    check(j == monomial_ideal("ideal x1, x2, x3^2")?, "companion (x1, x2, x3^2)", &mut f);
    finish(f, summary.join("; "))
}

fn determinantal_companion_scenario(_: &SessionConfig) -> Result<(bool, String)> {
    let degrees = DegreeMatrix::from_degrees(&[0, 0, 0, 0], &[1, 1]);
    let j = determinantal_companion(&DeterminantalInput::from_degrees(degrees)?)?;
    let engine = betti_numbers(&ideal(MINORS_2X4, None)?)?;
    let mut f = Vec::new();
    check(j == MonomialIdeal::power_of_first_variables(3, 3, 2), "J = (x1, x2, x3)^2", &mut f);
    check(j.ek_betti()? == engine, "EK(J) = Betti(I)", &mut f);
    finish(f, format!("J = {j}, totals {:?}", engine.totals()))
}

fn tr_table(_: &SessionConfig) -> Result<(bool, String)> {
    let mut f = Vec::new();
    let mut rows = Vec::new();
    for s in 1..=10u64 {
        let (t, r) = compute_tr(s);
        let s_ = s as i64;
        let sum: i64 = (2 * s_ - t..=2 * s_).sum();
        let ok = r + sum == binomial(s_, 2) as i64 && t >= -1 && 0 <= r && r <= 2 * s_ - 2 - t && (s < 2 || t <= s_ - 3);
        check(ok, &format!("s = {s}"), &mut f);
        rows.push(format!("s={s}:(t={t},r={r})"));
    }
    check(compute_tr(2) == (-1, 1), "(t, r)(2) = (-1, 1)", &mut f);
    finish(f, rows.join(" "))
}

fn jozefiak(_: &SessionConfig) -> Result<(bool, String)> {
    let t: BettiTable = jozefiak_betti(5, 2)?.to_ideal();
    let gens = (t.get(0, 4), t.get(0, 5), t.get(0, 6));
    let mut f = Vec::new();
    check(gens == (6, 6, 3), "generators in degrees 4, 5, 6: (6, 6, 3)", &mut f);
    check(t.totals() == vec![15, 24, 10], "totals (15, 24, 10)", &mut f);
    check(t.strands().len() == 3, "three strands", &mut f);
    let sc = symmetric_companion(5, 2)?;
    let companion = match sc.check {
        CompanionCheck::Verified => "verified".to_string(),
        CompanionCheck::NotStronglyStable => "not strongly stable".to_string(),
        CompanionCheck::Mismatch { .. } => "Betti numbers differ".to_string(),
    };
    finish(
        f,
        format!("totals {:?}, generators {gens:?}; five-summand companion: {companion}", t.totals()),
    )
}

pub fn scenarios() -> Vec<Scenario> {
    vec![
        Scenario {
            name: "minors-2x4-lex-gin",
            description: "lex initial ideal of the 2x4 minors in random coordinates is the 11-generator stable J",
            run: lex_gin_of_minors,
        },
        Scenario {
            name: "minors-2x4-revlex-gin",
            description: "the 2x4 minors are componentwise linear with Betti table (6, 8, 3) equal to their revlex gin's",
            run: revlex_gin_of_minors,
        },
        Scenario {
            name: "rp2-char-2",
            description: "Stanley-Reisner ideal of RP^2 is not componentwise linear over F_2",
            run: |c| rp2(2, Decision::No, c),
        },
        Scenario {
            name: "rp2-char-3",
            description: "Stanley-Reisner ideal of RP^2 is componentwise linear over F_3",
            run: |c| rp2(3, Decision::Yes, c),
        },
        Scenario {
            name: "rp2-char-31013",
            description: "Stanley-Reisner ideal of RP^2 is componentwise linear over F_31013",
            run: |c| rp2(31013, Decision::Yes, c),
        },
        Scenario {
            name: "rp2-alexander-dual",
            description: "the RP^2 triangulation equals its Alexander dual",
            run: rp2_self_dual,
        },
        Scenario {
            name: "determinantal-3x2",
            description: "3x2 matrix with c = 2: linearized minors of height 1, minors (x^2, xy, y^3) componentwise linear",
            run: determinantal_example,
        },
        Scenario {
            name: "gorenstein",
            description: "(x1, x2, x3^2) is componentwise linear, (x1^2, x2^2) is not; companion of c = 3, e = 2",
            run: gorenstein,
        },
        Scenario {
            name: "determinantal-companion-m2-c3",
            description: "(x1, x2, x3)^2 has the Betti numbers of the 2x4 minors",
            run: determinantal_companion_scenario,
        },
        Scenario {
            name: "symmetric-tr-table",
            description: "the integers (t, r) attached to s = 1..10",
            run: tr_table,
        },
        Scenario {
            name: "jozefiak-5-2",
            description: "Betti table of a componentwise linear 5x5 symmetric ideal with e = 2",
            run: jozefiak,
        },
    ]
}

/// Run every scenario on its own thread; results keep the listing order.
pub fn run_all(config: &SessionConfig) -> Vec<ScenarioResult> {
    let all = scenarios();
    std::thread::scope(|s| {
        let handles: Vec<_> = all.iter().map(|sc| s.spawn(move || sc.run(config))).collect();
        handles.into_iter().map(|h| h.join().expect("scenario panicked")).collect()
    })
}
