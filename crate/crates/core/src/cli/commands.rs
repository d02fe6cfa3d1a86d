use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::parse::{parse_input, Input};
use super::scenarios::run_all;
use super::{Command, Family, ModuleArg, SessionConfig};
use crate::betti::BettiTable;
use crate::budget::Budget;
use crate::classifiers::{
    classify_determinantal, classify_gorenstein, classify_symmetric, determinantal_companion, eagon_northcott_table,
    gorenstein_companion, symmetric_companion, CompanionCheck, DeterminantalInput, SymmetricInput,
};
use crate::criteria::{run_method, CwlVerdict, Decision, Witness};
use crate::error::{Error, Result};
use crate::groebner::coords::gin_sample_with_budget;
use crate::groebner::GradedIdeal;
use crate::matrix::DegreeMatrix;
use crate::monomial_ideal::MonomialIdeal;
use crate::polynomial::Ring;
use crate::resolution::minimal_resolution_with_budget;
use crate::simplicial::SimplicialComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Inconclusive,
    Failed,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Inconclusive => 2,
            Status::Failed => 1,
        }
    }
}

/// Result of one command for one characteristic.
#[derive(Clone, Debug)]
pub struct Report {
    pub status: Status,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Self {
            status: Status::Ok,
            text,
            json,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn parse(text: Option<&str>, config: &SessionConfig) -> Result<Input> {
    let text = text.ok_or_else(|| Error::InvalidArgument("this command needs an input".into()))?;
    parse_input(text, config.characteristic)
}

/// Ideals, complexes (via Stanley–Reisner) and matrices (via maximal minors).
fn ideal_of(input: Input, config: &SessionConfig) -> Result<GradedIdeal> {
    match input {
        Input::Ideal(i) => Ok(i),
        Input::Complex(d) => {
            let ring = Ring::new(config.characteristic_or_default(), d.nvertices())?;
            GradedIdeal::from_monomial_ideal(ring, &d.stanley_reisner())
        }
        Input::Matrix(a) => Ok(a.maximal_minors_ideal()),
        other => Err(Error::InvalidArgument(format!("expected an ideal, found {}", other.kind()))),
    }
}

fn describe_monomial_ideal(m: &MonomialIdeal) -> Value {
    json!({
        "ideal": m.to_string(),
        "generators": m.beta0(),
        "stable": m.is_stable(),
        "strongly_stable": m.is_strongly_stable(),
    })
}

fn verdict_report(v: CwlVerdict) -> Report {
    let status = match v.decision {
        Decision::Inconclusive => Status::Inconclusive,
        _ => Status::Ok,
    };
    let mut text = format!("{}: {}", v.method.name(), json_str(&to_json(&v.decision)));
    if v.probabilistic {
        text.push_str(" (probabilistic)");
    }
    if let Some(p) = v.characteristic {
        let _ = write!(text, " over F_{p}");
    }
    text.push('\n');
    match &v.witness {
        Witness::Classifier { reason } => {
            let _ = writeln!(text, "  {reason}");
        }
        Witness::Budget { limit } => {
            let _ = writeln!(text, "  step budget of {limit} exhausted");
        }
        Witness::LinearPart { homology_at, betti } => {
            match homology_at {
                Some(i) => {
                    let _ = writeln!(text, "  linear part has homology in position {i}");
                }
                None => text.push_str("  linear part is acyclic\n"),
            }
            text.push_str(&indent(&betti.to_string()));
        }
        w => {
            let _ = writeln!(text, "  {}", serde_json::to_string(w).unwrap());
        }
    }
    Report {
        status,
        text,
        json: to_json(&v),
    }
}

fn json_str(v: &Value) -> String {
    v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}\n")).collect()
}

fn gb(input: Input, config: &SessionConfig) -> Result<Report> {
    let ideal = ideal_of(input, config)?;
    let budget = Budget::new(config.budget);
    let basis = ideal.groebner_basis_with_budget(config.order, &budget)?;
    let strings: Vec<String> = basis.iter().map(|g| g.to_string()).collect();
    let text = strings.iter().map(|s| format!("{s}\n")).collect();
    Ok(Report::ok(
        text,
        json!({
            "characteristic": ideal.ring().characteristic(),
            "order": config.order.name(),
            "basis": strings,
        }),
    ))
}

fn initial(input: Input, config: &SessionConfig) -> Result<Report> {
    let ideal = ideal_of(input, config)?;
    let budget = Budget::new(config.budget);
    let m = ideal.initial_ideal_with_budget(config.order, &budget)?;
    let text = format!(
        "in_{}(I) = {m}\n  {} generators, stable: {}, strongly stable: {}\n",
        config.order.name(),
        m.beta0(),
        m.is_stable(),
        m.is_strongly_stable()
    );
    let mut j = describe_monomial_ideal(&m);
    j["order"] = json!(config.order.name());
    Ok(Report::ok(text, j))
}

fn gin(input: Input, config: &SessionConfig) -> Result<Report> {
    let ideal = ideal_of(input, config)?;
    let budget = Budget::new(config.budget);
    let s = gin_sample_with_budget(&ideal, config.order, config.seed, config.trials, &budget)?;
    let beta0 = ideal.minimal_generators_with_budget(&budget)?.len();
    let text = format!(
        "gin_{}(I) ~ {}\n  {} of {} trials agree, stable: {}, beta0: {} (ideal: {beta0})\n",
        config.order.name(),
        s.ideal,
        s.votes,
        s.samples.len(),
        s.ideal.is_stable(),
        s.ideal.beta0()
    );
    let mut j = describe_monomial_ideal(&s.ideal);
    j["order"] = json!(config.order.name());
    j["seed"] = json!(config.seed);
    j["trials"] = json!(config.trials);
    j["agreed"] = json!(s.agreed);
    j["votes"] = json!(s.votes);
    j["beta0_ideal"] = json!(beta0);
    Ok(Report::ok(text, j))
}

fn betti(input: Input, module: ModuleArg, config: &SessionConfig) -> Result<Report> {
    let ideal = ideal_of(input, config)?;
    let budget = Budget::new(config.budget);
    let f = minimal_resolution_with_budget(&ideal, config.order, &budget)?;
    let t = f.betti_table()?;
    let t = match module {
        ModuleArg::Quotient => t,
        ModuleArg::Ideal => t.to_ideal(),
    };
    let mut text = t.to_string();
    if let Ok(r) = f.ideal_regularity() {
        let _ = writeln!(text, "reg I = {r}");
    }
    Ok(Report::ok(text, to_json(&t)))
}

fn hilbert(input: Input, upto: u32, config: &SessionConfig) -> Result<Report> {
    let ideal = ideal_of(input, config)?;
    let budget = Budget::new(config.budget);
    let lead = ideal.initial_ideal_with_budget(config.order, &budget)?;
    let values = lead.hilbert_function(upto);
    let numerator = lead.hilbert_numerator();
    let dim = lead.dimension();
    let text = format!(
        "H(S/I, 0..={upto}) = {values:?}\nHilbert series numerator (coefficients of t^k over (1-t)^n): {numerator:?}\ndim S/I = {dim}\n"
    );
    Ok(Report::ok(
        text,
        json!({ "hilbert_function": values, "numerator": numerator, "dimension": dim }),
    ))
}

fn dim(input: Input, config: &SessionConfig) -> Result<Report> {
    let ideal = ideal_of(input, config)?;
    let budget = Budget::new(config.budget);
    let d = ideal.dimension_with_budget(&budget)?;
    let h = ideal.height_with_budget(&budget)?;
    Ok(Report::ok(
        format!("dim S/I = {d}\nheight I = {h}\n"),
        json!({ "dimension": d, "height": h }),
    ))
}

fn alexander_dual(input: Input) -> Result<Report> {
    let complex = match input {
        Input::Complex(d) => d,
        Input::Ideal(i) => {
            let m = i
                .as_monomial_ideal()
                .ok_or_else(|| Error::InvalidArgument("expected a squarefree monomial ideal".into()))?;
            SimplicialComplex::from_stanley_reisner(&m)?
        }
        other => return Err(Error::InvalidArgument(format!("expected a complex, found {}", other.kind()))),
    };
    let dual = complex.alexander_dual();
    let ideal = complex.stanley_reisner();
    let dual_ideal = dual.stanley_reisner();
    let same = dual == complex;
    let text = format!("dual: {dual}\nI_dual = {dual_ideal}\nI = {ideal}\nself-dual: {same}\n");
    Ok(Report::ok(
        text,
        json!({
            "complex": complex.to_string(),
            "dual": dual.to_string(),
            "ideal": ideal.to_string(),
            "dual_ideal": dual_ideal.to_string(),
            "self_dual": same,
        }),
    ))
}

fn classify(family: Family, input: Input, assume_gorenstein: bool, config: &SessionConfig) -> Result<Report> {
    let v = match (family, input) {
        (Family::Gorenstein, input) => classify_gorenstein(&ideal_of(input, config)?, assume_gorenstein)?,
        (Family::Determinantal, Input::Matrix(a)) => classify_determinantal(&DeterminantalInput::from_matrix(&a)?)?,
        (Family::Determinantal, Input::Degrees(d)) => classify_determinantal(&DeterminantalInput::from_degrees(d)?)?,
        (Family::Symmetric, Input::Matrix(a)) => classify_symmetric(&SymmetricInput::from_matrix(&a)?)?,
        (Family::Symmetric, Input::Symmetric(s)) => classify_symmetric(&s)?,
        (f, other) => {
            return Err(Error::InvalidArgument(format!(
                "cannot classify a {} as {f:?}",
                other.kind()
            )))
        }
    };
    Ok(verdict_report(v))
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidArgument(format!("missing --{flag}")))
}

/// `(m+c-1) × m` degree matrix with linear entries except a last row of degree `e`.
fn linear_plus_last_row(m: usize, c: usize, e: i64) -> Result<DegreeMatrix> {
    if m == 0 || c == 0 || e < 1 {
        return Err(Error::InvalidArgument(format!("need m, c, e >= 1, got m={m}, c={c}, e={e}")));
    }
    let mut g = vec![0; m + c - 1];
    g[m + c - 2] = 1 - e;
    Ok(DegreeMatrix::from_degrees(&g, &vec![1; m]))
}

fn table_text(label: &str, t: &BettiTable) -> String {
    format!("{label}:\n{}", indent(&t.to_string()))
}

fn companion(family: Family, input: Option<Input>, m: Option<usize>, c: Option<usize>, e: Option<i64>) -> Result<Report> {
    match family {
        Family::Gorenstein => {
            let (c, e) = (need(c, "c")?, need(e, "e")?);
            let e = u32::try_from(e).map_err(|_| Error::InvalidArgument(format!("e must be positive, got {e}")))?;
            let j = gorenstein_companion(c, e)?;
            let t = j.ek_betti()?;
            let text = format!("{j}\n{}", table_text("Eliahou-Kervaire", &t));
            let mut out = describe_monomial_ideal(&j);
            out["betti"] = to_json(&t);
            Ok(Report::ok(text, out))
        }
        Family::Determinantal => {
            let data = match input {
                Some(Input::Degrees(d)) => DeterminantalInput::from_degrees(d)?,
                Some(Input::Matrix(a)) => DeterminantalInput::from_matrix(&a)?,
                Some(other) => {
                    return Err(Error::InvalidArgument(format!("expected a degmatrix, found {}", other.kind())))
                }
                None => DeterminantalInput::from_degrees(linear_plus_last_row(
                    need(m, "m")?,
                    need(c, "c")?,
                    need(e, "e")?,
                )?)?,
            };
            let j = determinantal_companion(&data)?;
            let found = j.ek_betti()?;
            let expected = eagon_northcott_table(data.degrees())?;
            let matches = found == expected;
            let text = format!(
                "{j}\n{}{}matches Eagon-Northcott: {matches}\n",
                table_text("Eliahou-Kervaire", &found),
                table_text("Eagon-Northcott", &expected)
            );
            let mut out = describe_monomial_ideal(&j);
            out["m"] = json!(data.m());
            out["c"] = json!(data.c());
            out["e"] = json!(data.e());
            out["betti"] = to_json(&found);
            out["expected"] = to_json(&expected);
            out["matches"] = json!(matches);
            Ok(Report::ok(text, out))
        }
        Family::Symmetric => {
            let (m, e) = match input {
                Some(Input::Symmetric(s)) => (s.m(), s.e()),
                Some(Input::Matrix(a)) => {
                    let s = SymmetricInput::from_matrix(&a)?;
                    (s.m(), s.e())
                }
                Some(other) => {
                    return Err(Error::InvalidArgument(format!(
                        "expected symmetric degree data, found {}",
                        other.kind()
                    )))
                }
                None => (need(m, "m")?, need(e, "e")?),
            };
            let sc = symmetric_companion(m, e)?;
            let mut text = format!("{}\n  t = {}, r = {}", sc.ideal, sc.t, sc.r);
            if !sc.dropped_terms.is_empty() {
                let _ = write!(text, ", dropped summands {:?}", sc.dropped_terms);
            }
            text.push('\n');
            match &sc.check {
                CompanionCheck::Verified => text.push_str("Betti numbers match the Józefiak resolution\n"),
                CompanionCheck::NotStronglyStable => text.push_str("not strongly stable\n"),
                CompanionCheck::Mismatch { expected, found } => {
                    text.push_str("Betti numbers differ from the Józefiak resolution\n");
                    text.push_str(&table_text("expected", expected));
                    text.push_str(&table_text("found", found));
                }
            }
            Ok(Report::ok(text, to_json(&sc)))
        }
    }
}

fn paper_examples(config: &SessionConfig) -> Report {
    let results = run_all(config);
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "[{}] {}: {}", if r.passed { "pass" } else { "FAIL" }, r.name, r.detail);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let _ = writeln!(text, "{} scenarios, {failed} failed", results.len());
    Report {
        status: if failed == 0 { Status::Ok } else { Status::Failed },
        text,
        json: to_json(&results),
    }
}

/// Execute `cmd` on the document `text`. Running out of budget becomes an
/// inconclusive report.
pub fn run_command(cmd: &Command, config: &SessionConfig, text: Option<&str>) -> Result<Report> {
    let r = match cmd {
        Command::Gb { .. } => parse(text, config).and_then(|i| gb(i, config)),
        Command::Initial { .. } => parse(text, config).and_then(|i| initial(i, config)),
        Command::Gin { .. } => parse(text, config).and_then(|i| gin(i, config)),
        Command::Betti { module, .. } => parse(text, config).and_then(|i| betti(i, *module, config)),
        Command::Hilbert { upto, .. } => parse(text, config).and_then(|i| hilbert(i, *upto, config)),
        Command::Dim { .. } => parse(text, config).and_then(|i| dim(i, config)),
        Command::AlexanderDual { .. } => parse(text, config).and_then(alexander_dual),
        Command::CwlTest { method, .. } => parse(text, config).and_then(|i| {
            let ideal = ideal_of(i, config)?;
            Ok(verdict_report(run_method(*method, &ideal, config.order, &config.criteria())?))
        }),
        Command::Classify {
            family,
            assume_gorenstein,
            ..
        } => parse(text, config).and_then(|i| classify(*family, i, *assume_gorenstein, config)),
        Command::Companion { family, m, c, e, .. } => {
            let input = text.map(|t| parse_input(t, config.characteristic)).transpose()?;
            companion(*family, input, *m, *c, *e)
        }
        Command::PaperExamples => Ok(paper_examples(config)),
    };
    match r {
        Err(Error::BudgetExceeded(limit)) => Ok(Report {
            status: Status::Inconclusive,
            text: format!("inconclusive: step budget of {limit} exhausted\n"),
            json: json!({ "inconclusive": "budget", "limit": limit }),
        }),
        r => r,
    }
}
