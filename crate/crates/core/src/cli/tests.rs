use super::scenarios::{scenarios, MINORS_2X4, RP2};
use super::*;

fn cli(args: &[&str], stdin: &str) -> Outcome {
    let argv = std::iter::once("cwlin").chain(args.iter().copied());
    run(argv, &mut stdin.as_bytes())
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", out.stdout))
}

#[test]
fn lex_gin_of_minors() {
    let out = cli(&["gin", "--order", "lex", "--char", "31013", "--json"], MINORS_2X4);
    assert_eq!(out.code, 0, "{out:?}");
    let v = json(&out);
    assert_eq!(v["generators"], 11);
    assert_eq!(v["beta0_ideal"], 6);
    assert_eq!(v["stable"], true);
}

#[test]
fn cwl_test_exit_codes() {
    let yes = cli(&["cwl-test", "--method", "gin"], MINORS_2X4);
    assert_eq!(yes.code, 0);
    assert!(yes.stdout.starts_with("gin: yes"), "{}", yes.stdout);
    let inconclusive = cli(&["cwl-test", "--method", "initial", "--order", "lex"], MINORS_2X4);
    assert_eq!(inconclusive.code, 2);
    let budget = cli(&["cwl-test", "--method", "linear-part", "--budget", "5", "--json"], MINORS_2X4);
    assert_eq!(budget.code, 2);
    assert_eq!(json(&budget)["decision"], "inconclusive");
    let no = cli(&["cwl-test", "--method", "direct"], "ideal x1^2, x2^2");
    assert_eq!(no.code, 0);
    assert!(no.stdout.starts_with("direct: no"));
}

#[test]
fn rp2_over_several_primes() {
    let out = cli(&["cwl-test", "--method", "linear-part", "--char", "2,3", "--json"], RP2);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v[0]["characteristic"], 2);
    assert_eq!(v[0]["result"]["decision"], "no");
    assert_eq!(v[1]["result"]["decision"], "yes");
    let text = cli(&["cwl-test", "--method", "linear-part", "--char", "2,3"], RP2);
    assert!(text.stdout.contains("== F_2 ==") && text.stdout.contains("== F_3 =="));
}

#[test]
fn json_betti_schema_and_determinism() {
    let a = cli(&["betti", "--json", "--module", "ideal"], MINORS_2X4);
    let b = cli(&["betti", "--json", "--module", "ideal"], MINORS_2X4);
    assert_eq!(a, b);
    let v = json(&a);
    assert_eq!(v["module"], "I");
    let entries: Vec<(u64, u64, u64)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["beta"].as_u64().unwrap()))
        .collect();
    assert_eq!(entries, vec![(0, 2, 6), (1, 3, 8), (2, 4, 3)]);
    let g1 = cli(&["gin", "--json", "--seed", "9"], MINORS_2X4);
    let g2 = cli(&["gin", "--json", "--seed", "9"], MINORS_2X4);
    assert_eq!(g1.stdout, g2.stdout);
}

#[test]
fn errors_exit_one() {
    let out = cli(&["gb"], "ideal x1^2 + x2");
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 1, column 7"), "{}", out.stderr);
    let out = cli(&["gb", "--json"], "ideal x1^2 + x2");
    assert!(json(&out)["error"].as_str().unwrap().contains("inhomogeneous"));
    assert_eq!(cli(&["classify", "gorenstein"], "ideal x1, x2^2").code, 1);
    assert_eq!(cli(&["betti", "/nonexistent/file"], "").code, 1);
    assert_eq!(cli(&["frobnicate"], "").code, 1);
    assert_eq!(cli(&["cwl-test", "--method", "bogus"], MINORS_2X4).code, 1);
    assert_eq!(cli(&["classify", "symmetric"], "ideal x1").code, 1);
    let help = cli(&["--help"], "");
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("cwl-test"));
}

#[test]
fn structural_commands() {
    let gb = cli(&["gb", "--order", "lex"], "ideal x1^2 - x2^2, x1*x2");
    assert_eq!(gb.stdout, "x1^2-x2^2\nx1*x2\nx2^3\n");
    let d = json(&cli(&["dim", "--json"], MINORS_2X4));
    assert_eq!((d["dimension"].as_u64(), d["height"].as_u64()), (Some(5), Some(3)));
    let h = json(&cli(&["hilbert", "--upto", "3", "--json"], "ideal x1^2, x2^2"));
    assert_eq!(h["hilbert_function"], serde_json::json!([1, 2, 1, 0]));
    assert_eq!(h["numerator"], serde_json::json!([1, 0, -2, 0, 1]));
    let i = json(&cli(&["initial", "--json"], "ideal x1^2, x1*x2, x2^3"));
    assert_eq!(i["strongly_stable"], true);
    let dual = json(&cli(&["alexander-dual", "--json"], RP2));
    assert_eq!(dual["self_dual"], true);
    let tri = json(&cli(&["alexander-dual", "--json"], "ideal x1*x2*x3"));
    // the boundary of a triangle has the single nonface {1,2,3}, so its dual is {∅}
    assert_eq!(tri["dual"], "complex 3 facets: {}");
    assert_eq!(tri["complex"], "complex 3 facets: 12 13 23");
}

#[test]
fn classify_and_companion() {
    let v = json(&cli(&["classify", "gorenstein", "--assume-gorenstein", "--json"], "ideal x1, x2, x3^2"));
    assert_eq!(v["decision"], "yes");
    let det = cli(&["classify", "determinantal"], "degmatrix 3 2: 1 0 / 2 1 / 2 1");
    assert!(det.stdout.starts_with("determinantal: yes"), "{}", det.stdout);
    let sym = json(&cli(&["classify", "symmetric", "--json"], "symmetric doubled: 1 1 3"));
    assert_eq!(sym["decision"], "no");
    assert!(sym["characteristic"].is_null());
    let en = json(&cli(&["companion", "determinantal", "--m", "2", "--c", "3", "--e", "2", "--json"], ""));
    assert_eq!(en["matches"], true);
    let g = json(&cli(&["companion", "gorenstein", "--c", "3", "--e", "2", "--json"], ""));
    assert_eq!(g["ideal"], "(x3^2, x1, x2)");
    let s = json(&cli(&["companion", "symmetric", "--json"], "symmetric doubled: 1 1 1 1 1"));
    assert_eq!(s["check"]["outcome"], "verified");
    assert_eq!(s["ideal"], "(x1^4, x1^3*x2, x1^2*x2^2, x1*x2^3, x2^4, x1^3*x3, x1^2*x2*x3, x1*x2^2*x3, x2^3*x3, x1^2*x3^2, x1*x2*x3^2, x2^2*x3^2, x1*x3^3, x2*x3^3, x3^4)");
}

#[test]
fn scenario_suite_passes() {
    let out = cli(&["paper-examples", "--json"], "");
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v = json(&out);
    assert_eq!(v.as_array().unwrap().len(), scenarios().len());
    assert!(v.as_array().unwrap().iter().all(|r| r["passed"] == true));
    let names: Vec<&str> = scenarios().iter().map(|s| s.name).collect();
    for required in [
        "minors-2x4-lex-gin",
        "rp2-char-2",
        "rp2-char-3",
        "determinantal-3x2",
        "gorenstein",
        "determinantal-companion-m2-c3",
        "symmetric-tr-table",
        "jozefiak-5-2",
    ] {
        assert!(names.contains(&required), "{required}");
    }
}
