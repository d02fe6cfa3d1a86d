//! All componentwise-linearity tests on a few ideals.

use cwlin::cli::scenarios::ideal;
use cwlin::criteria::{run_method, CriteriaConfig, Method};
use cwlin::monomial::MonomialOrder;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = CriteriaConfig { seed: 3, ..Default::default() };
    for text in [
        "ideal x1^2, x2",
        "ideal x1^2, x2^2",
        "ideal x2, x3, x4",
        "ideal x1^2, x1*x2, x1*x3^2 + x2^3",
    ] {
        let i = ideal(text, None)?;
        print!("{:<36}", &text[6..]);
        for m in [Method::Initial, Method::Gin, Method::LinearPart, Method::Direct, Method::InitialComponents] {
            let v = run_method(m, &i, MonomialOrder::Degrevlex, &cfg)?;
            print!(" {}={:?}", m.name(), v.decision);
        }
        println!();
    }
    Ok(())
}
