//! Step budgets turn long computations into inconclusive verdicts.

use cwlin::cli::scenarios::{ideal, MINORS_2X4};
use cwlin::criteria::{test_cwl_linear_part, CriteriaConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let i = ideal(MINORS_2X4, None)?;
    for budget in [10, 1_000, 100_000] {
        let cfg = CriteriaConfig { budget, ..Default::default() };
        println!("budget {budget}: {:?}", test_cwl_linear_part(&i, &cfg)?.decision);
    }
    Ok(())
}
