//! Submaximal minors of symmetric matrices: classification from doubled
//! degrees, Józefiak tables, and the (t, r) bookkeeping.

use cwlin::classifiers::{
    classify_symmetric, compute_tr, jozefiak_betti, symmetric_companion, CompanionCheck, SymmetricInput,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for d in [vec![1, 1, 1], vec![0, 2, 2], vec![1, 1, 3], vec![0, 0, 2, 2, 2]] {
        let v = classify_symmetric(&SymmetricInput::new(d.clone())?)?;
        println!("2d = {d:?}: {:?}", v.decision);
    }
    print!("{}", jozefiak_betti(5, 2)?);
    for s in 1..=6 {
        println!("s = {s}: (t, r) = {:?}", compute_tr(s));
    }
    for (m, e) in [(5, 1), (5, 2), (7, 3)] {
        let c = symmetric_companion(m, e)?;
        let outcome = match c.check {
            CompanionCheck::Verified => "Betti numbers match",
            CompanionCheck::NotStronglyStable => "not strongly stable",
            CompanionCheck::Mismatch { .. } => "Betti numbers differ",
        };
        println!("companion m={m}, e={e}: {} ({outcome})", c.ideal);
    }
    Ok(())
}
