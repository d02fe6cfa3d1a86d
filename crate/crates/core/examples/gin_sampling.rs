//! Generic initial ideals of the 2x4 minors: the revlex gin is stable with
//! the same six generators, the lex one needs eleven.

use cwlin::cli::scenarios::{ideal, MINORS_2X4};
use cwlin::groebner::gin_sample;
use cwlin::monomial::MonomialOrder;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let i = ideal(MINORS_2X4, None)?;
    for order in [MonomialOrder::Degrevlex, MonomialOrder::Lex] {
        let g = gin_sample(&i, order, 7, 3)?;
        println!(
            "gin_{}: {} ({} generators, stable: {}, {}/{} trials agree)",
            order.name(),
            g.ideal,
            g.ideal.beta0(),
            g.ideal.is_stable(),
            g.votes,
            g.samples.len()
        );
    }
    Ok(())
}
