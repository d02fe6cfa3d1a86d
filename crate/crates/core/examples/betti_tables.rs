//! Minimal free resolution, Betti table, regularity and linear part.

use cwlin::budget::Budget;
use cwlin::cli::scenarios::ideal;
use cwlin::monomial::MonomialOrder;
use cwlin::resolution::minimal_resolution;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let i = ideal("ring 31013 3\nideal x1^2, x1*x2, x2^3, x1*x3^2", None)?;
    let f = minimal_resolution(&i, MonomialOrder::Degrevlex)?;
    print!("{}", f.betti_table()?);
    println!("shape {}, reg I = {}", f.shape(), f.ideal_regularity()?);
    let lin = f.ideal_part().linear_part();
    match lin.first_homology(&Budget::unlimited())? {
        None => println!("linear part is acyclic"),
        Some(k) => println!("linear part has homology at position {k}"),
    }
    Ok(())
}
