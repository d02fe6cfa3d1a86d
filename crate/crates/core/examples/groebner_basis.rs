//! Reduced Gröbner bases and initial ideals under degrevlex and lex.

use cwlin::cli::parse_input;
use cwlin::cli::Input;
use cwlin::monomial::MonomialOrder;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let Input::Ideal(i) = parse_input("ring 31013 3\nideal x1^2 - x2*x3, x1*x2 - x3^2", None)? else {
        unreachable!()
    };
    for order in [MonomialOrder::Degrevlex, MonomialOrder::Lex] {
        println!("{} basis:", order.name());
        for g in i.groebner_basis(order) {
            println!("  {g}");
        }
        let lead = i.initial_ideal(order);
        println!("  in(I) = {lead}, stable: {}", lead.is_stable());
    }
    let f = &i.generators()[0] * &i.ring().var(2);
    println!("x3 * g1 in I: {}", i.contains(&f));
    Ok(())
}
