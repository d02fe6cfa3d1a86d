//! Stable monomial ideals: Eliahou–Kervaire Betti numbers and Hilbert data.

use cwlin::monomial::Monomial;
use cwlin::monomial_ideal::stable_closure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let j = stable_closure(4, [Monomial::from_slice(&[0, 2, 0, 0]), Monomial::from_slice(&[0, 1, 2, 0])]);
    println!("J = {j}");
    println!("stable: {}, strongly stable: {}", j.is_stable(), j.is_strongly_stable());
    print!("{}", j.ek_betti()?);
    println!("H(S/J, 0..8) = {:?}", j.hilbert_function(8));
    println!("dim S/J = {}, height J = {}", j.dimension(), j.height());
    Ok(())
}
