//! Prime fields and their extensions GF(p^k), used for generic coordinates
//! when p is small.

use cwlin::field::PrimeField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f3 = PrimeField::new(3)?;
    let f9 = f3.extension(2)?;
    println!("{f9}: order {}, contains {f3}: {}", f9.order(), f9.contains(f3));
    let a = 5; // some element of GF(9)
    println!("a = {a}, a^-1 = {}, a * a^-1 = {}", f9.inv(a), f9.mul(a, f9.inv(a)));
    println!("a^8 = {}", f9.pow(a, 8));
    for p in [2, 3, 31013] {
        println!("generic extension of F_{p}: {}", PrimeField::new(p)?.generic_extension());
    }
    Ok(())
}
