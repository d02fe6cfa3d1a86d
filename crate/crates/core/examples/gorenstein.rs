//! Gorenstein ideals are componentwise linear exactly when they are
//! complete intersections with at most one nonlinear generator.

use cwlin::classifiers::{classify_gorenstein, gorenstein_companion};
use cwlin::cli::scenarios::ideal;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["ideal x1, x2, x3^2", "ideal x1^2, x2^2", "ideal x1, x2^3"] {
        let v = classify_gorenstein(&ideal(text, None)?, true)?;
        println!("{:<20} {:?}", &text[6..], v.decision);
    }
    let j = gorenstein_companion(4, 3)?;
    println!("companion c=4, e=3: {j}");
    print!("{}", j.ek_betti()?);
    Ok(())
}
