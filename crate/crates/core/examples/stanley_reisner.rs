//! The six-vertex real projective plane: Alexander self-duality and a
//! Stanley–Reisner ideal whose componentwise linearity depends on the field.

use cwlin::cli::scenarios::rp2_ideal;
use cwlin::criteria::{test_cwl_linear_part, CriteriaConfig};
use cwlin::resolution::betti_numbers;
use cwlin::simplicial::SimplicialComplex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = SimplicialComplex::real_projective_plane();
    println!("{d}");
    println!("self-dual: {}", d.alexander_dual() == d);
    for p in [2, 3, 31013] {
        let i = rp2_ideal(p)?;
        let v = test_cwl_linear_part(&i, &CriteriaConfig::default())?;
        println!("F_{p}: {:?}", v.decision);
        print!("{}", betti_numbers(&i)?);
    }
    Ok(())
}
