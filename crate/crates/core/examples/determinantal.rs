//! Maximal minors of a 3x2 matrix: degree-data classification, the height
//! test on the linearized matrix, and the Eagon–Northcott companion.

use cwlin::classifiers::{
    classify_determinantal, determinantal_companion, eagon_northcott_table, test_cwl_determinantal,
    DeterminantalInput,
};
use cwlin::cli::scenarios::determinantal_3x2;
use cwlin::matrix::DegreeMatrix;
use cwlin::resolution::betti_numbers;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = determinantal_3x2()?;
    println!("{a}");
    let input = DeterminantalInput::from_matrix(&a)?;
    println!("m = {}, c = {}, e = {}", input.m(), input.c(), input.e());
    println!("{}", input.degrees());
    println!("classifier: {:?}", classify_determinantal(&input)?.decision);
    println!("height test: {:?}", test_cwl_determinantal(&a)?.decision);
    let minors = a.maximal_minors_ideal();
    println!("I = {minors}");
    print!("{}", betti_numbers(&minors)?);
    // a 4x2 degree matrix with c = 3 and a quadratic last row
    let wide = DeterminantalInput::from_degrees(DegreeMatrix::from_degrees(&[0, 0, 0, -1], &[1, 1]))?;
    let j = determinantal_companion(&wide)?;
    println!("{}: {:?}", wide.degrees(), classify_determinantal(&wide)?.decision);
    println!("companion {j}, EK = EN: {}", j.ek_betti()? == eagon_northcott_table(wide.degrees())?);
    Ok(())
}
