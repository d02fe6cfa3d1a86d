//! The line-oriented input format: parse, print, reparse.

use cwlin::cli::{parse_input, print_input};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        "ring 3 4\nideal 2x1^2 - x2*x3, x4^2",
        "complex 5 facets: 123 345 {2,4}",
        "ring 31013 2\nmatrix 3 2 rowdeg 0 0 1 coldeg 1 2 entries:\n  x2 0\n  -x1 x2^2\n  0 -x1",
        "degmatrix 3 2: 1 0 / 2 1 / 2 1",
        "symmetric doubled: 2 0 2",
    ] {
        let parsed = parse_input(text, None)?;
        let printed = print_input(&parsed);
        print!("{printed}");
        assert_eq!(print_input(&parse_input(&printed, None)?), printed);
    }
    match parse_input("ring 31013 2\nideal x1^2 + x2", None) {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
