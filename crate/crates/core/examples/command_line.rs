//! Driving the command-line front end in-process.

use cwlin::cli::{run, scenarios::RP2};

fn main() {
    for args in [
        vec!["cwlin", "cwl-test", "--method", "linear-part", "--char", "2,3"],
        vec!["cwlin", "alexander-dual"],
    ] {
        let out = run(args, &mut RP2.as_bytes());
        print!("{}", out.stdout);
        println!("exit {}", out.code);
    }
    let out = run(["cwlin", "paper-examples"], &mut std::io::empty());
    print!("{}", out.stdout);
}
