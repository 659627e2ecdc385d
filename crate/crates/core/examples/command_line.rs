// Drive the `phaseint` command surface in-process, the same way the
// binary does, and collect what it prints.
//
// ```bash
// cargo run --example command_line
// ```

use std::error::Error;

use phaseint::cli::run;

fn invoke(args: &[&str]) -> Result<(i32, String), Box<dyn Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("phaseint").chain(args.iter().copied()), &mut out, &mut err);
    let text = String::from_utf8(out)? + &String::from_utf8(err)?;
    Ok((code, text))
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for args in [
        &["table", "quartic", "--no-oracle"][..],
        &["stokes", "weber", "--from", "1", "--to", "5", "--points", "5"][..],
        &["itinerary", "pt_cubic", "--W", "1.55", "--s-im", "1"][..],
        &["table", "budden"][..],
    ] {
        let (code, text) = invoke(args)?;
        println!("$ phaseint {}   (exit {code})", args.join(" "));
        for line in text.lines().take(12) {
            println!("  {line}");
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
