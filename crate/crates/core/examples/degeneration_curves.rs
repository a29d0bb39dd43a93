//! Explicit curves in an orbit whose limit is a smaller orbit representative.
use involution_orbits::moves::all_moves;
use involution_orbits::orbit::{closed_form, degeneration};
use involution_orbits::{Involution, Result};

fn main() -> Result<()> {
    let sigma = Involution::parse("(4,1)(5,2)", 5)?;
    for (mv, tau) in all_moves(&sigma) {
        let d = degeneration(&sigma, &mv)?;
        let word: Vec<String> = d.word.iter().map(ToString::to_string).collect();
        println!("{mv}: {sigma} ~> {tau}");
        println!("  word  {}", word.join(" "));
        println!("  y_eps\n{}", d.y);
        println!("  matches closed form: {}", d.y == closed_form(&sigma, &mv)?);
        println!("  limit\n{}", d.limit);
    }
    Ok(())
}
