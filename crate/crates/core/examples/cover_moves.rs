//! Every move at an involution, and the near sets they generate.
use involution_orbits::moves::{all_moves, NearSets};
use involution_orbits::{build_poset, Involution, OrderKind, Result};

fn main() -> Result<()> {
    let n = 6;
    let sigma = Involution::parse("(6,2)(5,1)(4,3)", n)?;
    println!("moves at {sigma}:");
    for (mv, tau) in all_moves(&sigma) {
        println!("  {mv:<16} -> {tau}");
    }

    let sets = NearSets::of(&sigma);
    let poset = build_poset(n, OrderKind::Star)?;
    let covers = poset.lower_covers(&sigma)?;
    println!("near' = {:?}", sets.near_prime().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("lower covers = {:?}", covers.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("near' equals the covers: {}", sets.near_prime() == covers);
    Ok(())
}
