//! Rank matrices of an involution and the orders they define.
use involution_orbits::rank::{leq_bruhat, melnikov_r, star_r};
use involution_orbits::{Involution, OrderKind, Result};

fn main() -> Result<()> {
    let sigma = Involution::parse("(5,1)(4,2)", 5)?;
    let tau = Involution::parse("(4,1)(5,2)", 5)?;

    println!("sigma = {sigma}");
    println!("R_sigma:\n{}", melnikov_r(&sigma));
    println!("R*_sigma:\n{}", star_r(&sigma));

    for order in [OrderKind::Star, OrderKind::Melnikov, OrderKind::Bruhat] {
        println!("{order}: tau <= sigma is {}", order.leq(&tau, &sigma)?);
    }
    // the star order is Bruhat order restricted to involutions
    let b = leq_bruhat(&tau.to_permutation(), &sigma.to_permutation())?;
    println!("as permutations: {b}");
    Ok(())
}
