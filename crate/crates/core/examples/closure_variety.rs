//! Defining data of the closure variety and the essential set for a chain.
use involution_orbits::closure::{d_set, e_set, essential_reduction_check, is_chain, script_m, w0_times, z_contains};
use involution_orbits::orbit::{act, random_borel, x_transpose};
use involution_orbits::{enumerate_involutions, Involution, Result, ZSpec};

fn main() -> Result<()> {
    // quadrics appear once arcs nest
    for sigma in enumerate_involutions(5).iter().filter(|s| !script_m(s).is_empty()).take(3) {
        println!("{sigma}: quadric cells {:?}", script_m(sigma));
    }

    let n = 8;
    let sigma = Involution::parse("(8,2)(6,3)", n)?;
    let spec = ZSpec::of(&sigma);
    println!("sigma = {sigma}, chain: {}", is_chain(&sigma));
    println!("quadric cells: {:?}", script_m(&sigma));
    println!("spec: {}", spec.to_json());

    let y = act(&random_borel(n, 1, 3), &x_transpose(&sigma))?;
    println!("random orbit point lies in Z: {}", z_contains(&spec, &y)?);

    let w = w0_times(&sigma);
    println!("w0*sigma = {w}");
    println!("D = {:?}", d_set(&w));
    println!("E = {:?}", e_set(&w));

    let small = Involution::parse("(4,1)(3,2)", 4)?;
    println!("{small}: essential conditions cut out Z over F_2: {}", essential_reduction_check(&small, 2, 4)?);
    Ok(())
}
