//! Orbit dimensions against involution length, plus the subregular family.
use involution_orbits::orbit::{orbit_dimension, subregular_involution, unipotent_orbit_dimension};
use involution_orbits::{enumerate_involutions, Result};

fn main() -> Result<()> {
    let n = 5;
    let mut agree = 0;
    let all = enumerate_involutions(n);
    for sigma in &all {
        let d = orbit_dimension(sigma);
        agree += usize::from(d == sigma.length());
        println!("{:<14} dim {d:>2}  length {:>2}", sigma.to_string(), sigma.length());
    }
    println!("{agree}/{} agree", all.len());

    // exploratory: where the involutions next to w0 sit among all orbit dimensions
    let n = 6;
    for (label, dim) in [("B", orbit_dimension as fn(&_) -> usize), ("U", unipotent_orbit_dimension)] {
        let mut dims: Vec<usize> = enumerate_involutions(n).iter().map(dim).collect();
        dims.sort_unstable_by(|a, b| b.cmp(a));
        dims.dedup();
        println!("n={n}: largest {label}-orbit dimensions {:?}", &dims[..3]);
    }
    for j in 1..n / 2 {
        let s = subregular_involution(n, j)?;
        println!(
            "  j={j} {s}  dim {}  unipotent dim {}  l-s = {}",
            orbit_dimension(&s),
            unipotent_orbit_dimension(&s),
            s.length() - s.support_size()
        );
    }
    Ok(())
}
