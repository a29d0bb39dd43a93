//! Hasse diagram of the star order, written as DOT.
//!
//! `cargo run --example hasse_diagram -- 4 | dot -Tsvg > hasse.svg`
use involution_orbits::{build_poset, OrderKind, Result};

fn main() -> Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let poset = build_poset(n, OrderKind::Star)?;
    eprintln!(
        "n={n}: {} elements, {} covers, graded: {}",
        poset.len(),
        poset.num_covers(),
        poset.is_graded()
    );
    print!("{}", poset.to_dot());
    Ok(())
}
