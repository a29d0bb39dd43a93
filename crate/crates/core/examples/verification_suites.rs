//! Runs every verification suite at a small size and prints the reports.
use involution_orbits::{run_suite, Result, Suite, SuiteOptions};

fn main() -> Result<()> {
    let opts = SuiteOptions { seed: 1, samples: 10, explore: false };
    let mut all_passed = true;
    for suite in Suite::ALL {
        let n = suite.bound().min(4);
        let report = run_suite(suite, n, opts)?.without_timing();
        all_passed &= report.passed();
        print!("{}", report.to_text());
    }
    println!("all passed: {all_passed}");
    Ok(())
}
