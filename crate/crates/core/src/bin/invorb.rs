use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use involution_orbits::moves::NearSets;
use involution_orbits::rank::{melnikov_r, star_r};
use involution_orbits::verify::{emit_hasse, run_suite, HasseFormat, Suite, SuiteOptions};
use involution_orbits::{enumerate_involutions, Involution, OrderKind, Result};

#[derive(Parser)]
#[command(name = "invorb", about = "Borel orbits of involutions: orders, covers and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Star,
    Melnikov,
    Bruhat,
}

impl From<Order> for OrderKind {
    fn from(o: Order) -> Self {
        match o {
            Order::Star => OrderKind::Star,
            Order::Melnikov => OrderKind::Melnikov,
            Order::Bruhat => OrderKind::Bruhat,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List all involutions of size n.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the rank matrix of an involution (R*_σ with --star).
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        star: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide whether tau <= sigma.
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        tau: String,
        #[arg(long, value_enum, default_value = "star")]
        order: Order,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Move-generated co-covers of an involution.
    Near {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hasse diagram as DOT (text) or JSON.
    Hasse {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "star")]
        order: Order,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        explore: bool,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn names(set: &std::collections::BTreeSet<Involution>) -> Vec<String> {
    set.iter().map(ToString::to_string).collect()
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Enum { n, format } => {
            let all: Vec<String> = enumerate_involutions(n).iter().map(ToString::to_string).collect();
            match format {
                Format::Text => all.iter().for_each(|s| println!("{s}")),
                Format::Json => println!("{}", json!({"n": n, "count": all.len(), "elements": all})),
            }
        }
        Command::Rank { n, sigma, star, format } => {
            let sigma = Involution::parse(&sigma, n)?;
            let r = if star { star_r(&sigma) } else { melnikov_r(&sigma) };
            match format {
                Format::Text => print!("{r}"),
                Format::Json => println!("{}", serde_json::to_string(&r).expect("serializes")),
            }
        }
        Command::Compare { n, sigma, tau, order, format } => {
            let sigma = Involution::parse(&sigma, n)?;
            let tau = Involution::parse(&tau, n)?;
            let order = OrderKind::from(order);
            let le = order.leq(&tau, &sigma)?;
            match format {
                Format::Text => println!("tau <= sigma: {le}"),
                Format::Json => println!(
                    "{}",
                    json!({"order": order.name(), "sigma": sigma.to_string(), "tau": tau.to_string(), "leq": le})
                ),
            }
        }
        Command::Near { n, sigma, format } => {
            let sigma = Involution::parse(&sigma, n)?;
            let sets = NearSets::of(&sigma);
            let rows = [
                ("minus", names(&sets.minus)),
                ("zero", names(&sets.zero)),
                ("plus", names(&sets.plus)),
                ("prime", names(&sets.prime)),
                ("near", names(&sets.near())),
                ("near_prime", names(&sets.near_prime())),
            ];
            match format {
                Format::Text => {
                    for (k, v) in &rows {
                        println!("{k}: {}", v.join(" "));
                    }
                }
                Format::Json => {
                    let obj: serde_json::Map<String, serde_json::Value> =
                        rows.into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
                    println!("{}", serde_json::Value::Object(obj));
                }
            }
        }
        Command::Hasse { n, order, format } => {
            let fmt = match format {
                Format::Text => HasseFormat::Dot,
                Format::Json => HasseFormat::Json,
            };
            print!("{}", emit_hasse(n, order.into(), fmt)?);
        }
        Command::Verify { suite, n, seed, samples, explore, timing, format } => {
            let suite: Suite = suite.parse()?;
            let mut report = run_suite(suite, n, SuiteOptions { seed, samples, explore })?;
            if !timing {
                report = report.without_timing();
            }
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
