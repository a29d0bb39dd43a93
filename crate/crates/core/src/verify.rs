//! Verification suites over all involutions of a given size, with
//! replayable counterexample reports.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closure::{
    essential_reduction_check, explore_observations, is_chain, script_m, z_contains, ZSpec,
};
use crate::error::{Error, Result};
use crate::field::Q;
use crate::matrix::QMatrix;
use crate::moves::{all_moves, NearSets};
use crate::orbit::{
    act, closed_form, degeneration, delta_minors, f_sigma_xi, orbit_dimension, random_borel_with,
    random_diagonal_with, rank_profile, x_transpose, XiMap,
};
use crate::perm::{all_permutations, enumerate_involutions, Involution};
use crate::poset::{build_poset, Poset};
use crate::rank::{star_r, OrderKind};

/// Default bound on random matrix entries.
pub const SAMPLE_BOUND: i64 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Counts,
    OrderEquivalence,
    Covers,
    Graded,
    Dimension,
    RankInvariance,
    Degeneration,
    Closure,
    EssentialSet,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Counts,
        Suite::OrderEquivalence,
        Suite::Covers,
        Suite::Graded,
        Suite::Dimension,
        Suite::RankInvariance,
        Suite::Degeneration,
        Suite::Closure,
        Suite::EssentialSet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::OrderEquivalence => "order-equivalence",
            Suite::Covers => "covers",
            Suite::Graded => "graded",
            Suite::Dimension => "dimension",
            Suite::RankInvariance => "rank-invariance",
            Suite::Degeneration => "degeneration",
            Suite::Closure => "closure",
            Suite::EssentialSet => "essential-set",
        }
    }

    /// Largest `n` the suite accepts.
    pub fn bound(self) -> usize {
        match self {
            Suite::Counts | Suite::OrderEquivalence | Suite::Graded => 8,
            Suite::Covers
            | Suite::Dimension
            | Suite::RankInvariance
            | Suite::Degeneration
            | Suite::Closure => 6,
            Suite::EssentialSet => 4,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One counterexample: enough to rerun the failing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Failure {
    fn new(input: impl Into<String>, detail: impl Into<String>) -> Self {
        Failure { input: input.into(), detail: detail.into(), seed: None }
    }

    fn seeded(input: impl Into<String>, detail: impl Into<String>, seed: u64) -> Self {
        Failure { input: input.into(), detail: detail.into(), seed: Some(seed) }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.input, self.detail)?;
        if let Some(seed) = self.seed {
            write!(f, " [seed {seed}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub checked: usize,
    /// Free-form counts that are not pass/fail (e.g. exploratory observations).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Drops the timing so the report depends only on its inputs.
    pub fn without_timing(mut self) -> Self {
        self.wall_time = None;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Smallest failure first, then the aggregate line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(first) = self.failures.first() {
            out.push_str(&format!("counterexample: {first}\n"));
        }
        let status = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status} {} n={} checked={} failures={}",
            self.suite,
            self.n,
            self.checked,
            self.failures.len()
        ));
        if let Some(t) = self.wall_time {
            out.push_str(&format!(" time={t:.3}s"));
        }
        out.push('\n');
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        for extra in self.failures.iter().skip(1) {
            out.push_str(&format!("failure: {extra}\n"));
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub samples: usize,
    pub explore: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0, samples: 100, explore: false }
    }
}

/// Number of involutions counted by filtering all `n!` permutations.
pub fn involution_count_by_filter(n: usize) -> usize {
    all_permutations(n).iter().filter(|w| w.is_involution()).count()
}

/// `t(n) = t(n-1) + (n-1) t(n-2)`.
pub fn telephone(n: usize) -> usize {
    let (mut a, mut b) = (1usize, 1usize);
    for k in 1..n {
        (a, b) = (b, b + k * a);
    }
    b
}

/// Per-sample seed for random data tied to `(seed, element, sample)`.
pub fn sample_seed(seed: u64, element: usize, sample: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((element as u64) << 32) ^ sample as u64
}

pub fn run_suite(suite: Suite, n: usize, opts: SuiteOptions) -> Result<SuiteReport> {
    if n > suite.bound() {
        return Err(Error::BoundExceeded { what: suite.name().into(), n, bound: suite.bound() });
    }
    let start = Instant::now();
    let (checked, failures, notes) = match suite {
        Suite::Counts => counts(n),
        Suite::OrderEquivalence => order_equivalence(n),
        Suite::Covers => covers(n)?,
        Suite::Graded => graded(n)?,
        Suite::Dimension => dimension(n),
        Suite::RankInvariance => rank_invariance(n, opts),
        Suite::Degeneration => degenerations(n),
        Suite::Closure => closure(n, opts)?,
        Suite::EssentialSet => essential_set(n),
    };
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        n,
        seed: opts.seed,
        samples: opts.samples,
        checked,
        notes,
        failures,
        wall_time: Some(start.elapsed().as_secs_f64()),
    })
}

type Outcome = (usize, Vec<Failure>, Vec<String>);

fn counts(n: usize) -> Outcome {
    let failures = (1..=n)
        .filter_map(|k| {
            let got = enumerate_involutions(k).len();
            let oracle = involution_count_by_filter(k);
            let expect = telephone(k);
            (got != oracle || got != expect).then(|| {
                Failure::new(format!("n={k}"), format!("enumerated {got}, filter {oracle}, recurrence {expect}"))
            })
        })
        .collect();
    (n, failures, Vec::new())
}

fn order_equivalence(n: usize) -> Outcome {
    let elems = enumerate_involutions(n);
    let star: Vec<_> = elems.iter().map(|s| OrderKind::Star.key(s)).collect();
    let bruhat: Vec<_> = elems.iter().map(|s| OrderKind::Bruhat.key(s)).collect();
    let failures: Vec<Failure> = (0..elems.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let (star, bruhat, elems) = (&star, &bruhat, &elems);
            (0..elems.len()).filter_map(move |b| {
                let s = OrderKind::Star.key_le(&star[a], &star[b]);
                let w = OrderKind::Bruhat.key_le(&bruhat[a], &bruhat[b]);
                (s != w).then(|| {
                    Failure::new(
                        format!("tau={} sigma={}", elems[a], elems[b]),
                        format!("star {s}, bruhat {w}"),
                    )
                })
            })
        })
        .collect();
    (elems.len() * elems.len(), failures, Vec::new())
}

fn diff(name: &str, got: &BTreeSet<Involution>, want: &BTreeSet<Involution>) -> Option<String> {
    (got != want).then(|| {
        let show = |s: &BTreeSet<Involution>| s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        format!("{name}: moves give {{{}}}, order gives {{{}}}", show(got), show(want))
    })
}

/// Move sets against L-sets, `Near′` against the covers, and the support-size
/// law for every move.
pub fn check_covers_at(poset: &Poset, sigma: &Involution) -> Result<Vec<String>> {
    let near = NearSets::of(sigma);
    let l = poset.l_sets(sigma)?;
    let covers = poset.lower_covers(sigma)?;
    let mut problems: Vec<String> = [
        diff("N-", &near.minus, &l.minus),
        diff("N0", &near.zero, &l.zero),
        diff("N+", &near.plus, &l.plus),
        diff("N'", &near.prime, &l.prime),
        diff("Near'", &near.near_prime(), &covers),
        diff("L*", &l.star, &covers),
    ]
    .into_iter()
    .flatten()
    .collect();
    let s = sigma.support_size() as i64;
    for (mv, tau) in all_moves(sigma) {
        let want = s + i64::from(mv.kind.support_delta());
        if tau.support_size() as i64 != want {
            problems.push(format!("{mv} gives {tau} with s={}", tau.support_size()));
        }
        if tau == *sigma || !poset.leq(&tau, sigma)? {
            problems.push(format!("{mv} gives {tau}, not strictly below"));
        }
    }
    Ok(problems)
}

fn covers(n: usize) -> Result<Outcome> {
    let poset = build_poset(n, OrderKind::Star)?;
    let results: Vec<Result<Vec<Failure>>> = poset
        .elements()
        .par_iter()
        .map(|sigma| {
            Ok(check_covers_at(&poset, sigma)?
                .into_iter()
                .map(|p| Failure::new(sigma.to_string(), p))
                .collect())
        })
        .collect();
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    Ok((poset.len(), failures, Vec::new()))
}

fn graded(n: usize) -> Result<Outcome> {
    let poset = build_poset(n, OrderKind::Star)?;
    let mut failures = Vec::new();
    let (lo, hi) = poset.heights();
    let bottom = poset.minimal_elements();
    let top = poset.maximal_elements();
    if bottom != [poset.index_of(&Involution::identity(n))?] {
        failures.push(Failure::new(format!("n={n}"), "identity is not the unique minimum"));
    }
    if top != [poset.index_of(&Involution::longest(n))?] {
        failures.push(Failure::new(format!("n={n}"), "w0 is not the unique maximum"));
    }
    for (k, sigma) in poset.elements().iter().enumerate() {
        if lo[k] != hi[k] {
            failures.push(Failure::new(
                sigma.to_string(),
                format!("chains from id have lengths {} to {}", lo[k], hi[k]),
            ));
        }
    }
    Ok((poset.len(), failures, Vec::new()))
}

fn dimension(n: usize) -> Outcome {
    let elems = enumerate_involutions(n);
    let failures = elems
        .par_iter()
        .filter_map(|sigma| {
            let d = orbit_dimension(sigma);
            let l = sigma.length();
            (d != l).then(|| Failure::new(sigma.to_string(), format!("dimension {d}, length {l}")))
        })
        .collect();
    (elems.len(), failures, Vec::new())
}

fn rank_invariance(n: usize, opts: SuiteOptions) -> Outcome {
    let elems = enumerate_involutions(n);
    let w0 = Involution::longest(n);
    let failures: Vec<Failure> = elems
        .par_iter()
        .enumerate()
        .flat_map_iter(|(e, sigma)| {
            let x: QMatrix = x_transpose(sigma);
            let want = star_r(sigma);
            let mut out = Vec::new();
            for k in 0..opts.samples {
                let seed = sample_seed(opts.seed, e, k);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let g = random_borel_with(&mut rng, n, SAMPLE_BOUND);
                let y = act(&g, &x).expect("sampled element is invertible upper-triangular");
                if rank_profile(&y) != want {
                    out.push(Failure::seeded(sigma.to_string(), "rank profile changed under g", seed));
                }
                if *sigma == w0 && delta_minors(&y).iter().any(num_traits::Zero::is_zero) {
                    out.push(Failure::seeded(sigma.to_string(), "vanishing Δ on the open orbit", seed));
                }
                let d = random_diagonal_with(&mut rng, n, SAMPLE_BOUND);
                let yd = act(&d, &x).expect("diagonal is invertible");
                let xi: Vec<Q> = sigma.arcs().iter().map(|a| d[(a.i, a.i)].clone() / d[(a.j, a.j)].clone()).collect();
                let f = f_sigma_xi(sigma, &XiMap::from_values(sigma, &xi)).expect("xi is nonzero");
                if yd != f || rank_profile(&yd) != want {
                    out.push(Failure::seeded(sigma.to_string(), "diagonal action leaves the torus family", seed));
                }
            }
            out
        })
        .collect();
    (elems.len() * opts.samples, failures, Vec::new())
}

fn degenerations(n: usize) -> Outcome {
    let elems = enumerate_involutions(n);
    let per: Vec<(usize, Vec<Failure>)> = elems
        .par_iter()
        .map(|sigma| {
            let moves = all_moves(sigma);
            let mut out = Vec::new();
            for (mv, tau) in &moves {
                let input = format!("{sigma} {mv}");
                match (degeneration(sigma, mv), closed_form(sigma, mv)) {
                    (Ok(d), Ok(c)) => {
                        if d.y != c {
                            out.push(Failure::new(input.clone(), "curve differs from its closed form"));
                        }
                        if d.limit != x_transpose(tau) || d.tau != *tau {
                            out.push(Failure::new(input, format!("limit is not X^t of {tau}")));
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => out.push(Failure::new(input, e.to_string())),
                }
            }
            (moves.len(), out)
        })
        .collect();
    let checked = per.iter().map(|(k, _)| k).sum();
    (checked, per.into_iter().flat_map(|(_, f)| f).collect(), Vec::new())
}

fn closure(n: usize, opts: SuiteOptions) -> Result<Outcome> {
    let poset = build_poset(n, OrderKind::Star)?;
    let elems = poset.elements();
    let samples = opts.samples;
    let per: Vec<(usize, usize, Vec<Failure>)> = elems
        .par_iter()
        .enumerate()
        .map(|(e, sigma)| {
            let spec = ZSpec::of(sigma);
            let x: QMatrix = x_transpose(sigma);
            let mut out = Vec::new();
            let mut checked = 0;
            for k in 0..samples {
                let seed = sample_seed(opts.seed, e, k);
                let g = random_borel_with(&mut ChaCha8Rng::seed_from_u64(seed), n, SAMPLE_BOUND);
                let y = act(&g, &x).expect("sampled element is invertible upper-triangular");
                checked += 1;
                if !z_contains(&spec, &y).expect("same size, strictly lower") {
                    out.push(Failure::seeded(sigma.to_string(), "orbit point outside Z", seed));
                }
            }
            let m_sigma = script_m(sigma);
            let mut unnested = 0;
            for (t, tau) in elems.iter().enumerate() {
                if !poset.leq_index(t, e) {
                    continue;
                }
                checked += 1;
                if !z_contains(&spec, &x_transpose(tau)).expect("same size, strictly lower") {
                    out.push(Failure::new(format!("sigma={sigma} tau={tau}"), "X_tau^t outside Z_sigma"));
                }
                let r_tau = star_r(tau);
                if m_sigma.iter().any(|&(r, s)| r_tau.get(r, s) != 0) {
                    out.push(Failure::new(format!("sigma={sigma} tau={tau}"), "R*_tau nonzero on M_sigma"));
                }
                if !m_sigma.is_subset(&script_m(tau)) {
                    unnested += 1;
                }
            }
            (checked, unnested, out)
        })
        .collect();
    let checked = per.iter().map(|(k, _, _)| k).sum();
    let unnested: usize = per.iter().map(|(_, u, _)| u).sum();
    let failures = per.into_iter().flat_map(|(_, _, f)| f).collect();
    let mut notes = vec![format!("{unnested} comparable pairs with M_sigma not inside M_tau")];
    if opts.explore {
        let obs = explore_observations(elems);
        notes.push(format!("explore: {} pairs with X_tau^t in Z_sigma and tau not below sigma", obs.len()));
        notes.extend(obs.iter().map(|(s, t)| format!("explore: sigma={s} tau={t}")));
    }
    Ok((checked, failures, notes))
}

fn essential_set(n: usize) -> Outcome {
    let chains: Vec<Involution> = enumerate_involutions(n).into_iter().filter(is_chain).collect();
    let failures = chains
        .par_iter()
        .filter_map(|sigma| match essential_reduction_check(sigma, 2, n) {
            Ok(true) => None,
            Ok(false) => Some(Failure::new(sigma.to_string(), "essential bounds do not imply all bounds over F_2")),
            Err(e) => Some(Failure::new(sigma.to_string(), e.to_string())),
        })
        .collect();
    (chains.len(), failures, Vec::new())
}

/// Output format of a Hasse diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HasseFormat {
    Dot,
    Json,
}

pub fn emit_hasse(n: usize, order: OrderKind, format: HasseFormat) -> Result<String> {
    let poset = build_poset(n, order)?;
    Ok(match format {
        HasseFormat::Dot => poset.to_dot(),
        HasseFormat::Json => poset.to_json(),
    })
}
