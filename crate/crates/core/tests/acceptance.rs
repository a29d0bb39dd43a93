//! Acceptance criteria, one line of output per criterion.
//!
//! Oracles here are written independently of the library paths they check:
//! permutations come from Heap's algorithm, Bruhat comparisons from the
//! subword property, covers and chain lengths from brute force over the raw
//! order predicate.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};

use involution_orbits::closure::{d_set, e_set, is_chain, w0_times};
use involution_orbits::moves::{
    a_move, b_move, c_move, move_right, move_up, near_prime, support_law_violations,
};
use involution_orbits::perm::Arc;
use involution_orbits::poset::build_poset;
use involution_orbits::rank::{leq_bruhat, leq_star, melnikov_r, star_r};
use involution_orbits::verify::{check_covers_at, run_suite, Suite, SuiteOptions};
use involution_orbits::{enumerate_involutions, Involution, OrderKind, Permutation, RankMatrix};

type Check = std::result::Result<(), String>;

fn inv(s: &str, n: usize) -> Involution {
    Involution::parse(s, n).unwrap()
}

fn rm(rows: [[u32; 5]; 5]) -> RankMatrix {
    RankMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// All permutations of `1..=n` by Heap's algorithm.
fn heap_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        go(k - 1, a, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            go(k - 1, a, out);
        }
    }
    let mut a: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    go(n, &mut a, &mut out);
    out
}

fn inversions(w: &[usize]) -> usize {
    (0..w.len()).map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count()).sum()
}

/// A reduced word of `w` by bubble sort; letter `k` swaps positions `k, k+1`.
fn bubble_word(w: &[usize]) -> Vec<usize> {
    let mut a = w.to_vec();
    let mut word = Vec::new();
    while let Some(k) = (0..a.len().saturating_sub(1)).find(|&k| a[k] > a[k + 1]) {
        a.swap(k, k + 1);
        word.push(k);
    }
    word.reverse();
    word
}

/// Every product of a subword of a reduced word of `w`.
fn subword_set(w: &[usize]) -> HashSet<Vec<usize>> {
    let mut set: HashSet<Vec<usize>> = [(1..=w.len()).collect()].into();
    for k in bubble_word(w) {
        let next: Vec<Vec<usize>> = set
            .iter()
            .map(|u| {
                let mut v = u.clone();
                v.swap(k, k + 1);
                v
            })
            .collect();
        set.extend(next);
    }
    set
}

fn c01_rank_matrices() -> Check {
    let cases = [
        (melnikov_r(&inv("(3,1)(5,2)", 5)), rm([[0, 0, 1, 1, 2], [0, 0, 0, 0, 1], [0; 5], [0; 5], [0; 5]])),
        (melnikov_r(&inv("(2,1)(4,3)", 5)), rm([[0, 1, 1, 2, 2], [0, 0, 0, 1, 1], [0, 0, 0, 1, 1], [0; 5], [0; 5]])),
        (star_r(&inv("(4,1)(5,2)", 5)), rm([[0; 5], [1, 0, 0, 0, 0], [1, 2, 0, 0, 0], [1, 2, 2, 0, 0], [0, 1, 1, 1, 0]])),
        (star_r(&inv("(5,1)(4,2)", 5)), rm([[0; 5], [1, 0, 0, 0, 0], [1, 2, 0, 0, 0], [1, 2, 2, 0, 0], [1, 1, 1, 1, 0]])),
    ];
    for (k, (got, want)) in cases.iter().enumerate() {
        ensure(got == want, || format!("matrix {k}:\n{got}expected\n{want}"))?;
    }
    Ok(())
}

fn c02_counts() -> Check {
    let table = [1, 2, 4, 10, 26, 76, 232, 764];
    for n in 1..=8 {
        let oracle = heap_permutations(n)
            .iter()
            .filter(|w| (0..n).all(|k| w[w[k] - 1] == k + 1))
            .count();
        let got = enumerate_involutions(n).len();
        ensure(got == table[n - 1] && oracle == got, || format!("n={n}: {got} vs oracle {oracle}"))?;
    }
    Ok(())
}

fn c03_order_equivalence() -> Check {
    for n in 1..=8 {
        let r = run_suite(Suite::OrderEquivalence, n, SuiteOptions::default()).unwrap();
        ensure(r.passed(), || r.to_text())?;
    }
    // direct predicates on a slice of pairs, not only the cached keys
    let elems = enumerate_involutions(6);
    for t in &elems {
        for s in &elems {
            let a = leq_star(t, s).unwrap();
            let b = leq_bruhat(&t.to_permutation(), &s.to_permutation()).unwrap();
            ensure(a == b, || format!("tau={t} sigma={s}"))?;
        }
    }
    Ok(())
}

fn c04_subword_oracle() -> Check {
    for n in 1..=5 {
        let perms = heap_permutations(n);
        for w in &perms {
            let below = subword_set(w);
            let pw = Permutation::new(w.clone()).unwrap();
            for v in &perms {
                let pv = Permutation::new(v.clone()).unwrap();
                let got = leq_bruhat(&pv, &pw).unwrap();
                ensure(got == below.contains(v), || format!("v={v:?} w={w:?}: {got}"))?;
            }
        }
    }
    Ok(())
}

fn c05_cover_sets() -> Check {
    for n in 1..=6 {
        let poset = build_poset(n, OrderKind::Star).unwrap();
        let elems = enumerate_involutions(n);
        for s in &elems {
            let problems = check_covers_at(&poset, s).unwrap();
            ensure(problems.is_empty(), || format!("{s}: {problems:?}"))?;
            // brute-force covers from the raw predicate
            let strictly_below: Vec<&Involution> =
                elems.iter().filter(|t| *t != s && leq_star(t, s).unwrap()).collect();
            let covers: BTreeSet<Involution> = strictly_below
                .iter()
                .filter(|t| !strictly_below.iter().any(|w| w != *t && leq_star(t, w).unwrap()))
                .map(|t| (*t).clone())
                .collect();
            ensure(near_prime(s) == covers, || format!("{s}: near' differs from brute-force covers"))?;
        }
    }
    Ok(())
}

fn c06_support_law() -> Check {
    for n in 1..=7 {
        for s in enumerate_involutions(n) {
            let v = support_law_violations(&s);
            ensure(v.is_empty(), || format!("{s}: {v:?}"))?;
        }
    }
    Ok(())
}

fn c07_move_examples() -> Check {
    let n = 8;
    let checks = [
        (move_right(&inv("(3,1)(8,2)(7,6)", n), Arc::new(8, 2)).unwrap(), "(3,1)(8,4)(7,6)"),
        (move_up(&inv("(4,1)(7,2)(8,6)", n), Arc::new(7, 2)).unwrap(), "(4,1)(5,2)(8,6)"),
        (a_move(&inv("(5,1)(6,2)(8,4)", n), Arc::new(6, 2), Arc::new(8, 4)).ok(), "(5,1)(4,2)(8,6)"),
        (b_move(&inv("(8,1)(3,2)(5,4)(7,6)", n), Arc::new(5, 4), Arc::new(8, 1)).ok(), "(5,1)(3,2)(8,4)(7,6)"),
        (c_move(&inv("(4,1)(8,2)(7,6)", n), Arc::new(8, 2), 3, 5).ok(), "(4,1)(3,2)(8,5)(7,6)"),
    ];
    for (k, (got, want)) in checks.into_iter().enumerate() {
        ensure(got == Some(inv(want, n)), || format!("example {k}: got {got:?}, want {want}"))?;
    }
    Ok(())
}

fn suite_up_to(suite: Suite, max: usize, samples: usize) -> Check {
    for n in 1..=max {
        let r = run_suite(suite, n, SuiteOptions { seed: 0, samples, explore: false }).unwrap();
        ensure(r.passed(), || r.to_text())?;
    }
    Ok(())
}

fn c08_degenerations() -> Check {
    suite_up_to(Suite::Degeneration, 6, 0)
}

fn c09_rank_invariance() -> Check {
    suite_up_to(Suite::RankInvariance, 6, 100)
}

fn c10_dimension() -> Check {
    suite_up_to(Suite::Dimension, 6, 0)
}

fn c11_closure() -> Check {
    suite_up_to(Suite::Closure, 6, 50)
}

fn c12_chains() -> Check {
    let w = w0_times(&inv("(8,2)(6,3)", 8));
    ensure(w.one_line() == [8, 1, 3, 5, 4, 6, 2, 7], || format!("w = {w}"))?;
    let listed: BTreeSet<(usize, usize)> = [
        (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (3, 2), (4, 2), (4, 4), (5, 2), (6, 2),
    ]
    .into();
    let d = d_set(&w);
    ensure(listed.is_subset(&d), || format!("listed diagram cells missing from {d:?}"))?;
    // row 1 of the drawn diagram is grey in columns 1..7, so (1,1) belongs too
    let mut drawn = listed.clone();
    drawn.insert((1, 1));
    ensure(d == drawn, || format!("diagram {d:?}"))?;
    ensure(d.len() == inversions(w.one_line()), || "diagram size differs from length".into())?;
    let e: BTreeSet<(usize, usize)> = [(1, 7), (4, 4), (6, 2)].into();
    ensure(e_set(&w) == e, || format!("essential set {:?}", e_set(&w)))?;

    suite_up_to(Suite::EssentialSet, 4, 0)?;

    for n in 1..=7 {
        let phi = n * (n - 1) / 2;
        for s in enumerate_involutions(n) {
            let l_sigma = inversions(s.to_permutation().one_line());
            let l_w = inversions(w0_times(&s).one_line());
            ensure(l_w + l_sigma == phi, || format!("{s}: {l_w} + {l_sigma} != {phi}"))?;
            if is_chain(&s) {
                ensure(w0_times(&s).length() == phi - s.length(), || format!("{s}"))?;
            }
        }
    }
    Ok(())
}

fn c13_graded() -> Check {
    for n in 1..=7 {
        let elems = enumerate_involutions(n);
        let m = elems.len();
        let le: Vec<Vec<bool>> =
            elems.iter().map(|a| elems.iter().map(|b| leq_star(a, b).unwrap()).collect()).collect();
        // lower covers by brute force
        let covers: Vec<Vec<usize>> = (0..m)
            .map(|a| {
                (0..m)
                    .filter(|&b| b != a && le[b][a])
                    .filter(|&b| !(0..m).any(|w| w != a && w != b && le[b][w] && le[w][a]))
                    .collect()
            })
            .collect();
        let top = elems.iter().position(|s| *s == Involution::longest(n)).unwrap();
        let bottom = elems.iter().position(|s| *s == Involution::identity(n)).unwrap();
        ensure((0..m).all(|a| le[bottom][a] && le[a][top]), || format!("n={n}: bounds"))?;
        // lengths of all maximal chains from the top, memoized as (min, max)
        let mut memo: Vec<Option<(usize, usize)>> = vec![None; m];
        fn span(a: usize, covers: &[Vec<usize>], memo: &mut Vec<Option<(usize, usize)>>) -> (usize, usize) {
            if let Some(v) = memo[a] {
                return v;
            }
            let v = if covers[a].is_empty() {
                (0, 0)
            } else {
                let spans: Vec<(usize, usize)> = covers[a].iter().map(|&b| span(b, covers, memo)).collect();
                (
                    spans.iter().map(|s| s.0).min().unwrap() + 1,
                    spans.iter().map(|s| s.1).max().unwrap() + 1,
                )
            };
            memo[a] = Some(v);
            v
        }
        let (lo, hi) = span(top, &covers, &mut memo);
        ensure(lo == hi, || format!("n={n}: maximal chains have lengths {lo}..{hi}"))?;
        let r = run_suite(Suite::Graded, n, SuiteOptions::default()).unwrap();
        ensure(r.passed(), || r.to_text())?;
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Check);

#[test]
fn acceptance() {
    let criteria: [Criterion; 13] = [
        ("rank matrices of the four reference examples", c01_rank_matrices),
        ("involution counts against the n!-filter oracle, n<=8", c02_counts),
        ("<=* agrees with Bruhat order on all pairs, n<=8", c03_order_equivalence),
        ("Bruhat rank criterion agrees with the subword oracle, n<=5", c04_subword_oracle),
        ("move sets equal L-sets and Near' equals the covers, n<=6", c05_cover_sets),
        ("support size law for every move, n<=7", c06_support_law),
        ("the five worked move examples at n=8", c07_move_examples),
        ("degeneration curves match closed forms and limits, n<=6", c08_degenerations),
        ("rank profile invariant under 100 random g, n<=6", c09_rank_invariance),
        ("orbit dimension equals length, n<=6", c10_dimension),
        ("orbit points and lower X_tau^t lie in Z_sigma, n<=6", c11_closure),
        ("diagram, essential set and chain identities", c12_chains),
        ("<=* is graded, n<=7", c13_graded),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = match catch_unwind(AssertUnwindSafe(run)) {
            Ok(r) => r,
            Err(_) => Err("panicked".to_string()),
        };
        match outcome {
            Ok(()) => println!("[{:02}] PASS {name}", k + 1),
            Err(msg) => {
                println!("[{:02}] FAIL {name}: {msg}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
