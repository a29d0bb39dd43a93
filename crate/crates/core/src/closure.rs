//! The variety `Z_σ` of strictly lower-triangular matrices cut out by the
//! rank bounds `R*_σ` and the quadrics `γ_{r,s} = (A²)_{r,s}` on `𝓜_σ`, and
//! the matrix-Schubert essential-set machinery used for chains.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Q;
use crate::matrix::{Matrix, QMatrix};
use crate::perm::{Arc, Involution, Permutation};
use crate::rank::{star_r, RankMatrix};

pub type Cell = (usize, usize);

/// `S_σ`: maximal arcs in the `Φ`-order.
pub fn maximal_support(sigma: &Involution) -> Vec<Arc> {
    let arcs = sigma.arcs();
    arcs.iter().copied().filter(|a| !arcs.iter().any(|b| b.gt_phi(a))).collect()
}

/// `𝓜_σ`: cells of `Φ` strictly above some element of `S_σ`.
pub fn script_m(sigma: &Involution) -> BTreeSet<Cell> {
    let n = sigma.n();
    let maxima = maximal_support(sigma);
    let mut out = BTreeSet::new();
    for r in 1..=n {
        for s in 1..r {
            let cell = Arc::new(r, s);
            if maxima.iter().any(|m| cell.gt_phi(m)) {
                out.insert((r, s));
            }
        }
    }
    out
}

/// `γ_{r,s}(A) = Σ_{s<k<r} A_{r,k} A_{k,s}`.
pub fn gamma(a: &QMatrix, r: usize, s: usize) -> Q {
    let mut acc = Q::zero();
    for k in s + 1..r {
        let (x, y) = (&a[(r, k)], &a[(k, s)]);
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// The defining data of `Z_σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSpec {
    pub sigma: Involution,
    pub rank_bounds: RankMatrix,
    pub quadric_cells: BTreeSet<Cell>,
}

#[derive(Serialize, Deserialize)]
struct ZSpecJson {
    sigma: String,
    rank_bounds: RankMatrix,
    quadric_cells: Vec<[usize; 2]>,
}

impl ZSpec {
    pub fn of(sigma: &Involution) -> Self {
        ZSpec { sigma: sigma.clone(), rank_bounds: star_r(sigma), quadric_cells: script_m(sigma) }
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    /// `{"sigma", "rank_bounds", "quadric_cells": [[r, s], ...]}`.
    pub fn to_json(&self) -> String {
        let json = ZSpecJson {
            sigma: self.sigma.to_string(),
            rank_bounds: self.rank_bounds.clone(),
            quadric_cells: self.quadric_cells.iter().map(|&(r, s)| [r, s]).collect(),
        };
        serde_json::to_string(&json).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let json: ZSpecJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let sigma = Involution::parse(&json.sigma, json.rank_bounds.n())?;
        Ok(ZSpec {
            sigma,
            rank_bounds: json.rank_bounds,
            quadric_cells: json.quadric_cells.into_iter().map(|[r, s]| (r, s)).collect(),
        })
    }
}

/// Membership of a strictly lower-triangular `A` in `Z_σ`.
pub fn z_contains(spec: &ZSpec, a: &QMatrix) -> Result<bool> {
    let n = spec.n();
    if a.rows() != n || a.cols() != n {
        return Err(Error::SizeMismatch { left: n, right: a.rows() });
    }
    if !a.is_strictly_lower() {
        return Err(Error::NotStrictlyLower);
    }
    for &(r, s) in &spec.quadric_cells {
        if !gamma(a, r, s).is_zero() {
            return Ok(false);
        }
    }
    for i in 2..=n {
        for j in 1..i {
            if a.pi_rank(i, j) as u32 > spec.rank_bounds.get(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the arcs are totally ordered in the `Φ`-order.
pub fn is_chain(sigma: &Involution) -> bool {
    let arcs = sigma.arcs();
    arcs.iter()
        .enumerate()
        .all(|(k, a)| arcs[k + 1..].iter().all(|b| a.le_phi(b) || b.le_phi(a)))
}

/// `w₀σ` as a permutation.
pub fn w0_times(sigma: &Involution) -> Permutation {
    Permutation::longest(sigma.n()).compose(&sigma.to_permutation())
}

/// `𝒟(w) = {(i, j) : w(i) > j, w⁻¹(j) > i}`.
pub fn d_set(w: &Permutation) -> BTreeSet<Cell> {
    let n = w.n();
    let winv = w.inverse();
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=n {
            if w.apply(i) > j && winv.apply(j) > i {
                out.insert((i, j));
            }
        }
    }
    out
}

/// `ℰ(w)`: cells of `𝒟(w)` with neither `(i+1, j)` nor `(i, j+1)` in `𝒟(w)`.
pub fn e_set(w: &Permutation) -> BTreeSet<Cell> {
    let d = d_set(w);
    d.iter()
        .copied()
        .filter(|&(i, j)| !d.contains(&(i + 1, j)) && !d.contains(&(i, j + 1)))
        .collect()
}

/// `rk π̂_{i,j}(ẇ)` for the permutation matrix with ones at `(k, w(k))`:
/// the number of `k <= i` with `w(k) <= j`.
pub fn schubert_rank(w: &Permutation, i: usize, j: usize) -> usize {
    (1..=i).filter(|&k| w.apply(k) <= j).count()
}

/// `P(y)_{i,j} = y_{n-j+1, i}`.
pub fn flip_p<F: crate::field::Field>(y: &Matrix<F>) -> Matrix<F> {
    let n = y.rows();
    Matrix::from_fn(n, n, |i, j| y[(n - j + 1, i)].clone())
}

/// Inverse of [`flip_p`]: `P⁻¹(z)_{r,c} = z_{c, n-r+1}`.
pub fn flip_p_inverse<F: crate::field::Field>(z: &Matrix<F>) -> Matrix<F> {
    let n = z.rows();
    Matrix::from_fn(n, n, |r, c| z[(c, n - r + 1)].clone())
}

/// Largest matrix space enumerated by [`essential_reduction_check`].
pub const ENUMERATION_LIMIT: u64 = 1 << 20;

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Rank over `F_p` of the upper-left `i × j` block of a row-major matrix.
fn upper_left_rank_mod(m: &[u64], n: usize, i: usize, j: usize, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = (0..i).map(|r| m[r * n..r * n + j].to_vec()).collect();
    let mut rank = 0;
    for c in 0..j {
        let Some(piv) = (rank..i).find(|&r| a[r][c] != 0) else { continue };
        a.swap(piv, rank);
        let inv = pow_mod(a[rank][c], p - 2, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in rest.iter_mut().take(i - rank - 1) {
            if row[c] != 0 {
                let f = row[c] * inv % p;
                for (x, &y) in row[c..j].iter_mut().zip(&pivot[c..j]) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        rank += 1;
        if rank == i {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Checks over `F_q` that the rank bounds of `ẇ`, `w = w₀σ`, at the cells of
/// `ℰ(w)` imply the bounds at every cell, by enumerating all `n × n` matrices.
pub fn essential_reduction_check(sigma: &Involution, q: u64, n: usize) -> Result<bool> {
    if sigma.n() != n {
        return Err(Error::SizeMismatch { left: sigma.n(), right: n });
    }
    if !is_chain(sigma) {
        return Err(Error::NotChain);
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let size = (n * n) as u32;
    match q.checked_pow(size) {
        Some(total) if total <= ENUMERATION_LIMIT => {}
        _ => return Err(Error::TooLarge(format!("{q}^{size} matrices"))),
    }
    let w = w0_times(sigma);
    let bound = |i: usize, j: usize| schubert_rank(&w, i, j);
    // essential conditions grouped by the last row they involve
    let mut by_row = vec![Vec::new(); n + 1];
    for (i, j) in e_set(&w) {
        by_row[i].push(j);
    }
    let mut m = vec![0u64; n * n];
    Ok(search(&mut m, 0, n, q, &by_row, &bound))
}

/// Fills rows `row..n` in odometer order; returns false on the first matrix
/// that meets every essential bound but violates some other bound.
fn search(
    m: &mut [u64],
    row: usize,
    n: usize,
    q: u64,
    by_row: &[Vec<usize>],
    bound: &dyn Fn(usize, usize) -> usize,
) -> bool {
    if row == n {
        return (1..=n).all(|i| (1..=n).all(|j| upper_left_rank_mod(m, n, i, j, q) <= bound(i, j)));
    }
    let total = q.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for k in 0..n {
            m[row * n + k] = c % q;
            c /= q;
        }
        let essential_ok = by_row[row + 1]
            .iter()
            .all(|&j| upper_left_rank_mod(m, n, row + 1, j, q) <= bound(row + 1, j));
        if essential_ok && !search(m, row + 1, n, q, by_row, bound) {
            return false;
        }
    }
    for k in 0..n {
        m[row * n + k] = 0;
    }
    true
}

/// Pairs `(σ, τ)` with `X_τ^t ∈ Z_σ` but `τ` not below `σ` in `<=*`.
pub fn explore_observations(elements: &[Involution]) -> Vec<(Involution, Involution)> {
    let mut out = Vec::new();
    for sigma in elements {
        let spec = ZSpec::of(sigma);
        let bounds = star_r(sigma);
        for tau in elements {
            let x: QMatrix = crate::orbit::x_transpose(tau);
            let inside = z_contains(&spec, &x).expect("same size, strictly lower");
            if inside && !star_r(tau).le_lower(&bounds) {
                out.push((sigma.clone(), tau.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;
    use crate::orbit::{act, random_borel, x_transpose};

    fn inv(s: &str, n: usize) -> Involution {
        Involution::parse(s, n).unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn maximal_support_and_m() {
        let s = inv("(5,1)(7,3)(6,4)", 8);
        assert_eq!(maximal_support(&s), vec![Arc::new(5, 1), Arc::new(7, 3)]);
        let m: BTreeSet<Cell> = [(6, 1), (7, 1), (8, 1), (7, 2), (8, 2), (8, 3)].into();
        assert_eq!(script_m(&s), m);
        let w0 = Involution::longest(6);
        assert_eq!(maximal_support(&w0), vec![Arc::new(6, 1)]);
        assert!(script_m(&w0).is_empty());
        assert!(maximal_support(&Involution::identity(4)).is_empty());
        assert!(script_m(&Involution::identity(4)).is_empty());
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma(&QMatrix::zeros(3, 3), 3, 1).is_zero());
        let a = QMatrix::unit(3, 3, 2).add(&QMatrix::unit(3, 2, 1));
        assert_eq!(gamma(&a, 3, 1), q(1));
        let x: QMatrix = x_transpose(&inv("(4,1)(3,2)(6,5)", 6));
        for r in 1..=6 {
            for s in 1..r {
                assert!(gamma(&x, r, s).is_zero());
            }
        }
    }

    #[test]
    fn containment_examples() {
        let s = inv("(5,1)(3,2)(6,4)", 6);
        let spec = ZSpec::of(&s);
        assert!(z_contains(&spec, &x_transpose(&s)).unwrap());
        for seed in 0..5 {
            let g = random_borel(6, seed, 3);
            assert!(z_contains(&spec, &act(&g, &x_transpose(&s)).unwrap()).unwrap());
        }
        assert!(z_contains(&spec, &x_transpose(&inv("(5,1)(3,2)", 6))).unwrap());
        assert!(!z_contains(&spec, &x_transpose(&Involution::longest(6))).unwrap());
        assert!(matches!(z_contains(&spec, &QMatrix::identity(6)), Err(Error::NotStrictlyLower)));
        assert!(matches!(z_contains(&spec, &QMatrix::zeros(5, 5)), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn chains() {
        assert!(is_chain(&Involution::longest(7)));
        assert!(!is_chain(&inv("(3,1)(5,2)", 5)));
        assert!(is_chain(&inv("(4,2)", 5)));
        assert!(is_chain(&Involution::identity(3)));
    }

    #[test]
    fn diagram_examples() {
        assert!(d_set(&Permutation::identity(4)).is_empty());
        let w = perm(&[2, 1]);
        assert_eq!(d_set(&w), [(1, 1)].into());
        assert_eq!(e_set(&w), [(1, 1)].into());
    }

    #[test]
    fn w0_sigma_for_the_worked_example() {
        let s = inv("(8,2)(6,3)", 8);
        let w = w0_times(&s);
        assert_eq!(w.one_line(), &[8, 1, 3, 5, 4, 6, 2, 7]);
        let e: BTreeSet<Cell> = [(1, 7), (4, 4), (6, 2)].into();
        assert_eq!(e_set(&w), e);
        assert_eq!(d_set(&w).len(), w.length());
    }

    #[test]
    fn flip_links_the_two_truncations() {
        let s = inv("(5,1)(3,2)(6,4)", 6);
        let n = 6;
        let w = w0_times(&s);
        let r = star_r(&s);
        let wdot: QMatrix = Matrix::from_fn(n, n, |i, j| if w.apply(i) == j { q(1) } else { q(0) });
        let sdot: QMatrix = s.to_permutation().matrix().to_matrix();
        assert_eq!(flip_p(&sdot), wdot);
        let a = act(&random_borel(n, 3, 3), &x_transpose(&s)).unwrap();
        assert_eq!(flip_p_inverse(&flip_p(&a)), a);
        for i in 1..=n {
            for j in 1..=n {
                assert_eq!(flip_p(&a).upper_left_rank(i, j), a.pi_rank(n - j + 1, i));
                if n - j + 1 > i {
                    assert_eq!(schubert_rank(&w, i, j) as u32, r.get(n - j + 1, i));
                }
            }
        }
        let id2: QMatrix = QMatrix::identity(2);
        assert_eq!(flip_p(&id2), QMatrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]));
        assert!(flip_p(&QMatrix::zeros(3, 3)).is_zero());
    }

    #[test]
    fn essential_reduction_small() {
        assert!(essential_reduction_check(&inv("(2,1)", 2), 2, 2).unwrap());
        assert!(essential_reduction_check(&inv("(3,1)", 3), 2, 3).unwrap());
        assert!(essential_reduction_check(&inv("(3,1)", 3), 3, 3).unwrap());
        assert!(matches!(
            essential_reduction_check(&inv("(3,1)(5,2)", 5), 2, 5),
            Err(Error::NotChain)
        ));
        assert!(matches!(
            essential_reduction_check(&Involution::longest(5), 2, 5),
            Err(Error::TooLarge(_))
        ));
        assert!(matches!(essential_reduction_check(&inv("(2,1)", 2), 4, 2), Err(Error::NotPrime(4))));
    }

    #[test]
    fn zspec_json_round_trip() {
        let spec = ZSpec::of(&inv("(5,1)(7,3)(6,4)", 8));
        let text = spec.to_json();
        assert!(text.contains("\"quadric_cells\":[[6,1]"));
        assert_eq!(ZSpec::from_json(&text).unwrap(), spec);
    }
}
