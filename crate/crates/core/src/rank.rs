//! Rank matrices of rook placements and the three orders they induce.
//!
//! For a matrix `A` the truncation `π_{i,j}(A)` keeps rows `i..=n` and columns
//! `1..=j`. For a rook placement its rank is the number of rooks weakly
//! south-west of box `(i, j)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Q};
use crate::matrix::{Matrix, QMatrix};
use crate::perm::{Arc, Involution, Permutation};

/// `n × n` matrix of non-negative integers, indexed from 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RankMatrix {
    n: usize,
    entries: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RankMatrixJson {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl Serialize for RankMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RankMatrixJson { n: self.n, rows: self.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RankMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = RankMatrixJson::deserialize(d)?;
        RankMatrix::from_rows(json.rows)
            .filter(|m| m.n == json.n)
            .ok_or_else(|| serde::de::Error::custom("rows do not form an n×n matrix"))
    }
}

impl RankMatrix {
    pub fn zeros(n: usize) -> Self {
        RankMatrix { n, entries: vec![0; n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Option<Self> {
        let n = rows.len();
        rows.iter().all(|r| r.len() == n).then(|| RankMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n.max(1)).map(<[u32]>::to_vec).take(self.n).collect()
    }

    /// Entrywise `self <= other` over every cell.
    pub fn le(&self, other: &RankMatrix) -> bool {
        self.n == other.n && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Entrywise `self <= other` over the strictly lower triangle.
    pub fn le_lower(&self, other: &RankMatrix) -> bool {
        if self.n != other.n {
            return false;
        }
        let n = self.n;
        (2..=n).all(|i| (1..i).all(|j| self.get(i, j) <= other.get(i, j)))
    }

    /// Strictly lower-triangular part.
    pub fn low(&self) -> RankMatrix {
        let mut out = RankMatrix::zeros(self.n);
        for i in 2..=self.n {
            for j in 1..i {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }
}

impl fmt::Display for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// 0/1 matrix with at most one 1 per row and column.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RookMatrix {
    n: usize,
    ones: Vec<(usize, usize)>,
}

impl RookMatrix {
    pub fn from_positions<I>(n: usize, ones: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![false; n + 1];
        let mut cols = vec![false; n + 1];
        let mut out = Vec::new();
        for (r, c) in ones {
            for idx in [r, c] {
                if idx == 0 || idx > n {
                    return Err(Error::IndexOutOfRange { index: idx, n });
                }
            }
            if rows[r] {
                return Err(Error::Overlap(r));
            }
            if cols[c] {
                return Err(Error::Overlap(c));
            }
            rows[r] = true;
            cols[c] = true;
            out.push((r, c));
        }
        out.sort_unstable();
        Ok(RookMatrix { n, ones: out })
    }

    /// `X_σ`: ones at `(j, i)` for every arc, strictly upper-triangular.
    pub fn x_upper(sigma: &Involution) -> Self {
        RookMatrix {
            n: sigma.n(),
            ones: {
                let mut v: Vec<_> = sigma.arcs().iter().map(|a| (a.j, a.i)).collect();
                v.sort_unstable();
                v
            },
        }
    }

    /// `X_σ^t`: ones at `(i, j)` for every arc, strictly lower-triangular.
    pub fn x_lower(sigma: &Involution) -> Self {
        RookMatrix {
            n: sigma.n(),
            ones: {
                let mut v: Vec<_> = sigma.arcs().iter().map(|a| (a.i, a.j)).collect();
                v.sort_unstable();
                v
            },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ones(&self) -> &[(usize, usize)] {
        &self.ones
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        let mut rows = vec![vec![0; self.n]; self.n];
        for &(r, c) in &self.ones {
            rows[r - 1][c - 1] = 1;
        }
        rows
    }

    pub fn to_matrix<F: Field>(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.n, self.n);
        for &(r, c) in &self.ones {
            m[(r, c)] = F::one();
        }
        m
    }

    /// Rank matrix by counting rooks weakly south-west of each box.
    pub fn rank_matrix(&self) -> RankMatrix {
        let n = self.n;
        let mut grid = vec![vec![0u32; n + 2]; n + 2];
        for &(r, c) in &self.ones {
            grid[r][c] = 1;
        }
        // prefix over rows from the bottom and columns from the left
        let mut out = RankMatrix::zeros(n);
        let mut acc = vec![vec![0u32; n + 2]; n + 2];
        for i in (1..=n).rev() {
            for j in 1..=n {
                acc[i][j] = grid[i][j] + acc[i + 1][j] + acc[i][j - 1] - acc[i + 1][j - 1];
                out.set(i, j, acc[i][j]);
            }
        }
        out
    }
}

/// Number of arcs `(a, b)` with `a >= i` and `b <= j`.
pub fn southwest_count(arcs: &[Arc], i: usize, j: usize) -> u32 {
    arcs.iter().filter(|a| a.i >= i && a.j <= j).count() as u32
}

/// `R(A)_{i,j} = rk π_{i,j}(A)` for every cell, by exact elimination.
pub fn rank_matrix_exact<F: Field>(a: &Matrix<F>) -> RankMatrix {
    assert!(a.is_square());
    let n = a.rows();
    let mut out = RankMatrix::zeros(n);
    for i in 1..=n {
        for j in 1..=n {
            out.set(i, j, a.pi_rank(i, j) as u32);
        }
    }
    out
}

/// `R_σ`: ranks of truncations of the upper-triangular `X_σ`.
pub fn melnikov_r(sigma: &Involution) -> RankMatrix {
    RookMatrix::x_upper(sigma).rank_matrix()
}

/// `R*_σ`: ranks of truncations of `X_σ^t` on the strictly lower triangle,
/// zero elsewhere.
pub fn star_r(sigma: &Involution) -> RankMatrix {
    RookMatrix::x_lower(sigma).rank_matrix().low()
}

/// `R(ẇ)` for the permutation matrix of `w`.
pub fn permutation_rank_matrix(w: &Permutation) -> RankMatrix {
    w.matrix().rank_matrix()
}

fn same_size(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SizeMismatch { left: a, right: b })
    }
}

/// `tau <=* sigma`.
pub fn leq_star(tau: &Involution, sigma: &Involution) -> Result<bool> {
    same_size(tau.n(), sigma.n())?;
    Ok(star_r(tau).le_lower(&star_r(sigma)))
}

/// `tau <= sigma` in the order of ranks of `X_σ`.
pub fn leq_melnikov(tau: &Involution, sigma: &Involution) -> Result<bool> {
    same_size(tau.n(), sigma.n())?;
    Ok(melnikov_r(tau).le(&melnikov_r(sigma)))
}

/// `v <=_B w` by the rank-matrix criterion.
pub fn leq_bruhat(v: &Permutation, w: &Permutation) -> Result<bool> {
    same_size(v.n(), w.n())?;
    Ok(permutation_rank_matrix(v).le(&permutation_rank_matrix(w)))
}

/// Which order a comparison or poset uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Star,
    Melnikov,
    Bruhat,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Star => "star",
            OrderKind::Melnikov => "melnikov",
            OrderKind::Bruhat => "bruhat",
        }
    }

    /// The rank data compared by this order, precomputed once per involution.
    pub fn key(self, sigma: &Involution) -> RankMatrix {
        match self {
            OrderKind::Star => star_r(sigma),
            OrderKind::Melnikov => melnikov_r(sigma),
            OrderKind::Bruhat => permutation_rank_matrix(&sigma.to_permutation()),
        }
    }

    /// Compares precomputed keys: `a <= b`.
    pub fn key_le(self, a: &RankMatrix, b: &RankMatrix) -> bool {
        match self {
            OrderKind::Star => a.le_lower(b),
            OrderKind::Melnikov | OrderKind::Bruhat => a.le(b),
        }
    }

    pub fn leq(self, tau: &Involution, sigma: &Involution) -> Result<bool> {
        match self {
            OrderKind::Star => leq_star(tau, sigma),
            OrderKind::Melnikov => leq_melnikov(tau, sigma),
            OrderKind::Bruhat => leq_bruhat(&tau.to_permutation(), &sigma.to_permutation()),
        }
    }
}

impl FromStr for OrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(OrderKind::Star),
            "melnikov" => Ok(OrderKind::Melnikov),
            "bruhat" => Ok(OrderKind::Bruhat),
            other => Err(Error::Parse(format!("unknown order {other:?}"))),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact rank of a truncation of a rational matrix.
pub fn pi_rank_q(a: &QMatrix, i: usize, j: usize) -> usize {
    a.pi_rank(i, j)
}

/// Converts a rook matrix to rationals.
pub fn rook_to_q(r: &RookMatrix) -> QMatrix {
    r.to_matrix::<Q>()
}
