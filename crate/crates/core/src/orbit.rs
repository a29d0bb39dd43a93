//! The action `g.λ = (gλg⁻¹)_low` of upper-triangular matrices on strictly
//! lower-triangular ones, orbit representatives, degeneration curves over
//! `Q(ε)`, and orbit dimensions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{q, q_from_str, q_to_string, Field, Q};
use crate::matrix::{Matrix, QMatrix};
use crate::moves::{apply_move, right_target, up_target, Move, MoveKind};
use crate::perm::{Arc, Involution};
use crate::rank::{rank_matrix_exact, RankMatrix, RookMatrix};
use crate::ratfunc::{RatFunc, RatFuncJson};

/// Square matrix over `Q(ε)`.
pub type RFMatrix = Matrix<RatFunc>;

/// `x_{j,i}(α) = 1 + α e_{j,i}`.
pub fn x_elem<F: Field>(n: usize, j: usize, i: usize, alpha: F) -> Result<Matrix<F>> {
    for k in [j, i] {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
    }
    let mut m = Matrix::<F>::identity(n);
    m[(j, i)] = m[(j, i)].clone() + alpha;
    if j == i && m[(j, i)].is_zero() {
        return Err(Error::SingularElement);
    }
    Ok(m)
}

/// `(gλg⁻¹)_low` for invertible upper-triangular `g` and strictly
/// lower-triangular `λ`.
pub fn act<F: Field>(g: &Matrix<F>, lambda: &Matrix<F>) -> Result<Matrix<F>> {
    if !lambda.is_square() || !lambda.is_strictly_lower() {
        return Err(Error::NotStrictlyLower);
    }
    if g.rows() != lambda.rows() || g.cols() != lambda.cols() {
        return Err(Error::SizeMismatch { left: g.rows(), right: lambda.rows() });
    }
    let g_inv = g.inverse_upper()?;
    Ok(g.mul(lambda).mul(&g_inv).low())
}

/// `X_σ^t` over any field: ones at `(i, j)` for each arc.
pub fn x_transpose<F: Field>(sigma: &Involution) -> Matrix<F> {
    RookMatrix::x_lower(sigma).to_matrix()
}

/// Nonzero scalars attached to the arcs of an involution.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XiMap(pub BTreeMap<Arc, Q>);

impl XiMap {
    pub fn ones(sigma: &Involution) -> Self {
        XiMap(sigma.arcs().iter().map(|&a| (a, Q::one())).collect())
    }

    pub fn from_values(sigma: &Involution, values: &[Q]) -> Self {
        XiMap(sigma.arcs().iter().copied().zip(values.iter().cloned()).collect())
    }
}

/// `f_{σ,ξ}`: `ξ(i, j)` at `(i, j)` for each arc.
pub fn f_sigma_xi(sigma: &Involution, xi: &XiMap) -> Result<QMatrix> {
    let mut m = QMatrix::zeros(sigma.n(), sigma.n());
    for &arc in sigma.arcs() {
        let v = xi.0.get(&arc).ok_or(Error::MissingArc(arc))?;
        if v.is_zero() {
            return Err(Error::ZeroXi(arc));
        }
        m[(arc.i, arc.j)] = v.clone();
    }
    Ok(m)
}

/// Strictly lower rank profile `rk π_{i,j}(λ)`, zero on and above the diagonal.
pub fn rank_profile(lambda: &QMatrix) -> RankMatrix {
    rank_matrix_exact(lambda).low()
}

/// `Δ_1, ..., Δ_{⌊n/2⌋}`: determinants of the bottom-left `i × i` corners.
pub fn delta_minors(y: &QMatrix) -> Vec<Q> {
    let n = y.rows();
    (1..=n / 2).map(|i| y.submatrix(n - i + 1..=n, 1..=i).det()).collect()
}

/// Seeded random element of `B`: diagonal in `[1, bound]`, strictly upper
/// entries in `[-bound, bound]`.
pub fn random_borel(n: usize, seed: u64, bound: i64) -> QMatrix {
    random_borel_with(&mut ChaCha8Rng::seed_from_u64(seed), n, bound)
}

pub fn random_borel_with<R: Rng>(rng: &mut R, n: usize, bound: i64) -> QMatrix {
    assert!(bound >= 1, "sampling bound must be positive");
    QMatrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Greater => Q::zero(),
        std::cmp::Ordering::Equal => q(rng.random_range(1..=bound)),
        std::cmp::Ordering::Less => q(rng.random_range(-bound..=bound)),
    })
}

/// Seeded random invertible diagonal matrix with entries in `[1, bound]`.
pub fn random_diagonal_with<R: Rng>(rng: &mut R, n: usize, bound: i64) -> QMatrix {
    QMatrix::from_fn(n, n, |r, c| if r == c { q(rng.random_range(1..=bound)) } else { Q::zero() })
}

/// Rank of `x ↦ ([x, λ])_low` on the span of `e_{p,q}` for the given
/// variable cells.
fn linearized_rank(lambda: &QMatrix, vars: &[(usize, usize)]) -> usize {
    let n = lambda.rows();
    let var_index: BTreeMap<(usize, usize), usize> =
        vars.iter().enumerate().map(|(k, &pq)| (pq, k)).collect();
    let mut rows = Vec::new();
    for r in 1..=n {
        for s in 1..r {
            let mut eq = vec![Q::zero(); vars.len()];
            // ([x, λ])_{r,s} = Σ_k x_{r,k} λ_{k,s} - Σ_k λ_{r,k} x_{k,s}
            for k in 1..=n {
                if let Some(&v) = var_index.get(&(r, k)) {
                    eq[v] += lambda[(k, s)].clone();
                }
                if let Some(&v) = var_index.get(&(k, s)) {
                    eq[v] -= lambda[(r, k)].clone();
                }
            }
            rows.push(eq);
        }
    }
    if rows.is_empty() || vars.is_empty() {
        return 0;
    }
    QMatrix::from_rows(rows).rank()
}

/// `dim Ω_σ = dim b - dim stab`, with the stabilizer algebra computed as the
/// kernel of the linearized action on `b`.
pub fn orbit_dimension(sigma: &Involution) -> usize {
    let n = sigma.n();
    let vars: Vec<(usize, usize)> =
        (1..=n).flat_map(|p| (p..=n).map(move |c| (p, c))).collect();
    linearized_rank(&x_transpose(sigma), &vars)
}

/// Dimension of the orbit of `X_σ^t` under the unitriangular group.
pub fn unipotent_orbit_dimension(sigma: &Involution) -> usize {
    let n = sigma.n();
    let vars: Vec<(usize, usize)> =
        (1..=n).flat_map(|p| (p + 1..=n).map(move |c| (p, c))).collect();
    linearized_rank(&x_transpose(sigma), &vars)
}

/// The involution obtained from `w₀` by swapping the arcs
/// `(n-j+1, j), (n-j, j+1)` for `(n-j+1, j+1), (n-j, j)`.
pub fn subregular_involution(n: usize, j: usize) -> Result<Involution> {
    if j == 0 || j >= n / 2 {
        return Err(Error::IndexOutOfRange { index: j, n: n / 2 });
    }
    Involution::longest(n).replace(
        &[Arc::new(n - j + 1, j), Arc::new(n - j, j + 1)],
        &[Arc::new(n - j + 1, j + 1), Arc::new(n - j, j)],
    )
}

/// One factor of a degeneration word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `1 + c e_{row,col}` with `row < col`.
    Transvection { row: usize, col: usize, coeff: RatFunc },
    /// The torus element with `value` at `(index, index)` and 1 elsewhere.
    Diagonal { index: usize, value: RatFunc },
}

impl Factor {
    pub fn matrix(&self, n: usize) -> RFMatrix {
        let mut m = RFMatrix::identity(n);
        match self {
            Factor::Transvection { row, col, coeff } => m[(*row, *col)] = coeff.clone(),
            Factor::Diagonal { index, value } => m[(*index, *index)] = value.clone(),
        }
        m
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Transvection { row, col, coeff } => write!(f, "x_{{{row},{col}}}({coeff})"),
            Factor::Diagonal { index, value } => write!(f, "x_{{{index},{index}}}({value})"),
        }
    }
}

/// A curve `y_ε` in `Ω_σ` with `lim_{ε→0} y_ε = X_τ^t`.
#[derive(Clone, Debug)]
pub struct Degeneration {
    pub sigma: Involution,
    pub tau: Involution,
    pub word: Vec<Factor>,
    pub y: RFMatrix,
    pub limit: QMatrix,
}

fn tv(row: usize, col: usize, coeff: RatFunc) -> Factor {
    Factor::Transvection { row, col, coeff }
}

fn dg(index: usize, value: RatFunc) -> Factor {
    Factor::Diagonal { index, value }
}

struct Plan {
    tau: Involution,
    word: Vec<Factor>,
    // entries of the closed form that differ from X_σ^t
    overrides: Vec<((usize, usize), RatFunc)>,
}

fn plan(sigma: &Involution, mv: &Move) -> Result<Plan> {
    let tau = apply_move(sigma, mv).map_err(|e| Error::MoveNotApplicable(format!("{mv} at {sigma}: {e}")))?;
    let Arc { i, j } = mv.source;
    let eps = RatFunc::eps;
    let inv = RatFunc::eps_inv;
    let one = RatFunc::one;
    let (word, overrides) = match mv.kind {
        MoveKind::Remove => (vec![dg(i, eps())], vec![((i, j), eps())]),
        MoveKind::C => {
            let (alpha, beta) = mv.partner_pair()?;
            (
                vec![tv(alpha, i, inv()), tv(j, beta, -inv()), dg(i, eps())],
                vec![((alpha, j), one()), ((i, beta), one()), ((i, j), eps())],
            )
        }
        MoveKind::A => {
            let Arc { i: alpha, j: beta } = mv.partner_arc()?;
            (
                vec![tv(beta, i, inv()), dg(i, eps()), dg(alpha, -eps())],
                vec![((beta, j), one()), ((alpha, i), one()), ((i, j), eps()), ((alpha, beta), -eps())],
            )
        }
        MoveKind::B => {
            let Arc { i: alpha, j: beta } = mv.partner_arc()?;
            (
                vec![tv(beta, j, -inv()), tv(i, alpha, inv()), dg(alpha, eps()), dg(i, eps() - inv())],
                vec![((i, beta), one()), ((alpha, j), one()), ((i, j), eps()), ((alpha, beta), eps())],
            )
        }
        MoveKind::Right => {
            let m = right_target(sigma, mv.source).expect("defined move has a target");
            (vec![tv(j, m, -inv()), dg(i, eps())], vec![((i, m), one()), ((i, j), eps())])
        }
        MoveKind::Up => {
            let m = up_target(sigma, mv.source).expect("defined move has a target");
            (vec![tv(m, i, inv()), dg(i, eps())], vec![((m, j), one()), ((i, j), eps())])
        }
    };
    Ok(Plan { tau, word, overrides })
}

/// The explicit closed form of `y_ε` for a move at `sigma`.
pub fn closed_form(sigma: &Involution, mv: &Move) -> Result<RFMatrix> {
    let p = plan(sigma, mv)?;
    let mut y: RFMatrix = x_transpose(sigma);
    for ((r, s), v) in p.overrides {
        y[(r, s)] = v;
    }
    Ok(y)
}

/// Builds `y_ε` by acting with the move's word on `X_σ^t` and takes its limit.
pub fn degeneration(sigma: &Involution, mv: &Move) -> Result<Degeneration> {
    let p = plan(sigma, mv)?;
    let n = sigma.n();
    let mut y: RFMatrix = x_transpose(sigma);
    for factor in p.word.iter().rev() {
        y = act(&factor.matrix(n), &y)?;
    }
    let limit = limit_at_zero(&y)?;
    Ok(Degeneration { sigma: sigma.clone(), tau: p.tau, word: p.word, y, limit })
}

/// Entrywise value at `ε = 0`.
pub fn limit_at_zero(y: &RFMatrix) -> Result<QMatrix> {
    let mut out = QMatrix::zeros(y.rows(), y.cols());
    for r in 1..=y.rows() {
        for c in 1..=y.cols() {
            out[(r, c)] = y[(r, c)].value_at_zero().ok_or(Error::LimitUndefined { row: r, col: c })?;
        }
    }
    Ok(out)
}

/// Wire form of a rational matrix: entries as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

impl QMatrixJson {
    pub fn from_matrix(m: &QMatrix) -> Self {
        QMatrixJson {
            n: m.rows(),
            rows: m.to_rows().iter().map(|row| row.iter().map(q_to_string).collect()).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<QMatrix> {
        if self.rows.len() != self.n || self.rows.iter().any(|r| r.len() != self.n) {
            return Err(Error::Parse("matrix rows do not match n".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| q_from_str(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QMatrix::from_rows(rows))
    }
}

/// Wire form of a matrix over `Q(ε)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RFMatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<RatFuncJson>>,
}

impl RFMatrixJson {
    pub fn from_matrix(m: &RFMatrix) -> Self {
        RFMatrixJson {
            n: m.rows(),
            rows: m.to_rows().iter().map(|row| row.iter().map(RatFunc::to_json).collect()).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<RFMatrix> {
        if self.rows.len() != self.n || self.rows.iter().any(|r| r.len() != self.n) {
            return Err(Error::Parse("matrix rows do not match n".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(RatFunc::from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(RFMatrix::from_rows(rows))
    }
}
