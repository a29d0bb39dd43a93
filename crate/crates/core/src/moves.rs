//! Explicit co-cover constructions on involutions.
//!
//! Each move takes an arc `(i, j)` of the support and produces a smaller
//! involution in the `<=*` order:
//!
//! * `right`: slide the column end of `(i, j)` to the first fixed point `m`
//!   strictly between `j` and `i`, giving `(i, m)`;
//! * `up`: slide the row end to the last such fixed point, giving `(m, j)`;
//! * `remove`: delete a minimal arc;
//! * `a`, `b`: uncross / unnest `(i, j)` with a second arc `(α, β)`;
//! * `c`: split `(i, j)` into `(i, β)` and `(α, j)` through two fixed points.
//!
//! Every move carries a blocker condition on the other arcs; when it fails the
//! move is undefined.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Arc, Involution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Right,
    Up,
    Remove,
    A,
    B,
    C,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Right => "right",
            MoveKind::Up => "up",
            MoveKind::Remove => "remove",
            MoveKind::A => "a",
            MoveKind::B => "b",
            MoveKind::C => "c",
        }
    }

    /// Change in the number of arcs.
    pub fn support_delta(self) -> i32 {
        match self {
            MoveKind::Remove => -1,
            MoveKind::C => 1,
            _ => 0,
        }
    }
}

/// A move at `source`. For `a` and `b` the partner is an arc `(α, β)` of the
/// support; for `c` it is a pair of positions `(α, β)` with `α < β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub source: Arc,
    pub partner: Option<(usize, usize)>,
}

impl Move {
    pub fn right(source: Arc) -> Self {
        Move { kind: MoveKind::Right, source, partner: None }
    }

    pub fn up(source: Arc) -> Self {
        Move { kind: MoveKind::Up, source, partner: None }
    }

    pub fn remove(source: Arc) -> Self {
        Move { kind: MoveKind::Remove, source, partner: None }
    }

    pub fn a(source: Arc, partner: Arc) -> Self {
        Move { kind: MoveKind::A, source, partner: Some((partner.i, partner.j)) }
    }

    pub fn b(source: Arc, partner: Arc) -> Self {
        Move { kind: MoveKind::B, source, partner: Some((partner.i, partner.j)) }
    }

    pub fn c(source: Arc, alpha: usize, beta: usize) -> Self {
        Move { kind: MoveKind::C, source, partner: Some((alpha, beta)) }
    }

    pub fn partner_arc(&self) -> Result<Arc> {
        self.partner
            .and_then(|(a, b)| Arc::try_new(a, b))
            .ok_or_else(|| Error::MoveNotApplicable(format!("{self} needs a partner arc")))
    }

    pub fn partner_pair(&self) -> Result<(usize, usize)> {
        self.partner
            .ok_or_else(|| Error::MoveNotApplicable(format!("{self} needs a position pair")))
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.partner) {
            (MoveKind::C, Some((a, b))) => write!(f, "c{} with {a},{b}", self.source),
            (kind, Some((a, b))) => write!(f, "{}{} with ({a},{b})", kind.name(), self.source),
            (kind, None) => write!(f, "{}{}", kind.name(), self.source),
        }
    }
}

fn require_arc(sigma: &Involution, arc: Arc) -> Result<()> {
    if sigma.contains(&arc) {
        Ok(())
    } else {
        Err(Error::ArcNotInSupport(arc))
    }
}

/// Arcs with no other arc strictly below them in the board order.
pub fn minimal_support(sigma: &Involution) -> Vec<Arc> {
    let arcs = sigma.arcs();
    arcs.iter()
        .copied()
        .filter(|a| !arcs.iter().any(|b| b.lt_phi(a)))
        .collect()
}

/// Smallest fixed point strictly between `j` and `i`.
pub fn right_target(sigma: &Involution, arc: Arc) -> Option<usize> {
    (arc.j + 1..arc.i).find(|&s| sigma.is_fixed(s))
}

/// Largest fixed point strictly between `j` and `i`.
pub fn up_target(sigma: &Involution, arc: Arc) -> Option<usize> {
    (arc.j + 1..arc.i).rev().find(|&r| sigma.is_fixed(r))
}

/// Some arc `(p, q)` with `arc > (p, q)` and `target ≯ (p, q)` blocks the slide.
fn slide_blocked(sigma: &Involution, arc: Arc, target: Arc) -> bool {
    sigma
        .arcs()
        .iter()
        .any(|pq| arc.gt_phi(pq) && !target.gt_phi(pq))
}

pub fn move_right(sigma: &Involution, arc: Arc) -> Result<Option<Involution>> {
    require_arc(sigma, arc)?;
    let Some(m) = right_target(sigma, arc) else {
        return Ok(None);
    };
    let target = Arc::new(arc.i, m);
    if slide_blocked(sigma, arc, target) {
        return Ok(None);
    }
    sigma.replace(&[arc], &[target]).map(Some)
}

pub fn move_up(sigma: &Involution, arc: Arc) -> Result<Option<Involution>> {
    require_arc(sigma, arc)?;
    let Some(m) = up_target(sigma, arc) else {
        return Ok(None);
    };
    let target = Arc::new(m, arc.j);
    if slide_blocked(sigma, arc, target) {
        return Ok(None);
    }
    sigma.replace(&[arc], &[target]).map(Some)
}

pub fn move_remove(sigma: &Involution, arc: Arc) -> Result<Involution> {
    require_arc(sigma, arc)?;
    if !minimal_support(sigma).contains(&arc) {
        return Err(Error::NotMinimal(arc));
    }
    sigma.replace(&[arc], &[])
}

fn is_a_candidate(sigma: &Involution, arc: Arc, partner: Arc) -> bool {
    let (i, j) = (arc.i, arc.j);
    let (alpha, beta) = (partner.i, partner.j);
    if !sigma.contains(&partner) || !(j < beta && beta < i && i < alpha) {
        return false;
    }
    if (beta + 1..i).any(|r| sigma.is_fixed(r)) {
        return false;
    }
    // blocker: (i,j) > (p,q) with (β,j) ≯ (p,q), or (α,β) > (p,q) with (α,i) ≯ (p,q)
    let low = Arc::new(beta, j);
    let high = Arc::new(alpha, i);
    !sigma.arcs().iter().any(|pq| {
        (arc.gt_phi(pq) && !low.gt_phi(pq)) || (partner.gt_phi(pq) && !high.gt_phi(pq))
    })
}

pub fn a_candidates(sigma: &Involution, arc: Arc) -> Result<Vec<Arc>> {
    require_arc(sigma, arc)?;
    Ok(sigma
        .arcs()
        .iter()
        .copied()
        .filter(|&p| is_a_candidate(sigma, arc, p))
        .collect())
}

pub fn a_move(sigma: &Involution, arc: Arc, partner: Arc) -> Result<Involution> {
    require_arc(sigma, arc)?;
    if !is_a_candidate(sigma, arc, partner) {
        return Err(Error::NotACandidate { arc, partner });
    }
    sigma.replace(
        &[arc, partner],
        &[Arc::new(partner.j, arc.j), Arc::new(partner.i, arc.i)],
    )
}

fn is_b_candidate(sigma: &Involution, arc: Arc, partner: Arc) -> bool {
    sigma.contains(&partner)
        && partner.gt_phi(&arc)
        && !sigma
            .arcs()
            .iter()
            .any(|pq| arc.lt_phi(pq) && pq.lt_phi(&partner))
}

pub fn b_candidates(sigma: &Involution, arc: Arc) -> Result<Vec<Arc>> {
    require_arc(sigma, arc)?;
    Ok(sigma
        .arcs()
        .iter()
        .copied()
        .filter(|&p| is_b_candidate(sigma, arc, p))
        .collect())
}

pub fn b_move(sigma: &Involution, arc: Arc, partner: Arc) -> Result<Involution> {
    require_arc(sigma, arc)?;
    if !is_b_candidate(sigma, arc, partner) {
        return Err(Error::NotBCandidate { arc, partner });
    }
    sigma.replace(
        &[arc, partner],
        &[Arc::new(arc.i, partner.j), Arc::new(partner.i, arc.j)],
    )
}

/// The order and implication clauses of a c-move, without the fixed-point
/// requirement on `α` and `β`.
fn c_clauses_hold(sigma: &Involution, arc: Arc, alpha: usize, beta: usize) -> bool {
    let (i, j) = (arc.i, arc.j);
    if !(i > beta && beta > alpha && alpha > j) {
        return false;
    }
    if (alpha + 1..beta).any(|s| sigma.is_fixed(s)) {
        return false;
    }
    let lower = Arc::new(alpha, j);
    let upper = Arc::new(i, beta);
    sigma
        .arcs()
        .iter()
        .filter(|pq| arc.gt_phi(pq) && !lower.gt_phi(pq))
        .all(|pq| upper.gt_phi(pq))
}

/// Position pairs `(α, β)` admissible for a c-move at `arc`. Both positions
/// are required to be fixed points so that the result stays an involution.
pub fn c_candidates(sigma: &Involution, arc: Arc) -> Result<Vec<(usize, usize)>> {
    require_arc(sigma, arc)?;
    let mut out = Vec::new();
    for alpha in arc.j + 1..arc.i {
        for beta in alpha + 1..arc.i {
            if sigma.is_fixed(alpha)
                && sigma.is_fixed(beta)
                && c_clauses_hold(sigma, arc, alpha, beta)
            {
                out.push((alpha, beta));
            }
        }
    }
    Ok(out)
}

pub fn c_move(sigma: &Involution, arc: Arc, alpha: usize, beta: usize) -> Result<Involution> {
    require_arc(sigma, arc)?;
    if !c_clauses_hold(sigma, arc, alpha, beta) {
        return Err(Error::NotCCandidate { arc, alpha, beta });
    }
    if !sigma.is_fixed(alpha) || !sigma.is_fixed(beta) {
        return Err(Error::InvalidResult(format!(
            "positions {alpha} and {beta} must both be fixed points of {sigma}"
        )));
    }
    sigma.replace(&[arc], &[Arc::new(arc.i, beta), Arc::new(alpha, arc.j)])
}

/// Applies a move, failing if it is undefined for `sigma`.
pub fn apply_move(sigma: &Involution, mv: &Move) -> Result<Involution> {
    let undefined = || Error::MoveNotApplicable(format!("{mv} is undefined for {sigma}"));
    match mv.kind {
        MoveKind::Right => move_right(sigma, mv.source)?.ok_or_else(undefined),
        MoveKind::Up => move_up(sigma, mv.source)?.ok_or_else(undefined),
        MoveKind::Remove => move_remove(sigma, mv.source),
        MoveKind::A => a_move(sigma, mv.source, mv.partner_arc()?),
        MoveKind::B => b_move(sigma, mv.source, mv.partner_arc()?),
        MoveKind::C => {
            let (alpha, beta) = mv.partner_pair()?;
            c_move(sigma, mv.source, alpha, beta)
        }
    }
}

/// Every defined move at `sigma` with its result, grouped by kind in the
/// order remove, a, b, right, up, c.
pub fn all_moves(sigma: &Involution) -> Vec<(Move, Involution)> {
    let mut out = Vec::new();
    let ok = "move enumerated from its own candidate set";
    for arc in minimal_support(sigma) {
        out.push((Move::remove(arc), move_remove(sigma, arc).expect(ok)));
    }
    for &arc in sigma.arcs() {
        for p in a_candidates(sigma, arc).expect(ok) {
            out.push((Move::a(arc, p), a_move(sigma, arc, p).expect(ok)));
        }
    }
    for &arc in sigma.arcs() {
        for p in b_candidates(sigma, arc).expect(ok) {
            out.push((Move::b(arc, p), b_move(sigma, arc, p).expect(ok)));
        }
    }
    for &arc in sigma.arcs() {
        if let Some(t) = move_right(sigma, arc).expect(ok) {
            out.push((Move::right(arc), t));
        }
        if let Some(t) = move_up(sigma, arc).expect(ok) {
            out.push((Move::up(arc), t));
        }
    }
    for &arc in sigma.arcs() {
        for (alpha, beta) in c_candidates(sigma, arc).expect(ok) {
            out.push((Move::c(arc, alpha, beta), c_move(sigma, arc, alpha, beta).expect(ok)));
        }
    }
    out
}

/// A removal at `(i, j)` with no fixed point in `j..=i`.
pub fn is_prime_removal(sigma: &Involution, arc: Arc) -> bool {
    (arc.j..=arc.i).all(|m| !sigma.is_fixed(m))
}

/// The move-generated sets `N⁻`, `N⁰`, `N⁺` and `N′ ⊆ N⁻`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NearSets {
    pub minus: BTreeSet<Involution>,
    pub zero: BTreeSet<Involution>,
    pub plus: BTreeSet<Involution>,
    pub prime: BTreeSet<Involution>,
}

impl NearSets {
    pub fn of(sigma: &Involution) -> Self {
        let mut sets = NearSets::default();
        for (mv, tau) in all_moves(sigma) {
            match mv.kind {
                MoveKind::Remove => {
                    if is_prime_removal(sigma, mv.source) {
                        sets.prime.insert(tau.clone());
                    }
                    sets.minus.insert(tau);
                }
                MoveKind::C => {
                    sets.plus.insert(tau);
                }
                _ => {
                    sets.zero.insert(tau);
                }
            }
        }
        sets
    }

    /// `N⁻ ∪ N⁰ ∪ N⁺`.
    pub fn near(&self) -> BTreeSet<Involution> {
        self.minus.iter().chain(&self.zero).chain(&self.plus).cloned().collect()
    }

    /// `N′ ∪ N⁰ ∪ N⁺`.
    pub fn near_prime(&self) -> BTreeSet<Involution> {
        self.prime.iter().chain(&self.zero).chain(&self.plus).cloned().collect()
    }
}

pub fn near(sigma: &Involution) -> BTreeSet<Involution> {
    NearSets::of(sigma).near()
}

pub fn near_prime(sigma: &Involution) -> BTreeSet<Involution> {
    NearSets::of(sigma).near_prime()
}

/// Moves whose result breaks the support-size law: removals drop `s` by one,
/// c-moves raise it by one, the rest keep it.
pub fn support_law_violations(sigma: &Involution) -> Vec<String> {
    let s = sigma.support_size() as i64;
    all_moves(sigma)
        .into_iter()
        .filter(|(mv, tau)| tau.support_size() as i64 != s + i64::from(mv.kind.support_delta()))
        .map(|(mv, tau)| format!("{mv} gives {tau}"))
        .collect()
}
