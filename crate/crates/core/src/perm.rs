//! Permutations, involutions and the arcs that encode them.
//!
//! All indices are 1-based. An involution of size `n` is stored as the list
//! of its 2-cycles `(i, j)` with `i > j`, sorted by ascending `j`; this is the
//! same data as a rook placement on the strictly lower-triangular board.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rank::RookMatrix;

/// A strictly lower-triangular position `(i, j)`, `i > j`.
///
/// Arcs double as cells of the triangular board, which carries the partial
/// order `(a, b) <= (c, d)` iff `a <= c` and `b >= d`; see [`Arc::le_phi`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub i: usize,
    pub j: usize,
}

impl Arc {
    /// Builds an arc, panicking if `i <= j` or `j == 0`.
    pub fn new(i: usize, j: usize) -> Self {
        assert!(j >= 1 && i > j, "arc ({i},{j}) is not strictly lower-triangular");
        Arc { i, j }
    }

    pub fn try_new(i: usize, j: usize) -> Option<Self> {
        (j >= 1 && i > j).then_some(Arc { i, j })
    }

    /// `self <= other` in the board order.
    pub fn le_phi(&self, other: &Arc) -> bool {
        self.i <= other.i && self.j >= other.j
    }

    /// `self < other` in the board order.
    pub fn lt_phi(&self, other: &Arc) -> bool {
        self != other && self.le_phi(other)
    }

    pub fn gt_phi(&self, other: &Arc) -> bool {
        other.lt_phi(self)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Board order on raw positions, for callers that hold `(row, col)` pairs.
pub fn partial_leq_phi(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 <= b.0 && a.1 >= b.1
}

/// An involution of `{1, ..., n}` given by its disjoint 2-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution {
    n: usize,
    arcs: Vec<Arc>,
}

impl Involution {
    pub fn identity(n: usize) -> Self {
        Involution { n, arcs: Vec::new() }
    }

    /// The longest element `(n,1)(n-1,2)...`.
    pub fn longest(n: usize) -> Self {
        let arcs = (1..=n / 2).map(|j| Arc::new(n + 1 - j, j)).collect();
        Involution { n, arcs }
    }

    /// Validates and normalizes a set of arcs.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Arc>,
    {
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for arc in arcs {
            for end in [arc.i, arc.j] {
                if end == 0 || end > n {
                    return Err(Error::IndexOutOfRange { index: end, n });
                }
                if seen[end] {
                    return Err(Error::Overlap(end));
                }
                seen[end] = true;
            }
            out.push(arc);
        }
        out.sort_by_key(|a| a.j);
        Ok(Involution { n, arcs: out })
    }

    /// Parses `"id"` or a sequence of `(a,b)` groups. Each group may be
    /// written in either order; whitespace is ignored.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let syntax = |reason: &str| Error::Syntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if compact == "id" || compact.is_empty() {
            return Ok(Involution::identity(n));
        }
        let mut arcs = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| syntax("expected '('"))?;
            let close = body.find(')').ok_or_else(|| syntax("missing ')'"))?;
            let (pair, tail) = body.split_at(close);
            rest = &tail[1..];
            let mut parts = pair.split(',');
            let (a, b) = match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(syntax("a cycle must have exactly two entries")),
            };
            let a: usize = a.parse().map_err(|_| syntax("entry is not a positive integer"))?;
            let b: usize = b.parse().map_err(|_| syntax("entry is not a positive integer"))?;
            if a == b {
                return Err(syntax("a 2-cycle needs two distinct entries"));
            }
            if a == 0 || b == 0 {
                return Err(syntax("entries are 1-based"));
            }
            let (i, j) = if a > b { (a, b) } else { (b, a) };
            if i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            arcs.push(Arc::new(i, j));
        }
        Involution::from_arcs(n, arcs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The support, sorted by ascending column.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Number of 2-cycles.
    pub fn support_size(&self) -> usize {
        self.arcs.len()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.arcs.contains(arc)
    }

    /// `σ(k)`.
    pub fn image(&self, k: usize) -> usize {
        for a in &self.arcs {
            if a.i == k {
                return a.j;
            }
            if a.j == k {
                return a.i;
            }
        }
        k
    }

    pub fn is_fixed(&self, k: usize) -> bool {
        self.arcs.iter().all(|a| a.i != k && a.j != k)
    }

    /// Boolean table of fixed points indexed `1..=n` (entry 0 unused).
    pub fn fixed_table(&self) -> Vec<bool> {
        let mut fixed = vec![true; self.n + 1];
        fixed[0] = false;
        for a in &self.arcs {
            fixed[a.i] = false;
            fixed[a.j] = false;
        }
        fixed
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut one_line: Vec<usize> = (1..=self.n).collect();
        for a in &self.arcs {
            one_line[a.i - 1] = a.j;
            one_line[a.j - 1] = a.i;
        }
        Permutation { one_line }
    }

    /// Coxeter length of the underlying permutation.
    pub fn length(&self) -> usize {
        self.to_permutation().length()
    }

    /// Replaces some arcs by others and re-validates.
    pub(crate) fn replace(&self, remove: &[Arc], add: &[Arc]) -> Result<Self> {
        let kept = self.arcs.iter().copied().filter(|a| !remove.contains(a));
        Involution::from_arcs(self.n, kept.chain(add.iter().copied()))
            .map_err(|e| Error::InvalidResult(e.to_string()))
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arcs.is_empty() {
            return f.write_str("id");
        }
        for a in &self.arcs {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Shorthand for [`Involution::parse`].
pub fn parse_involution(text: &str, n: usize) -> Result<Involution> {
    Involution::parse(text, n)
}

/// All involutions of size `n`, in lexicographic order of their one-line form.
pub fn enumerate_involutions(n: usize) -> Vec<Involution> {
    fn go(n: usize, used: &mut [bool], arcs: &mut Vec<Arc>, out: &mut Vec<Involution>) {
        let Some(p) = (1..=n).find(|&k| !used[k]) else {
            let mut sorted = arcs.clone();
            sorted.sort_by_key(|a| a.j);
            out.push(Involution { n, arcs: sorted });
            return;
        };
        used[p] = true;
        go(n, used, arcs, out);
        for q in p + 1..=n {
            if used[q] {
                continue;
            }
            used[q] = true;
            arcs.push(Arc::new(q, p));
            go(n, used, arcs, out);
            arcs.pop();
            used[q] = false;
        }
        used[p] = false;
    }
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    go(n, &mut used, &mut Vec::new(), &mut out);
    out
}

/// A permutation in one-line notation, values `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(one_line: Vec<usize>) -> Result<Self> {
        Permutation::new(one_line)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line
    }
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// The longest element `k -> n + 1 - k`.
    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(k)`, 1-based.
    pub fn apply(&self, k: usize) -> usize {
        self.one_line[k - 1]
    }

    /// `self ∘ other`, i.e. `k -> self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            one_line: other.one_line.iter().map(|&k| self.apply(k)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { one_line: inv }
    }

    pub fn is_involution(&self) -> bool {
        self.one_line
            .iter()
            .enumerate()
            .all(|(k, &v)| self.one_line[v - 1] == k + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Reduced word `[a_1, ..., a_l]` with `w = s_{a_1} ... s_{a_l}`, built by
    /// repeatedly stripping the leftmost right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.one_line.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(d) = (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) {
            w.swap(d, d + 1);
            word.push(d + 1);
        }
        word.reverse();
        word
    }

    /// Evaluates `s_{a_1} ... s_{a_k}` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w: Vec<usize> = (1..=n).collect();
        for &a in word {
            if a == 0 || a >= n {
                return Err(Error::IndexOutOfRange { index: a, n });
            }
            w.swap(a - 1, a);
        }
        Ok(Permutation { one_line: w })
    }

    /// 0/1 matrix with the rook of column `k` in row `w(k)`.
    pub fn matrix(&self) -> RookMatrix {
        RookMatrix::from_positions(
            self.n(),
            self.one_line.iter().enumerate().map(|(k, &v)| (v, k + 1)),
        )
        .expect("a permutation places one rook per row and column")
    }

    /// Converts to an involution if `w^2 = id`.
    pub fn to_involution(&self) -> Option<Involution> {
        if !self.is_involution() {
            return None;
        }
        let arcs = self
            .one_line
            .iter()
            .enumerate()
            .filter(|&(k, &v)| v > k + 1)
            .map(|(k, &v)| Arc::new(v, k + 1));
        Involution::from_arcs(self.n(), arcs).ok()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.one_line.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Every permutation of size `n`, lexicographic.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { one_line: cur.clone() });
        // next lexicographic permutation
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
            break;
        };
        let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
    }
    out
}

/// The Bruhat lower interval of `w` as the set of products of subwords of a
/// reduced word of `w`.
pub fn subword_products(w: &Permutation) -> HashSet<Permutation> {
    let word = w.reduced_word();
    let n = w.n();
    let mut reached: HashSet<Vec<usize>> = HashSet::new();
    reached.insert((1..=n).collect());
    for &a in &word {
        let extended: Vec<Vec<usize>> = reached
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.swap(a - 1, a);
                q
            })
            .collect();
        reached.extend(extended);
    }
    reached
        .into_iter()
        .map(|one_line| Permutation { one_line })
        .collect()
}

/// Subword-property Bruhat test. Exponential in `length(w)`; meant for small `n`.
pub fn bruhat_leq_subword(v: &Permutation, w: &Permutation) -> Result<bool> {
    if v.n() != w.n() {
        return Err(Error::SizeMismatch { left: v.n(), right: w.n() });
    }
    Ok(subword_products(w).contains(v))
}
