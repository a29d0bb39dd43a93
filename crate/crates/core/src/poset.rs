//! The finite poset of involutions under one of the rank orders, its covering
//! relation, grading, L-sets and Hasse-diagram export.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{enumerate_involutions, Involution};
use crate::rank::{OrderKind, RankMatrix};

/// Largest `n` for which [`build_poset`] runs.
pub const POSET_BOUND: usize = 8;

#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    order: OrderKind,
    elements: Vec<Involution>,
    keys: Vec<RankMatrix>,
    index: HashMap<Involution, usize>,
    // below[a] has bit b set iff elements[b] <= elements[a]
    below: Vec<FixedBitSet>,
    // covers[a] lists the lower covers of elements[a], ascending
    covers: Vec<Vec<usize>>,
}

/// L-sets of one element, computed from the order relation by exhaustive scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LSets {
    pub minus: BTreeSet<Involution>,
    pub zero: BTreeSet<Involution>,
    pub plus: BTreeSet<Involution>,
    pub prime: BTreeSet<Involution>,
    pub star: BTreeSet<Involution>,
}

#[derive(Serialize)]
struct HasseJson<'a> {
    n: usize,
    order: OrderKind,
    elements: Vec<String>,
    covers: &'a [[usize; 2]],
}

pub fn build_poset(n: usize, order: OrderKind) -> Result<Poset> {
    build_poset_bounded(n, order, POSET_BOUND)
}

pub fn build_poset_bounded(n: usize, order: OrderKind, bound: usize) -> Result<Poset> {
    if n > bound {
        return Err(Error::BoundExceeded { what: "poset".into(), n, bound });
    }
    let elements = enumerate_involutions(n);
    let keys: Vec<RankMatrix> = elements.par_iter().map(|s| order.key(s)).collect();
    let m = elements.len();
    let below: Vec<FixedBitSet> = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut set = FixedBitSet::with_capacity(m);
            for b in 0..m {
                if order.key_le(&keys[b], &keys[a]) {
                    set.insert(b);
                }
            }
            set
        })
        .collect();
    let covers = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut strict = below[a].clone();
            strict.set(a, false);
            let mut implied = FixedBitSet::with_capacity(m);
            for b in strict.ones() {
                let mut sb = below[b].clone();
                sb.set(b, false);
                implied.union_with(&sb);
            }
            strict.difference_with(&implied);
            strict.ones().collect()
        })
        .collect();
    let index = elements.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect();
    Ok(Poset { n, order, elements, keys, index, below, covers })
}

impl Poset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> OrderKind {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Involution] {
        &self.elements
    }

    pub fn key(&self, k: usize) -> &RankMatrix {
        &self.keys[k]
    }

    pub fn index_of(&self, sigma: &Involution) -> Result<usize> {
        self.index.get(sigma).copied().ok_or(Error::NotInPoset)
    }

    /// `elements[a] <= elements[b]`.
    pub fn leq_index(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn leq(&self, tau: &Involution, sigma: &Involution) -> Result<bool> {
        Ok(self.leq_index(self.index_of(tau)?, self.index_of(sigma)?))
    }

    pub fn lower_covers_index(&self, a: usize) -> &[usize] {
        &self.covers[a]
    }

    pub fn lower_covers(&self, sigma: &Involution) -> Result<BTreeSet<Involution>> {
        let a = self.index_of(sigma)?;
        Ok(self.covers[a].iter().map(|&b| self.elements[b].clone()).collect())
    }

    /// All covering pairs `[upper, lower]` as element indices.
    pub fn cover_pairs(&self) -> Vec<[usize; 2]> {
        self.covers
            .iter()
            .enumerate()
            .flat_map(|(a, cs)| cs.iter().map(move |&b| [a, b]))
            .collect()
    }

    pub fn num_covers(&self) -> usize {
        self.covers.iter().map(Vec::len).sum()
    }

    /// Elements listed so that every element comes after everything below it.
    fn linear_extension(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&a| (self.below[a].count_ones(..), a));
        idx
    }

    /// Shortest and longest cover-path lengths from the minimal elements.
    pub fn heights(&self) -> (Vec<usize>, Vec<usize>) {
        let m = self.len();
        let mut lo = vec![0usize; m];
        let mut hi = vec![0usize; m];
        for a in self.linear_extension() {
            if let Some(l) = self.covers[a].iter().map(|&b| lo[b] + 1).min() {
                lo[a] = l;
                hi[a] = self.covers[a].iter().map(|&b| hi[b] + 1).max().unwrap_or(0);
            }
        }
        (lo, hi)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.covers[a].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| b == a || !self.leq_index(a, b)))
            .collect()
    }

    /// The rank function if the poset has a unique minimum and maximum and
    /// every maximal chain has the same length.
    pub fn grades(&self) -> Option<Vec<usize>> {
        if self.minimal_elements().len() != 1 || self.maximal_elements().len() != 1 {
            return None;
        }
        let (lo, hi) = self.heights();
        (lo == hi).then_some(lo)
    }

    pub fn is_graded(&self) -> bool {
        self.grades().is_some()
    }

    /// L-sets of `sigma`. `σ′ = σ` is never included.
    pub fn l_sets(&self, sigma: &Involution) -> Result<LSets> {
        let a = self.index_of(sigma)?;
        let s = sigma.support_size();
        let mut strict = self.below[a].clone();
        strict.set(a, false);
        let mut out = LSets::default();
        for b in strict.ones() {
            let sb = self.elements[b].support_size();
            // intermediates w with elements[b] <= w < sigma, w != elements[b]
            let mut between = strict.ones().filter(|&w| w != b && self.leq_index(b, w));
            let elem = self.elements[b].clone();
            if sb < s {
                let mut between_small = strict
                    .ones()
                    .filter(|&w| w != b && self.leq_index(b, w) && self.elements[w].support_size() < s);
                if between_small.next().is_none() {
                    out.minus.insert(elem.clone());
                }
                if between.next().is_none() {
                    out.prime.insert(elem.clone());
                    out.star.insert(elem);
                }
            } else if between.next().is_none() {
                if sb == s {
                    out.zero.insert(elem.clone());
                } else {
                    out.plus.insert(elem.clone());
                }
                out.star.insert(elem);
            }
        }
        Ok(out)
    }

    /// DOT digraph, one rank per layer, edges from upper to lower cover.
    pub fn to_dot(&self) -> String {
        let (_, layer) = self.heights();
        let mut out = String::new();
        let _ = writeln!(out, "digraph involutions_{}_{} {{", self.order.name(), self.n);
        let _ = writeln!(out, "  rankdir=BT;");
        let top = layer.iter().copied().max().unwrap_or(0);
        for r in 0..=top {
            let nodes: Vec<String> = (0..self.len())
                .filter(|&a| layer[a] == r)
                .map(|a| format!("n{a}"))
                .collect();
            if !nodes.is_empty() {
                let _ = writeln!(out, "  {{ rank=same; {}; }}", nodes.join("; "));
            }
        }
        for (a, sigma) in self.elements.iter().enumerate() {
            let _ = writeln!(out, "  n{a} [label=\"{sigma}\"];");
        }
        for [a, b] in self.cover_pairs() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    /// `{"n", "order", "elements": [cycle strings], "covers": [[upper, lower], ...]}`.
    pub fn to_json(&self) -> String {
        let covers = self.cover_pairs();
        let json = HasseJson {
            n: self.n,
            order: self.order,
            elements: self.elements.iter().map(ToString::to_string).collect(),
            covers: &covers,
        };
        serde_json::to_string_pretty(&json).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(s: &str, n: usize) -> Involution {
        Involution::parse(s, n).unwrap()
    }

    #[test]
    fn small_posets() {
        let p2 = build_poset(2, OrderKind::Star).unwrap();
        assert_eq!(p2.len(), 2);
        assert_eq!(p2.cover_pairs().len(), 1);

        let p3 = build_poset(3, OrderKind::Star).unwrap();
        assert_eq!(p3.len(), 4);
        let expect: BTreeSet<_> = [inv("(2,1)", 3), inv("(3,2)", 3)].into();
        assert_eq!(p3.lower_covers(&inv("(3,1)", 3)).unwrap(), expect);
        let id: BTreeSet<_> = [Involution::identity(3)].into();
        assert_eq!(p3.lower_covers(&inv("(2,1)", 3)).unwrap(), id);
        assert_eq!(p3.lower_covers(&inv("(3,2)", 3)).unwrap(), id);
        assert_eq!(p3.num_covers(), 4);

        let p4 = build_poset(4, OrderKind::Star).unwrap();
        assert_eq!(p4.len(), 10);
        assert!(p4.is_graded());
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            build_poset(9, OrderKind::Star),
            Err(Error::BoundExceeded { n: 9, bound: 8, .. })
        ));
    }

    #[test]
    fn l_sets_of_small_elements() {
        let p3 = build_poset(3, OrderKind::Star).unwrap();
        let l = p3.l_sets(&inv("(3,1)", 3)).unwrap();
        let id: BTreeSet<_> = [Involution::identity(3)].into();
        assert_eq!(l.minus, id);
        assert!(l.prime.is_empty());
        let covers: BTreeSet<_> = [inv("(2,1)", 3), inv("(3,2)", 3)].into();
        assert_eq!(l.zero, covers);
        assert_eq!(l.star, covers);

        let empty = p3.l_sets(&Involution::identity(3)).unwrap();
        assert_eq!(empty, LSets::default());

        let p4 = build_poset(4, OrderKind::Star).unwrap();
        assert!(p4.l_sets(&Involution::longest(4)).unwrap().plus.is_empty());
        assert!(matches!(p4.l_sets(&Involution::identity(3)), Err(Error::NotInPoset)));
    }

    #[test]
    fn exports() {
        let p3 = build_poset(3, OrderKind::Star).unwrap();
        let json: serde_json::Value = serde_json::from_str(&p3.to_json()).unwrap();
        assert_eq!(json["elements"].as_array().unwrap().len(), 4);
        assert_eq!(json["covers"].as_array().unwrap().len(), 4);
        let dot = p3.to_dot();
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.contains("label=\"(3,1)\""));
    }
}
