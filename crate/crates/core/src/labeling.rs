//! Involutive labelings of a map's vertices.
//!
//! Labels come in opposite pairs `x_i` / `x̄_i`. A labeling is involutive when
//!
//! 1. every vertex carries one or two labels,
//! 2. a vertex with two labels carries an opposite pair (a *fixed* vertex),
//! 3. distinct vertices share no label,
//! 4. `{Λ⁻¹(a), Λ⁻¹(b)}` is an edge iff `{Λ⁻¹(ā), Λ⁻¹(b̄)}` is an edge.
//!
//! Such a labeling is the same thing as an adjacency-preserving involution of
//! the vertex set; its fixed vertices are those labelled by a pair.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::map::{CombinatorialMap, MapId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub index: usize,
    pub bar: bool,
}

impl Label {
    pub fn plain(index: usize) -> Self {
        Self { index, bar: false }
    }
    pub fn barred(index: usize) -> Self {
        Self { index, bar: true }
    }
    pub fn opposite(self) -> Self {
        Self { index: self.index, bar: !self.bar }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bar {
            write!(f, "~x{}", self.index)
        } else {
            write!(f, "x{}", self.index)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling refers to vertex {0}, which the host does not have")]
    UnknownVertex(usize),
    #[error("permutation is not an involution at {0}")]
    NotInvolution(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelingClause {
    /// (i) one or two labels per vertex
    LabelCount,
    /// (ii) two labels form an opposite pair
    FixedPair,
    /// (iii) label sets are pairwise disjoint
    Disjoint,
    /// (iv) adjacency is symmetric under label opposition
    EdgeCompatible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingViolation {
    pub clause: LabelingClause,
    pub vertices: Vec<usize>,
}

/// A labeling of the vertices of `host`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutiveLabeling {
    pub host: MapId,
    pub labels: Vec<Vec<Label>>,
    pub fixed_vertices: Vec<usize>,
}

impl InvolutiveLabeling {
    /// Labels a vertex involution: 2-cycles get `x_i` / `x̄_i` (smaller vertex
    /// first), fixed points get the pair.
    pub fn from_involution(host: &CombinatorialMap, tau: &[usize]) -> Result<Self, LabelingError> {
        if tau.len() != host.vertex_count() {
            return Err(LabelingError::UnknownVertex(tau.len().min(host.vertex_count())));
        }
        for (v, &u) in tau.iter().enumerate() {
            if u >= tau.len() || tau[u] != v {
                return Err(LabelingError::NotInvolution(v));
            }
        }
        let mut labels = vec![Vec::new(); tau.len()];
        let mut fixed_vertices = Vec::new();
        let mut next = 1;
        for v in 0..tau.len() {
            if !labels[v].is_empty() {
                continue;
            }
            let u = tau[v];
            if u == v {
                labels[v] = vec![Label::plain(next), Label::barred(next)];
                fixed_vertices.push(v);
            } else {
                labels[v] = vec![Label::plain(next)];
                labels[u] = vec![Label::barred(next)];
            }
            next += 1;
        }
        Ok(Self { host: host.id(), labels, fixed_vertices })
    }

    /// The involution `v ↦ u` with `Λ(u) = opposite(Λ(v))`. Assumes the labeling
    /// is valid.
    pub fn involution(&self) -> Vec<usize> {
        let mut owner = BTreeMap::new();
        for (v, ls) in self.labels.iter().enumerate() {
            for &l in ls {
                owner.insert(l, v);
            }
        }
        self.labels
            .iter()
            .enumerate()
            .map(|(v, ls)| ls.first().and_then(|l| owner.get(&l.opposite()).copied()).unwrap_or(v))
            .collect()
    }
}

/// Checks clauses (i)-(iv) on an arbitrary labeling of `host`'s vertices and
/// reports the first one violated.
pub fn verify_involutive_labeling(
    host: &CombinatorialMap,
    labels: &[Vec<Label>],
) -> Result<Option<LabelingViolation>, LabelingError> {
    let n = host.vertex_count();
    if labels.len() > n {
        return Err(LabelingError::UnknownVertex(n));
    }
    let sets: Vec<BTreeSet<Label>> = (0..n)
        .map(|v| labels.get(v).map(|ls| ls.iter().copied().collect()).unwrap_or_default())
        .collect();
    let violation = |clause, vertices| Ok(Some(LabelingViolation { clause, vertices }));

    for (v, s) in sets.iter().enumerate() {
        if s.is_empty() || s.len() > 2 {
            return violation(LabelingClause::LabelCount, vec![v]);
        }
    }
    for (v, s) in sets.iter().enumerate() {
        if s.len() == 2 {
            let mut it = s.iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            if a.opposite() != *b {
                return violation(LabelingClause::FixedPair, vec![v]);
            }
        }
    }
    let mut owner: BTreeMap<Label, usize> = BTreeMap::new();
    for (v, s) in sets.iter().enumerate() {
        for &l in s {
            if let Some(&u) = owner.get(&l) {
                return violation(LabelingClause::Disjoint, vec![u, v]);
            }
            owner.insert(l, v);
        }
    }

    let mut adjacent = HashSet::new();
    for e in 0..host.edge_count() {
        let (a, b) = host.endpoints(e);
        adjacent.insert((a, b));
        adjacent.insert((b, a));
    }
    for (&l, &v) in &owner {
        if !owner.contains_key(&l.opposite()) {
            return violation(LabelingClause::EdgeCompatible, vec![v]);
        }
    }
    let all: Vec<(Label, usize)> = owner.iter().map(|(&l, &v)| (l, v)).collect();
    for &(la, u) in &all {
        for &(lb, v) in &all {
            let ou = owner[&la.opposite()];
            let ov = owner[&lb.opposite()];
            if adjacent.contains(&(u, v)) != adjacent.contains(&(ou, ov)) {
                return violation(LabelingClause::EdgeCompatible, vec![u, v]);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> CombinatorialMap {
        // 0 - 1 - 2
        CombinatorialMap::from_rotation(&[vec![1], vec![0, 2], vec![1]]).unwrap()
    }

    #[test]
    fn reflection_of_a_path() {
        let p = path3();
        let l = InvolutiveLabeling::from_involution(&p, &[2, 1, 0]).unwrap();
        assert_eq!(l.fixed_vertices, vec![1]);
        assert_eq!(verify_involutive_labeling(&p, &l.labels).unwrap(), None);
        assert_eq!(l.involution(), vec![2, 1, 0]);
    }

    #[test]
    fn shared_label_violates_disjointness() {
        let p = path3();
        let labels = vec![vec![Label::plain(3)], vec![Label::plain(3)], vec![Label::barred(3)]];
        let v = verify_involutive_labeling(&p, &labels).unwrap().unwrap();
        assert_eq!(v.clause, LabelingClause::Disjoint);
    }

    #[test]
    fn non_adjacency_preserving_pairing() {
        // swapping 0 and 1 while fixing 2 sends edge {1,2} to the non-edge {0,2}
        let p = path3();
        let labels = vec![vec![Label::plain(1)], vec![Label::barred(1)], vec![Label::plain(2), Label::barred(2)]];
        let v = verify_involutive_labeling(&p, &labels).unwrap().unwrap();
        assert_eq!(v.clause, LabelingClause::EdgeCompatible);
    }

    #[test]
    fn clause_one_and_two() {
        let p = path3();
        let empty = vec![vec![], vec![Label::plain(1)], vec![Label::barred(1)]];
        assert_eq!(verify_involutive_labeling(&p, &empty).unwrap().unwrap().clause, LabelingClause::LabelCount);
        let unpaired = vec![vec![Label::plain(1), Label::plain(2)], vec![Label::barred(1)], vec![Label::barred(2)]];
        assert_eq!(verify_involutive_labeling(&p, &unpaired).unwrap().unwrap().clause, LabelingClause::FixedPair);
    }

    #[test]
    fn unknown_vertex() {
        let p = path3();
        let labels = vec![vec![Label::plain(1)]; 4];
        assert_eq!(verify_involutive_labeling(&p, &labels), Err(LabelingError::UnknownVertex(3)));
    }

    #[test]
    fn not_an_involution() {
        let p = path3();
        assert_eq!(
            InvolutiveLabeling::from_involution(&p, &[1, 2, 0]),
            Err(LabelingError::NotInvolution(0))
        );
    }
}
