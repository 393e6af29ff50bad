//! Embedding-respecting isomorphisms between maps.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::map::{CombinatorialMap, ElementKind, ElementRef, MapId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Preserving,
    Reversing,
}

/// Which orientation classes an enumeration should cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientations {
    #[default]
    Both,
    Preserving,
    Reversing,
}

impl Orientations {
    fn classes(self) -> &'static [Orientation] {
        match self {
            Orientations::Both => &[Orientation::Preserving, Orientation::Reversing],
            Orientations::Preserving => &[Orientation::Preserving],
            Orientations::Reversing => &[Orientation::Reversing],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MorphismKind {
    Automorphism,
    Isomorphism,
    /// An isomorphism from a map onto its dual.
    Duality,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("morphism does not belong to these maps")]
    WrongMaps,
    #[error("dart map is not a bijection")]
    NotBijective,
    #[error("dart map does not commute with alpha at dart {0}")]
    AlphaMismatch(usize),
    #[error("dart map does not commute with sigma at dart {0}")]
    SigmaMismatch(usize),
}

/// A dart bijection `psi` from `source` to `target` with
/// `psi ∘ alpha = alpha' ∘ psi` and `psi ∘ sigma = sigma'^{±1} ∘ psi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MapMorphism {
    pub source: MapId,
    pub target: MapId,
    pub darts: Vec<usize>,
    pub orientation: Orientation,
    pub kind: MorphismKind,
}

impl MapMorphism {
    pub fn identity(m: &CombinatorialMap) -> Self {
        Self {
            source: m.id(),
            target: m.id(),
            darts: (0..m.dart_count()).collect(),
            orientation: Orientation::Preserving,
            kind: MorphismKind::Automorphism,
        }
    }

    pub fn image(&self, d: usize) -> usize {
        self.darts[d]
    }

    /// Checks the commutation relations against concrete maps.
    pub fn verify(
        &self,
        src: &CombinatorialMap,
        tgt: &CombinatorialMap,
    ) -> Result<(), MorphismError> {
        if self.source != src.id() || self.target != tgt.id() {
            return Err(MorphismError::WrongMaps);
        }
        check_dart_map(&self.darts, self.orientation, src, tgt)
    }

    /// `self` followed by `next` (`next ∘ self`).
    pub fn then(&self, next: &MapMorphism) -> MapMorphism {
        let darts = self.darts.iter().map(|&d| next.darts[d]).collect();
        let orientation = if self.orientation == next.orientation {
            Orientation::Preserving
        } else {
            Orientation::Reversing
        };
        let kind = if self.source == next.target {
            MorphismKind::Automorphism
        } else {
            MorphismKind::Isomorphism
        };
        MapMorphism { source: self.source, target: next.target, darts, orientation, kind }
    }

    pub fn inverse(&self) -> MapMorphism {
        let mut darts = vec![0; self.darts.len()];
        for (d, &p) in self.darts.iter().enumerate() {
            darts[p] = d;
        }
        let kind = match self.kind {
            MorphismKind::Duality => MorphismKind::Isomorphism,
            k => k,
        };
        MapMorphism {
            source: self.target,
            target: self.source,
            darts,
            orientation: self.orientation,
            kind,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.darts.iter().enumerate().all(|(d, &p)| d == p)
    }

    /// Induced action on vertices, edges and faces.
    pub fn element_action(
        &self,
        src: &CombinatorialMap,
        tgt: &CombinatorialMap,
    ) -> Result<ElementAction, MorphismError> {
        self.verify(src, tgt).map_err(|_| MorphismError::WrongMaps)?;
        Ok(element_action_unchecked(&self.darts, self.orientation, src, tgt))
    }
}

pub(crate) fn check_dart_map(
    darts: &[usize],
    orientation: Orientation,
    src: &CombinatorialMap,
    tgt: &CombinatorialMap,
) -> Result<(), MorphismError> {
    let n = src.dart_count();
    if darts.len() != n || tgt.dart_count() != n {
        return Err(MorphismError::NotBijective);
    }
    let mut hit = vec![false; n];
    for &p in darts {
        if p >= n || hit[p] {
            return Err(MorphismError::NotBijective);
        }
        hit[p] = true;
    }
    for d in 0..n {
        if darts[src.alpha(d)] != tgt.alpha(darts[d]) {
            return Err(MorphismError::AlphaMismatch(d));
        }
        let expected = match orientation {
            Orientation::Preserving => tgt.sigma(darts[d]),
            Orientation::Reversing => tgt.sigma_inv(darts[d]),
        };
        if darts[src.sigma(d)] != expected {
            return Err(MorphismError::SigmaMismatch(d));
        }
    }
    Ok(())
}

/// Action of a morphism on the flat element space `V ⊔ E ⊔ F`.
///
/// An orientation-reversing dart map sends the face on the right of `d` to the
/// face on the left of `psi(d)`, hence the extra `alpha` for faces.
pub(crate) fn element_action_unchecked(
    darts: &[usize],
    orientation: Orientation,
    src: &CombinatorialMap,
    tgt: &CombinatorialMap,
) -> ElementAction {
    let mut image = vec![0; src.element_count()];
    for kind in [ElementKind::Vertex, ElementKind::Edge, ElementKind::Face] {
        let count = match kind {
            ElementKind::Vertex => src.vertex_count(),
            ElementKind::Edge => src.edge_count(),
            ElementKind::Face => src.face_count(),
        };
        for index in 0..count {
            let el = ElementRef { kind, index };
            let d = src.darts_of(el)[0];
            let mut p = darts[d];
            if kind == ElementKind::Face && orientation == Orientation::Reversing {
                p = tgt.alpha(p);
            }
            image[src.flat_index(el)] = tgt.flat_index(tgt.element_of(kind, p));
        }
    }
    ElementAction {
        source: src.id(),
        target: tgt.id(),
        source_counts: src.counts(),
        target_counts: tgt.counts(),
        image,
    }
}

/// A bijection between the elements of two maps, stored on flat indices
/// (vertices first, then edges, then faces).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementAction {
    pub source: MapId,
    pub target: MapId,
    pub source_counts: (usize, usize, usize),
    pub target_counts: (usize, usize, usize),
    pub image: Vec<usize>,
}

fn flat_of(counts: (usize, usize, usize), el: ElementRef) -> usize {
    match el.kind {
        ElementKind::Vertex => el.index,
        ElementKind::Edge => counts.0 + el.index,
        ElementKind::Face => counts.0 + counts.1 + el.index,
    }
}

fn element_of_flat(counts: (usize, usize, usize), flat: usize) -> ElementRef {
    if flat < counts.0 {
        ElementRef::vertex(flat)
    } else if flat < counts.0 + counts.1 {
        ElementRef::edge(flat - counts.0)
    } else {
        ElementRef::face(flat - counts.0 - counts.1)
    }
}

impl ElementAction {
    pub fn apply(&self, el: ElementRef) -> ElementRef {
        element_of_flat(self.target_counts, self.image[flat_of(self.source_counts, el)])
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ElementAction) -> ElementAction {
        ElementAction {
            source: self.source,
            target: next.target,
            source_counts: self.source_counts,
            target_counts: next.target_counts,
            image: self.image.iter().map(|&x| next.image[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Fixed elements of a self-map.
    pub fn fixed(&self) -> Vec<ElementRef> {
        self.image
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x)
            .map(|(i, _)| element_of_flat(self.source_counts, i))
            .collect()
    }

    pub fn is_involution(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| self.image[x] == i)
    }
}

impl fmt::Display for ElementAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.image.len();
        for i in 0..n {
            if i > 0 {
                write!(f, " ")?;
            }
            let from = element_of_flat(self.source_counts, i);
            write!(f, "{from}->{}", self.apply(from))?;
        }
        Ok(())
    }
}

/// Extends `psi(anchor) = image` to a full dart map by propagating along
/// alpha and sigma; `None` on any inconsistency.
fn propagate(
    src: &CombinatorialMap,
    tgt: &CombinatorialMap,
    anchor: usize,
    image: usize,
    orientation: Orientation,
) -> Option<Vec<usize>> {
    let n = src.dart_count();
    let mut psi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    psi[anchor] = image;
    used[image] = true;
    let mut stack = vec![anchor];
    while let Some(d) = stack.pop() {
        let p = psi[d];
        let rot = match orientation {
            Orientation::Preserving => tgt.sigma(p),
            Orientation::Reversing => tgt.sigma_inv(p),
        };
        for (next, next_img) in [(src.alpha(d), tgt.alpha(p)), (src.sigma(d), rot)] {
            if psi[next] == usize::MAX {
                if used[next_img] {
                    return None;
                }
                psi[next] = next_img;
                used[next_img] = true;
                stack.push(next);
            } else if psi[next] != next_img {
                return None;
            }
        }
    }
    Some(psi)
}

/// All isomorphisms from `m` to `n` in the requested orientation classes,
/// sorted by dart image then orientation.
///
/// Every isomorphism of connected maps is determined by the image of a single
/// dart, so anchoring dart 0 of `m` at each dart of `n` is exhaustive.
pub fn enumerate_isomorphisms(
    m: &CombinatorialMap,
    n: &CombinatorialMap,
    orientations: Orientations,
) -> Vec<MapMorphism> {
    if m.dart_count() != n.dart_count() || m.counts() != n.counts() {
        return Vec::new();
    }
    let kind = if m.id() == n.id() { MorphismKind::Automorphism } else { MorphismKind::Isomorphism };
    // When every vertex has degree <= 2 the same dart map can be valid in both
    // orientation classes; the two differ in their action on faces and are
    // kept as distinct morphisms.
    let mut out = Vec::new();
    for &orientation in orientations.classes() {
        for image in 0..n.dart_count() {
            if let Some(darts) = propagate(m, n, 0, image, orientation) {
                out.push(MapMorphism { source: m.id(), target: n.id(), darts, orientation, kind });
            }
        }
    }
    out.sort_by(|a, b| (&a.darts, a.orientation).cmp(&(&b.darts, b.orientation)));
    out
}

pub fn automorphisms(m: &CombinatorialMap, orientations: Orientations) -> Vec<MapMorphism> {
    enumerate_isomorphisms(m, m, orientations)
}

pub fn are_isomorphic(m: &CombinatorialMap, n: &CombinatorialMap) -> bool {
    if m.counts() != n.counts() {
        return false;
    }
    (0..n.dart_count()).any(|image| {
        propagate(m, n, 0, image, Orientation::Preserving).is_some()
            || propagate(m, n, 0, image, Orientation::Reversing).is_some()
    })
}

/// Free-function form of [`MapMorphism::element_action`].
pub fn element_action(
    mor: &MapMorphism,
    src: &CombinatorialMap,
    tgt: &CombinatorialMap,
) -> Result<ElementAction, MorphismError> {
    mor.element_action(src, tgt)
}
