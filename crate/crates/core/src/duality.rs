//! Duality isomorphisms `G → G*` and (strong) involutivity.

use crate::derived::{dual, incidence, DerivedMap, Origin};
use crate::map::{CombinatorialMap, ElementKind, ElementRef};
use crate::morphism::{
    element_action_unchecked, enumerate_isomorphisms, ElementAction, MapMorphism, MorphismKind,
    Orientation, Orientations,
};

/// A duality isomorphism together with its induced self-duality on the
/// elements of `G` (vertices to faces, faces to vertices, edges to edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityWitness {
    /// Dart isomorphism from `G` onto `dual(G)`.
    pub morphism: MapMorphism,
    pub element_map: ElementAction,
    pub involutive: bool,
    pub strongly_involutive: bool,
}

impl DualityWitness {
    pub fn orientation(&self) -> Orientation {
        self.morphism.orientation
    }

    /// Face assigned to vertex `v`.
    pub fn face_of_vertex(&self, v: usize) -> usize {
        self.element_map.apply(ElementRef::vertex(v)).index
    }

    /// Vertex assigned to face `f`.
    pub fn vertex_of_face(&self, f: usize) -> usize {
        self.element_map.apply(ElementRef::face(f)).index
    }
}

/// Reads an element action into `dual(m)` back onto the elements of `m`.
fn pull_back(m: &CombinatorialMap, d: &DerivedMap, into_dual: &ElementAction) -> ElementAction {
    let image = (0..m.element_count())
        .map(|flat| {
            let target = into_dual.apply(m.element_at(flat));
            let back = match d.origin(target) {
                Origin::Vertex(i) => ElementRef::vertex(i),
                Origin::Edge(i) => ElementRef::edge(i),
                Origin::Face(i) => ElementRef::face(i),
                other => unreachable!("dual element with origin {other:?}"),
            };
            m.flat_index(back)
        })
        .collect();
    ElementAction {
        source: m.id(),
        target: m.id(),
        source_counts: m.counts(),
        target_counts: m.counts(),
        image,
    }
}

fn involutive_on_vertices_and_faces(m: &CombinatorialMap, action: &ElementAction) -> bool {
    (0..m.vertex_count()).map(ElementRef::vertex).chain((0..m.face_count()).map(ElementRef::face)).all(|el| {
        action.apply(action.apply(el)) == el
    })
}

fn witness(m: &CombinatorialMap, d: &DerivedMap, mut morphism: MapMorphism) -> DualityWitness {
    morphism.kind = MorphismKind::Duality;
    let into_dual = element_action_unchecked(&morphism.darts, morphism.orientation, m, &d.map);
    let element_map = pull_back(m, d, &into_dual);
    let involutive = involutive_on_vertices_and_faces(m, &element_map);
    let strongly_involutive = involutive
        && (0..m.vertex_count()).all(|v| {
            let f = element_map.apply(ElementRef::vertex(v));
            debug_assert_eq!(f.kind, ElementKind::Face);
            !m.vertex_on_face(v, f.index)
        });
    DualityWitness { morphism, element_map, involutive, strongly_involutive }
}

/// All duality isomorphisms of `m` in both orientation classes, sorted by dart
/// image. Empty iff `m` is not self-dual.
pub fn enumerate_dualities(m: &CombinatorialMap) -> Vec<DualityWitness> {
    dualities_among(m, Orientations::Both)
}

/// Dualities restricted to the given orientation classes.
pub fn dualities_among(m: &CombinatorialMap, orientations: Orientations) -> Vec<DualityWitness> {
    let d = dual(m);
    enumerate_isomorphisms(m, &d.map, orientations)
        .into_iter()
        .map(|mor| witness(m, &d, mor))
        .collect()
}

pub fn is_self_dual(m: &CombinatorialMap) -> bool {
    if m.vertex_count() != m.face_count() {
        return false;
    }
    crate::morphism::are_isomorphic(m, &dual(m).map)
}

pub fn is_involutive(w: &DualityWitness) -> bool {
    w.involutive
}

/// First strongly involutive duality, if any.
pub fn is_strongly_involutive(m: &CombinatorialMap) -> Option<DualityWitness> {
    enumerate_dualities(m).into_iter().find(|w| w.strongly_involutive)
}

/// Strong involutivity decided on `I(m)`: some involutive duality leaves no
/// incidence edge joining a black vertex `v` to the white vertex `σ(v)`.
pub fn strongly_involutive_by_incidence(m: &CombinatorialMap) -> bool {
    let inc = incidence(m);
    let joined: Vec<(usize, usize)> = (0..inc.map.edge_count())
        .map(|e| {
            let (a, b) = inc.map.endpoints(e);
            match (inc.vertex_origin[a], inc.vertex_origin[b]) {
                (Origin::Vertex(v), Origin::Face(f)) | (Origin::Face(f), Origin::Vertex(v)) => (v, f),
                other => unreachable!("incidence edge between {other:?}"),
            }
        })
        .collect();
    enumerate_dualities(m)
        .iter()
        .filter(|w| w.involutive)
        .any(|w| joined.iter().all(|&(v, f)| w.face_of_vertex(v) != f))
}

/// Counts `(|Aut|, |Iso|)`; for a self-dual map `|Dual(G)| = |Aut| + |Iso|`.
pub fn duality_group_sizes(m: &CombinatorialMap) -> (usize, usize) {
    let aut = crate::morphism::automorphisms(m, Orientations::Both).len();
    (aut, enumerate_dualities(m).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{ear, wheel};

    #[test]
    fn wheel3_duality_counts() {
        let w = wheel(3).unwrap();
        assert_eq!(duality_group_sizes(&w), (24, 24));
    }

    #[test]
    fn triangle_not_self_dual() {
        let k3 = CombinatorialMap::from_rotation(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert!(enumerate_dualities(&k3).is_empty());
        assert!(!is_self_dual(&k3));
    }

    #[test]
    fn wheel4_self_dual_not_strong() {
        let w = wheel(4).unwrap();
        assert!(is_self_dual(&w));
        assert!(is_strongly_involutive(&w).is_none());
    }

    #[test]
    fn strong_families() {
        assert!(is_strongly_involutive(&wheel(5).unwrap()).is_some());
        assert!(is_strongly_involutive(&ear(6).unwrap()).is_some());
    }

    #[test]
    fn witnesses_are_dualities() {
        let w = wheel(5).unwrap();
        let d = dual(&w);
        for wit in enumerate_dualities(&w) {
            wit.morphism.verify(&w, &d.map).unwrap();
            assert_eq!(wit.morphism.kind, MorphismKind::Duality);
            for v in 0..w.vertex_count() {
                assert_eq!(wit.element_map.apply(ElementRef::vertex(v)).kind, ElementKind::Face);
            }
        }
    }
}
