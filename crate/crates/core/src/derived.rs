//! Maps derived from a map `G`: the dual `G*`, the medial `med(G)`, the
//! vertex-face incidence map `I(G)` and the squares graph `G□`.
//!
//! Every construction is a dart rewrite. A *corner* of `G` is identified with a
//! dart `d`: it is the angle at the origin of `d` between `d` and `sigma(d)`,
//! which lies in the face of `sigma(d)`.
//!
//! Dart layouts (with `n = 2|E(G)|`):
//!
//! | map        | darts | layout                                                     |
//! |------------|-------|------------------------------------------------------------|
//! | dual       | `n`   | same darts, `sigma* = phi⁻¹`                                |
//! | incidence  | `2n`  | `2d` black end, `2d+1` white end of the edge at corner `d`  |
//! | medial     | `2n`  | `2d` at `edge(d)`, `2d+1` at `edge(sigma(d))`, corner `d`   |
//! | square     | `4n`  | `4d..4d+4`: half-edge of `d` (vertex end, middle end), dual half-edge on the right of `d` (face end, middle end) |

use serde::{Deserialize, Serialize};

use crate::map::{invert, CombinatorialMap, ElementKind, ElementRef, MapId};

/// What a derived element stands for in the source map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", content = "index", rename_all = "snake_case")]
pub enum Origin {
    Vertex(usize),
    Edge(usize),
    Face(usize),
    /// Vertex-face angle, named by its dart.
    Corner(usize),
    /// Half of the edge of the given dart, on the side of its origin.
    HalfEdge(usize),
    /// Half of the dual edge crossing the given dart, on the side of its right face.
    DualHalfEdge(usize),
}

impl Origin {
    pub fn element(self) -> Option<ElementRef> {
        match self {
            Origin::Vertex(i) => Some(ElementRef::vertex(i)),
            Origin::Edge(i) => Some(ElementRef::edge(i)),
            Origin::Face(i) => Some(ElementRef::face(i)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Derivation {
    Dual,
    Medial,
    Incidence,
    Square,
}

/// A derived map together with the origin of each of its elements.
#[derive(Debug, Clone)]
pub struct DerivedMap {
    pub map: CombinatorialMap,
    pub derivation: Derivation,
    pub source: MapId,
    pub vertex_origin: Vec<Origin>,
    pub edge_origin: Vec<Origin>,
    pub face_origin: Vec<Origin>,
}

impl DerivedMap {
    fn new(
        map: CombinatorialMap,
        derivation: Derivation,
        source: &CombinatorialMap,
        origin: impl Fn(&CombinatorialMap, ElementKind, usize) -> Origin,
    ) -> Self {
        let collect = |kind: ElementKind, count: usize| -> Vec<Origin> {
            (0..count)
                .map(|i| origin(&map, kind, map.darts_of(ElementRef { kind, index: i })[0]))
                .collect()
        };
        let vertex_origin = collect(ElementKind::Vertex, map.vertex_count());
        let edge_origin = collect(ElementKind::Edge, map.edge_count());
        let face_origin = collect(ElementKind::Face, map.face_count());
        Self { map, derivation, source: source.id(), vertex_origin, edge_origin, face_origin }
    }

    pub fn origin(&self, el: ElementRef) -> Origin {
        match el.kind {
            ElementKind::Vertex => self.vertex_origin[el.index],
            ElementKind::Edge => self.edge_origin[el.index],
            ElementKind::Face => self.face_origin[el.index],
        }
    }

    /// Derived vertex whose origin is `origin`, if any.
    pub fn vertex_from(&self, origin: Origin) -> Option<usize> {
        self.vertex_origin.iter().position(|&o| o == origin)
    }
}

/// The dual map on the same darts.
///
/// Dual vertices are the faces of `m` (same dart orbits) and the dual face
/// containing dart `d` is the vertex at the head of `d`.
pub fn dual(m: &CombinatorialMap) -> DerivedMap {
    let alpha = m.alpha_perm().to_vec();
    let sigma = invert(m.phi_perm());
    let map = CombinatorialMap::new(alpha, sigma).expect("dual of a sphere map is a sphere map");
    DerivedMap::new(map, Derivation::Dual, m, |_, kind, d| match kind {
        ElementKind::Vertex => Origin::Face(m.face_of(d)),
        ElementKind::Edge => Origin::Edge(m.edge_of(d)),
        ElementKind::Face => Origin::Vertex(m.vertex_of(m.alpha(d))),
    })
}

/// Vertex-face incidence map `I(m)`: one edge per corner, black vertices are
/// the vertices of `m`, white vertices its faces. All faces are quadrilaterals,
/// one around each edge of `m`.
pub fn incidence(m: &CombinatorialMap) -> DerivedMap {
    let n = m.dart_count();
    let mut alpha = vec![0; 2 * n];
    let mut sigma = vec![0; 2 * n];
    for d in 0..n {
        alpha[2 * d] = 2 * d + 1;
        alpha[2 * d + 1] = 2 * d;
        sigma[2 * d] = 2 * m.sigma(d);
        sigma[2 * d + 1] = 2 * m.sigma_inv(m.alpha(d)) + 1;
    }
    let map = CombinatorialMap::new(alpha, sigma).expect("incidence map is spherical");
    DerivedMap::new(map, Derivation::Incidence, m, |_, kind, t| {
        let d = t / 2;
        match (kind, t % 2) {
            (ElementKind::Vertex, 0) => Origin::Vertex(m.vertex_of(d)),
            (ElementKind::Vertex, _) => Origin::Face(m.face_of(m.sigma(d))),
            (ElementKind::Edge, _) => Origin::Corner(d),
            (ElementKind::Face, 0) => Origin::Edge(m.edge_of(d)),
            (ElementKind::Face, _) => Origin::Edge(m.edge_of(m.sigma(d))),
        }
    })
}

/// Black dart of the incidence edge at corner `d`.
pub fn incidence_black_dart(d: usize) -> usize {
    2 * d
}

/// White dart of the incidence edge at corner `d`.
pub fn incidence_white_dart(d: usize) -> usize {
    2 * d + 1
}

/// Medial map: a vertex on each edge of `m`, an edge through each corner.
/// Faces correspond to the vertices and faces of `m`.
pub fn medial(m: &CombinatorialMap) -> DerivedMap {
    let n = m.dart_count();
    let mut alpha = vec![0; 2 * n];
    let mut sigma = vec![0; 2 * n];
    for d in 0..n {
        alpha[2 * d] = 2 * d + 1;
        alpha[2 * d + 1] = 2 * d;
        sigma[2 * d] = 2 * m.sigma_inv(d) + 1;
        sigma[2 * d + 1] = 2 * m.alpha(m.sigma(d));
    }
    let map = CombinatorialMap::new(alpha, sigma).expect("medial map is spherical");
    DerivedMap::new(map, Derivation::Medial, m, |_, kind, t| {
        let d = t / 2;
        match (kind, t % 2) {
            (ElementKind::Vertex, 0) => Origin::Edge(m.edge_of(d)),
            (ElementKind::Vertex, _) => Origin::Edge(m.edge_of(m.sigma(d))),
            (ElementKind::Edge, _) => Origin::Corner(d),
            (ElementKind::Face, 0) => Origin::Face(m.face_of(m.alpha(d))),
            (ElementKind::Face, _) => Origin::Vertex(m.vertex_of(d)),
        }
    })
}

/// Squares graph: `m` and its dual drawn together, every edge split where it
/// crosses its dual edge. Vertex origins are `Vertex` (V_V), `Edge` (V_E) and
/// `Face` (V_F); each face is the square at one corner.
pub fn square(m: &CombinatorialMap) -> DerivedMap {
    let n = m.dart_count();
    let mut alpha = vec![0; 4 * n];
    let mut sigma = vec![0; 4 * n];
    let phi_inv = invert(m.phi_perm());
    for d in 0..n {
        let (a, b, c, e) = (4 * d, 4 * d + 1, 4 * d + 2, 4 * d + 3);
        alpha[a] = b;
        alpha[b] = a;
        alpha[c] = e;
        alpha[e] = c;
        sigma[a] = 4 * m.sigma(d);
        sigma[b] = e;
        sigma[e] = 4 * m.alpha(d) + 1;
        sigma[c] = 4 * phi_inv[d] + 2;
    }
    let map = CombinatorialMap::new(alpha, sigma).expect("squares graph is spherical");
    DerivedMap::new(map, Derivation::Square, m, |q, kind, t| {
        let d = t / 4;
        match (kind, t % 4) {
            (ElementKind::Vertex, 0) => Origin::Vertex(m.vertex_of(d)),
            (ElementKind::Vertex, 2) => Origin::Face(m.face_of(d)),
            (ElementKind::Vertex, _) => Origin::Edge(m.edge_of(d)),
            (ElementKind::Edge, 0 | 1) => Origin::HalfEdge(d),
            (ElementKind::Edge, _) => Origin::DualHalfEdge(d),
            (ElementKind::Face, _) => {
                // each square has exactly one dart leaving its V_V corner
                let mut x = t;
                while x % 4 != 0 {
                    x = q.phi(x);
                }
                Origin::Corner(m.sigma_inv(x / 4))
            }
        }
    })
}

/// The two diagonals of the square face at corner `d` of `m`: the incidence
/// diagonal (vertex, face) and the intersecting diagonal (edge, edge).
pub fn square_face_diagonals(m: &CombinatorialMap, corner: usize) -> ((usize, usize), (usize, usize)) {
    let s = m.sigma(corner);
    (
        (m.vertex_of(corner), m.face_of(s)),
        (m.edge_of(corner), m.edge_of(s)),
    )
}

/// Map formed by one diagonal of every face of a quadrangulation `q`, joining
/// the two opposite corners whose vertices satisfy `keep`.
///
/// `keep` must select exactly two opposite corners of every face (one colour
/// class of a bipartite quadrangulation).
pub fn diagonal_map(
    q: &CombinatorialMap,
    keep: impl Fn(usize) -> bool,
) -> Result<CombinatorialMap, crate::map::MapError> {
    let n = q.dart_count();
    let mut index = vec![usize::MAX; n];
    let mut kept = Vec::new();
    for t in 0..n {
        if keep(q.vertex_of(t)) {
            index[t] = kept.len();
            kept.push(t);
        }
    }
    let mut alpha = vec![0; kept.len()];
    let mut sigma = vec![0; kept.len()];
    for (i, &t) in kept.iter().enumerate() {
        sigma[i] = index[q.sigma(t)];
        let s = q.sigma(t);
        let opposite = q.sigma_inv(q.phi(q.phi(s)));
        alpha[i] = index[opposite];
        if alpha[i] == usize::MAX {
            return Err(crate::map::MapError::NotInvolution { dart: i });
        }
    }
    CombinatorialMap::new(alpha, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::wheel;

    #[test]
    fn wheel3_derived_counts() {
        let w = wheel(3).unwrap();
        assert_eq!(medial(&w).map.counts(), (6, 12, 8));
        assert_eq!(incidence(&w).map.counts(), (8, 12, 6));
        assert_eq!(square(&w).map.counts(), (14, 24, 12));
        assert_eq!(dual(&w).map.counts(), (4, 6, 4));
    }

    #[test]
    fn triangle_dual_is_a_theta() {
        let k3 = CombinatorialMap::from_rotation(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        let d = dual(&k3);
        assert_eq!(d.map.counts(), (2, 3, 3));
        // every edge joins the two dual vertices
        for e in 0..3 {
            let (a, b) = d.map.endpoints(e);
            assert_ne!(a, b);
        }
    }

    #[test]
    fn provenance_is_constant_on_orbits() {
        let w = wheel(4).unwrap();
        for dm in [dual(&w), medial(&w), incidence(&w), square(&w)] {
            for kind in [ElementKind::Vertex, ElementKind::Edge, ElementKind::Face] {
                let count = match kind {
                    ElementKind::Vertex => dm.map.vertex_count(),
                    ElementKind::Edge => dm.map.edge_count(),
                    ElementKind::Face => dm.map.face_count(),
                };
                for i in 0..count {
                    let el = ElementRef { kind, index: i };
                    let origin = dm.origin(el);
                    assert!(origin_consistent(&w, &dm, el, origin), "{:?} {el} {origin:?}", dm.derivation);
                }
            }
        }
    }

    fn origin_consistent(m: &CombinatorialMap, dm: &DerivedMap, el: ElementRef, origin: Origin) -> bool {
        // A second derivation of the origin from every dart of the orbit.
        dm.map.darts_of(el).iter().all(|&t| {
            let again = match dm.derivation {
                Derivation::Dual => match el.kind {
                    ElementKind::Vertex => Origin::Face(m.face_of(t)),
                    ElementKind::Edge => Origin::Edge(m.edge_of(t)),
                    ElementKind::Face => Origin::Vertex(m.vertex_of(m.alpha(t))),
                },
                Derivation::Incidence => match (el.kind, t % 2) {
                    (ElementKind::Vertex, 0) => Origin::Vertex(m.vertex_of(t / 2)),
                    (ElementKind::Vertex, _) => Origin::Face(m.face_of(m.sigma(t / 2))),
                    (ElementKind::Edge, _) => Origin::Corner(t / 2),
                    (ElementKind::Face, 0) => Origin::Edge(m.edge_of(t / 2)),
                    (ElementKind::Face, _) => Origin::Edge(m.edge_of(m.sigma(t / 2))),
                },
                Derivation::Medial => match (el.kind, t % 2) {
                    (ElementKind::Vertex, 0) => Origin::Edge(m.edge_of(t / 2)),
                    (ElementKind::Vertex, _) => Origin::Edge(m.edge_of(m.sigma(t / 2))),
                    (ElementKind::Edge, _) => Origin::Corner(t / 2),
                    (ElementKind::Face, 0) => Origin::Face(m.face_of(m.alpha(t / 2))),
                    (ElementKind::Face, _) => Origin::Vertex(m.vertex_of(t / 2)),
                },
                Derivation::Square => match (el.kind, t % 4) {
                    (ElementKind::Vertex, 0) => Origin::Vertex(m.vertex_of(t / 4)),
                    (ElementKind::Vertex, 2) => Origin::Face(m.face_of(t / 4)),
                    (ElementKind::Vertex, _) => Origin::Edge(m.edge_of(t / 4)),
                    (ElementKind::Edge, 0 | 1) => Origin::HalfEdge(t / 4),
                    (ElementKind::Edge, _) => Origin::DualHalfEdge(t / 4),
                    (ElementKind::Face, 0) => Origin::Corner(m.sigma_inv(t / 4)),
                    (ElementKind::Face, _) => return true,
                },
            };
            again == origin
        })
    }
}
