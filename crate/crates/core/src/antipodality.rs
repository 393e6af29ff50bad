//! Antipodal self-duality.
//!
//! A self-dual map `G` is antipodally self-dual iff `I(G)□` carries an
//! involutive labeling without fixed vertices. Such labelings that swap the
//! colour classes of `I(G)` are exactly the involutive dualities of `G` whose
//! induced automorphism of `I(G)` moves every vertex, edge and face, so the
//! decision procedure walks the (finitely many) dualities of `G`.

use thiserror::Error;

use crate::derived::{incidence, square, DerivedMap, Origin};
use crate::duality::{enumerate_dualities, DualityWitness};
use crate::labeling::{InvolutiveLabeling, LabelingError};
use crate::map::{CombinatorialMap, ElementKind, ElementRef, MapId};
use crate::morphism::{
    element_action_unchecked, ElementAction, MapMorphism, MorphismKind, Orientation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AntipodalityError {
    #[error("morphism is not an automorphism of the host map")]
    NotAutomorphism,
    #[error("squares graph has {vertices} vertices, above the search limit {limit}")]
    TooLarge { vertices: usize, limit: usize },
}

/// The permutation `σ□` induced on `V(H□) = V(H) ⊔ E(H) ⊔ F(H)` by an
/// automorphism of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareExtension {
    pub base: MapMorphism,
    pub host: MapId,
    /// Action on flat element indices of `H`, which are the vertices of `H□`.
    pub action: ElementAction,
    /// Fixed `V_V` (vertex), `V_E` (edge) and `V_F` (face) vertices.
    pub fixed: Vec<ElementRef>,
}

impl SquareExtension {
    pub fn is_fixed_point_free(&self) -> bool {
        self.fixed.is_empty()
    }

    pub fn is_involution(&self) -> bool {
        self.action.is_involution()
    }

    pub fn fixed_of_kind(&self, kind: ElementKind) -> usize {
        self.fixed.iter().filter(|el| el.kind == kind).count()
    }

    /// The action written on the vertex indices of `square(H)`.
    pub fn on_square_vertices(&self, h: &CombinatorialMap, sq: &DerivedMap) -> Vec<usize> {
        let index = square_vertex_index(h, sq);
        let mut perm = vec![0; sq.map.vertex_count()];
        for (flat, &img) in self.action.image.iter().enumerate() {
            perm[index[flat]] = index[img];
        }
        perm
    }
}

/// For each flat element of `h`, the `square(h)` vertex standing for it.
pub fn square_vertex_index(h: &CombinatorialMap, sq: &DerivedMap) -> Vec<usize> {
    let mut index = vec![usize::MAX; h.element_count()];
    for (sv, origin) in sq.vertex_origin.iter().enumerate() {
        let el = origin.element().expect("square vertices come from elements");
        index[h.flat_index(el)] = sv;
    }
    index
}

pub fn square_extension(h: &CombinatorialMap, aut: &MapMorphism) -> Result<SquareExtension, AntipodalityError> {
    if aut.source != h.id() || aut.target != h.id() || aut.verify(h, h).is_err() {
        return Err(AntipodalityError::NotAutomorphism);
    }
    let action = element_action_unchecked(&aut.darts, aut.orientation, h, h);
    let fixed = action.fixed();
    Ok(SquareExtension { base: aut.clone(), host: h.id(), action, fixed })
}

/// Dart-level lift of an automorphism of `h` to `square(h)`; it is type
/// preserving and induces the same vertex permutation as [`square_extension`].
pub fn lift_to_square(h: &CombinatorialMap, sq: &DerivedMap, aut: &MapMorphism) -> MapMorphism {
    let n = h.dart_count();
    let mut darts = vec![0; 4 * n];
    for d in 0..n {
        let p = aut.darts[d];
        let q = match aut.orientation {
            Orientation::Preserving => p,
            Orientation::Reversing => h.alpha(p),
        };
        darts[4 * d] = 4 * p;
        darts[4 * d + 1] = 4 * p + 1;
        darts[4 * d + 2] = 4 * q + 2;
        darts[4 * d + 3] = 4 * q + 3;
    }
    MapMorphism {
        source: sq.map.id(),
        target: sq.map.id(),
        darts,
        orientation: aut.orientation,
        kind: MorphismKind::Automorphism,
    }
}

/// Automorphism `σ_I` of `I(m)` induced by a duality of `m`: it sends each
/// black vertex `v` to the white vertex `σ(v)` and each white vertex `f` to the
/// black vertex `σ(f)`.
pub fn incidence_automorphism(m: &CombinatorialMap, inc: &DerivedMap, w: &DualityWitness) -> MapMorphism {
    let n = m.dart_count();
    let mut darts = vec![0; 2 * n];
    for d in 0..n {
        let p = w.morphism.darts[d];
        // corner of the dual map at psi(d), read back as a corner of m
        let c = match w.morphism.orientation {
            Orientation::Preserving => m.sigma_inv(p),
            Orientation::Reversing => m.alpha(p),
        };
        darts[2 * d] = 2 * c + 1;
        darts[2 * d + 1] = 2 * c;
    }
    let mor = MapMorphism {
        source: inc.map.id(),
        target: inc.map.id(),
        darts,
        orientation: w.morphism.orientation,
        kind: MorphismKind::Automorphism,
    };
    debug_assert!(mor.verify(&inc.map, &inc.map).is_ok());
    mor
}

/// Outcome of the antipodal self-duality test.
#[derive(Debug, Clone)]
pub enum AntipodalVerdict {
    Antipodal {
        duality: DualityWitness,
        /// `σ_I`, a fixed-point-free involution of `I(m)□`.
        incidence_involution: MapMorphism,
        extension: SquareExtension,
        /// Labeling of the vertices of `square(incidence(m))`.
        labeling: InvolutiveLabeling,
    },
    NotSelfDual,
    /// Every involutive duality leaves a fixed vertex in `I(m)□`.
    SelfDualNotAntipodal { dualities: usize, involutive: usize },
}

impl AntipodalVerdict {
    pub fn is_antipodal(&self) -> bool {
        matches!(self, AntipodalVerdict::Antipodal { .. })
    }
}

/// Square extension on `I(m)` of the automorphism induced by an involutive
/// duality, or `None` when the duality is not involutive.
pub fn incidence_extension(m: &CombinatorialMap, inc: &DerivedMap, w: &DualityWitness) -> Option<SquareExtension> {
    if !w.involutive {
        return None;
    }
    let sigma_i = incidence_automorphism(m, inc, w);
    let ext = square_extension(&inc.map, &sigma_i).expect("induced map is an automorphism");
    ext.is_involution().then_some(ext)
}

pub fn is_antipodally_self_dual(m: &CombinatorialMap) -> AntipodalVerdict {
    let dualities = enumerate_dualities(m);
    if dualities.is_empty() {
        return AntipodalVerdict::NotSelfDual;
    }
    let inc = incidence(m);
    let mut involutive = 0;
    for w in &dualities {
        let Some(ext) = incidence_extension(m, &inc, w) else { continue };
        involutive += 1;
        if ext.is_fixed_point_free() {
            let sq = square(&inc.map);
            let labeling = labeling_from_involution(&inc.map, &sq, &ext)
                .expect("extension is an involution");
            return AntipodalVerdict::Antipodal {
                duality: w.clone(),
                incidence_involution: ext.base.clone(),
                extension: ext,
                labeling,
            };
        }
    }
    AntipodalVerdict::SelfDualNotAntipodal { dualities: dualities.len(), involutive }
}

/// Involutive labeling of `H□` read off an involutive square extension.
pub fn labeling_from_involution(
    h: &CombinatorialMap,
    sq: &DerivedMap,
    ext: &SquareExtension,
) -> Result<InvolutiveLabeling, LabelingError> {
    if let Some(bad) = (0..ext.action.image.len()).find(|&i| ext.action.image[ext.action.image[i]] != i) {
        return Err(LabelingError::NotInvolution(bad));
    }
    let tau = ext.on_square_vertices(h, sq);
    InvolutiveLabeling::from_involution(&sq.map, &tau)
}

/// Result of the odd-edge test on `I(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    /// The obstruction only says something about self-dual maps.
    pub self_dual: bool,
    /// A black vertex joined to every white vertex by an odd number of edges.
    pub witness: Option<usize>,
}

impl ObstructionReport {
    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }
}

/// Number of incidence edges between each vertex and each face of `m`.
pub fn corner_counts(m: &CombinatorialMap) -> Vec<Vec<usize>> {
    let mut counts = vec![vec![0; m.face_count()]; m.vertex_count()];
    for d in 0..m.dart_count() {
        counts[m.vertex_of(d)][m.face_of(m.sigma(d))] += 1;
    }
    counts
}

pub fn odd_edge_obstruction(m: &CombinatorialMap) -> ObstructionReport {
    let counts = corner_counts(m);
    let witness = counts.iter().position(|row| row.iter().all(|&c| c % 2 == 1));
    ObstructionReport { self_dual: crate::duality::is_self_dual(m), witness }
}

/// Exhaustive search for a colour-swapping involutive labeling of `I(m)□`
/// without fixed vertices, working directly on the vertices of the squares
/// graph (no dualities involved). Returns the vertex involution when one exists.
///
/// The involution must map black vertices to white ones, keep the `V_E` and
/// `V_F` classes, and preserve edge multiplicities.
pub fn raw_labeling_search(m: &CombinatorialMap, limit: usize) -> Result<Option<Vec<usize>>, AntipodalityError> {
    let inc = incidence(m);
    let sq = square(&inc.map);
    let q = &sq.map;
    let n = q.vertex_count();
    if n > limit {
        return Err(AntipodalityError::TooLarge { vertices: n, limit });
    }
    // 0 black, 1 white, 2 V_E, 3 V_F
    let class: Vec<u8> = sq
        .vertex_origin
        .iter()
        .map(|o| match o {
            Origin::Vertex(i) => match inc.vertex_origin[*i] {
                Origin::Vertex(_) => 0,
                _ => 1,
            },
            Origin::Edge(_) => 2,
            _ => 3,
        })
        .collect();
    let mut mult = vec![vec![0u32; n]; n];
    for e in 0..q.edge_count() {
        let (a, b) = q.endpoints(e);
        mult[a][b] += 1;
        if a != b {
            mult[b][a] += 1;
        }
    }
    let partner_class = |c: u8| match c {
        0 => 1,
        1 => 0,
        c => c,
    };
    let mut tau = vec![usize::MAX; n];
    let mut assigned = Vec::new();

    fn extend(
        tau: &mut Vec<usize>,
        assigned: &mut Vec<usize>,
        mult: &[Vec<u32>],
        class: &[u8],
        partner_class: &dyn Fn(u8) -> u8,
    ) -> bool {
        let n = tau.len();
        let Some(v) = (0..n).find(|&v| tau[v] == usize::MAX) else { return true };
        for u in 0..n {
            if u == v || tau[u] != usize::MAX || class[u] != partner_class(class[v]) {
                continue;
            }
            if mult[v][v] != mult[u][u] || mult[v][u] != mult[u][v] {
                continue;
            }
            let consistent = assigned.iter().all(|&w| mult[v][w] == mult[u][tau[w]] && mult[u][w] == mult[v][tau[w]]);
            if !consistent {
                continue;
            }
            tau[v] = u;
            tau[u] = v;
            assigned.push(v);
            assigned.push(u);
            if extend(tau, assigned, mult, class, partner_class) {
                return true;
            }
            assigned.pop();
            assigned.pop();
            tau[v] = usize::MAX;
            tau[u] = usize::MAX;
        }
        false
    }

    let found = extend(&mut tau, &mut assigned, &mult, &class, &partner_class);
    Ok(found.then_some(tau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{ear, pancake, wheel};
    use crate::morphism::{automorphisms, Orientations};

    #[test]
    fn wheels_by_parity() {
        for n in 3..8 {
            let v = is_antipodally_self_dual(&wheel(n).unwrap());
            assert_eq!(v.is_antipodal(), n % 2 == 1, "wheel({n})");
        }
    }

    #[test]
    fn ears_and_pancakes() {
        assert!(is_antipodally_self_dual(&ear(4).unwrap()).is_antipodal());
        assert!(!is_antipodally_self_dual(&ear(3).unwrap()).is_antipodal());
        assert!(is_antipodally_self_dual(&pancake(3, 2).unwrap()).is_antipodal());
        assert!(!is_antipodally_self_dual(&pancake(4, 2).unwrap()).is_antipodal());
    }

    #[test]
    fn not_self_dual_is_distinguished() {
        let k3 = CombinatorialMap::from_rotation(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert!(matches!(is_antipodally_self_dual(&k3), AntipodalVerdict::NotSelfDual));
        assert!(matches!(
            is_antipodally_self_dual(&wheel(4).unwrap()),
            AntipodalVerdict::SelfDualNotAntipodal { .. }
        ));
    }

    #[test]
    fn identity_extension_fixes_everything() {
        let h = wheel(5).unwrap();
        let ext = square_extension(&h, &MapMorphism::identity(&h)).unwrap();
        assert_eq!(ext.fixed.len(), h.element_count());
    }

    #[test]
    fn foreign_morphism_rejected() {
        let h = wheel(5).unwrap();
        let other = wheel(4).unwrap();
        assert_eq!(
            square_extension(&h, &MapMorphism::identity(&other)),
            Err(AntipodalityError::NotAutomorphism)
        );
    }

    #[test]
    fn incidence_automorphisms_are_automorphisms() {
        for m in [wheel(3).unwrap(), wheel(4).unwrap(), ear(3).unwrap()] {
            let inc = incidence(&m);
            for w in enumerate_dualities(&m) {
                let s = incidence_automorphism(&m, &inc, &w);
                s.verify(&inc.map, &inc.map).unwrap();
                let act = s.element_action(&inc.map, &inc.map).unwrap();
                for v in 0..inc.map.vertex_count() {
                    let img = act.apply(ElementRef::vertex(v)).index;
                    let expected = match inc.vertex_origin[v] {
                        Origin::Vertex(x) => Origin::Face(w.face_of_vertex(x)),
                        Origin::Face(f) => Origin::Vertex(w.vertex_of_face(f)),
                        _ => unreachable!(),
                    };
                    assert_eq!(inc.vertex_origin[img], expected);
                }
            }
        }
    }

    #[test]
    fn lift_matches_extension() {
        let h = wheel(4).unwrap();
        let sq = square(&h);
        for aut in automorphisms(&h, Orientations::Both) {
            let lifted = lift_to_square(&h, &sq, &aut);
            lifted.verify(&sq.map, &sq.map).unwrap();
            let ext = square_extension(&h, &aut).unwrap();
            let act = lifted.element_action(&sq.map, &sq.map).unwrap();
            let on_vertices: Vec<usize> =
                (0..sq.map.vertex_count()).map(|v| act.apply(ElementRef::vertex(v)).index).collect();
            assert_eq!(on_vertices, ext.on_square_vertices(&h, &sq));
        }
    }

    #[test]
    fn obstruction_on_wheels() {
        assert!(!odd_edge_obstruction(&wheel(3).unwrap()).holds());
        assert!(!odd_edge_obstruction(&wheel(5).unwrap()).holds());
    }
}
