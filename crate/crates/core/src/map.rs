//! Dart-based combinatorial maps.
//!
//! A map is a pair of permutations on the dart set `0..2|E|`:
//!
//! * `alpha` pairs the two darts of each edge (fixed-point-free involution),
//! * `sigma` sends a dart to the next dart counterclockwise around its origin.
//!
//! Faces are the orbits of `phi = sigma ∘ alpha`, i.e. `phi(d) = sigma(alpha(d))`.
//! With this convention a face walk keeps its face on the right-hand side, so the
//! face containing dart `d` is the face to the right of `d`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while validating permutation data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map has no darts")]
    Empty,
    #[error("dart count {0} is odd")]
    OddDartCount(usize),
    #[error("alpha has {alpha} entries but sigma has {sigma}")]
    LengthMismatch { alpha: usize, sigma: usize },
    #[error("{which} is not a permutation (dart {dart})")]
    NotPermutation { which: &'static str, dart: usize },
    #[error("alpha is not a fixed-point-free involution at dart {dart}")]
    NotInvolution { dart: usize },
    #[error("map is disconnected")]
    Disconnected,
    #[error("map is not spherical: V - E + F = {euler}")]
    NotSphere { euler: i64 },
}

/// Stable fingerprint of a labelled map, used to tag morphisms and provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MapId(pub u64);

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Vertex,
    Edge,
    Face,
}

/// A vertex, edge or face of a map, addressed by orbit index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementRef {
    pub kind: ElementKind,
    pub index: usize,
}

impl ElementRef {
    pub fn vertex(index: usize) -> Self {
        Self { kind: ElementKind::Vertex, index }
    }
    pub fn edge(index: usize) -> Self {
        Self { kind: ElementKind::Edge, index }
    }
    pub fn face(index: usize) -> Self {
        Self { kind: ElementKind::Face, index }
    }
}

impl fmt::Display for ElementRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            ElementKind::Vertex => 'v',
            ElementKind::Edge => 'e',
            ElementKind::Face => 'f',
        };
        write!(f, "{tag}{}", self.index)
    }
}

/// Orbits of a permutation, numbered by smallest dart, plus the inverse lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Orbits {
    of: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl Orbits {
    fn new(perm: &[usize]) -> Self {
        let mut of = vec![usize::MAX; perm.len()];
        let mut cycles = Vec::new();
        for start in 0..perm.len() {
            if of[start] != usize::MAX {
                continue;
            }
            let idx = cycles.len();
            let mut cycle = Vec::new();
            let mut d = start;
            while of[d] == usize::MAX {
                of[d] = idx;
                cycle.push(d);
                d = perm[d];
            }
            cycles.push(cycle);
        }
        Self { of, cycles }
    }
}

/// A connected map, validated and with its orbit tables cached.
#[derive(Clone)]
pub struct CombinatorialMap {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    phi: Vec<usize>,
    vertices: Orbits,
    edges: Orbits,
    faces: Orbits,
    id: MapId,
}

impl fmt::Debug for CombinatorialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CombinatorialMap")
            .field("id", &self.id)
            .field("alpha", &self.alpha)
            .field("sigma", &self.sigma)
            .finish()
    }
}

impl PartialEq for CombinatorialMap {
    fn eq(&self, other: &Self) -> bool {
        self.alpha == other.alpha && self.sigma == other.sigma
    }
}

impl Eq for CombinatorialMap {}

fn check_permutation(perm: &[usize], which: &'static str) -> Result<(), MapError> {
    let mut seen = vec![false; perm.len()];
    for (dart, &image) in perm.iter().enumerate() {
        if image >= perm.len() || seen[image] {
            return Err(MapError::NotPermutation { which, dart });
        }
        seen[image] = true;
    }
    Ok(())
}

fn fingerprint(alpha: &[usize], sigma: &[usize]) -> MapId {
    // FNV-1a over both arrays.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &x in alpha.iter().chain(sigma.iter()) {
        for b in (x as u64).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    MapId(h)
}

pub(crate) fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (d, &p) in perm.iter().enumerate() {
        inv[p] = d;
    }
    inv
}

impl CombinatorialMap {
    /// Validates `alpha`/`sigma` and builds the map.
    ///
    /// Sphericity (`V - E + F = 2`) is enforced unless `allow_nonspherical` is set.
    pub fn build(
        alpha: Vec<usize>,
        sigma: Vec<usize>,
        allow_nonspherical: bool,
    ) -> Result<Self, MapError> {
        if alpha.len() != sigma.len() {
            return Err(MapError::LengthMismatch { alpha: alpha.len(), sigma: sigma.len() });
        }
        if alpha.is_empty() {
            return Err(MapError::Empty);
        }
        if alpha.len() % 2 == 1 {
            return Err(MapError::OddDartCount(alpha.len()));
        }
        check_permutation(&alpha, "alpha")?;
        check_permutation(&sigma, "sigma")?;
        for (d, &a) in alpha.iter().enumerate() {
            if a == d || alpha[a] != d {
                return Err(MapError::NotInvolution { dart: d });
            }
        }
        let map = Self::assemble(alpha, sigma);
        if !map.is_connected() {
            return Err(MapError::Disconnected);
        }
        if !allow_nonspherical && map.euler_characteristic() != 2 {
            return Err(MapError::NotSphere { euler: map.euler_characteristic() });
        }
        Ok(map)
    }

    /// Shorthand for [`CombinatorialMap::build`] with sphericity enforced.
    pub fn new(alpha: Vec<usize>, sigma: Vec<usize>) -> Result<Self, MapError> {
        Self::build(alpha, sigma, false)
    }

    fn assemble(alpha: Vec<usize>, sigma: Vec<usize>) -> Self {
        let phi: Vec<usize> = (0..alpha.len()).map(|d| sigma[alpha[d]]).collect();
        let sigma_inv = invert(&sigma);
        let vertices = Orbits::new(&sigma);
        let edges = Orbits::new(&alpha);
        let faces = Orbits::new(&phi);
        let id = fingerprint(&alpha, &sigma);
        Self { alpha, sigma, sigma_inv, phi, vertices, edges, faces, id }
    }

    /// Builds a map of a simple graph from counterclockwise neighbour lists.
    ///
    /// `rotation[v]` lists the neighbours of `v` in counterclockwise order. Darts
    /// are numbered in the order they appear when scanning `rotation`.
    pub fn from_rotation(rotation: &[Vec<usize>]) -> Result<Self, MapError> {
        let mut first = Vec::with_capacity(rotation.len());
        let mut total = 0;
        for nbrs in rotation {
            first.push(total);
            total += nbrs.len();
        }
        let mut alpha = vec![usize::MAX; total];
        let mut sigma = vec![0; total];
        for (v, nbrs) in rotation.iter().enumerate() {
            for (k, &u) in nbrs.iter().enumerate() {
                let d = first[v] + k;
                sigma[d] = first[v] + (k + 1) % nbrs.len();
                let back = rotation
                    .get(u)
                    .and_then(|un| un.iter().position(|&w| w == v))
                    .ok_or(MapError::NotInvolution { dart: d })?;
                alpha[d] = first[u] + back;
            }
        }
        Self::new(alpha, sigma)
    }

    pub fn id(&self) -> MapId {
        self.id
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self, d: usize) -> usize {
        self.alpha[d]
    }

    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    pub fn sigma_inv(&self, d: usize) -> usize {
        self.sigma_inv[d]
    }

    /// Face-tracing permutation `sigma ∘ alpha`.
    pub fn phi(&self, d: usize) -> usize {
        self.phi[d]
    }

    pub fn alpha_perm(&self) -> &[usize] {
        &self.alpha
    }

    pub fn sigma_perm(&self) -> &[usize] {
        &self.sigma
    }

    pub fn phi_perm(&self) -> &[usize] {
        &self.phi
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.cycles.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.cycles.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.cycles.len()
    }

    /// `(V, E, F)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertex_count(), self.edge_count(), self.face_count())
    }

    pub fn element_count(&self) -> usize {
        self.vertex_count() + self.edge_count() + self.face_count()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Vertex (sigma-orbit) containing dart `d`: the origin of `d`.
    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertices.of[d]
    }

    pub fn edge_of(&self, d: usize) -> usize {
        self.edges.of[d]
    }

    /// Face (phi-orbit) containing dart `d`: the face on the right of `d`.
    pub fn face_of(&self, d: usize) -> usize {
        self.faces.of[d]
    }

    /// Orbit index of `d` for the given element kind.
    pub fn element_of(&self, kind: ElementKind, d: usize) -> ElementRef {
        let index = match kind {
            ElementKind::Vertex => self.vertex_of(d),
            ElementKind::Edge => self.edge_of(d),
            ElementKind::Face => self.face_of(d),
        };
        ElementRef { kind, index }
    }

    /// Darts of a vertex in counterclockwise order.
    pub fn vertex_darts(&self, v: usize) -> &[usize] {
        &self.vertices.cycles[v]
    }

    /// Both darts of an edge, smallest first.
    pub fn edge_darts(&self, e: usize) -> &[usize] {
        &self.edges.cycles[e]
    }

    /// Darts of a face in boundary-walk order.
    pub fn face_darts(&self, f: usize) -> &[usize] {
        &self.faces.cycles[f]
    }

    pub fn darts_of(&self, el: ElementRef) -> &[usize] {
        match el.kind {
            ElementKind::Vertex => self.vertex_darts(el.index),
            ElementKind::Edge => self.edge_darts(el.index),
            ElementKind::Face => self.face_darts(el.index),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertices.cycles[v].len()
    }

    pub fn face_len(&self, f: usize) -> usize {
        self.faces.cycles[f].len()
    }

    /// Endpoints of edge `e` as `(origin of smaller dart, origin of its partner)`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let d = self.edges.cycles[e][0];
        (self.vertex_of(d), self.vertex_of(self.alpha[d]))
    }

    /// Whether `v` appears on the boundary walk of face `f`.
    pub fn vertex_on_face(&self, v: usize, f: usize) -> bool {
        self.face_darts(f).iter().any(|&d| self.vertex_of(d) == v)
    }

    /// Flat index of an element in the concatenation `V ⊔ E ⊔ F`.
    pub fn flat_index(&self, el: ElementRef) -> usize {
        match el.kind {
            ElementKind::Vertex => el.index,
            ElementKind::Edge => self.vertex_count() + el.index,
            ElementKind::Face => self.vertex_count() + self.edge_count() + el.index,
        }
    }

    /// Inverse of [`CombinatorialMap::flat_index`].
    pub fn element_at(&self, flat: usize) -> ElementRef {
        let (v, e) = (self.vertex_count(), self.edge_count());
        if flat < v {
            ElementRef::vertex(flat)
        } else if flat < v + e {
            ElementRef::edge(flat - v)
        } else {
            ElementRef::face(flat - v - e)
        }
    }

    /// The same surface seen from the other side: `sigma` inverted.
    pub fn mirror(&self) -> Self {
        Self::assemble(self.alpha.clone(), self.sigma_inv.clone())
    }

    /// Relabels darts: dart `d` of `self` becomes `perm[d]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, MapError> {
        check_permutation(perm, "relabeling")?;
        let n = self.dart_count();
        let mut alpha = vec![0; n];
        let mut sigma = vec![0; n];
        for d in 0..n {
            alpha[perm[d]] = perm[self.alpha[d]];
            sigma[perm[d]] = perm[self.sigma[d]];
        }
        Ok(Self::assemble(alpha, sigma))
    }

    fn is_connected(&self) -> bool {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for next in [self.alpha[d], self.sigma[d]] {
                if !seen[next] {
                    seen[next] = true;
                    count += 1;
                    stack.push(next);
                }
            }
        }
        count == n
    }

    /// Dart relabeling obtained by a breadth-first walk from `root`, using the
    /// given rotation (`sigma` or its inverse).
    fn traversal_labels(&self, root: usize, rotation: &[usize]) -> Vec<usize> {
        let n = self.dart_count();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[root] = 0;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for next in [rotation[d], self.alpha[d]] {
                if label[next] == usize::MAX {
                    label[next] = order.len();
                    order.push(next);
                }
            }
        }
        label
    }

    fn code_from(&self, root: usize, rotation: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let label = self.traversal_labels(root, rotation);
        let n = self.dart_count();
        let mut sigma = vec![0; n];
        let mut alpha = vec![0; n];
        for d in 0..n {
            sigma[label[d]] = label[rotation[d]];
            alpha[label[d]] = label[self.alpha[d]];
        }
        (sigma, alpha)
    }

    /// Canonical `(sigma, alpha)` code: the lexicographic minimum over all
    /// breadth-first relabelings rooted at a dart. Two maps have equal codes iff
    /// they are isomorphic by an orientation-preserving isomorphism.
    pub fn canonical_code(&self) -> (Vec<usize>, Vec<usize>) {
        (0..self.dart_count())
            .map(|r| self.code_from(r, &self.sigma))
            .min()
            .expect("map has darts")
    }

    /// Canonical code up to isomorphisms of either orientation.
    pub fn unoriented_code(&self) -> (Vec<usize>, Vec<usize>) {
        let mirrored = (0..self.dart_count()).map(|r| self.code_from(r, &self.sigma_inv));
        (0..self.dart_count())
            .map(|r| self.code_from(r, &self.sigma))
            .chain(mirrored)
            .min()
            .expect("map has darts")
    }

    /// The map relabeled into canonical form.
    pub fn canonical(&self) -> Self {
        let (sigma, alpha) = self.canonical_code();
        Self::assemble(alpha, sigma)
    }
}

/// Free-function form of [`CombinatorialMap::build`].
pub fn build_map(
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    allow_nonspherical: bool,
) -> Result<CombinatorialMap, MapError> {
    CombinatorialMap::build(alpha, sigma, allow_nonspherical)
}

pub fn euler_characteristic(m: &CombinatorialMap) -> i64 {
    m.euler_characteristic()
}
