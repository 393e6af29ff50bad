//! Symmetric cycles and antipodal symmetry.
//!
//! A simple cycle `C` of a sphere map `H` is symmetric when some automorphism
//! of `H` fixes `C` set-wise and swaps its two sides. Sides are taken on faces:
//! the faces of `H` split into two classes connected across non-cycle edges,
//! and every vertex or edge off `C` belongs to the side of its faces.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::antipodality::{is_antipodally_self_dual, square_extension, SquareExtension};
use crate::derived::{incidence, Origin};
use crate::map::{CombinatorialMap, ElementKind, ElementRef, MapId};
use crate::morphism::{automorphisms, ElementAction, MapMorphism, Orientation, Orientations};

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("edge sequence is not a closed walk: {0}")]
    NotACycle(String),
    #[error("closed walk repeats vertex {0}")]
    NotSimple(usize),
    #[error("more than {budget} candidate cycles for automorphism #{automorphism}")]
    BudgetExceeded { automorphism: usize, budget: usize },
}

/// A closed walk `v0 e0 v1 e1 … v_{k-1} e_{k-1} v0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Reads a cycle off its edge set; `None` unless the edges form one simple
    /// cycle. The walk starts at its smallest vertex and leaves along the
    /// smaller of its two cycle edges.
    pub fn from_edges(h: &CombinatorialMap, edges: &BTreeSet<usize>) -> Option<Cycle> {
        let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &e in edges {
            let (a, b) = h.endpoints(e);
            incident.entry(a).or_default().push(e);
            incident.entry(b).or_default().push(e);
        }
        if incident.values().any(|es| es.len() != 2) {
            return None;
        }
        let (&start, _) = incident.iter().next()?;
        let mut vertices = vec![start];
        let mut walk = Vec::new();
        let mut v = start;
        let mut e = *incident[&start].iter().min().unwrap();
        loop {
            walk.push(e);
            let (a, b) = h.endpoints(e);
            v = if a == v { b } else { a };
            if v == start {
                break;
            }
            vertices.push(v);
            let es = &incident[&v];
            e = if es[0] == e { es[1] } else { es[0] };
        }
        (walk.len() == edges.len()).then_some(Cycle { vertices, edges: walk })
    }
}

/// Elements on one side of a cycle.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Side {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub faces: Vec<usize>,
}

impl Side {
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.faces.len())
    }

    fn elements(&self) -> impl Iterator<Item = ElementRef> + '_ {
        self.vertices
            .iter()
            .map(|&v| ElementRef::vertex(v))
            .chain(self.edges.iter().map(|&e| ElementRef::edge(e)))
            .chain(self.faces.iter().map(|&f| ElementRef::face(f)))
    }
}

/// The two sides of a cycle; `interior` is the side holding face 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSides {
    pub interior: Side,
    pub exterior: Side,
}

fn check_cycle(h: &CombinatorialMap, cycle: &Cycle) -> Result<(), SymmetryError> {
    let k = cycle.edges.len();
    if k == 0 || cycle.vertices.len() != k {
        return Err(SymmetryError::NotACycle(format!(
            "{} vertices for {} edges",
            cycle.vertices.len(),
            k
        )));
    }
    for i in 0..k {
        let (u, v) = (cycle.vertices[i], cycle.vertices[(i + 1) % k]);
        let e = cycle.edges[i];
        if u >= h.vertex_count() || e >= h.edge_count() {
            return Err(SymmetryError::NotACycle(format!("step {i} leaves the map")));
        }
        let (a, b) = h.endpoints(e);
        if !((a, b) == (u, v) || (a, b) == (v, u)) {
            return Err(SymmetryError::NotACycle(format!("edge {e} does not join {u} and {v}")));
        }
    }
    let mut seen = BTreeSet::new();
    for &v in &cycle.vertices {
        if !seen.insert(v) {
            return Err(SymmetryError::NotSimple(v));
        }
    }
    let distinct: BTreeSet<usize> = cycle.edges.iter().copied().collect();
    if distinct.len() != k {
        return Err(SymmetryError::NotSimple(cycle.vertices[0]));
    }
    Ok(())
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut x = x;
    while parent[x] != r {
        let next = parent[x];
        parent[x] = r;
        x = next;
    }
    r
}

/// Face classes on either side of `cut`: `Some(side)` with `side[f]` true for
/// the class of face 0, or `None` when removing `cut` does not leave exactly
/// two face classes.
fn face_split(h: &CombinatorialMap, cut: &BTreeSet<usize>) -> Option<Vec<bool>> {
    let mut parent: Vec<usize> = (0..h.face_count()).collect();
    for e in (0..h.edge_count()).filter(|e| !cut.contains(e)) {
        let darts = h.edge_darts(e);
        let (a, b) = (find(&mut parent, h.face_of(darts[0])), find(&mut parent, h.face_of(darts[1])));
        parent[a] = b;
    }
    let root0 = find(&mut parent, 0);
    let side: Vec<bool> = (0..h.face_count()).map(|f| find(&mut parent, f) == root0).collect();
    let other: BTreeSet<usize> = (0..h.face_count())
        .filter(|&f| !side[f])
        .map(|f| find(&mut parent, f))
        .collect();
    (other.len() == 1).then_some(side)
}

fn sides_from_split(h: &CombinatorialMap, cycle: &Cycle, inside: &[bool]) -> CycleSides {
    let on_cycle: BTreeSet<usize> = cycle.vertices.iter().copied().collect();
    let cut: BTreeSet<usize> = cycle.edges.iter().copied().collect();
    let (mut interior, mut exterior) = (Side::default(), Side::default());
    for v in (0..h.vertex_count()).filter(|v| !on_cycle.contains(v)) {
        let f = h.face_of(h.vertex_darts(v)[0]);
        if inside[f] { &mut interior } else { &mut exterior }.vertices.push(v);
    }
    for e in (0..h.edge_count()).filter(|e| !cut.contains(e)) {
        let f = h.face_of(h.edge_darts(e)[0]);
        if inside[f] { &mut interior } else { &mut exterior }.edges.push(e);
    }
    for (f, &inn) in inside.iter().enumerate() {
        if inn { &mut interior } else { &mut exterior }.faces.push(f);
    }
    CycleSides { interior, exterior }
}

/// Splits the elements of `h` off `cycle` into its two sides.
pub fn cycle_sides(h: &CombinatorialMap, cycle: &Cycle) -> Result<CycleSides, SymmetryError> {
    check_cycle(h, cycle)?;
    let cut: BTreeSet<usize> = cycle.edges.iter().copied().collect();
    let inside = face_split(h, &cut)
        .ok_or_else(|| SymmetryError::NotACycle("edges do not separate the faces in two".into()))?;
    Ok(sides_from_split(h, cycle, &inside))
}

fn exchanges_sides(action: &ElementAction, cycle_edges: &BTreeSet<usize>, sides: &CycleSides) -> bool {
    cycle_edges.iter().all(|&e| cycle_edges.contains(&action.apply(ElementRef::edge(e)).index))
        && sides.interior.faces.iter().all(|&f| sides.exterior.faces.binary_search(&action.apply(ElementRef::face(f)).index).is_ok())
}

/// Outcome of [`is_symmetric_cycle`]. The map verdict is the one used
/// throughout; the graph verdict allows any adjacency-preserving vertex
/// permutation and is reported alongside because the two can differ when the
/// host is not 3-connected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricCycleVerdict {
    pub sides: CycleSides,
    pub map_witness: Option<MapMorphism>,
    /// Vertex permutation of the underlying multigraph swapping the sides.
    pub graph_witness: Option<Vec<usize>>,
}

impl SymmetricCycleVerdict {
    pub fn holds(&self) -> bool {
        self.map_witness.is_some()
    }

    pub fn verdicts_differ(&self) -> bool {
        self.map_witness.is_some() != self.graph_witness.is_some()
    }
}

pub fn is_symmetric_cycle(h: &CombinatorialMap, cycle: &Cycle) -> Result<SymmetricCycleVerdict, SymmetryError> {
    let sides = cycle_sides(h, cycle)?;
    let balanced = sides.interior.counts() == sides.exterior.counts();
    let cut: BTreeSet<usize> = cycle.edges.iter().copied().collect();
    let map_witness = if balanced {
        automorphisms(h, Orientations::Both).into_iter().find(|aut| {
            let action = aut.element_action(h, h).expect("automorphism of h");
            exchanges_sides(&action, &cut, &sides)
        })
    } else {
        None
    };
    let graph_witness = if balanced { graph_side_swap(h, cycle, &sides) } else { None };
    Ok(SymmetricCycleVerdict { sides, map_witness, graph_witness })
}

/// Backtracking search for a multigraph automorphism that fixes the cycle's
/// vertex set, swaps interior and exterior vertices, and carries cycle /
/// interior / exterior edges between each vertex pair to cycle / exterior /
/// interior edges between the image pair.
fn graph_side_swap(h: &CombinatorialMap, cycle: &Cycle, sides: &CycleSides) -> Option<Vec<usize>> {
    let n = h.vertex_count();
    // class: 0 cycle, 1 interior, 2 exterior
    let mut class = vec![0u8; n];
    for &v in &sides.interior.vertices {
        class[v] = 1;
    }
    for &v in &sides.exterior.vertices {
        class[v] = 2;
    }
    let cut: BTreeSet<usize> = cycle.edges.iter().copied().collect();
    let interior_edges: BTreeSet<usize> = sides.interior.edges.iter().copied().collect();
    let mut mult = vec![[0u32; 3]; n * n];
    for e in 0..h.edge_count() {
        let (a, b) = h.endpoints(e);
        let c = if cut.contains(&e) { 0 } else if interior_edges.contains(&e) { 1 } else { 2 };
        mult[a * n + b][c] += 1;
        if a != b {
            mult[b * n + a][c] += 1;
        }
    }
    let swapped = |m: [u32; 3]| [m[0], m[2], m[1]];
    let target_class = |c: u8| [0u8, 2, 1][c as usize];

    // order vertices by BFS so each new vertex has an assigned neighbour
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            for &d in h.vertex_darts(v) {
                let u = h.vertex_of(h.alpha(d));
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
            i += 1;
        }
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        depth: usize,
        order: &[usize],
        image: &mut [usize],
        used: &mut [bool],
        ok: &dyn Fn(&[usize], usize, usize) -> bool,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..image.len() {
            if used[w] || !ok(image, v, w) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if extend(depth + 1, order, image, used, ok) {
                return true;
            }
            image[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    let ok = |image: &[usize], v: usize, w: usize| {
        if class[w] != target_class(class[v]) || h.degree(v) != h.degree(w) {
            return false;
        }
        if swapped(mult[v * n + v]) != mult[w * n + w] {
            return false;
        }
        (0..n).all(|u| image[u] == usize::MAX || swapped(mult[v * n + u]) == mult[w * n + image[u]])
    };
    extend(0, &order, &mut image, &mut used, &ok).then_some(image)
}

/// A symmetric cycle together with an automorphism exchanging its sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricCycleWitness {
    pub host: MapId,
    pub cycle: Cycle,
    pub automorphism: MapMorphism,
    pub side_partition: CycleSides,
}

impl SymmetricCycleWitness {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Re-checks the witness against `h`.
    pub fn verify(&self, h: &CombinatorialMap) -> bool {
        let Ok(sides) = cycle_sides(h, &self.cycle) else { return false };
        let Ok(action) = self.automorphism.element_action(h, h) else { return false };
        let cut: BTreeSet<usize> = self.cycle.edges.iter().copied().collect();
        sides == self.side_partition
            && exchanges_sides(&action, &cut, &sides)
            && self.side_partition.interior.elements().all(|el| {
                let img = action.apply(el);
                match img.kind {
                    ElementKind::Vertex => sides.exterior.vertices.binary_search(&img.index).is_ok(),
                    ElementKind::Edge => sides.exterior.edges.binary_search(&img.index).is_ok(),
                    ElementKind::Face => sides.exterior.faces.binary_search(&img.index).is_ok(),
                }
            })
    }
}

fn face_orbits(action: &ElementAction, faces: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; faces];
    let mut orbits = Vec::new();
    for f in 0..faces {
        if seen[f] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut g = f;
        while !seen[g] {
            seen[g] = true;
            orbit.push(g);
            g = action.apply(ElementRef::face(g)).index;
        }
        orbits.push(orbit);
    }
    orbits
}

/// Every symmetric cycle of `h` of length at most `max_len`, one witness per
/// edge set, sorted by length and then edge set.
///
/// For each automorphism `τ` the side holding face 0 must alternate along
/// every face orbit of `τ`, so a side is fixed by one bit per orbit; each
/// choice is kept when both face classes are connected, in which case their
/// common boundary is a simple cycle. `budget` caps the number of choices
/// examined per automorphism.
pub fn enumerate_symmetric_cycles(
    h: &CombinatorialMap,
    max_len: Option<usize>,
    budget: usize,
) -> Result<Vec<SymmetricCycleWitness>, SymmetryError> {
    let mut found: BTreeMap<Vec<usize>, SymmetricCycleWitness> = BTreeMap::new();
    for (index, aut) in automorphisms(h, Orientations::Both).into_iter().enumerate() {
        if aut.is_identity() {
            continue;
        }
        let action = aut.element_action(h, h).expect("automorphism of h");
        let orbits = face_orbits(&action, h.face_count());
        if orbits.iter().any(|o| o.len() % 2 == 1) {
            continue;
        }
        // face 0 sits in orbit 0 at position 0 and is always inside
        let free = orbits.len() - 1;
        if free >= usize::BITS as usize - 1 || (1usize << free) > budget {
            return Err(SymmetryError::BudgetExceeded { automorphism: index, budget });
        }
        for mask in 0..(1usize << free) {
            let mut inside = vec![false; h.face_count()];
            for (i, orbit) in orbits.iter().enumerate() {
                let parity = if i == 0 { 0 } else { (mask >> (i - 1)) & 1 };
                for (pos, &f) in orbit.iter().enumerate() {
                    inside[f] = pos % 2 == parity;
                }
            }
            let cut: BTreeSet<usize> = (0..h.edge_count())
                .filter(|&e| {
                    let darts = h.edge_darts(e);
                    inside[h.face_of(darts[0])] != inside[h.face_of(darts[1])]
                })
                .collect();
            if cut.is_empty() || max_len.is_some_and(|l| cut.len() > l) {
                continue;
            }
            let key: Vec<usize> = cut.iter().copied().collect();
            if found.contains_key(&key) || face_split(h, &cut).as_deref() != Some(&inside[..]) {
                continue;
            }
            let Some(cycle) = Cycle::from_edges(h, &cut) else { continue };
            let side_partition = sides_from_split(h, &cycle, &inside);
            found.insert(
                key,
                SymmetricCycleWitness { host: h.id(), cycle, automorphism: aut.clone(), side_partition },
            );
        }
    }
    let mut out: Vec<SymmetricCycleWitness> = found.into_values().collect();
    out.sort_by(|a, b| (a.len(), &a.cycle.edges).cmp(&(b.len(), &b.cycle.edges)));
    Ok(out)
}

/// Symmetric cycles of `I(m)` read against the claim that an antipodally
/// self-dual `m` has one, all of length `2n` with `n` odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ant1Report {
    pub has_symmetric_cycle: bool,
    /// Distinct lengths, ascending.
    pub lengths: Vec<usize>,
    pub consistent: bool,
    pub antipodal: bool,
    /// Some cycle has length divisible by 4.
    pub certifies_non_antipodal: bool,
    /// Lengths of cycles whose sides are swapped by an automorphism that also
    /// swaps the two colour classes of `I(m)`.
    pub colour_swapping_lengths: Vec<usize>,
    /// Lengths of cycles whose sides are swapped by a colour-swapping
    /// involution fixing no vertex, edge or face of `I(m)`, the kind of
    /// symmetry an antipodal embedding induces. Such an involution turns the
    /// cycle by half its length, so these lengths are always `2 mod 4`.
    pub antipodal_exchange_lengths: Vec<usize>,
    pub cycles: Vec<SymmetricCycleWitness>,
}

pub fn theorem_ant1_report(m: &CombinatorialMap, budget: usize) -> Result<Ant1Report, SymmetryError> {
    theorem_ant1_report_up_to(m, None, budget)
}

/// [`theorem_ant1_report`] restricted to cycles of length at most `max_len`.
pub fn theorem_ant1_report_up_to(
    m: &CombinatorialMap,
    max_len: Option<usize>,
    budget: usize,
) -> Result<Ant1Report, SymmetryError> {
    let inc = incidence(m);
    let h = &inc.map;
    let cycles = enumerate_symmetric_cycles(h, max_len, budget)?;
    let lengths: BTreeSet<usize> = cycles.iter().map(|c| c.len()).collect();
    let is_black = |v: usize| matches!(inc.vertex_origin[v], Origin::Vertex(_));
    let swapping: Vec<ElementAction> = automorphisms(h, Orientations::Both)
        .into_iter()
        .map(|a| a.element_action(h, h).expect("automorphism of h"))
        .filter(|act| (0..h.vertex_count()).all(|v| is_black(v) != is_black(act.apply(ElementRef::vertex(v)).index)))
        .collect();
    let lengths_exchanged_by = |acts: &[&ElementAction]| -> Vec<usize> {
        let set: BTreeSet<usize> = cycles
            .iter()
            .filter(|c| {
                let cut: BTreeSet<usize> = c.cycle.edges.iter().copied().collect();
                acts.iter().any(|act| exchanges_sides(act, &cut, &c.side_partition))
            })
            .map(|c| c.len())
            .collect();
        set.into_iter().collect()
    };
    let all_swapping: Vec<&ElementAction> = swapping.iter().collect();
    let antipodal_swapping: Vec<&ElementAction> = swapping
        .iter()
        .filter(|act| act.is_involution() && act.fixed().is_empty())
        .collect();
    let colour_swapping_lengths = lengths_exchanged_by(&all_swapping);
    let antipodal_exchange_lengths = lengths_exchanged_by(&antipodal_swapping);
    let has_symmetric_cycle = !cycles.is_empty();
    Ok(Ant1Report {
        has_symmetric_cycle,
        consistent: has_symmetric_cycle && lengths.iter().all(|l| l % 4 == 2),
        certifies_non_antipodal: lengths.iter().any(|l| l % 4 == 0),
        lengths: lengths.into_iter().collect(),
        antipodal: is_antipodally_self_dual(m).is_antipodal(),
        colour_swapping_lengths,
        antipodal_exchange_lengths,
        cycles,
    })
}

/// An involutive automorphism of `H` whose square extension fixes no vertex,
/// edge or face.
#[derive(Debug, Clone)]
pub struct AntipodalSymmetry {
    pub automorphism: MapMorphism,
    pub extension: SquareExtension,
}

impl AntipodalSymmetry {
    pub fn is_orientation_reversing(&self) -> bool {
        self.automorphism.orientation == Orientation::Reversing
    }
}

pub fn is_antipodally_symmetric(h: &CombinatorialMap) -> Option<AntipodalSymmetry> {
    antipodal_symmetry_among(h, Orientations::Both)
}

/// [`is_antipodally_symmetric`] over one or both orientation classes.
pub fn antipodal_symmetry_among(h: &CombinatorialMap, orientations: Orientations) -> Option<AntipodalSymmetry> {
    automorphisms(h, orientations).into_iter().find_map(|aut| {
        let ext = square_extension(h, &aut).expect("automorphism of h");
        (ext.is_involution() && ext.is_fixed_point_free())
            .then_some(AntipodalSymmetry { automorphism: aut, extension: ext })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::medial;
    use crate::families::{ear, wheel};

    fn facial_cycle(h: &CombinatorialMap, f: usize) -> Cycle {
        let edges: BTreeSet<usize> = h.face_darts(f).iter().map(|&d| h.edge_of(d)).collect();
        Cycle::from_edges(h, &edges).unwrap()
    }

    #[test]
    fn facial_triangle_has_an_empty_side() {
        let w = wheel(3).unwrap();
        let c = facial_cycle(&w, 0);
        let s = cycle_sides(&w, &c).unwrap();
        assert_eq!(s.interior.counts(), (0, 0, 1));
        assert_eq!(s.exterior.counts(), (1, 3, 3));
    }

    #[test]
    fn open_walk_rejected() {
        let w = wheel(3).unwrap();
        let c = facial_cycle(&w, 0);
        let open = Cycle { vertices: c.vertices[..2].to_vec(), edges: c.edges[..1].to_vec() };
        assert!(matches!(cycle_sides(&w, &open), Err(SymmetryError::NotACycle(_))));
    }

    #[test]
    fn facial_square_of_incidence_not_symmetric() {
        let h = incidence(&wheel(4).unwrap()).map;
        let v = is_symmetric_cycle(&h, &facial_cycle(&h, 0)).unwrap();
        assert!(!v.holds());
        assert!(v.graph_witness.is_none());
    }

    #[test]
    fn cube_hexagon_is_symmetric() {
        let h = incidence(&wheel(3).unwrap()).map;
        let cycles = enumerate_symmetric_cycles(&h, None, DEFAULT_BUDGET).unwrap();
        let hex = cycles.iter().find(|c| c.len() == 6).expect("equatorial hexagon");
        assert!(hex.verify(&h));
        assert_eq!(hex.side_partition.interior.counts(), hex.side_partition.exterior.counts());
        assert_eq!(hex.side_partition.interior.counts(), (1, 3, 3));
    }

    #[test]
    fn wheel4_has_an_eight_cycle() {
        let r = theorem_ant1_report(&wheel(4).unwrap(), DEFAULT_BUDGET).unwrap();
        assert!(r.lengths.contains(&8));
        assert!(r.certifies_non_antipodal);
        assert!(!r.antipodal);
    }

    #[test]
    fn cube_eight_cycle_under_a_half_turn() {
        // a half-turn about an edge axis swaps the colours of the cube and the
        // two sides of a Hamiltonian cycle; it fixes two edges, so it is not
        // the antipodal map
        let r = theorem_ant1_report(&wheel(3).unwrap(), DEFAULT_BUDGET).unwrap();
        assert!(r.antipodal);
        assert_eq!(r.lengths, [6, 8]);
        assert_eq!(r.antipodal_exchange_lengths, [6]);
        assert!(!r.consistent);
    }

    #[test]
    fn antipodal_symmetry() {
        let w3 = wheel(3).unwrap();
        let sym = is_antipodally_symmetric(&medial(&w3).map).expect("octahedron");
        assert!(sym.is_orientation_reversing());
        assert!(sym.extension.action.is_involution());
        assert!(is_antipodally_symmetric(&incidence(&ear(4).unwrap()).map).is_some());
        assert!(is_antipodally_symmetric(&wheel(4).unwrap()).is_none());
    }
}
