//! Generators for wheels, ears, pancakes, the adhesion `G ◇ G*`, and the
//! bundled fixtures.

use thiserror::Error;

use crate::antipodality::{is_antipodally_self_dual, odd_edge_obstruction, AntipodalVerdict};
use crate::derived::incidence;
use crate::duality::{is_self_dual, is_strongly_involutive};
use crate::io::{parse_map, IoError};
use crate::map::{CombinatorialMap, ElementRef, MapError};
use crate::symmetry::{enumerate_symmetric_cycles, DEFAULT_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("dart {dart} does not realize a corner of vertex {vertex} on face {face}")]
    InvalidCorner { vertex: usize, face: usize, dart: usize },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture `{name}` failed its self-check: {reason}")]
    FixtureSelfCheckFailed { name: String, reason: String },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Io(#[from] IoError),
}

/// An occurrence of a vertex on the boundary walk of a face: `dart` leaves
/// `vertex` and has `face` on its right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corner {
    pub vertex: ElementRef,
    pub face: ElementRef,
    pub dart: usize,
}

impl Corner {
    pub fn at_dart(m: &CombinatorialMap, dart: usize) -> Self {
        Self {
            vertex: ElementRef::vertex(m.vertex_of(dart)),
            face: ElementRef::face(m.face_of(dart)),
            dart,
        }
    }

    pub fn validate(&self, m: &CombinatorialMap) -> Result<(), FamilyError> {
        let ok = self.dart < m.dart_count()
            && m.vertex_of(self.dart) == self.vertex.index
            && m.face_of(self.dart) == self.face.index;
        if ok {
            Ok(())
        } else {
            Err(FamilyError::InvalidCorner {
                vertex: self.vertex.index,
                face: self.face.index,
                dart: self.dart,
            })
        }
    }
}

/// Every corner of `m`, one per dart.
pub fn corners(m: &CombinatorialMap) -> Vec<Corner> {
    (0..m.dart_count()).map(|d| Corner::at_dart(m, d)).collect()
}

/// Builds a map from a straight-line drawing: neighbours are sorted
/// counterclockwise by angle.
fn from_drawing(points: &[(f64, f64)], edges: &[(usize, usize)]) -> Result<CombinatorialMap, MapError> {
    let mut nbrs = vec![Vec::new(); points.len()];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    for (v, list) in nbrs.iter_mut().enumerate() {
        let (x0, y0) = points[v];
        list.sort_by(|&a, &b| {
            let ta = (points[a].1 - y0).atan2(points[a].0 - x0);
            let tb = (points[b].1 - y0).atan2(points[b].0 - x0);
            ta.total_cmp(&tb)
        });
    }
    CombinatorialMap::from_rotation(&nbrs)
}

fn polar(radius: f64, turn: f64) -> (f64, f64) {
    let theta = turn * std::f64::consts::TAU;
    (radius * theta.cos(), radius * theta.sin())
}

/// The wheel `W_n`: an `n`-cycle and a hub joined to every cycle vertex.
/// Vertex 0 is the hub.
pub fn wheel(n: usize) -> Result<CombinatorialMap, FamilyError> {
    pancake(n, 1)
}

/// The ear `E_n`: an `n`-cycle, a triangle ("ear") on each cycle edge and a
/// center joined to every ear vertex. Vertex 0 is the center, `1..=n` the
/// cycle, `n+1..=2n` the ears.
pub fn ear(n: usize) -> Result<CombinatorialMap, FamilyError> {
    if n < 3 {
        return Err(FamilyError::BadParameter(format!("ear needs n >= 3, got {n}")));
    }
    let mut points = vec![(0.0, 0.0)];
    points.extend((0..n).map(|i| polar(3.0, i as f64 / n as f64)));
    points.extend((0..n).map(|i| polar(1.0, (i as f64 + 0.5) / n as f64)));
    let cycle = |i: usize| 1 + i % n;
    let ear_v = |i: usize| 1 + n + i % n;
    let mut edges = Vec::with_capacity(4 * n);
    for i in 0..n {
        edges.push((cycle(i), cycle(i + 1)));
        edges.push((ear_v(i), cycle(i)));
        edges.push((ear_v(i), cycle(i + 1)));
        edges.push((0, ear_v(i)));
    }
    Ok(from_drawing(&points, &edges)?)
}

/// The pancake `P_n^ℓ`: `ℓ` concentric `n`-cycles, each joined radially to the
/// next, and the innermost one joined to a hub. `pancake(n, 1)` is the wheel.
pub fn pancake(n: usize, layers: usize) -> Result<CombinatorialMap, FamilyError> {
    if n < 3 || layers < 1 {
        return Err(FamilyError::BadParameter(format!(
            "pancake needs n >= 3 and l >= 1, got n={n}, l={layers}"
        )));
    }
    let mut points = vec![(0.0, 0.0)];
    for j in 1..=layers {
        points.extend((0..n).map(|i| polar(j as f64, i as f64 / n as f64)));
    }
    let at = |j: usize, i: usize| if j == 0 { 0 } else { 1 + (j - 1) * n + i % n };
    let mut edges = Vec::with_capacity(2 * n * layers);
    for j in 1..=layers {
        for i in 0..n {
            edges.push((at(j, i), at(j, i + 1)));
            edges.push((at(j - 1, i), at(j, i)));
        }
    }
    Ok(from_drawing(&points, &edges)?)
}

/// Glues `g` and its dual at a corner: the corner's vertex `x` is identified
/// with the dual vertex `x*` of the corner's face. `g` goes into the angle of
/// the dual at `x*` that lies in the dual face of `x`, and the dual goes into
/// the corner of `g`. The dual copy is mirrored, as it is when `g` and `g*`
/// are drawn in one hemisphere and `g*` is carried to the other by the
/// antipodal map.
///
/// Darts `0..2|E|` are those of `g`, darts `2|E|..4|E|` those of its dual.
pub fn adhesion(g: &CombinatorialMap, corner: Corner) -> Result<CombinatorialMap, FamilyError> {
    corner.validate(g)?;
    glue_with_dual(g, corner.dart, corner.dart, false)
}

/// One-point union of `g` and its mirrored dual. The dual is spliced into the
/// corner of `g` before `g_dart`, and `g` into the angle of the dual before
/// `dual_dart`. The dual vertex is the face of `dual_dart`, its angle lies in
/// the dual face of `vertex(dual_dart)`. With `g_dart == dual_dart` this is
/// [`adhesion`]; other choices glue a non-corresponding pair.
pub fn glue_with_dual(
    g: &CombinatorialMap,
    g_dart: usize,
    dual_dart: usize,
    allow_nonspherical: bool,
) -> Result<CombinatorialMap, FamilyError> {
    let n = g.dart_count();
    if g_dart >= n || dual_dart >= n {
        return Err(FamilyError::BadParameter(format!("dart out of range 0..{n}")));
    }
    // the mirrored dual rotates by phi: its vertices are the faces of g and its
    // faces the vertices of g
    let mut alpha: Vec<usize> = g.alpha_perm().to_vec();
    alpha.extend(g.alpha_perm().iter().map(|&a| a + n));
    let mut sigma: Vec<usize> = g.sigma_perm().to_vec();
    sigma.extend(g.phi_perm().iter().map(|&p| p + n));
    let before_g = g.sigma_inv(g_dart);
    let before_dual = g.phi_perm().iter().position(|&p| p == dual_dart).expect("phi is a permutation");
    sigma[before_g] = dual_dart + n;
    sigma[before_dual + n] = g_dart;
    Ok(CombinatorialMap::build(alpha, sigma, allow_nonspherical)?)
}

/// Names of the bundled fixtures.
pub const FIXTURES: [&str; 3] = ["self_dual_not_antipodal", "antipodal_not_strong", "odd_obstruction"];

fn fixture_source(name: &str) -> Option<&'static str> {
    match name {
        "self_dual_not_antipodal" => Some(include_str!("../data/self_dual_not_antipodal.json")),
        "antipodal_not_strong" => Some(include_str!("../data/antipodal_not_strong.json")),
        "odd_obstruction" => Some(include_str!("../data/odd_obstruction.json")),
        _ => None,
    }
}

/// Loads a bundled fixture and re-checks the properties it is shipped for.
pub fn fixture(name: &str) -> Result<CombinatorialMap, FamilyError> {
    let text = fixture_source(name).ok_or_else(|| FamilyError::UnknownFixture(name.to_string()))?;
    let m = parse_map(text)?;
    let fail = |reason: &str| FamilyError::FixtureSelfCheckFailed {
        name: name.to_string(),
        reason: reason.to_string(),
    };
    if !is_self_dual(&m) {
        return Err(fail("not self-dual"));
    }
    let antipodal = matches!(is_antipodally_self_dual(&m), AntipodalVerdict::Antipodal { .. });
    match name {
        "self_dual_not_antipodal" => {
            if antipodal {
                return Err(fail("unexpectedly antipodally self-dual"));
            }
            if is_strongly_involutive(&m).is_some() {
                return Err(fail("unexpectedly strongly involutive"));
            }
            let cycles = enumerate_symmetric_cycles(&incidence(&m).map, Some(8), DEFAULT_BUDGET)
                .map_err(|e| fail(&e.to_string()))?;
            if !cycles.iter().any(|c| c.len() == 8) {
                return Err(fail("no symmetric 8-cycle in the incidence map"));
            }
        }
        "antipodal_not_strong" => {
            if !antipodal {
                return Err(fail("not antipodally self-dual"));
            }
            if is_strongly_involutive(&m).is_some() {
                return Err(fail("unexpectedly strongly involutive"));
            }
        }
        "odd_obstruction" => {
            if odd_edge_obstruction(&m).witness.is_none() {
                return Err(fail("no odd-edge obstruction"));
            }
        }
        _ => unreachable!(),
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_counts() {
        assert_eq!(wheel(3).unwrap().counts(), (4, 6, 4));
        for n in 3..9 {
            assert_eq!(wheel(n).unwrap().counts(), (n + 1, 2 * n, n + 1));
            assert_eq!(ear(n).unwrap().counts(), (2 * n + 1, 4 * n, 2 * n + 1));
            for l in 1..4 {
                assert_eq!(pancake(n, l).unwrap().counts(), (n * l + 1, 2 * n * l, n * l + 1));
            }
        }
        assert_eq!(ear(4).unwrap().counts(), (9, 16, 9));
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(wheel(2), Err(FamilyError::BadParameter(_))));
        assert!(matches!(ear(1), Err(FamilyError::BadParameter(_))));
        assert!(matches!(pancake(3, 0), Err(FamilyError::BadParameter(_))));
    }

    #[test]
    fn pancake_one_layer_is_the_wheel() {
        assert_eq!(pancake(5, 1).unwrap(), wheel(5).unwrap());
    }

    #[test]
    fn ear_faces() {
        let m = ear(5).unwrap();
        let mut lens: Vec<usize> = (0..m.face_count()).map(|f| m.face_len(f)).collect();
        lens.sort();
        assert_eq!(lens, [3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5]);
    }

    #[test]
    fn invalid_corner() {
        let m = wheel(4).unwrap();
        let mut c = Corner::at_dart(&m, 0);
        c.face = ElementRef::face((c.face.index + 1) % m.face_count());
        assert!(matches!(adhesion(&m, c), Err(FamilyError::InvalidCorner { .. })));
    }

    #[test]
    fn fixtures_pass_their_self_checks() {
        for name in FIXTURES {
            fixture(name).unwrap();
        }
    }

    #[test]
    fn adhesion_of_a_triangle() {
        let k3 = CombinatorialMap::from_rotation(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        for c in corners(&k3) {
            let h = adhesion(&k3, c).unwrap();
            assert_eq!(h.counts(), (4, 6, 4));
            assert!(is_self_dual(&h));
        }
    }

    #[test]
    fn hub_glued_to_the_rim_face() {
        let w = wheel(4).unwrap();
        let hub = w.vertex_darts(0)[0];
        let rim = (0..w.dart_count()).find(|&d| w.face_len(w.face_of(d)) == 4).unwrap();
        let h = glue_with_dual(&w, hub, rim, false).unwrap();
        assert!(!is_self_dual(&h));
    }

    #[test]
    fn unknown_fixture() {
        assert!(matches!(fixture("fig99"), Err(FamilyError::UnknownFixture(_))));
    }
}
