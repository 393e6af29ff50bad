//! Enumeration and random generation of sphere maps by edge insertion.
//!
//! Every connected sphere map with `k + 1` edges is obtained from one with `k`
//! edges by either hanging a pendant edge in a corner or drawing an edge (or
//! loop) across a face: delete a non-bridge edge if there is one, otherwise a
//! leaf edge of the tree.

use std::collections::BTreeMap;

use rand::Rng;

use crate::map::CombinatorialMap;

fn single_edge() -> CombinatorialMap {
    CombinatorialMap::new(vec![1, 0], vec![0, 1]).expect("single edge")
}

fn single_loop() -> CombinatorialMap {
    CombinatorialMap::new(vec![1, 0], vec![1, 0]).expect("single loop")
}

/// New edge `(x, y)` with `x` hung just before dart `g` (inside the corner at
/// the origin of `g` on the face to its right) and `y` a new leaf.
pub fn insert_pendant(m: &CombinatorialMap, g: usize) -> CombinatorialMap {
    let n = m.dart_count();
    let (x, y) = (n, n + 1);
    let mut alpha = m.alpha_perm().to_vec();
    let mut sigma = m.sigma_perm().to_vec();
    alpha.extend([y, x]);
    sigma.extend([g, y]);
    sigma[m.sigma_inv(g)] = x;
    CombinatorialMap::new(alpha, sigma).expect("pendant insertion keeps the sphere")
}

/// New edge across the face shared by `g1` and `g2`, entering the corners just
/// before each of them. `None` when the darts lie on different faces.
pub fn insert_chord(m: &CombinatorialMap, g1: usize, g2: usize) -> Option<CombinatorialMap> {
    if m.face_of(g1) != m.face_of(g2) {
        return None;
    }
    let n = m.dart_count();
    let (x, y) = (n, n + 1);
    let mut alpha = m.alpha_perm().to_vec();
    let mut sigma = m.sigma_perm().to_vec();
    alpha.extend([y, x]);
    sigma.extend([0, 0]);
    if g1 == g2 {
        sigma[m.sigma_inv(g1)] = x;
        sigma[x] = y;
        sigma[y] = g1;
    } else {
        sigma[m.sigma_inv(g1)] = x;
        sigma[x] = g1;
        sigma[m.sigma_inv(g2)] = y;
        sigma[y] = g2;
    }
    CombinatorialMap::new(alpha, sigma).ok()
}

fn extensions(m: &CombinatorialMap) -> Vec<CombinatorialMap> {
    let mut out = Vec::new();
    for g in 0..m.dart_count() {
        out.push(insert_pendant(m, g));
    }
    for f in 0..m.face_count() {
        let darts = m.face_darts(f);
        for &g1 in darts {
            for &g2 in darts {
                if let Some(c) = insert_chord(m, g1, g2) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// All connected sphere maps with `1..=max_edges` edges, one per isomorphism
/// class (reflections identified), grouped by edge count and in canonical form.
pub fn all_sphere_maps(max_edges: usize) -> Vec<Vec<CombinatorialMap>> {
    let mut levels: Vec<Vec<CombinatorialMap>> = Vec::new();
    if max_edges == 0 {
        return levels;
    }
    let mut current: BTreeMap<(Vec<usize>, Vec<usize>), CombinatorialMap> = BTreeMap::new();
    for m in [single_edge(), single_loop()] {
        current.insert(m.unoriented_code(), m);
    }
    loop {
        let maps: Vec<CombinatorialMap> = current
            .into_iter()
            .map(|((sigma, alpha), _)| CombinatorialMap::new(alpha, sigma).expect("canonical code is a map"))
            .collect();
        levels.push(maps);
        if levels.len() == max_edges {
            return levels;
        }
        current = BTreeMap::new();
        for m in levels.last().unwrap() {
            for c in extensions(m) {
                current.entry(c.unoriented_code()).or_insert(c);
            }
        }
    }
}

/// A random connected sphere map with exactly `edges` edges, grown by random
/// pendant and chord insertions.
pub fn random_sphere_map<R: Rng>(rng: &mut R, edges: usize) -> CombinatorialMap {
    assert!(edges >= 1, "a map needs at least one edge");
    let mut m = if rng.gen_bool(0.5) { single_edge() } else { single_loop() };
    while m.edge_count() < edges {
        let g1 = rng.gen_range(0..m.dart_count());
        if rng.gen_bool(0.35) {
            m = insert_pendant(&m, g1);
        } else {
            let face = m.face_darts(m.face_of(g1));
            let g2 = face[rng.gen_range(0..face.len())];
            m = insert_chord(&m, g1, g2).expect("same face");
        }
    }
    // scramble dart labels so nothing downstream depends on insertion order
    let mut perm: Vec<usize> = (0..m.dart_count()).collect();
    for i in (1..perm.len()).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    m.relabel(&perm).expect("relabeling by a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn small_map_counts() {
        // unrooted planar maps up to reflection; 57 up to rotation only for 4 edges
        let levels = all_sphere_maps(4);
        let sizes: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(sizes, [2, 4, 14, 52]);
        let sensed: std::collections::BTreeSet<_> = levels[3]
            .iter()
            .flat_map(|m| [m.canonical_code(), m.mirror().canonical_code()])
            .collect();
        assert_eq!(sensed.len(), 57);
    }

    #[test]
    fn random_maps_are_spherical() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for e in 1..12 {
            let m = random_sphere_map(&mut rng, e);
            assert_eq!(m.edge_count(), e);
            assert_eq!(m.euler_characteristic(), 2);
        }
    }
}
