//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion outside `KNOWN_FALSE` fails.

use std::io::Write as _;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sdmap::antipodality::raw_labeling_search;
use sdmap::generate::{all_sphere_maps, random_sphere_map};
use sdmap::morphism::are_isomorphic;
use sdmap::*;

/// Criteria whose statement does not hold for the definitions as written.
/// Criterion 3 claims every symmetric cycle of I(G) has length 2 mod 4 when G
/// is antipodally self-dual; the cube I(K4) already has a symmetric 8-cycle
/// exchanged by an edge-axis half-turn. It runs faithfully and reports FAIL.
const KNOWN_FALSE: &[usize] = &[3];

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn antipodal(m: &CombinatorialMap) -> bool {
    is_antipodally_self_dual(m).is_antipodal()
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    (0..perm.len())
        .filter(|&s| {
            let fresh = !seen[s];
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = perm[d];
            }
            fresh
        })
        .count()
}

fn brute_counts(m: &CombinatorialMap) -> (usize, usize, usize) {
    let (alpha, sigma) = (m.alpha_perm(), m.sigma_perm());
    let phi: Vec<usize> = (0..alpha.len()).map(|d| sigma[alpha[d]]).collect();
    (cycle_count(sigma), cycle_count(alpha), cycle_count(&phi))
}

fn random_maps(seed: u64, count: usize, max_edges: usize) -> Vec<CombinatorialMap> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let e = rng.gen_range(1..=max_edges);
            random_sphere_map(&mut rng, e)
        })
        .collect()
}

/// Antipodally self-dual maps drawn from the families and from adhesions.
fn certified_antipodal() -> Vec<(String, CombinatorialMap)> {
    let mut out: Vec<(String, CombinatorialMap)> = Vec::new();
    for n in [3, 5, 7] {
        out.push((format!("W{n}"), wheel(n).unwrap()));
    }
    for n in [4, 6] {
        out.push((format!("E{n}"), ear(n).unwrap()));
    }
    for (n, l) in [(3, 1), (3, 2), (5, 1)] {
        out.push((format!("P{n}^{l}"), pancake(n, l).unwrap()));
    }
    out.push(("antipodal_not_strong".into(), fixture("antipodal_not_strong").unwrap()));
    for (name, g) in [("W3", wheel(3).unwrap()), ("W4", wheel(4).unwrap()), ("E3", ear(3).unwrap())] {
        for dart in [0, 1] {
            out.push((format!("{name}◇{name}* at {dart}"), adhesion(&g, Corner::at_dart(&g, dart)).unwrap()));
        }
    }
    let tri = random_maps(11, 1, 3).remove(0);
    out.push(("random◇random*".into(), adhesion(&tri, Corner::at_dart(&tri, 0)).unwrap()));
    out.retain(|(_, m)| antipodal(m));
    out
}

fn family_sweep() -> Verdict {
    let mut checked = 0;
    for n in 3..=8 {
        ensure(antipodal(&wheel(n).unwrap()) == (n % 2 == 1), || format!("wheel({n})"))?;
        checked += 1;
    }
    for n in 3..=7 {
        ensure(antipodal(&ear(n).unwrap()) == (n % 2 == 0), || format!("ear({n})"))?;
        checked += 1;
    }
    for n in 3..=5 {
        for l in 1..=3 {
            ensure(antipodal(&pancake(n, l).unwrap()) == (n % 2 == 1), || format!("pancake({n},{l})"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} family members match parity"))
}

fn strong_implies_antipodal() -> Verdict {
    let mut maps: Vec<CombinatorialMap> = all_sphere_maps(5).into_iter().flatten().collect();
    maps.extend(random_maps(2, 40, 10));
    maps.extend((3..=8).map(|n| wheel(n).unwrap()));
    maps.extend((3..=7).map(|n| ear(n).unwrap()));
    maps.extend(certified_antipodal().into_iter().map(|(_, m)| m));
    let mut strong = 0;
    for m in &maps {
        if is_strongly_involutive(m).is_some() {
            strong += 1;
            ensure(antipodal(m), || format!("strong but not antipodal: {}", serialize_map(m).trim()))?;
        }
    }
    ensure(strong > 0, || "no strongly involutive map generated".into())?;
    let f = fixture("antipodal_not_strong").unwrap();
    ensure(antipodal(&f) && is_strongly_involutive(&f).is_none(), || {
        "antipodal_not_strong fixture does not separate the notions".into()
    })?;
    Ok(format!("{strong} strongly involutive maps of {} all antipodal; converse fails on fixture", maps.len()))
}

fn symmetric_cycle_lengths() -> Verdict {
    let mut mod4 = Vec::new();
    for (name, m, want) in [
        ("W4", wheel(4).unwrap(), 8),
        ("E3", ear(3).unwrap(), 12),
        ("P4^2", pancake(4, 2).unwrap(), 8),
    ] {
        let r = theorem_ant1_report(&m, symmetry::DEFAULT_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.lengths.contains(&want), || format!("{name}: no symmetric {want}-cycle, lengths {:?}", r.lengths))?;
        mod4.push(format!("{name}:{want}"));
    }
    let maps = certified_antipodal();
    ensure(maps.len() >= 12, || format!("only {} certified antipodal maps", maps.len()))?;
    let mut bad = Vec::new();
    for (name, m) in &maps {
        let r = theorem_ant1_report(m, symmetry::DEFAULT_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        if !r.consistent {
            bad.push(format!("{name} {:?}", r.lengths));
        }
    }
    ensure(bad.is_empty(), || {
        format!(
            "{} of {} antipodal maps have a symmetric cycle of length 0 mod 4 (e.g. {}); mod-4 cycles found {}",
            bad.len(),
            maps.len(),
            bad[0],
            mod4.join(" ")
        )
    })?;
    Ok(format!("{} antipodal maps consistent; {}", maps.len(), mod4.join(" ")))
}

fn adhesions_are_antipodal() -> Verdict {
    let maps = random_maps(4, 10, 10);
    let mut glued = 0;
    for (i, g) in maps.iter().enumerate() {
        for dart in 0..g.dart_count() {
            let h = adhesion(g, Corner::at_dart(g, dart)).map_err(|e| e.to_string())?;
            ensure(is_self_dual(&h), || format!("map {i} corner {dart}: not self-dual"))?;
            ensure(antipodal(&h), || format!("map {i} corner {dart}: not antipodal"))?;
            glued += 1;
        }
    }
    Ok(format!("{glued} adhesions over 10 random maps"))
}

fn derived_maps_antipodally_symmetric() -> Verdict {
    let maps = certified_antipodal();
    for (name, m) in &maps {
        for (what, h) in [("medial", medial(m).map), ("incidence", incidence(m).map)] {
            let s = is_antipodally_symmetric(&h).ok_or_else(|| format!("{what}({name}) not antipodally symmetric"))?;
            ensure(s.is_orientation_reversing(), || format!("{what}({name}) witness preserves orientation"))?;
            ensure(s.automorphism.then(&s.automorphism).is_identity() && s.extension.is_involution(), || {
                format!("{what}({name}) witness is not an involution")
            })?;
        }
    }
    Ok(format!("{} maps, medial and incidence", maps.len()))
}

fn oracle_equivalence() -> Verdict {
    // |V(I(G)^□)| = |V| + |F| + 3|E| = 4|E| + 2, so the bound 24 means |E| <= 5
    let maps: Vec<CombinatorialMap> = all_sphere_maps(5).into_iter().flatten().collect();
    let mut yes = 0;
    for m in &maps {
        let raw = raw_labeling_search(m, 24).map_err(|e| e.to_string())?.is_some();
        let dual_route = antipodal(m);
        ensure(raw == dual_route, || format!("raw={raw} duality={dual_route} on {}", serialize_map(m).trim()))?;
        yes += usize::from(raw);
    }
    Ok(format!("{} maps agree ({yes} antipodal)", maps.len()))
}

fn structural_identities() -> Verdict {
    for (i, m) in random_maps(7, 20, 12).iter().enumerate() {
        let med = medial(m);
        ensure(are_isomorphic(&medial(&dual(m).map).map, &med.map), || format!("map {i}: med(G*) ≇ med(G)"))?;
        ensure(are_isomorphic(&dual(&incidence(m).map).map, &med.map), || format!("map {i}: I(G)* ≇ med(G)"))?;
        ensure(square(m).map.face_count() == 2 * m.edge_count(), || format!("map {i}: |F(G□)| ≠ 2|E|"))?;
        let inc = incidence(m);
        ensure((0..inc.map.face_count()).all(|f| inc.map.face_len(f) == 4), || format!("map {i}: I(G) face not a quadrilateral"))?;
        if is_self_dual(m) {
            ensure(m.edge_count() % 2 == 0, || format!("map {i}: self-dual with odd |E|"))?;
        }
    }
    Ok("20 random maps".into())
}

fn obstruction_excludes_antipodality() -> Verdict {
    let f = fixture("odd_obstruction").unwrap();
    ensure(odd_edge_obstruction(&f).holds(), || "odd_obstruction fixture has no obstruction".into())?;
    let mut maps: Vec<CombinatorialMap> = all_sphere_maps(5).into_iter().flatten().collect();
    maps.extend(random_maps(8, 40, 10));
    maps.extend(FIXTURES.iter().map(|n| fixture(n).unwrap()));
    maps.extend((3..=8).map(|n| wheel(n).unwrap()));
    let mut obstructed = 0;
    for m in &maps {
        if odd_edge_obstruction(m).holds() {
            obstructed += 1;
            ensure(!antipodal(m), || format!("obstructed yet antipodal: {}", serialize_map(m).trim()))?;
        }
    }
    Ok(format!("{obstructed} obstructed maps of {}, none antipodal", maps.len()))
}

fn small_object_counts() -> Verdict {
    let w3 = wheel(3).unwrap();
    for (what, d, want) in [
        ("medial", medial(&w3), (6, 12, 8)),
        ("incidence", incidence(&w3), (8, 12, 6)),
        ("square", square(&w3), (14, 24, 12)),
    ] {
        ensure(d.map.counts() == want && brute_counts(&d.map) == want, || {
            format!("{what}(W3): {:?} / brute {:?}", d.map.counts(), brute_counts(&d.map))
        })?;
    }
    // K4 is 3-connected: map automorphisms correspond to vertex permutations preserving adjacency
    let edges: Vec<_> = (0..w3.edge_count()).map(|e| w3.endpoints(e)).collect();
    let brute = permutations(4)
        .into_iter()
        .filter(|p| {
            edges.iter().all(|&(a, b)| edges.iter().any(|&(c, d)| (p[a], p[b]) == (c, d) || (p[a], p[b]) == (d, c)))
        })
        .count();
    let aut = automorphisms(&w3, Orientations::Both).len();
    ensure(aut == 24 && brute == 24, || format!("|Aut(W3)| = {aut}, brute force {brute}"))?;
    Ok("medial (6,12,8), incidence (8,12,6), square (14,24,12), |Aut| 24".into())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("family sweep", family_sweep),
        ("strong => antipodal", strong_implies_antipodal),
        ("symmetric cycle lengths", symmetric_cycle_lengths),
        ("adhesions", adhesions_are_antipodal),
        ("antipodal symmetry of derived maps", derived_maps_antipodally_symmetric),
        ("labeling oracle equivalence", oracle_equivalence),
        ("structural identities", structural_identities),
        ("odd-edge obstruction", obstruction_excludes_antipodality),
        ("small object counts", small_object_counts),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        // written past the test harness capture so the lines always show
        let line = match &verdict {
            Ok(detail) => format!("criterion {n} PASS {name}: {detail} ({secs:.1}s)"),
            Err(detail) => format!("criterion {n} FAIL {name}: {detail} ({secs:.1}s)"),
        };
        writeln!(std::io::stderr(), "{line}").ok();
        if verdict.is_err() && !KNOWN_FALSE.contains(&n) {
            unexpected.push(n);
        }
    }
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
