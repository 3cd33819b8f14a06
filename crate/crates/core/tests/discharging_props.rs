use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scix_core::discharging::*;
use scix_core::graphcore::is_two_connected;
use scix_core::{Embedding, Graph, Rational};

/// Random skeleton with the given degrees, paired at random, whose edges are
/// subdivided `0..=max_t` times. Returns `None` for loops, parallel direct
/// edges or graphs that are not 2-connected.
fn subdivided(rng: &mut ChaCha8Rng, degrees: &[usize], max_t: usize) -> Option<Graph> {
    let mut stubs: Vec<usize> = degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| vec![v; d])
        .collect();
    if stubs.len() % 2 == 1 {
        return None;
    }
    stubs.shuffle(rng);
    let mut edges = Vec::new();
    let mut n = degrees.len();
    let mut direct = BTreeSet::new();
    for c in stubs.chunks(2) {
        let (a, b) = (c[0], c[1]);
        if a == b {
            return None;
        }
        let t = rng.gen_range(0..=max_t);
        if t == 0 {
            if !direct.insert((a.min(b), a.max(b))) {
                return None;
            }
            edges.push((a, b));
            continue;
        }
        let mut prev = a;
        for _ in 0..t {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, b));
    }
    let g = Graph::from_edges(n, edges).ok()?;
    is_two_connected(&g).then_some(g)
}

fn cubic(rng: &mut ChaCha8Rng) -> Option<Graph> {
    let n0 = 2 * rng.gen_range(1..=6);
    subdivided(rng, &vec![3; n0], 7)
}

fn bitmask_no_run(l: usize, r: usize) -> usize {
    (0u32..1 << l)
        .filter(|&m| (0..l).all(|s| (0..r).any(|j| m >> ((s + j) % l) & 1 == 0)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

#[test]
fn no_run_matches_bitmask() {
    for l in 1..=20 {
        for r in 1..=l {
            assert_eq!(max_no_run(l, r), bitmask_no_run(l, r), "l={l} r={r}");
            assert_eq!(max_no_run(l, r), (r - 1) * l / r, "closed form l={l} r={r}");
        }
    }
}

/// The local lemma behind the subcubic argument: with no catalog
/// configuration and `|N3| >= 2` everywhere, every vertex ends with at
/// least `2 + 1/7`, whatever the density.
#[test]
fn configuration_free_graphs_end_fully_charged() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let target = Rational::new(15, 7);
    let (mut free, mut resp14) = (0, 0);
    for _ in 0..100_000 {
        let Some(g) = cubic(&mut rng) else { continue };
        if find_catalog_config(&g).is_some() {
            continue;
        }
        let reports: Vec<_> = g
            .vertices()
            .filter(|&v| g.degree(v) == 3)
            .map(|v| n3_and_resp(&g, v).unwrap())
            .collect();
        if reports.iter().any(|r| r.n3.len() < 2) {
            continue;
        }
        free += 1;
        resp14 += reports.iter().filter(|r| r.resp_size() == 14).count();
        assert!(reports.iter().all(|r| r.resp_size() <= 14));
        let s = run_rules_sparse3(&g).unwrap();
        assert!(s.is_conserved());
        for (v, c) in s.vertex_charges() {
            assert!(
                c >= target,
                "{}: vertex {v} ends at {c}",
                scix_core::graphcore::emit_graph6(&g)
            );
            if g.degree(v) == 2 {
                assert_eq!(c, target);
            }
        }
    }
    assert!(free > 2000, "only {free} configuration-free samples");
    assert!(resp14 > 0, "the 1/7 rule was never exercised");
}

#[test]
fn harness_finds_no_counterexample() {
    let r = falsification_harness(10_000, 2024);
    assert_eq!(r.trials, 10_000);
    assert!(r.passed(), "{:?}", r.counterexamples);
    assert_eq!(r.with_config + r.counterexamples.len(), 10_000);
    assert_eq!(falsification_harness(50, 7), falsification_harness(50, 7));
}

#[test]
fn y_center_with_full_threads() {
    // Y(0,7,7) about vertex 0, its far ends 1, 2, 3 closed up through 4 and 5.
    let mut edges = vec![(0, 1), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)];
    let mut n = 6;
    for end in [2, 3] {
        let mut prev = 0;
        for _ in 0..7 {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, end));
    }
    let g = Graph::from_edges(n, edges).unwrap();
    let r = n3_and_resp(&g, 0).unwrap();
    assert_eq!(r.resp_size(), 14);
    assert_eq!(r.distance[&1], 1);
    assert!(r.resp.values().all(|&m| m == 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sparse3_conserves(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(g) = cubic(&mut rng) {
            let s = run_rules_sparse3(&g).unwrap();
            prop_assert!(s.is_conserved());
            prop_assert_eq!(s.total, Rational::from_integer(2 * g.m() as i64));
            for v in g.vertices().filter(|&v| g.degree(v) == 3) {
                let r = n3_and_resp(&g, v).unwrap();
                prop_assert!(r.resp.values().all(|&m| m <= 2));
            }
        }
    }

    #[test]
    fn sparse4_conserves(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let degrees: Vec<usize> = (0..rng.gen_range(2..=8)).map(|_| rng.gen_range(3..=4)).collect();
        if let Some(g) = subdivided(&mut rng, &degrees, 5) {
            let s = run_rules_sparse4(&g).unwrap();
            prop_assert!(s.is_conserved());
            prop_assert_eq!(s.total, Rational::from_integer(2 * g.m() as i64));
            prop_assert!(s.flags.is_empty());
            for v in g.vertices().filter(|&v| g.degree(v) == 2) {
                prop_assert_eq!(s.get(Element::Vertex(v)), Rational::new(28, 13));
            }
        }
    }

    #[test]
    fn list_rules_total_is_minus_one(seed in any::<u64>(), pick in any::<usize>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_plane(&mut rng);
        let h = e.graph().clone();
        let p = pick % h.n();
        let s = run_rules_list(&e, p).unwrap();
        prop_assert!(s.is_conserved());
        prop_assert_eq!(s.total, Rational::from_integer(-1));
        for v in h.vertices().filter(|&v| v != p) {
            prop_assert!(s.get(Element::Vertex(v)) >= Rational::from_integer(0));
        }
        if h.degree(p) != 2 {
            for (i, f) in e.trace_faces().iter().enumerate() {
                let r2 = f.iter().filter(|&&v| h.degree(v) == 2).count() as i64;
                prop_assert_eq!(s.get(Element::Face(i)), Rational::from_integer(f.len() as i64 - r2 - 6));
            }
        }
    }
}

/// A 2-connected straight-line plane graph: the 4×4 grid with one diagonal
/// per cell, random edges deleted while 2-connectivity survives, then random
/// edges subdivided at their midpoints.
fn random_plane(rng: &mut ChaCha8Rng) -> Embedding {
    let id = |r: usize, c: usize| 4 * r + c;
    let mut edges = Vec::new();
    for r in 0..4 {
        for c in 0..4 {
            if c + 1 < 4 {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < 4 {
                edges.push((id(r, c), id(r + 1, c)));
            }
            if r + 1 < 4 && c + 1 < 4 {
                edges.push((id(r, c), id(r + 1, c + 1)));
            }
        }
    }
    let mut coords: Vec<(f64, f64)> = (0..16).map(|v| ((v % 4) as f64, (v / 4) as f64)).collect();
    edges.shuffle(rng);
    let mut i = 0;
    while i < edges.len() {
        if rng.gen_bool(0.6) {
            let mut rest = edges.clone();
            rest.remove(i);
            let g = Graph::from_edges(16, rest.iter().copied()).unwrap();
            let keep: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
            if keep.len() == 16 && is_two_connected(&g) {
                edges = rest;
                continue;
            }
        }
        i += 1;
    }
    let mut out = Vec::new();
    for (a, b) in edges {
        let t = if rng.gen_bool(0.5) {
            rng.gen_range(1..=3)
        } else {
            0
        };
        let mut prev = a;
        for k in 1..=t {
            let f = k as f64 / (t + 1) as f64;
            coords.push((
                coords[a].0 + f * (coords[b].0 - coords[a].0),
                coords[a].1 + f * (coords[b].1 - coords[a].1),
            ));
            out.push((prev, coords.len() - 1));
            prev = coords.len() - 1;
        }
        out.push((prev, b));
    }
    let g = Graph::from_edges(coords.len(), out).unwrap();
    Embedding::from_coordinates(g, &coords)
}
