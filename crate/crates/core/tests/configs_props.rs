use proptest::prelude::*;
use scix_core::configs::*;
use scix_core::graphcore::conflict_graph;
use scix_core::solver::decide_strong;

fn small_spec() -> impl Strategy<Value = ConfigSpec> {
    prop_oneof![
        (3usize..=8).prop_map(|t| ConfigSpec::caterpillar(t, 3, 5)),
        proptest::collection::vec(0usize..=3, 1..=3).prop_map(|p| ConfigSpec::new(
            Family::Y,
            &p,
            3,
            5
        )),
        (1usize..=3, 1usize..=3, 1usize..=2, 0usize..=2)
            .prop_map(|(t, a1, a2, s)| ConfigSpec::new(Family::Phi, &[t, a1, a2, s], 3, 5)),
    ]
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut s = seed | 1;
    for i in (1..n).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        perm.swap(i, (s % (i as u64 + 1)) as usize);
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn boundary_and_interior_partition(spec in small_spec()) {
        let Ok(cfg) = build_config(&spec) else { return Ok(()) };
        let mut all: Vec<_> = cfg.boundary.iter().chain(&cfg.interior).copied().collect();
        all.sort();
        prop_assert_eq!(&all[..], cfg.graph.edges());
        for e in &cfg.boundary {
            prop_assert!(cfg.anchors.iter().any(|&a| e.touches(a)));
        }
        for e in &cfg.interior {
            prop_assert!(!cfg.anchors.iter().any(|&a| e.touches(a)));
            // Interior edges keep clear of every open vertex and its neighbors.
            for &o in &cfg.open {
                prop_assert!(!e.touches(o));
                prop_assert!(!cfg.graph.neighbors(o).iter().any(|&w| e.touches(w)));
            }
        }
        let cg = conflict_graph(&cfg.graph);
        prop_assert_eq!(cg.n(), cfg.boundary.len() + cfg.interior.len());
    }

    #[test]
    fn reducibility_is_monotone_in_k(spec in small_spec()) {
        let Ok(cfg) = build_config(&spec) else { return Ok(()) };
        let mut seen_reducible = false;
        for k in 3..=7 {
            let r = check_embedded(&cfg, k).unwrap().status == Status::Reducible;
            prop_assert!(r || !seen_reducible, "reducible below k = {k} but not at it");
            seen_reducible |= r;
        }
    }

    #[test]
    fn relabelling_preserves_the_verdict(spec in small_spec(), seed in any::<u64>()) {
        let Ok(cfg) = build_config(&spec) else { return Ok(()) };
        let moved = cfg.relabel(&shuffled(cfg.graph.n(), seed)).unwrap();
        let (a, b) = (check_embedded(&cfg, spec.k).unwrap(), check_embedded(&moved, spec.k).unwrap());
        prop_assert_eq!(a.status, b.status);
        prop_assert_eq!(a.stats.precolorings, b.stats.precolorings);
        prop_assert_eq!(raw_precoloring_count(&cfg, spec.k), raw_precoloring_count(&moved, spec.k));
    }

    #[test]
    fn witnesses_are_genuine(spec in small_spec(), k in 4usize..=5) {
        let Ok(cfg) = build_config(&spec) else { return Ok(()) };
        let v = check_embedded(&cfg, k).unwrap();
        match v.witness {
            Some(w) => {
                prop_assert_eq!(v.status, Status::NotReducible);
                prop_assert!(decide_strong(&cfg.graph, k, &w).unwrap().is_none());
                // It is also the first failing precoloring in enumeration order.
                let first = boundary_precolorings(&cfg, k)
                    .find(|p| decide_strong(&cfg.graph, k, p).unwrap().is_none());
                prop_assert_eq!(Some(w), first);
            }
            None => {
                for p in boundary_precolorings(&cfg, k).take(200) {
                    prop_assert!(decide_strong(&cfg.graph, k, &p).unwrap().is_some());
                }
            }
        }
    }
}
