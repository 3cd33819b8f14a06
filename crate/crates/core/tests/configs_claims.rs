use scix_core::configs::*;
use scix_core::solver::{decide_strong, verify_coloring};

fn check_witness(spec: &ConfigSpec, verdict: &ReducibilityVerdict) {
    let cfg = build_config(spec).unwrap();
    let w = verdict
        .witness
        .as_ref()
        .expect("not reducible verdicts carry a witness");
    assert_eq!(w.len(), cfg.boundary.len());
    let cg = scix_core::graphcore::conflict_graph(&cfg.graph);
    for (i, &e) in cfg.boundary.iter().enumerate() {
        for &f in &cfg.boundary[i + 1..] {
            let (x, y) = (
                cfg.graph.edge_index(e).unwrap(),
                cfg.graph.edge_index(f).unwrap(),
            );
            assert!(!cg.has_edge(x, y) || w.get(e) != w.get(f));
        }
    }
    assert!(decide_strong(&cfg.graph, spec.k, w).unwrap().is_none());
}

#[test]
fn subcubic_claims() {
    for outcome in verify_claims(3).unwrap() {
        assert!(
            outcome.passed(),
            "{} expected {}",
            outcome.spec,
            outcome.expected
        );
        if outcome.verdict.status == Status::NotReducible {
            check_witness(&outcome.spec, &outcome.verdict);
        }
    }
}

#[test]
fn subquartic_y_claims() {
    for (spec, _) in claim_list(4)
        .into_iter()
        .filter(|(s, _)| s.family == Family::Y)
    {
        assert_eq!(
            check_reducible(&spec).unwrap().status,
            Status::Reducible,
            "{spec}"
        );
    }
}

#[test]
fn six_caterpillar_with_four_pendant_degree_has_a_blocking_precoloring() {
    // Both anchors carry the same four colors; the forced color sets along
    // the thread cannot close up at the far anchor.
    let spec = ConfigSpec::caterpillar(6, 4, 7);
    let verdict = check_reducible(&spec).unwrap();
    assert_eq!(verdict.status, Status::NotReducible);
    check_witness(&spec, &verdict);
    let w = verdict.witness.unwrap();
    let at = |a: usize| {
        let mut c: Vec<_> = w
            .iter()
            .filter(|(e, _)| e.touches(a))
            .map(|(_, c)| c)
            .collect();
        c.sort_unstable();
        c
    };
    assert_eq!(at(0), vec![1, 2, 3, 4]);
    assert_eq!(at(7), vec![1, 2, 3, 4]);
    // One more thread vertex or one more color restores reducibility.
    assert_eq!(
        check_reducible(&ConfigSpec::caterpillar(7, 4, 7))
            .unwrap()
            .status,
        Status::Reducible
    );
    assert_eq!(
        check_reducible(&ConfigSpec::caterpillar(6, 4, 8))
            .unwrap()
            .status,
        Status::Reducible
    );
}

#[test]
fn reducible_witness_free_extensions_verify() {
    let cfg = build_config(&ConfigSpec::caterpillar(8, 3, 5)).unwrap();
    for pre in boundary_precolorings(&cfg, 5) {
        let c = decide_strong(&cfg.graph, 5, &pre)
            .unwrap()
            .expect("8-caterpillar extends");
        assert!(verify_coloring(&cfg.graph, &c).unwrap());
    }
}
