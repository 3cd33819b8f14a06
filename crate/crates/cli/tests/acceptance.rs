//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria 5 and 7 contain one item each that cannot hold as stated; those
//! items are checked as stated and reported as FAIL without aborting the run,
//! as long as nothing else in the criterion fails. Any other FAIL exits
//! nonzero.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scix::cache::Cache;
use scix::catalog::{catalog_get, ex_theta, s_graph};
use scix::verify::{witness_blocks, THETA_SEQUENCES};
use scix_core::configs::{check_reducible, claim_list, ConfigSpec, ReducibilityVerdict, Status};
use scix_core::discharging::{
    audit_case_arithmetic, audit_face_inequality, falsification_harness, max_no_run,
    run_rules_list, run_rules_sparse3, run_rules_sparse4,
};
use scix_core::graphcore::{drawings, families, mad_bruteforce, mad_exact};
use scix_core::nullstellensatz::{
    caterpillar_polynomial, coefficient_of, naive_expand, FactorSystem, Monomial,
};
use scix_core::solver::{
    chi_strong, chi_strong_bruteforce, decide_strong, verify_coloring, EdgeColoring,
};
use scix_core::{Graph, Rational};

struct Outcome {
    ok: bool,
    detail: String,
    /// Items that fail for a documented reason.
    known: Vec<String>,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
        known: Vec::new(),
    }
}

fn colorable(g: &Graph, k: usize) -> bool {
    decide_strong(g, k, &EdgeColoring::new())
        .unwrap()
        .is_some_and(|c| c.num_colors() <= k && verify_coloring(g, &c).unwrap())
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed())
}

fn prism_index() -> Outcome {
    let g = families::prism();
    let ((no8, yes9), dt) = timed(|| (!colorable(&g, 8), colorable(&g, 9)));
    outcome(
        no8 && yes9 && dt < Duration::from_secs(10),
        format!(
            "8-colorable {}, 9-colorable {yes9}, {:.2}s",
            !no8,
            dt.as_secs_f64()
        ),
    )
}

fn s_critical() -> Outcome {
    let (res, dt) = timed(|| {
        [3, 4, 7]
            .iter()
            .map(|&k| {
                let g = s_graph(k).unwrap();
                let lower = !colorable(&g, 5);
                let critical = g
                    .edges()
                    .iter()
                    .all(|&e| colorable(&g.without_edges(&[e]), 5));
                (k, lower && critical)
            })
            .collect::<Vec<_>>()
    });
    let ok = res.iter().all(|r| r.1) && dt < Duration::from_secs(30);
    outcome(ok, format!("6-critical {res:?}, {:.2}s", dt.as_secs_f64()))
}

fn s_colorable() -> Outcome {
    let res: Vec<_> = [5, 6, 8]
        .iter()
        .map(|&k| (k, colorable(&s_graph(k).unwrap(), 5)))
        .collect();
    outcome(res.iter().all(|r| r.1), format!("5-colorable {res:?}"))
}

fn sharpness_examples() -> Outcome {
    let theta343 = catalog_get("ex-theta", &[3, 4, 3]).unwrap();
    let house = catalog_get("house", &[]).unwrap();
    let sharp52 = catalog_get("sharp52", &[]).unwrap();
    let checks = [
        (
            "ex-theta(3,4,3) mad 13/6",
            mad_exact(&theta343) == Rational::new(13, 6),
        ),
        ("ex-theta(3,4,3) chi 6", chi_strong(&theta343).unwrap() == 6),
        ("house mad 7/3", mad_exact(&house) == Rational::new(7, 3)),
        ("house chi > 6", !colorable(&house, 6)),
        (
            "sharp52 mad 5/2",
            mad_exact(&sharp52) == Rational::new(5, 2),
        ),
        ("sharp52 chi > 7", !colorable(&sharp52, 7)),
    ];
    let failed: Vec<_> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(failed.is_empty(), format!("failed: {failed:?}"))
}

fn theta_sequences() -> Outcome {
    let (res, dt) = timed(|| {
        THETA_SEQUENCES
            .iter()
            .map(|t| (*t, colorable(&ex_theta(t[0], t[1], t[2]).unwrap(), 5)))
            .collect::<Vec<_>>()
    });
    let printed = &res[..7];
    let failed: Vec<_> = printed.iter().filter(|r| !r.1).map(|r| r.0).collect();
    let known: Vec<String> = failed
        .iter()
        .filter(|t| **t == [3, 3, 4])
        .map(|t| format!("{t:?} has no strong 5-coloring (it is the 13/6 example)"))
        .collect();
    let replacement = res[7].1;
    Outcome {
        ok: failed.is_empty() && dt < Duration::from_secs(300),
        detail: format!(
            "not 5-colorable: {failed:?}; (3,3,7) 5-colorable {replacement}; {:.2}s",
            dt.as_secs_f64()
        ),
        known: if known.len() == failed.len() && replacement {
            known
        } else {
            Vec::new()
        },
    }
}

fn cn_coefficient() -> Outcome {
    let (c, dt) = timed(|| {
        let fs = caterpillar_polynomial(8).unwrap();
        coefficient_of(&fs, &fs.uniform_target(4))
    });
    outcome(
        c == (-2).into() && dt < Duration::from_secs(600),
        format!("coefficient {c}, {:.2}s", dt.as_secs_f64()),
    )
}

fn reducibility_suite() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let run = |cache: &Cache| -> Vec<(ConfigSpec, Status, ReducibilityVerdict)> {
        [3, 4]
            .iter()
            .flat_map(|&d| claim_list(d))
            .map(|(spec, expected)| {
                let v = cache
                    .get_or_compute("check_reducible", &spec, || check_reducible(&spec))
                    .unwrap();
                (spec, expected, v)
            })
            .collect()
    };
    let (first, dt) = timed(|| run(&cache));
    let mut failed = Vec::new();
    let mut reducible = [0usize; 5];
    for (spec, expected, v) in &first {
        let mut ok = v.status == *expected;
        if v.status == Status::NotReducible {
            ok &= witness_blocks(spec, v);
        }
        if ok && v.status == Status::Reducible {
            reducible[spec.d] += 1;
        }
        if !ok {
            failed.push(spec.clone());
        }
    }
    let resumed = Cache::open(dir.path()).unwrap();
    let second = run(&resumed);
    let cached =
        resumed.hits() == first.len() && second.iter().zip(&first).all(|(a, b)| a.2 == b.2);
    let known: Vec<String> = failed
        .iter()
        .filter(|s| **s == ConfigSpec::caterpillar(6, 4, 7))
        .map(|s| format!("{s} has a non-extending boundary precoloring"))
        .collect();
    let detail = format!(
        "reducible d=3: {}, d=4: {}; failed {:?}; second run served from cache {cached}; {:.1}s",
        reducible[3],
        reducible[4],
        failed.iter().map(ToString::to_string).collect::<Vec<_>>(),
        dt.as_secs_f64()
    );
    Outcome {
        ok: failed.is_empty() && cached,
        detail,
        known: if known.len() == failed.len() && cached && reducible[3] == 34 && reducible[4] == 5 {
            known
        } else {
            Vec::new()
        },
    }
}

fn discharging_audits() -> Outcome {
    let mut issues = Vec::new();
    let hosts = [
        families::prism(),
        families::cube(),
        catalog_get("theta", &[4, 5, 4]).unwrap(),
        catalog_get("theta", &[1, 2, 3]).unwrap(),
    ];
    for g in &hosts {
        for s in [run_rules_sparse3(g).unwrap(), run_rules_sparse4(g).unwrap()] {
            if !s.is_conserved() || s.total != Rational::from_integer(2 * g.m() as i64) {
                issues.push(format!("conservation on n={}", g.n()));
            }
        }
    }
    for (i, e) in [
        drawings::prism(),
        drawings::cube(),
        drawings::k4(),
        drawings::cycle(7),
    ]
    .iter()
    .enumerate()
    {
        for p in e.graph().vertices() {
            let s = run_rules_list(e, p).unwrap();
            if !s.is_conserved() || s.total != Rational::from_integer(-1) {
                issues.push(format!("list total on drawing {i}, p={p}"));
            }
        }
    }
    let a = audit_face_inequality(10_000).unwrap();
    if !a.passed() || a.equality_at.first() != Some(&41) {
        issues.push("face audit".into());
    }
    let bad: Vec<_> = audit_case_arithmetic()
        .into_iter()
        .filter(|c| !c.holds)
        .map(|c| c.label)
        .collect();
    if !bad.is_empty() {
        issues.push(format!("case arithmetic {bad:?}"));
    }
    let r = max_no_run(41, 8);
    if r != 35 {
        issues.push(format!("max_no_run(41,8) = {r}"));
    }
    outcome(
        issues.is_empty(),
        format!(
            "issues {issues:?}; face equality at {:?}; max_no_run(41,8) = {r}",
            a.equality_at
        ),
    )
}

/// Largest subset of a cycle with no `r` consecutive members, by subsets.
fn no_run_bitmask(l: usize, r: usize) -> usize {
    if r > l {
        return l;
    }
    (0u32..1 << l)
        .filter(|&s| (0..l).all(|start| (0..r).any(|j| s >> ((start + j) % l) & 1 == 0)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut edges = BTreeSet::new();
    while edges.len() < max_m.min(pairs.len()) && rng.gen_bool(0.9) {
        let i = rng.gen_range(0..pairs.len());
        edges.insert(pairs.swap_remove(i));
    }
    Graph::from_edges(n, edges).unwrap()
}

fn random_system(rng: &mut ChaCha8Rng) -> FactorSystem {
    let nv = rng.gen_range(2..=5);
    let nc = rng.gen_range(0..=2);
    let vars: Vec<String> = (1..=nv).map(|i| format!("x{i}")).collect();
    let consts: Vec<String> = (1..=nc).map(|i| format!("c{i}")).collect();
    let v: Vec<&str> = vars.iter().map(String::as_str).collect();
    let c: Vec<&str> = consts.iter().map(String::as_str).collect();
    let mut fs = FactorSystem::new(&v, &c);
    for _ in 0..rng.gen_range(1..=12) {
        let a = rng.gen_range(0..nv);
        let b = rng.gen_range(0..nv + nc);
        let right = if b < nv {
            vars[b].as_str()
        } else {
            consts[b - nv].as_str()
        };
        if b < nv && a == b {
            continue;
        }
        if rng.gen_bool(0.5) || b >= nv {
            fs.push(&vars[a], right).unwrap();
        } else {
            fs.push(right, &vars[a]).unwrap();
        }
    }
    fs
}

fn property_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut corpus: Vec<Graph> = vec![
        families::prism(),
        families::complete(4),
        families::cycle(7),
        families::path(6),
        families::complete_bipartite(3, 3),
        s_graph(3).unwrap(),
        s_graph(4).unwrap(),
        s_graph(5).unwrap(),
        s_graph(6).unwrap(),
        catalog_get("house", &[]).unwrap(),
        catalog_get("sharp52", &[]).unwrap(),
        families::cube(),
    ];
    for _ in 0..150 {
        let n = rng.gen_range(2..=9);
        corpus.push(random_graph(&mut rng, n, 12));
    }
    let small: Vec<&Graph> = corpus.iter().filter(|g| g.m() <= 12).collect();
    let chi_bad = small
        .iter()
        .filter(|g| chi_strong(g).unwrap() != chi_strong_bruteforce(g).unwrap())
        .count();
    let mut mad_graphs: Vec<Graph> = corpus.clone();
    mad_graphs.push(catalog_get("ex-theta", &[3, 4, 3]).unwrap());
    for _ in 0..20 {
        let n = rng.gen_range(14..=20);
        mad_graphs.push(random_graph(&mut rng, n, 30));
    }
    let mad_bad = mad_graphs
        .iter()
        .filter(|g| g.n() <= 24 && mad_exact(g) != mad_bruteforce(g).unwrap())
        .count();
    let mut cn_checked = 0;
    let mut cn_bad = 0;
    for _ in 0..200 {
        let fs = random_system(&mut rng);
        if fs.factors.len() > 12 {
            continue;
        }
        let full = naive_expand(&fs);
        cn_checked += 1;
        if full.0.iter().any(|(m, c)| coefficient_of(&fs, m) != *c)
            || coefficient_of(&fs, &Monomial::var(fs.vars.len() + 7)) != 0.into()
        {
            cn_bad += 1;
        }
    }
    let run_bad: Vec<_> = (1..=20)
        .flat_map(|l| (1..=l + 1).map(move |r| (l, r)))
        .filter(|&(l, r)| max_no_run(l, r) != no_run_bitmask(l, r))
        .collect();
    let h = falsification_harness(10_000, 2024);
    let ok = chi_bad == 0 && mad_bad == 0 && cn_bad == 0 && run_bad.is_empty() && h.passed();
    outcome(
        ok,
        format!(
            "chi vs brute force {}/{} agree; mad {}/{}; coefficients {}/{}; no-run mismatches {:?}; \
             harness {} trials, {} counterexamples",
            small.len() - chi_bad,
            small.len(),
            mad_graphs.len() - mad_bad,
            mad_graphs.len(),
            cn_checked - cn_bad,
            cn_checked,
            run_bad,
            h.trials,
            h.counterexamples.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("prism has strong chromatic index 9", prism_index),
        ("S3, S4, S7 are 6-critical", s_critical),
        ("S5, S6, S8 are strongly 5-edge-colorable", s_colorable),
        (
            "sharpness examples: mad and strong chromatic index",
            sharpness_examples,
        ),
        ("theta sequences are 5-colorable", theta_sequences),
        ("8-caterpillar coefficient is -2", cn_coefficient),
        ("reducibility suite", reducibility_suite),
        ("discharging audits", discharging_audits),
        (
            "oracle equivalences and falsification harness",
            property_oracles,
        ),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {name} ({})", i + 1, o.detail);
        if !o.ok {
            if o.known.is_empty() {
                unexpected.push(i + 1);
            } else {
                for k in &o.known {
                    println!("     known: {k}; see the decisions ledger");
                }
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures in criteria {unexpected:?}");
        std::process::exit(1);
    }
}
