//! The `verify-paper` regression suite.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use scix_core::configs::{
    build_config, check_reducible, claim_list, ConfigSpec, ReducibilityVerdict, Status as Verdict,
};
use scix_core::discharging::{
    audit_case_arithmetic, audit_face_inequality, falsification_harness, max_no_run,
    run_rules_list, run_rules_sparse3, run_rules_sparse4, FalsificationReport,
};
use scix_core::graphcore::{drawings, emit_graph6, girth, mad_exact};
use scix_core::nullstellensatz::{cn_certificate, CnCertificate};
use scix_core::solver::{decide_strong, verify_coloring, Coloring, StrongSolver};
use scix_core::{Graph, Rational};
use serde::{Deserialize, Serialize};

use crate::cache::Cache;
use crate::catalog::{self, catalog_get, Basis};
use crate::report::{Entry, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Scope {
    Catalog,
    Critical,
    Theta,
    Cn,
    Claims,
    Discharging,
}

impl Scope {
    pub const ALL: [Scope; 6] = [
        Scope::Catalog,
        Scope::Critical,
        Scope::Theta,
        Scope::Cn,
        Scope::Claims,
        Scope::Discharging,
    ];

    fn rank(self) -> usize {
        Scope::ALL.iter().position(|&s| s == self).unwrap() + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Scope::Catalog => "catalog",
            Scope::Critical => "critical",
            Scope::Theta => "theta",
            Scope::Cn => "cn",
            Scope::Claims => "claims",
            Scope::Discharging => "discharging",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Scope, String> {
        Scope::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Scope::ALL.iter().map(|s| s.name()).collect();
                format!("unknown scope `{s}`; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub scopes: Vec<Scope>,
    pub jobs: usize,
    pub seed: u64,
    pub trials: usize,
    pub face_lmax: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            scopes: Scope::ALL.to_vec(),
            jobs: 0,
            seed: 2024,
            trials: 10_000,
            face_lmax: 10_000,
        }
    }
}

/// Sequences whose expanded theta graphs should be 5-colorable, as listed,
/// followed by the corrected last entry.
pub const THETA_SEQUENCES: [[usize; 3]; 8] = [
    [0, 7, 7],
    [0, 6, 7],
    [1, 6, 6],
    [1, 5, 7],
    [2, 5, 6],
    [2, 4, 7],
    [3, 3, 4],
    [3, 3, 7],
];

type Task<'a> = Box<dyn Fn() -> Vec<Entry> + Send + Sync + 'a>;

struct Ctx<'a> {
    cache: &'a Cache,
    opts: &'a VerifyOptions,
}

fn id(scope: Scope, rest: &str) -> String {
    format!("{}.{}.{}", scope.rank(), scope, rest)
}

fn fmt_girth(g: &Graph) -> String {
    girth(g).finite().map_or("inf".into(), |x| x.to_string())
}

impl Ctx<'_> {
    fn chi(&self, g: &Graph) -> usize {
        self.cache
            .get_or_compute("chi", &emit_graph6(g), || {
                StrongSolver::new(g).chi().map(|(k, _)| k)
            })
            .expect("catalog graphs are valid solver inputs")
    }

    fn decide(&self, g: &Graph, k: usize) -> Option<Coloring> {
        self.cache
            .get_or_compute("decide", &(emit_graph6(g), k), || {
                decide_strong(g, k, &Coloring::new())
            })
            .expect("catalog graphs are valid solver inputs")
    }

    fn colorable(&self, g: &Graph, k: usize) -> bool {
        self.decide(g, k)
            .is_some_and(|c| c.num_colors() <= k && verify_coloring(g, &c).unwrap_or(false))
    }

    fn verdict(&self, spec: &ConfigSpec) -> ReducibilityVerdict {
        self.cache
            .get_or_compute("check_reducible", spec, || check_reducible(spec))
            .expect("listed configurations are valid")
    }

    fn tasks(&self) -> Vec<(String, Task<'_>)> {
        let mut out: Vec<(String, Task<'_>)> = Vec::new();
        for &scope in &self.opts.scopes {
            match scope {
                Scope::Catalog => {
                    for entry in catalog::entries() {
                        let name = format!("{}{:?}", entry.name, entry.params);
                        out.push((id(scope, &name), Box::new(move || self.catalog(&entry))));
                    }
                }
                Scope::Critical => {
                    for k in [3, 4, 7] {
                        out.push((
                            id(scope, &format!("S{k}")),
                            Box::new(move || self.critical(k)),
                        ));
                    }
                    for k in [5, 6, 8] {
                        out.push((
                            id(scope, &format!("S{k}")),
                            Box::new(move || self.s_colorable(k)),
                        ));
                    }
                }
                Scope::Theta => {
                    for t in THETA_SEQUENCES {
                        out.push((id(scope, &seq(&t)), Box::new(move || vec![self.theta(t)])));
                    }
                }
                Scope::Cn => out.push((id(scope, "8-caterpillar"), Box::new(|| vec![self.cn()]))),
                Scope::Claims => {
                    for d in [3, 4] {
                        for (spec, expected) in claim_list(d) {
                            let name = format!("d{d}.{}", spec.name());
                            out.push((
                                id(scope, &name),
                                Box::new(move || vec![self.claim(&spec, expected)]),
                            ));
                        }
                    }
                }
                Scope::Discharging => {
                    out.push((
                        id(scope, "face-audit"),
                        Box::new(|| vec![self.face_audit()]),
                    ));
                    out.push((
                        id(scope, "case-arithmetic"),
                        Box::new(|| self.case_arithmetic()),
                    ));
                    out.push((id(scope, "max-no-run"), Box::new(|| vec![no_run_entry()])));
                    out.push((id(scope, "list-rules"), Box::new(list_rule_entries)));
                    out.push((id(scope, "conservation"), Box::new(conservation_entries)));
                    out.push((id(scope, "harness"), Box::new(|| vec![self.harness()])));
                }
            }
        }
        out
    }

    fn catalog(&self, entry: &catalog::CatalogEntry) -> Vec<Entry> {
        let g = catalog_get(&entry.name, &entry.params).expect("catalog entries resolve");
        let name = format!("{}{:?}", entry.name, entry.params);
        entry
            .expected
            .iter()
            .map(|x| {
                let (computed, ok) = match x.property.as_str() {
                    "n" => (g.n().to_string(), g.n().to_string() == x.value),
                    "m" => (g.m().to_string(), g.m().to_string() == x.value),
                    "girth" => {
                        let c = fmt_girth(&g);
                        let ok = c == x.value;
                        (c, ok)
                    }
                    "mad" => {
                        let c = mad_exact(&g);
                        (
                            c.to_string(),
                            x.value.parse::<Rational>().is_ok_and(|v| v == c),
                        )
                    }
                    "chi" => {
                        let c = self.chi(&g);
                        (c.to_string(), c.to_string() == x.value)
                    }
                    "chi>" => {
                        let k: usize = x.value.parse().expect("numeric bound");
                        let ok = !self.colorable(&g, k);
                        (format!("{k}-colorable: {}", !ok), ok)
                    }
                    "chi<=" => {
                        let k: usize = x.value.parse().expect("numeric bound");
                        let ok = self.colorable(&g, k);
                        (format!("{k}-colorable: {ok}"), ok)
                    }
                    p => (format!("unknown property {p}"), false),
                };
                Entry::check(
                    id(Scope::Catalog, &format!("{name}.{}", x.property)),
                    "catalog",
                    format!("{}: {}", name, entry.description),
                    x.basis,
                    format!("{} {}", x.property, x.value),
                    computed,
                    ok,
                )
            })
            .collect()
    }

    fn critical(&self, k: usize) -> Vec<Entry> {
        let g = catalog::s_graph(k).expect("S graphs are simple");
        let lower = !self.colorable(&g, 5);
        let bad: Vec<String> = g
            .edges()
            .iter()
            .filter(|&&e| !self.colorable(&g.without_edges(&[e]), 5))
            .map(ToString::to_string)
            .collect();
        vec![
            Entry::check(
                id(Scope::Critical, &format!("S{k}.lower-bound")),
                "critical",
                format!("S{k} has no strong 5-edge-coloring"),
                Basis::Claimed,
                "chi >= 6",
                format!("5-colorable: {}", !lower),
                lower,
            ),
            Entry::check(
                id(Scope::Critical, &format!("S{k}.edge-deleted")),
                "critical",
                format!("every edge-deleted subgraph of S{k} is strongly 5-edge-colorable"),
                Basis::Claimed,
                format!("{} of {} subgraphs 5-colorable", g.m(), g.m()),
                if bad.is_empty() {
                    format!("{} of {} subgraphs 5-colorable", g.m(), g.m())
                } else {
                    format!("not 5-colorable after deleting {}", bad.join(", "))
                },
                bad.is_empty(),
            ),
        ]
    }

    fn s_colorable(&self, k: usize) -> Vec<Entry> {
        let g = catalog::s_graph(k).expect("S graphs are simple");
        let ok = self.colorable(&g, 5);
        vec![Entry::check(
            id(Scope::Critical, &format!("S{k}.colorable")),
            "critical",
            format!("S{k} has a strong 5-edge-coloring"),
            Basis::Claimed,
            "5-colorable",
            if ok { "5-colorable" } else { "not 5-colorable" },
            ok,
        )]
    }

    fn theta(&self, t: [usize; 3]) -> Entry {
        let g = catalog::ex_theta(t[0], t[1], t[2]).expect("valid theta parameters");
        let ok = self.colorable(&g, 5);
        let corrected = t == [3, 3, 7];
        Entry::check(
            id(Scope::Theta, &seq(&t)),
            "theta",
            format!(
                "expanded theta graph {} (internal vertices per path){}",
                seq(&t),
                if corrected {
                    ", consistent replacement for (3,3,4)"
                } else {
                    ""
                }
            ),
            if corrected {
                Basis::Computed
            } else {
                Basis::Claimed
            },
            "5-colorable",
            if ok { "5-colorable" } else { "not 5-colorable" },
            ok,
        )
    }

    fn cn(&self) -> Entry {
        let spec = ConfigSpec::caterpillar(8, 3, 5);
        let cert: CnCertificate = self
            .cache
            .get_or_compute("cn_certificate", &spec, || cn_certificate(&spec))
            .expect("the 8-caterpillar certificate is defined");
        Entry::check(
            id(Scope::Cn, "8-caterpillar"),
            "cn",
            "coefficient of the uniform degree-4 monomial in the 8-caterpillar conflict polynomial",
            Basis::Claimed,
            "-2",
            cert.coefficient.clone(),
            cert.coefficient == "-2" && cert.ok,
        )
    }

    fn claim(&self, spec: &ConfigSpec, expected: Verdict) -> Entry {
        let v = self.verdict(spec);
        let mut computed = v.status.to_string();
        let mut ok = v.status == expected;
        if v.status == Verdict::NotReducible {
            let checked = witness_blocks(spec, &v);
            computed.push_str(if checked {
                "; witness verified"
            } else {
                "; witness invalid"
            });
            ok &= checked;
        }
        Entry::check(
            id(Scope::Claims, &format!("d{}.{}", spec.d, spec.name())),
            "claims",
            format!(
                "{} with {} colors at maximum degree {}; host girth keeps anchors free of outside shortcuts",
                spec.name(),
                spec.k,
                spec.d
            ),
            Basis::Claimed,
            expected.to_string(),
            computed,
            ok,
        )
    }

    fn face_audit(&self) -> Entry {
        let a = audit_face_inequality(self.opts.face_lmax).expect("face bound is at least 41");
        let ok = a.passed() && a.equality_at.first() == Some(&41);
        Entry::check(
            id(Scope::Discharging, "face-audit"),
            "discharging",
            format!("face inequalities for lengths 41..={}", self.opts.face_lmax),
            Basis::Claimed,
            "no failure, equality at 41",
            format!(
                "first failure {:?}, equality at {:?}",
                a.first_failure.or(a.first_failure_p_face),
                a.equality_at
            ),
            ok,
        )
    }

    fn case_arithmetic(&self) -> Vec<Entry> {
        audit_case_arithmetic()
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                Entry::check(
                    id(Scope::Discharging, &format!("case-arithmetic.{i:02}")),
                    "discharging",
                    c.label.clone(),
                    Basis::Claimed,
                    format!("{} {} {}", c.lhs, c.relation, c.rhs),
                    if c.holds { "holds" } else { "fails" },
                    c.holds,
                )
            })
            .collect()
    }

    fn harness(&self) -> Entry {
        let (trials, seed) = (self.opts.trials, self.opts.seed);
        let r: FalsificationReport = self
            .cache
            .get_or_compute("falsification_harness", &(trials, seed), || {
                Ok::<_, std::convert::Infallible>(falsification_harness(trials, seed))
            })
            .unwrap_or_else(|e| match e {});
        Entry::check(
            id(Scope::Discharging, "harness"),
            "discharging",
            format!("{trials} random sparse subcubic graphs, root seed {seed}"),
            Basis::Construction,
            "0 counterexamples, charge conserved",
            format!(
                "{} counterexamples, {} conservation failures, {} with a configuration",
                r.counterexamples.len(),
                r.conservation_failures,
                r.with_config
            ),
            r.passed(),
        )
    }
}

fn seq(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// The witness is a proper precoloring of the boundary that does not extend.
pub fn witness_blocks(spec: &ConfigSpec, v: &ReducibilityVerdict) -> bool {
    let Some(w) = &v.witness else {
        return false;
    };
    let Ok(cfg) = build_config(spec) else {
        return false;
    };
    w.len() == cfg.boundary.len()
        && cfg.boundary.iter().all(|&e| w.get(e).is_some())
        && matches!(decide_strong(&cfg.graph, spec.k, w), Ok(None))
}

fn no_run_entry() -> Entry {
    let v = max_no_run(41, 8);
    Entry::check(
        id(Scope::Discharging, "max-no-run"),
        "discharging",
        "largest subset of a 41-cycle without 8 consecutive positions",
        Basis::Claimed,
        "35",
        v.to_string(),
        v == 35,
    )
}

fn list_rule_entries() -> Vec<Entry> {
    let cases = [
        ("prism", drawings::prism()),
        ("cube", drawings::cube()),
        ("k4", drawings::k4()),
        ("cycle6", drawings::cycle(6)),
    ];
    cases
        .into_iter()
        .map(|(name, e)| {
            let (computed, ok) = match run_rules_list(&e, 0) {
                Ok(s) => (
                    format!("total {}, conserved {}", s.total, s.is_conserved()),
                    s.total == Rational::from_integer(-1) && s.is_conserved(),
                ),
                Err(err) => (err.to_string(), false),
            };
            Entry::check(
                id(Scope::Discharging, &format!("list-rules.{name}")),
                "discharging",
                format!("list-coloring face rules on the {name} drawing with p = 0"),
                Basis::Claimed,
                "total -1, conserved true",
                computed,
                ok,
            )
        })
        .collect()
}

fn conservation_entries() -> Vec<Entry> {
    let hosts: Vec<(&str, Graph)> = vec![
        ("prism", scix_core::graphcore::families::prism()),
        ("theta(4,5,4)", catalog_get("theta", &[4, 5, 4]).unwrap()),
        ("theta(2,3,7)", catalog_get("theta", &[2, 3, 7]).unwrap()),
        ("cube", scix_core::graphcore::families::cube()),
    ];
    let mut out = Vec::new();
    for (name, g) in &hosts {
        for (rules, run) in [
            ("sparse3", run_rules_sparse3 as fn(&Graph) -> _),
            ("sparse4", run_rules_sparse4),
        ] {
            let expected_total = Rational::from_integer(2 * g.m() as i64);
            let (computed, ok) = match run(g) {
                Ok(s) => (
                    format!("total {}, conserved {}", s.total, s.is_conserved()),
                    s.is_conserved() && s.total == expected_total,
                ),
                Err(e) => (e.to_string(), false),
            };
            out.push(Entry::check(
                id(Scope::Discharging, &format!("conservation.{rules}.{name}")),
                "discharging",
                format!("{rules} rules on {name} keep the total charge"),
                Basis::Construction,
                format!("total {expected_total}, conserved true"),
                computed,
                ok,
            ));
        }
    }
    out
}

/// Runs the selected scopes and assembles the report.
pub fn verify_paper(opts: &VerifyOptions, cache: &Cache) -> Report {
    let ctx = Ctx { cache, opts };
    let tasks = ctx.tasks();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let results: Vec<(String, f64, Vec<Entry>)> = pool.install(|| {
        tasks
            .par_iter()
            .map(|(name, task)| {
                let start = Instant::now();
                let entries = task();
                log::info!("{name}: {:.2}s", start.elapsed().as_secs_f64());
                (name.clone(), start.elapsed().as_secs_f64(), entries)
            })
            .collect()
    });
    let mut timings = BTreeMap::new();
    let mut entries = Vec::new();
    for (name, secs, es) in results {
        timings.insert(name, secs);
        entries.extend(es);
    }
    Report::new(opts.seed, entries, timings)
}
