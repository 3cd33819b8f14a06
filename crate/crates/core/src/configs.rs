//! Configuration families and exhaustive reducibility checks.
//!
//! A configuration is a union of threads of 2-vertices hanging off one or two
//! centers and ending at anchors. [`build_config`] realizes it fully expanded
//! for maximum degree `d`: every thread vertex gets `d − 2` pendant leaves,
//! every center is topped up to degree `d` with pendants, and every anchor
//! gets `d − 1` stub edges besides its thread edge. The boundary `B` is the
//! set of edges incident to an anchor; the interior `D′` is everything else.
//!
//! A configuration is `k`-reducible when every strong `k`-coloring of `B`
//! that is conflict-free in the configuration extends to `D′`. Host edges
//! attach only at the far ends of stubs, which sit at distance at least three
//! from every interior edge, so this is exactly the extension question the
//! host poses, provided the host has no extra edge between a stub end and the
//! configuration (a girth condition).
//!
//! Whether a precoloring extends depends only on which colors each interior
//! edge sees on its conflicting boundary edges. Precolorings are grouped by
//! that signature and each group is solved once, in parallel.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphcore::{conflict_graph, EdgeId, Graph};
use crate::solver::{
    Backtracking, ColoringProblem, DecisionProcedure, EdgeColoring, PartialColoring, MAX_COLORS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("{0} colors requested; at most {MAX_COLORS} are supported")]
    TooManyColors(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Caterpillar,
    Y,
    H,
    Phi,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Caterpillar => "cat",
            Family::Y => "Y",
            Family::H => "H",
            Family::Phi => "Phi",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Family, ConfigError> {
        match s.to_ascii_lowercase().as_str() {
            "cat" | "caterpillar" => Ok(Family::Caterpillar),
            "y" => Ok(Family::Y),
            "h" => Ok(Family::H),
            "phi" => Ok(Family::Phi),
            _ => Err(ConfigError::InvalidParams(format!("unknown family `{s}`"))),
        }
    }
}

/// A configuration to build: family, thread lengths, maximum degree and
/// number of colors.
///
/// Parameters: `[t]` for a caterpillar, `[t1, .., tj]` for `Y`,
/// `[t1, t2, r, s1, s2]` for `H` and `[t, a1, a2, s]` for `Phi`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ConfigSpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub d: usize,
    pub k: usize,
}

impl ConfigSpec {
    pub fn new(family: Family, params: &[usize], d: usize, k: usize) -> ConfigSpec {
        ConfigSpec {
            family,
            params: params.to_vec(),
            d,
            k,
        }
    }

    pub fn caterpillar(t: usize, d: usize, k: usize) -> ConfigSpec {
        ConfigSpec::new(Family::Caterpillar, &[t], d, k)
    }

    /// Name in the usual notation, e.g. `H(7,7;0;3,7)`.
    pub fn name(&self) -> String {
        let p = &self.params;
        let join = |s: &[usize]| s.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self.family {
            Family::Caterpillar => format!("{}-caterpillar", join(p)),
            Family::H if p.len() == 5 => format!("H({},{};{};{},{})", p[0], p[1], p[2], p[3], p[4]),
            f => format!("{f}({})", join(p)),
        }
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let bad = |m: String| Err(ConfigError::InvalidParams(m));
        if self.d < 3 {
            return bad(format!("maximum degree {} < 3", self.d));
        }
        if self.k > MAX_COLORS {
            return Err(ConfigError::TooManyColors(self.k));
        }
        let n = self.params.len();
        match self.family {
            Family::Caterpillar if n != 1 || self.params[0] == 0 => {
                bad("caterpillar takes one positive length".into())
            }
            Family::Y if n == 0 || n > self.d => {
                bad(format!("Y needs 1..={} branches, got {n}", self.d))
            }
            Family::H | Family::Phi if self.d != 3 => {
                bad(format!("{} is defined for maximum degree 3", self.family))
            }
            Family::H if n != 5 => bad("H takes (t1,t2;r;s1,s2)".into()),
            Family::Phi if n != 4 => bad("Phi takes (t,a1,a2,s)".into()),
            Family::Phi if self.params[1] == 0 && self.params[2] == 0 => {
                bad("Phi needs a1 or a2 positive".into())
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ConfigSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} d={} k={}", self.name(), self.d, self.k)
    }
}

/// A configuration graph with its boundary/interior split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedConfig {
    pub graph: Graph,
    pub d: usize,
    pub anchors: Vec<usize>,
    /// Vertices where the host may attach further edges.
    pub open: Vec<usize>,
    /// `B` in boundary order: anchors by id, then their edges by id.
    pub boundary: Vec<EdgeId>,
    /// `D′`, sorted.
    pub interior: Vec<EdgeId>,
}

impl EmbeddedConfig {
    /// Derives `B` and `D′` from the anchors and checks the closure and
    /// no-shortcut conditions.
    pub fn new(
        graph: Graph,
        d: usize,
        anchors: &[usize],
        open: &[usize],
    ) -> Result<EmbeddedConfig, ConfigError> {
        let anchors: Vec<usize> = anchors
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let open: Vec<usize> = open
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if let Some(&v) = anchors.iter().chain(&open).find(|&&v| v >= graph.n()) {
            return Err(ConfigError::Invalid(format!("vertex {v} out of range")));
        }
        if graph.max_degree() > d {
            return Err(ConfigError::Invalid(format!("maximum degree exceeds {d}")));
        }
        let mut boundary = Vec::new();
        for &a in &anchors {
            for &w in graph.neighbors(a) {
                let e = EdgeId::new(a, w);
                if !boundary.contains(&e) {
                    boundary.push(e);
                }
            }
        }
        let interior: Vec<EdgeId> = graph
            .edges()
            .iter()
            .copied()
            .filter(|e| !boundary.contains(e))
            .collect();
        let cfg = EmbeddedConfig {
            graph,
            d,
            anchors,
            open,
            boundary,
            interior,
        };
        cfg.check_closure()?;
        cfg.check_no_shortcuts()?;
        Ok(cfg)
    }

    /// External edges at open vertices must stay at distance three or more
    /// from `D′`, so no open vertex may touch or neighbor an interior edge.
    fn check_closure(&self) -> Result<(), ConfigError> {
        let mut near = vec![false; self.graph.n()];
        for e in &self.interior {
            for x in [e.a, e.b] {
                near[x] = true;
                self.graph.neighbors(x).iter().for_each(|&w| near[w] = true);
            }
        }
        match self.open.iter().find(|&&v| near[v]) {
            Some(v) => Err(ConfigError::Invalid(format!(
                "open vertex {v} lies within distance one of the interior"
            ))),
            None => Ok(()),
        }
    }

    /// Boundary edges that conflict in the graph must still conflict once
    /// `D′` is removed.
    fn check_no_shortcuts(&self) -> Result<(), ConfigError> {
        let g = &self.graph;
        let reduced = g.without_edges(&self.interior);
        let close = |h: &Graph, e: EdgeId, f: EdgeId| {
            [e.a, e.b]
                .iter()
                .any(|&x| [f.a, f.b].iter().any(|&y| x == y || h.has_edge(x, y)))
        };
        for (i, &e) in self.boundary.iter().enumerate() {
            for &f in &self.boundary[i + 1..] {
                if close(g, e, f) && !close(&reduced, e, f) {
                    return Err(ConfigError::Invalid(format!(
                        "boundary edges {e} and {f} conflict only through the interior"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Same configuration with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<EmbeddedConfig, ConfigError> {
        let map = |vs: &[usize]| vs.iter().map(|&v| perm[v]).collect::<Vec<_>>();
        EmbeddedConfig::new(
            self.graph.relabel(perm),
            self.d,
            &map(&self.anchors),
            &map(&self.open),
        )
    }

    /// Conflicting pairs among boundary edges: `before[i]` lists `j < i`.
    fn boundary_conflicts(&self) -> Vec<Vec<usize>> {
        let cg = conflict_graph(&self.graph);
        let idx: Vec<usize> = self
            .boundary
            .iter()
            .map(|&e| self.graph.edge_index(e).unwrap())
            .collect();
        (0..idx.len())
            .map(|i| (0..i).filter(|&j| cg.has_edge(idx[i], idx[j])).collect())
            .collect()
    }
}

/// Canonical boundary precolorings in enumeration order (see
/// [`boundary_precolorings`]).
pub struct BoundaryPrecolorings {
    k: u32,
    before: Vec<Vec<usize>>,
    colors: Vec<u32>,
    prefix_max: Vec<u32>,
    fresh: bool,
    done: bool,
}

impl BoundaryPrecolorings {
    fn new(before: Vec<Vec<usize>>, k: usize) -> BoundaryPrecolorings {
        let n = before.len();
        BoundaryPrecolorings {
            k: k as u32,
            before,
            colors: vec![0; n],
            prefix_max: vec![0; n + 1],
            fresh: true,
            done: false,
        }
    }

    /// Advances to the next canonical coloring; false when exhausted.
    fn advance(&mut self) -> bool {
        let n = self.colors.len();
        if self.done {
            return false;
        }
        if n == 0 {
            self.done = !self.fresh;
            self.fresh = false;
            return !self.done;
        }
        let mut i = if self.fresh { 0 } else { n - 1 };
        self.fresh = false;
        loop {
            let limit = self.k.min(self.prefix_max[i] + 1);
            let mut c = self.colors[i] + 1;
            while c <= limit && self.before[i].iter().any(|&j| self.colors[j] == c) {
                c += 1;
            }
            if c <= limit {
                self.colors[i] = c;
                self.prefix_max[i + 1] = self.prefix_max[i].max(c);
                if i + 1 == n {
                    return true;
                }
                i += 1;
                self.colors[i] = 0;
            } else {
                self.colors[i] = 0;
                if i == 0 {
                    self.done = true;
                    return false;
                }
                i -= 1;
            }
        }
    }

    /// Colors of the current precoloring, in boundary order.
    fn current(&self) -> &[u32] {
        &self.colors
    }
}

/// Iterator adapter yielding [`PartialColoring`]s.
pub struct PrecoloringIter<'a> {
    cfg: &'a EmbeddedConfig,
    inner: BoundaryPrecolorings,
}

impl Iterator for PrecoloringIter<'_> {
    type Item = PartialColoring;

    fn next(&mut self) -> Option<PartialColoring> {
        self.inner.advance().then(|| {
            EdgeColoring(
                self.cfg
                    .boundary
                    .iter()
                    .copied()
                    .zip(self.inner.current().iter().copied())
                    .collect(),
            )
        })
    }
}

/// Every coloring of `B` with colors `1..=k` that is conflict-free within
/// the configuration graph, one per class under permuting colors: colors
/// appear in order of first use along the boundary order.
pub fn boundary_precolorings(cfg: &EmbeddedConfig, k: usize) -> PrecoloringIter<'_> {
    PrecoloringIter {
        cfg,
        inner: BoundaryPrecolorings::new(cfg.boundary_conflicts(), k),
    }
}

/// Number of colorings of `B` before identifying color permutations.
pub fn raw_precoloring_count(cfg: &EmbeddedConfig, k: usize) -> u128 {
    fn count(i: usize, k: u32, before: &[Vec<usize>], colors: &mut Vec<u32>) -> u128 {
        if i == before.len() {
            return 1;
        }
        let mut total = 0;
        for c in 1..=k {
            if before[i].iter().all(|&j| colors[j] != c) {
                colors[i] = c;
                total += count(i + 1, k, before, colors);
            }
        }
        colors[i] = 0;
        total
    }
    let before = cfg.boundary_conflicts();
    count(0, k as u32, &before, &mut vec![0; before.len()])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    Reducible,
    NotReducible,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Reducible => "reducible",
            Status::NotReducible => "not reducible",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibilityStats {
    /// Canonical precolorings enumerated.
    pub precolorings: u64,
    /// Distinct interior constraint signatures, each solved once.
    pub extensions_solved: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibilityVerdict {
    pub status: Status,
    /// First non-extending precoloring in enumeration order.
    pub witness: Option<PartialColoring>,
    pub stats: ReducibilityStats,
}

/// Builds the fully expanded configuration.
///
/// Vertex labels: centers first (`v` then `u`), then the threads in
/// parameter order, each listed from its center outwards and followed by its
/// far endpoint; then the pendants of thread vertices in vertex order, the
/// stubs of anchors in anchor order and finally the center pendants.
/// The caterpillar is the path `0, 1, .., t + 1` with anchors `0` and
/// `t + 1`. A thread between the two centers (`r` for `H`, `a1`/`a2` for
/// `Phi`) runs from `v` to `u`.
pub fn build_config(spec: &ConfigSpec) -> Result<EmbeddedConfig, ConfigError> {
    spec.validate()?;
    let d = spec.d;
    let p = &spec.params;
    let mut b = Builder::default();
    match spec.family {
        Family::Caterpillar => {
            let a = b.vertex();
            b.anchors.push(a);
            let end = b.leg(a, p[0]);
            b.anchors.push(end);
        }
        Family::Y => {
            let v = b.center();
            for &t in p {
                let a = b.leg(v, t);
                b.anchors.push(a);
            }
        }
        Family::H => {
            let (v, u) = (b.center(), b.center());
            for &t in &p[0..2] {
                let a = b.leg(v, t);
                b.anchors.push(a);
            }
            b.link(v, u, p[2]);
            for &s in &p[3..5] {
                let a = b.leg(u, s);
                b.anchors.push(a);
            }
        }
        Family::Phi => {
            let (v, u) = (b.center(), b.center());
            let a = b.leg(v, p[0]);
            b.anchors.push(a);
            b.link(v, u, p[1]);
            b.link(v, u, p[2]);
            let a = b.leg(u, p[3]);
            b.anchors.push(a);
        }
    }
    b.finish(d)
}

#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    centers: Vec<usize>,
    thread: Vec<usize>,
    anchors: Vec<usize>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn center(&mut self) -> usize {
        let v = self.vertex();
        self.centers.push(v);
        v
    }

    /// Path of `len` new thread vertices from `from`; returns the last vertex
    /// of the run (or `from` when `len = 0`).
    fn run(&mut self, from: usize, len: usize) -> usize {
        let mut prev = from;
        for _ in 0..len {
            let x = self.vertex();
            self.thread.push(x);
            self.edges.push((prev, x));
            prev = x;
        }
        prev
    }

    /// Thread of `len` vertices from `from` to a new endpoint.
    fn leg(&mut self, from: usize, len: usize) -> usize {
        let last = self.run(from, len);
        let end = self.vertex();
        self.edges.push((last, end));
        end
    }

    /// Thread of `len` vertices joining two existing vertices.
    fn link(&mut self, from: usize, to: usize, len: usize) {
        let last = self.run(from, len);
        self.edges.push((last, to));
    }

    fn pendants(&mut self, v: usize, count: usize, out: &mut Vec<usize>) {
        for _ in 0..count {
            let w = self.vertex();
            self.edges.push((v, w));
            out.push(w);
        }
    }

    fn finish(mut self, d: usize) -> Result<EmbeddedConfig, ConfigError> {
        let mut leaves = Vec::new();
        for x in self.thread.clone() {
            self.pendants(x, d - 2, &mut leaves);
        }
        let mut stubs = Vec::new();
        for a in self.anchors.clone() {
            self.pendants(a, d - 1, &mut stubs);
        }
        for c in self.centers.clone() {
            let deg = self
                .edges
                .iter()
                .filter(|&&(x, y)| x == c || y == c)
                .count();
            if deg > d {
                return Err(ConfigError::InvalidParams(format!(
                    "center has {deg} threads, more than {d}"
                )));
            }
            self.pendants(c, d - deg, &mut leaves);
        }
        let graph = Graph::from_edges(self.n, self.edges).map_err(|e| {
            ConfigError::InvalidParams(format!("parameters produce a non-simple graph: {e}"))
        })?;
        EmbeddedConfig::new(graph, d, &self.anchors, &stubs)
    }
}

/// Interior constraint data shared by all precolorings of one configuration.
struct ExtensionModel {
    /// Conflicts among interior edges, as indices into `cfg.interior`.
    neighbors: Vec<Vec<usize>>,
    /// For each interior edge, the boundary positions it conflicts with.
    seen: Vec<Vec<usize>>,
}

impl ExtensionModel {
    fn new(cfg: &EmbeddedConfig) -> ExtensionModel {
        let cg = conflict_graph(&cfg.graph);
        let idx = |e: &EdgeId| cfg.graph.edge_index(*e).unwrap();
        let int: Vec<usize> = cfg.interior.iter().map(idx).collect();
        let bnd: Vec<usize> = cfg.boundary.iter().map(idx).collect();
        let neighbors = int
            .iter()
            .map(|&x| (0..int.len()).filter(|&j| cg.has_edge(x, int[j])).collect())
            .collect();
        let seen = int
            .iter()
            .map(|&x| (0..bnd.len()).filter(|&j| cg.has_edge(x, bnd[j])).collect())
            .collect();
        ExtensionModel { neighbors, seen }
    }

    /// Blocked colors per interior edge as bitmasks.
    fn signature(&self, colors: &[u32]) -> Vec<u64> {
        self.seen
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &j| m | 1 << (colors[j] - 1)))
            .collect()
    }

    fn extends(&self, k: usize, signature: &[u64]) -> bool {
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let problem = ColoringProblem {
            neighbors: self.neighbors.clone(),
            domains: signature.iter().map(|&m| full & !m).collect(),
            fixed: vec![0; signature.len()],
            interchangeable: false,
        };
        Backtracking::default().solve(&problem).is_some()
    }
}

/// Decides whether every canonical boundary precoloring with `k` colors
/// extends to the interior.
pub fn check_embedded(cfg: &EmbeddedConfig, k: usize) -> Result<ReducibilityVerdict, ConfigError> {
    if k > MAX_COLORS {
        return Err(ConfigError::TooManyColors(k));
    }
    let model = ExtensionModel::new(cfg);
    let mut first_seen: HashMap<Vec<u64>, u64> = HashMap::new();
    let mut order: Vec<(Vec<u64>, Vec<u32>)> = Vec::new();
    let mut pre = BoundaryPrecolorings::new(cfg.boundary_conflicts(), k);
    let mut count = 0u64;
    while pre.advance() {
        let sig = model.signature(pre.current());
        first_seen.entry(sig.clone()).or_insert_with(|| {
            order.push((sig, pre.current().to_vec()));
            count
        });
        count += 1;
    }
    let failing = order
        .par_iter()
        .position_first(|(sig, _)| !model.extends(k, sig));
    let stats = ReducibilityStats {
        precolorings: count,
        extensions_solved: order.len() as u64,
    };
    log::debug!("{} precolorings, {} signatures", count, order.len());
    Ok(match failing {
        None => ReducibilityVerdict {
            status: Status::Reducible,
            witness: None,
            stats,
        },
        Some(i) => ReducibilityVerdict {
            status: Status::NotReducible,
            witness: Some(EdgeColoring(
                cfg.boundary
                    .iter()
                    .copied()
                    .zip(order[i].1.iter().copied())
                    .collect(),
            )),
            stats,
        },
    })
}

/// [`build_config`] followed by [`check_embedded`] with `spec.k` colors.
pub fn check_reducible(spec: &ConfigSpec) -> Result<ReducibilityVerdict, ConfigError> {
    check_embedded(&build_config(spec)?, spec.k)
}

/// Configurations known to be reducible for maximum degree `d`, with the
/// expected verdicts. For `d = 3` the list ends with the 7-caterpillar,
/// which is expected to fail.
pub fn claim_list(d: usize) -> Vec<(ConfigSpec, Status)> {
    use Family::*;
    let mut out = Vec::new();
    let mut add =
        |f: Family, p: &[usize], k: usize, s: Status| out.push((ConfigSpec::new(f, p, d, k), s));
    match d {
        3 => {
            add(Caterpillar, &[8], 5, Status::Reducible);
            for p in [[1, 6, 7], [2, 5, 6], [3, 4, 5]] {
                add(Y, &p, 5, Status::Reducible);
            }
            for p in H_LIST {
                add(H, &p, 5, Status::Reducible);
            }
            for p in PHI_LIST {
                add(Phi, &p, 5, Status::Reducible);
            }
            add(Caterpillar, &[7], 5, Status::NotReducible);
        }
        4 => {
            add(Caterpillar, &[6], 7, Status::Reducible);
            for p in [[2, 4, 4], [1, 5, 5], [2, 4, 5], [3, 4, 4], [2, 5, 5]] {
                add(Y, &p, 7, Status::Reducible);
            }
        }
        _ => {}
    }
    out
}

/// `H(t1,t2;r;s1,s2)` configurations reducible with five colors.
pub const H_LIST: [[usize; 5]; 19] = [
    [7, 7, 0, 3, 7],
    [7, 7, 0, 4, 6],
    [7, 7, 0, 5, 5],
    [6, 7, 0, 3, 7],
    [6, 7, 0, 4, 6],
    [6, 7, 0, 5, 5],
    [6, 6, 1, 2, 7],
    [6, 6, 1, 3, 6],
    [6, 6, 1, 4, 5],
    [5, 7, 1, 2, 7],
    [5, 7, 1, 3, 6],
    [5, 7, 1, 4, 5],
    [4, 7, 2, 1, 7],
    [4, 7, 2, 2, 6],
    [4, 7, 2, 3, 5],
    [4, 7, 2, 4, 4],
    [3, 7, 3, 1, 6],
    [3, 7, 3, 2, 5],
    [3, 7, 3, 3, 4],
];

/// `Phi(t,a1,a2,s)` configurations reducible with five colors.
pub const PHI_LIST: [[usize; 4]; 11] = [
    [7, 0, 7, 1],
    [7, 0, 6, 1],
    [6, 0, 7, 1],
    [6, 1, 6, 1],
    [7, 1, 5, 1],
    [5, 1, 7, 1],
    [7, 2, 4, 1],
    [4, 2, 7, 1],
    [7, 3, 3, 1],
    [3, 3, 7, 1],
    [3, 7, 0, 7],
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub spec: ConfigSpec,
    pub expected: Status,
    pub verdict: ReducibilityVerdict,
    pub seconds: f64,
}

impl ClaimOutcome {
    pub fn passed(&self) -> bool {
        self.verdict.status == self.expected
    }
}

/// Checks every entry of [`claim_list`]`(d)`.
pub fn verify_claims(d: usize) -> Result<Vec<ClaimOutcome>, ConfigError> {
    if !(3..=4).contains(&d) {
        return Err(ConfigError::InvalidParams(format!(
            "claims are listed for d = 3 and d = 4, not {d}"
        )));
    }
    claim_list(d)
        .into_iter()
        .map(|(spec, expected)| {
            let start = std::time::Instant::now();
            let verdict = check_reducible(&spec)?;
            Ok(ClaimOutcome {
                spec,
                expected,
                verdict,
                seconds: start.elapsed().as_secs_f64(),
            })
        })
        .collect()
}

/// `Θ(t1,t2,t3)`: vertices `0` and `1` joined by three internally disjoint
/// paths with `t1`, `t2` and `t3` internal vertices, numbered path by path.
pub fn theta_graph(t1: usize, t2: usize, t3: usize) -> Result<Graph, ConfigError> {
    let ts = [t1, t2, t3];
    if ts.iter().filter(|&&t| t == 0).count() > 1 {
        return Err(ConfigError::InvalidParams(
            "two empty paths would form a multi-edge".into(),
        ));
    }
    let mut b = Builder {
        n: 2,
        ..Builder::default()
    };
    for t in ts {
        b.link(0, 1, t);
    }
    Graph::from_edges(b.n, b.edges).map_err(|e| ConfigError::InvalidParams(e.to_string()))
}
