//! Responsibility sets, discharging rule engines and exact audits of the
//! charge arithmetic behind the sparse-graph and list-coloring arguments.
//!
//! All charges are exact rationals. Every engine returns a [`ChargeState`]
//! whose recorded total can be compared against the recomputed sum.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use log::warn;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::configs::{claim_list, Family, Status};
use crate::graphcore::{emit_graph6, is_two_connected, mad_exact, Thread, ThreadDecomposition};
use crate::{Embedding, Graph, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("vertex {vertex} has degree {degree}; rule engines need a contracted graph with minimum degree 2")]
    Degenerate { vertex: usize, degree: usize },
    #[error("vertex {vertex} has degree {degree} > {limit}")]
    DegreeTooLarge {
        vertex: usize,
        degree: usize,
        limit: usize,
    },
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("vertex {0} is not a 3+-vertex")]
    NotBranchVertex(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("rotation system is not a plane embedding")]
    InvalidEmbedding,
    #[error("face lengths are audited from 41 upwards, got {0}")]
    FaceBound(usize),
}

/// An element that carries charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(i) => write!(f, "f{i}"),
        }
    }
}

/// Charges on vertices and faces, with the running total.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChargeState {
    pub charge: BTreeMap<Element, Rational>,
    pub total: Rational,
    /// Number of transfers applied.
    pub moves: usize,
    /// Observations worth surfacing, such as multiplicity-2 transfers.
    pub flags: Vec<String>,
}

impl ChargeState {
    pub fn new() -> ChargeState {
        ChargeState::default()
    }

    /// Sets the initial charge of `x`, adjusting the total.
    pub fn assign(&mut self, x: Element, c: Rational) {
        let old = self.charge.insert(x, c).unwrap_or_default();
        self.total += c - old;
    }

    pub fn get(&self, x: Element) -> Rational {
        self.charge.get(&x).copied().unwrap_or_default()
    }

    pub fn transfer(&mut self, from: Element, to: Element, amount: Rational) {
        *self.charge.entry(from).or_default() -= amount;
        *self.charge.entry(to).or_default() += amount;
        self.moves += 1;
    }

    /// Whether the recorded total equals the sum of all charges.
    pub fn is_conserved(&self) -> bool {
        self.charge.values().copied().sum::<Rational>() == self.total
    }

    pub fn vertex_charges(&self) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.charge.iter().filter_map(|(x, &c)| match x {
            Element::Vertex(v) => Some((*v, c)),
            Element::Face(_) => None,
        })
    }

    pub fn min_vertex_charge(&self) -> Option<(usize, Rational)> {
        self.vertex_charges().min_by_key(|&(v, c)| (c, v))
    }
}

/// `N3(v)` with multiplicities and the responsibility multiset of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RespReport {
    pub vertex: usize,
    /// `u -> μ(v, u)`.
    pub n3: BTreeMap<usize, u32>,
    /// `u -> ct`-distance along the shortest connecting thread.
    pub distance: BTreeMap<usize, usize>,
    /// 2-vertex -> number of threads from `v` reaching it.
    pub resp: BTreeMap<usize, u32>,
    /// Number of 2-vertices on each thread at `v`; a loop appears twice.
    pub threads: Vec<usize>,
}

impl RespReport {
    /// `|Resp(v)|` counted with multiplicity.
    pub fn resp_size(&self) -> usize {
        self.resp.values().map(|&m| m as usize).sum()
    }

    pub fn mu(&self, u: usize) -> u32 {
        self.n3.get(&u).copied().unwrap_or(0)
    }
}

/// Threads of `ct` grouped by endpoint, plus the thread owning each 2-vertex.
struct Threads {
    at: Vec<Vec<Thread>>,
    /// Endpoints of the thread through each 2-vertex.
    ends: Vec<Option<(usize, usize)>>,
}

impl Threads {
    fn new(ct: &Graph) -> Threads {
        let td = ThreadDecomposition::new(ct);
        let mut at = vec![Vec::new(); ct.n()];
        let mut ends = vec![None; ct.n()];
        for v in ct.vertices().filter(|&v| ct.degree(v) >= 3) {
            at[v] = td.threads_at(v);
        }
        for t in &td.threads {
            for &x in &t.internal {
                ends[x] = Some((t.start, t.end));
            }
        }
        Threads { at, ends }
    }

    fn report(&self, v: usize) -> RespReport {
        let mut r = RespReport {
            vertex: v,
            n3: BTreeMap::new(),
            distance: BTreeMap::new(),
            resp: BTreeMap::new(),
            threads: Vec::new(),
        };
        for t in &self.at[v] {
            r.threads.push(t.internal.len());
            for &x in &t.internal {
                *r.resp.entry(x).or_insert(0) += 1;
            }
            if t.end != v {
                *r.n3.entry(t.end).or_insert(0) += 1;
                let d = r.distance.entry(t.end).or_insert(usize::MAX);
                *d = (*d).min(t.length());
            }
        }
        r
    }

    /// `N3(x)` for a 2-vertex `x`, as a set.
    fn n3_of_two_vertex(&self, x: usize) -> BTreeSet<usize> {
        self.ends[x]
            .map(|(a, b)| BTreeSet::from([a, b]))
            .unwrap_or_default()
    }
}

/// Walks the degree-2 threads from each neighbor of `v`.
///
/// A thread returning to `v` contributes its 2-vertices twice, once per
/// direction, and adds nothing to `N3(v)`.
pub fn n3_and_resp(ct: &Graph, v: usize) -> Result<RespReport, DischargeError> {
    if v >= ct.n() {
        return Err(DischargeError::VertexOutOfRange {
            vertex: v,
            n: ct.n(),
        });
    }
    if ct.degree(v) < 3 {
        return Err(DischargeError::NotBranchVertex(v));
    }
    Ok(Threads::new(ct).report(v))
}

fn check_host(ct: &Graph, max_degree: usize) -> Result<(), DischargeError> {
    for v in ct.vertices() {
        let degree = ct.degree(v);
        if degree < 2 {
            return Err(DischargeError::Degenerate { vertex: v, degree });
        }
        if degree > max_degree {
            return Err(DischargeError::DegreeTooLarge {
                vertex: v,
                degree,
                limit: max_degree,
            });
        }
    }
    if !is_two_connected(ct) {
        return Err(DischargeError::NotTwoConnected);
    }
    Ok(())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn initial_degrees(ct: &Graph) -> ChargeState {
    let mut s = ChargeState::new();
    for v in ct.vertices() {
        s.assign(
            Element::Vertex(v),
            Rational::from_integer(ct.degree(v) as i64),
        );
    }
    s
}

/// Rules for subcubic graphs, starting from charge `d(v)`:
///
/// * R1: each 2-vertex `u` receives 1/14 from every `v` in `N3(u)`.
/// * R2: a 3-vertex `v` with `|Resp(v)| <= 10` sends to each `u` in `N3(v)`
///   (a) 1/7 if `d(u,v) = 1` and `|Resp(u)| = 14`, otherwise
///   (b) 1/14 if `d(u,v) <= 4`.
///
/// `d(u,v)` is the length of the shortest thread joining them; (b) applies
/// to every pair where (a) did not fire.
pub fn run_rules_sparse3(ct: &Graph) -> Result<ChargeState, DischargeError> {
    check_host(ct, 3)?;
    let th = Threads::new(ct);
    let mut s = initial_degrees(ct);
    for u in ct.vertices().filter(|&u| ct.degree(u) == 2) {
        for v in th.n3_of_two_vertex(u) {
            s.transfer(Element::Vertex(v), Element::Vertex(u), q(1, 14));
        }
    }
    let reports: BTreeMap<usize, RespReport> = ct
        .vertices()
        .filter(|&v| ct.degree(v) == 3)
        .map(|v| (v, th.report(v)))
        .collect();
    for (&v, r) in &reports {
        if r.resp_size() > 10 {
            continue;
        }
        for (&u, &dist) in &r.distance {
            let amount = if dist == 1 && reports[&u].resp_size() == 14 {
                q(1, 7)
            } else if dist <= 4 {
                q(1, 14)
            } else {
                continue;
            };
            s.transfer(Element::Vertex(v), Element::Vertex(u), amount);
        }
    }
    Ok(s)
}

/// Every 3+-vertex sends `m/13` to each 2-vertex of its responsibility set
/// with multiplicity `m`. Multiplicity-2 transfers are recorded in `flags`.
pub fn run_rules_sparse4(ct: &Graph) -> Result<ChargeState, DischargeError> {
    check_host(ct, 4)?;
    let th = Threads::new(ct);
    let mut s = initial_degrees(ct);
    for v in ct.vertices().filter(|&v| ct.degree(v) >= 3) {
        for (&x, &m) in &th.report(v).resp {
            if m > 1 {
                let note = format!("vertex {v} reaches 2-vertex {x} with multiplicity {m}");
                warn!("{note}");
                s.flags.push(note);
            }
            s.transfer(Element::Vertex(v), Element::Vertex(x), q(m as i64, 13));
        }
    }
    Ok(s)
}

/// Face rules for the list-coloring argument on a plane embedding with a
/// distinguished vertex `p`.
///
/// Initial charge: `2d(v) − 6` on vertices other than `p`, `ℓ(f) − 6` on
/// faces and `2d(p) + 5` on `p`. Each 2-vertex other than `p` pulls 1 from
/// each incident face; if `p` is a 2-vertex it gives 9/2 to each incident
/// face. Faces are numbered as returned by [`Embedding::trace_faces`].
pub fn run_rules_list(e: &Embedding, p: usize) -> Result<ChargeState, DischargeError> {
    let g = e.graph();
    if p >= g.n() {
        return Err(DischargeError::VertexOutOfRange {
            vertex: p,
            n: g.n(),
        });
    }
    check_host(g, usize::MAX)?;
    if !e.is_planar_embedding() {
        return Err(DischargeError::InvalidEmbedding);
    }
    let faces = e.trace_faces();
    let mut s = ChargeState::new();
    for v in g.vertices() {
        let d = g.degree(v) as i64;
        let c = if v == p { 2 * d + 5 } else { 2 * d - 6 };
        s.assign(Element::Vertex(v), Rational::from_integer(c));
    }
    for (i, f) in faces.iter().enumerate() {
        s.assign(Element::Face(i), Rational::from_integer(f.len() as i64 - 6));
    }
    for (i, f) in faces.iter().enumerate() {
        for &v in f {
            if g.degree(v) != 2 {
                continue;
            }
            if v != p {
                s.transfer(
                    Element::Face(i),
                    Element::Vertex(v),
                    Rational::from_integer(1),
                );
            } else {
                s.transfer(Element::Vertex(p), Element::Face(i), q(9, 2));
            }
        }
    }
    Ok(s)
}

/// Largest set of positions on a cycle of length `l` with no `r`
/// cyclically consecutive chosen positions. For `l < r` every position may
/// be chosen.
///
/// Dynamic programming over the length `a` of the chosen run at the start
/// of the cycle and the length of the current run.
pub fn max_no_run(l: usize, r: usize) -> usize {
    if l < r {
        return l;
    }
    let mut best = 0;
    // Position `a` is the first unchosen one; positions 0..a are chosen.
    for a in 0..r.min(l) {
        // dp[j]: best count with a trailing run of length j.
        let mut dp = vec![None::<usize>; r];
        dp[0] = Some(a);
        for _ in a + 1..l {
            let mut next = vec![None::<usize>; r];
            for (j, v) in dp.iter().enumerate() {
                let Some(v) = *v else { continue };
                next[0] = next[0].max(Some(v));
                if j + 1 < r {
                    next[j + 1] = next[j + 1].max(Some(v + 1));
                }
            }
            dp = next;
        }
        for (j, v) in dp.iter().enumerate() {
            if let Some(v) = *v {
                if a + j < r {
                    best = best.max(v);
                }
            }
        }
    }
    best
}

/// Outcome of [`audit_face_inequality`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceAudit {
    pub l_max: usize,
    /// First `ℓ` where `ℓ − ⌊7ℓ/8⌋ − 6 < 0`.
    pub first_failure: Option<usize>,
    /// First `ℓ` where `ℓ − ⌊7ℓ/8⌋ − 3/2 < 0`.
    pub first_failure_p_face: Option<usize>,
    /// Lengths where the first inequality is tight.
    pub equality_at: Vec<usize>,
    /// `ℓ − ⌊7ℓ/8⌋ = ⌈ℓ/8⌉` held throughout.
    pub ceil_identity: bool,
    /// `max_no_run(ℓ, 8) = ⌊7ℓ/8⌋` was checked for `ℓ` up to this value.
    pub run_bound_checked_to: usize,
    pub run_bound_ok: bool,
    /// `40 − ⌊7·40/8⌋ − 6`.
    pub value_at_40: i64,
}

impl FaceAudit {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
            && self.first_failure_p_face.is_none()
            && self.ceil_identity
            && self.run_bound_ok
    }
}

const RUN_BOUND_LIMIT: usize = 1000;

/// Checks the face inequalities for every `ℓ` in `41..=l_max`.
pub fn audit_face_inequality(l_max: usize) -> Result<FaceAudit, DischargeError> {
    if l_max < 41 {
        return Err(DischargeError::FaceBound(l_max));
    }
    let slack = |l: usize| l as i64 - (7 * l / 8) as i64;
    let mut a = FaceAudit {
        l_max,
        first_failure: None,
        first_failure_p_face: None,
        equality_at: Vec::new(),
        ceil_identity: true,
        run_bound_checked_to: l_max.min(RUN_BOUND_LIMIT),
        run_bound_ok: true,
        value_at_40: slack(40) - 6,
    };
    for l in 41..=l_max {
        let s = slack(l);
        if s - 6 < 0 && a.first_failure.is_none() {
            a.first_failure = Some(l);
        }
        if s - 6 == 0 {
            a.equality_at.push(l);
        }
        if Rational::from_integer(s) - q(3, 2) < Rational::from_integer(0)
            && a.first_failure_p_face.is_none()
        {
            a.first_failure_p_face = Some(l);
        }
        a.ceil_identity &= s as usize == l.div_ceil(8);
    }
    a.run_bound_ok = (41..=a.run_bound_checked_to)
        .into_par_iter()
        .all(|l| max_no_run(l, 8) == 7 * l / 8);
    Ok(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Eq,
    Gt,
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Eq => "=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        })
    }
}

/// One exact comparison `lhs rel rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticCheck {
    pub label: String,
    pub lhs: Rational,
    pub relation: Relation,
    pub rhs: Rational,
    pub holds: bool,
}

impl fmt::Display for ArithmeticCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.label,
            self.lhs,
            self.relation,
            self.rhs,
            if self.holds { "ok" } else { "FAILS" }
        )
    }
}

fn check(label: &str, lhs: Rational, relation: Relation, rhs: Rational) -> ArithmeticCheck {
    let holds = match relation {
        Relation::Eq => lhs == rhs,
        Relation::Gt => lhs > rhs,
        Relation::Ge => lhs >= rhs,
    };
    ArithmeticCheck {
        label: label.into(),
        lhs,
        relation,
        rhs,
        holds,
    }
}

/// The charge identities of the subcubic and subquartic case analyses,
/// plus the final charge of each case recomputed from the rules.
pub fn audit_case_arithmetic() -> Vec<ArithmeticCheck> {
    use Relation::*;
    let int = |n: i64| Rational::from_integer(n);
    let target3 = int(2) + q(1, 7);
    let target4 = int(2) + q(2, 13);
    vec![
        check(
            "2-vertex with two 3-neighbors",
            int(2) + q(2, 14),
            Eq,
            target3,
        ),
        check("|Resp| in {11,12}", int(3) - q(12, 14), Eq, target3),
        check(
            "|Resp| = 14, receives 1/7",
            int(3) - q(14, 14) + q(1, 7),
            Eq,
            target3,
        ),
        check(
            "|Resp| = 13, receives 1/14",
            int(3) - q(13, 14) + q(1, 14),
            Eq,
            target3,
        ),
        check(
            "|Resp| <= 10, sends 1/7",
            int(3) - q(10, 14) - q(1, 7),
            Eq,
            target3,
        ),
        check(
            "|Resp| <= 9, sends 3/14",
            int(3) - q(9, 14) - q(3, 14),
            Eq,
            target3,
        ),
        check(
            "sends 2/7, |Resp| <= 7",
            int(3) - q(7, 14) - q(2, 7),
            Eq,
            int(2) + q(3, 14),
        ),
        check("2 + 3/14 vs target", int(2) + q(3, 14), Ge, target3),
        check(
            "sends 2/7, |Resp| <= 6",
            int(3) - q(6, 14) - q(2, 7),
            Eq,
            int(2) + q(2, 7),
        ),
        check("2 + 2/7 vs target", int(2) + q(2, 7), Ge, target3),
        check("2 + 5/14 vs target", int(2) + q(5, 14), Ge, target3),
        check(
            "sends 5/14, |Resp| <= 3",
            int(3) - q(3, 14) - q(5, 14),
            Eq,
            int(2) + q(3, 7),
        ),
        check("2 + 3/7 vs target", int(2) + q(3, 7), Ge, target3),
        check(
            "sends 3/7, |Resp| = 0",
            int(3) - q(3, 7),
            Eq,
            int(2) + q(4, 7),
        ),
        check("3 - 12/14", int(3) - q(12, 14), Eq, int(2) + q(1, 7)),
        check("3-vertex, |Resp| <= 11", int(3) - q(11, 13), Eq, target4),
        check(
            "4-vertex, |Resp| <= 20",
            int(4) - q(20, 13),
            Eq,
            int(2) + q(6, 13),
        ),
        check("2 + 6/13 vs target", int(2) + q(6, 13), Gt, target4),
        check(
            "2-vertex with two 3+-neighbors",
            int(2) + q(2, 13),
            Eq,
            target4,
        ),
    ]
}

/// A catalog configuration found in a contracted graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigMatch {
    pub family: Family,
    /// Parameters of the catalog entry that is contained.
    pub params: Vec<usize>,
    /// The branch vertices involved.
    pub at: Vec<usize>,
}

impl fmt::Display for ConfigMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spec = crate::configs::ConfigSpec::new(self.family, &self.params, 3, 5);
        write!(f, "{} at {:?}", spec.name(), self.at)
    }
}

fn dominates(have: &[usize], need: &[usize]) -> bool {
    let mut h = have.to_vec();
    let mut n = need.to_vec();
    h.sort_unstable();
    n.sort_unstable();
    h.len() == n.len() && h.iter().zip(&n).all(|(a, b)| a >= b)
}

/// Searches `ct` for a subcubic 5-reducible configuration by thread
/// lengths: a thread with at least 8 2-vertices (or a cycle of at least 9
/// vertices); a 3-vertex whose threads dominate a listed `Y`; two
/// 3-vertices joined by exactly one thread of the listed length whose other
/// threads dominate a listed `H`; two 3-vertices joined by two threads of
/// the listed lengths whose third threads dominate a listed `Phi`.
pub fn find_catalog_config(ct: &Graph) -> Option<ConfigMatch> {
    let td = ThreadDecomposition::new(ct);
    if let Some(t) = td.threads.iter().find(|t| t.internal.len() >= 8) {
        return Some(ConfigMatch {
            family: Family::Caterpillar,
            params: vec![8],
            at: vec![t.start, t.end],
        });
    }
    if let Some(c) = td.cycles.iter().find(|c| c.len() >= 9) {
        return Some(ConfigMatch {
            family: Family::Caterpillar,
            params: vec![8],
            at: vec![c[0]],
        });
    }
    let catalog: Vec<_> = claim_list(3)
        .into_iter()
        .filter(|(s, st)| *st == Status::Reducible && s.family != Family::Caterpillar)
        .map(|(s, _)| s)
        .collect();
    let th = Threads::new(ct);
    let branch: Vec<usize> = ct.vertices().filter(|&v| ct.degree(v) == 3).collect();
    let reports: BTreeMap<usize, RespReport> = branch.iter().map(|&v| (v, th.report(v))).collect();
    for &v in &branch {
        let r = &reports[&v];
        if let Some(s) = catalog
            .iter()
            .find(|s| s.family == Family::Y && dominates(&r.threads, &s.params))
        {
            return Some(ConfigMatch {
                family: Family::Y,
                params: s.params.clone(),
                at: vec![v],
            });
        }
    }
    // Threads at `v` split into those joining `u` and the rest.
    let split = |v: usize, u: usize| -> (Vec<usize>, Vec<usize>) {
        let (mut link, mut rest) = (Vec::new(), Vec::new());
        for t in &th.at[v] {
            if t.end == u {
                link.push(t.internal.len());
            } else {
                rest.push(t.internal.len());
            }
        }
        (link, rest)
    };
    for &v in &branch {
        for (&u, &mu) in &reports[&v].n3 {
            if u <= v || ct.degree(u) != 3 {
                continue;
            }
            let (link, legs_v) = split(v, u);
            let (_, legs_u) = split(u, v);
            for s in &catalog {
                let p = &s.params;
                let found = match s.family {
                    Family::H if mu == 1 => {
                        link[0] == p[2]
                            && ((dominates(&legs_v, &p[0..2]) && dominates(&legs_u, &p[3..5]))
                                || (dominates(&legs_u, &p[0..2]) && dominates(&legs_v, &p[3..5])))
                    }
                    Family::Phi if mu == 2 => {
                        dominates(&link, &p[1..3])
                            && dominates(&p[1..3], &link)
                            && ((legs_v[0] >= p[0] && legs_u[0] >= p[3])
                                || (legs_u[0] >= p[0] && legs_v[0] >= p[3]))
                    }
                    _ => false,
                };
                if found {
                    return Some(ConfigMatch {
                        family: s.family,
                        params: p.clone(),
                        at: vec![v, u],
                    });
                }
            }
        }
    }
    None
}

/// Whether `g` contains `S_k` as a subgraph: a `k`-cycle with a pendant
/// edge at every vertex, or for `k = 4` at two adjacent vertices. Cycles
/// are enumerated, so keep `k` small.
pub fn contains_s_graph(g: &Graph, k: usize) -> bool {
    let mut found = false;
    for_each_cycle(g, k, &mut |cycle| {
        if found {
            return;
        }
        let on: BTreeSet<usize> = cycle.iter().copied().collect();
        let off: Vec<Vec<usize>> = cycle
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|w| !on.contains(w))
                    .collect()
            })
            .collect();
        found = if k == 4 {
            (0..4).any(|i| distinct_choice(&[off[i].clone(), off[(i + 1) % 4].clone()]))
        } else {
            distinct_choice(&off)
        };
    });
    found
}

/// Whether one element can be picked from each set with all picks distinct.
fn distinct_choice(sets: &[Vec<usize>]) -> bool {
    fn go(sets: &[Vec<usize>], used: &mut Vec<usize>) -> bool {
        match sets.split_first() {
            None => true,
            Some((first, rest)) => first.iter().any(|&x| {
                if used.contains(&x) {
                    return false;
                }
                used.push(x);
                let ok = go(rest, used);
                used.pop();
                ok
            }),
        }
    }
    go(sets, &mut Vec::new())
}

/// Calls `f` once per cycle of length `k`, listed from its smallest vertex.
fn for_each_cycle(g: &Graph, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn extend(g: &Graph, k: usize, path: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        let (s, last) = (path[0], *path.last().unwrap());
        if path.len() == k {
            if g.has_edge(last, s) && path[1] < path[k - 1] {
                f(path);
            }
            return;
        }
        for &w in g.neighbors(last) {
            if w > s && !path.contains(&w) {
                path.push(w);
                extend(g, k, path, f);
                path.pop();
            }
        }
    }
    if k < 3 {
        return;
    }
    for s in g.vertices() {
        extend(g, k, &mut vec![s], f);
    }
}

/// Random 2-connected subcubic graph: a random cubic multigraph skeleton on
/// `2..=max_branch` vertices (no loops) whose edges are subdivided.
fn random_sample(rng: &mut ChaCha8Rng, max_branch: usize) -> Option<Graph> {
    let n0 = 2 * rng.gen_range(1..=max_branch / 2);
    let mut stubs: Vec<usize> = (0..n0).flat_map(|v| [v, v, v]).collect();
    stubs.shuffle(rng);
    let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
    if pairs.iter().any(|(a, b)| a == b) {
        return None;
    }
    // Threads of 8 or more 2-vertices match trivially, so they are rare.
    let lo = rng.gen_range(0..=5);
    let mut edges = Vec::new();
    let mut n = n0;
    let mut direct = BTreeSet::new();
    for &(a, b) in &pairs {
        let t = if rng.gen_ratio(1, 50) {
            8
        } else {
            rng.gen_range(lo..=7)
        };
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
    Graph::from_edges(n, edges).ok()
}

/// One counterexample to the discharging disjunction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    pub graph6: String,
    pub min_charge: Rational,
}

/// Outcome of [`falsification_harness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FalsificationReport {
    pub trials: usize,
    pub seed: u64,
    /// Trials whose contracted graph contains a catalog configuration.
    pub with_config: usize,
    /// Matches per family name.
    pub by_family: BTreeMap<String, usize>,
    /// Trials where every vertex ended with at least 2 + 1/7.
    pub fully_charged: usize,
    /// Trials where some engine run did not conserve charge.
    pub conservation_failures: usize,
    /// Candidate graphs drawn and rejected before reaching the quota.
    pub rejected: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl FalsificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.conservation_failures == 0
    }
}

struct TrialOutcome {
    rejected: usize,
    matched: Option<Family>,
    charged: bool,
    conserved: bool,
    counterexample: Option<Counterexample>,
}

fn accept(g: &Graph) -> bool {
    if !is_two_connected(g) || g.max_degree() > 3 || g.vertices().any(|v| g.degree(v) < 2) {
        return false;
    }
    if mad_exact(g) >= Rational::new(15, 7) {
        return false;
    }
    let th = Threads::new(g);
    if g.vertices()
        .filter(|&v| g.degree(v) == 3)
        .any(|v| th.report(v).n3.len() < 2)
    {
        return false;
    }
    ![3, 4, 7].iter().any(|&k| contains_s_graph(g, k))
}

fn trial(seed: u64, index: usize, max_branch: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let mut rejected = 0;
    let g = loop {
        match random_sample(&mut rng, max_branch) {
            Some(g) if accept(&g) => break g,
            _ => rejected += 1,
        }
    };
    let matched = find_catalog_config(&g).map(|m| m.family);
    let s = run_rules_sparse3(&g).expect("accepted samples satisfy the engine preconditions");
    let (_, min) = s.min_vertex_charge().expect("nonempty graph");
    let charged = min >= Rational::new(15, 7);
    let counterexample = (matched.is_none() && !charged).then(|| Counterexample {
        trial: index,
        graph6: emit_graph6(&g),
        min_charge: min,
    });
    TrialOutcome {
        rejected,
        matched,
        charged,
        conserved: s.is_conserved() && s.total == Rational::from_integer(2 * g.m() as i64),
        counterexample,
    }
}

/// Draws `trials` random 2-connected subcubic graphs with `mad < 2 + 1/7`,
/// no `S3`, `S4` or `S7`, and `|N3(v)| >= 2` at every 3-vertex, and checks
/// that each contains a catalog configuration or ends the subcubic rules
/// with every charge at least `2 + 1/7`. Trial `i` uses stream `i` of the
/// generator seeded with `seed`, so results do not depend on scheduling.
pub fn falsification_harness(trials: usize, seed: u64) -> FalsificationReport {
    let outcomes: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|i| trial(seed, i, 12))
        .collect();
    let mut report = FalsificationReport {
        trials,
        seed,
        with_config: 0,
        by_family: BTreeMap::new(),
        fully_charged: 0,
        conservation_failures: 0,
        rejected: 0,
        counterexamples: Vec::new(),
    };
    for o in outcomes {
        report.rejected += o.rejected;
        if let Some(f) = o.matched {
            report.with_config += 1;
            *report.by_family.entry(f.to_string()).or_insert(0) += 1;
        }
        report.fully_charged += o.charged as usize;
        report.conservation_failures += !o.conserved as usize;
        if let Some(c) = o.counterexample {
            warn!("counterexample in trial {}: {}", c.trial, c.graph6);
            report.counterexamples.push(c);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::theta_graph;
    use crate::graphcore::{drawings, families};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn theta_resp() {
        let g = theta_graph(4, 5, 4).unwrap();
        let rep = n3_and_resp(&g, 0).unwrap();
        assert_eq!(rep.resp_size(), 13);
        assert_eq!(rep.n3, BTreeMap::from([(1, 3)]));
        assert_eq!(rep.distance[&1], 5);
    }

    #[test]
    fn prism_resp_is_empty() {
        let g = families::prism();
        for v in g.vertices() {
            let rep = n3_and_resp(&g, v).unwrap();
            assert_eq!(rep.resp_size(), 0);
            assert_eq!(rep.n3.len(), 3);
            assert!(rep.n3.values().all(|&m| m == 1));
        }
        assert_eq!(
            n3_and_resp(&families::cycle(5), 0),
            Err(DischargeError::NotBranchVertex(0))
        );
    }

    #[test]
    fn sparse3_on_prism_and_theta() {
        // Each vertex sends and receives 3/14 under R2(b).
        let s = run_rules_sparse3(&families::prism()).unwrap();
        assert_eq!(s.moves, 18);
        assert!(s
            .vertex_charges()
            .all(|(_, c)| c == Rational::from_integer(3)));
        let g = theta_graph(4, 5, 4).unwrap();
        let s = run_rules_sparse3(&g).unwrap();
        assert!(s.is_conserved());
        assert_eq!(s.total, Rational::from_integer(2 * g.m() as i64));
        for v in 2..g.n() {
            assert_eq!(s.get(Element::Vertex(v)), r(15, 7));
        }
    }

    #[test]
    fn sparse3_rejects_degenerate_input() {
        assert!(matches!(
            run_rules_sparse3(&families::path(4)),
            Err(DischargeError::Degenerate {
                vertex: 0,
                degree: 1
            })
        ));
        assert!(matches!(
            run_rules_sparse3(&families::complete(5)),
            Err(DischargeError::DegreeTooLarge { .. })
        ));
        let bowtie =
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(
            run_rules_sparse4(&bowtie),
            Err(DischargeError::NotTwoConnected)
        );
    }

    #[test]
    fn sparse4_theta() {
        let g = theta_graph(4, 5, 4).unwrap();
        let s = run_rules_sparse4(&g).unwrap();
        assert!(s.is_conserved() && s.flags.is_empty());
        for v in 2..g.n() {
            assert_eq!(s.get(Element::Vertex(v)), r(28, 13));
        }
        assert_eq!(
            s.get(Element::Vertex(0)),
            Rational::from_integer(3) - r(13, 13)
        );
        let k5 = families::complete(5);
        assert_eq!(run_rules_sparse4(&k5).unwrap().moves, 0);
    }

    #[test]
    fn list_rules() {
        let s = run_rules_list(&drawings::cube(), 0).unwrap();
        assert_eq!(s.total, Rational::from_integer(-1));
        assert_eq!(s.moves, 0);
        // The cycle: both faces give 1 to each non-p vertex; p gives 9/2 to each.
        let s = run_rules_list(&drawings::cycle(7), 3).unwrap();
        assert_eq!(s.total, Rational::from_integer(-1));
        assert!(s.is_conserved());
        assert_eq!(s.get(Element::Vertex(3)), Rational::from_integer(0));
        assert_eq!(
            s.get(Element::Face(0)),
            Rational::from_integer(7 - 6 - 6) + r(9, 2)
        );
    }

    #[test]
    fn no_run_values() {
        assert_eq!(max_no_run(8, 8), 7);
        assert_eq!(max_no_run(9, 8), 7);
        assert_eq!(max_no_run(41, 8), 35);
        assert_eq!(max_no_run(5, 1), 0);
        assert_eq!(max_no_run(3, 8), 3);
    }

    #[test]
    fn face_audit() {
        let a = audit_face_inequality(2000).unwrap();
        assert!(a.passed());
        assert_eq!(a.equality_at, (41..=48).collect::<Vec<_>>());
        assert_eq!(a.value_at_40, -1);
        assert_eq!(
            audit_face_inequality(40),
            Err(DischargeError::FaceBound(40))
        );
    }

    #[test]
    fn case_arithmetic_holds() {
        for c in audit_case_arithmetic() {
            assert!(c.holds, "{c}");
        }
    }

    #[test]
    fn s_graphs() {
        let s3 = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(contains_s_graph(&s3, 3));
        assert!(!contains_s_graph(
            &s3.without_edges(&[crate::EdgeId::new(2, 5)]),
            3
        ));
        assert!(contains_s_graph(&families::cube(), 4));
        assert!(contains_s_graph(&families::prism(), 4));
        assert!(!contains_s_graph(&families::complete(4), 4));
        assert!(!contains_s_graph(&families::cycle(7), 7));
    }

    #[test]
    fn catalog_search() {
        assert_eq!(find_catalog_config(&families::prism()), None);
        let cat = find_catalog_config(&theta_graph(1, 8, 8).unwrap()).unwrap();
        assert_eq!(cat.family, Family::Caterpillar);
        let y = find_catalog_config(&theta_graph(2, 5, 7).unwrap()).unwrap();
        assert_eq!((y.family, y.params), (Family::Y, vec![2, 5, 6]));
        assert_eq!(find_catalog_config(&theta_graph(2, 4, 7).unwrap()), None);
    }
}
