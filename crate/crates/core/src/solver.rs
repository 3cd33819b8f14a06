//! Exact strong edge-coloring search.
//!
//! A strong edge-coloring of `G` is a proper vertex coloring of
//! [`conflict_graph`]`(G)`, so every query here is reduced to a list-coloring
//! instance on that graph ([`ColoringProblem`]) and handed to a
//! [`DecisionProcedure`]. The default procedure, [`Backtracking`], is a
//! complete DSATUR-style search with forward checking:
//!
//! * branch on the uncolored edge with the fewest remaining colors, ties
//!   broken by larger conflict degree and then by smaller edge index;
//! * when every domain is `{1..k}` and nothing is precolored, colors are
//!   introduced in order (a new branch may only open color `max_used + 1`),
//!   which removes the `k!` relabellings of each solution;
//! * once the uncolored edges split into parts with no conflicts between
//!   them, each part is searched on its own.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphcore::{conflict_graph, EdgeId, Graph};

/// Colors are positive integers.
pub type Color = u32;

/// Largest color (and largest `k`) the bitset domains can represent.
pub const MAX_COLORS: usize = 64;

/// Largest edge count accepted by [`chi_strong_bruteforce`].
pub const BRUTEFORCE_MAX_EDGES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("edge {0} has no color")]
    NotTotal(EdgeId),
    #[error("edge {0} has no list")]
    MissingList(EdgeId),
    #[error("{0} is not an edge of the graph")]
    UnknownEdge(EdgeId),
    #[error("precolored edges {0} and {1} conflict")]
    FixedConflict(EdgeId, EdgeId),
    #[error("color {color} on edge {edge} is outside 1..={k}")]
    ColorOutOfRange {
        edge: EdgeId,
        color: Color,
        k: usize,
    },
    #[error("{0} colors requested; at most {MAX_COLORS} are supported")]
    TooManyColors(usize),
    #[error("brute force limited to {BRUTEFORCE_MAX_EDGES} edges, graph has {0}")]
    TooManyEdges(usize),
}

/// An assignment of colors to (some of the) edges of a graph. Serialized
/// as a list of `[edge, color]` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<(EdgeId, Color)>", from = "Vec<(EdgeId, Color)>")]
pub struct EdgeColoring(pub BTreeMap<EdgeId, Color>);

impl From<EdgeColoring> for Vec<(EdgeId, Color)> {
    fn from(c: EdgeColoring) -> Self {
        c.0.into_iter().collect()
    }
}

impl From<Vec<(EdgeId, Color)>> for EdgeColoring {
    fn from(v: Vec<(EdgeId, Color)>) -> Self {
        EdgeColoring(v.into_iter().collect())
    }
}

/// A total strong edge-coloring.
pub type Coloring = EdgeColoring;
/// A conflict-free coloring of a subset of the edges.
pub type PartialColoring = EdgeColoring;

impl EdgeColoring {
    pub fn new() -> EdgeColoring {
        EdgeColoring::default()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.0.get(&e).copied()
    }

    pub fn insert(&mut self, e: EdgeId, c: Color) {
        self.0.insert(e, c);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Color)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    /// Number of distinct colors used.
    pub fn num_colors(&self) -> usize {
        self.0.values().collect::<BTreeSet<_>>().len()
    }

    /// Applies a color map `c ↦ perm[c - 1]`.
    pub fn permuted(&self, perm: &[Color]) -> EdgeColoring {
        EdgeColoring(
            self.0
                .iter()
                .map(|(&e, &c)| (e, perm[c as usize - 1]))
                .collect(),
        )
    }

    /// Parses lines `c <u> <v> <color>` (`#` comments allowed).
    pub fn parse(text: &str) -> Result<EdgeColoring, String> {
        let mut out = EdgeColoring::new();
        for (i, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let toks: Vec<&str> = body.split_whitespace().collect();
            let nums: Option<Vec<usize>> = toks
                .get(1..)
                .map(|t| t.iter().filter_map(|x| x.parse().ok()).collect());
            match (toks.first(), nums) {
                (Some(&"c"), Some(n))
                    if n.len() == 3 && toks.len() == 4 && n[0] != n[1] && n[2] > 0 =>
                {
                    out.insert(EdgeId::new(n[0], n[1]), n[2] as Color);
                }
                _ => return Err(format!("line {}: expected `c <u> <v> <color>`", i + 1)),
            }
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        self.iter()
            .map(|(e, c)| format!("c {} {} {c}\n", e.a, e.b))
            .collect()
    }
}

/// Allowed colors per edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    into = "Vec<(EdgeId, BTreeSet<Color>)>",
    from = "Vec<(EdgeId, BTreeSet<Color>)>"
)]
pub struct ListAssignment(pub BTreeMap<EdgeId, BTreeSet<Color>>);

impl From<ListAssignment> for Vec<(EdgeId, BTreeSet<Color>)> {
    fn from(l: ListAssignment) -> Self {
        l.0.into_iter().collect()
    }
}

impl From<Vec<(EdgeId, BTreeSet<Color>)>> for ListAssignment {
    fn from(v: Vec<(EdgeId, BTreeSet<Color>)>) -> Self {
        ListAssignment(v.into_iter().collect())
    }
}

impl ListAssignment {
    /// Every edge of `g` gets `{1..=k}`.
    pub fn uniform(g: &Graph, k: usize) -> ListAssignment {
        let all: BTreeSet<Color> = (1..=k as Color).collect();
        ListAssignment(g.edges().iter().map(|&e| (e, all.clone())).collect())
    }

    /// Parses lines `l <u> <v> <color> <color> ...`.
    pub fn parse(text: &str) -> Result<ListAssignment, String> {
        let mut out = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let toks: Vec<&str> = body.split_whitespace().collect();
            let nums: Result<Vec<usize>, _> = toks[1..].iter().map(|t| t.parse()).collect();
            match (toks[0], nums) {
                ("l", Ok(n)) if n.len() >= 2 && n[0] != n[1] && n[2..].iter().all(|&c| c > 0) => {
                    let list = n[2..].iter().map(|&c| c as Color).collect();
                    out.insert(EdgeId::new(n[0], n[1]), list);
                }
                _ => return Err(format!("line {}: expected `l <u> <v> <colors...>`", i + 1)),
            }
        }
        Ok(ListAssignment(out))
    }
}

/// A list-coloring instance on a conflict graph. Vertex `i` stands for edge
/// `i` of the host graph; domains are bitsets with bit `c - 1` for color `c`.
#[derive(Clone, Debug)]
pub struct ColoringProblem {
    pub neighbors: Vec<Vec<usize>>,
    pub domains: Vec<u64>,
    /// Pre-assigned colors (`0` = free).
    pub fixed: Vec<Color>,
    /// All domains equal `{1..k}` and nothing is fixed, so colors are
    /// interchangeable.
    pub interchangeable: bool,
}

/// A complete decision procedure for [`ColoringProblem`]s.
pub trait DecisionProcedure {
    /// A coloring (one color per conflict-graph vertex) or `None` when the
    /// instance is infeasible.
    fn solve(&mut self, problem: &ColoringProblem) -> Option<Vec<Color>>;
}

/// DSATUR-ordered backtracking with forward checking.
#[derive(Clone, Debug, Default)]
pub struct Backtracking {
    /// Search nodes visited over the lifetime of this value.
    pub nodes: u64,
}

struct Search<'a> {
    neighbors: &'a [Vec<usize>],
    degree: Vec<usize>,
    avail: Vec<u64>,
    color: Vec<Color>,
    /// Domain removals `(vertex, bit)`, undone in reverse.
    trail: Vec<(usize, u64)>,
    /// Vertices colored by the search, in order.
    assigned: Vec<usize>,
    max_used: u32,
    interchangeable: bool,
    nodes: u64,
    /// Scratch marks for component detection.
    seen: Vec<bool>,
}

impl Search<'_> {
    /// Colors `v` with the color of `bit` and prunes neighbors. Returns false
    /// (leaving the trail to be rolled back) if a neighbor runs out of colors.
    fn assign(&mut self, v: usize, bit: u64) -> bool {
        let c = bit.trailing_zeros() + 1;
        self.color[v] = c;
        self.assigned.push(v);
        self.max_used = self.max_used.max(c);
        for &w in &self.neighbors[v] {
            if self.color[w] == 0 && self.avail[w] & bit != 0 {
                self.avail[w] &= !bit;
                self.trail.push((w, bit));
                if self.avail[w] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn mark(&self) -> (usize, usize, u32) {
        (self.trail.len(), self.assigned.len(), self.max_used)
    }

    fn rollback(&mut self, (trail, assigned, max_used): (usize, usize, u32)) {
        while self.trail.len() > trail {
            let (w, bit) = self.trail.pop().unwrap();
            self.avail[w] |= bit;
        }
        while self.assigned.len() > assigned {
            let v = self.assigned.pop().unwrap();
            self.color[v] = 0;
        }
        self.max_used = max_used;
    }

    /// Connected components of the conflict graph induced on `verts`, each
    /// sorted, ordered by smallest vertex.
    fn components(&mut self, verts: &[usize]) -> Vec<Vec<usize>> {
        let mut comps = Vec::new();
        for &root in verts {
            if self.seen[root] {
                continue;
            }
            self.seen[root] = true;
            let mut comp = vec![root];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.neighbors[v] {
                    if self.color[w] == 0 && !self.seen[w] {
                        self.seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        verts.iter().for_each(|&v| self.seen[v] = false);
        comps
    }

    /// Fewest remaining colors, then largest conflict degree, then smallest
    /// index (`verts` is sorted).
    fn select(&self, verts: &[usize]) -> usize {
        let mut best = verts[0];
        for &v in &verts[1..] {
            let (a, b) = (self.avail[v].count_ones(), self.avail[best].count_ones());
            if a < b || (a == b && self.degree[v] > self.degree[best]) {
                best = v;
            }
        }
        best
    }

    /// Colors every vertex of `verts` (all uncolored). Independent parts of
    /// the remaining conflict graph are solved one after another, so a
    /// failure in one part never backtracks into another.
    fn run(&mut self, verts: &[usize]) -> bool {
        if verts.is_empty() {
            return true;
        }
        let comps = self.components(verts);
        if comps.len() == 1 {
            return self.branch(verts);
        }
        let mark = self.mark();
        for comp in &comps {
            if !self.branch(comp) {
                self.rollback(mark);
                return false;
            }
        }
        true
    }

    fn branch(&mut self, verts: &[usize]) -> bool {
        self.nodes += 1;
        let v = self.select(verts);
        let rest: Vec<usize> = verts.iter().copied().filter(|&w| w != v).collect();
        let mut cand = self.avail[v];
        if self.interchangeable {
            cand &= ((1u128 << (self.max_used + 1)) - 1) as u64;
        }
        while cand != 0 {
            let bit = cand & cand.wrapping_neg();
            cand ^= bit;
            let mark = self.mark();
            if self.assign(v, bit) && self.run(&rest) {
                return true;
            }
            self.rollback(mark);
        }
        false
    }
}

impl DecisionProcedure for Backtracking {
    fn solve(&mut self, p: &ColoringProblem) -> Option<Vec<Color>> {
        let n = p.domains.len();
        let mut s = Search {
            neighbors: &p.neighbors,
            degree: p.neighbors.iter().map(Vec::len).collect(),
            avail: p.domains.clone(),
            color: vec![0; n],
            trail: Vec::new(),
            assigned: Vec::new(),
            max_used: 0,
            interchangeable: p.interchangeable,
            nodes: 0,
            seen: vec![false; n],
        };
        if s.avail.contains(&0) {
            return None;
        }
        for v in 0..n {
            let c = p.fixed[v];
            if c == 0 {
                continue;
            }
            let bit = 1u64 << (c - 1);
            if s.avail[v] & bit == 0 || !s.assign(v, bit) {
                return None;
            }
        }
        let free: Vec<usize> = (0..n).filter(|&v| s.color[v] == 0).collect();
        let ok = s.run(&free);
        self.nodes += s.nodes;
        ok.then_some(s.color)
    }
}

/// Strong edge-coloring queries on one graph, with the conflict graph built
/// once and reused across calls.
#[derive(Clone, Debug)]
pub struct StrongSolver<D = Backtracking> {
    graph: Graph,
    neighbors: Vec<Vec<usize>>,
    procedure: D,
}

impl StrongSolver<Backtracking> {
    pub fn new(g: &Graph) -> StrongSolver<Backtracking> {
        StrongSolver::with_procedure(g, Backtracking::default())
    }
}

impl<D: DecisionProcedure> StrongSolver<D> {
    pub fn with_procedure(g: &Graph, procedure: D) -> StrongSolver<D> {
        let cg = conflict_graph(g);
        let neighbors = cg.vertices().map(|v| cg.neighbors(v).to_vec()).collect();
        StrongSolver {
            graph: g.clone(),
            neighbors,
            procedure,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn procedure(&self) -> &D {
        &self.procedure
    }

    /// Conflicting edge indices of edge `i`.
    pub fn conflicts(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    fn index(&self, e: EdgeId) -> Result<usize, SolverError> {
        self.graph.edge_index(e).ok_or(SolverError::UnknownEdge(e))
    }

    fn to_coloring(&self, colors: Vec<Color>) -> Coloring {
        EdgeColoring(self.graph.edges().iter().copied().zip(colors).collect())
    }

    /// Checks that `fixed` uses colors in `1..=k`, names real edges and has
    /// no conflicting pair.
    pub fn check_partial(
        &self,
        k: usize,
        fixed: &PartialColoring,
    ) -> Result<Vec<Color>, SolverError> {
        let mut colors = vec![0; self.graph.m()];
        for (e, c) in fixed.iter() {
            let i = self.index(e)?;
            if c == 0 || c as usize > k {
                return Err(SolverError::ColorOutOfRange {
                    edge: e,
                    color: c,
                    k,
                });
            }
            colors[i] = c;
        }
        for (i, &c) in colors.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if let Some(&j) = self.neighbors[i].iter().find(|&&j| colors[j] == c) {
                let (a, b) = (self.graph.edges()[i], self.graph.edges()[j]);
                return Err(SolverError::FixedConflict(a.min(b), a.max(b)));
            }
        }
        Ok(colors)
    }

    /// Strong coloring with colors `1..=k` extending `fixed`, if one exists.
    pub fn decide(
        &mut self,
        k: usize,
        fixed: &PartialColoring,
    ) -> Result<Option<Coloring>, SolverError> {
        if k > MAX_COLORS {
            return Err(SolverError::TooManyColors(k));
        }
        let fixed_colors = self.check_partial(k, fixed)?;
        let m = self.graph.m();
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let problem = ColoringProblem {
            neighbors: self.neighbors.clone(),
            domains: vec![full; m],
            fixed: fixed_colors,
            interchangeable: fixed.is_empty(),
        };
        Ok(self.solve(&problem))
    }

    /// Strong coloring choosing each edge's color from its list.
    pub fn decide_list(&mut self, lists: &ListAssignment) -> Result<Option<Coloring>, SolverError> {
        let mut domains = Vec::with_capacity(self.graph.m());
        for &e in self.graph.edges() {
            let list = lists.0.get(&e).ok_or(SolverError::MissingList(e))?;
            let mut bits = 0u64;
            for &c in list {
                if c == 0 || c as usize > MAX_COLORS {
                    return Err(SolverError::ColorOutOfRange {
                        edge: e,
                        color: c,
                        k: MAX_COLORS,
                    });
                }
                bits |= 1 << (c - 1);
            }
            domains.push(bits);
        }
        let problem = ColoringProblem {
            neighbors: self.neighbors.clone(),
            domains,
            fixed: vec![0; self.graph.m()],
            interchangeable: false,
        };
        Ok(self.solve(&problem))
    }

    fn solve(&mut self, problem: &ColoringProblem) -> Option<Coloring> {
        let colors = self.procedure.solve(problem)?;
        Some(self.to_coloring(colors))
    }

    /// Exact strong chromatic index, with an optimal coloring.
    pub fn chi(&mut self) -> Result<(usize, Coloring), SolverError> {
        if self.graph.m() == 0 {
            return Ok((0, Coloring::new()));
        }
        let upper = greedy_upper_bound(&self.neighbors);
        let mut k = greedy_clique(&self.neighbors).max(1);
        loop {
            if k > MAX_COLORS {
                return Err(SolverError::TooManyColors(k));
            }
            if let Some(c) = self.decide(k, &PartialColoring::new())? {
                return Ok((k, c));
            }
            debug_assert!(k < upper);
            k += 1;
        }
    }
}

/// Size of a clique found greedily from each seed vertex.
fn greedy_clique(neighbors: &[Vec<usize>]) -> usize {
    let mut best = 0;
    for seed in 0..neighbors.len() {
        let mut clique = vec![seed];
        let mut cand: Vec<usize> = neighbors[seed].clone();
        cand.sort_by_key(|&v| std::cmp::Reverse(neighbors[v].len()));
        for v in cand {
            if clique
                .iter()
                .all(|&u| neighbors[v].binary_search(&u).is_ok())
            {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Colors used by first-fit in degree order.
fn greedy_upper_bound(neighbors: &[Vec<usize>]) -> usize {
    let n = neighbors.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(neighbors[v].len()));
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for v in order {
        let taken: BTreeSet<usize> = neighbors[v].iter().map(|&w| color[w]).collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// True iff `c` colors every edge and no two conflicting edges share a color.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool, SolverError> {
    let colors: Vec<Color> = g
        .edges()
        .iter()
        .map(|&e| c.get(e).ok_or(SolverError::NotTotal(e)))
        .collect::<Result<_, _>>()?;
    let cg = conflict_graph(g);
    Ok(cg.edges().iter().all(|f| colors[f.a] != colors[f.b]))
}

/// See [`StrongSolver::decide`].
pub fn decide_strong(
    g: &Graph,
    k: usize,
    fixed: &PartialColoring,
) -> Result<Option<Coloring>, SolverError> {
    StrongSolver::new(g).decide(k, fixed)
}

/// See [`StrongSolver::decide_list`].
pub fn decide_list(g: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>, SolverError> {
    StrongSolver::new(g).decide_list(lists)
}

/// Exact strong chromatic index (0 for edgeless graphs).
pub fn chi_strong(g: &Graph) -> Result<usize, SolverError> {
    Ok(StrongSolver::new(g).chi()?.0)
}

/// Strong chromatic index by plain exhaustive search, independent of the
/// conflict-graph machinery: edges are colored in index order with every
/// color tried, and distance is checked straight from the definition.
pub fn chi_strong_bruteforce(g: &Graph) -> Result<usize, SolverError> {
    let m = g.m();
    if m > BRUTEFORCE_MAX_EDGES {
        return Err(SolverError::TooManyEdges(m));
    }
    let edges = g.edges();
    let touch = |p: EdgeId, q: EdgeId| [p.a, p.b].iter().any(|&x| [q.a, q.b].contains(&x));
    let conflict =
        |e: EdgeId, f: EdgeId| touch(e, f) || edges.iter().any(|&h| touch(h, e) && touch(h, f));
    let table: Vec<Vec<bool>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| i != j && conflict(edges[i], edges[j]))
                .collect()
        })
        .collect();
    fn fill(i: usize, k: usize, colors: &mut Vec<usize>, table: &[Vec<bool>]) -> bool {
        if i == colors.len() {
            return true;
        }
        for c in 0..k {
            if (0..i).all(|j| !(table[i][j] && colors[j] == c)) {
                colors[i] = c;
                if fill(i + 1, k, colors, table) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![0; m];
    for k in 0..=m {
        if fill(0, k, &mut colors, &table) {
            return Ok(k);
        }
    }
    unreachable!("m colors always suffice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::families::*;

    fn coloring(g: &Graph, colors: &[Color]) -> Coloring {
        EdgeColoring(
            g.edges()
                .iter()
                .copied()
                .zip(colors.iter().copied())
                .collect(),
        )
    }

    #[test]
    fn verify_examples() {
        let c6 = cycle(6);
        // Edges of C6 in canonical order: 0-1, 0-5, 1-2, 2-3, 3-4, 4-5.
        // Walking around: 0-1:1, 1-2:2, 2-3:3, 3-4:1, 4-5:2, 5-0:3.
        let c = coloring(&c6, &[1, 3, 2, 3, 1, 2]);
        assert!(verify_coloring(&c6, &c).unwrap());
        assert!(!verify_coloring(&path(3), &coloring(&path(3), &[1, 1])).unwrap());
        assert!(verify_coloring(&star(3), &coloring(&star(3), &[1, 2, 3])).unwrap());
        let partial = coloring(&path(3), &[1]);
        assert_eq!(
            verify_coloring(&path(3), &partial),
            Err(SolverError::NotTotal(EdgeId::new(1, 2)))
        );
    }

    #[test]
    fn decide_examples() {
        let none = PartialColoring::new();
        assert!(decide_strong(&prism(), 8, &none).unwrap().is_none());
        let c = decide_strong(&prism(), 9, &none).unwrap().unwrap();
        assert!(verify_coloring(&prism(), &c).unwrap());
        assert!(decide_strong(&cycle(5), 4, &none).unwrap().is_none());
        assert!(decide_strong(&cycle(5), 5, &none).unwrap().is_some());
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_strong(&star(3)).unwrap(), 3);
        assert_eq!(chi_strong(&prism()).unwrap(), 9);
        assert_eq!(chi_strong(&Graph::empty(4)).unwrap(), 0);
        assert_eq!(chi_strong(&cycle(6)).unwrap(), 3);
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(chi_strong_bruteforce(&cycle(5)).unwrap(), 5);
        assert_eq!(chi_strong_bruteforce(&path(4)).unwrap(), 3);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(chi_strong_bruteforce(&two_k2).unwrap(), 1);
        assert_eq!(
            chi_strong_bruteforce(&cycle(13)),
            Err(SolverError::TooManyEdges(13))
        );
    }

    #[test]
    fn fixed_colors_are_respected() {
        let g = path(4);
        let mut fixed = PartialColoring::new();
        fixed.insert(EdgeId::new(0, 1), 3);
        let c = decide_strong(&g, 3, &fixed).unwrap().unwrap();
        assert_eq!(c.get(EdgeId::new(0, 1)), Some(3));
        assert!(verify_coloring(&g, &c).unwrap());
    }

    #[test]
    fn fixed_errors() {
        let g = path(3);
        let mut bad = PartialColoring::new();
        bad.insert(EdgeId::new(0, 1), 1);
        bad.insert(EdgeId::new(1, 2), 1);
        assert_eq!(
            decide_strong(&g, 3, &bad),
            Err(SolverError::FixedConflict(
                EdgeId::new(0, 1),
                EdgeId::new(1, 2)
            ))
        );
        let mut out = PartialColoring::new();
        out.insert(EdgeId::new(0, 1), 4);
        assert!(matches!(
            decide_strong(&g, 3, &out),
            Err(SolverError::ColorOutOfRange { .. })
        ));
        let mut missing = PartialColoring::new();
        missing.insert(EdgeId::new(0, 2), 1);
        assert_eq!(
            decide_strong(&g, 3, &missing),
            Err(SolverError::UnknownEdge(EdgeId::new(0, 2)))
        );
        assert_eq!(
            decide_strong(&g, 65, &PartialColoring::new()),
            Err(SolverError::TooManyColors(65))
        );
    }

    #[test]
    fn list_examples() {
        let g = path(3);
        let mut lists = ListAssignment::default();
        lists.0.insert(EdgeId::new(0, 1), [1].into());
        lists.0.insert(EdgeId::new(1, 2), [1].into());
        assert!(decide_list(&g, &lists).unwrap().is_none());
        lists.0.insert(EdgeId::new(1, 2), [1, 2].into());
        let c = decide_list(&g, &lists).unwrap().unwrap();
        assert_eq!(c.get(EdgeId::new(1, 2)), Some(2));
        lists.0.remove(&EdgeId::new(0, 1));
        assert_eq!(
            decide_list(&g, &lists),
            Err(SolverError::MissingList(EdgeId::new(0, 1)))
        );
    }

    #[test]
    fn deterministic() {
        let a = decide_strong(&cube(), 8, &PartialColoring::new()).unwrap();
        let b = decide_strong(&cube(), 8, &PartialColoring::new()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn text_formats() {
        let c = EdgeColoring::parse("# fixed\nc 1 0 2\nc 2 3 1\n").unwrap();
        assert_eq!(c.get(EdgeId::new(0, 1)), Some(2));
        assert_eq!(EdgeColoring::parse(&c.to_text()).unwrap(), c);
        assert!(EdgeColoring::parse("c 1 1 2").is_err());
        assert!(EdgeColoring::parse("c 1 2").is_err());
        let l = ListAssignment::parse("l 0 1 1 2 3\n").unwrap();
        assert_eq!(l.0[&EdgeId::new(0, 1)].len(), 3);
        assert!(ListAssignment::parse("l 0 1 0").is_err());
    }
}
