//! Structural operations: girth, contraction and expansion, the strong
//! conflict graph, threads of degree-2 vertices, bridges and 2-connectivity.

use std::fmt;

use log::warn;
use serde::{Deserialize, Serialize};

use super::{EdgeId, Graph, GraphError};

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

/// BFS from every vertex; a non-tree edge `uw` closes a walk of length
/// `dist[u] + dist[w] + 1`, and the minimum over all roots is the girth.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Result of [`contract`]: the contracted graph plus both label maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// `old_to_new[v]` is `None` for deleted vertices.
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

/// Deletes every vertex of degree exactly 1 in `g`, in a single pass.
///
/// This is not iterated: a vertex whose degree drops to 1 because its leaf
/// neighbor was deleted survives. Remaining vertices keep their relative
/// order and are relabelled compactly.
pub fn contract(g: &Graph) -> Contraction {
    let new_to_old: Vec<usize> = g.vertices().filter(|&v| g.degree(v) != 1).collect();
    let mut old_to_new = vec![None; g.n()];
    for (i, &v) in new_to_old.iter().enumerate() {
        old_to_new[v] = Some(i);
    }
    Contraction {
        graph: g.induced(&new_to_old),
        old_to_new,
        new_to_old,
    }
}

/// d-expansion: attaches `d - deg(v)` pendant edges at every vertex with
/// degree in `2..=d`. Original labels are kept and pendants are appended in
/// vertex order. Vertices of degree 0 or 1 are left alone (with a warning).
pub fn expand(g: &Graph, d: usize) -> Result<Graph, GraphError> {
    let delta = g.max_degree();
    if delta > d {
        return Err(GraphError::MaxDegreeExceeded {
            max_degree: delta,
            d,
        });
    }
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.a, e.b)).collect();
    let mut next = g.n();
    for v in g.vertices() {
        let deg = g.degree(v);
        if deg < 2 {
            warn!("expand: vertex {v} has degree {deg}; no pendants attached");
            continue;
        }
        for _ in deg..d {
            edges.push((v, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges)
}

/// The square of the line graph: vertex `i` is `g.edges()[i]`, and two edges
/// are adjacent when some endpoint of one equals or neighbors some endpoint of
/// the other.
pub fn conflict_graph(g: &Graph) -> Graph {
    let mut out = Vec::new();
    let mut mark = vec![false; g.n()];
    for (i, e) in g.edges().iter().enumerate() {
        let mut close = Vec::new();
        for x in [e.a, e.b] {
            for &y in std::iter::once(&x).chain(g.neighbors(x)) {
                if !mark[y] {
                    mark[y] = true;
                    close.push(y);
                }
            }
        }
        for &y in &close {
            for &z in g.neighbors(y) {
                let f = EdgeId::new(y, z);
                let j = g.edge_index(f).expect("incident edge exists");
                if j > i {
                    out.push((i, j));
                }
            }
        }
        for &y in &close {
            mark[y] = false;
        }
    }
    out.sort_unstable();
    out.dedup();
    Graph::from_edges(g.m(), out).expect("conflict graph is simple")
}

/// A maximal path through degree-2 vertices. `start` and `end` are the
/// non-degree-2 vertices at either side (equal for a thread that returns to
/// its origin); `internal` lists the degree-2 vertices from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thread {
    pub start: usize,
    pub internal: Vec<usize>,
    pub end: usize,
}

impl Thread {
    /// Number of edges between `start` and `end` along the thread.
    pub fn length(&self) -> usize {
        self.internal.len() + 1
    }

    pub fn is_loop(&self) -> bool {
        self.start == self.end
    }

    /// The endpoint opposite `v` (for a loop, `v` itself).
    pub fn other_end(&self, v: usize) -> usize {
        if self.start == v {
            self.end
        } else {
            self.start
        }
    }
}

/// Splits the edges of `g` into threads between non-degree-2 vertices, plus
/// cycle components made only of degree-2 vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ThreadDecomposition {
    pub threads: Vec<Thread>,
    /// Each cycle listed from its smallest vertex, towards its smaller neighbor.
    pub cycles: Vec<Vec<usize>>,
}

impl ThreadDecomposition {
    pub fn new(g: &Graph) -> ThreadDecomposition {
        let mut used = vec![false; g.m()];
        let mut threads = Vec::new();
        let idx = |u: usize, v: usize| g.edge_index(EdgeId::new(u, v)).unwrap();
        for s in g.vertices().filter(|&v| g.degree(v) != 2) {
            for &w in g.neighbors(s) {
                if used[idx(s, w)] {
                    continue;
                }
                used[idx(s, w)] = true;
                let mut internal = Vec::new();
                let (mut prev, mut cur) = (s, w);
                while g.degree(cur) == 2 {
                    internal.push(cur);
                    let nb = g.neighbors(cur);
                    let next = if nb[0] == prev { nb[1] } else { nb[0] };
                    used[idx(cur, next)] = true;
                    prev = cur;
                    cur = next;
                }
                threads.push(Thread {
                    start: s,
                    internal,
                    end: cur,
                });
            }
        }
        let mut cycles = Vec::new();
        for v in g.vertices() {
            if g.degree(v) != 2 || used[idx(v, g.neighbors(v)[0])] {
                continue;
            }
            let mut cyc = vec![v];
            let (mut prev, mut cur) = (v, g.neighbors(v)[0]);
            used[idx(v, cur)] = true;
            while cur != v {
                cyc.push(cur);
                let nb = g.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                used[idx(cur, next)] = true;
                prev = cur;
                cur = next;
            }
            cycles.push(cyc);
        }
        ThreadDecomposition { threads, cycles }
    }

    /// Threads having `v` as an endpoint; a loop at `v` is listed twice, once
    /// per direction, with the second copy reversed.
    pub fn threads_at(&self, v: usize) -> Vec<Thread> {
        let mut out = Vec::new();
        for t in &self.threads {
            if t.start == v {
                out.push(t.clone());
            }
            if t.end == v {
                let mut internal = t.internal.clone();
                internal.reverse();
                out.push(Thread {
                    start: v,
                    internal,
                    end: t.start,
                });
            }
        }
        out
    }
}

/// Maximal runs of degree-2 vertices containing at least `len` vertices.
///
/// Runs between non-degree-2 vertices are reported in thread order; a cycle
/// component made only of degree-2 vertices is reported whole.
pub fn find_threads(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    let dec = ThreadDecomposition::new(g);
    dec.threads
        .into_iter()
        .map(|t| t.internal)
        .chain(dec.cycles)
        .filter(|run| !run.is_empty() && run.len() >= len)
        .collect()
}

/// Bridges and articulation points from one iterative low-link DFS.
struct LowLink {
    bridges: Vec<EdgeId>,
    cut_vertices: Vec<usize>,
}

fn low_link(g: &Graph) -> LowLink {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut bridges = Vec::new();
    let mut time = 0;
    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent, pos) = *top;
            if pos < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[pos];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.push(EdgeId::new(parent, v));
                    }
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    bridges.sort_unstable();
    LowLink {
        bridges,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

/// Cut-edges (bridges) in canonical order.
pub fn cut_edges(g: &Graph) -> Vec<EdgeId> {
    low_link(g).bridges
}

/// Articulation points in increasing order.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    low_link(g).cut_vertices
}

/// Connected, at least three vertices, and no articulation point.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && low_link(g).cut_vertices.is_empty()
}
