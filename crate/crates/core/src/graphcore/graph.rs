use std::fmt;

use serde::{Deserialize, Serialize};

use super::GraphError;

/// An undirected edge stored with its endpoints in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId {
    pub a: usize,
    pub b: usize,
}

impl EdgeId {
    /// Canonicalises the endpoint order. Panics on a loop.
    pub fn new(u: usize, v: usize) -> EdgeId {
        assert_ne!(u, v, "EdgeId cannot be a loop");
        if u < v {
            EdgeId { a: u, b: v }
        } else {
            EdgeId { a: v, b: u }
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn touches(self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    pub fn other(self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted and the canonical edge list (sorted by
/// [`EdgeId`]) is cached, so edge `i` of the graph is stable across calls.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<EdgeId>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            adj[u].push(v);
            adj[v].push(u);
            list.push(EdgeId::new(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].a, w[0].b));
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph { adj, edges: list })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Position of `e` in [`Graph::edges`], if it is an edge.
    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Copy of the graph without the given edges. Vertex labels are kept.
    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let keep = self
            .edges
            .iter()
            .filter(|e| !removed.contains(e))
            .map(|e| (e.a, e.b));
        Graph::from_edges(self.n(), keep).expect("subgraph of a simple graph is simple")
    }

    /// Subgraph induced by `vertices`, relabelled compactly in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| pos[e.a] != usize::MAX && pos[e.b] != usize::MAX)
            .map(|e| (pos[e.a], pos[e.b]));
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// Applies the vertex permutation `perm` (old label `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let edges = self.edges.iter().map(|e| (perm[e.a], perm[e.b]));
        Graph::from_edges(self.n(), edges).expect("relabelling preserves simplicity")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self
            .edges
            .iter()
            .map(|e| (e.a, e.b))
            .chain(other.edges.iter().map(|e| (e.a + off, e.b + off)));
        Graph::from_edges(off + other.n(), edges).expect("disjoint union is simple")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }
}

/// Small named constructors used throughout the tests and the catalog.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)))).unwrap()
    }

    /// Triangular prism: outer triangle 0,1,2, inner triangle 3,4,5, spokes i - i+3.
    pub fn prism() -> Graph {
        Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    /// 3-cube: bottom face 0..4, top face 4..8, verticals i - i+4.
    pub fn cube() -> Graph {
        let mut e = Vec::new();
        for i in 0..4 {
            e.push((i, (i + 1) % 4));
            e.push((4 + i, 4 + (i + 1) % 4));
            e.push((i, i + 4));
        }
        Graph::from_edges(8, e).unwrap()
    }
}
