//! Maximum average degree, exactly.
//!
//! [`mad_exact`] runs Dinkelbach iterations on the parametric densest-subgraph
//! cut (Goldberg's network): for a rational guess `p/q` the minimum s-t cut
//! has capacity `q·m·n + 2p|S| − 2q·e(S)` where `S` is its source side, so the
//! cut exposes a subgraph denser than `p/q` whenever one exists. Each round
//! replaces the guess with the density of the subgraph found, which strictly
//! increases it; the loop ends at the optimum.

use std::collections::VecDeque;

use super::{Graph, GraphError, Rational};

const INF: i64 = i64::MAX / 4;

/// Dinic max-flow on integer capacities.
struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<i64>,
    head: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    fn new(n: usize) -> FlowNetwork {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); n],
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i64, rev_c: i64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(rev_c);
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &id in &self.head[v] {
                let w = self.to[id];
                if self.cap[id] > 0 && self.level[w] < 0 {
                    self.level[w] = self.level[v] + 1;
                    q.push_back(w);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, t: usize, f: i64) -> i64 {
        if v == t {
            return f;
        }
        while self.iter[v] < self.head[v].len() {
            let id = self.head[v][self.iter[v]];
            let w = self.to[id];
            if self.cap[id] > 0 && self.level[v] < self.level[w] {
                let d = self.dfs(w, t, f.min(self.cap[id]));
                if d > 0 {
                    self.cap[id] -= d;
                    self.cap[id ^ 1] += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return flow;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, INF);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    /// Vertices reachable from `s` in the residual network.
    fn source_side(&mut self, s: usize) -> Vec<bool> {
        self.bfs(s);
        self.level.iter().map(|&l| l >= 0).collect()
    }
}

/// Vertex set maximising `q·e(S) − p·|S|` (possibly empty).
fn densest_above(g: &Graph, p: i64, q: i64) -> Vec<usize> {
    let n = g.n();
    let m = g.m() as i64;
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in g.vertices() {
        net.add_edge(s, v, m * q, 0);
        net.add_edge(v, t, m * q + 2 * p - g.degree(v) as i64 * q, 0);
    }
    for e in g.edges() {
        net.add_edge(e.a, e.b, q, q);
    }
    net.max_flow(s, t);
    let side = net.source_side(s);
    (0..n).filter(|&v| side[v]).collect()
}

fn edges_within(g: &Graph, set: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    set.iter().for_each(|&v| inside[v] = true);
    g.edges()
        .iter()
        .filter(|e| inside[e.a] && inside[e.b])
        .count()
}

/// Exact maximum average degree: `max 2·e(G[S]) / |S|` over nonempty `S`.
/// Returns 0 for edgeless graphs.
pub fn mad_exact(g: &Graph) -> Rational {
    mad_with_witness(g).0
}

/// [`mad_exact`] together with a vertex set attaining it.
pub fn mad_with_witness(g: &Graph) -> (Rational, Vec<usize>) {
    if g.m() == 0 {
        return (Rational::from_integer(0), g.vertices().take(1).collect());
    }
    let mut best: Vec<usize> = g.vertices().collect();
    let mut density = Rational::new(g.m() as i64, g.n() as i64);
    loop {
        let cand = densest_above(g, *density.numer(), *density.denom());
        if cand.is_empty() {
            break;
        }
        let d = Rational::new(edges_within(g, &cand) as i64, cand.len() as i64);
        if d <= density {
            break;
        }
        density = d;
        best = cand;
    }
    (density * 2, best)
}

/// Largest vertex count accepted by [`mad_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 24;

/// Maximum average degree by enumerating every nonempty vertex subset in Gray
/// code order, updating the induced edge count one vertex at a time.
pub fn mad_bruteforce(g: &Graph) -> Result<Rational, GraphError> {
    let n = g.n();
    if n > BRUTEFORCE_MAX_N {
        return Err(GraphError::TooLarge {
            what: "vertices",
            size: n,
            limit: BRUTEFORCE_MAX_N,
        });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let (mut best_e, mut best_s) = (0i64, 1i64);
    let mut mask = 0u32;
    let mut edges = 0i64;
    for i in 1u64..(1u64 << n) {
        let v = i.trailing_zeros() as usize;
        let bit = 1u32 << v;
        let touching = (adj[v] & mask).count_ones() as i64;
        if mask & bit == 0 {
            mask |= bit;
            edges += touching;
        } else {
            mask &= !bit;
            edges -= touching;
        }
        let size = mask.count_ones() as i64;
        if edges * best_s > best_e * size {
            best_e = edges;
            best_s = size;
        }
    }
    Ok(Rational::new(2 * best_e, best_s))
}
