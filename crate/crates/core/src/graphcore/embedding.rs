//! Rotation systems and face tracing.

use std::fmt::Write as _;

use super::io::parse_edge_list_with;
use super::{girth, mad_exact, Girth, Graph, GraphError, Rational};

/// A graph together with a cyclic order of the neighbors around every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    /// Validates that each `rotation[v]` is a permutation of the neighbors of `v`.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Embedding, GraphError> {
        if rotation.len() != graph.n() {
            return Err(GraphError::InvalidRotation {
                vertex: rotation.len().min(graph.n()),
                msg: format!("{} rotations for {} vertices", rotation.len(), graph.n()),
            });
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(GraphError::InvalidRotation {
                    vertex: v,
                    msg: format!("{rot:?} is not a permutation of {:?}", graph.neighbors(v)),
                });
            }
        }
        Ok(Embedding { graph, rotation })
    }

    /// Rotation read off straight-line coordinates: neighbors sorted by
    /// counter-clockwise angle. Planar only if the drawing is crossing-free.
    pub fn from_coordinates(graph: Graph, coords: &[(f64, f64)]) -> Embedding {
        assert_eq!(coords.len(), graph.n());
        let rotation = graph
            .vertices()
            .map(|v| {
                let (x0, y0) = coords[v];
                let mut nb = graph.neighbors(v).to_vec();
                let angle = |w: &usize| (coords[*w].1 - y0).atan2(coords[*w].0 - x0);
                nb.sort_by(|a, b| angle(a).total_cmp(&angle(b)));
                nb
            })
            .collect();
        Embedding::new(graph, rotation).expect("neighbor lists are permutations")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Neighbor following `u` in the rotation at `v`.
    fn successor(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotation[v];
        let i = rot
            .iter()
            .position(|&x| x == u)
            .expect("u is a neighbor of v");
        rot[(i + 1) % rot.len()]
    }

    /// Face boundary walks. The dart `(u, v)` is followed by `(v, w)` where
    /// `w` succeeds `u` in the rotation at `v`; every dart is used exactly once.
    /// Each face is reported as its vertex sequence, starting from the
    /// smallest unused dart.
    pub fn trace_faces(&self) -> Vec<Vec<usize>> {
        let g = &self.graph;
        let mut darts: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .flat_map(|e| [(e.a, e.b), (e.b, e.a)])
            .collect();
        darts.sort_unstable();
        let mut used = vec![false; darts.len()];
        let dart_index = |d: (usize, usize)| darts.binary_search(&d).unwrap();
        let mut faces = Vec::new();
        for i in 0..darts.len() {
            if used[i] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = darts[i];
            loop {
                let j = dart_index(d);
                if used[j] {
                    break;
                }
                used[j] = true;
                face.push(d.0);
                let (u, v) = d;
                d = (v, self.successor(v, u));
            }
            faces.push(face);
        }
        faces
    }

    /// `Σ_f (ℓ(f) − 6) + Σ_v (2d(v) − 6)`; equals −12 for a planar embedding
    /// of a connected graph.
    pub fn euler_sum(&self) -> Rational {
        let faces: i64 = self.trace_faces().iter().map(|f| f.len() as i64 - 6).sum();
        let verts: i64 = self
            .graph
            .vertices()
            .map(|v| 2 * self.graph.degree(v) as i64 - 6)
            .sum();
        Rational::from_integer(faces + verts)
    }

    /// Euler characteristic `n − m + f` of the traced surface.
    pub fn euler_characteristic(&self) -> i64 {
        self.graph.n() as i64 - self.graph.m() as i64 + self.trace_faces().len() as i64
    }

    /// Whether the rotation system describes a plane embedding of a
    /// connected graph (`n − m + f = 2`).
    pub fn is_planar_embedding(&self) -> bool {
        self.graph.is_connected() && self.euler_characteristic() == 2
    }

    /// Text form: the edge list followed by `r <v> <neighbors in cyclic order>`.
    pub fn to_text(&self) -> String {
        let mut out = super::emit_edge_list(&self.graph);
        for (v, rot) in self.rotation.iter().enumerate() {
            write!(out, "r {v}").unwrap();
            for w in rot {
                write!(out, " {w}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Parses [`Embedding::to_text`] output. Vertices without an `r` line get
    /// their sorted neighbor list as rotation.
    pub fn parse(text: &str) -> Result<Embedding, GraphError> {
        let mut rot_lines: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        let (n, edges) = parse_edge_list_with(text, |line, toks| {
            if toks[0] != "r" {
                return Ok(false);
            }
            let nums: Result<Vec<usize>, _> = toks[1..].iter().map(|t| t.parse()).collect();
            match nums {
                Ok(nums) if !nums.is_empty() => {
                    rot_lines.push((line, nums[0], nums[1..].to_vec()));
                    Ok(true)
                }
                _ => Err(GraphError::Parse {
                    line,
                    msg: "expected `r <v> <neighbors...>`".into(),
                }),
            }
        })?;
        let graph = Graph::from_edges(n, edges)?;
        let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
        for (line, v, rot) in rot_lines {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if rotation[v].replace(rot).is_some() {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("duplicate rotation for vertex {v}"),
                });
            }
        }
        let rotation = rotation
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.unwrap_or_else(|| graph.neighbors(v).to_vec()))
            .collect();
        Embedding::new(graph, rotation)
    }
}

/// Checks `mad(G) < 2g/(g − 2)` exactly for the embedded graph.
/// Returns `None` when the graph is a forest.
pub fn mad_girth_spotcheck(e: &Embedding) -> Option<bool> {
    match girth(e.graph()) {
        Girth::Infinite => None,
        Girth::Finite(g) => {
            let bound = Rational::new(2 * g as i64, g as i64 - 2);
            Some(mad_exact(e.graph()) < bound)
        }
    }
}

/// Straight-line planar drawings for a few standard graphs; the rotation
/// systems they induce are plane embeddings.
pub mod drawings {
    use super::Embedding;
    use crate::graphcore::families;

    pub fn cycle(n: usize) -> Embedding {
        let coords: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let a = std::f64::consts::TAU * i as f64 / n as f64;
                (a.cos(), a.sin())
            })
            .collect();
        Embedding::from_coordinates(families::cycle(n), &coords)
    }

    /// Outer triangle 0,1,2 around inner triangle 3,4,5.
    pub fn prism() -> Embedding {
        let coords = [
            (0.0, 4.0),
            (-4.0, -2.0),
            (4.0, -2.0),
            (0.0, 1.0),
            (-1.0, -0.5),
            (1.0, -0.5),
        ];
        Embedding::from_coordinates(families::prism(), &coords)
    }

    /// Outer square 0..4 around inner square 4..8.
    pub fn cube() -> Embedding {
        let coords = [
            (-2.0, -2.0),
            (2.0, -2.0),
            (2.0, 2.0),
            (-2.0, 2.0),
            (-1.0, -1.0),
            (1.0, -1.0),
            (1.0, 1.0),
            (-1.0, 1.0),
        ];
        Embedding::from_coordinates(families::cube(), &coords)
    }

    /// Outer triangle 0,1,2 with vertex 3 in the middle.
    pub fn k4() -> Embedding {
        let coords = [(0.0, 3.0), (-3.0, -2.0), (3.0, -2.0), (0.0, 0.0)];
        Embedding::from_coordinates(families::complete(4), &coords)
    }
}
