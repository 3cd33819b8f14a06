//! Named graphs with documented labelings.
//!
//! | name          | params        | labeling                                                              |
//! |---------------|---------------|-----------------------------------------------------------------------|
//! | `S`           | `k >= 3`      | cycle `0..k`, pendant `k + i` at `i` (for `k = 4` only at `0` and `1`) |
//! | `prism`       |               | triangles `0 1 2` and `3 4 5`, rungs `i, i + 3`                       |
//! | `house`       |               | square `0 1 3 4` with `1 2 3` subdividing its top, roof `1 5 3`       |
//! | `sharp52`     |               | path `0 1 2 3`, `4` and `5` adjacent to `0` and `3`, path `4 6 7 5`   |
//! | `theta`       | `t1 t2 t3`    | ends `0` and `1`, internal vertices path by path                      |
//! | `ex-theta`    | `t1 t2 t3`    | `theta` plus one pendant per 2-vertex, appended in vertex order       |
//! | `cycle`       | `n >= 3`      | `0 1 .. n-1`                                                          |
//! | `path`        | `n >= 1`      | `0 1 .. n-1`                                                          |
//! | `complete`    | `n >= 1`      | all pairs                                                             |
//! | `cube`        |               | bottom face `0..4`, top face `4..8`, verticals `i, i + 4`            |
//! | `caterpillar` | `t [d]`       | the fully expanded `t`-caterpillar used by `config check`             |
//!
//! `ex3-theta` is accepted as an alias of `ex-theta`.

use scix_core::configs::{build_config, theta_graph, ConfigError, ConfigSpec};
use scix_core::graphcore::{expand, families};
use scix_core::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog name `{0}`; try `scix catalog --list`")]
    Unknown(String),
    #[error("{name}: {msg}")]
    Params { name: String, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// Why an expected value is believed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Stated in the literature the toolkit checks.
    Claimed,
    /// Follows from the construction.
    Construction,
    /// Obtained by running this toolkit and pinned as a fixture.
    Computed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub property: String,
    pub value: String,
    pub basis: Basis,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<usize>,
    pub description: String,
    pub expected: Vec<Expected>,
}

fn exp(property: &str, value: &str, basis: Basis) -> Expected {
    Expected {
        property: property.into(),
        value: value.into(),
        basis,
    }
}

/// The catalog instances checked by `verify-paper`, with expected values.
pub fn entries() -> Vec<CatalogEntry> {
    use Basis::*;
    let entry =
        |name: &str, params: &[usize], description: &str, expected: Vec<Expected>| CatalogEntry {
            name: name.into(),
            params: params.to_vec(),
            description: description.into(),
            expected,
        };
    let mut out = vec![
        entry(
            "prism",
            &[],
            "subcubic planar graph with strong chromatic index 9",
            vec![
                exp("n", "6", Construction),
                exp("m", "9", Construction),
                exp("girth", "3", Construction),
                exp("mad", "3", Construction),
                exp("chi", "9", Claimed),
            ],
        ),
        entry(
            "house",
            &[],
            "sharpness example for mad < 7/3",
            vec![
                exp("n", "6", Construction),
                exp("m", "7", Construction),
                exp("girth", "4", Construction),
                exp("mad", "7/3", Claimed),
                exp("chi>", "6", Claimed),
                exp("chi", "7", Computed),
            ],
        ),
        entry(
            "sharp52",
            &[],
            "sharpness example for mad < 5/2",
            vec![
                exp("n", "8", Construction),
                exp("m", "10", Construction),
                exp("girth", "4", Construction),
                exp("mad", "5/2", Claimed),
                exp("chi>", "7", Claimed),
                exp("chi", "8", Computed),
            ],
        ),
        entry(
            "ex-theta",
            &[3, 4, 3],
            "expanded theta graph with mad 13/6 and strong chromatic index 6",
            vec![
                exp("n", "22", Construction),
                exp("girth", "8", Construction),
                exp("mad", "13/6", Claimed),
                exp("chi", "6", Claimed),
            ],
        ),
        entry(
            "ex-theta",
            &[4, 5, 4],
            "expanded theta graph, parameters counting internal vertices",
            vec![exp("n", "28", Construction), exp("mad", "32/15", Computed)],
        ),
    ];
    for k in [3, 4, 7] {
        out.push(entry(
            "S",
            &[k],
            "exceptional graph of maximum average degree 2",
            vec![exp("mad", "2", Claimed), exp("chi>", "5", Claimed)],
        ));
    }
    for k in [5, 6, 8] {
        out.push(entry(
            "S",
            &[k],
            "cycle with a pendant edge at every vertex",
            vec![exp("mad", "2", Construction), exp("chi<=", "5", Claimed)],
        ));
    }
    out
}

/// Every name accepted by [`catalog_get`], with its parameter synopsis.
pub const NAMES: &[(&str, &str)] = &[
    ("S", "k"),
    ("prism", ""),
    ("house", ""),
    ("sharp52", ""),
    ("theta", "t1 t2 t3"),
    ("ex-theta", "t1 t2 t3"),
    ("cycle", "n"),
    ("path", "n"),
    ("complete", "n"),
    ("cube", ""),
    ("caterpillar", "t [d]"),
];

/// `S_k`: a `k`-cycle with a pendant edge at every vertex; `S_4` has
/// pendants at two adjacent vertices only.
pub fn s_graph(k: usize) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let pendants = if k == 4 { 2 } else { k };
    edges.extend((0..pendants).map(|i| (i, k + i)));
    Graph::from_edges(k + pendants, edges)
}

pub fn house() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5), (5, 3)]).expect("simple")
}

pub fn sharp52() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (0, 4),
        (4, 3),
        (3, 5),
        (5, 0),
        (4, 6),
        (6, 7),
        (7, 5),
    ];
    Graph::from_edges(8, edges).expect("simple")
}

/// Theta graph with one pendant edge at every 2-vertex.
pub fn ex_theta(t1: usize, t2: usize, t3: usize) -> Result<Graph, CatalogError> {
    Ok(expand(&theta_graph(t1, t2, t3)?, 3)?)
}

pub fn catalog_get(name: &str, params: &[usize]) -> Result<Graph, CatalogError> {
    let bad = |msg: &str| CatalogError::Params {
        name: name.into(),
        msg: msg.into(),
    };
    let arity = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(bad(&format!(
                "expected {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "S" => {
            arity(1)?;
            if params[0] < 3 {
                return Err(bad("k must be at least 3"));
            }
            Ok(s_graph(params[0])?)
        }
        "prism" => arity(0).map(|_| families::prism()),
        "house" => arity(0).map(|_| house()),
        "sharp52" => arity(0).map(|_| sharp52()),
        "theta" => {
            arity(3)?;
            Ok(theta_graph(params[0], params[1], params[2])?)
        }
        "ex-theta" | "ex3-theta" => {
            arity(3)?;
            ex_theta(params[0], params[1], params[2])
        }
        "cycle" => {
            arity(1)?;
            if params[0] < 3 {
                return Err(bad("n must be at least 3"));
            }
            Ok(families::cycle(params[0]))
        }
        "path" => {
            arity(1)?;
            if params[0] == 0 {
                return Err(bad("n must be positive"));
            }
            Ok(families::path(params[0]))
        }
        "complete" => {
            arity(1)?;
            Ok(families::complete(params[0]))
        }
        "cube" => arity(0).map(|_| families::cube()),
        "caterpillar" => {
            if params.is_empty() || params.len() > 2 {
                return Err(bad("expected t and optionally d"));
            }
            let d = params.get(1).copied().unwrap_or(3);
            Ok(build_config(&ConfigSpec::caterpillar(params[0], d, 5))?.graph)
        }
        _ => Err(CatalogError::Unknown(name.into())),
    }
}
