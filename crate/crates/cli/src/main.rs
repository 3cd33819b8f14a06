use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use scix_core::configs::{check_reducible, claim_list, ConfigSpec, Family, ReducibilityVerdict};
use scix_core::discharging::{
    audit_case_arithmetic, audit_face_inequality, run_rules_list, run_rules_sparse3,
    run_rules_sparse4, ChargeState,
};
use scix_core::graphcore::{
    contract, emit_edge_list, emit_graph6, expand, girth, mad_with_witness,
};
use scix_core::nullstellensatz::{caterpillar_polynomial, cn_certificate};
use scix_core::solver::{decide_list, decide_strong, EdgeColoring, ListAssignment, StrongSolver};
use scix_core::{Embedding, Graph};
use serde::Serialize;

use scix::cache::Cache;
use scix::catalog::{catalog_get, NAMES};
use scix::parse_graph_auto;
use scix::verify::{verify_paper, witness_blocks, Scope, VerifyOptions};

/// Like `println!`, but a closed pipe is not an error.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! outp {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "scix",
    version,
    about = "Strong edge-coloring verification toolkit"
)]
struct Cli {
    /// Ignore and do not write the results cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, edge list or graph6.
    #[arg(long, conflicts_with = "name")]
    input: Option<PathBuf>,
    /// Catalog graph instead of a file.
    #[arg(long)]
    name: Option<String>,
    /// Catalog parameters, comma separated.
    #[arg(long, value_delimiter = ',', requires = "name")]
    params: Vec<usize>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        match (&self.input, &self.name) {
            (Some(p), _) => {
                let text = read(p)?;
                parse_graph_auto(&text).with_context(|| format!("parsing {}", p.display()))
            }
            (None, Some(n)) => Ok(catalog_get(n, &self.params)?),
            (None, None) => bail!("give --input <file> or --name <catalog name>"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    El,
    G6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ruleset {
    Sparse3,
    Sparse4,
}

#[derive(Subcommand)]
enum Cmd {
    /// Strong chromatic index with an optimal coloring.
    Chi {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Strong k-edge-coloring extending an optional precoloring.
    Decide {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        graph: GraphInput,
        /// Lines `c <u> <v> <color>`.
        #[arg(long)]
        fixed: Option<PathBuf>,
    },
    /// Strong coloring from per-edge lists.
    ListDecide {
        /// Lines `l <u> <v> <color> ...`.
        #[arg(long)]
        lists: PathBuf,
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Exact maximum average degree with a densest subgraph.
    Mad {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Length of a shortest cycle, or `inf` for a forest.
    Girth {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Deletes the 1-vertices.
    Contract {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value = "el")]
        emit: Emit,
    },
    /// Adds pendant edges up to degree d.
    Expand {
        #[arg(short)]
        d: usize,
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value = "el")]
        emit: Emit,
    },
    /// Reducible configurations.
    Config {
        #[command(subcommand)]
        cmd: ConfigCmd,
    },
    /// Nullstellensatz coefficient for the caterpillar polynomial.
    Cn {
        #[arg(long)]
        caterpillar: usize,
        #[arg(short, default_value_t = 5)]
        k: usize,
        /// Writes the factors, one per line.
        #[arg(long)]
        emit_poly: Option<PathBuf>,
    },
    /// Runs a discharging rule set on a contracted graph.
    Discharge {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum)]
        ruleset: Ruleset,
    },
    /// Runs the face rules on a plane embedding.
    DischargeList {
        /// Edge list plus `r <v> <neighbors in cyclic order>` lines.
        #[arg(long)]
        embedding: PathBuf,
        #[arg(long)]
        p: usize,
    },
    /// Exact arithmetic audits.
    Audit {
        #[arg(long, conflicts_with = "cases", required_unless_present = "cases")]
        face_lmax: Option<usize>,
        #[arg(long)]
        cases: bool,
    },
    /// Named graphs.
    Catalog {
        #[arg(long, required_unless_present = "list")]
        name: Option<String>,
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value = "el")]
        emit: Emit,
        #[arg(long)]
        list: bool,
    },
    /// Runs the regression suite.
    VerifyPaper {
        /// Writes the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Scopes to run: catalog, critical, theta, cn, claims, discharging.
        #[arg(long, value_delimiter = ',')]
        only: Vec<Scope>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Falsification harness trials.
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
    },
    /// Rewrites the cache file without duplicates or damaged lines.
    CacheCompact,
}

#[derive(Subcommand)]
enum ConfigCmd {
    /// Decides k-reducibility of one configuration.
    Check {
        #[arg(long)]
        family: Family,
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long = "max-degree")]
        max_degree: usize,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Checks every listed configuration for a maximum degree.
    VerifyClaims {
        #[arg(long = "max-degree")]
        max_degree: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Serialize)]
struct ClaimRecord {
    spec: String,
    expected: String,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<EdgeColoring>,
    precolorings: u64,
    seconds: f64,
}

fn read(p: &Path) -> Result<String> {
    fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
}

fn write(p: &Path, text: &str) -> Result<()> {
    fs::write(p, text).with_context(|| format!("writing {}", p.display()))
}

fn emit(g: &Graph, how: Emit) -> String {
    match how {
        Emit::El => emit_edge_list(g),
        Emit::G6 => emit_graph6(g) + "\n",
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}

fn print_charges(s: &ChargeState) {
    for (x, c) in &s.charge {
        out!("{x} {c}");
    }
    if let Some((v, c)) = s.min_vertex_charge() {
        out!("min v{v} {c}");
    }
    out!(
        "total {} conserved {} moves {}",
        s.total,
        s.is_conserved(),
        s.moves
    );
    for f in &s.flags {
        out!("flag {f}");
    }
}

fn cached_verdict(cache: &Cache, spec: &ConfigSpec) -> Result<ReducibilityVerdict> {
    Ok(cache.get_or_compute("check_reducible", spec, || check_reducible(spec))?)
}

fn run(cli: Cli) -> Result<bool> {
    let cache = if cli.no_cache {
        Cache::disabled()
    } else {
        Cache::from_env().context("opening the results cache")?
    };
    match cli.cmd {
        Cmd::Chi { graph } => {
            let g = graph.load()?;
            let (k, c) = StrongSolver::new(&g).chi()?;
            out!("chi {k}");
            outp!("{}", c.to_text());
        }
        Cmd::Decide { k, graph, fixed } => {
            let g = graph.load()?;
            let fixed = match fixed {
                Some(p) => EdgeColoring::parse(&read(&p)?).map_err(anyhow::Error::msg)?,
                None => EdgeColoring::new(),
            };
            match decide_strong(&g, k, &fixed)? {
                Some(c) => {
                    out!("colorable {k}");
                    outp!("{}", c.to_text());
                }
                None => out!("not colorable {k}"),
            }
        }
        Cmd::ListDecide { lists, graph } => {
            let g = graph.load()?;
            let lists = ListAssignment::parse(&read(&lists)?).map_err(anyhow::Error::msg)?;
            match decide_list(&g, &lists)? {
                Some(c) => {
                    out!("colorable");
                    outp!("{}", c.to_text());
                }
                None => out!("not colorable"),
            }
        }
        Cmd::Mad { graph } => {
            let g = graph.load()?;
            let (mad, witness) = mad_with_witness(&g);
            out!("mad {mad}");
            let w: Vec<String> = witness.iter().map(ToString::to_string).collect();
            out!("subgraph {}", w.join(" "));
        }
        Cmd::Girth { graph } => {
            let g = graph.load()?;
            match girth(&g).finite() {
                Some(x) => out!("girth {x}"),
                None => out!("girth inf"),
            }
        }
        Cmd::Contract { graph, emit: how } => {
            outp!("{}", emit(&contract(&graph.load()?).graph, how))
        }
        Cmd::Expand {
            d,
            graph,
            emit: how,
        } => outp!("{}", emit(&expand(&graph.load()?, d)?, how)),
        Cmd::Config { cmd } => return config(cmd, &cache),
        Cmd::Cn {
            caterpillar,
            k,
            emit_poly,
        } => {
            if let Some(p) = emit_poly {
                write(&p, &caterpillar_polynomial(caterpillar)?.to_text())?;
            }
            let cert = cn_certificate(&ConfigSpec::caterpillar(caterpillar, 3, k))?;
            out!("coefficient {}", cert.coefficient);
            out!("{}", if cert.ok { "ok" } else { "not certified" });
            return Ok(cert.ok);
        }
        Cmd::Discharge { graph, ruleset } => {
            let g = graph.load()?;
            let s = match ruleset {
                Ruleset::Sparse3 => run_rules_sparse3(&g)?,
                Ruleset::Sparse4 => run_rules_sparse4(&g)?,
            };
            print_charges(&s);
            return Ok(s.is_conserved());
        }
        Cmd::DischargeList { embedding, p } => {
            let e = Embedding::parse(&read(&embedding)?)?;
            let s = run_rules_list(&e, p)?;
            print_charges(&s);
            return Ok(s.is_conserved());
        }
        Cmd::Audit { face_lmax, cases } => {
            if cases {
                let checks = audit_case_arithmetic();
                for c in &checks {
                    out!("{} {c}", if c.holds { "PASS" } else { "FAIL" });
                }
                return Ok(checks.iter().all(|c| c.holds));
            }
            let a = audit_face_inequality(face_lmax.expect("clap requires one flag"))?;
            out!("{}", serde_json::to_string_pretty(&a)?);
            return Ok(a.passed());
        }
        Cmd::Catalog {
            name,
            params,
            emit: how,
            list,
        } => {
            if list {
                for (n, p) in NAMES {
                    out!("{n} {p}");
                }
            } else {
                let name = name.expect("clap requires --name");
                outp!("{}", emit(&catalog_get(&name, &params)?, how));
            }
        }
        Cmd::VerifyPaper {
            report,
            only,
            jobs,
            seed,
            trials,
        } => {
            let opts = VerifyOptions {
                scopes: if only.is_empty() {
                    Scope::ALL.to_vec()
                } else {
                    only
                },
                jobs,
                seed,
                trials,
                ..VerifyOptions::default()
            };
            let r = verify_paper(&opts, &cache);
            outp!("{}", r.to_text());
            if let Some(p) = report {
                write(&p, &(r.to_json() + "\n"))?;
            }
            return Ok(r.passed());
        }
        Cmd::CacheCompact => {
            let kept = cache.compact()?;
            out!("kept {kept} records");
        }
    }
    Ok(true)
}

fn config(cmd: ConfigCmd, cache: &Cache) -> Result<bool> {
    match cmd {
        ConfigCmd::Check {
            family,
            params,
            max_degree,
            k,
            jobs,
        } => {
            let spec = ConfigSpec::new(family, &params, max_degree, k);
            let start = Instant::now();
            let v = pool(jobs)?.install(|| cached_verdict(cache, &spec))?;
            out!("{spec}: {}", v.status);
            out!(
                "precolorings {} extensions solved {} seconds {:.2}",
                v.stats.precolorings,
                v.stats.extensions_solved,
                start.elapsed().as_secs_f64()
            );
            if let Some(w) = &v.witness {
                out!("witness");
                outp!("{}", w.to_text());
            }
        }
        ConfigCmd::VerifyClaims {
            max_degree,
            report,
            jobs,
        } => {
            let list = claim_list(max_degree);
            if list.is_empty() {
                bail!("no claims are listed for maximum degree {max_degree}");
            }
            let pool = pool(jobs)?;
            let mut records = Vec::new();
            let mut all = true;
            for (spec, expected) in list {
                let start = Instant::now();
                let v = pool.install(|| cached_verdict(cache, &spec))?;
                let mut ok = v.status == expected;
                if v.witness.is_some() {
                    ok &= witness_blocks(&spec, &v);
                }
                all &= ok;
                out!(
                    "{} {spec}: {} (expected {expected})",
                    if ok { "PASS" } else { "FAIL" },
                    v.status
                );
                records.push(ClaimRecord {
                    spec: spec.to_string(),
                    expected: expected.to_string(),
                    status: v.status.to_string(),
                    witness: v.witness,
                    precolorings: v.stats.precolorings,
                    seconds: start.elapsed().as_secs_f64(),
                });
            }
            out!("cache hits {} misses {}", cache.hits(), cache.misses());
            if let Some(p) = report {
                write(&p, &(serde_json::to_string_pretty(&records)? + "\n"))?;
            }
            return Ok(all);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
