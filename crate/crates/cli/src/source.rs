//! Graphs named on the command line: a family with parameters, or an
//! edge-list file.

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use clique_powers::families::{self, CircularParams};
use clique_powers::graph::{read_edge_list, Graph};
use clique_powers::{Limits, SimplicialComplex};

pub const FAMILIES: &[&str] = &[
    "cycle", "path", "complete", "circular", "sgraph", "threesun", "line", "subdiv", "total", "kneser", "gss", "random",
    "tree",
];

/// Options shared by every family.
#[derive(Args, Clone, Debug)]
pub struct FamilyOptions {
    /// Edge-list file: the graph itself, or the base graph for line, subdiv and total
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Seed for random and tree
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge probability for random
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Complex file (facet format) for gss and the complex-based checks
    #[arg(long)]
    pub complex_input: Option<PathBuf>,
}

/// A graph given either by `--family NAME PARAMS...` or by `--input FILE`.
#[derive(Args, Clone, Debug)]
pub struct GraphSource {
    /// Family name followed by its integer parameters, e.g. `--family circular 9 2`
    #[arg(long, num_args = 1.., value_name = "NAME [PARAMS]", allow_negative_numbers = true)]
    pub family: Option<Vec<String>>,
    #[command(flatten)]
    pub options: FamilyOptions,
}

/// A generated graph with the metadata written as edge-list comments.
pub struct Built {
    pub graph: Graph,
    pub header: Vec<String>,
}

impl GraphSource {
    pub fn is_given(&self) -> bool {
        self.family.is_some() || self.options.input.is_some()
    }

    pub fn build(&self, limits: &Limits) -> Result<Built> {
        match &self.family {
            Some(spec) => build_family(&spec[0], &spec[1..], &self.options, limits),
            None => match &self.options.input {
                Some(path) => Ok(Built {
                    graph: read_graph(path)?,
                    header: vec![format!("source: {}", path.display())],
                }),
                None => bail!("no graph given: pass --family NAME PARAMS or --input FILE"),
            },
        }
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    read_edge_list(BufReader::new(file)).with_context(|| format!("cannot read {}", path.display()))
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    SimplicialComplex::read_facets(BufReader::new(file)).with_context(|| format!("cannot read {}", path.display()))
}

fn ints(name: &str, params: &[String], count: usize) -> Result<Vec<usize>> {
    if params.len() != count {
        bail!("family {name} takes {count} integer parameter(s), got {}", params.len());
    }
    params
        .iter()
        .map(|p| p.parse::<usize>().with_context(|| format!("parameter {p:?} of {name} is not a non-negative integer")))
        .collect()
}

fn base_graph(name: &str, opts: &FamilyOptions) -> Result<Graph> {
    match &opts.input {
        Some(path) => read_graph(path),
        None => bail!("family {name} needs a base graph via --input FILE"),
    }
}

pub fn build_family(name: &str, params: &[String], opts: &FamilyOptions, limits: &Limits) -> Result<Built> {
    let derived = matches!(name, "line" | "subdiv" | "total");
    if opts.input.is_some() && !derived {
        bail!("--input is only used by the line, subdiv and total families");
    }
    let mut header = vec![format!("family: {name}")];
    if !params.is_empty() {
        header.push(format!("params: {}", params.join(" ")));
    }
    let graph = match name {
        "cycle" => families::cycle(ints(name, params, 1)?[0])?,
        "path" => families::path(ints(name, params, 1)?[0])?,
        "complete" => families::complete(ints(name, params, 1)?[0]),
        "circular" => {
            let v = ints(name, params, 2)?;
            let c = CircularParams::new(v[0], v[1])?;
            header.push(format!("complement of power {} of the {}-cycle", c.r(), c.n()));
            families::circular_complete(v[0], v[1])?
        }
        "sgraph" => {
            let v = ints(name, params, 2)?;
            let s = families::s_graph(v[0], v[1])?;
            let labels: Vec<String> = s.labels.iter().map(i64::to_string).collect();
            header.push(format!("labels: {}", labels.join(" ")));
            s.graph
        }
        "threesun" => {
            ints(name, params, 0)?;
            families::three_sun()
        }
        "line" => {
            ints(name, params, 0)?;
            families::line_graph(&base_graph(name, opts)?)?
        }
        "subdiv" => {
            ints(name, params, 0)?;
            families::subdivision(&base_graph(name, opts)?)
        }
        "total" => {
            ints(name, params, 0)?;
            families::total_graph(&base_graph(name, opts)?)
        }
        "kneser" => {
            let v = ints(name, params, 2)?;
            let (g, sets) = families::stable_kneser(v[0], v[1])?;
            let sets: Vec<String> =
                sets.iter().map(|s| s.iter().map(u32::to_string).collect::<Vec<_>>().join(",")).collect();
            header.push(format!("vertex sets: {}", sets.join(" ")));
            g
        }
        "gss" => {
            let s = ints(name, params, 1)?[0];
            let Some(path) = &opts.complex_input else {
                bail!("family gss needs a complex via --complex-input FILE");
            };
            let k = read_complex(path)?;
            let gs = families::subdivided_skeleton(&k, s as u32, limits)?;
            header.push(format!("subdivisions: {s}"));
            gs.graph
        }
        "random" => {
            let n = ints(name, params, 1)?[0];
            header.push(format!("p: {} seed: {} prng: {}", opts.p, opts.seed, families::PRNG_ALGORITHM));
            families::random_graph(n, opts.p, opts.seed)?
        }
        "tree" => {
            let n = ints(name, params, 1)?[0];
            header.push(format!("seed: {} prng: {}", opts.seed, families::PRNG_ALGORITHM));
            families::random_tree(n, opts.seed)?
        }
        other => bail!("unknown family {other:?}; available: {}", FAMILIES.join(", ")),
    };
    Ok(Built { graph, header })
}
