use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use clique_powers::checks::{predict_clique_cycle_power, render_csv, render_markdown, TableEntry};
use clique_powers::complex::{clique_complex, independence_complex};
use clique_powers::families::cycle;
use clique_powers::graph::{complement, power, write_edge_list, Graph};
use clique_powers::homology::{clique_homology, Tier};
use clique_powers::{Limits, SimplicialComplex, SCHEMA_VERSION};
use serde_json::json;

mod check;
mod source;

use check::CheckArgs;
use source::{build_family, FamilyOptions, GraphSource};

/// Clique complexes of graph powers: generators, exact homology and
/// machine checks. The face ceiling can be raised with the
/// CLIQUE_POWERS_FACE_LIMIT environment variable.
#[derive(Parser, Debug)]
#[command(name = "clique-powers", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph from a named family as an edge list
    Gen {
        /// cycle, path, complete, circular, sgraph, threesun, line, subdiv, total, kneser, gss, random, tree
        family: String,
        /// Integer parameters of the family
        params: Vec<String>,
        #[command(flatten)]
        options: FamilyOptions,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the r-th power of a graph
    Power {
        r: u32,
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build the clique or independence complex of a graph power
    Complex {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[arg(long, value_enum, default_value_t = ComplexKind::Clique)]
        complex: ComplexKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Homology of the clique or independence complex of a graph power
    Homology {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[arg(long, value_enum, default_value_t = ComplexKind::Clique)]
        complex: ComplexKind,
        #[arg(long, value_enum, default_value_t = TierArg::Auto)]
        tier: TierArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a validator and report pass or fail
    Check {
        #[command(flatten)]
        args: CheckArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Table of homotopy types of the clique complexes of cycle powers,
    /// each cell computed and compared with the closed form
    Table {
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, value_enum, default_value_t = TierArg::Auto)]
        tier: TierArg,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ComplexKind {
    Clique,
    Independence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TierArg {
    Exact,
    Field,
    Auto,
}

impl From<TierArg> for Tier {
    fn from(t: TierArg) -> Tier {
        match t {
            TierArg::Exact => Tier::Exact,
            TierArg::Field => Tier::Field,
            TierArg::Auto => Tier::Auto,
        }
    }
}

fn sink(output: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn expect_format(format: Format, allowed: &[Format], command: &str) -> Result<()> {
    if !allowed.contains(&format) {
        bail!("{command} does not support --format {format:?}");
    }
    Ok(())
}

/// The graph whose clique complex realises the requested complex of `G^r`.
fn complex_graph(g: &Graph, r: u32, kind: ComplexKind) -> Graph {
    let p = power(g, r);
    match kind {
        ComplexKind::Clique => p,
        ComplexKind::Independence => complement(&p),
    }
}

fn kind_name(kind: ComplexKind) -> &'static str {
    match kind {
        ComplexKind::Clique => "clique",
        ComplexKind::Independence => "independence",
    }
}

/// Returns whether every check passed.
fn run(cli: Cli) -> Result<bool> {
    let limits = Limits::from_env();
    match cli.command {
        Command::Gen { family, params, options, output } => {
            let built = build_family(&family, &params, &options, &limits)?;
            let mut out = sink(&output)?;
            write_edge_list(&built.graph, &built.header, &mut out)?;
            out.flush()?;
        }
        Command::Power { r, graph, output } => {
            let mut built = graph.build(&limits)?;
            built.header.push(format!("power: {r}"));
            let mut out = sink(&output)?;
            write_edge_list(&power(&built.graph, r), &built.header, &mut out)?;
            out.flush()?;
        }
        Command::Complex { graph, power: r, complex, format, output } => {
            expect_format(format, &[Format::Text, Format::Json], "complex")?;
            let g = power(&graph.build(&limits)?.graph, r);
            let k: SimplicialComplex = match complex {
                ComplexKind::Clique => clique_complex(&g, None, &limits)?,
                ComplexKind::Independence => independence_complex(&g, &limits)?,
            };
            let mut out = sink(&output)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&k.summary())?)?,
                _ => k.write_facets(&mut out)?,
            }
            out.flush()?;
        }
        Command::Homology { graph, power: r, complex, tier, format } => {
            expect_format(format, &[Format::Text, Format::Json], "homology")?;
            let g = complex_graph(&graph.build(&limits)?.graph, r, complex);
            let h = clique_homology(&g, tier.into(), &limits)?;
            if format == Format::Json {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "complex": kind_name(complex),
                    "power": r,
                    "result": h,
                });
                println!("{doc}");
            } else {
                println!("betti: {}", serde_json::to_string(&h.profile.betti)?);
                if h.tier == Tier::Exact {
                    println!("torsion: {}", serde_json::to_string(&h.profile.torsion)?);
                } else {
                    println!("betti mod 2: {}", serde_json::to_string(&h.betti_mod2)?);
                }
                if h.profile.betti_minus_one > 0 {
                    println!("betti in degree -1: {}", h.profile.betti_minus_one);
                }
                println!(
                    "tier: {}, faces: {}, surviving cells: {}, folded vertices: {}",
                    if h.tier == Tier::Exact { "exact" } else { "field" },
                    h.faces,
                    h.surviving_cells,
                    h.folded_vertices
                );
            }
        }
        Command::Check { args, format } => {
            expect_format(format, &[Format::Text, Format::Json], "check")?;
            let reports = check::run_check(&args, &limits)?;
            let all = reports.iter().all(|r| r.passed());
            if format == Format::Json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for rep in &reports {
                    println!("{} {} {}", if rep.passed() { "PASS" } else { "FAIL" }, rep.theorem, rep.params);
                    if let Some(c) = &rep.counterexample {
                        println!("  counterexample: {c}");
                    }
                }
                let passed = reports.iter().filter(|r| r.passed()).count();
                println!("{passed} of {} passed", reports.len());
            }
            return Ok(all);
        }
        Command::Table { n_max, n_min, tier, format } => {
            expect_format(format, &[Format::Markdown, Format::Csv, Format::Json], "table")?;
            if n_min < 3 || n_max < n_min {
                bail!("need 3 <= n-min <= n-max");
            }
            let mut entries = Vec::new();
            for n in n_min..=n_max {
                for r in 0..=n / 2 {
                    let pred = predict_clique_cycle_power(n, r)?;
                    let h = clique_homology(&power(&cycle(n)?, r as u32), tier.into(), &limits)?;
                    entries.push(TableEntry { n, r, agrees: Some(h.matches(&pred)), homotopy_type: pred });
                }
            }
            let all = entries.iter().all(|e| e.agrees == Some(true));
            match format {
                Format::Csv => print!("{}", render_csv(&entries)),
                Format::Json => {
                    let cells: Vec<_> = entries
                        .iter()
                        .map(|e| json!({"n": e.n, "r": e.r, "type": e.homotopy_type.render(), "agrees": e.agrees}))
                        .collect();
                    println!("{}", json!({"schema_version": SCHEMA_VERSION, "cells": cells}));
                }
                _ => print!("{}", render_markdown(&entries)),
            }
            return Ok(all);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
