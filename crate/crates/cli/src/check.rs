//! `check`: runs the validators over parameter ranges.

use std::ops::RangeInclusive;

use anyhow::{bail, Context, Result};
use clap::Args;
use clique_powers::checks::{self, TheoremReport};
use clique_powers::homology::Tier;
use clique_powers::{Error, Limits};

use crate::source::{read_complex, GraphSource};

pub const THEOREMS: &[&str] = &[
    "table",
    "kozlov",
    "girth-collapse",
    "girth-sharpness",
    "circular-suspension",
    "sgraph-suspension",
    "suspension-recursions",
    "star-cluster",
    "total-and-line",
    "universality",
    "ball-distance",
    "h1-surjective",
    "square-condition",
    "square-condition-exhaustive",
    "fold-power",
    "prediction-consistency",
];

/// Inclusive integer range written `a..b`, `a..=b` or `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<usize>);

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Span, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("{t:?} is not a non-negative integer"));
        match s.split_once("..") {
            None => {
                let v = num(s)?;
                Ok(Span(v..=v))
            }
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
                if a > b {
                    return Err(format!("empty range {s}"));
                }
                Ok(Span(a..=b))
            }
        }
    }
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Theorem id (run with an unknown id to list them)
    pub theorem: String,
    #[arg(long)]
    pub n: Option<Span>,
    #[arg(long)]
    pub r: Option<Span>,
    #[arg(long)]
    pub m: Option<Span>,
    #[arg(long)]
    pub k: Option<Span>,
    #[arg(long)]
    pub s: Option<Span>,
    #[arg(long)]
    pub u: Option<u32>,
    #[arg(long)]
    pub v: Option<u32>,
    #[arg(long, value_enum, default_value_t = crate::TierArg::Auto)]
    pub tier: crate::TierArg,
    #[command(flatten)]
    pub graph: GraphSource,
}

fn span(s: &Option<Span>, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
    s.as_ref().map_or(default, |s| s.0.clone())
}

fn required(s: &Option<Span>, flag: &str, theorem: &str) -> Result<RangeInclusive<usize>> {
    match s {
        Some(s) => Ok(s.0.clone()),
        None => bail!("{theorem} needs --{flag}"),
    }
}

/// Runs `f` on each parameter combination. With more than one combination,
/// those violating the validator's preconditions are skipped.
fn sweep<P: Copy>(combos: Vec<P>, mut f: impl FnMut(P) -> clique_powers::Result<TheoremReport>) -> Result<Vec<TheoremReport>> {
    let single = combos.len() == 1;
    let mut out = Vec::new();
    for c in combos {
        match f(c) {
            Ok(rep) => out.push(rep),
            Err(Error::Precondition(_) | Error::InvalidParams(_)) if !single => {}
            Err(e) => return Err(e.into()),
        }
    }
    if out.is_empty() {
        bail!("no parameter combination satisfies the preconditions");
    }
    Ok(out)
}

fn pairs(a: RangeInclusive<usize>, b: impl Fn(usize) -> RangeInclusive<usize>) -> Vec<(usize, usize)> {
    a.flat_map(|x| b(x).map(move |y| (x, y))).collect()
}

pub fn run_check(args: &CheckArgs, limits: &Limits) -> Result<Vec<TheoremReport>> {
    let id = args.theorem.as_str();
    let graph = || -> Result<clique_powers::Graph> {
        if !args.graph.is_given() {
            bail!("{id} needs a graph: --family NAME PARAMS or --input FILE");
        }
        Ok(args.graph.build(limits)?.graph)
    };
    let complex = || match &args.graph.options.complex_input {
        Some(p) => read_complex(p),
        None => bail!("{id} needs --complex-input FILE"),
    };
    let r_or = |d: usize| span(&args.r, d..=d);
    let tier: Tier = args.tier.into();
    match id {
        "table" => {
            let combos = match &args.r {
                Some(r) => pairs(span(&args.n, 3..=20), |_| r.0.clone()),
                None => pairs(span(&args.n, 3..=20), |n| 0..=n / 2),
            };
            sweep(combos, |(n, r)| checks::validate_table_cell(n, r, tier, limits))
        }
        "kozlov" => sweep(span(&args.m, 3..=21).collect(), |m| checks::validate_kozlov(m, limits)),
        "girth-collapse" => {
            let g = graph()?;
            sweep(r_or(2).collect(), |r| checks::validate_girth_collapse(&g, r as u32, limits))
        }
        "girth-sharpness" => sweep(span(&args.r, 2..=3).collect(), |r| checks::validate_girth_sharpness(r, limits)),
        "circular-suspension" | "sgraph-suspension" | "suspension-recursions" => {
            let combos = pairs(span(&args.n, 3..=18), |_| span(&args.k, 1..=8));
            sweep(combos, |(n, k)| match id {
                "circular-suspension" => checks::validate_circular_suspension(n, k, limits),
                "sgraph-suspension" => checks::validate_sgraph_suspension(n, k, limits),
                _ => checks::validate_suspension_props(n, k, limits),
            })
        }
        "star-cluster" => {
            let g = graph()?;
            let v = args.v.unwrap_or(0);
            Ok(vec![checks::validate_star_cluster(&g, v, limits)?])
        }
        "total-and-line" => Ok(vec![checks::validate_total_and_line(&graph()?, limits)?]),
        "universality" => {
            let k = complex()?;
            let combos = pairs(required(&args.s, "s", id)?, |_| required(&args.r, "r", id).unwrap_or(1..=1));
            sweep(combos, |(s, r)| checks::validate_universality(&k, s as u32, r as u32, limits))
        }
        "ball-distance" => {
            let k = complex()?;
            let (Some(u), Some(v)) = (args.u, args.v) else { bail!("{id} needs --u and --v") };
            sweep(required(&args.s, "s", id)?.collect(), |s| checks::validate_distance_lemma(&k, s as u32, u, v, limits))
        }
        "h1-surjective" => {
            let g = graph()?;
            sweep(r_or(2).collect(), |r| checks::validate_h1_surjectivity(&g, r as u32, limits))
        }
        "square-condition" => Ok(vec![checks::validate_square_condition(&graph()?, limits)?]),
        "square-condition-exhaustive" => {
            sweep(span(&args.n, 6..=6).collect(), |n| checks::validate_square_condition_exhaustive(n, limits))
        }
        "fold-power" => {
            let g = graph()?;
            sweep(r_or(2).collect(), |r| checks::validate_fold_power(&g, r as u32))
        }
        "prediction-consistency" => {
            let n_max = *span(&args.n, 60..=60).end();
            Ok(vec![checks::validate_prediction_consistency(n_max).context("prediction consistency")?])
        }
        other => bail!("unknown theorem id {other:?}; available: {}", THEOREMS.join(", ")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("3..20".parse::<Span>().unwrap(), Span(3..=20));
        assert_eq!("3..=20".parse::<Span>().unwrap(), Span(3..=20));
        assert_eq!("7".parse::<Span>().unwrap(), Span(7..=7));
        assert!("5..3".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
    }
}
