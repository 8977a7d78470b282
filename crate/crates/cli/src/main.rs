use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use chowtaut::cache::Cache;
use chowtaut::catalog::CatalogError;
use chowtaut::certificate::certify;
use chowtaut::{parse_expr, Catalog, ParseError};
use chowtaut_core::oracle::{adjudicate_signs, span_dimensions, CohomologyModel};
use chowtaut_core::{RingParams, SignConvention, TautRing};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "chowtaut", version, about = "Exact tautological rings of powers of Picard-rank-1 Fano threefolds")]
struct Cli {
    /// Sign convention for the τ² and shared-index relations.
    #[arg(long, value_enum, default_value_t = Signs::Adjudicated, global = true)]
    signs: Signs,
    /// Use this catalog (one JSON record per line) instead of the built-in one.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Signs {
    Adjudicated,
    Literal,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print one catalog record as JSON.
    Get { label: String },
    /// Graded dimensions of R*(Y^m).
    Dims {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        codim: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Bypass the dimension cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Check the Chow–Künneth identities and print a certificate.
    VerifyCk(Target),
    /// Check the Chow–Künneth identities and the multiplicative condition.
    VerifyMck(Target),
    /// Compare graded dimensions against the cohomology tensor model.
    OracleCompare {
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_codim: Option<usize>,
    },
    /// Normal form of an expression modulo all relations.
    Reduce {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        m: usize,
        expr: String,
    },
    /// Read the relation signs off the tensor model.
    Adjudicate {
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long)]
        b: u32,
        /// Power of Y whose subalgebra dimensions are reported.
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
}

#[derive(Args)]
#[group(required = true)]
struct Target {
    #[arg(long, conflicts_with_all = ["d", "b"])]
    label: Option<String>,
    #[arg(long, requires = "b")]
    d: Option<u32>,
    #[arg(long, requires = "d")]
    b: Option<u32>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            let kind = if err.downcast_ref::<ParseError>().is_some() {
                "parse"
            } else if err.downcast_ref::<CatalogError>().is_some() {
                "catalog"
            } else if err.downcast_ref::<chowtaut_core::Error>().is_some() {
                "input"
            } else {
                "error"
            };
            let mut body = json!({ "error": kind, "message": format!("{err:#}") });
            if let Some(p) = err.downcast_ref::<ParseError>() {
                body["position"] = json!(p.pos());
            }
            eprintln!("{body}");
            ExitCode::from(2)
        }
    }
}

fn signs(s: Signs) -> SignConvention {
    match s {
        Signs::Adjudicated => SignConvention::adjudicated(),
        Signs::Literal => SignConvention::literal(),
    }
}

fn catalog(path: &Option<PathBuf>) -> anyhow::Result<Catalog> {
    Ok(match path {
        Some(p) => Catalog::load(p).with_context(|| format!("loading {}", p.display()))?,
        None => Catalog::embedded(),
    })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let signs = signs(cli.signs);
    match cli.command {
        Command::List { json } => {
            let cat = catalog(&cli.catalog)?;
            if json {
                print!("{}", cat.to_jsonl());
            } else {
                println!("{:<7} {:>5} {:>6} {:>4}  {:<45} mck", "label", "index", "degree", "h12", "description");
                for r in cat.records() {
                    println!("{:<7} {:>5} {:>6} {:>4}  {:<45} {}", r.label, r.index, r.degree, r.h12, r.description, r.mck_status);
                }
            }
        }
        Command::Get { label } => {
            let cat = catalog(&cli.catalog)?;
            println!("{}", serde_json::to_string_pretty(cat.get(&label)?)?);
        }
        Command::Dims { d, b, m, codim, json, no_cache } => {
            let ring = TautRing::new(RingParams::with_signs(d, b, m, signs)?);
            let cache = if no_cache { None } else { Cache::from_env() };
            let dim = |c: usize| -> anyhow::Result<usize> {
                match &cache {
                    Some(cache) => cache.graded_dimension(&ring, c),
                    None => Ok(ring.graded_dimension(c)?),
                }
            };
            match codim {
                Some(c) => println!("{}", dim(c)?),
                None => {
                    let dims = (0..=3 * m).map(dim).collect::<anyhow::Result<Vec<_>>>()?;
                    if json {
                        println!("{}", serde_json::to_string(&dims)?);
                    } else {
                        for (c, v) in dims.iter().enumerate() {
                            println!("{c}\t{v}");
                        }
                    }
                }
            }
        }
        Command::VerifyCk(target) => return verify(&cli.catalog, target, signs, false),
        Command::VerifyMck(target) => return verify(&cli.catalog, target, signs, true),
        Command::OracleCompare { d, b, m, max_codim } => {
            let ring = TautRing::new(RingParams::with_signs(d, b, m, signs)?);
            let top = max_codim.unwrap_or(3 * m).min(3 * m);
            let ring_dims = (0..=top).map(|c| ring.graded_dimension(c)).collect::<Result<Vec<_>, _>>()?;
            let mut oracle_dims = span_dimensions(&CohomologyModel::standard(d, b), m)?;
            oracle_dims.truncate(top + 1);
            let equal = ring_dims == oracle_dims;
            println!("{}", json!({ "d": d, "b": b, "m": m, "ring": ring_dims, "oracle": oracle_dims, "equal": equal }));
            if !equal {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Reduce { d, b, m, expr } => {
            let ring = TautRing::new(RingParams::with_signs(d, b, m, signs)?);
            let cls = parse_expr(&expr, &ring)?;
            println!("{}", ring.reduce(&cls)?);
        }
        Command::Adjudicate { d, b, m } => {
            let report = adjudicate_signs(&CohomologyModel::standard(d, b), Some(m))?;
            println!("{}", serde_json::to_string(&report)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(cat: &Option<PathBuf>, target: Target, signs: SignConvention, with_mck: bool) -> anyhow::Result<ExitCode> {
    let (label, d, b) = match (target.label, target.d, target.b) {
        (Some(label), _, _) => {
            let cat = catalog(cat)?;
            let r = cat.get(&label)?;
            (Some(label), r.degree, r.h12)
        }
        (None, Some(d), Some(b)) => (None, d, b),
        _ => bail!("give either --label or both --d and --b"),
    };
    let cert = certify(RingParams::with_signs(d, b, 3, signs)?, label.as_deref(), with_mck)?;
    println!("{}", serde_json::to_string_pretty(&cert)?);
    Ok(if cert.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
