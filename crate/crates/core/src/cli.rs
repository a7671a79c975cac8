//! `ktree-dom` command line: `gen`, `check`, `dominate`, `exact`, `bench`.
//!
//! Exit codes: 0 success, 1 invalid input / not a k-tree / I/O failure,
//! 2 oracle node limit exceeded.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, write_csv, BenchConfig};
use crate::domination::{bound_value, construct_independent_dominating_set, verify_certificate};
use crate::error::{Error, Result};
use crate::generators::GenSpec;
use crate::instance::{self, Instance};
use crate::ktree::{recognize, KTree};
use crate::oracle::{exact_gamma_i, DEFAULT_NODE_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_LIMIT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ktree-dom",
    version,
    about = "Independent domination of k-trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Complete,
    Random,
    Kpath,
    Tight,
    Caterpillar,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated instance file.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Recognize an instance as a k-tree and print its bound.
    Check { file: PathBuf },
    /// Build and verify the independent dominating set certificate.
    Dominate { file: PathBuf },
    /// Exact independent domination number by branch and bound.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
    /// Seeded batch comparison written as CSV.
    Bench {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        exact_max: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gen {
            kind,
            k,
            n,
            t,
            m,
            seed,
            output,
        } => {
            let spec = gen_spec(kind, k, n, t, m, seed)?;
            let text = instance::serialize(&spec.generate()?, spec.k());
            match output {
                Some(path) => fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Check { file } => check(&file, out, err),
        Command::Dominate { file } => dominate(&file, out, err),
        Command::Exact { file, node_limit } => exact(&file, node_limit, out),
        Command::Bench {
            k,
            n,
            trials,
            seed,
            exact_max,
            node_limit,
            csv,
        } => {
            let config = BenchConfig {
                k,
                n,
                trials,
                seed,
                exact_max,
                node_limit,
            };
            let rows = run_bench(&config)?;
            match csv {
                Some(path) => write_csv(&rows, BufWriter::new(File::create(path)?))?,
                None => write_csv(&rows, &mut *out)?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn gen_spec(
    kind: Kind,
    k: Option<usize>,
    n: Option<usize>,
    t: Option<usize>,
    m: Option<usize>,
    seed: Option<u64>,
) -> Result<GenSpec> {
    let invalid = |msg: &str| Err(Error::InvalidParameter(msg.to_string()));
    if seed.is_some() && !matches!(kind, Kind::Random) {
        return invalid("--seed only applies to --kind random");
    }
    match (kind, k, n, t, m) {
        (Kind::Complete, Some(k), None, None, None) => Ok(GenSpec::Complete { k }),
        (Kind::Random, Some(k), Some(n), None, None) => Ok(GenSpec::Random {
            k,
            n,
            seed: seed.unwrap_or(0),
        }),
        (Kind::Kpath, Some(k), None, Some(t), None) => Ok(GenSpec::KPath { k, t }),
        (Kind::Tight, Some(k), None, Some(t), None) => Ok(GenSpec::Tight { k, t }),
        (Kind::Caterpillar, None | Some(1), None, None, Some(m)) => Ok(GenSpec::Caterpillar { m }),
        (Kind::Complete, ..) => invalid("--kind complete takes --k only"),
        (Kind::Random, ..) => invalid("--kind random takes --k and --n (and optionally --seed)"),
        (Kind::Kpath | Kind::Tight, ..) => invalid("--kind kpath/tight take --k and --t"),
        (Kind::Caterpillar, ..) => invalid("--kind caterpillar takes --m (k is always 1)"),
    }
}

fn load(path: &Path) -> Result<Instance> {
    instance::parse(&fs::read_to_string(path)?)
}

fn summary_line(inst: &Instance) -> String {
    let g = &inst.graph;
    let vk = g.k_vertex_set(inst.k).len();
    let bound = bound_value(g.vertex_count(), vk, inst.k);
    format!(
        "n={} m={} |V_{}|={} bound={} floor={}",
        g.vertex_count(),
        g.edge_count(),
        inst.k,
        vk,
        bound,
        bound.floor()
    )
}

fn check(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let inst = load(path)?;
    writeln!(out, "{}", summary_line(&inst))?;
    match recognize(&inst.graph, inst.k) {
        Ok(order) => {
            writeln!(
                out,
                "{}-tree: yes (peeled {} vertices, residual base {})",
                inst.k,
                order.steps.len(),
                order.residual_base
            )?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(err, "{e}")?;
            Ok(EXIT_INVALID)
        }
    }
}

fn join(set: &crate::graph::VertexSet) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn dominate(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let inst = load(path)?;
    let k = inst.k;
    writeln!(out, "{}", summary_line(&inst))?;
    let tree = match KTree::from_graph(inst.graph, k) {
        Ok(tree) => tree,
        Err(e) => {
            writeln!(err, "{e}")?;
            return Ok(EXIT_INVALID);
        }
    };
    let cert = construct_independent_dominating_set(&tree)?;

    if cert.is_base_case() {
        writeln!(
            out,
            "base case: K_{} (n = k+1), single vertex dominates",
            k + 1
        )?;
    } else {
        writeln!(out, "class |Z| |S| |D|")?;
        for class in &cert.classes {
            writeln!(
                out,
                "{} {} {} {}",
                class.color,
                class.z.len(),
                class.s.len(),
                class.size()
            )?;
        }
        writeln!(
            out,
            "identity: sum |D_i| = {} (n+|V_k| = {})",
            cert.identity_total(),
            cert.n + cert.vk
        )?;
    }
    writeln!(
        out,
        "chosen: class {} size {}",
        cert.chosen,
        cert.chosen_set.len()
    )?;
    writeln!(out, "members: {}", join(&cert.chosen_set))?;

    let report = verify_certificate(tree.graph(), &cert);
    if report.is_valid() {
        writeln!(out, "verify: PASS")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "verify: FAIL")?;
        for v in &report.violations {
            writeln!(err, "violation: {v:?}")?;
        }
        Ok(EXIT_INVALID)
    }
}

fn exact(path: &Path, node_limit: u64, out: &mut dyn Write) -> Result<i32> {
    if node_limit == 0 {
        return Err(Error::InvalidParameter(
            "--node-limit must be positive".into(),
        ));
    }
    let inst = load(path)?;
    let r = exact_gamma_i(&inst.graph, node_limit);
    writeln!(out, "gamma_i={}", r.size)?;
    writeln!(out, "witness: {}", join(&r.witness))?;
    writeln!(out, "nodes_explored={}", r.nodes_explored)?;
    writeln!(out, "limit_hit={}", r.limit_hit)?;
    Ok(if r.limit_hit { EXIT_LIMIT } else { EXIT_OK })
}
