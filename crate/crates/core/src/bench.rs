//! Batch comparison of the bound, the constructed set and the exact optimum
//! over seeded random k-trees.

use std::io::Write;

use rayon::prelude::*;

use crate::domination::{construct_independent_dominating_set, verify_certificate};
use crate::error::{Error, Result};
use crate::generators::gen_random_ktree;
use crate::oracle::{exact_gamma_i, DEFAULT_NODE_LIMIT};

pub const CSV_HEADER: &str = "trial,seed,k,n,m,vk,bound_num,bound_den,bound_floor,constructed_size,exact_size,exact_limit_hit";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub k: usize,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// The oracle runs only on instances with at most this many vertices.
    pub exact_max: usize,
    pub node_limit: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            k: 2,
            n: 15,
            trials: 100,
            seed: 0,
            exact_max: 20,
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub trial: usize,
    pub seed: u64,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub vk: usize,
    pub bound_num: usize,
    pub bound_den: usize,
    pub bound_floor: usize,
    pub constructed_size: usize,
    /// `None` when the oracle was skipped or ran out of budget.
    pub exact_size: Option<usize>,
    pub exact_limit_hit: bool,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.trial,
            self.seed,
            self.k,
            self.n,
            self.m,
            self.vk,
            self.bound_num,
            self.bound_den,
            self.bound_floor,
            self.constructed_size,
            self.exact_size.map(|s| s.to_string()).unwrap_or_default(),
            self.exact_limit_hit
        )
    }
}

/// Seed of trial `trial`: `seed + trial` (wrapping).
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed.wrapping_add(trial as u64)
}

pub fn run_trial(config: &BenchConfig, trial: usize) -> Result<BenchRow> {
    let seed = trial_seed(config.seed, trial);
    let tree = gen_random_ktree(config.k, config.n, seed)?;
    let g = tree.graph();
    let cert = construct_independent_dominating_set(&tree)?;
    let report = verify_certificate(g, &cert);
    if !report.is_valid() {
        return Err(Error::InvariantViolation(format!(
            "trial {trial} (seed {seed}): certificate rejected: {:?}",
            report.violations
        )));
    }
    let constructed = cert.chosen_set.len();
    if !cert.bound.admits(constructed) {
        return Err(Error::InvariantViolation(format!(
            "trial {trial} (seed {seed}): constructed size {constructed} exceeds bound {}",
            cert.bound
        )));
    }

    let (exact_size, exact_limit_hit) = if g.vertex_count() <= config.exact_max {
        let r = exact_gamma_i(g, config.node_limit);
        (r.exact(), r.limit_hit)
    } else {
        (None, false)
    };
    if let Some(exact) = exact_size {
        if exact > constructed {
            return Err(Error::InvariantViolation(format!(
                "trial {trial} (seed {seed}): oracle {exact} exceeds constructed {constructed}"
            )));
        }
    }

    Ok(BenchRow {
        trial,
        seed,
        k: config.k,
        n: g.vertex_count(),
        m: g.edge_count(),
        vk: cert.vk,
        bound_num: cert.bound.num,
        bound_den: cert.bound.den,
        bound_floor: cert.bound.floor(),
        constructed_size: constructed,
        exact_size,
        exact_limit_hit,
    })
}

/// Runs all trials in parallel; rows come back in trial order.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    if config.trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    (0..config.trials)
        .into_par_iter()
        .map(|trial| run_trial(config, trial))
        .collect()
}

pub fn write_csv(rows: &[BenchRow], mut out: impl Write) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.to_csv())?;
    }
    out.flush()?;
    Ok(())
}
