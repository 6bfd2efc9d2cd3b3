use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Tsv,
}

/// Knobs shared by every subcommand; each can also be set through `WQBG_*`.
#[derive(Clone, Debug, Args, Serialize)]
pub struct RunConfig {
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, env = "WQBG_BUDGET", default_value_t = 1_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Largest `ℓ(t^μ)` for brute-force admissible sets above rank 2.
    #[arg(long, global = true, env = "WQBG_ORACLE_BUDGET", default_value_t = 60,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub oracle_budget: u64,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "WQBG_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, env = "WQBG_FORMAT", value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for group/graph caches; read when present, written after builds.
    #[arg(long, global = true, env = "WQBG_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: 1_000_000,
            oracle_budget: 60,
            threads: None,
            format: Format::Json,
            cache_dir: None,
        }
    }
}

impl RunConfig {
    pub fn adm_budget(&self) -> wqbg_core::AdmBudget {
        wqbg_core::AdmBudget {
            max_length: self.oracle_budget as usize,
            ..Default::default()
        }
    }
}
