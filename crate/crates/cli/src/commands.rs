//! Subcommand definitions and their JSON results.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use wqbg_core::coxeter::reflection_length_of_class;
use wqbg_core::dimension::{dim_x, virtual_dimension};
use wqbg_core::scalar::fmt_q;
use wqbg_core::{Automorphism, CoxeterGroup, Error};

use crate::cache;
use crate::config::{Format, RunConfig};
use crate::error::{CliError, CliResult};
use crate::input::{parse_basis, parse_class, parse_element, parse_lattice, parse_mu, TypeCtx};
use crate::verify::{self, Status};

#[derive(Parser, Debug)]
#[command(name = "wqbg", version, about = "Quantum Bruhat graphs, admissible sets and dimensions of X(μ, b)")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct TypeArgs {
    /// Cartan type such as `A2`, `B3xA1`, `3D4` or `H4`.
    #[arg(long = "type")]
    pub ty: String,
    /// Cocharacter lattice: sc, ad or gl.
    #[arg(long, default_value = "sc")]
    pub lattice: String,
    /// Diagram automorphism: `id`, `adw0`, `flip`, `triality` or one-line notation.
    #[arg(long)]
    pub sigma: Option<String>,
}

impl TypeArgs {
    fn ctx(&self) -> CliResult<TypeCtx> {
        TypeCtx::new(&self.ty, parse_lattice(&self.lattice)?)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct MuArgs {
    /// Coweight coordinates, e.g. `14,14`.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    /// Basis of `--mu`: lattice, coroot or fundamental.
    #[arg(long, default_value = "lattice")]
    pub basis: String,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ClassArgs {
    /// σ-conjugacy class as `nu=… def=… kappa=…`.
    #[arg(long = "b", num_args = 1.., default_value = "nu=0 def=0")]
    pub b: Vec<String>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Root system and lattice data.
    #[command(subcommand)]
    Rootsys(RootsysCmd),
    /// Finite Weyl or Coxeter group.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Quantum Bruhat graph queries.
    #[command(subcommand)]
    Qbg(QbgCmd),
    /// Admissible sets.
    #[command(subcommand)]
    Adm(AdmCmd),
    /// Virtual dimensions and dim X(μ, b).
    #[command(subcommand)]
    Dim(DimCmd),
    /// Tables.
    #[command(subcommand)]
    Report(ReportCmd),
    /// Runs a verification suite.
    Verify(VerifyArgs),
    /// Binary cache of groups and graphs.
    #[command(subcommand)]
    Cache(CacheCmd),
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootsysCmd {
    /// Rank, order, Cartan matrix, π1 and ℓ_R(w0).
    Info(TypeArgs),
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupCmd {
    /// Enumerates W0 and reports its length distribution.
    Enum(TypeArgs),
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QbgCmd {
    /// Shortest-path distance d_Γ(x, y).
    Dist {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Common weight of the shortest paths, in simple coroots.
    Wt {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Edge list (tsv) or all-pairs summary (json).
    Export {
        #[command(flatten)]
        t: TypeArgs,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdmCmd {
    /// Admissibility of an element through the quantum Bruhat graph.
    Check {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        mu: MuArgs,
        /// Element as `t[c1,c2] 1 2`.
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
    },
    /// Brute-force Adm(μ).
    Oracle {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        mu: MuArgs,
        #[arg(long, allow_hyphen_values = true)]
        elem: Option<String>,
        /// Lists every element.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimCmd {
    /// Virtual dimension d_w(b).
    Virtual {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
        #[command(flatten)]
        b: ClassArgs,
    },
    /// Closed-form dim X(μ, b); withheld when a hypothesis fails.
    Xmub {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        mu: MuArgs,
        #[command(flatten)]
        b: ClassArgs,
        /// Full report instead of the bare value.
        #[arg(long)]
        report: bool,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportCmd {
    /// ℓ_R(w0) from the fixed-space codimension.
    Table51 {
        #[arg(long = "type")]
        ty: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Lemma31,
    PropCover,
    PropAdm,
    Lemma43,
    Prop44,
    Thm52,
    Thm61Consistency,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub t: TypeArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, default_value = "lattice")]
    pub basis: String,
    #[command(flatten)]
    pub b: ClassArgs,
    /// `λ` for prop-cover (defaults to a multiple of ρ∨ at the depth bound).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Random non-shortest walks for lemma31.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest group for all-pairs scans.
    #[arg(long, default_value_t = 20_000)]
    pub max_vertices: usize,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CacheCmd {
    /// Builds group and graph and writes them.
    Save {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long)]
        path: Option<PathBuf>,
    },
    /// Reads and validates a cache file.
    Load {
        #[arg(long)]
        path: PathBuf,
    },
}

#[derive(Debug, Serialize)]
pub struct Output {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub elapsed_ms: u128,
}

/// A finished command: the document plus the process exit code.
pub struct Outcome {
    pub output: Output,
    pub exit_code: i32,
}

fn command_name(c: &Command) -> String {
    let v = serde_json::to_value(c).expect("serializable");
    let mut parts = Vec::new();
    let mut cur = &v;
    let depth = if matches!(c, Command::Verify(_)) { 1 } else { 2 };
    while let Value::Object(m) = cur {
        if parts.len() == depth {
            break;
        }
        let Some((k, inner)) = m.iter().next().filter(|_| m.len() == 1) else {
            break;
        };
        parts.push(k.clone());
        cur = inner;
    }
    if let Command::Verify(a) = c {
        parts.push(serde_json::to_value(a.suite).expect("serializable").as_str().unwrap_or("").to_string());
    }
    parts.join(" ")
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let start = Instant::now();
    let (result, exit_code) = dispatch(&cli.command, &cli.config)?;
    Ok(Outcome {
        output: Output {
            command: command_name(&cli.command),
            input: serde_json::to_value(&cli.command).expect("serializable"),
            result,
            elapsed_ms: start.elapsed().as_millis(),
        },
        exit_code,
    })
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> CliResult<(Value, i32)> {
    let v = match cmd {
        Command::Rootsys(RootsysCmd::Info(t)) => rootsys_info(t)?,
        Command::Group(GroupCmd::Enum(t)) => {
            let e = t.ctx()?.enumerate(cfg)?;
            let mut hist = vec![0u64; e.length(e.longest()) + 1];
            for &l in e.lengths() {
                hist[l as usize] += 1;
            }
            json!({ "order": e.len(), "longest_word": e.group().format_word(e.element(e.longest())), "length_histogram": hist })
        }
        Command::Qbg(QbgCmd::Dist { t, from, to }) => {
            let ctx = t.ctx()?;
            let q = ctx.graph(cfg)?;
            let e = q.group();
            json!(q.distance(e.index_of(&ctx.word(from)?), e.index_of(&ctx.word(to)?)))
        }
        Command::Qbg(QbgCmd::Wt { t, from, to }) => {
            let ctx = t.ctx()?;
            let q = ctx.graph(cfg)?;
            let e = q.group();
            json!(q.weight(e.index_of(&ctx.word(from)?), e.index_of(&ctx.word(to)?))?)
        }
        Command::Qbg(QbgCmd::Export { t }) => {
            let q = t.ctx()?.graph(cfg)?;
            match cfg.format {
                Format::Tsv => Value::String(q.export_tsv()),
                Format::Json => serde_json::to_value(q.all_pairs_summary()).expect("serializable"),
            }
        }
        Command::Adm(AdmCmd::Check { t, mu, elem }) => {
            let ctx = t.ctx()?;
            let (aff, q) = ctx.affine(cfg)?;
            let mu = parse_mu(&mu.mu, aff.datum(), parse_basis(&mu.basis)?)?;
            let w = parse_element(elem, &aff)?;
            let (x, lam, y) = aff.decompose_minimal_coset(&w);
            let ok = aff.is_admissible_superregular(&q, x, &lam, y, &mu)?;
            let e = aff.group();
            json!({
                "x": e.group().format_word(e.element(x)),
                "lambda": lam,
                "y": e.group().format_word(e.element(y)),
                "admissible": ok,
            })
        }
        Command::Adm(AdmCmd::Oracle { t, mu, elem, list }) => {
            let ctx = t.ctx()?;
            let (aff, _) = ctx.affine(cfg)?;
            let mu = parse_mu(&mu.mu, aff.datum(), parse_basis(&mu.basis)?)?;
            let adm = aff.admissible_oracle(&mu, cfg.adm_budget())?;
            let mut out = json!({ "size": adm.len(), "length_of_t_mu": aff.length(&aff.translation(&mu)) });
            if let Some(s) = elem {
                let w = parse_element(s, &aff)?;
                out["contains"] = json!(adm.binary_search(&w).is_ok());
            }
            if *list {
                out["elements"] = json!(adm.iter().map(|w| aff.format(w)).collect::<Vec<_>>());
            }
            out
        }
        Command::Dim(DimCmd::Virtual { t, elem, b }) => {
            let ctx = t.ctx()?;
            let (aff, _) = ctx.affine(cfg)?;
            let sigma = ctx.sigma(t.sigma.as_deref())?;
            let w = parse_element(elem, &aff)?;
            let b = parse_class(&b.b.join(" "), aff.datum())?;
            json!(fmt_q(&virtual_dimension(&aff, &w, &b, &sigma)?))
        }
        Command::Dim(DimCmd::Xmub { t, mu, b, report }) => {
            let ctx = t.ctx()?;
            let datum = ctx.datum()?;
            let sigma = ctx.sigma(t.sigma.as_deref())?;
            let mu = parse_mu(&mu.mu, &datum, parse_basis(&mu.basis)?)?;
            let b = parse_class(&b.b.join(" "), &datum)?;
            let r = dim_x(&datum, &mu, &b, &sigma)?;
            if r.value.is_none() {
                return Err(Error::hypothesis(r.failed.join(", "), "the dimension formula does not apply").into());
            }
            if *report {
                serde_json::to_value(&r).expect("serializable")
            } else {
                json!(fmt_q(&r.value.expect("checked")))
            }
        }
        Command::Report(ReportCmd::Table51 { ty }) => match ty {
            Some(l) => {
                let ctx = TypeCtx::new(l, wqbg_core::LatticeKind::Sc)?;
                json!({ "type": ctx.name(), "lR_w0": lr_w0(&ctx.group) })
            }
            None => {
                let rows: Vec<Value> = TABLE_TYPES
                    .iter()
                    .map(|l| {
                        let g = CoxeterGroup::from_label(l).expect("known label");
                        json!({ "type": l, "lR_w0": lr_w0(&g) })
                    })
                    .collect();
                json!(rows)
            }
        },
        Command::Verify(a) => return verify_cmd(a, cfg),
        Command::Cache(CacheCmd::Save { t, path }) => {
            let ctx = t.ctx()?;
            let q = wqbg_core::QuantumBruhatGraph::build_generalized(ctx.enumerate(cfg)?)?;
            let path = match (path, &cfg.cache_dir) {
                (Some(p), _) => p.clone(),
                (None, Some(d)) => {
                    std::fs::create_dir_all(d)?;
                    d.join(format!("{}.wqbg", ctx.name()))
                }
                (None, None) => return Err(CliError::Usage("cache save needs --path or --cache-dir".into())),
            };
            cache::save(&path, &ctx.name(), &q)?;
            json!({ "path": path, "vertices": q.num_vertices(), "edges": q.num_edges(), "bytes": std::fs::metadata(&path)?.len() })
        }
        Command::Cache(CacheCmd::Load { path }) => {
            let (label, q) = cache::load(path)?;
            json!({ "type": label, "vertices": q.num_vertices(), "edges": q.num_edges() })
        }
    };
    Ok((v, 0))
}

/// Types of the reflection-length table.
pub const TABLE_TYPES: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "C3", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2",
    "H3", "H4", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "I10", "I11", "I12",
];

pub fn lr_w0(g: &CoxeterGroup) -> usize {
    g.reflection_length(&g.longest_element())
}

fn rootsys_info(t: &TypeArgs) -> CliResult<Value> {
    let ctx = t.ctx()?;
    let rs = ctx.group.roots();
    let cm: Option<Vec<Vec<String>>> = rs
        .cartan_zphi()
        .map(|m| m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect());
    let mut out = json!({
        "type": ctx.name(),
        "rank": rs.rank(),
        "order": ctx.group.order().to_string(),
        "positive_roots": rs.num_positive(),
        "crystallographic": rs.is_crystallographic(),
        "cartan_matrix": cm,
        "lR_w0": lr_w0(&ctx.group),
        "automorphisms": Automorphism::all(rs).iter().map(|a| a.to_string()).collect::<Vec<_>>(),
    });
    if rs.is_crystallographic() {
        let d = ctx.datum()?;
        out["lattice"] = json!(d.kind());
        out["pi1"] = json!(d.pi1());
    }
    Ok(out)
}

fn verify_cmd(a: &VerifyArgs, cfg: &RunConfig) -> CliResult<(Value, i32)> {
    let ctx = a.t.ctx()?;
    let sigma = ctx.sigma(a.t.sigma.as_deref())?;
    let need_mu = || -> CliResult<&String> {
        a.mu.as_ref().ok_or_else(|| CliError::Usage(format!("{:?} needs --mu", a.suite)))
    };
    let guard_budget = |r: CliResult<verify::SuiteReport>, name: &str| -> CliResult<verify::SuiteReport> {
        match r {
            Err(CliError::Core(e @ Error::BudgetExceeded { .. })) => {
                let mut rep = verify::SuiteReport::new(name);
                rep.skip("suite", e);
                Ok(rep)
            }
            other => other,
        }
    };
    let rep = match a.suite {
        Suite::Lemma31 => guard_budget(
            (|| {
                let q = ctx.graph(cfg)?;
                if !q.is_weighted() {
                    return Err(Error::NotCrystallographic("lemma31".into()).into());
                }
                Ok(verify::lemma31(&q, a.samples, a.seed))
            })(),
            "lemma31",
        )?,
        Suite::PropCover => guard_budget(
            (|| {
                let (aff, q) = ctx.affine(cfg)?;
                let lambdas = match &a.lambda {
                    Some(s) => vec![parse_mu(s, aff.datum(), parse_basis(&a.basis)?)?],
                    None => vec![verify::default_cover_lambda(&aff)?],
                };
                Ok(verify::prop_cover(&aff, &q, &lambdas)?)
            })(),
            "prop-cover",
        )?,
        Suite::PropAdm => guard_budget(
            (|| {
                let (aff, q) = ctx.affine(cfg)?;
                let mu = parse_mu(need_mu()?, aff.datum(), parse_basis(&a.basis)?)?;
                Ok(verify::prop_adm(&aff, &q, &mu, cfg.adm_budget())?)
            })(),
            "prop-adm",
        )?,
        Suite::Lemma43 => guard_budget(
            (|| {
                let q = ctx.graph(cfg)?;
                Ok(verify::lemma43(&q, &sigma, a.max_vertices)?)
            })(),
            "lemma43",
        )?,
        Suite::Prop44 => guard_budget(
            (|| {
                let (aff, q) = ctx.affine(cfg)?;
                let mu = parse_mu(need_mu()?, aff.datum(), parse_basis(&a.basis)?)?;
                let b = parse_class(&a.b.b.join(" "), aff.datum())?;
                Ok(verify::prop44(&aff, &q, &mu, &b, &sigma, cfg.adm_budget())?)
            })(),
            "prop44",
        )?,
        Suite::Thm52 => verify::thm52(&ctx.group, &sigma, cfg.budget)?,
        Suite::Thm61Consistency => guard_budget(
            (|| {
                let (aff, q) = ctx.affine(cfg)?;
                let mu = parse_mu(need_mu()?, aff.datum(), parse_basis(&a.basis)?)?;
                let b = parse_class(&a.b.b.join(" "), aff.datum())?;
                Ok(verify::thm61(&aff, &q, &mu, &b, &sigma, cfg.adm_budget())?)
            })(),
            "thm61-consistency",
        )?,
    };
    let code = match rep.status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Skipped => 4,
    };
    Ok((serde_json::to_value(&rep).expect("serializable"), code))
}

/// `ℓ_R(O)` for `(type, σ)`, exposed for scripting.
pub fn lr_class(label: &str, sigma: &str) -> CliResult<usize> {
    let ctx = TypeCtx::new(label, wqbg_core::LatticeKind::Sc)?;
    let s = ctx.sigma(Some(sigma))?;
    Ok(reflection_length_of_class(&ctx.group, &s)?)
}

/// Renders a finished command in the requested format.
pub fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(out).expect("serializable"),
        Format::Tsv => {
            if let Value::String(s) = &out.result {
                return s.trim_end_matches('\n').to_string();
            }
            let mut lines = vec![format!("command\t{}", out.command)];
            flatten("result", &out.result, &mut lines);
            lines.push(format!("elapsed_ms\t{}", out.elapsed_ms));
            lines.join("\n")
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&format!("{prefix}.{k}"), x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}\t{s}")),
        other => out.push(format!("{prefix}\t{other}")),
    }
}
