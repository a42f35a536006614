//! Command-line front end: `solve`, `eval`, `reduce`, `verify`, `gen`.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | I/O error |
//! | 2 | usage error |
//! | 3 | malformed instance or coloring file |
//! | 4 | no feasible coloring exists |
//! | 5 | instance exceeds an enumeration guard |
//! | 6 | a verification certificate failed |
//! | 7 | invalid parameter |

mod format;
mod report;

use std::ops::Range;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use format::{parse_coloring, parse_instance, serialize_coloring, serialize_instance, Instance, InstanceGraph};
pub use report::{CostAtP, Decision, KappaBucket, RunReport, SchemeRecord};

use crate::conflict::CostParams;
use crate::error::Error;
use crate::graph::{ColorScheme, Coloring, EdgeSet, Graph};
use crate::reductions::{
    augment_with_clique, build_lred_multigraph, default_clique_size, expand_multigraph, GadgetCopy,
};
use crate::solvers::{
    solve_exact, solve_greedy, solve_half_approx, solve_local_search, solve_r12_structural, Objective, SearchBudget,
    SolveOutcome,
};
use crate::verify::{random_graph, run_suite, RandomGraphSpec, Suite, SuiteConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("no feasible coloring exists for scheme {0}")]
    Infeasible(ColorScheme),
    #[error("{0} certificate(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Core(Error::Parse { .. }) => 3,
            CliError::Core(Error::InstanceTooLarge { .. }) => 5,
            CliError::Core(_) => 7,
            CliError::Infeasible(_) => 4,
            CliError::VerifyFailed(_) => 6,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "relaxcolor",
    version,
    about = "Relaxed graph coloring: solve, evaluate, reduce, verify"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance and print a JSON run report.
    Solve(SolveArgs),
    /// Score a coloring file against an instance.
    Eval(EvalArgs),
    /// Write a transformed instance plus a JSON sidecar.
    Reduce(ReduceArgs),
    /// Run property checks, one JSON certificate per line.
    Verify(VerifyArgs),
    /// Generate a random G(n, p) instance.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact,
    Structural12,
    Greedy,
    Local,
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Covered,
    Generalized,
    Defective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReductionArg {
    CliqueAugment,
    LredMultigraph,
    LredExpand,
}

#[derive(Debug, clap::Args)]
pub struct SolveArgs {
    pub instance: PathBuf,
    #[arg(long, value_enum, default_value = "exact")]
    pub method: MethodArg,
    /// Local search objective; other methods only accept `covered`.
    #[arg(long, value_enum, default_value = "covered")]
    pub objective: ObjectiveArg,
    /// Exponents for the reported costs. The first one is also the
    /// generalized objective's exponent.
    #[arg(long = "p", value_delimiter = ',', default_values_t = [1.0, 2.0])]
    pub p: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Local search move evaluations.
    #[arg(long, default_value_t = 100_000)]
    pub budget: u64,
    #[arg(long, default_value_t = 4)]
    pub restarts: u32,
    /// Also answer "is the value at least c".
    #[arg(long)]
    pub c: Option<u64>,
    #[arg(long)]
    pub coloring_out: Option<PathBuf>,
    /// Record wall time in the report (breaks byte-identical reruns).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, clap::Args)]
pub struct EvalArgs {
    pub instance: PathBuf,
    pub coloring: PathBuf,
    #[arg(long = "p", value_delimiter = ',', default_values_t = [1.0, 2.0])]
    pub p: Vec<f64>,
}

#[derive(Debug, clap::Args)]
pub struct ReduceArgs {
    pub instance: PathBuf,
    #[arg(long, value_enum)]
    pub reduction: ReductionArg,
    /// Clique size for `clique-augment` (default n^2).
    #[arg(long)]
    pub q: Option<usize>,
    /// Color count for the `lred-*` reductions.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Relaxed colors written into the output scheme of the `lred-*` reductions.
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    /// Output instance; the sidecar goes to `<out>.json`.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    #[arg(long, default_value_t = 20)]
    pub graphs: usize,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, default_value_t = 3)]
    pub k_min: usize,
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,
}

#[derive(Debug, clap::Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub edge_probability: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn instance_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn cost_params(ps: &[f64]) -> CliResult<Vec<CostParams>> {
    Ok(ps.iter().map(|&p| CostParams::new(p)).collect::<Result<_, _>>()?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn run_solver<G: EdgeSet>(
    g: &G,
    simple: Option<&Graph>,
    s: ColorScheme,
    args: &SolveArgs,
    ps: &[CostParams],
) -> CliResult<SolveOutcome> {
    if args.method != MethodArg::Local && args.objective != ObjectiveArg::Covered {
        return Err(Error::InvalidParameter("only `--method local` accepts a cost objective".into()).into());
    }
    Ok(match args.method {
        MethodArg::Exact => solve_exact(g, s)?,
        MethodArg::Greedy => solve_greedy(g, s)?,
        MethodArg::Half => SolveOutcome::Solved(solve_half_approx(g, s)?),
        MethodArg::Structural12 => {
            let simple = simple.ok_or_else(|| Error::InvalidParameter("structural12 needs a simple graph".into()))?;
            if (s.r(), s.k()) != (1, 2) {
                return Err(Error::InvalidParameter(format!("structural12 needs scheme (1, 2), got {s}")).into());
            }
            SolveOutcome::Solved(solve_r12_structural(simple)?)
        }
        MethodArg::Local => {
            let objective = match args.objective {
                ObjectiveArg::Covered => Objective::Covered,
                ObjectiveArg::Defective => Objective::Defective,
                ObjectiveArg::Generalized => Objective::Generalized(
                    *ps.first()
                        .ok_or_else(|| Error::InvalidParameter("generalized objective needs --p".into()))?,
                ),
            };
            let budget = SearchBudget {
                max_iterations: args.budget,
                random_seed: args.seed,
                restarts: args.restarts,
            };
            solve_local_search(g, s, objective, budget)?
        }
    })
}

pub fn command_solve(args: &SolveArgs) -> CliResult<(RunReport, Coloring)> {
    let started = Instant::now();
    let inst = parse_instance(&read(&args.instance)?)?;
    let ps = cost_params(&args.p)?;
    let s = inst.scheme;
    let simple = inst.graph.as_simple();
    let outcome = match &inst.graph {
        InstanceGraph::Simple(g) => run_solver(g, simple.as_ref(), s, args, &ps)?,
        InstanceGraph::Multi(g) => run_solver(g, simple.as_ref(), s, args, &ps)?,
    };
    let sol = outcome.into_solution().ok_or(CliError::Infeasible(s))?;
    let name = instance_id(&args.instance);
    let method = format!("{:?}", args.method).to_lowercase();
    let mut report = match &inst.graph {
        InstanceGraph::Simple(g) => RunReport::build(&name, &method, g, s, &sol.coloring, &ps)?,
        InstanceGraph::Multi(g) => RunReport::build(&name, &method, g, s, &sol.coloring, &ps)?,
    };
    report.seed = Some(args.seed);
    report.decision = args.c.map(|c| Decision {
        c,
        answer: report.value >= c,
    });
    if args.timing {
        report.wall_time_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    if let Some(path) = &args.coloring_out {
        write(path, &serialize_coloring(&sol.coloring))?;
    }
    Ok((report, sol.coloring))
}

pub fn command_eval(args: &EvalArgs) -> CliResult<RunReport> {
    let inst = parse_instance(&read(&args.instance)?)?;
    let c = parse_coloring(&read(&args.coloring)?, inst.graph.vertex_count())?;
    let ps = cost_params(&args.p)?;
    let name = instance_id(&args.instance);
    Ok(match &inst.graph {
        InstanceGraph::Simple(g) => RunReport::build(&name, "eval", g, inst.scheme, &c, &ps)?,
        InstanceGraph::Multi(g) => RunReport::build(&name, "eval", g, inst.scheme, &c, &ps)?,
    })
}

/// Metadata needed to map solutions of a reduced instance back. Vertex ids
/// here are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reduction", rename_all = "kebab-case")]
pub enum Sidecar {
    CliqueAugment {
        original_n: usize,
        clique_size: usize,
        clique_vertex_ids: Range<usize>,
    },
    LredMultigraph {
        original_n: usize,
        k: usize,
        clique_vertex_ids: Range<usize>,
        original_edges: Vec<(usize, usize)>,
    },
    LredExpand {
        original_n: usize,
        host_n: usize,
        k: usize,
        original_edges: Vec<(usize, usize)>,
        copies: Vec<GadgetCopy>,
    },
}

pub fn command_reduce(args: &ReduceArgs) -> CliResult<(Instance, Sidecar)> {
    let inst = parse_instance(&read(&args.instance)?)?;
    let g = inst
        .graph
        .as_simple()
        .ok_or_else(|| Error::InvalidParameter("reductions take a simple graph".into()))?;
    let lred_scheme = || ColorScheme::new(args.r, args.k);
    let (out, sidecar) = match args.reduction {
        ReductionArg::CliqueAugment => {
            let q = args.q.unwrap_or_else(|| default_clique_size(g.vertex_count()));
            let ag = augment_with_clique(&g, q)?;
            let sidecar = Sidecar::CliqueAugment {
                original_n: ag.original_n,
                clique_size: ag.clique_size,
                clique_vertex_ids: ag.clique_vertex_ids.clone(),
            };
            (
                Instance {
                    graph: InstanceGraph::Simple(ag.graph),
                    scheme: ColorScheme::new(1, 2)?,
                },
                sidecar,
            )
        }
        ReductionArg::LredMultigraph => {
            let lm = build_lred_multigraph(&g, args.k)?;
            let sidecar = Sidecar::LredMultigraph {
                original_n: lm.original_n,
                k: lm.k,
                clique_vertex_ids: lm.clique_vertex_ids.clone(),
                original_edges: g.edges().to_vec(),
            };
            (
                Instance {
                    graph: InstanceGraph::Multi(lm.multigraph),
                    scheme: lred_scheme()?,
                },
                sidecar,
            )
        }
        ReductionArg::LredExpand => {
            let gm = expand_multigraph(&build_lred_multigraph(&g, args.k)?)?;
            let sidecar = Sidecar::LredExpand {
                original_n: gm.original_n,
                host_n: gm.host_n,
                k: gm.k,
                original_edges: g.edges().to_vec(),
                copies: gm.copies,
            };
            (
                Instance {
                    graph: InstanceGraph::Simple(gm.expanded_graph),
                    scheme: lred_scheme()?,
                },
                sidecar,
            )
        }
    };
    write(&args.out, &serialize_instance(&out))?;
    let mut sidecar_path = args.out.clone().into_os_string();
    sidecar_path.push(".json");
    write(
        Path::new(&sidecar_path),
        &(serde_json::to_string_pretty(&sidecar).expect("serializable") + "\n"),
    )?;
    Ok((out, sidecar))
}

pub fn command_gen(args: &GenArgs) -> CliResult<String> {
    let g = random_graph(RandomGraphSpec {
        n: args.n,
        edge_probability: args.edge_probability,
        seed: args.seed,
    })?;
    let text = serialize_instance(&Instance {
        graph: InstanceGraph::Simple(g),
        scheme: ColorScheme::new(args.r, args.k)?,
    });
    if let Some(path) = &args.out {
        write(path, &text)?;
    }
    Ok(text)
}

fn execute(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Solve(args) => {
            let (report, _) = command_solve(&args)?;
            println!("{}", to_json(&report));
        }
        Command::Eval(args) => println!("{}", to_json(&command_eval(&args)?)),
        Command::Reduce(args) => {
            let (inst, _) = command_reduce(&args)?;
            let summary = serde_json::json!({
                "out": args.out.display().to_string(),
                "vertices": inst.graph.vertex_count(),
                "edges": inst.graph.total_edges(),
            });
            println!("{summary}");
        }
        Command::Verify(args) => {
            let cfg = SuiteConfig {
                seed: args.seed,
                max_n: args.max_n,
                graphs: args.graphs,
                trials: args.trials,
                k_min: args.k_min,
                k_max: args.k_max,
            };
            let certs = run_suite(args.suite, &cfg)?;
            for cert in &certs {
                println!("{}", to_json(cert));
            }
            let failed = certs.iter().filter(|c| !c.holds).count();
            if failed > 0 {
                return Err(CliError::VerifyFailed(failed));
            }
        }
        Command::Gen(args) => {
            let text = command_gen(&args)?;
            if args.out.is_none() {
                print!("{text}");
            }
        }
    }
    Ok(())
}

/// Parses `std::env::args` and runs the command, mapping errors to the
/// documented exit codes.
pub fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("relaxcolor: {e}");
            std::process::ExitCode::from(e.exit_code())
        }
    }
}
