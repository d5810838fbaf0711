//! Command-line wiring: reproducible construction, solving,
//! verification and reporting runs. One global `--seed` feeds every
//! randomized component; identical invocations produce byte-identical
//! output.
//!
//! Exit codes: 0 success / exact; 1 verification failure;
//! 2 budget exhausted (result is a lower bound only); 3 usage error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::bounds::{
    render_csv, render_json, render_markdown, report::render_tvalues_markdown,
    report::ReportConfig, table9_report, TuranValueTable,
};
use crate::constructions::{
    circular_build, eq2_edge_count, expansion_build, hm_build, hm_type_counts,
    k5_line_construction, parity_construction, rainbow_build, rainbow_counts,
    two_k6_construction, z2cube_construction, zcube_circular_spec, zero_sum_cube, Build, Census,
    ExpansionSpec, HmLambdaSpec, ParitySpec,
};
use crate::hypergraph::{parse_json, parse_t4g, to_t4g};
use crate::optimize::{example2_objective, gradient_check, minimize};
use crate::rational::binomial_u128;
use crate::solver::{alpha_exact, SolveBudget, SolveStatus};
use crate::verify::{run_suite, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_BUDGET_EXHAUSTED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "t4",
    version,
    about = "Constructions, exact independence numbers and density bounds for 4-uniform hypergraphs"
)]
struct Cli {
    /// Seed for every randomized component (matrices, restarts, samples).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build a construction and emit it in the t4g text format.
    Construct {
        #[command(subcommand)]
        which: ConstructCmd,
        /// Write the graph here instead of stdout.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
        /// Emit the per-family census as JSON without materializing.
        #[arg(long, global = true)]
        counts_only: bool,
    },
    /// Certify the independence number of a t4g (or JSON) graph file.
    Alpha {
        file: PathBuf,
        /// Node cap (overrides TURAN_BUDGET_NODES and the default policy).
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Wall-clock cap in seconds.
        #[arg(long)]
        max_seconds: Option<f64>,
    },
    /// Run a verification suite: tables | formulas | invariants | all.
    Verify {
        suite: String,
        /// Sample count for the randomized suites.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Output format: text | json.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Density-bound reports.
    Bounds {
        #[command(subcommand)]
        which: BoundsCmd,
    },
    /// Numerical part-size optimization.
    Optimize {
        #[command(subcommand)]
        which: OptimizeCmd,
    },
    /// The summary table of rescaled density bounds (markdown).
    Report {
        #[arg(long, default_value = "md")]
        format: String,
    },
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// Two-part parity graph on n + m vertices.
    Parity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Use the all-zero matrix instead of a seeded random one.
        #[arg(long)]
        zero_matrix: bool,
    },
    /// K5-line graph: 10 vertices, 20 edges.
    K5line,
    /// Paired-K6 graph: 12 vertices, 51 edges.
    Twok6 {
        #[arg(long, default_value_t = 0)]
        variant: usize,
    },
    /// Two-block Z2^2+Z2 graph: 16 vertices, 220 edges.
    Z2cube,
    /// Expansion of the zero-sum cube with uniform part sizes.
    Expansion {
        #[arg(long, default_value_t = 2)]
        part_size: usize,
    },
    /// Circular product of m copies of the zero-sum cube.
    Circular {
        #[arg(long)]
        m: usize,
    },
    /// Rainbow graph of depth k (4 + 4^k vertices).
    Rainbow {
        #[arg(long)]
        k: u32,
    },
    /// Cyclic Z_m + Z_2^6 graph restricted to lambda z-values.
    Hm {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        lambda: usize,
    },
}

#[derive(Subcommand, Debug)]
enum BoundsCmd {
    /// The rescaled-density summary table.
    Table9 {
        #[arg(long, default_value = "md")]
        format: String,
        #[arg(long, default_value_t = 32)]
        restarts: u32,
    },
    /// The integer Turán-value table with provenance.
    Tvalues {
        #[arg(long, default_value = "md")]
        format: String,
    },
}

#[derive(Subcommand, Debug)]
enum OptimizeCmd {
    /// Optimize the worked asymmetric expansion objective.
    Example2 {
        #[arg(long, default_value_t = 32)]
        restarts: u32,
    },
}

fn version() -> String {
    format!("t4 {}", env!("CARGO_PKG_VERSION"))
}

fn header(seed: u64, budget: &str) -> String {
    format!("# {} seed={seed} budget={budget}\n", version())
}

/// Write to stdout, exiting quietly when the reading end of a pipe has
/// gone away (`t4 report | head` must not panic).
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(EXIT_OK);
        }
        eprintln!("error: {e}");
        std::process::exit(EXIT_USAGE);
    }
}

fn emit_line(text: &str) {
    emit(text);
    emit("\n");
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version through the same path
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.cmd {
        Cmd::Construct { which, out, counts_only } => cmd_construct(cli.seed, which, out, counts_only),
        Cmd::Alpha { file, max_nodes, max_seconds } => cmd_alpha(cli.seed, file, max_nodes, max_seconds),
        Cmd::Verify { suite, samples, format } => cmd_verify(cli.seed, &suite, samples, &format),
        Cmd::Bounds { which } => cmd_bounds(cli.seed, which),
        Cmd::Optimize { which } => cmd_optimize(cli.seed, which),
        Cmd::Report { format } => cmd_bounds(cli.seed, BoundsCmd::Table9 { format, restarts: 32 }),
    }
}

fn build_construction(seed: u64, which: &ConstructCmd) -> Result<Build, String> {
    match which {
        ConstructCmd::Parity { n, m, zero_matrix } => {
            let spec = if *zero_matrix {
                ParitySpec::zero(*n, *m)
            } else {
                ParitySpec::seeded(*n, *m, seed)
            };
            Ok(parity_construction(&spec))
        }
        ConstructCmd::K5line => Ok(k5_line_construction()),
        ConstructCmd::Twok6 { variant } => two_k6_construction(*variant).map_err(|e| e.to_string()),
        ConstructCmd::Z2cube => Ok(z2cube_construction()),
        ConstructCmd::Expansion { part_size } => {
            let host = zero_sum_cube().into_graph();
            let spec = ExpansionSpec::edges_as_critical_sets(&host, *part_size)
                .map_err(|e| e.to_string())?;
            Ok(expansion_build(&spec))
        }
        ConstructCmd::Circular { m } => {
            let spec = zcube_circular_spec(*m).map_err(|e| e.to_string())?;
            circular_build(&spec).map_err(|e| e.to_string())
        }
        ConstructCmd::Rainbow { k } => rainbow_build(*k).map_err(|e| e.to_string()),
        ConstructCmd::Hm { m, lambda } => {
            let spec = HmLambdaSpec::first_lambda(*m, *lambda).map_err(|e| e.to_string())?;
            Ok(hm_build(&spec))
        }
    }
}

fn counts_census(seed: u64, which: &ConstructCmd) -> Result<Census, String> {
    let mut census = Census::default();
    match which {
        ConstructCmd::Parity { n, m, zero_matrix } => {
            let spec = if *zero_matrix {
                ParitySpec::zero(*n, *m)
            } else {
                ParitySpec::seeded(*n, *m, seed)
            };
            census.push("E40", binomial_u128(*n as u64, 4) as u64);
            census.push("E04", binomial_u128(*m as u64, 4) as u64);
            let matrix = spec.matrix();
            let mut mixed = 0u64;
            for i in 0..*n {
                for j in i + 1..*n {
                    for k in 0..*m {
                        for l in k + 1..*m {
                            if (matrix[i][k] + matrix[i][l] + matrix[j][k] + matrix[j][l]) % 2 == 0
                            {
                                mixed += 1;
                            }
                        }
                    }
                }
            }
            census.push("E22", mixed);
        }
        ConstructCmd::Rainbow { k } => {
            let c = rainbow_counts(*k);
            census.push("E0", c.e0 as u64);
            census.push("E1", c.e1 as u64);
            census.push("E2", c.e2 as u64);
            census.push("E4", c.e4 as u64);
        }
        ConstructCmd::Hm { m, lambda } => {
            HmLambdaSpec::first_lambda(*m, *lambda).map_err(|e| e.to_string())?;
            for (name, count) in hm_type_counts(*m, *lambda) {
                census.push(name, count);
            }
        }
        ConstructCmd::Circular { m } => {
            let spec = zcube_circular_spec(*m).map_err(|e| e.to_string())?;
            let total = eq2_edge_count(&spec);
            for i in 0..*m {
                census.push(format!("E1({i})"), 772);
                census.push(format!("E2({i})"), 216);
                census.push(format!("E4({i})"), 256);
            }
            debug_assert_eq!(census.total() as u128, total);
        }
        other => {
            // small fixed graphs: materializing is the census
            let b = build_construction(seed, other)?;
            return Ok(b.census);
        }
    }
    Ok(census)
}

fn cmd_construct(
    seed: u64,
    which: ConstructCmd,
    out: Option<PathBuf>,
    counts_only: bool,
) -> Result<i32, String> {
    if counts_only {
        let census = counts_census(seed, &which)?;
        let payload = serde_json::json!({
            "tool": version(),
            "seed": seed,
            "census": census,
            "total": census.total(),
        });
        emit_line(&serde_json::to_string_pretty(&payload).unwrap());
        return Ok(EXIT_OK);
    }
    let built = build_construction(seed, &which)?;
    let g = built.four_graph();
    let mut text = header(seed, "n/a");
    text.push_str(&to_t4g(g, Some(built.graph.labels())));
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| e.to_string())?,
        None => emit(&text),
    }
    let mut summary = format!("v={} e={}", g.n(), g.edge_count());
    for fc in &built.census.0 {
        let _ = write!(summary, " {}={}", fc.family, fc.count);
    }
    eprintln!("{summary}");
    Ok(EXIT_OK)
}

fn cmd_alpha(
    seed: u64,
    file: PathBuf,
    max_nodes: Option<u64>,
    max_seconds: Option<f64>,
) -> Result<i32, String> {
    let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
    let (graph, _labels) = if text.trim_start().starts_with('{') {
        parse_json(&text).map_err(|e| e.to_string())?
    } else {
        parse_t4g(&text).map_err(|e| e.to_string())?
    };

    let env_nodes = std::env::var("TURAN_BUDGET_NODES").ok().and_then(|v| v.parse::<u64>().ok());
    let mut budget = SolveBudget::default_for(graph.n());
    if let Some(n) = env_nodes {
        budget.max_nodes = Some(n);
    }
    if max_nodes.is_some() {
        budget.max_nodes = max_nodes;
    }
    if max_seconds.is_some() {
        budget.max_seconds = max_seconds;
    }

    let result = alpha_exact(&graph, budget);
    let payload = serde_json::json!({
        "tool": version(),
        "seed": seed,
        "budget": {
            "max_nodes": budget.max_nodes,
            "max_seconds": budget.max_seconds,
        },
        "alpha": result.alpha,
        "status": result.status,
        "witness": result.witness,
        "nodes": result.nodes_explored,
    });
    emit_line(&serde_json::to_string_pretty(&payload).unwrap());
    Ok(match result.status {
        SolveStatus::Exact => EXIT_OK,
        SolveStatus::LowerBoundOnly => EXIT_BUDGET_EXHAUSTED,
    })
}

fn cmd_verify(seed: u64, suite: &str, samples: usize, format: &str) -> Result<i32, String> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, VerifyOptions { seed, samples });
    match format {
        "text" => {
            emit(&header(seed, &format!("samples={samples}")));
            emit(&report.render_text());
        }
        "json" => {
            let payload = serde_json::json!({
                "tool": version(),
                "seed": seed,
                "samples": samples,
                "all_passed": report.all_passed(),
                "checks": report.checks,
            });
            emit_line(&serde_json::to_string_pretty(&payload).unwrap());
        }
        other => return Err(format!("unknown format '{other}' (text|json)")),
    }
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_bounds(seed: u64, which: BoundsCmd) -> Result<i32, String> {
    match which {
        BoundsCmd::Table9 { format, restarts } => {
            let rows = table9_report(ReportConfig { seed, restarts });
            match format.as_str() {
                "md" => {
                    emit(&header(seed, &format!("restarts={restarts}")));
                    emit(&render_markdown(&rows));
                }
                "csv" => {
                    emit(&header(seed, &format!("restarts={restarts}")));
                    emit(&render_csv(&rows));
                }
                "json" => {
                    let payload = serde_json::json!({
                        "tool": version(),
                        "seed": seed,
                        "restarts": restarts,
                        "rows": serde_json::from_str::<serde_json::Value>(&render_json(&rows)).unwrap(),
                    });
                    emit_line(&serde_json::to_string_pretty(&payload).unwrap());
                }
                other => return Err(format!("unknown format '{other}' (md|csv|json)")),
            }
            Ok(EXIT_OK)
        }
        BoundsCmd::Tvalues { format } => {
            let table = TuranValueTable::with_external_constants().map_err(|e| e.to_string())?;
            match format.as_str() {
                "md" => {
                    emit(&header(seed, "n/a"));
                    emit(&render_tvalues_markdown(&table));
                }
                other => return Err(format!("unknown format '{other}' (md)")),
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_optimize(seed: u64, which: OptimizeCmd) -> Result<i32, String> {
    match which {
        OptimizeCmd::Example2 { restarts } => {
            let obj = example2_objective();
            let result = minimize(&obj, seed, restarts);
            let grad_err = gradient_check(&obj, &result.x, 1e-6).map_err(|e| e.to_string())?;
            let payload = serde_json::json!({
                "tool": version(),
                "seed": seed,
                "restarts": restarts,
                "x": result.x,
                "value": result.value,
                "value_certified_num": result.value_certified.numer().to_string(),
                "value_certified_den": result.value_certified.denom().to_string(),
                "value_certified_decimal_up": result.value_certified.decimal(6, crate::rational::Round::Up),
                "gradient_check": grad_err,
                "iterations": result.iterations,
                "converged": result.converged,
            });
            emit_line(&serde_json::to_string_pretty(&payload).unwrap());
            Ok(EXIT_OK)
        }
    }
}
