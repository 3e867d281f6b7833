//! `mzi`: exact multiplicative Zagreb indices from the command line.
//!
//! Subcommands: `compute` index values for graph6 input, `construct` the
//! named extremal families, `extremal` search over a graph class, and
//! `verify` the full suite collection.
//!
//! Exit codes: 0 success (all suites verified or skipped), 1 verification
//! failure or internal inconsistency, 2 usage or parse errors.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use mzi::canon::canonical_form;
use mzi::connectivity::ClassConstraint;
use mzi::constructions as family;
use mzi::enumeration::{extremal_search, Direction, IndexKind};
use mzi::graph::Graph;
use mzi::graph6::parse_graph6;
use mzi::indices;
use mzi::verify::{
    finalize, instances, reports_to_csv, reports_to_json, RunConfig, SuiteSelector,
    VerificationReport, Verifier,
};

#[derive(Parser)]
#[command(name = "mzi", version, about = "Multiplicative Zagreb indices: exact values, extremal families, exhaustive verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute index values for one graph6 token or a file of them.
    Compute(ComputeArgs),
    /// Emit a named graph family as canonical graph6.
    Construct(ConstructArgs),
    /// Exhaustive extremal search over a graph class.
    Extremal(ExtremalArgs),
    /// Run verification suites and report per-instance outcomes.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ComputeInput {
    /// A single graph6 token.
    #[arg(long)]
    graph6: Option<String>,
    /// File with one graph6 token per line; `-` reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: ComputeInput,
    /// Also print the additive indices m1 and m2.
    #[arg(long)]
    all: bool,
    /// Also print natural-log values of both indices.
    #[arg(long)]
    log: bool,
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    format: TextOrJson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Order of the graph.
    #[arg(long)]
    n: Option<usize>,
    /// Attachment count for `knk`.
    #[arg(long)]
    k: Option<usize>,
    /// Pendant / leaf count for `ga`, `gs`, `a1`, `a2`.
    #[arg(long)]
    p: Option<usize>,
    /// Comma-separated spider leg lengths for `a1`, e.g. `2,2,1`.
    #[arg(long)]
    legs: Option<String>,
    /// Left clique order for `sandwich`.
    #[arg(long)]
    j: Option<usize>,
    /// Right clique order for `sandwich`.
    #[arg(long)]
    m: Option<usize>,
    /// Middle graph for `sandwich`, as graph6.
    #[arg(long)]
    hk: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Complete,
    Path,
    Star,
    /// Clique on n-1 vertices plus a vertex attached to k of them.
    Knk,
    /// Clique with pendants spread as evenly as possible.
    Ga,
    /// Clique with all pendants on one vertex.
    Gs,
    /// Spider tree (needs --legs).
    A1,
    /// All trees with balanced internal degrees and p leaves.
    A2,
    /// Two cliques fully joined through a middle graph.
    Sandwich,
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, value_enum)]
    index: IndexArg,
    #[arg(long, value_enum)]
    direction: DirectionArg,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    /// Connected graphs with vertex connectivity at most k.
    Vnk,
    /// Connected graphs with edge connectivity at most k.
    Enk,
    /// Connected graphs with exactly p pendant vertices.
    Gnp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexArg {
    Pi1,
    Pi2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Max,
    Min,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Order bound for suites quantifying over all connected graphs.
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    /// Order bound for tree-only suites.
    #[arg(long, default_value_t = 9)]
    n_max_trees: usize,
    /// Worker threads; falls back to the MZI_JOBS environment variable.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Write the report payload to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Connectivity,
    Pendant,
    Lemmas,
    Propositions,
    Erratum,
}

/// A failure carrying its process exit code: 2 for usage and parse
/// problems, 1 for verification failures and internal inconsistencies.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn internal(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Compute(args) => compute(args),
        Command::Construct(args) => construct(args),
        Command::Extremal(args) => extremal(args),
        Command::Verify(args) => verify(args),
    }
}

fn parse_token(token: &str) -> Result<Graph, Failure> {
    parse_graph6(token.trim()).map_err(|e| usage(format!("{token:?}: {e}")))
}

fn compute(args: ComputeArgs) -> Result<ExitCode, Failure> {
    let tokens: Vec<String> = match (&args.input.graph6, &args.input.input) {
        (Some(token), None) => vec![token.clone()],
        (None, Some(path)) => {
            let text = if path.as_os_str() == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| usage(format!("stdin: {e}")))?;
                buf
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?
            };
            text.lines().map(str::to_string).filter(|l| !l.trim().is_empty()).collect()
        }
        _ => unreachable!("clap enforces exactly one input source"),
    };
    for token in tokens {
        let graph = parse_token(&token)?;
        let line = render_values(&token, &graph, &args);
        println!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

fn render_values(token: &str, graph: &Graph, args: &ComputeArgs) -> String {
    let pi1 = indices::pi1(graph);
    let pi2 = indices::pi2(graph);
    match args.format {
        TextOrJson::Text => {
            let mut line = format!("pi1={pi1} pi2={pi2}");
            if args.all {
                write!(line, " m1={} m2={}", indices::m1(graph), indices::m2(graph)).unwrap();
            }
            if args.log {
                match (indices::pi1_log(graph), indices::pi2_log(graph)) {
                    (Ok(l1), Ok(l2)) => write!(line, " pi1_log={l1:.9} pi2_log={l2:.9}").unwrap(),
                    _ => line.push_str(" pi1_log=undefined pi2_log=undefined"),
                }
            }
            line
        }
        TextOrJson::Json => {
            let mut object = serde_json::json!({
                "graph6": token.trim(),
                "pi1": pi1.to_string(),
                "pi2": pi2.to_string(),
            });
            if args.all {
                object["m1"] = indices::m1(graph).to_string().into();
                object["m2"] = indices::m2(graph).to_string().into();
            }
            if args.log {
                object["pi1_log"] = indices::pi1_log(graph).ok().into();
                object["pi2_log"] = indices::pi2_log(graph).ok().into();
            }
            object.to_string()
        }
    }
}

fn construct(args: ConstructArgs) -> Result<ExitCode, Failure> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| usage(format!("--{flag} is required for this family")))
    };
    let graphs: Vec<Graph> = match args.family {
        FamilyArg::Complete => vec![family::complete(need(args.n, "n")?).map_err(to_usage)?],
        FamilyArg::Path => vec![family::path(need(args.n, "n")?).map_err(to_usage)?],
        FamilyArg::Star => vec![family::star(need(args.n, "n")?).map_err(to_usage)?],
        FamilyArg::Knk => vec![family::clique_with_attached_vertex(
            need(args.n, "n")?,
            need(args.k, "k")?,
        )
        .map_err(to_usage)?],
        FamilyArg::Ga => vec![family::pendant_clique_balanced(
            need(args.n, "n")?,
            need(args.p, "p")?,
        )
        .map_err(to_usage)?],
        FamilyArg::Gs => vec![family::pendant_clique_single(
            need(args.n, "n")?,
            need(args.p, "p")?,
        )
        .map_err(to_usage)?],
        FamilyArg::A1 => {
            let legs_text = args.legs.ok_or_else(|| usage("--legs is required for a1"))?;
            let legs: Vec<usize> = legs_text
                .split(',')
                .map(|part| part.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| usage(format!("--legs: {e}")))?;
            vec![family::spider(need(args.n, "n")?, legs.len(), &legs).map_err(to_usage)?]
        }
        FamilyArg::A2 => {
            family::balanced_internal_trees(need(args.n, "n")?, need(args.p, "p")?)
                .map_err(to_usage)?
        }
        FamilyArg::Sandwich => {
            let middle = parse_token(
                args.hk.as_deref().ok_or_else(|| usage("--hk is required for sandwich"))?,
            )?;
            vec![family::sandwich(need(args.j, "j")?, &middle, need(args.m, "m")?)
                .map_err(to_usage)?]
        }
    };
    for graph in &graphs {
        let code = canonical_form(graph).map_err(to_usage)?;
        println!("{code}");
    }
    Ok(ExitCode::SUCCESS)
}

fn to_usage(e: mzi::Error) -> Failure {
    usage(e.to_string())
}

fn extremal(args: ExtremalArgs) -> Result<ExitCode, Failure> {
    let constraint = match args.class {
        ClassArg::Vnk => ClassConstraint::vertex_cap(
            args.n,
            args.k.ok_or_else(|| usage("--k is required for class vnk"))?,
        ),
        ClassArg::Enk => ClassConstraint::edge_cap(
            args.n,
            args.k.ok_or_else(|| usage("--k is required for class enk"))?,
        ),
        ClassArg::Gnp => ClassConstraint::pendants(
            args.n,
            args.p.ok_or_else(|| usage("--p is required for class gnp"))?,
        ),
    }
    .map_err(to_usage)?;
    let index = match args.index {
        IndexArg::Pi1 => IndexKind::Pi1,
        IndexArg::Pi2 => IndexKind::Pi2,
    };
    let direction = match args.direction {
        DirectionArg::Max => Direction::Max,
        DirectionArg::Min => Direction::Min,
    };
    let report = extremal_search(&constraint, index, direction).map_err(|e| match e {
        mzi::Error::EnumRange { .. } => usage(e.to_string()),
        // a validated constraint should never yield an empty class
        other => internal(other.to_string()),
    })?;
    match args.format {
        ReportFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"))
        }
        ReportFormat::Csv => {
            println!("class,n,k,p,index,direction,value,class_size,witnesses");
            println!(
                "{},{},{},{},{},{},{},{},{}",
                args.class_tag(),
                args.n,
                args.k.map(|v| v.to_string()).unwrap_or_default(),
                args.p.map(|v| v.to_string()).unwrap_or_default(),
                if index == IndexKind::Pi1 { "pi1" } else { "pi2" },
                if direction == Direction::Max { "max" } else { "min" },
                report.value,
                report.class_size,
                report
                    .witnesses
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
            )
        }
        ReportFormat::Text => {
            println!(
                "value={} class_size={} witnesses={}",
                report.value,
                report.class_size,
                report
                    .witnesses
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            )
        }
    }
    Ok(ExitCode::SUCCESS)
}

impl ExtremalArgs {
    fn class_tag(&self) -> &'static str {
        match self.class {
            ClassArg::Vnk => "vnk",
            ClassArg::Enk => "enk",
            ClassArg::Gnp => "gnp",
        }
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let selector = match args.suite {
        SuiteArg::All => SuiteSelector::All,
        SuiteArg::Connectivity => SuiteSelector::Connectivity,
        SuiteArg::Pendant => SuiteSelector::Pendant,
        SuiteArg::Lemmas => SuiteSelector::Lemmas,
        SuiteArg::Propositions => SuiteSelector::Propositions,
        SuiteArg::Erratum => SuiteSelector::Erratum,
    };
    if args.n_max == 0 || args.n_max_trees == 0 {
        return Err(usage("order bounds must be positive"));
    }
    let config = RunConfig { n_max_graphs: args.n_max, n_max_trees: args.n_max_trees };
    let jobs = args.jobs.or_else(|| {
        std::env::var("MZI_JOBS").ok().and_then(|v| v.parse().ok())
    });

    let verifier = Verifier::new();
    let todo = instances(&config, selector);
    let outcomes: Result<Vec<_>, mzi::Error> = match jobs {
        Some(threads) if threads > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| internal(e.to_string()))?
            .install(|| todo.par_iter().map(|i| verifier.run_instance(*i)).collect()),
        _ => todo.par_iter().map(|i| verifier.run_instance(*i)).collect(),
    };
    let reports = finalize(selector, outcomes.map_err(|e| usage(e.to_string()))?.concat());

    let payload = match args.format {
        ReportFormat::Json => reports_to_json(&reports),
        ReportFormat::Csv => reports_to_csv(&reports),
        ReportFormat::Text => render_text_reports(&reports),
    };
    match &args.out {
        Some(path) => {
            std::fs::write(path, &payload)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            println!("{}", summary_line(&reports));
        }
        None => {
            print!("{payload}");
            if args.format == ReportFormat::Text {
                println!("{}", summary_line(&reports));
            }
        }
    }
    let all_passed = reports.iter().all(VerificationReport::passed);
    Ok(ExitCode::from(if all_passed { 0 } else { 1 }))
}

fn render_text_reports(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let params = [("n", r.params.n), ("k", r.params.k), ("p", r.params.p)]
            .iter()
            .filter_map(|(name, v)| v.map(|v| format!("{name}={v}")))
            .collect::<Vec<_>>()
            .join(" ");
        let mut line = format!("{:32} {:8} {}", r.suite, params, r.status);
        if let (Some(expected), Some(observed)) = (&r.expected, &r.observed) {
            write!(line, " expected={expected} observed={observed}").unwrap();
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn summary_line(reports: &[VerificationReport]) -> String {
    let verified = reports.iter().filter(|r| r.status == mzi::verify::Status::Verified).count();
    let skipped = reports.iter().filter(|r| r.status == mzi::verify::Status::Skipped).count();
    let failed = reports.len() - verified - skipped;
    format!("{} reports: {verified} verified, {skipped} skipped, {failed} failed", reports.len())
}
