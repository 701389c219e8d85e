//! `reidzeta`: classify automorphisms of rational nilpotent Lie algebras,
//! compute Reidemeister numbers and zeta functions, build family algebras,
//! report graph tameness, run random-graph surveys and brute-force
//! oracles.
//!
//! Exit codes: 0 success, 2 input or validation error, 3 mathematical
//! refusal (zeta of a non-tame automorphism), 4 internal invariant
//! violation.

mod analysis;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use reidzeta::error::Error;
use reidzeta::families::{
    self, direct_sum, free_nilpotent, graph_algebra, graph_tameness, Graph, DEFAULT_SCALE_CAP,
};
use reidzeta::nilpotent::check_automorphism;
use reidzeta::oracle::{
    check_quotient_reduction, check_subgroup_reduction, twisted_classes_finite,
    twisted_count_lattice, FiniteEndo,
};
use reidzeta::schema;
use reidzeta::snf::IntMatrix;
use reidzeta::survey::{report_to_csv, run_survey, SurveyMode, SurveyOptions};

#[derive(Parser)]
#[command(
    name = "reidzeta",
    version,
    about = "Reidemeister numbers, tameness and zeta functions of nilpotent-group automorphisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an automorphism: classification, R(phi^n), zeta function.
    Analyze(AnalyzeArgs),
    /// Construct a family algebra and write its JSON.
    #[command(subcommand)]
    Make(MakeCommand),
    /// Coherent components and tameness of a graph.
    GraphReport(GraphReportArgs),
    /// Random-graph tameness surveys (deterministic, seeded).
    #[command(subcommand)]
    Survey(SurveyCommand),
    /// Brute-force twisted-conjugacy oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// NilAlgebra JSON file ("-" for stdin).
    #[arg(long)]
    algebra: String,
    /// Automorphism matrix JSON file ("-" for stdin).
    #[arg(long)]
    matrix: String,
    /// Zeta truncation order; requesting it on a non-tame automorphism is
    /// an error (default: 10, best effort).
    #[arg(long)]
    terms: Option<u64>,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum MakeCommand {
    /// Free c-step nilpotent algebra on k generators (Hall basis).
    Free {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        c: usize,
        #[arg(short, long)]
        output: String,
    },
    /// 2-step algebra of a simple graph.
    Graph {
        /// Edge spec like "1-2,2-3"; may be empty with -n set.
        #[arg(long, default_value = "")]
        edges: String,
        /// Vertex count (default: largest vertex mentioned).
        #[arg(short)]
        n: Option<usize>,
        #[arg(short, long)]
        output: String,
    },
    /// Abelian algebra of rank n.
    Abelian {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        output: String,
    },
    /// The 3-dimensional Heisenberg algebra.
    Heisenberg {
        #[arg(short, long)]
        output: String,
    },
    /// Direct sum of two algebra files.
    Sum {
        a: String,
        b: String,
        #[arg(short, long)]
        output: String,
    },
}

#[derive(Args)]
struct GraphReportArgs {
    /// Edge spec like "1-2,2-3".
    #[arg(long)]
    edges: Option<String>,
    /// Vertex count override (needed for edgeless graphs).
    #[arg(short)]
    n: Option<usize>,
    /// Graph JSON file ("-" for stdin).
    #[arg(long, conflicts_with = "edges")]
    file: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum SurveyCommand {
    /// Erdos-Renyi G(n, 1/2) tameness survey, CSV output.
    Graphs {
        #[arg(long)]
        vertices: usize,
        /// Number of sampled rows.
        #[arg(long, conflicts_with = "exhaustive")]
        samples: Option<u64>,
        /// Enumerate every labeled graph instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Search for an explicit tame witness on tame rows, with this
        /// candidate budget.
        #[arg(long)]
        witness_budget: Option<u64>,
        /// Output file (default: stdout).
        #[arg(short, long)]
        output: Option<String>,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Twisted conjugacy classes on a finite group by enumeration.
    Twisted {
        #[arg(long)]
        cayley: String,
        #[arg(long)]
        endo: String,
    },
    /// Reidemeister count of x -> Ax on Z^n via the Smith normal form.
    Lattice {
        #[arg(long)]
        matrix: String,
    },
    /// Check the subgroup and quotient reduction identities.
    Reductions {
        #[arg(long)]
        cayley: String,
        #[arg(long)]
        endo: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::NotTame(_) => 3,
            Error::Internal(_)
            | Error::ZetaMismatch { .. }
            | Error::SubgroupReductionMismatch { .. }
            | Error::QuotientReductionMismatch { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure {
                code: 2,
                message: format!("reading stdin: {e}"),
            })?;
        return Ok(buf);
    }
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("reading {path}: {e}"),
    })
}

fn write_output(path: &str, content: &str) -> Result<(), Failure> {
    if path == "-" {
        print!("{content}");
        return Ok(());
    }
    std::fs::write(path, content).map_err(|e| Failure {
        code: 2,
        message: format!("writing {path}: {e}"),
    })
}

fn scale_cap() -> Result<usize, Failure> {
    match std::env::var("REIDZETA_SCALE_CAP") {
        Err(_) => Ok(DEFAULT_SCALE_CAP),
        Ok(v) => v.parse().map_err(|_| Failure {
            code: 2,
            message: format!("REIDZETA_SCALE_CAP={v:?} is not a dimension"),
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Make(args) => cmd_make(args),
        Command::GraphReport(args) => cmd_graph_report(args),
        Command::Survey(SurveyCommand::Graphs {
            vertices,
            samples,
            exhaustive,
            seed,
            witness_budget,
            output,
        }) => cmd_survey(vertices, samples, exhaustive, seed, witness_budget, output),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    let algebra = schema::parse_algebra_json(&read_input(&args.algebra)?)?;
    algebra.validate()?;
    let matrix = schema::parse_matrix_json(&read_input(&args.matrix)?)?;
    let phi = check_automorphism(&algebra, matrix)?;
    let output = analysis::analyze(&phi, args.terms)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&output).expect("analysis serialization cannot fail")
        );
    } else {
        print!("{}", analysis::render_human(&output));
    }
    Ok(())
}

fn cmd_make(args: MakeCommand) -> Result<(), Failure> {
    let cap = scale_cap()?;
    let (algebra, output) = match args {
        MakeCommand::Free { k, c, output } => {
            let free = free_nilpotent(k, c, cap)?;
            (free.algebra, output)
        }
        MakeCommand::Graph { edges, n, output } => {
            let graph = Graph::from_edge_spec(&edges, n)?;
            (graph_algebra(&graph), output)
        }
        MakeCommand::Abelian { n, output } => {
            if n == 0 {
                return Err(Failure {
                    code: 2,
                    message: "abelian rank must be at least 1".into(),
                });
            }
            (families::abelian(n), output)
        }
        MakeCommand::Heisenberg { output } => (families::heisenberg(), output),
        MakeCommand::Sum { a, b, output } => {
            let la = schema::parse_algebra_json(&read_input(&a)?)?;
            la.validate()?;
            let lb = schema::parse_algebra_json(&read_input(&b)?)?;
            lb.validate()?;
            (direct_sum(&la, &lb), output)
        }
    };
    write_output(&output, &schema::algebra_to_json(&algebra))?;
    Ok(())
}

#[derive(serde::Serialize)]
struct ComponentReport {
    vertices: Vec<usize>,
    kind: families::ComponentKind,
    ok: bool,
}

#[derive(serde::Serialize)]
struct GraphReport {
    n: usize,
    edges: usize,
    components: Vec<ComponentReport>,
    tame: bool,
}

fn cmd_graph_report(args: GraphReportArgs) -> Result<(), Failure> {
    let graph = match (&args.file, &args.edges) {
        (Some(file), _) => schema::parse_graph_json(&read_input(file)?)?,
        (None, Some(spec)) => Graph::from_edge_spec(spec, args.n)?,
        (None, None) => {
            return Err(Failure {
                code: 2,
                message: "provide --edges or --file".into(),
            })
        }
    };
    let verdict = graph_tameness(&graph)?;
    let components: Vec<ComponentReport> = verdict
        .partition
        .components
        .iter()
        .zip(&verdict.component_ok)
        .map(|(c, &ok)| ComponentReport {
            vertices: c.vertices.iter().map(|v| v + 1).collect(),
            kind: c.kind,
            ok,
        })
        .collect();
    let report = GraphReport {
        n: graph.vertex_count(),
        edges: graph.edge_count(),
        components,
        tame: verdict.tame,
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialization cannot fail")
        );
    } else {
        println!("graph: {} vertices, {} edges", report.n, report.edges);
        println!("coherent components:");
        for c in &report.components {
            let verdict = if c.ok { "ok" } else { "blocks" };
            let kind = match c.kind {
                families::ComponentKind::Edgeless => "EDGELESS",
                families::ComponentKind::Complete => "COMPLETE",
            };
            println!(
                "  {:?} {} size {}: {}",
                c.vertices,
                kind,
                c.vertices.len(),
                verdict
            );
        }
        println!("tame: {}", report.tame);
    }
    Ok(())
}

fn cmd_survey(
    vertices: usize,
    samples: Option<u64>,
    exhaustive: bool,
    seed: u64,
    witness_budget: Option<u64>,
    output: Option<String>,
) -> Result<(), Failure> {
    let mode = if exhaustive {
        SurveyMode::Exhaustive
    } else {
        match samples {
            Some(s) => SurveyMode::Samples(s),
            None => {
                return Err(Failure {
                    code: 2,
                    message: "provide --samples or --exhaustive".into(),
                })
            }
        }
    };
    let report = run_survey(&SurveyOptions {
        vertices,
        mode,
        seed,
        witness_budget,
    })?;
    let csv = report_to_csv(&report);
    match output {
        Some(path) => write_output(&path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn cmd_oracle(args: OracleCommand) -> Result<(), Failure> {
    match args {
        OracleCommand::Twisted { cayley, endo } => {
            let group = schema::parse_cayley_json(&read_input(&cayley)?)?;
            let images = schema::parse_endo_json(&read_input(&endo)?)?;
            let endo = FiniteEndo::new(&group, images)?;
            println!("{}", twisted_classes_finite(&group, &endo));
        }
        OracleCommand::Lattice { matrix } => {
            let m = schema::parse_matrix_json(&read_input(&matrix)?)?;
            let int = IntMatrix::from_rat_matrix(&m).ok_or_else(|| Failure {
                code: 2,
                message: "lattice oracle needs an integer matrix".into(),
            })?;
            println!("{}", twisted_count_lattice(&int)?);
        }
        OracleCommand::Reductions { cayley, endo } => {
            let group = schema::parse_cayley_json(&read_input(&cayley)?)?;
            let images = schema::parse_endo_json(&read_input(&endo)?)?;
            let endo = FiniteEndo::new(&group, images)?;
            let (full, sub) = check_subgroup_reduction(&group, &endo)?;
            println!("subgroup reduction ok: R = {full} = {sub}");
            let (full, quot) = check_quotient_reduction(&group, &endo)?;
            println!("quotient reduction ok: R = {full} = {quot}");
        }
    }
    Ok(())
}
