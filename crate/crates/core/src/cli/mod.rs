//! Command-line front end. [`run`] does all the work and returns the exit
//! code with both output streams, so tests can drive it without a process.

pub mod format;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dag;
use crate::error::{Error, Result};
use crate::exact::{self, SearchConfig};
use crate::graph::{StaticGraph, Vertex};
use crate::ml;
use crate::reductions::{mal, masl, msl};
use crate::steiner;
use crate::temporal::{Labeling, Time};

pub use format::{emit, emit_labeling, parse, parse_graph, InstanceFile, Problem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "templab",
    version,
    about = "Minimum time-labelings of temporal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Optimal temporally connecting labeling (no age bound).
    Ml(FileArgs),
    /// Minimum reachability-preserving labeling of a DAG.
    Dag(FileArgs),
    /// Minimum labeling connecting a terminal set.
    Msl(SteinerArgs),
    /// Exhaustive minimum labeling with an age bound.
    MalExact(ExactArgs),
    /// Exhaustive minimum labeling for a terminal set with an age bound.
    MaslExact(ExactArgs),
    /// Cycle formula value and optimal labeling at age floor(n/2).
    Cycle(CycleArgs),
    /// Union-of-BFS-trees upper bound labeling.
    Bound(FileArgs),
    /// Checks a labeled instance.
    Verify(VerifyArgs),
    /// Generates a hardness gadget instance.
    Reduce(ReduceArgs),
}

#[derive(Debug, Args)]
struct FileArgs {
    /// Instance file, or `-` for standard input.
    input: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SteinerArgs {
    #[command(flatten)]
    file: FileArgs,
    #[arg(long, value_delimiter = ',')]
    terminals: Option<Vec<Vertex>>,
}

#[derive(Debug, Args)]
struct ExactArgs {
    #[command(flatten)]
    file: FileArgs,
    #[arg(long, value_delimiter = ',')]
    terminals: Option<Vec<Vertex>>,
    #[arg(long)]
    age: Option<Time>,
    /// Starting label count for the descending search.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, default_value_t = SearchConfig::default().max_slots)]
    max_slots: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Debug, Args)]
struct CycleArgs {
    #[arg(long)]
    n: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    file: FileArgs,
    #[arg(long, value_delimiter = ',')]
    terminals: Option<Vec<Vertex>>,
    #[arg(long)]
    age: Option<Time>,
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Source {
    Xor3Mal,
    VcMsl,
    MccMasl,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    from: Source,
    /// Source graph (vc-msl and mcc-masl).
    input: Option<PathBuf>,
    /// Variable count for a random formula (xor3-mal).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cover size (vc-msl) or color count (mcc-masl).
    #[arg(long)]
    k: Option<usize>,
    /// Color of every source vertex (mcc-masl).
    #[arg(long, value_delimiter = ',')]
    coloring: Option<Vec<usize>>,
    /// Certificate: 0/1 assignment, vertex cover, or multicolored clique.
    #[arg(long, value_delimiter = ',')]
    cert: Option<Vec<usize>>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TooLarge { .. } | Error::Infeasible(_) => EXIT_TOO_LARGE,
        _ => EXIT_USAGE,
    }
}

fn read_input(path: &PathBuf) -> Result<InstanceFile> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}

/// Output text plus the exit code it should end with.
struct Report {
    text: String,
    code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report {
            text,
            code: EXIT_OK,
        }
    }
}

/// Parses `args` (program name first) and executes the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let output = match &cli.command {
        Command::Ml(a) | Command::Dag(a) | Command::Bound(a) => a.output.clone(),
        Command::Msl(a) => a.file.output.clone(),
        Command::MalExact(a) | Command::MaslExact(a) => a.file.output.clone(),
        Command::Verify(a) => a.file.output.clone(),
        Command::Cycle(a) => a.output.clone(),
        Command::Reduce(a) => a.output.clone(),
    };
    let result = match cli.command {
        Command::Ml(a) => cmd_ml(&a),
        Command::Dag(a) => cmd_dag(&a),
        Command::Msl(a) => cmd_msl(&a),
        Command::MalExact(a) => cmd_exact(&a, false),
        Command::MaslExact(a) => cmd_exact(&a, true),
        Command::Cycle(a) => cmd_cycle(&a),
        Command::Bound(a) => cmd_bound(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Reduce(a) => cmd_reduce(&a),
    };
    match result {
        Ok(report) => match output {
            Some(path) => match std::fs::write(&path, &report.text) {
                Ok(()) => Outcome {
                    code: report.code,
                    ..Outcome::default()
                },
                Err(e) => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                },
            },
            None => Outcome {
                code: report.code,
                stdout: report.text,
                stderr: String::new(),
            },
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn with_count(k: usize, body: &str) -> String {
    format!("k = {k}\n{body}")
}

fn labeled_file(mut file: InstanceFile, labeling: Labeling) -> String {
    let k = labeling.len();
    file.labeling = labeling;
    with_count(k, &emit(&file))
}

fn cmd_ml(a: &FileArgs) -> Result<Report> {
    let mut file = read_input(&a.input)?;
    let lab = ml::label(file.graph()?)?;
    file.problem = Some(Problem::Ml);
    Ok(Report::ok(labeled_file(file, lab)))
}

fn cmd_dag(a: &FileArgs) -> Result<Report> {
    let file = read_input(&a.input)?;
    let d = file.digraph()?;
    let layering = dag::canonical_layering(d)?;
    let tg = dag::min_labeling(d)?;
    let mut text = String::new();
    for (i, layer) in layering.layers.iter().enumerate() {
        write!(text, "# layer {i}:").unwrap();
        for v in layer {
            write!(text, " {v}").unwrap();
        }
        text.push('\n');
    }
    text.push_str(&labeled_file(file, tg.into_parts().1));
    Ok(Report::ok(text))
}

fn cmd_msl(a: &SteinerArgs) -> Result<Report> {
    let mut file = read_input(&a.file.input)?;
    let terminals = a
        .terminals
        .clone()
        .or_else(|| file.terminals.clone())
        .ok_or_else(|| usage("msl needs --terminals or a 'terminals' line"))?;
    let lab = steiner::msl_label(file.graph()?, &terminals)?;
    file.problem = Some(Problem::Msl);
    file.terminals = Some(terminals);
    Ok(Report::ok(labeled_file(file, lab)))
}

fn cmd_exact(a: &ExactArgs, steiner: bool) -> Result<Report> {
    let mut file = read_input(&a.file.input)?;
    let age = a
        .age
        .or(file.age)
        .ok_or_else(|| usage("an age bound is required (--age)"))?;
    let g: &StaticGraph = file.graph()?;
    let terminals: Vec<Vertex> = if steiner {
        a.terminals
            .clone()
            .or_else(|| file.terminals.clone())
            .ok_or_else(|| usage("masl-exact needs --terminals or a 'terminals' line"))?
    } else {
        (0..g.n()).collect()
    };
    let cfg = SearchConfig {
        max_slots: a.max_slots,
        budget_hint: a.budget,
        workers: a.workers,
    };
    let res = exact::exact_min_labels(g, &terminals, Some(age), &cfg)?;
    file.problem = Some(if steiner { Problem::Masl } else { Problem::Mal });
    file.age = Some(age);
    file.budget = None;
    if steiner {
        file.terminals = Some(terminals);
    }
    Ok(Report::ok(labeled_file(file, res.witness)))
}

fn cmd_cycle(a: &CycleArgs) -> Result<Report> {
    if a.n < 3 {
        return Err(usage("cycles need n >= 3"));
    }
    match exact::cycle_labeling(a.n) {
        Ok(tg) => {
            let file = InstanceFile {
                age: Some((a.n / 2) as Time),
                ..InstanceFile::from_temporal(tg)
            };
            let k = exact::kappa_cycle(a.n)?;
            debug_assert_eq!(k, file.labeling.len());
            Ok(Report::ok(with_count(k, &emit(&file))))
        }
        Err(Error::Unsupported(_)) => {
            let g = StaticGraph::new(a.n, (0..a.n).map(|i| (i, (i + 1) % a.n)))?;
            let age = (a.n / 2) as Time;
            let all: Vec<Vertex> = (0..a.n).collect();
            let res = exact::exact_min_labels(&g, &all, Some(age), &SearchConfig::default())?;
            let file = InstanceFile {
                age: Some(age),
                ..InstanceFile::from_graph(g)
            };
            let text = format!(
                "# no closed form for n = {}; exact search\n{}",
                a.n,
                labeled_file(file, res.witness)
            );
            Ok(Report::ok(text))
        }
        Err(e) => Err(e),
    }
}

fn cmd_bound(a: &FileArgs) -> Result<Report> {
    let file = read_input(&a.input)?;
    let tg = exact::bfs_union_upper_bound(file.graph()?)?;
    Ok(Report::ok(labeled_file(file, tg.into_parts().1)))
}

fn cmd_verify(a: &VerifyArgs) -> Result<Report> {
    let file = read_input(&a.file.input)?;
    let terminals = a.terminals.clone().or_else(|| file.terminals.clone());
    let age = a.age.or(file.age);
    let budget = a.budget.or(file.budget);
    let tg = file.temporal()?;
    let report = tg.verify(terminals.as_deref(), age, budget)?;
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    Ok(Report {
        text: format!("{report}\n{verdict}\n"),
        code,
    })
}

/// Appends the certificate to the instance and verifies it.
fn certified(mut file: InstanceFile, lab: Labeling) -> Result<Report> {
    file.labeling = lab;
    let tg = file.temporal()?;
    let report = tg.verify(file.terminals.as_deref(), file.age, file.budget)?;
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    let mut text = String::new();
    for line in report.to_string().lines() {
        writeln!(text, "# {line}").unwrap();
    }
    writeln!(text, "# certificate {verdict}").unwrap();
    text.push_str(&emit(&file));
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    Ok(Report { text, code })
}

fn cmd_reduce(a: &ReduceArgs) -> Result<Report> {
    match a.from {
        Source::Xor3Mal => {
            let n = a.n.ok_or_else(|| usage("xor3-mal needs --n"))?;
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            let phi = mal::Xor3Formula::random(n, &mut rng)?;
            let inst = mal::build_mal_instance(&phi)?;
            let mut head = String::from("# clauses:");
            for (x, y) in phi.clauses() {
                write!(head, " {x}-{y}").unwrap();
            }
            head.push('\n');
            let mut file = InstanceFile {
                problem: Some(Problem::Mal),
                age: Some(inst.age),
                ..InstanceFile::from_graph(inst.graph.clone())
            };
            let Some(bits) = &a.cert else {
                return Ok(Report::ok(head + &emit(&file)));
            };
            if let Some(b) = bits.iter().find(|&&b| b > 1) {
                return Err(usage(format!("assignment values must be 0 or 1, got {b}")));
            }
            let tau = mal::TruthAssignment(bits.iter().map(|&b| b == 1).collect());
            let lab = mal::certificate_mal_labeling(&inst, &tau)?;
            let k_sat = phi.satisfied(&tau);
            writeln!(head, "# satisfied clauses: {k_sat}").unwrap();
            file.budget = usize::try_from(inst.budget(k_sat)).ok();
            let mut report = certified(file, lab)?;
            report.text.insert_str(0, &head);
            Ok(report)
        }
        Source::VcMsl => {
            let input = a
                .input
                .as_ref()
                .ok_or_else(|| usage("vc-msl needs a source graph file"))?;
            let k = a.k.ok_or_else(|| usage("vc-msl needs --k"))?;
            let src = read_input(input)?;
            let inst = msl::build_msl_instance(src.graph()?, k)?;
            let file = InstanceFile {
                problem: Some(Problem::Msl),
                terminals: Some(inst.terminals.clone()),
                budget: Some(inst.budget),
                ..InstanceFile::from_graph(inst.graph.clone())
            };
            match &a.cert {
                None => Ok(Report::ok(emit(&file))),
                Some(cover) => certified(file, msl::certificate_msl_labeling(&inst, cover)?),
            }
        }
        Source::MccMasl => {
            let input = a
                .input
                .as_ref()
                .ok_or_else(|| usage("mcc-masl needs a source graph file"))?;
            let k = a.k.ok_or_else(|| usage("mcc-masl needs --k"))?;
            let coloring = a
                .coloring
                .as_ref()
                .ok_or_else(|| usage("mcc-masl needs --coloring"))?;
            let src = read_input(input)?;
            let inst = masl::build_masl_instance(src.graph()?, k, coloring)?;
            let file = InstanceFile {
                problem: Some(Problem::Masl),
                terminals: Some(inst.terminals.clone()),
                age: Some(inst.age),
                budget: Some(inst.budget),
                ..InstanceFile::from_graph(inst.graph.clone())
            };
            match &a.cert {
                None => Ok(Report::ok(emit(&file))),
                Some(clique) => certified(file, masl::certificate_masl_labeling(&inst, clique)?),
            }
        }
    }
}
