//! `dbe`: enumerate lines of graph and metric instances, recognise chordal
//! graphs, generate random chordal graphs and sweep instance families.
//!
//! Exit status: 0 when every check holds, 1 when a counterexample was found,
//! 2 on input errors.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dbe_core::verify::families::{distance_12_spaces, labelled_records};
use dbe_core::{
    dbe_check, emit_report, enumerate_lines, graph_metric, is_chordal, random_chordal, read_instances, sweep,
    to_graph6, Claim, InputFormat, Instance, InstanceRecord, ReportFormat, StreamError, SweepSummary,
};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "dbe", version, about = "Lines in finite metric spaces and graph metrics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Line enumeration and the n-lines-or-universal-line check
    #[command(subcommand)]
    Lines(LinesCommand),
    /// Graph structure
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Instance generators
    #[command(subcommand)]
    Gen(GenCommand),
    /// Check claims on an instance stream or a built-in family
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum LinesCommand {
    /// Print every distinct line with its defining pairs
    Enumerate(InputArgs),
    /// Report line count, universal line and witness
    Dbe(InputArgs),
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Print a perfect elimination order or an induced cycle of length >= 4
    Chordal(InputArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// Emit seeded random connected chordal graphs as graph6, one per line
    Chordal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        seed: u64,
        /// Graph `i` uses seed `seed + i`
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input file, `-` for standard input
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum)]
    format: Format,
    /// Emit canonical JSON, one document per instance
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edges,
    Matrix,
}

impl From<Format> for InputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::G6 => InputFormat::G6,
            Format::Edges => InputFormat::Edges,
            Format::Matrix => InputFormat::Matrix,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Theorem1,
    Lemma1,
    Lemma2,
    Dirac,
    Bipartite,
    Logbound,
    Dbe,
}

impl From<ClaimArg> for Claim {
    fn from(c: ClaimArg) -> Self {
        match c {
            ClaimArg::Theorem1 => Claim::Theorem1,
            ClaimArg::Lemma1 => Claim::Lemma1,
            ClaimArg::Lemma2 => Claim::Lemma2,
            ClaimArg::Dirac => Claim::Dirac,
            ClaimArg::Bipartite => Claim::BipartiteUniversal,
            ClaimArg::Logbound => Claim::Log2Bound,
            ClaimArg::Dbe => Claim::Dbe,
        }
    }
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct VerifyCommand {
    #[command(subcommand)]
    exhaustive: Option<VerifySubcommand>,
    #[command(flatten)]
    stream: Option<VerifyStream>,
}

#[derive(Args)]
struct VerifyStream {
    /// Claim to check; repeat for several
    #[arg(long, value_enum, required = true)]
    claim: Vec<ClaimArg>,
    #[arg(long = "in", value_name = "FILE", required = true)]
    input: PathBuf,
    #[arg(long, value_enum, required = true)]
    format: Format,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Abort on the first malformed record instead of skipping it
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum VerifySubcommand {
    /// Sweep every labelled instance up to a size bound
    Exhaustive {
        #[arg(long, value_enum, required = true)]
        claim: Vec<ClaimArg>,
        /// Largest instance size, at most 7
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
        nmax: u8,
        #[arg(long, value_enum, default_value = "labelled")]
        family: Family,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// All labelled graphs on 1..=nmax vertices
    Labelled,
    /// All metrics on 2..=nmax points with every distance 1 or 2
    Distance12,
}

fn open(path: &PathBuf) -> io::Result<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(BufReader::new(File::open(path)?)))
    }
}

/// Input problem, reported on stderr with exit status 2.
struct InputError(String);

impl From<io::Error> for InputError {
    fn from(e: io::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<StreamError> for InputError {
    fn from(e: StreamError) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<u8, InputError>;

fn for_each_instance(args: &InputArgs, mut f: impl FnMut(&InstanceRecord, &mut dyn Write) -> CmdResult) -> CmdResult {
    let input = open(&args.input).map_err(|e| InputError(format!("{}: {e}", args.input.display())))?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut status = 0;
    for rec in read_instances(input, args.format.into()) {
        status = status.max(f(&rec?, &mut out)?);
    }
    out.flush()?;
    Ok(status)
}

fn write_report<R: serde::Serialize + std::fmt::Display>(
    out: &mut dyn Write,
    rec: &InstanceRecord,
    report: &R,
    json: bool,
) -> io::Result<()> {
    if json {
        writeln!(out, "{}", emit_report(report, ReportFormat::Json))
    } else {
        writeln!(out, "# instance {}", rec.ordinal)?;
        write!(out, "{}", emit_report(report, ReportFormat::Text))
    }
}

fn instance_metric(rec: &InstanceRecord) -> Result<dbe_core::MetricSpace, InputError> {
    match &rec.payload {
        Instance::Metric(m) => Ok(m.clone()),
        Instance::Graph(g) => graph_metric(g).map_err(|e| InputError(format!("instance {}: {e}", rec.ordinal))),
    }
}

fn lines_enumerate(args: &InputArgs) -> CmdResult {
    for_each_instance(args, |rec, out| {
        let m = instance_metric(rec)?;
        let sys = enumerate_lines(&m).map_err(|e| InputError(format!("instance {}: {e}", rec.ordinal)))?;
        write_report(out, rec, &sys, args.json)?;
        Ok(0)
    })
}

fn lines_dbe(args: &InputArgs) -> CmdResult {
    for_each_instance(args, |rec, out| {
        let m = instance_metric(rec)?;
        let report = dbe_check(&m).map_err(|e| InputError(format!("instance {}: {e}", rec.ordinal)))?;
        write_report(out, rec, &report, args.json)?;
        Ok(if report.dbe_holds { 0 } else { EXIT_COUNTEREXAMPLE })
    })
}

fn graph_chordal(args: &InputArgs) -> CmdResult {
    for_each_instance(args, |rec, out| {
        let Instance::Graph(g) = &rec.payload else {
            return Err(InputError("graph chordal needs graph input (g6 or edges)".into()));
        };
        write_report(out, rec, &is_chordal(g), args.json)?;
        Ok(0)
    })
}

fn gen_chordal(n: usize, kmax: usize, seed: u64, count: u64) -> CmdResult {
    if n > dbe_core::io::graph6::MAX_VERTICES {
        return Err(InputError(format!("--n {n} exceeds the graph6 short form limit of 62")));
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for i in 0..count {
        let g = random_chordal(n, kmax, seed.wrapping_add(i)).map_err(|e| InputError(e.to_string()))?;
        writeln!(out, "{}", to_graph6(&g).expect("size checked above"))?;
    }
    out.flush()?;
    Ok(0)
}

fn print_summary(summary: &SweepSummary, json: bool) -> CmdResult {
    let mut out = io::stdout().lock();
    if json {
        writeln!(out, "{}", emit_report(summary, ReportFormat::Json))?;
        eprintln!("runtime: {:.3}s", summary.runtime.as_secs_f64());
    } else {
        write!(out, "{}", emit_report(summary, ReportFormat::Text))?;
    }
    Ok(if summary.all_hold() { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn verify_stream(v: &VerifyStream) -> CmdResult {
    let claims: Vec<Claim> = v.claim.iter().map(|&c| c.into()).collect();
    let input = open(&v.input).map_err(|e| InputError(format!("{}: {e}", v.input.display())))?;
    let mut malformed = 0usize;
    let strict = v.strict;
    let records = read_instances(input, v.format.into()).filter_map(|r| match r {
        Err(e) if !strict => {
            eprintln!("skipping malformed {e}");
            malformed += 1;
            None
        }
        other => Some(other),
    });
    let summary = sweep(records, &claims, v.jobs).map_err(|e| InputError(e.to_string()))?;
    let status = print_summary(&summary, v.json)?;
    if status == 0 && malformed > 0 {
        return Ok(EXIT_INPUT);
    }
    Ok(status)
}

fn verify_exhaustive(claims: &[ClaimArg], nmax: usize, family: Family, jobs: usize, json: bool) -> CmdResult {
    let claims: Vec<Claim> = claims.iter().map(|&c| c.into()).collect();
    let summary = match family {
        Family::Labelled => sweep(labelled_records(1, nmax), &claims, jobs),
        Family::Distance12 => {
            let recs = (2..=nmax.max(2))
                .flat_map(distance_12_spaces)
                .enumerate()
                .map(|(i, m)| Ok(InstanceRecord::generated(i, Instance::Metric(m))));
            sweep(recs, &claims, jobs)
        }
    }
    .map_err(|e| InputError(e.to_string()))?;
    print_summary(&summary, json)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Lines(LinesCommand::Enumerate(a)) => lines_enumerate(&a),
        Command::Lines(LinesCommand::Dbe(a)) => lines_dbe(&a),
        Command::Graph(GraphCommand::Chordal(a)) => graph_chordal(&a),
        Command::Gen(GenCommand::Chordal { n, kmax, seed, count }) => gen_chordal(n, kmax, seed, count),
        Command::Verify(VerifyCommand {
            exhaustive:
                Some(VerifySubcommand::Exhaustive {
                    claim,
                    nmax,
                    family,
                    jobs,
                    json,
                }),
            ..
        }) => verify_exhaustive(&claim, nmax as usize, family, jobs, json),
        Command::Verify(VerifyCommand { stream: Some(v), .. }) => verify_stream(&v),
        Command::Verify(_) => Err(InputError(
            "verify needs --claim, --in and --format, or a subcommand".into(),
        )),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
