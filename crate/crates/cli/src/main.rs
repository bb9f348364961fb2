//! `chordweight`: evaluate partition functions and weight systems, enumerate diagrams and
//! tangles, and run 4T, antisymmetrizer and connection-rank checks.
//!
//! Exit codes: 0 success, 1 a check failed, 2 unreadable or malformed input, 3 invalid
//! data or a size guard tripped.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chordweight::checks::{
    check_weight_system, connection_submatrix, delta_tangle, f_join, f_of, rank_report, theta, Counterexample,
    PartitionOracle,
};
use chordweight::enumerate::{enumerate_diagrams, enumerate_tangles, enumerate_tangles_up_to, sample_from, DEFAULT_BUDGET};
use chordweight::format::{self, diagram_to_json, parse_document, tangle_to_json, Document};
use chordweight::lie::{builtin, casimir_tensor};
use chordweight::partition::{check_dimension, eval_diagram};
use chordweight::rational;
use chordweight::tangle::{Head, Tail};
use chordweight::{ChordDiagram, Error, QuantumTangle, SymTensor, Tangle};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "chordweight", version, about = "Exact weight systems on multiloop chord diagrams")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest number of wirings a single enumeration may scan.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Tsv,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Sym-tensor document.
    #[arg(long)]
    tensor: Option<PathBuf>,
    /// Lie algebra document; its Casimir tensor is used.
    #[arg(long)]
    lie: Option<PathBuf>,
    /// Builtin algebra: gl<n>, sl2 or abelian<d>, e.g. gl2 or gl(3).
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate p_R on a diagram.
    Eval {
        #[command(flatten)]
        source: Source,
        /// Diagram document (a 0-tangle document is accepted too).
        #[arg(long, conflicts_with = "stdin", required_unless_present = "stdin")]
        diagram: Option<PathBuf>,
        /// Read one diagram document per line from standard input.
        #[arg(long)]
        stdin: bool,
    },
    /// Check the 4T relations and multiplicativity up to a chord bound.
    #[command(name = "check-4t")]
    Check4t {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 2)]
        max_chords: usize,
    },
    /// Exact rank of a connection submatrix on k-tangles.
    Rank {
        #[command(flatten)]
        source: Source,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        max_chords: usize,
        /// Use this many sampled tangles instead of the whole family.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// List isomorphism classes of diagrams (or k-tangles) with exactly m chords.
    Enumerate {
        #[arg(short)]
        m: usize,
        #[arg(long)]
        tangles: bool,
        #[arg(short, default_value_t = 0, requires = "tangles")]
        k: usize,
    },
    /// Check θ(Δ) = 0 and f(Δ·T) = 0 on sampled (n+1)-tangles.
    #[command(name = "delta-check")]
    DeltaCheck {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        max_chords: usize,
    },
}

/// Why a command did not succeed; maps onto the exit code.
enum Failure {
    CheckFailed,
    Input(String),
    Invalid(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::CheckFailed => 1,
            Failure::Input(_) => 2,
            Failure::Invalid(_) => 3,
        }
    }
}

fn from_error(context: &str, e: Error) -> Failure {
    match e {
        Error::Parse(msg) => Failure::Input(format!("{context}: {msg}")),
        other => Failure::Invalid(format!("{context}: {other}")),
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_tensor(source: &Source) -> Result<SymTensor, Failure> {
    if let Some(path) = &source.tensor {
        let ctx = path.display().to_string();
        return format::parse_sym_tensor(&read(path)?).map_err(|e| from_error(&ctx, e));
    }
    let (ctx, parsed) = if let Some(path) = &source.lie {
        (path.display().to_string(), format::parse_lie(&read(path)?))
    } else {
        let name = source.builtin.as_deref().expect("clap enforces one source");
        (format!("builtin {name}"), builtin(name))
    };
    let (g, rho) = parsed.map_err(|e| from_error(&ctx, e))?;
    casimir_tensor(&g, &rho).map_err(|e| from_error(&ctx, e))
}

fn parse_diagram(text: &str, ctx: &str) -> Result<ChordDiagram, Failure> {
    match parse_document(text).map_err(|e| from_error(ctx, e))? {
        Document::Diagram(d) => Ok(d),
        Document::Tangle(t) => t.to_diagram().map_err(|e| from_error(ctx, e)),
        other => Err(Failure::Invalid(format!("{ctx}: expected a diagram document, found {:?}", other.kind()))),
    }
}

fn emit(out: &mut impl Write, line: &str) {
    // A closed pipe is not worth a panic.
    let _ = writeln!(out, "{line}");
}

fn ref_list<T>(items: impl Iterator<Item = T>, show: impl Fn(T) -> String) -> String {
    items.map(show).collect::<Vec<_>>().join(",")
}

fn head_token(h: Head) -> String {
    match h {
        Head::Vertex(v) => (v + 1).to_string(),
        Head::Sink(i) => format!("sink:{}", i + 1),
    }
}

fn tail_token(t: Tail) -> String {
    match t {
        Tail::Vertex(v) => (v + 1).to_string(),
        Tail::Root(i) => format!("root:{}", i + 1),
    }
}

fn tangle_line(t: &Tangle, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => tangle_to_json(t),
        OutputFormat::Tsv => format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            t.k(),
            t.m(),
            ref_list(0..2 * t.m(), |v| head_token(t.head_of_vertex(v))),
            ref_list(0..t.k(), |i| head_token(t.head_of_root(i))),
            ref_list(0..t.k(), |i| tail_token(t.tail_of_sink(i))),
            t.loops()
        ),
    }
}

fn diagram_line(d: &ChordDiagram, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => diagram_to_json(d),
        OutputFormat::Tsv => format!("{}\t{}\t{}", d.m(), ref_list(d.succ().iter(), |v| (v + 1).to_string()), d.loops()),
    }
}

fn eval(cli: &Cli, source: &Source, diagram: &Option<PathBuf>, stdin: bool, out: &mut impl Write) -> Outcome {
    let r = load_tensor(source)?;
    if let Some(path) = diagram {
        let d = parse_diagram(&read(path)?, &path.display().to_string())?;
        emit(out, &rational::format(&eval_diagram(&r, &d)));
        return Ok(());
    }
    debug_assert!(stdin);
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line.map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        if line.trim().is_empty() {
            continue;
        }
        let d = parse_diagram(&line, &format!("stdin line {}", i + 1))?;
        let value = rational::format(&eval_diagram(&r, &d));
        match cli.format {
            OutputFormat::Json => emit(out, &value),
            OutputFormat::Tsv => emit(out, &format!("{}\t{value}", i + 1)),
        }
    }
    Ok(())
}

fn check_4t(cli: &Cli, source: &Source, max_chords: usize, out: &mut impl Write) -> Outcome {
    let f = f_of(load_tensor(source)?);
    let found = check_weight_system(&f, max_chords, cli.budget).map_err(|e| from_error("check-4t", e))?;
    let Some(c) = found else {
        emit(out, "ok");
        return Ok(());
    };
    match c {
        Counterexample::FourTerm { tangle, value } => {
            emit(out, &format!("counterexample: f(tau4 . T) = {}", rational::format(&value)));
            emit(out, &tangle_line(&tangle, cli.format));
        }
        Counterexample::EmptyValue { value } => {
            emit(out, &format!("counterexample: f(empty) = {}", rational::format(&value)));
        }
        Counterexample::NotMultiplicative { left, right, union, product } => {
            emit(
                out,
                &format!(
                    "counterexample: f(C u D) = {} but f(C) f(D) = {}",
                    rational::format(&union),
                    rational::format(&product)
                ),
            );
            emit(out, &diagram_line(&left, cli.format));
            emit(out, &diagram_line(&right, cli.format));
        }
    }
    Err(Failure::CheckFailed)
}

fn rank(cli: &Cli, source: &Source, k: usize, max_chords: usize, samples: Option<usize>, out: &mut impl Write) -> Outcome {
    let f = f_of(load_tensor(source)?);
    let all = enumerate_tangles_up_to(k, max_chords, cli.budget).map_err(|e| from_error("rank", e))?;
    let (family, label) = match samples {
        Some(s) => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let picked = sample_from(&all, s, &mut rng);
            let label = format!("{} sampled of {} {k}-tangles with <= {max_chords} chords", picked.len(), all.len());
            (picked, label)
        }
        None => (all, format!("all {k}-tangles with <= {max_chords} chords")),
    };
    let m = connection_submatrix(&f, k, &family, &family).map_err(|e| from_error("rank", e))?;
    let report = rank_report(&f, &m, &label);
    match cli.format {
        OutputFormat::Json => emit(out, &serde_json::to_string(&report).expect("serializable")),
        OutputFormat::Tsv => {
            emit(out, "k\tfamily\trows\tcols\trank\tbound\tok");
            emit(
                out,
                &format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    report.k, report.family, report.size[0], report.size[1], report.rank, report.bound, report.ok
                ),
            );
        }
    }
    if report.ok {
        Ok(())
    } else {
        Err(Failure::CheckFailed)
    }
}

fn enumerate(cli: &Cli, m: usize, tangles: bool, k: usize, out: &mut impl Write) -> Outcome {
    if tangles {
        for t in enumerate_tangles(k, m, cli.budget).map_err(|e| from_error("enumerate", e))? {
            emit(out, &tangle_line(&t, cli.format));
        }
    } else {
        for d in enumerate_diagrams(m, cli.budget).map_err(|e| from_error("enumerate", e))? {
            emit(out, &diagram_line(&d, cli.format));
        }
    }
    Ok(())
}

fn delta_check(
    cli: &Cli,
    source: &Source,
    n: usize,
    samples: usize,
    max_chords: usize,
    out: &mut impl Write,
) -> Outcome {
    let r = load_tensor(source)?;
    check_dimension(&r, n).map_err(|e| from_error("delta-check", e))?;
    let f: PartitionOracle = f_of(r);
    let delta = delta_tangle(n).map_err(|e| from_error("delta-check", e))?;
    let theta_value = theta(&f, &delta).map_err(|e| from_error("delta-check", e))?;
    let family = enumerate_tangles_up_to(n + 1, max_chords, cli.budget).map_err(|e| from_error("delta-check", e))?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let picked = sample_from(&family, samples, &mut rng);
    let mut violations = Vec::new();
    for t in &picked {
        let v = f_join(&f, &delta, &QuantumTangle::from_tangle(t)).map_err(|e| from_error("delta-check", e))?;
        if v != rational::zero() {
            violations.push(t.clone());
        }
    }
    let ok = theta_value == rational::zero() && violations.is_empty();
    let theta_text = rational::format(&theta_value);
    match cli.format {
        OutputFormat::Json => emit(
            out,
            &serde_json::json!({
                "n": n,
                "theta": theta_text,
                "samples": picked.len(),
                "violations": violations.len(),
                "ok": ok,
            })
            .to_string(),
        ),
        OutputFormat::Tsv => {
            emit(out, "n\ttheta\tsamples\tviolations\tok");
            emit(out, &format!("{n}\t{theta_text}\t{}\t{}\t{ok}", picked.len(), violations.len()));
        }
    }
    for t in &violations {
        emit(out, &tangle_line(t, cli.format));
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::CheckFailed)
    }
}

fn run(cli: &Cli) -> Outcome {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Eval { source, diagram, stdin } => eval(cli, source, diagram, *stdin, &mut out),
        Command::Check4t { source, max_chords } => check_4t(cli, source, *max_chords, &mut out),
        Command::Rank { source, k, max_chords, samples } => rank(cli, source, *k, *max_chords, *samples, &mut out),
        Command::Enumerate { m, tangles, k } => enumerate(cli, *m, *tangles, *k, &mut out),
        Command::DeltaCheck { source, n, samples, max_chords } => {
            delta_check(cli, source, *n, *samples, *max_chords, &mut out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::CheckFailed => {}
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Invalid(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}
