//! `randic`: index evaluation, family generation, bounds and exhaustive
//! verification from the command line.
//!
//! Exit status: 0 on success, 1 when a verification suite has a failing
//! non-exploratory case, 2 on usage or input errors. Errors are printed as a
//! single line `error[<kind>]: <reason>`.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use randic_core::enumeration::{self, Graph6Lines};
use randic_core::families::FamilySpec;
use randic_core::verifier::{self, SuiteConfig, DEFAULT_TOLERANCE};
use randic_core::{zeroth_order_general_randic, Gamma, Graph, Query, Theorem};

#[derive(Debug)]
struct CliError {
    kind: &'static str,
    message: String,
}

impl CliError {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        Self {
            kind,
            message: message.to_string(),
        }
    }

    fn usage(message: impl ToString) -> Self {
        Self::new("usage", message)
    }

    fn input(message: impl ToString) -> Self {
        Self::new("input", message)
    }
}

type CliResult<T> = Result<T, CliError>;

/// A gamma given on the command line: a plain decimal literal, nonzero.
fn parse_gamma(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let body = t.strip_prefix(['-', '+']).unwrap_or(t);
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if body.is_empty() || (int.is_empty() && frac.is_empty()) || !digits(int) || !digits(frac) {
        return Err(format!("gamma {s:?} is not a decimal literal"));
    }
    let v: f64 = t.parse().map_err(|e| format!("gamma {s:?}: {e}"))?;
    if v == 0.0 {
        return Err("gamma must be nonzero".into());
    }
    Ok(v)
}

#[derive(Debug, Parser)]
#[command(name = "randic", version, about = "Zeroth-order general Randić index toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the index of graph6 input (--graph6, a file, or stdin).
    Index(IndexArgs),
    /// Emit a family member as one graph6 line.
    Gen(GenArgs),
    /// Print a bound and its extremal graphs as JSON.
    Bound(BoundArgs),
    /// Write the built-in corpus of connected graphs as graph6.
    Enumerate(EnumerateArgs),
    /// Run the exhaustive verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct IndexArgs {
    /// Comma-separated exponents, e.g. -1,-0.5.
    #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_gamma)]
    gamma: Vec<f64>,
    /// A single graph in graph6.
    #[arg(long, conflicts_with = "file")]
    graph6: Option<String>,
    /// File of graph6 lines; stdin when absent.
    file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Family {
    Complete,
    Cycle,
    Path,
    Star,
    Multipartite,
    Turan,
    Pineapple,
    StarClique,
    PendantCycle,
    Kite,
    ConnectivitySplit,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    /// Part sizes for multipartite.
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
    /// Pendants per clique vertex for star_clique.
    #[arg(long, value_delimiter = ',')]
    pendants: Option<Vec<usize>>,
    /// First clique size for connectivity_split.
    #[arg(long)]
    n1: Option<usize>,
}

#[derive(Debug, Args)]
struct BoundArgs {
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    c: usize,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_gamma)]
    gamma: f64,
    /// Evaluate outside the proven ranges.
    #[arg(long)]
    exploratory: bool,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Every theorem.
    #[arg(long, conflicts_with = "theorem")]
    all: bool,
    /// Theorem ids (repeatable or comma-separated).
    #[arg(long, value_delimiter = ',')]
    theorem: Vec<String>,
    /// Orders to verify.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_gamma)]
    gamma: Vec<f64>,
    /// graph6 corpus, as PATH or N=PATH; needed for orders above 7.
    #[arg(long)]
    corpus: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, env = "RANDIC_JOBS")]
    jobs: Option<usize>,
    #[arg(long)]
    tolerance: Option<f64>,
    /// Also run cases outside the proven ranges.
    #[arg(long)]
    exploratory: bool,
    /// JSON suite description; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    theorems: Option<Vec<Theorem>>,
    orders: Option<Vec<usize>>,
    gammas: Option<Vec<f64>>,
    exploratory: Option<bool>,
    tolerance: Option<f64>,
    jobs: Option<usize>,
    corpus: Option<BTreeMap<usize, PathBuf>>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("error[usage]: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) if e.kind == "pipe" => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {}", e.kind, e.message.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Index(a) => index(a, &mut out)?,
        Command::Gen(a) => gen(a, &mut out)?,
        Command::Bound(a) => bound(a, &mut out)?,
        Command::Enumerate(a) => enumerate(a, &mut out)?,
        Command::Verify(a) => return verify(a, &mut out),
    }
    Ok(ExitCode::SUCCESS)
}

fn write_err(e: io::Error) -> CliError {
    if e.kind() == io::ErrorKind::BrokenPipe {
        // the reader went away (e.g. `| head`); not worth reporting
        return CliError::new("pipe", e);
    }
    CliError::new("io", e)
}

fn index(a: IndexArgs, out: &mut impl Write) -> CliResult<()> {
    let gammas = a
        .gamma
        .iter()
        .map(|&g| Gamma::new(g).map_err(CliError::usage))
        .collect::<CliResult<Vec<_>>>()?;
    let graphs: Vec<Graph> = match (&a.graph6, &a.file) {
        (Some(s), _) => vec![Graph::from_graph6(s).map_err(CliError::input)?],
        (None, Some(path)) => collect_graphs(enumeration::ingest(path).map_err(CliError::input)?)?,
        (None, None) => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map_err(write_err)?;
            collect_graphs(Graph6Lines::new(io::Cursor::new(text), "<stdin>"))?
        }
    };
    if graphs.is_empty() {
        return Err(CliError::input("no graphs in input"));
    }
    for g in &graphs {
        let values = gammas
            .iter()
            .map(|&gm| zeroth_order_general_randic(g, gm).map(|v| v.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::input)?;
        writeln!(out, "{}", values.join("\t")).map_err(write_err)?;
    }
    Ok(())
}

fn collect_graphs<R: BufRead>(lines: Graph6Lines<R>) -> CliResult<Vec<Graph>> {
    lines.collect::<Result<_, _>>().map_err(CliError::input)
}

fn gen(a: GenArgs, out: &mut impl Write) -> CliResult<()> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::usage(format!("--{flag} is required for this family")))
    };
    let spec = match a.family {
        Family::Complete => FamilySpec::Complete { n: need(a.n, "n")? },
        Family::Cycle => FamilySpec::Cycle { n: need(a.n, "n")? },
        Family::Path => FamilySpec::Path { n: need(a.n, "n")? },
        Family::Star => FamilySpec::Star { n: need(a.n, "n")? },
        Family::Multipartite => FamilySpec::Multipartite {
            parts: a
                .parts
                .ok_or_else(|| CliError::usage("--parts is required for multipartite"))?,
        },
        Family::Turan => FamilySpec::Turan {
            n: need(a.n, "n")?,
            c: need(a.c, "c")?,
        },
        Family::Pineapple => FamilySpec::Pineapple {
            n: need(a.n, "n")?,
            c: need(a.c, "c")?,
        },
        Family::StarClique => FamilySpec::StarClique {
            pendants: a
                .pendants
                .ok_or_else(|| CliError::usage("--pendants is required for star_clique"))?,
        },
        Family::PendantCycle => FamilySpec::PendantCycle {
            n: need(a.n, "n")?,
            c: need(a.c, "c")?,
        },
        Family::Kite => FamilySpec::Kite {
            n: need(a.n, "n")?,
            c: need(a.c, "c")?,
        },
        Family::ConnectivitySplit => FamilySpec::ConnectivitySplit {
            n: need(a.n, "n")?,
            c: need(a.c, "c")?,
            n1: need(a.n1, "n1")?,
        },
    };
    let g = spec.generate().map_err(|e| CliError::new("range", e))?;
    let text = g.to_graph6().map_err(|e| CliError::new("range", e))?;
    writeln!(out, "{text}").map_err(write_err)
}

#[derive(Serialize)]
struct Witness {
    #[serde(flatten)]
    spec: FamilySpec,
    graph6: String,
}

#[derive(Serialize)]
struct BoundOutput {
    theorem: Theorem,
    n: usize,
    c: usize,
    gamma: f64,
    bound: f64,
    exploratory: bool,
    witnesses: Vec<Witness>,
}

fn bound(a: BoundArgs, out: &mut impl Write) -> CliResult<()> {
    let theorem: Theorem = a.theorem.parse().map_err(CliError::usage)?;
    let gamma = Gamma::new(a.gamma).map_err(CliError::usage)?;
    let query = Query::new(theorem, a.n, a.c, gamma).exploratory(a.exploratory);
    let range = |e| CliError::new("range", e);
    let value = query.bound_value().map_err(range)?;
    let witnesses = match query.extremal_witnesses() {
        Ok(ch) => ch.witnesses,
        Err(_) if a.exploratory => Vec::new(),
        Err(e) => return Err(range(e)),
    };
    let witnesses = witnesses
        .into_iter()
        .map(|spec| {
            let g = spec.generate().map_err(|e| CliError::new("range", e))?;
            let graph6 = g.to_graph6().map_err(|e| CliError::new("range", e))?;
            Ok(Witness { spec, graph6 })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let report = BoundOutput {
        theorem,
        n: a.n,
        c: a.c,
        gamma: a.gamma,
        bound: value,
        exploratory: a.exploratory,
        witnesses,
    };
    let json = serde_json::to_string_pretty(&report).map_err(|e| CliError::new("io", e))?;
    writeln!(out, "{json}").map_err(write_err)
}

fn enumerate(a: EnumerateArgs, out: &mut impl Write) -> CliResult<()> {
    let count = match &a.out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
            enumeration::write_corpus(a.n, io::BufWriter::new(file))
        }
        None => enumeration::write_corpus(a.n, &mut *out),
    }
    .map_err(|e| CliError::new("range", e))?;
    eprintln!("{count} connected graphs of order {}", a.n);
    Ok(())
}

/// `N=PATH` or a bare path whose order is read from its first graph.
fn parse_corpus(arg: &str) -> CliResult<(usize, PathBuf)> {
    if let Some((n, path)) = arg.split_once('=') {
        if let Ok(n) = n.parse() {
            return Ok((n, PathBuf::from(path)));
        }
    }
    let path = Path::new(arg);
    let mut lines = Graph6Lines::new(
        BufReader::new(
            File::open(path).map_err(|e| CliError::input(format!("{arg}: {e}")))?,
        ),
        path,
    );
    match lines.next() {
        Some(Ok(g)) => Ok((g.order(), path.to_path_buf())),
        Some(Err(e)) => Err(CliError::input(format!("{arg}: {e}"))),
        None => Err(CliError::input(format!("{arg}: empty corpus"))),
    }
}

fn suite_config(a: &VerifyArgs) -> CliResult<SuiteConfig> {
    let file: ConfigFile = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?
        }
        None => ConfigFile::default(),
    };

    let theorems = if a.all {
        Theorem::ALL.to_vec()
    } else if !a.theorem.is_empty() {
        a.theorem
            .iter()
            .map(|t| t.parse().map_err(CliError::usage))
            .collect::<CliResult<_>>()?
    } else {
        file.theorems.unwrap_or_else(|| Theorem::ALL.to_vec())
    };
    let orders = if a.n.is_empty() {
        file.orders
            .ok_or_else(|| CliError::usage("--n is required (or `orders` in --config)"))?
    } else {
        a.n.clone()
    };
    let gammas = if a.gamma.is_empty() {
        file.gammas.unwrap_or_else(|| vec![-1.0])
    } else {
        a.gamma.clone()
    };
    if gammas.iter().any(|g| *g == 0.0 || !g.is_finite()) {
        return Err(CliError::usage("gamma must be finite and nonzero"));
    }
    let tolerance = a.tolerance.or(file.tolerance).unwrap_or(DEFAULT_TOLERANCE);
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(CliError::usage("--tolerance must be positive"));
    }
    let jobs = a
        .jobs
        .or(file.jobs)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));

    let mut corpus_files = file.corpus.unwrap_or_default();
    for arg in &a.corpus {
        let (n, path) = parse_corpus(arg)?;
        corpus_files.insert(n, path);
    }

    Ok(SuiteConfig {
        orders,
        gammas,
        theorems,
        exploratory: a.exploratory || file.exploratory.unwrap_or(false),
        tolerance,
        jobs,
        corpus_files,
    })
}

fn verify(a: VerifyArgs, out: &mut impl Write) -> CliResult<ExitCode> {
    let config = suite_config(&a)?;
    let reports = verifier::verify_suite(&config).map_err(|e| match e {
        verifier::VerifyError::OrderOutOfRange(_) | verifier::VerifyError::NoCorpus(_) => {
            CliError::new("range", e)
        }
        _ => CliError::input(e),
    })?;
    let body = match a.format {
        Format::Json => verifier::reports_to_json(&reports) + "\n",
        Format::Csv => verifier::reports_to_csv(&reports).map_err(|e| CliError::new("io", e))?,
        Format::Text => verifier::reports_to_text(&reports),
    };
    match &a.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?,
        None => out.write_all(body.as_bytes()).map_err(write_err)?,
    }

    let passed = verifier::suite_passed(&reports);
    let strict: Vec<_> = reports.iter().filter(|r| !r.exploratory).collect();
    let failing = strict.iter().filter(|r| !r.passed()).count();
    eprintln!(
        "{} cases ({} exploratory): {} failing",
        reports.len(),
        reports.len() - strict.len(),
        failing
    );
    for r in strict.iter().filter(|r| !r.passed()) {
        eprintln!(
            "FAIL {} {} n={} c={} gamma={} counterexample={}",
            r.verdict,
            r.theorem.id(),
            r.n,
            r.c,
            r.gamma.value(),
            r.counterexample.as_deref().unwrap_or("-")
        );
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[cfg(test)]
mod tests {
    use super::parse_gamma;

    #[test]
    fn gamma_literals() {
        assert_eq!(parse_gamma("-1"), Ok(-1.0));
        assert_eq!(parse_gamma("-0.5"), Ok(-0.5));
        assert_eq!(parse_gamma(".25"), Ok(0.25));
        assert_eq!(parse_gamma("2."), Ok(2.0));
        for bad in ["0", "-0.0", "nan", "inf", "1e3", "", "-", ".", "--1", "1/2"] {
            assert!(parse_gamma(bad).is_err(), "{bad}");
        }
    }
}
