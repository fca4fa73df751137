//! `corona`: analyse graphs, verify theorems over catalogs, generate and
//! convert graphs.

mod config;
mod table;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use corona_core::ear::{build, random_abmc, AbmcRecipe, EarDecomposition};
use corona_core::format::{parse_edge_list_stream, parse_graph6_stream, Format, LabeledGraph};
use corona_core::generators::{generate, Family};
use corona_core::verify::{analyze_all, scan, TheoremId};
use corona_core::Graph;

use config::{Config, FileConfig, OutputFormat, CONFIG_ENV};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INPUT: u8 = 3;

const SCHEMAS: [(&str, &str); 3] = [
    ("analysis-report", include_str!("../schemas/analysis-report.schema.json")),
    ("violation", include_str!("../schemas/violation.schema.json")),
    ("summary", include_str!("../schemas/summary.schema.json")),
];

#[derive(Parser)]
#[command(name = "corona", version, about = "Core, corona and critical-set analysis of small graphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// TOML config file; flags override its values.
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    oracle_limit: Option<usize>,
    #[arg(long, global = true)]
    omega_cap: Option<usize>,
    #[arg(long, global = true)]
    cycle_cap: Option<u64>,
    #[arg(long, global = true)]
    recognizer_limit: Option<usize>,
    /// Write results here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    /// Input file; standard input when absent or `-`.
    input: Option<PathBuf>,
    /// graph6 or edge-list.
    #[arg(long = "input-format", short = 'i', default_value = "graph6", value_parser = parse_format)]
    input_format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print a full invariant report for every input graph.
    Analyze(InputArgs),
    /// Check theorems over a catalog: violations as JSON lines, then a summary.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
    },
    /// Emit graphs from a family, an ABMC recipe or an ear decomposition script.
    Generate {
        #[command(subcommand)]
        what: GenerateCmd,
        #[arg(long, global = true, default_value = "graph6", value_parser = parse_format)]
        to: Format,
    },
    /// Convert between graph6 and edge lists.
    Convert {
        input: Option<PathBuf>,
        #[arg(long, default_value = "graph6", value_parser = parse_format)]
        from: Format,
        #[arg(long, default_value = "edge-list", value_parser = parse_format)]
        to: Format,
    },
    /// Print a shipped JSON schema.
    Schema {
        #[arg(value_parser = ["analysis-report", "violation", "summary"])]
        name: String,
    },
}

#[derive(Subcommand)]
enum GenerateCmd {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Star { k: usize },
    CompleteBipartite { a: usize, b: usize },
    /// K4 with each of its six edges replaced by an odd path of the given length.
    K4 {
        #[arg(num_args = 6, required = true)]
        lengths: Vec<usize>,
    },
    /// G(n, p); graph i uses seed + i.
    Gnp {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Random ABMC graphs; graph i uses seed + i.
    Abmc {
        #[arg(long)]
        odd_ears: usize,
        #[arg(long, default_value_t = 1)]
        odd_len_min: usize,
        #[arg(long, default_value_t = 5)]
        odd_len_max: usize,
        #[arg(long, default_value_t = 2)]
        even_len_min: usize,
        #[arg(long, default_value_t = 6)]
        even_len_max: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Build the graph described by an ear decomposition script.
    Script { file: PathBuf },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: corona_core::Error| e.to_string())
}

/// A failure that ends the run with the given exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("corona: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn resolve_config(g: &GlobalArgs) -> Result<Config, Failure> {
    let file = match &g.config {
        Some(path) => FileConfig::load(path).map_err(Failure::usage)?,
        None => FileConfig::default(),
    };
    let flags = FileConfig {
        oracle_limit: g.oracle_limit,
        omega_cap: g.omega_cap,
        cycle_cap: g.cycle_cap,
        recognizer_limit: g.recognizer_limit,
        workers: g.workers,
        format: g.format,
        seed: g.seed,
    };
    Config::resolve(file.overlay(flags)).map_err(Failure::usage)
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn parse_stream(text: &str, format: Format) -> Vec<(usize, corona_core::Result<LabeledGraph>)> {
    match format {
        Format::EdgeList => parse_edge_list_stream(text),
        Format::Graph6 => parse_graph6_stream(text)
            .into_iter()
            .map(|(line, g)| (line, g.map(|graph| LabeledGraph { graph, labels: None })))
            .collect(),
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let config = resolve_config(&cli.global)?;
    let mut out = open_output(cli.global.output.as_deref())?;
    let code = match cli.command {
        Command::Analyze(input) => analyze(&input, &config, &mut out)?,
        Command::Verify { input, theorems } => verify(&input, &theorems, &config, &mut out)?,
        Command::Generate { what, to } => {
            for g in generated(what, config.limits.seed)? {
                write_graph(&mut out, &g, to)?;
            }
            0
        }
        Command::Convert { input, from, to } => convert(input.as_deref(), from, to, &mut out)?,
        Command::Schema { name } => {
            let (_, schema) = SCHEMAS.iter().find(|(n, _)| *n == name).unwrap();
            out.write_all(schema.as_bytes())?;
            0
        }
    };
    out.flush()?;
    Ok(code)
}

fn report_parse_error(line: usize, e: &corona_core::Error) {
    eprintln!("line {line}: {e}");
}

fn analyze(input: &InputArgs, config: &Config, out: &mut dyn Write) -> Result<u8, Failure> {
    let text = read_input(input.input.as_deref())?;
    let entries = parse_stream(&text, input.input_format);
    let reports = analyze_all(&entries, config.workers, &config.limits).map_err(|e| Failure::input(e.to_string()))?;
    let mut code = 0;
    for (line, r) in reports {
        match r {
            Ok(r) => match config.format {
                OutputFormat::Json => {
                    serde_json::to_writer(&mut *out, &r).map_err(io::Error::from)?;
                    writeln!(out)?;
                }
                OutputFormat::Table => table::report(out, &r)?,
            },
            Err(e) => {
                report_parse_error(line, &e);
                code = EXIT_INPUT;
            }
        }
    }
    Ok(code)
}

fn verify(input: &InputArgs, theorems: &str, config: &Config, out: &mut dyn Write) -> Result<u8, Failure> {
    let ids = TheoremId::parse_list(theorems).map_err(|e| Failure::usage(e.to_string()))?;
    if ids.is_empty() {
        return Err(Failure::usage("no theorems selected"));
    }
    let text = read_input(input.input.as_deref())?;
    let entries: Vec<(usize, corona_core::Result<Graph>)> = parse_stream(&text, input.input_format)
        .into_iter()
        .map(|(line, g)| (line, g.map(|g| g.graph)))
        .collect();
    let outcome = scan(&entries, &ids, config.workers, &config.limits).map_err(|e| Failure::input(e.to_string()))?;
    for f in &outcome.parse_failures {
        eprintln!("line {}: {}", f.line, f.message);
    }
    match config.format {
        OutputFormat::Json => outcome.write_jsonl(&mut *out)?,
        OutputFormat::Table => table::scan(out, &outcome)?,
    }
    Ok(if outcome.has_failures() {
        EXIT_FAIL
    } else if !outcome.parse_failures.is_empty() {
        EXIT_INPUT
    } else {
        0
    })
}

fn generated(what: GenerateCmd, seed: u64) -> Result<Vec<Graph>, Failure> {
    let invalid = |e: corona_core::Error| Failure::usage(e.to_string());
    let family = |f: Family| generate(&f).map(|g| vec![g]).map_err(invalid);
    match what {
        GenerateCmd::Path { n } => family(Family::Path(n)),
        GenerateCmd::Cycle { n } => family(Family::Cycle(n)),
        GenerateCmd::Complete { n } => family(Family::Complete(n)),
        GenerateCmd::Star { k } => family(Family::Star(k)),
        GenerateCmd::CompleteBipartite { a, b } => family(Family::CompleteBipartite(a, b)),
        GenerateCmd::K4 { lengths } => family(Family::OddHomeomorphK4(lengths.try_into().unwrap())),
        GenerateCmd::Gnp { n, p, count } => (0..count as u64)
            .map(|i| generate(&Family::Gnp { n, p, seed: seed.wrapping_add(i) }).map_err(invalid))
            .collect(),
        GenerateCmd::Abmc { odd_ears, odd_len_min, odd_len_max, even_len_min, even_len_max, count } => (0..count
            as u64)
            .map(|i| {
                random_abmc(&AbmcRecipe {
                    odd_ears,
                    odd_len_min,
                    odd_len_max,
                    even_len_min,
                    even_len_max,
                    seed: seed.wrapping_add(i),
                })
                .map_err(invalid)
            })
            .collect(),
        GenerateCmd::Script { file } => {
            let text = read_input(Some(&file))?;
            let dec: EarDecomposition = text.parse().map_err(|e: corona_core::Error| Failure::input(e.to_string()))?;
            Ok(vec![build(&dec).map_err(|e| Failure::input(e.to_string()))?])
        }
    }
}

fn write_graph(out: &mut dyn Write, g: &Graph, to: Format) -> io::Result<()> {
    write_labeled(out, &LabeledGraph { graph: g.clone(), labels: None }, to)
}

fn write_labeled(out: &mut dyn Write, g: &LabeledGraph, to: Format) -> io::Result<()> {
    match to {
        Format::Graph6 => writeln!(out, "{}", corona_core::format::to_graph6(&g.graph)),
        Format::EdgeList => write!(out, "{}", corona_core::format::to_edge_list(&g.graph, g.labels.as_deref())),
    }
}

fn convert(input: Option<&Path>, from: Format, to: Format, out: &mut dyn Write) -> Result<u8, Failure> {
    let text = read_input(input)?;
    let mut code = 0;
    for (line, g) in parse_stream(&text, from) {
        match g {
            Ok(g) => write_labeled(out, &g, to)?,
            Err(e) => {
                report_parse_error(line, &e);
                code = EXIT_INPUT;
            }
        }
    }
    Ok(code)
}
