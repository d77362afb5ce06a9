//! Command line front end for the frame enrichment pipeline.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use subcat::pipeline::{InputMode, OutputFormat, Pipeline, RunConfig, RunError};

#[derive(Parser)]
#[command(
    name = "subcat",
    version,
    about = "Enrich verb subcategorization frames from a chunk-parsed corpus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and emit one report per verb frame
    Enrich(EnrichArgs),
    /// Dump the chunker's best covering for every sentence as TSV
    Chunk(ChunkArgs),
    /// Show synsets, hypernym paths and frames for a lemma
    Lexinfo(LexinfoArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Lexicon JSON document
    #[arg(long, value_name = "PATH")]
    lexicon: PathBuf,
    /// Corpus files or directories (repeatable)
    #[arg(long, value_name = "PATH", required = true, num_args = 1..)]
    corpus: Vec<PathBuf>,
    /// Read vertical pre-tagged input (surface<TAB>pos<TAB>lemma)
    #[arg(long)]
    pretagged: bool,
    /// Chunk grammar override file
    #[arg(long, value_name = "PATH")]
    grammar: Option<PathBuf>,
    /// Named entity gazetteers and abbreviation list (JSON)
    #[arg(long = "ne-config", value_name = "PATH")]
    ne_config: Option<PathBuf>,
    /// Documents processed concurrently
    #[arg(long, value_name = "N", default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Tsv,
}

#[derive(Args)]
struct EnrichArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Target verb lemma (repeatable; default: every lexicon verb)
    #[arg(long = "verb", value_name = "LEMMA")]
    verbs: Vec<String>,
    /// Verb scope window, in chunks per side
    #[arg(long = "scope-window", value_name = "N", default_value_t = 1)]
    scope_window: usize,
    /// Count local and temporal adjunct PPs too
    #[arg(long = "no-adjunct-filter")]
    no_adjunct_filter: bool,
    /// Evidence threshold below which an element is flagged
    #[arg(long = "min-evidence", value_name = "N", default_value_t = 1)]
    min_evidence: u32,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write per-verb report files into this directory instead of stdout
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ChunkArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct LexinfoArgs {
    /// Lexicon JSON document
    #[arg(long, value_name = "PATH")]
    lexicon: PathBuf,
    /// Lemma to look up
    lemma: String,
}

fn config_from(common: &CommonArgs) -> RunConfig {
    let mut config = RunConfig::new(&common.lexicon);
    config.corpus_paths = common.corpus.clone();
    config.input_mode = if common.pretagged {
        InputMode::Pretagged
    } else {
        InputMode::Raw
    };
    config.grammar_path = common.grammar.clone();
    config.ne_config_path = common.ne_config.clone();
    config.jobs = common.jobs;
    config
}

fn cmd_enrich(args: &EnrichArgs) -> Result<ExitCode, RunError> {
    let mut config = config_from(&args.common);
    config.target_verbs = args.verbs.clone();
    config.scope_window = args.scope_window;
    config.adjunct_filter = !args.no_adjunct_filter;
    config.min_evidence = args.min_evidence;
    config.output_format = match args.format {
        Format::Json => OutputFormat::Json,
        Format::Text => OutputFormat::Text,
        Format::Tsv => OutputFormat::Tsv,
    };

    let pipeline = Pipeline::from_config(&config)?;
    let prepared = pipeline.prepare_corpus(&config)?;

    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).map_err(|source| RunError::Io {
            path: dir.clone(),
            source,
        })?;
    }

    let stdout = std::io::stdout();
    for verb in pipeline.target_verbs(&config) {
        let mut rendered = String::new();
        match config.output_format {
            OutputFormat::Json => {
                for report in pipeline.enrich_verb(&prepared, &verb, &config) {
                    warn_all(&report.warnings);
                    rendered.push_str(&report.to_json());
                    rendered.push('\n');
                }
            }
            OutputFormat::Text => {
                for report in pipeline.enrich_verb(&prepared, &verb, &config) {
                    warn_all(&report.warnings);
                    rendered.push_str(&report.to_text());
                }
            }
            OutputFormat::Tsv => {
                rendered.push_str(&pipeline.assignment_dump(&prepared, &verb, &config));
            }
        }
        match &args.out {
            Some(dir) => {
                let extension = match config.output_format {
                    OutputFormat::Json => "json",
                    OutputFormat::Text => "txt",
                    OutputFormat::Tsv => "tsv",
                };
                let path = dir.join(format!("{verb}.{extension}"));
                fs::write(&path, rendered).map_err(|source| RunError::Io {
                    path: path.clone(),
                    source,
                })?;
            }
            None => {
                let mut handle = stdout.lock();
                handle.write_all(rendered.as_bytes()).expect("stdout");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn warn_all(warnings: &[String]) {
    for warning in warnings {
        eprintln!("warning: {warning}");
    }
}

fn cmd_chunk(args: &ChunkArgs) -> Result<ExitCode, RunError> {
    let config = config_from(&args.common);
    let pipeline = Pipeline::from_config(&config)?;
    let prepared = pipeline.prepare_corpus(&config)?;
    print!("{}", pipeline.chunk_dump(&prepared));
    Ok(ExitCode::SUCCESS)
}

fn cmd_lexinfo(args: &LexinfoArgs) -> Result<ExitCode, RunError> {
    let mut config = RunConfig::new(&args.lexicon);
    // lexinfo needs no corpus; satisfy the config with an empty list.
    config.corpus_paths.clear();
    let pipeline = Pipeline::from_config(&config)?;
    match pipeline.lexinfo(&args.lemma) {
        Some(text) => {
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        None => {
            eprintln!("error: lemma {:?} is not in the lexicon", args.lemma);
            Ok(ExitCode::from(1))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let result = match &cli.command {
        Command::Enrich(args) => cmd_enrich(args),
        Command::Chunk(args) => cmd_chunk(args),
        Command::Lexinfo(args) => cmd_lexinfo(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
