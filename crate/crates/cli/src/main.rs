use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use semunit::io::config::AppConfig;
use semunit::io::interchange::InterchangeDocument;
use semunit::owl::Translator;
use semunit::query::{Answer, QuestionTree};
use semunit::reason::{ArgumentStatus, InferenceLayer};
use semunit::{Gupri, LayeredStore, LogicFramework, Term};
use serde::Serialize;
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "semunit",
    version,
    about = "Build, check, query and translate semantic-unit knowledge graphs"
)]
struct Cli {
    /// JSON config file; defaults to $SEMUNIT_CONFIG when set.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check partition and structural requirements; prints a JSON report.
    Validate { file: PathBuf },
    /// Build a store from a JSON interchange document and write it as TriG.
    Ingest {
        json: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Answer a question unit (or a boolean tree of them) given as JSON.
    Query {
        store: PathBuf,
        question: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Translate to a functional-style ontology.
    Translate {
        store: PathBuf,
        /// Only translate units declared for this logic framework.
        #[arg(long, value_parser = parse_framework)]
        framework: Option<LogicFramework>,
        /// Write the skip report as JSON to this file.
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Run default rules and/or argument units and list what follows.
    Reason {
        store: PathBuf,
        #[arg(long)]
        defaults: bool,
        #[arg(long)]
        argue: bool,
        /// Print the inference layer as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Render one unit as a label or a DOT mind map.
    Render {
        store: PathBuf,
        gupri: String,
        #[arg(long, conflicts_with = "dot")]
        label: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Unit counts by kind.
    Stats {
        store: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Output {
    /// Write to this file (atomically) instead of stdout.
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

fn parse_framework(s: &str) -> std::result::Result<LogicFramework, String> {
    LogicFramework::parse(s)
        .ok_or_else(|| format!("unknown logic framework `{s}` (OWL-DL, FOL, LogicProgram, None)"))
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] semunit::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0} structural error(s) found")]
    Invalid(usize),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "Io",
            CliError::Json { .. } => "Json",
            CliError::Invalid(_) => "ValidationFailed",
            CliError::Usage(_) => "Usage",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: &'a str,
    message: String,
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes via a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(text.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn emit(out: &Output, text: &str) -> Result<()> {
    match &out.output {
        Some(p) => write_atomic(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    s
}

/// Loads a store from TriG, or from a JSON interchange document when the
/// file ends in `.json`.
fn load(config: &AppConfig, path: &Path) -> Result<LayeredStore> {
    let text = read(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        let doc = InterchangeDocument::from_json(&text)?;
        return Ok(config.build(doc)?);
    }
    let mut store = LayeredStore::import_trig(&text, config.store.clone())?;
    config.apply(&mut store)?;
    Ok(store)
}

fn show(store: &LayeredStore, t: &Term) -> String {
    match t {
        Term::Iri(i) => store.label_of(i),
        Term::Literal(l) => l.lexical().to_string(),
    }
}

fn answer_text(store: &LayeredStore, answer: &Answer) -> String {
    let mut out = String::new();
    match answer {
        Answer::Boolean { value, evidence } => {
            out.push_str(&format!("{value}\n"));
            for g in evidence {
                out.push_str(&format!("  evidence {g}\n"));
            }
        }
        Answer::Bindings { rows } => {
            let columns: Vec<&String> = rows
                .first()
                .map(|r| r.values.keys().collect())
                .unwrap_or_default();
            let header: Vec<&str> = columns.iter().map(|c| c.as_str()).collect();
            out.push_str(&header.join("\t"));
            out.push('\n');
            for r in rows {
                let cells: Vec<String> = r.values.values().map(|t| show(store, t)).collect();
                out.push_str(&cells.join("\t"));
                out.push('\n');
            }
        }
    }
    out
}

fn reason_text(store: &LayeredStore, layer: &InferenceLayer) -> String {
    let mut out = String::new();
    for d in &layer.defaults {
        let from: Vec<&str> = d.premises.iter().map(Gupri::as_str).collect();
        out.push_str(&format!(
            "default\t{}\t{}\t{}\n",
            store.describe_fact(&d.fact),
            d.modality,
            from.join(" ")
        ));
    }
    for a in &layer.arguments {
        let line = match &a.status {
            ArgumentStatus::Concluded { inferred } => {
                let tag = if inferred.hypothesis {
                    " (hypothesis)"
                } else {
                    ""
                };
                format!(
                    "concluded\t{}\t{}{tag}",
                    store.describe_fact(&inferred.fact),
                    inferred.modality
                )
            }
            ArgumentStatus::Proposal { proposal } => format!(
                "{}\t{}\t{:?} {}:{}",
                if proposal.accepted {
                    "accepted"
                } else {
                    "rejected"
                },
                store.describe_fact(&proposal.fact),
                proposal.boldness,
                proposal.counts.with,
                proposal.counts.without
            ),
            ArgumentStatus::PremiseMissing { missing } => {
                let m: Vec<&str> = missing.iter().map(Gupri::as_str).collect();
                format!("missing\t{}", m.join(" "))
            }
            ArgumentStatus::NoMatch { reason } => format!("no-match\t{reason}"),
        };
        out.push_str(&format!("{:?}\t{}\t{line}\n", a.kind, a.argument));
    }
    out
}

#[derive(Serialize)]
struct Stats {
    units: usize,
    statement_units: usize,
    compound_units: usize,
    resources: usize,
    data_triples: usize,
    by_kind: BTreeMap<String, usize>,
}

fn stats(store: &LayeredStore) -> Stats {
    let mut by_kind = BTreeMap::new();
    for u in store.units() {
        for k in &u.kinds {
            *by_kind.entry(k.local_name().to_string()).or_insert(0) += 1;
        }
    }
    Stats {
        units: store.units().count(),
        statement_units: store.units().filter(|u| u.is_statement()).count(),
        compound_units: store.units().filter(|u| !u.is_statement()).count(),
        resources: store.resources().count(),
        data_triples: store.data_triple_count(),
        by_kind,
    }
}

fn run(cli: Cli) -> Result<()> {
    let config = AppConfig::resolve(cli.config.as_deref())?;
    match cli.command {
        Command::Validate { file } => {
            let store = load(&config, &file)?;
            let report = store.validate();
            print!("{}", to_json(&report));
            let errors = report
                .findings
                .iter()
                .filter(|f| f.severity == semunit::validate::Severity::Error)
                .count();
            if errors > 0 {
                return Err(CliError::Invalid(errors));
            }
        }
        Command::Ingest { json, out } => {
            let doc = InterchangeDocument::from_json(&read(&json)?).map_err(|e| match e {
                semunit::Error::Json(source) => CliError::Json {
                    path: json.clone(),
                    source,
                },
                other => other.into(),
            })?;
            let store = config.build(doc)?;
            emit(&out, &store.export_trig()?)?;
        }
        Command::Query {
            store,
            question,
            json,
        } => {
            let store = load(&config, &store)?;
            let tree: QuestionTree =
                serde_json::from_str(&read(&question)?).map_err(|source| CliError::Json {
                    path: question.clone(),
                    source,
                })?;
            let answer = store.ask(&tree)?;
            if json {
                print!("{}", to_json(&answer));
            } else {
                print!("{}", answer_text(&store, &answer));
            }
        }
        Command::Translate {
            store,
            framework,
            report,
            out,
        } => {
            let store = load(&config, &store)?;
            let doc = Translator::new().translate_store(&store, framework)?;
            emit(&out, &doc.render(&store))?;
            if let Some(p) = report {
                let mut text = doc.report_json();
                text.push('\n');
                write_atomic(&p, &text)?;
            }
        }
        Command::Reason {
            store,
            defaults,
            argue,
            json,
        } => {
            let store = load(&config, &store)?;
            let both = !defaults && !argue;
            let layer = store.infer(defaults || both, argue || both)?;
            if json {
                print!("{}", to_json(&layer));
            } else {
                print!("{}", reason_text(&store, &layer));
            }
        }
        Command::Render {
            store, gupri, dot, ..
        } => {
            let store = load(&config, &store)?;
            let g = Gupri::parse(&gupri)?;
            if dot {
                print!("{}", store.dynamic_mind_map(&g)?);
            } else {
                println!("{}", store.dynamic_label(&g)?);
            }
        }
        Command::Stats { store, json } => {
            let s = stats(&load(&config, &store)?);
            if json {
                print!("{}", to_json(&s));
            } else {
                println!("units\t{}", s.units);
                println!("statement units\t{}", s.statement_units);
                println!("compound units\t{}", s.compound_units);
                println!("resources\t{}", s.resources);
                println!("data triples\t{}", s.data_triples);
                for (k, n) in &s.by_kind {
                    println!("{k}\t{n}");
                }
            }
        }
    }
    Ok(())
}

fn fail(e: &CliError) -> ExitCode {
    let report = ErrorReport {
        error: e.kind(),
        message: e.to_string(),
    };
    eprintln!(
        "{}",
        serde_json::to_string(&report).expect("error report serializes")
    );
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.render().to_string();
            let first = text.lines().next().unwrap_or_default();
            return fail(&CliError::Usage(
                first.trim_start_matches("error: ").to_string(),
            ));
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}
