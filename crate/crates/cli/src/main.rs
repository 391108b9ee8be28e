use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use apishift::bench::{load_corpus, run_benchmark, source_engine};
use apishift::diff::{diff, BreakingChange};
use apishift::incremental::{walk_history, DietParser, GitProvider, WalkConfig};
use apishift::input::{load_classpath, load_model, Loaded};
use apishift::model::{ApiFilter, ApiModel, QualifiedName};
use apishift::report::{serialize_model, DiffReport, Format};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Extracts Java library APIs from sources, class files or saved models and
/// reports the breaking changes between two versions.
#[derive(Parser, Debug)]
#[command(name = "apishift", version)]
struct Cli {
    /// More log output on stderr (repeat for more).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the API model of one input as JSON.
    Extract {
        input: PathBuf,
        #[command(flatten)]
        model: ModelOpts,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the breaking changes between two inputs.
    Diff {
        old: PathBuf,
        new: PathBuf,
        #[command(flatten)]
        model: ModelOpts,
        #[command(flatten)]
        report: ReportOpts,
    },
    /// Exit with status 1 when breaking changes match the failure policy.
    Check {
        old: PathBuf,
        new: PathBuf,
        #[command(flatten)]
        model: ModelOpts,
        #[command(flatten)]
        report: ReportOpts,
        #[arg(long, value_enum, default_value_t = FailOn::Any)]
        fail_on: FailOn,
    },
    /// Walk the first-parent history of a git branch and diff every commit
    /// against its predecessor.
    Walk {
        repo: PathBuf,
        #[arg(long, default_value = "HEAD")]
        branch: String,
        /// Source root inside the repository.
        #[arg(long, default_value = "")]
        source_root: String,
        #[command(flatten)]
        model: ModelOpts,
        /// Per-commit records as JSON lines (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the run summary, with phase timings, as JSON.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Score the detector against a labelled corpus.
    Bench {
        #[arg(default_value = "benchmark/cases")]
        corpus: PathBuf,
        /// Full results as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
struct ModelOpts {
    /// Class-file directories or archives used to resolve references.
    #[arg(long, value_delimiter = ':')]
    classpath: Vec<PathBuf>,
    /// Exclude types whose qualified name matches (glob with `*`, or `re:<regex>`).
    #[arg(long = "exclude-package", value_name = "PATTERN")]
    exclude_package: Vec<String>,
    /// Exclude symbols carrying this annotation (qualified name).
    #[arg(long = "exclude-annotation", value_name = "ANNOTATION")]
    exclude_annotation: Vec<String>,
    /// Keep @Deprecated symbols in the API.
    #[arg(long)]
    include_deprecated: bool,
}

impl ModelOpts {
    fn filter(&self) -> ApiFilter {
        ApiFilter {
            excluded_package_patterns: self.exclude_package.clone(),
            excluded_annotations: self.exclude_annotation.iter().map(QualifiedName::new).collect(),
            include_deprecated: self.include_deprecated,
        }
    }

    fn load(&self, path: &Path) -> Result<Loaded> {
        let classpath = load_classpath(&self.classpath).context("loading the classpath")?;
        let loaded = load_model(path, self.filter(), classpath)
            .with_context(|| format!("reading {}", path.display()))?;
        for d in &loaded.diagnostics {
            log::warn!("{d}");
        }
        log::info!("{}: {} input, {} API types", path.display(), loaded.kind, loaded.model.api_type_names().len());
        Ok(loaded)
    }
}

#[derive(Args, Debug, Clone)]
struct ReportOpts {
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Report file (default: stdout for diff; none for check).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Label for the old version (default: its path).
    #[arg(long)]
    old_label: Option<String>,
    /// Label for the new version (default: its path).
    #[arg(long)]
    new_label: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReportFormat {
    Json,
    Csv,
    Html,
}

impl From<ReportFormat> for Format {
    fn from(f: ReportFormat) -> Format {
        match f {
            ReportFormat::Json => Format::Json,
            ReportFormat::Csv => Format::Csv,
            ReportFormat::Html => Format::Html,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FailOn {
    Any,
    Binary,
    Source,
}

impl FailOn {
    fn matches(self, c: &BreakingChange) -> bool {
        match self {
            FailOn::Any => true,
            FailOn::Binary => c.binary_breaking,
            FailOn::Source => c.source_breaking,
        }
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                r => Ok(r?),
            }
        }
    }
}

fn compare(old: &Path, new: &Path, model: &ModelOpts, report: &ReportOpts) -> Result<DiffReport> {
    let (a, b): (ApiModel, ApiModel) = (model.load(old)?.model, model.load(new)?.model);
    let label = |given: &Option<String>, path: &Path| {
        given.clone().unwrap_or_else(|| path.display().to_string())
    };
    Ok(DiffReport::new(
        label(&report.old_label, old),
        label(&report.new_label, new),
        diff(&a, &b),
    ))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Extract { input, model, out } => {
            let loaded = model.load(&input)?;
            write_output(out.as_deref(), &serialize_model(&loaded.model))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Diff { old, new, model, report } => {
            let r = compare(&old, &new, &model, &report)?;
            write_output(report.out.as_deref(), &r.render(report.format.into()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { old, new, model, report, fail_on } => {
            let r = compare(&old, &new, &model, &report)?;
            if let Some(out) = &report.out {
                write_output(Some(out), &r.render(report.format.into()))?;
            }
            let failing: Vec<&BreakingChange> = r.changes.iter().filter(|c| fail_on.matches(c)).collect();
            let mut stdout = io::stdout().lock();
            for c in &r.changes {
                let flags = match (c.binary_breaking, c.source_breaking) {
                    (true, true) => "binary+source",
                    (true, false) => "binary",
                    _ => "source",
                };
                writeln!(stdout, "{:<38} {:<13} {}", c.kind.phrase(), flags, c.impacted_symbol)?;
            }
            writeln!(
                stdout,
                "{} breaking changes ({} binary, {} source); {} fail the `{}` policy",
                r.summary.total,
                r.summary.binary_breaking,
                r.summary.source_breaking,
                failing.len(),
                format!("{fail_on:?}").to_lowercase()
            )?;
            Ok(if failing.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Walk { repo, branch, source_root, model, out, summary } => {
            let mut config = WalkConfig::new(branch);
            config.source_root = source_root;
            config.filter = model.filter();
            config.classpath = load_classpath(&model.classpath)?;
            let provider = GitProvider::new(&repo);
            let sink: Box<dyn Write> = match &out {
                Some(p) => Box::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?),
                None => Box::new(io::stdout().lock()),
            };
            let mut sink = BufWriter::new(sink);
            let mut failed: Option<io::Error> = None;
            let s = walk_history(&provider, &config, &DietParser, |record, _| {
                if failed.is_none() {
                    let line = serde_json::to_string(record).expect("records serialize");
                    if let Err(e) = writeln!(sink, "{line}") {
                        failed = Some(e);
                    }
                }
            })?;
            if let Some(e) = failed {
                return Err(e.into());
            }
            sink.flush()?;
            let p = s.phases;
            eprintln!(
                "{} commits ({} skipped), {} files parsed, {} breaking changes in {:.2}s \
                 (checkout {:.2}s, parse {:.2}s, diff {:.2}s, metrics {:.2}s)",
                s.commits, s.skipped, s.parsed_files, s.breaking_changes, s.total_seconds,
                p.checkout, p.parse, p.diff, p.metrics
            );
            if let Some(path) = summary {
                write_output(Some(&path), &(serde_json::to_string_pretty(&s)? + "\n"))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { corpus, out } => {
            let cases = load_corpus(&corpus)?;
            if cases.is_empty() {
                bail!("{}: no cases", corpus.display());
            }
            let result = run_benchmark(&cases, source_engine);
            print!("{}", result.table());
            for e in &result.errored {
                println!("errored  {}: {}", e.id, e.message);
            }
            let wrong: Vec<_> = result.mismatches().collect();
            for o in &wrong {
                println!(
                    "mismatch {}: expected {:?}, predicted {:?}, kinds {:?}",
                    o.id, o.expected, o.predicted, o.kinds
                );
            }
            println!("{} cases in {:.2}s", cases.len(), result.seconds);
            if let Some(path) = out {
                write_output(Some(&path), &(serde_json::to_string_pretty(&result)? + "\n"))?;
            }
            let clean = wrong.is_empty() && result.errored.is_empty();
            Ok(if clean { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

/// Joins an error's causes, skipping any a previous message already quotes.
fn error_chain(e: &anyhow::Error) -> String {
    let mut text = String::new();
    for cause in e.chain() {
        let msg = cause.to_string();
        if !text.contains(&msg) {
            if !text.is_empty() {
                text.push_str(": ");
            }
            text.push_str(&msg);
        }
    }
    text
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp(None).init();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", error_chain(&e));
            ExitCode::from(2)
        }
    }
}
