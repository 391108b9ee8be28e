use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::{apply_changes, ChangedFiles, UnitParser};
use crate::diff::{diff, BreakingChange};
use crate::error::ExtractError;
use crate::model::{ApiFilter, ApiModel, Classpath};
use crate::source::{self, SourceUnits};

#[derive(Debug, thiserror::Error)]
pub enum HistoryError {
    #[error("git {command}: {message}")]
    Git { command: String, message: String },
    #[error("no commits on {0}")]
    NoCommits(String),
    #[error(transparent)]
    Extract(#[from] ExtractError),
}

/// Read access to a linear history.
pub trait HistoryProvider {
    /// First-parent commits of `branch`, oldest first.
    fn commits(&self, branch: &str) -> Result<Vec<String>, HistoryError>;
    /// Every file path in `commit`.
    fn list_files(&self, commit: &str) -> Result<Vec<String>, HistoryError>;
    /// Paths that differ between two commits. Renames show as delete plus add.
    fn changed_paths(&self, from: &str, to: &str) -> Result<ChangedFiles, HistoryError>;
    /// Contents of `paths` as of `commit`.
    fn read_files(&self, commit: &str, paths: &[String]) -> Result<Vec<(String, Vec<u8>)>, HistoryError>;
}

#[derive(Clone, Debug)]
pub struct WalkConfig {
    pub branch: String,
    /// Source root inside the repository, `""` for the top level.
    pub source_root: String,
    pub filter: ApiFilter,
    pub classpath: Arc<Classpath>,
}

impl WalkConfig {
    pub fn new(branch: impl Into<String>) -> Self {
        WalkConfig {
            branch: branch.into(),
            source_root: String::new(),
            filter: ApiFilter::default(),
            classpath: Classpath::standard(),
        }
    }

    fn prefix(&self) -> String {
        let root = self.source_root.trim_matches('/');
        if root.is_empty() {
            String::new()
        } else {
            format!("{root}/")
        }
    }

    /// Path relative to the source root, for API sources under it.
    fn relative<'p>(&self, prefix: &str, path: &'p str) -> Option<&'p str> {
        path.strip_prefix(prefix).filter(|p| source::is_api_source(p))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ModelMetrics {
    pub library_types: usize,
    pub api_types: usize,
    pub api_symbols: usize,
    /// Uses of each excluded annotation on exported declarations.
    pub filtered_annotations: BTreeMap<String, usize>,
}

impl ModelMetrics {
    pub fn of(model: &ApiModel) -> ModelMetrics {
        let mut filtered: BTreeMap<String, usize> = model
            .filter()
            .excluded_annotations
            .iter()
            .map(|a| (a.to_string(), 0))
            .collect();
        for t in model.library_types().filter(|t| model.is_exported(t)) {
            let lists = std::iter::once(&t.annotations)
                .chain(t.fields.iter().map(|f| &f.annotations))
                .chain(t.methods.iter().map(|m| &m.annotations))
                .chain(t.constructors.iter().map(|c| &c.annotations));
            for list in lists {
                for a in list {
                    if let Some(n) = filtered.get_mut(a.as_str()) {
                        *n += 1;
                    }
                }
            }
        }
        ModelMetrics {
            library_types: model.library_len(),
            api_types: model.api_type_names().len(),
            api_symbols: model.api_symbol_ids().len(),
            filtered_annotations: filtered,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CommitRecord {
    pub index: usize,
    pub commit: String,
    pub added: usize,
    pub deleted: usize,
    pub modified: usize,
    pub parsed_files: usize,
    pub metrics: ModelMetrics,
    pub changes: Vec<BreakingChange>,
    /// Set when the commit could not be analyzed; the pivot is kept.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

/// Wall-clock time per phase, in seconds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct PhaseTimes {
    pub checkout: f64,
    pub parse: f64,
    pub diff: f64,
    pub metrics: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WalkSummary {
    pub commits: usize,
    pub skipped: usize,
    pub breaking_changes: usize,
    pub parsed_files: usize,
    pub phases: PhaseTimes,
    pub total_seconds: f64,
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

/// Walks the first-parent history of `config.branch`, updating a pivot
/// model per commit and diffing it against the previous one. The callback
/// sees every record together with the model it describes.
pub fn walk_history(
    provider: &dyn HistoryProvider,
    config: &WalkConfig,
    parser: &dyn UnitParser,
    mut on_commit: impl FnMut(&CommitRecord, &ApiModel),
) -> Result<WalkSummary, HistoryError> {
    let started = Instant::now();
    let mut phases = PhaseTimes::default();
    let commits = provider.commits(&config.branch)?;
    if commits.is_empty() {
        return Err(HistoryError::NoCommits(config.branch.clone()));
    }
    let prefix = config.prefix();

    let mut summary = WalkSummary::default();
    let mut pivot: Option<(String, ApiModel)> = None;
    for (index, commit) in commits.iter().enumerate() {
        let t = Instant::now();
        // Paths relative to the source root, mapped back to repository paths.
        let changes = match &pivot {
            None => {
                let mut c = ChangedFiles::default();
                for path in provider.list_files(commit)? {
                    if let Some(rel) = config.relative(&prefix, &path) {
                        c.added.insert(rel.to_owned());
                    }
                }
                c
            }
            Some((base, _)) => {
                let raw = provider.changed_paths(base, commit)?;
                let keep = |set: BTreeSet<String>| -> BTreeSet<String> {
                    set.iter()
                        .filter_map(|p| config.relative(&prefix, p))
                        .map(str::to_owned)
                        .collect()
                };
                ChangedFiles {
                    added: keep(raw.added),
                    deleted: keep(raw.deleted),
                    modified: keep(raw.modified),
                }
            }
        };
        let wanted: Vec<String> = changes.to_parse().map(|p| format!("{prefix}{p}")).collect();
        let contents: BTreeMap<String, Vec<u8>> = provider
            .read_files(commit, &wanted)?
            .into_iter()
            .map(|(p, bytes)| (p[prefix.len()..].to_owned(), bytes))
            .collect();
        phases.checkout += secs(t.elapsed());

        let t = Instant::now();
        let empty = SourceUnits::default();
        let base_units = match pivot.as_ref().map(|(_, m)| m.provenance()) {
            Some(crate::model::Provenance::Source(u)) => u.as_ref(),
            _ => &empty,
        };
        let parsed_files = changes.added.len() + changes.modified.len();
        let next = apply_changes(base_units, &changes, &contents, parser).and_then(|units| {
            Ok(source::model_from_units(
                units,
                config.filter.clone(),
                Arc::clone(&config.classpath),
            )?)
        });
        phases.parse += secs(t.elapsed());

        let mut record = CommitRecord {
            index,
            commit: commit.clone(),
            added: changes.added.len(),
            deleted: changes.deleted.len(),
            modified: changes.modified.len(),
            parsed_files,
            metrics: ModelMetrics::default(),
            changes: Vec::new(),
            skipped: None,
        };
        summary.commits += 1;
        summary.parsed_files += parsed_files;
        let model = match next {
            Ok(model) => model,
            Err(e) => {
                log::warn!("skipping {commit}: {e}");
                record.skipped = Some(e.to_string());
                summary.skipped += 1;
                if let Some((_, m)) = &pivot {
                    record.metrics = ModelMetrics::of(m);
                    on_commit(&record, m);
                }
                continue;
            }
        };

        let t = Instant::now();
        if let Some((_, previous)) = &pivot {
            record.changes = diff(previous, &model);
        }
        phases.diff += secs(t.elapsed());

        let t = Instant::now();
        record.metrics = ModelMetrics::of(&model);
        phases.metrics += secs(t.elapsed());

        summary.breaking_changes += record.changes.len();
        on_commit(&record, &model);
        pivot = Some((commit.clone(), model));
    }
    summary.phases = phases;
    summary.total_seconds = secs(started.elapsed());
    Ok(summary)
}
