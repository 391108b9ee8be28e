//! Incremental model updates and version-history walks.

mod git;
mod history;

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

pub use git::GitProvider;
pub use history::{
    walk_history, CommitRecord, HistoryError, HistoryProvider, ModelMetrics, PhaseTimes,
    WalkConfig, WalkSummary,
};

use crate::error::{ExtractError, ModelError, ParseError};
use crate::model::{ApiModel, Provenance};
use crate::source::{self, Digest32, SourceFile, SourceUnits};

/// Files that differ between two snapshots. The three sets are disjoint.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChangedFiles {
    pub added: BTreeSet<String>,
    pub deleted: BTreeSet<String>,
    pub modified: BTreeSet<String>,
}

impl ChangedFiles {
    pub fn is_empty(&self) -> bool {
        self.added.is_empty() && self.deleted.is_empty() && self.modified.is_empty()
    }

    /// Files whose new content has to be parsed.
    pub fn to_parse(&self) -> impl Iterator<Item = &String> {
        self.added.iter().chain(&self.modified)
    }

    pub fn len(&self) -> usize {
        self.added.len() + self.deleted.len() + self.modified.len()
    }
}

/// Content digests keyed by relative path.
pub type Snapshot = BTreeMap<String, Digest32>;

pub fn snapshot(files: &[(String, Vec<u8>)]) -> Snapshot {
    files
        .iter()
        .map(|(f, bytes)| (f.clone(), source::digest(bytes)))
        .collect()
}

/// The snapshot a source-extracted model was built from.
pub fn model_snapshot(model: &ApiModel) -> Result<Snapshot, ModelError> {
    match model.provenance() {
        Provenance::Source(units) => Ok(units.files().map(|(f, s)| (f.clone(), s.digest)).collect()),
        _ => Err(ModelError::NotIncremental),
    }
}

/// Partitions paths by presence and digest equality.
pub fn detect_changes(old: &Snapshot, new: &Snapshot) -> ChangedFiles {
    let mut changes = ChangedFiles::default();
    for (file, digest) in new {
        match old.get(file) {
            None => {
                changes.added.insert(file.clone());
            }
            Some(d) if d != digest => {
                changes.modified.insert(file.clone());
            }
            Some(_) => {}
        }
    }
    for file in old.keys() {
        if !new.contains_key(file) {
            changes.deleted.insert(file.clone());
        }
    }
    changes
}

/// Turns one file's bytes into a summary.
pub trait UnitParser: Sync {
    fn parse(&self, file: &str, bytes: &[u8]) -> Result<SourceFile, ParseError>;
}

/// The diet parser used by full extraction.
#[derive(Clone, Copy, Debug, Default)]
pub struct DietParser;

impl UnitParser for DietParser {
    fn parse(&self, file: &str, bytes: &[u8]) -> Result<SourceFile, ParseError> {
        source::parse_file(file, bytes)
    }
}

/// Wraps a parser and counts its invocations.
#[derive(Debug, Default)]
pub struct CountingParser<P = DietParser> {
    inner: P,
    calls: AtomicUsize,
}

impl<P: UnitParser> CountingParser<P> {
    pub fn new(inner: P) -> Self {
        CountingParser {
            inner,
            calls: AtomicUsize::new(0),
        }
    }

    pub fn calls(&self) -> usize {
        self.calls.load(Ordering::Relaxed)
    }

    /// Returns the count so far and resets it.
    pub fn take(&self) -> usize {
        self.calls.swap(0, Ordering::Relaxed)
    }
}

impl<P: UnitParser> UnitParser for CountingParser<P> {
    fn parse(&self, file: &str, bytes: &[u8]) -> Result<SourceFile, ParseError> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.inner.parse(file, bytes)
    }
}

/// Applies `changes` to per-file summaries. `contents` must hold the new
/// bytes of every added and modified file; other entries are ignored.
pub fn apply_changes(
    units: &SourceUnits,
    changes: &ChangedFiles,
    contents: &BTreeMap<String, Vec<u8>>,
    parser: &dyn UnitParser,
) -> Result<SourceUnits, ExtractError> {
    let wanted: Vec<&String> = changes.to_parse().collect();
    let mut parsed: Vec<(String, Result<SourceFile, ParseError>)> = wanted
        .par_iter()
        .map(|&file| {
            let result = match contents.get(file) {
                Some(bytes) => parser.parse(file, bytes),
                None => Err(ParseError {
                    file: file.clone(),
                    line: 0,
                    message: "no content supplied for changed file".into(),
                }),
            };
            (file.clone(), result)
        })
        .collect();
    parsed.sort_by(|a, b| a.0.cmp(&b.0));

    let mut next = units.clone();
    for file in &changes.deleted {
        next.remove(file);
    }
    for (file, result) in parsed {
        next.insert(file, result?);
    }
    Ok(next)
}

/// New model for the snapshot reached by applying `changes` to the one
/// `model` was extracted from. Only added and modified files are parsed;
/// every retained summary is bound again, so name resolution sees the
/// updated set of declarations.
pub fn update(
    model: &ApiModel,
    changes: &ChangedFiles,
    contents: &BTreeMap<String, Vec<u8>>,
    parser: &dyn UnitParser,
) -> Result<ApiModel, ExtractError> {
    let Provenance::Source(units) = model.provenance() else {
        return Err(ModelError::NotIncremental.into());
    };
    if changes.is_empty() {
        return Ok(source::model_from_units(
            SourceUnits::clone(units),
            model.filter().clone(),
            Arc::clone(model.classpath()),
        )?);
    }
    let next = apply_changes(units, changes, contents, parser)?;
    Ok(source::model_from_units(
        next,
        model.filter().clone(),
        Arc::clone(model.classpath()),
    )?)
}

/// Brings a source model up to date with the tree under `root`.
pub fn update_from_dir(
    model: &ApiModel,
    root: &Path,
    parser: &dyn UnitParser,
) -> Result<(ApiModel, ChangedFiles), ExtractError> {
    let old = model_snapshot(model)?;
    let files = source::read_sources(root)?;
    let changes = detect_changes(&old, &snapshot(&files));
    let wanted: BTreeSet<&String> = changes.to_parse().collect();
    let contents: BTreeMap<String, Vec<u8>> = files
        .into_iter()
        .filter(|(f, _)| wanted.contains(f))
        .collect();
    let next = update(model, &changes, &contents, parser)?;
    Ok((next, changes))
}

#[cfg(test)]
mod tests;
