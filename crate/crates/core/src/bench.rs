//! Precision/recall harness over a corpus of labelled library changes.
//!
//! Each case directory holds `v1/` and `v2/` source trees and a `case.json`
//! manifest with the ground truth. A `client/` tree used by the offline
//! labelling oracle may sit next to them; the harness ignores it.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diff::{diff, BcKind, BreakingChange};
use crate::error::ExtractError;
use crate::model::{ApiFilter, Classpath};
use crate::source::extract_api_from_sources;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseManifest {
    pub id: String,
    #[serde(default)]
    pub description: String,
    pub source_breaking: bool,
    pub binary_breaking: bool,
    /// Kind a breaking case is built to exhibit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_kind: Option<BcKind>,
    /// Kind a compatible case is the look-alike of.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterpart_of: Option<BcKind>,
}

impl CaseManifest {
    pub fn truth(&self) -> Verdict {
        Verdict {
            source: self.source_breaking,
            binary: self.binary_breaking,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchmarkCase {
    pub dir: PathBuf,
    pub manifest: CaseManifest,
}

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Manifest {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

/// Loads every `<root>/<id>/case.json`, sorted by id.
pub fn load_corpus(root: &Path) -> Result<Vec<BenchmarkCase>, BenchError> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| BenchError::Io { path, source }
    };
    let mut cases = Vec::new();
    for entry in fs::read_dir(root).map_err(io(root))? {
        let dir = entry.map_err(io(root))?.path();
        let path = dir.join("case.json");
        if !path.is_file() {
            continue;
        }
        let text = fs::read_to_string(&path).map_err(io(&path))?;
        let manifest = serde_json::from_str(&text).map_err(|source| BenchError::Manifest {
            path: path.clone(),
            source,
        })?;
        cases.push(BenchmarkCase { dir, manifest });
    }
    cases.sort_by(|a, b| a.manifest.id.cmp(&b.manifest.id));
    Ok(cases)
}

/// Source/binary breaking verdict of one case.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Verdict {
    pub source: bool,
    pub binary: bool,
}

impl Verdict {
    pub fn of(changes: &[BreakingChange]) -> Verdict {
        Verdict {
            source: changes.iter().any(|c| c.source_breaking),
            binary: changes.iter().any(|c| c.binary_breaking),
        }
    }

    pub fn any(self) -> bool {
        self.source || self.binary
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScoreCategory {
    All,
    Source,
    Binary,
}

impl ScoreCategory {
    pub const ALL: [ScoreCategory; 3] = [ScoreCategory::All, ScoreCategory::Source, ScoreCategory::Binary];

    pub fn select(self, v: Verdict) -> bool {
        match self {
            ScoreCategory::All => v.any(),
            ScoreCategory::Source => v.source,
            ScoreCategory::Binary => v.binary,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Confusion {
    pub true_positives: usize,
    pub false_positives: usize,
    pub true_negatives: usize,
    pub false_negatives: usize,
}

impl Confusion {
    pub fn record(&mut self, predicted: bool, actual: bool) {
        match (predicted, actual) {
            (true, true) => self.true_positives += 1,
            (true, false) => self.false_positives += 1,
            (false, false) => self.true_negatives += 1,
            (false, true) => self.false_negatives += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.true_positives + self.false_positives + self.true_negatives + self.false_negatives
    }

    /// 1.0 when nothing was predicted breaking.
    pub fn precision(&self) -> f64 {
        ratio(self.true_positives, self.true_positives + self.false_positives)
    }

    /// 1.0 when nothing was actually breaking.
    pub fn recall(&self) -> f64 {
        ratio(self.true_positives, self.true_positives + self.false_negatives)
    }

    pub fn f1(&self) -> f64 {
        let (p, r) = (self.precision(), self.recall());
        if p + r == 0.0 {
            0.0
        } else {
            2.0 * p * r / (p + r)
        }
    }

    pub fn transposed(&self) -> Confusion {
        Confusion {
            false_positives: self.false_negatives,
            false_negatives: self.false_positives,
            ..*self
        }
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        1.0
    } else {
        num as f64 / den as f64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CategoryScores {
    pub confusion: Confusion,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl From<Confusion> for CategoryScores {
    fn from(c: Confusion) -> Self {
        CategoryScores {
            confusion: c,
            precision: c.precision(),
            recall: c.recall(),
            f1: c.f1(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AccuracyScores {
    pub all: CategoryScores,
    pub source: CategoryScores,
    pub binary: CategoryScores,
}

impl AccuracyScores {
    /// Scores `(predicted, actual)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Verdict, Verdict)>) -> AccuracyScores {
        let mut c = [Confusion::default(); 3];
        for (predicted, actual) in pairs {
            for (i, cat) in ScoreCategory::ALL.into_iter().enumerate() {
                c[i].record(cat.select(predicted), cat.select(actual));
            }
        }
        AccuracyScores {
            all: c[0].into(),
            source: c[1].into(),
            binary: c[2].into(),
        }
    }

    pub fn get(&self, category: ScoreCategory) -> &CategoryScores {
        match category {
            ScoreCategory::All => &self.all,
            ScoreCategory::Source => &self.source,
            ScoreCategory::Binary => &self.binary,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseOutcome {
    pub id: String,
    pub expected: Verdict,
    pub predicted: Verdict,
    pub kinds: Vec<BcKind>,
    /// False when the case names an expected kind the diff did not emit.
    pub kind_matched: bool,
}

impl CaseOutcome {
    pub fn is_correct(&self) -> bool {
        self.expected == self.predicted && self.kind_matched
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ErroredCase {
    pub id: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BenchResult {
    pub scores: AccuracyScores,
    pub outcomes: Vec<CaseOutcome>,
    pub errored: Vec<ErroredCase>,
    pub seconds: f64,
}

impl BenchResult {
    pub fn mismatches(&self) -> impl Iterator<Item = &CaseOutcome> {
        self.outcomes.iter().filter(|o| !o.is_correct())
    }

    /// Plain-text table of the scores.
    pub fn table(&self) -> String {
        let mut out = format!(
            "{:<8} {:>5} {:>5} {:>5} {:>5} {:>9} {:>9} {:>9}\n",
            "category", "tp", "fp", "tn", "fn", "precision", "recall", "f1"
        );
        for cat in ScoreCategory::ALL {
            let s = self.scores.get(cat);
            let c = &s.confusion;
            out.push_str(&format!(
                "{:<8} {:>5} {:>5} {:>5} {:>5} {:>9.3} {:>9.3} {:>9.3}\n",
                format!("{cat:?}").to_lowercase(),
                c.true_positives,
                c.false_positives,
                c.true_negatives,
                c.false_negatives,
                s.precision,
                s.recall,
                s.f1
            ));
        }
        out
    }
}

/// Extracts both trees of a case from source and diffs them.
pub fn source_engine(case: &BenchmarkCase) -> Result<Vec<BreakingChange>, ExtractError> {
    let classpath = Classpath::standard();
    let old = extract_api_from_sources(&case.dir.join("v1"), ApiFilter::default(), classpath.clone())?;
    let new = extract_api_from_sources(&case.dir.join("v2"), ApiFilter::default(), classpath)?;
    Ok(diff(&old, &new))
}

/// Runs `engine` over every case; extraction failures are reported apart
/// and left out of the scores.
pub fn run_benchmark<E>(cases: &[BenchmarkCase], engine: E) -> BenchResult
where
    E: Fn(&BenchmarkCase) -> Result<Vec<BreakingChange>, ExtractError> + Sync,
{
    let started = Instant::now();
    let results: Vec<Result<CaseOutcome, ErroredCase>> = cases
        .par_iter()
        .map(|case| {
            let m = &case.manifest;
            let changes = engine(case).map_err(|e| ErroredCase {
                id: m.id.clone(),
                message: e.to_string(),
            })?;
            let mut kinds: Vec<BcKind> = changes.iter().map(|c| c.kind).collect();
            kinds.sort();
            kinds.dedup();
            Ok(CaseOutcome {
                id: m.id.clone(),
                expected: m.truth(),
                predicted: Verdict::of(&changes),
                kind_matched: m.expected_kind.is_none_or(|k| kinds.contains(&k)),
                kinds,
            })
        })
        .collect();
    let mut outcomes = Vec::new();
    let mut errored = Vec::new();
    for r in results {
        match r {
            Ok(o) => outcomes.push(o),
            Err(e) => errored.push(e),
        }
    }
    BenchResult {
        scores: AccuracyScores::from_pairs(outcomes.iter().map(|o| (o.predicted, o.expected))),
        outcomes,
        errored,
        seconds: started.elapsed().as_secs_f64(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(source: bool, binary: bool) -> Verdict {
        Verdict { source, binary }
    }

    #[test]
    fn perfect_predictions_score_one() {
        let pairs = [v(true, true), v(true, false), v(false, true), v(false, false)]
            .map(|x| (x, x));
        let s = AccuracyScores::from_pairs(pairs);
        for cat in ScoreCategory::ALL {
            assert_eq!(s.get(cat).precision, 1.0);
            assert_eq!(s.get(cat).recall, 1.0);
            assert_eq!(s.get(cat).f1, 1.0);
        }
        assert_eq!(s.all.confusion.true_positives, 3);
        assert_eq!(s.binary.confusion.true_negatives, 2);
    }

    #[test]
    fn confusion_counts() {
        // Predicted source-only, actually binary-only.
        let s = AccuracyScores::from_pairs([(v(true, false), v(false, true))]);
        assert_eq!(s.all.confusion.true_positives, 1);
        assert_eq!(s.source.confusion.false_positives, 1);
        assert_eq!(s.binary.confusion.false_negatives, 1);
        assert_eq!(s.source.precision, 0.0);
        assert_eq!(s.source.f1, 0.0);
    }

    fn verdict() -> impl Strategy<Value = Verdict> {
        (any::<bool>(), any::<bool>()).prop_map(|(s, b)| v(s, b))
    }

    proptest! {
        #[test]
        fn swapping_prediction_and_truth_transposes(pairs in prop::collection::vec((verdict(), verdict()), 0..40)) {
            let a = AccuracyScores::from_pairs(pairs.iter().copied());
            let b = AccuracyScores::from_pairs(pairs.iter().map(|&(p, t)| (t, p)));
            for cat in ScoreCategory::ALL {
                prop_assert_eq!(a.get(cat).confusion.transposed(), b.get(cat).confusion);
                prop_assert_eq!(a.get(cat).confusion.total(), pairs.len());
            }
        }

        #[test]
        fn f1_lies_between_precision_and_recall(pairs in prop::collection::vec((verdict(), verdict()), 1..40)) {
            let s = AccuracyScores::from_pairs(pairs);
            for cat in ScoreCategory::ALL {
                let c = s.get(cat);
                let (lo, hi) = (c.precision.min(c.recall), c.precision.max(c.recall));
                prop_assert!(c.f1 >= lo - 1e-12 && c.f1 <= hi + 1e-12);
            }
        }

        #[test]
        fn all_is_the_disjunction(p in verdict(), t in verdict()) {
            let s = AccuracyScores::from_pairs([(p, t)]);
            let c = s.all.confusion;
            prop_assert_eq!(c.true_positives + c.false_positives == 1, p.source || p.binary);
            prop_assert_eq!(c.true_positives + c.false_negatives == 1, t.source || t.binary);
        }
    }
}
