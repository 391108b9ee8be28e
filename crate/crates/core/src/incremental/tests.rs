use super::*;
use crate::diff::{diff, BcKind};
use crate::model::{ApiFilter, Classpath};
use crate::source::{model_from_units, parse_files};

type Files = Vec<(String, Vec<u8>)>;

fn files(list: &[(&str, &str)]) -> Files {
    list.iter()
        .map(|(f, t)| (f.to_string(), t.as_bytes().to_vec()))
        .collect()
}

fn extract(files: &Files) -> ApiModel {
    model_from_units(
        parse_files(files.clone()).unwrap(),
        ApiFilter::default(),
        Classpath::standard(),
    )
    .unwrap()
}

fn contents(files: &Files) -> BTreeMap<String, Vec<u8>> {
    files.iter().cloned().collect()
}

fn v1() -> Files {
    files(&[
        ("p/A.java", "package p; public class A { public void m() {} }"),
        ("p/B.java", "package p; public class B extends A {}"),
        ("p/C.java", "package p; public class C {}"),
    ])
}

#[test]
fn detect_changes_partitions_by_presence_and_digest() {
    let s1 = snapshot(&v1());
    assert_eq!(detect_changes(&s1, &s1), ChangedFiles::default());

    let mut next = v1();
    next[0].1 = b"package p; public class A {}".to_vec();
    next.remove(2);
    next.push(("q/D.java".into(), b"package q; public class D {}".to_vec()));
    let c = detect_changes(&s1, &snapshot(&next));
    assert_eq!(c.modified.iter().collect::<Vec<_>>(), ["p/A.java"]);
    assert_eq!(c.deleted.iter().collect::<Vec<_>>(), ["p/C.java"]);
    assert_eq!(c.added.iter().collect::<Vec<_>>(), ["q/D.java"]);
}

#[test]
fn empty_change_set_keeps_the_model() {
    let m = extract(&v1());
    let parser = CountingParser::new(DietParser);
    let next = update(&m, &ChangedFiles::default(), &BTreeMap::new(), &parser).unwrap();
    assert_eq!(next, m);
    assert_eq!(parser.calls(), 0);
}

#[test]
fn one_modified_file_is_parsed_once() {
    let m = extract(&v1());
    let mut v2 = v1();
    v2[0].1 = b"package p; public class A { public void m() {} public void n() {} }".to_vec();
    let changes = detect_changes(&model_snapshot(&m).unwrap(), &snapshot(&v2));
    let parser = CountingParser::new(DietParser);
    let next = update(&m, &changes, &contents(&v2), &parser).unwrap();
    assert_eq!(parser.calls(), 1);
    assert_eq!(next, extract(&v2));
}

#[test]
fn deleted_file_drops_its_types() {
    let m = extract(&v1());
    let changes = ChangedFiles {
        deleted: ["p/C.java".to_string()].into(),
        ..ChangedFiles::default()
    };
    let next = update(&m, &changes, &BTreeMap::new(), &DietParser).unwrap();
    assert!(next.lookup_str("p.C").is_none());
    let found = diff(&m, &next);
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].kind, BcKind::TypeRemoved);
}

#[test]
fn added_file_rebinds_untouched_references() {
    // p.A first binds `List` through the on-demand import; a same-package
    // List declared later takes precedence.
    let v1 = files(&[(
        "p/A.java",
        "package p; import java.util.*; public class A { public List l; }",
    )]);
    let mut v2 = v1.clone();
    v2.push(("p/List.java".into(), b"package p; public class List {}".to_vec()));
    let m = extract(&v1);
    let changes = detect_changes(&model_snapshot(&m).unwrap(), &snapshot(&v2));
    let next = update(&m, &changes, &contents(&v2), &DietParser).unwrap();
    assert_eq!(next, extract(&v2));
    assert_eq!(
        next.lookup_str("p.A").unwrap().fields[0].ty.to_string(),
        "p.List"
    );
}

#[test]
fn parse_failure_is_an_error() {
    let m = extract(&v1());
    let mut v2 = v1();
    v2[1].1 = b"package p; public class B extends A {".to_vec();
    let changes = detect_changes(&model_snapshot(&m).unwrap(), &snapshot(&v2));
    let err = update(&m, &changes, &contents(&v2), &DietParser).unwrap_err();
    assert!(err.to_string().contains("p/B.java"), "{err}");
}

#[test]
fn bytecode_models_are_not_incremental() {
    let m = ApiModel::empty();
    assert!(update(&m, &ChangedFiles::default(), &BTreeMap::new(), &DietParser).is_err());
}

/// In-memory linear history: each commit is a full tree.
struct Scripted(Vec<Files>);

impl HistoryProvider for Scripted {
    fn commits(&self, _: &str) -> Result<Vec<String>, HistoryError> {
        Ok((0..self.0.len()).map(|i| i.to_string()).collect())
    }

    fn list_files(&self, commit: &str) -> Result<Vec<String>, HistoryError> {
        Ok(self.tree(commit).iter().map(|(f, _)| f.clone()).collect())
    }

    fn changed_paths(&self, from: &str, to: &str) -> Result<ChangedFiles, HistoryError> {
        Ok(detect_changes(&snapshot(self.tree(from)), &snapshot(self.tree(to))))
    }

    fn read_files(&self, commit: &str, paths: &[String]) -> Result<Files, HistoryError> {
        let tree = contents(self.tree(commit));
        Ok(paths.iter().map(|p| (p.clone(), tree[p].clone())).collect())
    }
}

impl Scripted {
    fn tree(&self, commit: &str) -> &Files {
        &self.0[commit.parse::<usize>().unwrap()]
    }
}

#[test]
fn walk_reports_changes_at_the_introducing_commit() {
    let c0 = files(&[
        ("src/p/A.java", "package p; public class A { public void m() {} }"),
        ("README", "not java"),
    ]);
    let mut c1 = c0.clone();
    c1.push(("src/p/B.java".into(), b"package p; public class B {}".to_vec()));
    let mut c2 = c1.clone();
    c2[0].1 = b"package p; public class A { }".to_vec();
    let mut c3 = c2.clone();
    c3[2].1 = b"package p; public class B {".to_vec();
    let c4 = c2.clone();

    let tail: Files = c4
        .iter()
        .filter(|(f, _)| f.ends_with(".java"))
        .map(|(f, b)| (f["src/".len()..].to_owned(), b.clone()))
        .collect();
    let expected = extract(&tail);
    let history = Scripted(vec![c0, c1, c2, c3, c4]);
    let mut config = WalkConfig::new("main");
    config.source_root = "src".into();
    let parser = CountingParser::new(DietParser);
    let mut records = Vec::new();
    let mut pivot_matches = false;
    let summary = walk_history(&history, &config, &parser, |r, m| {
        records.push(r.clone());
        pivot_matches = *m == expected;
    })
    .unwrap();

    let counts: Vec<usize> = records.iter().map(|r| r.changes.len()).collect();
    assert_eq!(counts, [0, 0, 1, 0, 0]);
    assert_eq!(records[2].changes[0].kind, BcKind::ExecutableRemoved);
    assert!(records[3].skipped.is_some());
    let parsed: Vec<usize> = records.iter().map(|r| r.parsed_files).collect();
    // The last commit restores the pivot's tree, so nothing is parsed.
    assert_eq!(parsed, [1, 1, 1, 1, 0]);
    assert_eq!(parser.calls(), 4);
    assert_eq!((summary.commits, summary.skipped), (5, 1));
    assert!(pivot_matches);
}
