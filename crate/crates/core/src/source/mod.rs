//! Source backend: diet parsing and name resolution.

pub mod lexer;
pub mod parser;
mod resolve;
pub mod summary;

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use sha2::{Digest, Sha256};
use walkdir::WalkDir;

pub use parser::parse_unit;
pub use summary::CompilationUnitSummary;

use crate::error::{ExtractError, ModelError, ParseError};
use crate::model::{ApiFilter, ApiModel, Classpath, Provenance, TypeDecl};

pub type Digest32 = [u8; 32];

pub fn digest(bytes: &[u8]) -> Digest32 {
    Sha256::digest(bytes).into()
}

/// One parsed source file and the hash of the text it came from.
#[derive(Debug, Clone)]
pub struct SourceFile {
    pub summary: Arc<CompilationUnitSummary>,
    pub digest: Digest32,
}

/// Per-file summaries kept by source-extracted models, keyed by the path
/// relative to the source root.
#[derive(Debug, Clone, Default)]
pub struct SourceUnits {
    files: BTreeMap<String, SourceFile>,
}

impl SourceUnits {
    pub fn len(&self) -> usize {
        self.files.len()
    }

    pub fn is_empty(&self) -> bool {
        self.files.is_empty()
    }

    pub fn get(&self, file: &str) -> Option<&SourceFile> {
        self.files.get(file)
    }

    pub fn files(&self) -> impl Iterator<Item = (&String, &SourceFile)> {
        self.files.iter()
    }

    pub fn insert(&mut self, file: String, source: SourceFile) {
        self.files.insert(file, source);
    }

    pub fn remove(&mut self, file: &str) -> Option<SourceFile> {
        self.files.remove(file)
    }

    pub fn summaries(&self) -> Vec<Arc<CompilationUnitSummary>> {
        self.files.values().map(|f| f.summary.clone()).collect()
    }
}

pub fn is_api_source(path: &str) -> bool {
    let name = path.rsplit('/').next().unwrap_or(path);
    name.ends_with(".java") && name != "package-info.java" && name != "module-info.java"
}

/// Parses one file's bytes.
pub fn parse_file(file: &str, bytes: &[u8]) -> Result<SourceFile, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| ParseError {
        file: file.to_owned(),
        line: 1 + bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() as u32,
        message: "invalid UTF-8".into(),
    })?;
    Ok(SourceFile {
        summary: Arc::new(parse_unit(file, text)?),
        digest: digest(bytes),
    })
}

/// Parses `(relative path, bytes)` pairs concurrently. The first error in
/// path order wins.
pub fn parse_files(files: Vec<(String, Vec<u8>)>) -> Result<SourceUnits, ParseError> {
    let parsed: Vec<(String, Result<SourceFile, ParseError>)> = files
        .into_par_iter()
        .map(|(file, bytes)| {
            let result = parse_file(&file, &bytes);
            (file, result)
        })
        .collect();
    let mut units = SourceUnits::default();
    let mut parsed = parsed;
    parsed.sort_by(|a, b| a.0.cmp(&b.0));
    for (file, result) in parsed {
        units.insert(file, result?);
    }
    Ok(units)
}

/// Reads every API source file under `root` (a directory, a sources
/// archive, or a single `.java` file).
pub fn read_sources(root: &Path) -> Result<Vec<(String, Vec<u8>)>, ExtractError> {
    let meta = fs::metadata(root).map_err(|e| ExtractError::io(root, e))?;
    if meta.is_dir() {
        let mut files = Vec::new();
        for entry in WalkDir::new(root).sort_by_file_name() {
            let entry = entry.map_err(|e| {
                let path = e.path().unwrap_or(root).to_path_buf();
                ExtractError::io(path, e.into())
            })?;
            if !entry.file_type().is_file() {
                continue;
            }
            let rel = crate::bytecode::relative_name(root, entry.path());
            if !is_api_source(&rel) {
                continue;
            }
            let bytes = fs::read(entry.path()).map_err(|e| ExtractError::io(entry.path(), e))?;
            files.push((rel, bytes));
        }
        Ok(files)
    } else if crate::bytecode::is_archive(root)? {
        read_source_archive(root)
    } else {
        let bytes = fs::read(root).map_err(|e| ExtractError::io(root, e))?;
        let name = root
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        Ok(vec![(name, bytes)])
    }
}

fn read_source_archive(path: &Path) -> Result<Vec<(String, Vec<u8>)>, ExtractError> {
    let archive_err = |source| ExtractError::Archive {
        path: path.to_path_buf(),
        source,
    };
    let file = fs::File::open(path).map_err(|e| ExtractError::io(path, e))?;
    let mut zip = zip::ZipArchive::new(std::io::BufReader::new(file)).map_err(archive_err)?;
    let mut files = Vec::new();
    for i in 0..zip.len() {
        let mut entry = zip.by_index(i).map_err(archive_err)?;
        let name = entry.name().to_owned();
        if !entry.is_file() || !is_api_source(&name) {
            continue;
        }
        let mut bytes = Vec::with_capacity(entry.size() as usize);
        entry
            .read_to_end(&mut bytes)
            .map_err(|e| ExtractError::io(path.join(&name), e))?;
        files.push((name, bytes));
    }
    files.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(files)
}

/// Binds names across all summaries and synthesizes implicit members.
pub fn resolve_names(
    units: &[Arc<CompilationUnitSummary>],
    classpath: &Classpath,
) -> Vec<TypeDecl> {
    let mut sorted = units.to_vec();
    sorted.sort_by(|a, b| a.file.cmp(&b.file));
    resolve::Resolver::new(&sorted, classpath).declarations()
}

/// Assembles a model from already parsed units.
pub fn model_from_units(
    units: SourceUnits,
    filter: ApiFilter,
    classpath: Arc<Classpath>,
) -> Result<ApiModel, ModelError> {
    let decls = resolve_names(&units.summaries(), &classpath);
    Ok(ApiModel::assemble(decls, filter, classpath)?
        .with_provenance(Provenance::Source(Arc::new(units))))
}

/// Builds an API model from the Java sources under `root`.
pub fn extract_api_from_sources(
    root: &Path,
    filter: ApiFilter,
    classpath: Arc<Classpath>,
) -> Result<ApiModel, ExtractError> {
    let files = read_sources(root)?;
    let units = parse_files(files)?;
    Ok(model_from_units(units, filter, classpath)?)
}

/// Model of in-memory `(path, text)` sources with the default filter.
#[cfg(test)]
pub(crate) fn model_of(files: &[(&str, &str)]) -> ApiModel {
    model_with_filter(files, ApiFilter::default())
}

#[cfg(test)]
pub(crate) fn model_with_filter(files: &[(&str, &str)], filter: ApiFilter) -> ApiModel {
    let files = files
        .iter()
        .map(|(f, t)| (f.to_string(), t.as_bytes().to_vec()))
        .collect();
    model_from_units(parse_files(files).unwrap(), filter, Classpath::standard()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Modifier, TypeKind, Visibility};

    fn model(files: &[(&str, &str)]) -> ApiModel {
        model_of(files)
    }

    fn decl<'m>(m: &'m ApiModel, id: &str) -> &'m TypeDecl {
        m.lookup_str(id).map(|_| ()).expect(id);
        m.library_types().find(|t| t.id.as_str() == id).unwrap()
    }

    #[test]
    fn default_constructor_and_record_members() {
        let m = model(&[(
            "p/A.java",
            "package p; public class A {} public record P(int x) {}",
        )]);
        let a = decl(&m, "p.A");
        assert_eq!(a.constructors[0].id.as_str(), "p.A.A()");
        assert_eq!(a.constructors[0].visibility, Visibility::Public);
        let p = decl(&m, "p.P");
        assert_eq!(p.kind, TypeKind::Record);
        assert!(p.has(Modifier::Final));
        assert_eq!(p.constructors[0].id.as_str(), "p.P.P(int)");
        assert!(p.methods.iter().any(|m| m.id.as_str() == "p.P.x()"));
        assert_eq!(p.super_class.as_ref().unwrap().to_string(), "java.lang.Record");
    }

    #[test]
    fn binding_order() {
        let m = model(&[
            (
                "p/A.java",
                "package p; import java.util.*; import q.List; \
                 public class A<T> extends Base { public T t; public List l; public Map<String, T> m; \
                 public Inner i; public Entry e; public Missing x; public java.util.Map.Entry<T, T> f; }",
            ),
            ("p/Base.java", "package p; public class Base { public static class Inner {} }"),
            ("q/List.java", "package q; public class List {} "),
            ("p/Entry.java", "package p; public class Entry {}"),
        ]);
        let a = decl(&m, "p.A");
        let ty = |n: &str| a.fields.iter().find(|f| f.name == n).unwrap().ty.to_string();
        assert_eq!(ty("t"), "T");
        assert_eq!(ty("l"), "q.List");
        assert_eq!(ty("m"), "java.util.Map<java.lang.String,T>");
        assert_eq!(ty("i"), "p.Base.Inner");
        // Same package wins over on-demand imports.
        assert_eq!(ty("e"), "p.Entry");
        assert_eq!(ty("x"), "p.Missing");
        assert_eq!(ty("f"), "java.util.Map.Entry<T,T>");
    }

    #[test]
    fn inherited_member_types_from_the_classpath() {
        let m = model(&[(
            "p/M.java",
            "package p; public class M<K> extends java.util.HashMap<K, String> { public Entry<K, String> first() { return null; } }",
        )]);
        let ret = decl(&m, "p.M").methods[0].return_type.as_ref().unwrap().to_string();
        assert_eq!(ret, "java.util.Map.Entry<K,java.lang.String>");
    }

    #[test]
    fn dangling_name_uses_single_unknown_on_demand_import() {
        let m = model(&[(
            "p/A.java",
            "package p; import org.thirdparty.*; public class A extends Widget {}",
        )]);
        assert_eq!(
            decl(&m, "p.A").super_class.as_ref().unwrap().to_string(),
            "org.thirdparty.Widget"
        );
    }

    #[test]
    fn source_retention_annotations_are_dropped() {
        let m = model(&[(
            "p/A.java",
            "package p; import java.lang.annotation.*; \
             @Retention(RetentionPolicy.SOURCE) @interface Src {} \
             @interface Cls {} \
             public class A { @Src @Cls @Override @Deprecated public String toString() { return \"\"; } }",
        )]);
        let names: Vec<&str> = decl(&m, "p.A").methods[0].annotations.iter().map(|a| a.as_str()).collect();
        assert_eq!(names, ["java.lang.Deprecated", "p.Cls"]);
    }

    #[test]
    fn duplicate_types_name_both_files() {
        let files = vec![
            ("a/X.java".to_string(), b"package p; public class X {}".to_vec()),
            ("b/X.java".to_string(), b"package p; public class X {}".to_vec()),
        ];
        let err = model_from_units(parse_files(files).unwrap(), ApiFilter::default(), Classpath::standard())
            .unwrap_err();
        let text = err.to_string();
        assert!(text.contains("a/X.java") && text.contains("b/X.java"), "{text}");
    }

    #[test]
    fn inner_class_erasure_uses_enclosing_type_parameters() {
        let m = model(&[(
            "p/O.java",
            "package p; public class O<T extends Number> { public class I { public void m(T t) {} } }",
        )]);
        assert_eq!(decl(&m, "p.O.I").methods[0].id.as_str(), "p.O.I.m(java.lang.Number)");
    }
}
