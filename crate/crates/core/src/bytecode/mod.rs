//! Bytecode backend: API models from class files, directories and archives.

mod extract;
pub mod reader;
pub mod signature;

use std::fs;
use std::io::Read;
use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use walkdir::WalkDir;

pub use extract::summary_to_decl;
pub use reader::{read_class_file, ClassFileSummary};

use crate::error::{Diagnostic, ExtractError};
use crate::model::{ApiFilter, ApiModel, Classpath, Provenance, TypeDecl};

/// Declarations read from a set of class files, plus per-file problems.
#[derive(Debug, Default)]
pub struct ClassSet {
    pub decls: Vec<TypeDecl>,
    pub diagnostics: Vec<Diagnostic>,
}

fn is_api_class_entry(name: &str) -> bool {
    name.ends_with(".class")
        && !name.ends_with("module-info.class")
        && !name.ends_with("package-info.class")
        && !name.starts_with("META-INF/")
}

/// Parses `(relative path, bytes)` pairs concurrently.
pub fn decls_from_bytes(files: Vec<(String, Vec<u8>)>) -> ClassSet {
    let results: Vec<(String, Result<Option<TypeDecl>, crate::error::ClassFileError>)> = files
        .into_par_iter()
        .map(|(file, bytes)| {
            let decl = read_class_file(&bytes).and_then(|s| summary_to_decl(&s, &file));
            (file, decl)
        })
        .collect();
    let mut set = ClassSet::default();
    for (file, result) in results {
        match result {
            Ok(Some(decl)) => set.decls.push(decl),
            Ok(None) => {}
            Err(e) => {
                log::warn!("{file}: {e}");
                set.diagnostics.push(Diagnostic {
                    file,
                    message: e.to_string(),
                });
            }
        }
    }
    set
}

/// Reads every class file under `root` (a directory, an archive, or a
/// single class file). Paths are relative to `root`, `/`-separated.
pub fn read_binaries(root: &Path) -> Result<ClassSet, ExtractError> {
    let meta = fs::metadata(root).map_err(|e| ExtractError::io(root, e))?;
    let files = if meta.is_dir() {
        read_directory(root)?
    } else if is_archive(root)? {
        read_archive(root)?
    } else {
        let bytes = fs::read(root).map_err(|e| ExtractError::io(root, e))?;
        let name = root
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        vec![(name, bytes)]
    };
    Ok(decls_from_bytes(files))
}

/// Reads the given relative class-file paths under a directory root.
pub fn read_class_files(root: &Path, relative: &[String]) -> Result<ClassSet, ExtractError> {
    let mut files = Vec::with_capacity(relative.len());
    for rel in relative {
        let path = root.join(rel);
        let bytes = fs::read(&path).map_err(|e| ExtractError::io(&path, e))?;
        files.push((rel.clone(), bytes));
    }
    Ok(decls_from_bytes(files))
}

pub fn is_archive(path: &Path) -> Result<bool, ExtractError> {
    let mut head = [0u8; 4];
    let mut f = fs::File::open(path).map_err(|e| ExtractError::io(path, e))?;
    let n = f.read(&mut head).map_err(|e| ExtractError::io(path, e))?;
    Ok(n == 4 && head == *b"PK\x03\x04" || n == 4 && head == *b"PK\x05\x06")
}

fn read_directory(root: &Path) -> Result<Vec<(String, Vec<u8>)>, ExtractError> {
    let mut files = Vec::new();
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(root).to_path_buf();
            ExtractError::io(path, e.into())
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = relative_name(root, entry.path());
        if !is_api_class_entry(&rel) {
            continue;
        }
        let bytes = fs::read(entry.path()).map_err(|e| ExtractError::io(entry.path(), e))?;
        files.push((rel, bytes));
    }
    Ok(files)
}

pub(crate) fn relative_name(root: &Path, path: &Path) -> String {
    let rel = path.strip_prefix(root).unwrap_or(path);
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy())
        .collect::<Vec<_>>()
        .join("/")
}

fn read_archive(path: &Path) -> Result<Vec<(String, Vec<u8>)>, ExtractError> {
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
        if !entry.is_file() || !is_api_class_entry(&name) {
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

/// Extracted model plus the diagnostics of files that could not be read.
#[derive(Debug)]
pub struct Extraction {
    pub model: ApiModel,
    pub diagnostics: Vec<Diagnostic>,
}

/// Builds an API model from class files under `root`.
pub fn extract_api_from_binaries(
    root: &Path,
    filter: ApiFilter,
    classpath: Arc<Classpath>,
) -> Result<Extraction, ExtractError> {
    let set = read_binaries(root)?;
    let model = ApiModel::assemble(set.decls, filter, classpath)?
        .with_provenance(Provenance::Bytecode);
    Ok(Extraction {
        model,
        diagnostics: set.diagnostics,
    })
}
