//! Loading models from any supported input, picked by content.

use std::fmt;
use std::fs;
use std::io::Read;
use std::path::Path;
use std::sync::Arc;

use walkdir::WalkDir;

use crate::bytecode::{extract_api_from_binaries, read_binaries};
use crate::error::{Diagnostic, ExtractError};
use crate::model::{ApiFilter, ApiModel, Classpath};
use crate::report::{looks_like_model, ModelDocument};
use crate::source::extract_api_from_sources;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    /// A serialized model document.
    Model,
    /// Class files: a directory, an archive, or a single class file.
    Bytecode,
    /// Java sources: a directory, a sources archive, or a single file.
    Source,
}

impl fmt::Display for InputKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputKind::Model => "model",
            InputKind::Bytecode => "bytecode",
            InputKind::Source => "source",
        })
    }
}

const CLASS_MAGIC: [u8; 4] = [0xCA, 0xFE, 0xBA, 0xBE];

fn head(path: &Path, n: usize) -> Result<Vec<u8>, ExtractError> {
    let mut buf = Vec::with_capacity(n);
    fs::File::open(path)
        .and_then(|f| f.take(n as u64).read_to_end(&mut buf))
        .map_err(|e| ExtractError::io(path, e))?;
    Ok(buf)
}

/// Decides how to read `path` by looking at what it contains.
pub fn detect_input_kind(path: &Path) -> Result<InputKind, ExtractError> {
    let meta = fs::metadata(path).map_err(|e| ExtractError::io(path, e))?;
    if meta.is_dir() {
        let mut classes = false;
        for entry in WalkDir::new(path).sort_by_file_name().into_iter().flatten() {
            let name = entry.file_name().to_string_lossy();
            if name.ends_with(".java") {
                return Ok(InputKind::Source);
            }
            classes |= name.ends_with(".class");
        }
        return if classes {
            Ok(InputKind::Bytecode)
        } else {
            Err(ExtractError::Other(format!(
                "{}: no Java sources or class files",
                path.display()
            )))
        };
    }
    let bytes = head(path, 512)?;
    if bytes.starts_with(&CLASS_MAGIC) {
        return Ok(InputKind::Bytecode);
    }
    if crate::bytecode::is_archive(path)? {
        return archive_kind(path);
    }
    if looks_like_model(&bytes) {
        return Ok(InputKind::Model);
    }
    Ok(InputKind::Source)
}

fn archive_kind(path: &Path) -> Result<InputKind, ExtractError> {
    let file = fs::File::open(path).map_err(|e| ExtractError::io(path, e))?;
    let zip = zip::ZipArchive::new(std::io::BufReader::new(file)).map_err(|source| {
        ExtractError::Archive {
            path: path.to_path_buf(),
            source,
        }
    })?;
    let mut sources = false;
    for name in zip.file_names() {
        if name.ends_with(".class") {
            return Ok(InputKind::Bytecode);
        }
        sources |= name.ends_with(".java");
    }
    if sources {
        Ok(InputKind::Source)
    } else {
        // An archive with neither is an empty library.
        Ok(InputKind::Bytecode)
    }
}

/// Library-independent types for resolving references: the given class-file
/// roots and archives in order, then the standard library.
pub fn load_classpath(entries: &[impl AsRef<Path>]) -> Result<Arc<Classpath>, ExtractError> {
    if entries.is_empty() {
        return Ok(Classpath::standard());
    }
    let mut decls = Vec::new();
    for entry in entries {
        let set = read_binaries(entry.as_ref())?;
        for d in &set.diagnostics {
            log::warn!("classpath {}: {d}", entry.as_ref().display());
        }
        decls.extend(set.decls);
    }
    Ok(Classpath::with_entries(decls))
}

#[derive(Debug)]
pub struct Loaded {
    pub kind: InputKind,
    pub model: ApiModel,
    pub diagnostics: Vec<Diagnostic>,
}

/// Reads a model from `path` with the backend its content calls for.
/// Model documents are re-assembled under `filter`.
pub fn load_model(
    path: &Path,
    filter: ApiFilter,
    classpath: Arc<Classpath>,
) -> Result<Loaded, ExtractError> {
    let kind = detect_input_kind(path)?;
    let (model, diagnostics) = match kind {
        InputKind::Model => {
            let text = fs::read_to_string(path).map_err(|e| ExtractError::io(path, e))?;
            let mut doc = ModelDocument::parse(&text)?;
            doc.filter = filter;
            (doc.into_model(classpath)?, Vec::new())
        }
        InputKind::Bytecode => {
            let e = extract_api_from_binaries(path, filter, classpath)?;
            (e.model, e.diagnostics)
        }
        InputKind::Source => (extract_api_from_sources(path, filter, classpath)?, Vec::new()),
    };
    Ok(Loaded {
        kind,
        model,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::serialize_model;

    #[test]
    fn detects_by_content() {
        let dir = tempfile::tempdir().unwrap();
        let src = dir.path().join("src/p");
        fs::create_dir_all(&src).unwrap();
        fs::write(src.join("A.java"), "package p; public class A {}").unwrap();
        assert_eq!(detect_input_kind(&dir.path().join("src")).unwrap(), InputKind::Source);

        // Names do not matter, only bytes.
        let class = dir.path().join("x.bin");
        fs::write(&class, [0xCA, 0xFE, 0xBA, 0xBE, 0, 0]).unwrap();
        assert_eq!(detect_input_kind(&class).unwrap(), InputKind::Bytecode);

        let model = load_model(&dir.path().join("src"), ApiFilter::default(), Classpath::standard())
            .unwrap()
            .model;
        let json = dir.path().join("api.txt");
        fs::write(&json, serialize_model(&model)).unwrap();
        assert_eq!(detect_input_kind(&json).unwrap(), InputKind::Model);
        let back = load_model(&json, ApiFilter::default(), Classpath::standard()).unwrap();
        assert_eq!(back.model, model);

        let empty = dir.path().join("empty");
        fs::create_dir(&empty).unwrap();
        assert!(detect_input_kind(&empty).is_err());
        assert!(detect_input_kind(&dir.path().join("missing")).is_err());
    }
}
