use std::path::PathBuf;

use thiserror::Error;

/// Errors raised while building or loading API models.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("type {name} is declared twice ({first} and {second})")]
    DuplicateType {
        name: String,
        first: String,
        second: String,
    },
    #[error("cyclic type hierarchy: {}", .0.join(" -> "))]
    HierarchyCycle(Vec<String>),
    #[error("invalid exclusion pattern {pattern:?}: {message}")]
    BadPattern { pattern: String, message: String },
    #[error("model document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported model schema {found:?} (expected {expected})")]
    Schema { found: String, expected: String },
    #[error("model was not built from per-file units and cannot be updated incrementally")]
    NotIncremental,
}

/// Errors raised by the class-file reader.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassFileError {
    #[error("not a class file (bad magic number)")]
    BadMagic,
    #[error("truncated class file at offset {0}")]
    Truncated(usize),
    #[error("unsupported class-file major version {0}")]
    UnsupportedVersion(u16),
    #[error("malformed constant pool: {0}")]
    ConstantPool(String),
    #[error("malformed descriptor {0:?}")]
    Descriptor(String),
    #[error("malformed generic signature {0:?}")]
    Signature(String),
}

/// Errors raised by the diet source parser.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{file}:{line}: {message}")]
pub struct ParseError {
    pub file: String,
    pub line: u32,
    pub message: String,
}

/// Top-level extraction error: any failure turning inputs into a model.
#[derive(Debug, Error)]
pub enum ExtractError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Archive {
        path: PathBuf,
        #[source]
        source: zip::result::ZipError,
    },
    #[error("{path}: {source}")]
    ClassFile {
        path: String,
        #[source]
        source: ClassFileError,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{0}")]
    Other(String),
}

impl ExtractError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        ExtractError::Io {
            path: path.into(),
            source,
        }
    }
}

/// Non-fatal problem found while extracting one input file.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Diagnostic {
    pub file: String,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.file, self.message)
    }
}
