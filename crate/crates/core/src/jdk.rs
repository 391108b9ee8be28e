//! Bundled standard-library model used to resolve `java.*` references.
//!
//! The document is produced by the bytecode backend from a JDK runtime image
//! (see `scripts/gen-jdk-model.sh`) and keeps hidden supertypes so that
//! hierarchy walks through the standard library stay complete.

use std::collections::{HashMap, HashSet};
use std::io::Read;
use std::sync::{Arc, LazyLock};

use crate::model::{QualifiedName, TypeDecl};
use crate::report::ModelDocument;

static ARCHIVE: &[u8] = include_bytes!("../data/jdk-api.zip");

/// Feature release the bundled model was generated from.
pub const RELEASE: u32 = 25;

fn document() -> String {
    let mut zip = zip::ZipArchive::new(std::io::Cursor::new(ARCHIVE)).expect("bundled archive");
    let mut entry = zip.by_name("jdk-api.json").expect("bundled model entry");
    let mut text = String::new();
    entry.read_to_string(&mut text).expect("bundled model is UTF-8");
    text
}

struct Jdk {
    types: HashMap<QualifiedName, Arc<TypeDecl>>,
    packages: HashSet<String>,
}

static JDK: LazyLock<Jdk> = LazyLock::new(|| {
    let doc = ModelDocument::parse(&document()).expect("bundled JDK model is valid");
    let packages = doc.symbols.values().map(|d| d.package.clone()).collect();
    let types = doc
        .symbols
        .into_iter()
        .map(|(name, decl)| (name, Arc::new(decl)))
        .collect();
    Jdk { types, packages }
});

pub fn lookup(name: &QualifiedName) -> Option<Arc<TypeDecl>> {
    JDK.types.get(name).cloned()
}

pub fn contains(name: &QualifiedName) -> bool {
    JDK.types.contains_key(name)
}

pub fn has_package(package: &str) -> bool {
    JDK.packages.contains(package)
}

pub fn len() -> usize {
    JDK.types.len()
}
