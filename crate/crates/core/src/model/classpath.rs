use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::decl::TypeDecl;
use super::name::QualifiedName;

/// Name-to-declaration lookup for types outside the analyzed library:
/// user-supplied classpath entries, then the bundled standard library.
#[derive(Debug, Default)]
pub struct Classpath {
    entries: HashMap<QualifiedName, Arc<TypeDecl>>,
    packages: HashSet<String>,
    without_jdk: bool,
}

impl Classpath {
    /// Only the bundled standard library.
    pub fn standard() -> Arc<Classpath> {
        static STANDARD: std::sync::LazyLock<Arc<Classpath>> =
            std::sync::LazyLock::new(|| Arc::new(Classpath::default()));
        STANDARD.clone()
    }

    /// Nothing at all, not even the standard library.
    pub fn empty() -> Arc<Classpath> {
        Arc::new(Classpath {
            without_jdk: true,
            ..Classpath::default()
        })
    }

    /// User entries in priority order; the first declaration of a name wins.
    pub fn with_entries(decls: impl IntoIterator<Item = TypeDecl>) -> Arc<Classpath> {
        let mut entries = HashMap::new();
        let mut packages = HashSet::new();
        for decl in decls {
            packages.insert(decl.package.clone());
            entries.entry(decl.id.clone()).or_insert_with(|| Arc::new(decl));
        }
        Arc::new(Classpath {
            entries,
            packages,
            without_jdk: false,
        })
    }

    pub fn lookup(&self, name: &QualifiedName) -> Option<Arc<TypeDecl>> {
        if let Some(decl) = self.entries.get(name) {
            return Some(decl.clone());
        }
        if self.without_jdk {
            None
        } else {
            crate::jdk::lookup(name)
        }
    }

    /// Lookup by dotted string, for call sites that hold a `&str`.
    pub fn lookup_str(&self, name: &str) -> Option<Arc<TypeDecl>> {
        self.lookup(&QualifiedName::new(name))
    }

    pub fn contains(&self, name: &QualifiedName) -> bool {
        self.entries.contains_key(name) || (!self.without_jdk && crate::jdk::contains(name))
    }

    /// Whether any type in `package` is known (used for on-demand imports).
    pub fn has_package(&self, package: &str) -> bool {
        self.packages.contains(package)
            || (!self.without_jdk && crate::jdk::has_package(package))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
