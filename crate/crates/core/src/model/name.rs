use std::fmt;

use serde::{Deserialize, Serialize};

/// Dot-separated fully qualified name of a symbol.
///
/// Types use their canonical name (`pkg.Outer.Inner`), fields append their
/// simple name, and executables append their erased parameter list
/// (`pkg.C.m(int,java.lang.String)`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QualifiedName(String);

impl QualifiedName {
    pub fn new(value: impl Into<String>) -> Self {
        QualifiedName(value.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Last dot-separated segment, ignoring any parameter list.
    pub fn simple_name(&self) -> &str {
        let head = match self.0.find('(') {
            Some(paren) => &self.0[..paren],
            None => &self.0,
        };
        match head.rfind('.') {
            Some(dot) => &head[dot + 1..],
            None => head,
        }
    }

    /// Everything before the last segment (empty for unqualified names).
    pub fn qualifier(&self) -> &str {
        let head = match self.0.find('(') {
            Some(paren) => &self.0[..paren],
            None => &self.0,
        };
        match head.rfind('.') {
            Some(dot) => &head[..dot],
            None => "",
        }
    }

    pub fn member(&self, suffix: &str) -> QualifiedName {
        QualifiedName(format!("{}.{}", self.0, suffix))
    }
}

impl fmt::Display for QualifiedName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for QualifiedName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&str> for QualifiedName {
    fn from(value: &str) -> Self {
        QualifiedName(value.to_owned())
    }
}

impl From<String> for QualifiedName {
    fn from(value: String) -> Self {
        QualifiedName(value)
    }
}

impl AsRef<str> for QualifiedName {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl PartialEq<str> for QualifiedName {
    fn eq(&self, other: &str) -> bool {
        self.0 == other
    }
}

impl PartialEq<&str> for QualifiedName {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_name_ignores_parameter_list() {
        let name = QualifiedName::new("pkg.C.m(java.lang.String,int)");
        assert_eq!(name.simple_name(), "m");
        assert_eq!(name.qualifier(), "pkg.C");
    }

    #[test]
    fn unqualified() {
        let name = QualifiedName::new("Top");
        assert_eq!(name.simple_name(), "Top");
        assert_eq!(name.qualifier(), "");
    }
}
