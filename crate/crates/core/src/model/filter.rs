use regex::Regex;
use serde::{Deserialize, Serialize};

use super::decl::DEPRECATED;
use super::name::QualifiedName;
use crate::error::ModelError;

/// API delimitation: symbols matching any exclusion are not part of the API.
///
/// Package patterns are matched against the qualified name of each type.
/// A pattern prefixed with `re:` is a regular expression; anything else is a
/// glob where `*` matches any run of characters (dots included).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ApiFilter {
    #[serde(default)]
    pub excluded_package_patterns: Vec<String>,
    #[serde(default)]
    pub excluded_annotations: Vec<QualifiedName>,
    #[serde(default = "default_true")]
    pub include_deprecated: bool,
}

fn default_true() -> bool {
    true
}

impl Default for ApiFilter {
    fn default() -> Self {
        ApiFilter {
            excluded_package_patterns: Vec::new(),
            excluded_annotations: Vec::new(),
            include_deprecated: true,
        }
    }
}

impl ApiFilter {
    pub fn compile(&self) -> Result<CompiledFilter, ModelError> {
        let patterns = self
            .excluded_package_patterns
            .iter()
            .map(|p| compile_pattern(p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CompiledFilter {
            patterns,
            annotations: self.excluded_annotations.clone(),
            include_deprecated: self.include_deprecated,
        })
    }
}

fn compile_pattern(pattern: &str) -> Result<Regex, ModelError> {
    let source = match pattern.strip_prefix("re:") {
        Some(re) => format!("^(?:{re})$"),
        None => {
            let mut out = String::from("^");
            for c in pattern.chars() {
                if c == '*' {
                    out.push_str(".*");
                } else {
                    out.push_str(&regex::escape(&c.to_string()));
                }
            }
            out.push('$');
            out
        }
    };
    Regex::new(&source).map_err(|e| ModelError::BadPattern {
        pattern: pattern.to_owned(),
        message: e.to_string(),
    })
}

#[derive(Debug, Clone)]
pub struct CompiledFilter {
    patterns: Vec<Regex>,
    annotations: Vec<QualifiedName>,
    include_deprecated: bool,
}

impl CompiledFilter {
    pub fn excludes_name(&self, type_name: &str) -> bool {
        self.patterns.iter().any(|p| p.is_match(type_name))
    }

    pub fn excludes_annotated(&self, annotations: &[QualifiedName]) -> bool {
        annotations.iter().any(|a| {
            self.annotations.contains(a) || (!self.include_deprecated && a == DEPRECATED)
        })
    }

    /// Whether any annotation is one the filter counts (excluded ones and `@Deprecated`).
    pub fn tracked_annotation(&self, annotation: &QualifiedName) -> bool {
        self.annotations.contains(annotation) || annotation == DEPRECATED
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn filter(patterns: &[&str]) -> CompiledFilter {
        ApiFilter {
            excluded_package_patterns: patterns.iter().map(|s| s.to_string()).collect(),
            ..ApiFilter::default()
        }
        .compile()
        .unwrap()
    }

    #[test]
    fn glob_matches_internal_packages() {
        let f = filter(&["*.internal.*"]);
        assert!(f.excludes_name("com.acme.internal.Impl"));
        assert!(f.excludes_name("com.acme.internal.sub.Impl"));
        assert!(!f.excludes_name("com.acme.Internal"));
        assert!(!f.excludes_name("com.acme.api.Thing"));
    }

    #[test]
    fn regex_prefix() {
        let f = filter(&[r"re:com\.acme\.(impl|spi)\..*"]);
        assert!(f.excludes_name("com.acme.impl.X"));
        assert!(f.excludes_name("com.acme.spi.Y"));
        assert!(!f.excludes_name("com.acme.api.Z"));
    }

    #[test]
    fn bad_regex_is_reported() {
        let err = ApiFilter {
            excluded_package_patterns: vec!["re:(".into()],
            ..ApiFilter::default()
        }
        .compile()
        .unwrap_err();
        assert!(matches!(err, ModelError::BadPattern { .. }));
    }

    #[test]
    fn deprecated_only_excluded_on_request() {
        let deprecated = vec![QualifiedName::new(DEPRECATED)];
        assert!(!ApiFilter::default()
            .compile()
            .unwrap()
            .excludes_annotated(&deprecated));
        let strict = ApiFilter {
            include_deprecated: false,
            ..ApiFilter::default()
        };
        assert!(strict.compile().unwrap().excludes_annotated(&deprecated));
    }
}
