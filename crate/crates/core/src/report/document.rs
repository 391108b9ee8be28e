use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::model::{ApiFilter, ApiModel, Classpath, QualifiedName, TypeDecl};

pub const SCHEMA: &str = "apishift/api-model";
pub const SCHEMA_VERSION: u32 = 1;

/// On-disk form of an [`ApiModel`]: every library type keyed by name.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ModelDocument {
    pub schema: String,
    pub schema_version: u32,
    #[serde(default)]
    pub filter: ApiFilter,
    pub symbols: BTreeMap<QualifiedName, TypeDecl>,
}

impl ModelDocument {
    pub fn from_model(model: &ApiModel) -> ModelDocument {
        ModelDocument {
            schema: SCHEMA.to_owned(),
            schema_version: SCHEMA_VERSION,
            filter: model.filter().clone(),
            symbols: model
                .library_types()
                .map(|d| (d.id.clone(), TypeDecl::clone(d)))
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<ModelDocument, ModelError> {
        let doc: ModelDocument = serde_json::from_str(text)?;
        if doc.schema != SCHEMA || doc.schema_version != SCHEMA_VERSION {
            return Err(ModelError::Schema {
                found: format!("{} v{}", doc.schema, doc.schema_version),
                expected: format!("{SCHEMA} v{SCHEMA_VERSION}"),
            });
        }
        Ok(doc)
    }

    pub fn into_model(self, classpath: Arc<Classpath>) -> Result<ApiModel, ModelError> {
        ApiModel::assemble(self.symbols.into_values().collect(), self.filter, classpath)
    }
}

/// Pretty-printed, deterministic JSON for `model`.
pub fn serialize_model(model: &ApiModel) -> String {
    let mut text = serde_json::to_string_pretty(&ModelDocument::from_model(model))
        .expect("model documents always serialize");
    text.push('\n');
    text
}

pub fn deserialize_model(text: &str, classpath: Arc<Classpath>) -> Result<ApiModel, ModelError> {
    ModelDocument::parse(text)?.into_model(classpath)
}

/// Cheap sniff used by input autodetection.
pub fn looks_like_model(prefix: &[u8]) -> bool {
    let head = String::from_utf8_lossy(&prefix[..prefix.len().min(256)]);
    head.trim_start().starts_with('{') && head.contains(SCHEMA)
}
