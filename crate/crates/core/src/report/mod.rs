//! Serialization of models and diff reports.

mod diff_report;
mod document;

pub use diff_report::{DiffReport, Format, Summary, UnknownFormat, CSV_HEADER, TOOL_VERSION};
pub use document::{
    deserialize_model, looks_like_model, serialize_model, ModelDocument, SCHEMA, SCHEMA_VERSION,
};
