//! API model extraction and breaking-change detection for Java libraries.
//!
//! Models come from source trees ([`source`]), class files and archives
//! ([`bytecode`]) or saved JSON documents ([`report`]); [`input`] picks the
//! backend for a path. [`diff`] compares two models, [`incremental`] keeps a
//! model current across edits and git history, and [`bench`](mod@bench) scores the
//! detector against a labelled corpus.

pub mod bench;
pub mod bytecode;
pub mod diff;
pub mod error;
pub mod incremental;
pub mod input;
pub mod jdk;
pub mod model;
pub mod report;
pub mod source;
