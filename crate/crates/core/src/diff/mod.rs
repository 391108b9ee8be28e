//! Symbol matching and breaking-change detection between two models.

mod kind;
mod rules;

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

pub use kind::{BcKind, BreakingChange, Category, UnknownKind};

use crate::model::{ApiModel, QualifiedName};

/// API symbols of two models paired by identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolMatching {
    pub matched: Vec<QualifiedName>,
    pub removed: Vec<QualifiedName>,
    pub added: Vec<QualifiedName>,
}

/// Pairs API symbols with identical qualified names. A rename shows up as
/// one removal and one addition.
pub fn match_symbols(old: &ApiModel, new: &ApiModel) -> SymbolMatching {
    let a: BTreeSet<QualifiedName> = old.api_symbol_ids().into_iter().collect();
    let b: BTreeSet<QualifiedName> = new.api_symbol_ids().into_iter().collect();
    SymbolMatching {
        matched: a.intersection(&b).cloned().collect(),
        removed: a.difference(&b).cloned().collect(),
        added: b.difference(&a).cloned().collect(),
    }
}

/// Breaking changes from `old` to `new`, sorted by impacted symbol and then
/// by kind in catalog order.
pub fn diff(old: &ApiModel, new: &ApiModel) -> Vec<BreakingChange> {
    let types: Vec<_> = old.types().cloned().collect();
    // Types that disappear from the new API, keyed for nested-type suppression.
    let gone: HashSet<QualifiedName> = types
        .iter()
        .filter(|t| match new.get(&t.id) {
            None => true,
            Some(n) => !new.is_filtered(n) && !new.is_exported(n),
        })
        .map(|t| t.id.clone())
        .collect();

    let mut changes: Vec<BreakingChange> = types
        .par_iter()
        .flat_map_iter(|t| rules::type_changes(old, new, t, &gone))
        .collect();
    changes.sort_by(|a, b| {
        a.impacted_symbol
            .cmp(&b.impacted_symbol)
            .then(a.kind.cmp(&b.kind))
            .then_with(|| a.location.file.cmp(&b.location.file))
            .then(a.location.line.cmp(&b.location.line))
    });
    changes.dedup_by(|a, b| a.impacted_symbol == b.impacted_symbol && a.kind == b.kind);
    changes
}
