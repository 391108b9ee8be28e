//! Technology-independent API model.

mod classpath;
mod decl;
pub mod erasure;
mod filter;
mod hierarchy;
mod name;
mod typeref;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

pub use classpath::Classpath;
pub use decl::{
    Executable, ExecutableKind, FieldDecl, Modifier, Modifiers, Param, SourceLocation, TypeDecl,
    TypeKind, TypeParam, Visibility, DEPRECATED,
};
pub use filter::{ApiFilter, CompiledFilter};
pub use hierarchy::{ExceptionKind, Member, MemberKind, Members, SuperType};
pub use name::QualifiedName;
pub use typeref::{Primitive, TypeName, TypeRef, WildcardBound, OBJECT};

use crate::error::ModelError;

static NEXT_MODEL_ID: AtomicU64 = AtomicU64::new(1);

/// Where a model came from; decides how it can be updated incrementally.
#[derive(Clone, Default)]
pub enum Provenance {
    /// Loaded from a document or assembled by hand.
    #[default]
    Assembled,
    /// Extracted from class files; each declaration's location names its file.
    Bytecode,
    /// Extracted from sources; keeps the per-file summaries for re-binding.
    Source(Arc<crate::source::SourceUnits>),
}

impl fmt::Debug for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Assembled => f.write_str("Assembled"),
            Provenance::Bytecode => f.write_str("Bytecode"),
            Provenance::Source(units) => write!(f, "Source({} files)", units.len()),
        }
    }
}

/// Immutable model of a library and the classpath needed to interpret it.
///
/// The model stores every type extracted from the library, including
/// package-private ones that only matter as hierarchy nodes; [`ApiModel::types`]
/// yields the exported, unfiltered API.
pub struct ApiModel {
    id: u64,
    library: BTreeMap<QualifiedName, Arc<TypeDecl>>,
    refs: HashMap<QualifiedName, TypeName>,
    filter: ApiFilter,
    compiled: CompiledFilter,
    classpath: Arc<Classpath>,
    api: BTreeSet<QualifiedName>,
    provenance: Provenance,
}

impl ApiModel {
    /// Builds a model from extracted declarations.
    ///
    /// Fails on duplicate type names and on cyclic hierarchies.
    pub fn assemble(
        decls: Vec<TypeDecl>,
        filter: ApiFilter,
        classpath: Arc<Classpath>,
    ) -> Result<ApiModel, ModelError> {
        let compiled = filter.compile()?;
        let id = NEXT_MODEL_ID.fetch_add(1, Ordering::Relaxed);

        let mut plain: BTreeMap<QualifiedName, TypeDecl> = BTreeMap::new();
        for decl in decls {
            if let Some(existing) = plain.get(&decl.id) {
                let (a, b) = ordered(&existing.location.file, &decl.location.file);
                return Err(ModelError::DuplicateType {
                    name: decl.id.to_string(),
                    first: a.to_owned(),
                    second: b.to_owned(),
                });
            }
            plain.insert(decl.id.clone(), decl);
        }

        derive_non_sealed(&mut plain, &classpath);

        let mut refs: HashMap<QualifiedName, TypeName> = HashMap::new();
        let mut library = BTreeMap::new();
        for (name, mut decl) in plain {
            decl.for_each_type_ref_mut(&mut |r| {
                *r = r.map_names(&mut |n| {
                    refs.entry(n.qualified_name().clone())
                        .or_insert_with(|| TypeName::owned(n.qualified_name().clone(), id))
                        .clone()
                })
            });
            library.insert(name, Arc::new(decl));
        }

        let mut model = ApiModel {
            id,
            library,
            refs,
            filter,
            compiled,
            classpath,
            api: BTreeSet::new(),
            provenance: Provenance::Assembled,
        };
        model.check_cycles()?;
        model.api = model
            .library
            .values()
            .filter(|d| model.is_exported(d) && !model.is_filtered(d))
            .map(|d| d.id.clone())
            .collect();
        Ok(model)
    }

    pub fn empty() -> ApiModel {
        ApiModel::assemble(Vec::new(), ApiFilter::default(), Classpath::standard())
            .expect("empty model is valid")
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> ApiModel {
        self.provenance = provenance;
        self
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn filter(&self) -> &ApiFilter {
        &self.filter
    }

    pub fn compiled_filter(&self) -> &CompiledFilter {
        &self.compiled
    }

    pub fn classpath(&self) -> &Arc<Classpath> {
        &self.classpath
    }

    /// Exported, unfiltered type declarations in name order.
    pub fn types(&self) -> impl Iterator<Item = &Arc<TypeDecl>> + '_ {
        self.api.iter().map(move |n| &self.library[n])
    }

    /// Every library declaration with parameter names and locations cleared.
    /// Class files may lack the names and lines, and a bytecode model locates
    /// declarations in `.class` files, so models extracted from a library's
    /// sources and from its compiled classes agree on this view.
    pub fn without_lossy_fields(&self) -> Vec<TypeDecl> {
        self.library
            .values()
            .map(|d| {
                let mut d = TypeDecl::clone(d);
                d.location = SourceLocation::default();
                for f in &mut d.fields {
                    f.location = SourceLocation::default();
                }
                for e in d.methods.iter_mut().chain(d.constructors.iter_mut()) {
                    e.location = SourceLocation::default();
                    e.params.iter_mut().for_each(|p| p.name.clear());
                }
                d
            })
            .collect()
    }

    pub fn api_type_names(&self) -> &BTreeSet<QualifiedName> {
        &self.api
    }

    pub fn is_api_type(&self, name: &QualifiedName) -> bool {
        self.api.contains(name)
    }

    /// Every library declaration, exported or not, in name order.
    pub fn library_types(&self) -> impl Iterator<Item = &Arc<TypeDecl>> + '_ {
        self.library.values()
    }

    pub fn library_len(&self) -> usize {
        self.library.len()
    }

    /// Library declaration by name (no classpath fallback).
    pub fn get(&self, name: &QualifiedName) -> Option<&Arc<TypeDecl>> {
        self.library.get(name)
    }

    /// Library, then classpath.
    pub fn lookup(&self, name: &QualifiedName) -> Option<Arc<TypeDecl>> {
        match self.library.get(name) {
            Some(decl) => Some(decl.clone()),
            None => self.classpath.lookup(name),
        }
    }

    pub fn lookup_str(&self, name: &str) -> Option<Arc<TypeDecl>> {
        self.lookup(&QualifiedName::new(name))
    }

    /// Resolves a reference handle. Handles interned by this model memoize
    /// their resolution; foreign handles fall back to a plain lookup.
    pub fn resolve(&self, name: &TypeName) -> Option<Arc<TypeDecl>> {
        if name.owner() == self.id {
            name.resolve_with(|n| self.lookup(n))
        } else {
            self.lookup(name.qualified_name())
        }
    }

    pub fn resolve_ref(&self, ty: &TypeRef) -> Option<Arc<TypeDecl>> {
        ty.declared_name().and_then(|n| self.resolve(n))
    }

    /// The unique handle for `name`, if any use site references it.
    pub fn reference(&self, name: &QualifiedName) -> Option<&TypeName> {
        self.refs.get(name)
    }

    /// Number of distinct referenced names (one handle each).
    pub fn reference_count(&self) -> usize {
        self.refs.len()
    }

    /// A type is exported when it is public, or protected inside an
    /// effectively extensible type, and every enclosing type is exported.
    pub fn is_exported(&self, decl: &TypeDecl) -> bool {
        let enclosing = match &decl.enclosing_type {
            None => return decl.visibility.is_public(),
            Some(name) => match self.lookup(name) {
                Some(e) => e,
                None => return false,
            },
        };
        let visible = match decl.visibility {
            Visibility::Public => true,
            Visibility::Protected => !self.is_effectively_final(&enclosing),
            _ => false,
        };
        visible && self.is_exported(&enclosing)
    }

    /// Accessibility of a member with `visibility` when accessed through `context`.
    pub fn is_member_accessible(&self, visibility: Visibility, context: &TypeDecl) -> bool {
        match visibility {
            Visibility::Public => true,
            Visibility::Protected => !self.is_effectively_final(context),
            _ => false,
        }
    }

    /// Excluded by name pattern or annotation, directly or via an enclosing type.
    pub fn is_filtered(&self, decl: &TypeDecl) -> bool {
        if self.compiled.excludes_name(decl.id.as_str())
            || self.compiled.excludes_annotated(&decl.annotations)
        {
            return true;
        }
        match &decl.enclosing_type {
            Some(name) => self.library.get(name).is_some_and(|e| self.is_filtered(e)),
            None => false,
        }
    }

    pub fn is_member_filtered(&self, annotations: &[QualifiedName]) -> bool {
        self.compiled.excludes_annotated(annotations)
    }

    /// Final or sealed, an enum or record, or a class without any
    /// constructor a subclass could call.
    pub fn is_effectively_final(&self, decl: &TypeDecl) -> bool {
        if decl.has(Modifier::Final) || decl.has(Modifier::Sealed) {
            return true;
        }
        match decl.kind {
            TypeKind::Enum | TypeKind::Record => true,
            TypeKind::Class => !decl
                .constructors
                .iter()
                .any(|c| c.visibility.is_visible_outside_package()),
            TypeKind::Interface | TypeKind::Annotation => false,
        }
    }

    pub fn is_effectively_abstract(&self, decl: &TypeDecl) -> bool {
        decl.has(Modifier::Abstract) || decl.is_interface()
    }

    /// Every API symbol (types, then their members) with its identity.
    /// Used for symbol counts and export checks.
    pub fn api_symbol_ids(&self) -> Vec<QualifiedName> {
        let mut ids = Vec::new();
        for decl in self.types() {
            ids.push(decl.id.clone());
            let members = self.api_members(decl);
            ids.extend(members.all().map(|m| m.id(decl)));
        }
        ids
    }

    fn check_cycles(&self) -> Result<(), ModelError> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Active,
            Done,
        }
        let mut marks: HashMap<QualifiedName, Mark> = HashMap::new();
        for start in self.library.keys() {
            if marks.contains_key(start) {
                continue;
            }
            // Iterative DFS keeping the current path for the diagnostic.
            let mut path: Vec<(QualifiedName, Vec<QualifiedName>)> = Vec::new();
            marks.insert(start.clone(), Mark::Active);
            path.push((start.clone(), self.direct_super_names(start)));
            while let Some((_, pending)) = path.last_mut() {
                match pending.pop() {
                    Some(next) => match marks.get(&next) {
                        Some(Mark::Active) => {
                            let from = path.iter().position(|(n, _)| *n == next).unwrap_or(0);
                            let mut cycle: Vec<String> =
                                path[from..].iter().map(|(n, _)| n.to_string()).collect();
                            cycle.push(next.to_string());
                            return Err(ModelError::HierarchyCycle(cycle));
                        }
                        Some(Mark::Done) => {}
                        None => {
                            marks.insert(next.clone(), Mark::Active);
                            let supers = self.direct_super_names(&next);
                            path.push((next, supers));
                        }
                    },
                    None => {
                        let (done, _) = path.pop().expect("non-empty path");
                        marks.insert(done, Mark::Done);
                    }
                }
            }
        }
        Ok(())
    }

    /// Direct supertypes of a library type that are themselves library types.
    /// Classpath types cannot extend library types, so cycles live here.
    fn direct_super_names(&self, name: &QualifiedName) -> Vec<QualifiedName> {
        let Some(decl) = self.library.get(name) else {
            return Vec::new();
        };
        let mut names: Vec<QualifiedName> = decl
            .direct_supertypes()
            .filter_map(|t| t.declared_name())
            .map(|n| n.qualified_name().clone())
            .filter(|n| self.library.contains_key(n))
            .collect();
        names.reverse();
        names
    }
}

impl PartialEq for ApiModel {
    fn eq(&self, other: &Self) -> bool {
        self.filter == other.filter && self.library == other.library
    }
}

impl Eq for ApiModel {}

impl fmt::Debug for ApiModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ApiModel")
            .field("types", &self.library.len())
            .field("api", &self.api.len())
            .field("filter", &self.filter)
            .field("provenance", &self.provenance)
            .finish()
    }
}

fn ordered<'a>(a: &'a str, b: &'a str) -> (&'a str, &'a str) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A type that is neither final nor sealed but directly extends a sealed
/// type is non-sealed. Bytecode has no flag for it, so both backends rely
/// on this derivation instead of the source keyword.
fn derive_non_sealed(decls: &mut BTreeMap<QualifiedName, TypeDecl>, classpath: &Classpath) {
    let sealed: BTreeSet<QualifiedName> = decls
        .values()
        .filter(|d| d.has(Modifier::Sealed))
        .map(|d| d.id.clone())
        .collect();
    for decl in decls.values_mut() {
        decl.modifiers.remove(&Modifier::NonSealed);
        if decl.has(Modifier::Final) || decl.has(Modifier::Sealed) {
            continue;
        }
        let extends_sealed = decl.direct_supertypes().any(|t| {
            t.declared_name().is_some_and(|n| {
                sealed.contains(n.qualified_name())
                    || classpath
                        .lookup(n.qualified_name())
                        .is_some_and(|d| d.has(Modifier::Sealed))
            })
        });
        if extends_sealed {
            decl.modifiers.insert(Modifier::NonSealed);
        }
    }
}


#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;

    #[test]
    fn duplicate_types_name_both_files() {
        let mut a = class("p.A");
        a.location.file = "src/one/A.java".into();
        let mut b = class("p.A");
        b.location.file = "src/two/A.java".into();
        let err =
            ApiModel::assemble(vec![b, a], ApiFilter::default(), Classpath::empty()).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("src/one/A.java") && text.contains("src/two/A.java"), "{text}");
    }

    #[test]
    fn hierarchy_cycle_is_an_error() {
        let a = class("p.A").extending("p.B");
        let b = class("p.B").extending("p.C");
        let c = class("p.C").extending("p.A");
        let err = ApiModel::assemble(vec![a, b, c], ApiFilter::default(), Classpath::empty())
            .unwrap_err();
        match err {
            ModelError::HierarchyCycle(names) => {
                assert_eq!(names.first(), names.last());
                assert_eq!(names.len(), 4);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn export_rules() {
        let mut hidden = class("p.Hidden");
        hidden.visibility = Visibility::PackagePrivate;
        let mut inner = class("p.Hidden.Inner");
        inner.enclosing_type = Some("p.Hidden".into());
        inner.nested = true;
        let final_outer = class("p.Sealed").with_modifier(Modifier::Final);
        let mut prot = class("p.Sealed.Prot");
        prot.visibility = Visibility::Protected;
        prot.enclosing_type = Some("p.Sealed".into());
        let open = class("p.Open");
        let mut prot_open = class("p.Open.Prot");
        prot_open.visibility = Visibility::Protected;
        prot_open.enclosing_type = Some("p.Open".into());

        let m = model(vec![hidden, inner, final_outer, prot, open, prot_open]);
        let api: Vec<&str> = m.types().map(|d| d.id.as_str()).collect();
        assert_eq!(api, ["p.Open", "p.Open.Prot", "p.Sealed"]);
    }

    #[test]
    fn effectively_final() {
        let m = model(vec![]);
        let mut private_ctor = class("p.A");
        private_ctor.constructors[0].visibility = Visibility::Private;
        assert!(m.is_effectively_final(&private_ctor));
        assert!(!m.is_effectively_final(&class("p.B")));
        let mut record = class("p.R");
        record.kind = TypeKind::Record;
        assert!(m.is_effectively_final(&record));
        assert!(!m.is_effectively_final(&interface("p.I")));
        assert!(m.is_effectively_final(&interface("p.S").with_modifier(Modifier::Sealed)));
    }

    #[test]
    fn references_are_unique_per_name() {
        let a = class("p.A").with_method(|o| method(o, "m", vec![TypeRef::declared("p.B")]));
        let b = class("p.B").extending("p.A");
        let m = model(vec![a, b]);
        let from_param = match &m.get(&"p.A".into()).unwrap().methods[0].params[0].ty {
            TypeRef::Declared { name, .. } => name.clone(),
            _ => unreachable!(),
        };
        let table = m.reference(&"p.B".into()).unwrap();
        assert!(from_param.ptr_eq(table));
        let object_a = m.get(&"p.A".into()).unwrap().super_class.clone().unwrap();
        let object_b = m.get(&"p.B".into()).unwrap().super_class.clone().unwrap();
        // p.B's superclass is p.A, so compare Object uses via the table.
        assert!(object_a.declared_name().unwrap().ptr_eq(m.reference(&OBJECT.into()).unwrap()));
        assert!(!object_b.declared_name().unwrap().ptr_eq(table));
    }

    #[test]
    fn resolution_is_memoized() {
        let a = class("p.A");
        let b = class("p.B").extending("p.A");
        let m = model(vec![a, b]);
        let handle = m.reference(&"p.A".into()).unwrap().clone();
        assert!(!handle.is_memoized());
        let first = m.resolve(&handle).unwrap();
        assert!(handle.is_memoized());
        let second = m.resolve(&handle).unwrap();
        assert!(Arc::ptr_eq(&first, &second));
        assert!(m.resolve(m.reference(&"q.Missing".into()).unwrap_or(&TypeName::new("q.Missing"))).is_none());
    }

    #[test]
    fn non_sealed_is_derived() {
        let base = interface("p.Shape").with_modifier(Modifier::Sealed);
        let open = class("p.Square")
            .implementing("p.Shape")
            .with_modifier(Modifier::NonSealed);
        let closed = class("p.Circle").implementing("p.Shape").with_modifier(Modifier::Final);
        let plain = class("p.Other").with_modifier(Modifier::NonSealed);
        let m = model(vec![base, open, closed, plain]);
        assert!(m.get(&"p.Square".into()).unwrap().has(Modifier::NonSealed));
        assert!(!m.get(&"p.Circle".into()).unwrap().has(Modifier::NonSealed));
        assert!(!m.get(&"p.Other".into()).unwrap().has(Modifier::NonSealed));
    }
}
