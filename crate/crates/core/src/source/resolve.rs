//! Binds the names in syntactic summaries and synthesizes implicit members.
//!
//! Simple type names are looked up in this order: type variables in scope,
//! member types of the enclosing declarations (declared or inherited), the
//! top-level types of the same file, single-type imports, the same package,
//! on-demand imports, and `java.lang`. A name that binds nowhere is kept as a
//! dangling reference: qualified by the only on-demand import of an unknown
//! package when there is exactly one such import, else by the current package.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::summary::*;
use crate::model::{
    erasure, Classpath, Executable, ExecutableKind, FieldDecl, Modifier, Modifiers, Param,
    QualifiedName, SourceLocation, TypeDecl, TypeKind, TypeParam, TypeRef, Visibility,
    WildcardBound,
};

const OVERRIDE: &str = "java.lang.Override";
const SUPPRESS_WARNINGS: &str = "java.lang.SuppressWarnings";
const NATIVE: &str = "java.lang.annotation.Native";
const RETENTION: &str = "java.lang.annotation.Retention";

/// A type declared in one of the compilation units.
struct Entry<'a> {
    unit: usize,
    raw: &'a RawType,
    id: String,
    enclosing: Option<usize>,
    /// Interface members are implicitly public and static.
    in_interface: bool,
}

impl Entry<'_> {
    fn is_static(&self) -> bool {
        self.enclosing.is_some()
            && (self.raw.mods.has(flags::STATIC) || self.raw.kind != TypeKind::Class || self.in_interface)
    }
}

#[derive(Clone)]
enum Target {
    Lib(usize),
    Cp(Arc<TypeDecl>),
}

enum HeaderState {
    Pending,
    InProgress,
    Done(Vec<TypeRef>),
}

/// Scope for binding names inside (or in the header of) a declaration.
#[derive(Clone, Copy)]
struct Ctx<'s> {
    unit: usize,
    /// Innermost type whose members are in scope.
    entry: Option<usize>,
    /// When resolving the header of `entry`, its inherited members are not
    /// yet known and only its declared member types are visible.
    header: bool,
    type_vars: &'s [&'s str],
}

pub struct Resolver<'a> {
    units: &'a [Arc<CompilationUnitSummary>],
    classpath: &'a Classpath,
    entries: Vec<Entry<'a>>,
    by_id: HashMap<String, usize>,
    /// (package, simple name) of top-level library types.
    top_level: HashMap<(&'a str, &'a str), usize>,
    packages: HashSet<&'a str>,
    headers: RefCell<Vec<HeaderState>>,
    source_retention: HashSet<String>,
}

impl<'a> Resolver<'a> {
    pub fn new(units: &'a [Arc<CompilationUnitSummary>], classpath: &'a Classpath) -> Self {
        let mut r = Resolver {
            units,
            classpath,
            entries: Vec::new(),
            by_id: HashMap::new(),
            top_level: HashMap::new(),
            packages: HashSet::new(),
            headers: RefCell::new(Vec::new()),
            source_retention: HashSet::new(),
        };
        for (ui, unit) in units.iter().enumerate() {
            r.packages.insert(unit.package.as_str());
            for raw in &unit.types {
                let id = if unit.package.is_empty() {
                    raw.name.clone()
                } else {
                    format!("{}.{}", unit.package, raw.name)
                };
                let index = r.add(ui, raw, id, None, false);
                r.top_level
                    .entry((unit.package.as_str(), raw.name.as_str()))
                    .or_insert(index);
            }
        }
        r.headers = RefCell::new(r.entries.iter().map(|_| HeaderState::Pending).collect());
        let retention: Vec<String> = (0..r.entries.len())
            .filter(|&i| r.entries[i].raw.kind == TypeKind::Annotation)
            .filter(|&i| {
                let ctx = r.member_ctx(i, &[]);
                r.entries[i].raw.mods.annotations.iter().any(|a| {
                    r.annotation_name(&ctx, &a.name) == RETENTION
                        && a.args.as_deref().is_some_and(|t| t.contains("SOURCE"))
                })
            })
            .map(|i| r.entries[i].id.clone())
            .collect();
        r.source_retention.extend(retention);
        r
    }

    fn add(
        &mut self,
        unit: usize,
        raw: &'a RawType,
        id: String,
        enclosing: Option<usize>,
        in_interface: bool,
    ) -> usize {
        let index = self.entries.len();
        self.by_id.entry(id.clone()).or_insert(index);
        self.entries.push(Entry {
            unit,
            raw,
            id: id.clone(),
            enclosing,
            in_interface,
        });
        for nested in &raw.types {
            let nested_id = format!("{id}.{}", nested.name);
            self.add(unit, nested, nested_id, Some(index), raw.kind.is_interface_like());
        }
        index
    }

    fn member_ctx<'s>(&self, entry: usize, type_vars: &'s [&'s str]) -> Ctx<'s> {
        Ctx {
            unit: self.entries[entry].unit,
            entry: Some(entry),
            header: false,
            type_vars,
        }
    }

    fn lookup_id(&self, id: &str) -> Option<Target> {
        if let Some(&i) = self.by_id.get(id) {
            return Some(Target::Lib(i));
        }
        self.classpath.lookup_str(id).map(Target::Cp)
    }

    fn target_id(&self, t: &Target) -> String {
        match t {
            Target::Lib(i) => self.entries[*i].id.clone(),
            Target::Cp(d) => d.id.as_str().to_owned(),
        }
    }

    /// Resolved direct supertypes of a library type (memoized).
    fn supertypes(&self, entry: usize) -> Vec<TypeRef> {
        {
            let headers = self.headers.borrow();
            match &headers[entry] {
                HeaderState::Done(s) => return s.clone(),
                HeaderState::InProgress => return Vec::new(),
                HeaderState::Pending => {}
            }
        }
        self.headers.borrow_mut()[entry] = HeaderState::InProgress;
        let (super_class, interfaces) = self.header(entry);
        let all: Vec<TypeRef> = super_class.into_iter().chain(interfaces).collect();
        self.headers.borrow_mut()[entry] = HeaderState::Done(all.clone());
        all
    }

    fn header(&self, entry: usize) -> (Option<TypeRef>, Vec<TypeRef>) {
        let e = &self.entries[entry];
        let raw = e.raw;
        let vars = self.type_var_scope(entry);
        let ctx = Ctx {
            unit: e.unit,
            entry: Some(entry),
            header: true,
            type_vars: &vars,
        };
        let resolve_all = |list: &[TypeExpr]| -> Vec<TypeRef> {
            list.iter().map(|t| self.type_ref(&ctx, t)).collect()
        };
        match raw.kind {
            TypeKind::Class => {
                let sc = raw
                    .extends
                    .first()
                    .map(|t| self.type_ref(&ctx, t))
                    .unwrap_or_else(TypeRef::object);
                (Some(sc), resolve_all(&raw.implements))
            }
            TypeKind::Interface => (None, resolve_all(&raw.extends)),
            TypeKind::Enum => (
                Some(TypeRef::parameterized(
                    "java.lang.Enum",
                    vec![TypeRef::declared(e.id.as_str())],
                )),
                resolve_all(&raw.implements),
            ),
            TypeKind::Record => (
                Some(TypeRef::declared("java.lang.Record")),
                resolve_all(&raw.implements),
            ),
            TypeKind::Annotation => (None, vec![TypeRef::declared("java.lang.annotation.Annotation")]),
        }
    }

    /// Type variables visible in the body of `entry`, innermost first.
    fn type_var_scope(&self, entry: usize) -> Vec<&'a str> {
        let mut vars = Vec::new();
        let mut current = Some(entry);
        while let Some(i) = current {
            let e = &self.entries[i];
            vars.extend(e.raw.type_params.iter().map(|p| p.name.as_str()));
            if e.is_static() {
                break;
            }
            current = e.enclosing;
        }
        vars
    }

    fn declared_member_type(&self, target: &Target, name: &str) -> Option<Target> {
        match target {
            Target::Lib(i) => {
                let id = format!("{}.{name}", self.entries[*i].id);
                self.by_id.get(&id).map(|&j| Target::Lib(j))
            }
            Target::Cp(d) => self
                .classpath
                .lookup_str(&format!("{}.{name}", d.id))
                .map(Target::Cp),
        }
    }

    /// Declared or inherited member type `name` of `target`.
    fn member_type(&self, target: &Target, name: &str) -> Option<Target> {
        let mut seen = HashSet::new();
        let mut queue = vec![target.clone()];
        while let Some(t) = queue.pop() {
            if !seen.insert(self.target_id(&t)) {
                continue;
            }
            if let Some(found) = self.declared_member_type(&t, name) {
                return Some(found);
            }
            let supers = match &t {
                Target::Lib(i) => self.supertypes(*i),
                Target::Cp(d) => d.direct_supertypes().cloned().collect(),
            };
            for s in supers.iter().rev() {
                if let Some(n) = s.declared_name() {
                    if let Some(st) = self.lookup_id(n.as_str()) {
                        queue.push(st);
                    }
                }
            }
        }
        None
    }

    fn simple_type(&self, ctx: &Ctx<'_>, name: &str) -> Option<String> {
        // Member types of the enclosing declarations.
        let mut current = ctx.entry;
        let mut first = true;
        while let Some(i) = current {
            let t = Target::Lib(i);
            let found = if first && ctx.header {
                self.declared_member_type(&t, name)
            } else {
                self.member_type(&t, name)
            };
            if let Some(found) = found {
                return Some(self.target_id(&found));
            }
            first = false;
            current = self.entries[i].enclosing;
        }
        let unit = &self.units[ctx.unit];
        if unit.types.iter().any(|t| t.name == name) {
            return Some(qualify(&unit.package, name));
        }
        for import in unit.imports.iter().filter(|i| !i.on_demand) {
            if import.name.rsplit('.').next() != Some(name) {
                continue;
            }
            if !import.is_static {
                return Some(
                    self.qualified_type(&import.name)
                        .unwrap_or_else(|| import.name.clone()),
                );
            }
            let owner = &import.name[..import.name.len() - name.len() - 1];
            if let Some(t) = self.qualified_type_target(owner) {
                if let Some(m) = self.member_type(&t, name) {
                    return Some(self.target_id(&m));
                }
            }
        }
        let same_package = qualify(&unit.package, name);
        if let Some(&i) = self.top_level.get(&(unit.package.as_str(), name)) {
            return Some(self.entries[i].id.clone());
        }
        if self.classpath.contains(&QualifiedName::new(same_package.as_str())) {
            return Some(same_package);
        }
        for import in unit.imports.iter().filter(|i| i.on_demand) {
            if !import.is_static {
                let candidate = format!("{}.{name}", import.name);
                if self.lookup_id(&candidate).is_some() {
                    return Some(candidate);
                }
            }
            // `import p.Outer.*` and `import static p.Outer.*` reach member types.
            if let Some(t) = self.qualified_type_target(&import.name) {
                if let Some(m) = self.member_type(&t, name) {
                    return Some(self.target_id(&m));
                }
            }
        }
        let lang = format!("java.lang.{name}");
        if self.lookup_id(&lang).is_some() {
            return Some(lang);
        }
        None
    }

    fn fallback(&self, ctx: &Ctx<'_>, name: &str) -> String {
        let unit = &self.units[ctx.unit];
        let unknown: Vec<&Import> = unit
            .imports
            .iter()
            .filter(|i| i.on_demand && !i.is_static)
            .filter(|i| !self.packages.contains(i.name.as_str()) && !self.classpath.has_package(&i.name))
            .collect();
        if let [only] = unknown.as_slice() {
            format!("{}.{name}", only.name)
        } else {
            qualify(&unit.package, name)
        }
    }

    /// Resolves a fully qualified (package-prefixed) type name.
    fn qualified_type_target(&self, name: &str) -> Option<Target> {
        if let Some(t) = self.lookup_id(name) {
            return Some(t);
        }
        // `p.Outer.Inner` where `Inner` is inherited by `Outer`.
        let segments: Vec<&str> = name.split('.').collect();
        for split in 1..segments.len() {
            let head = segments[..split].join(".");
            if let Some(mut t) = self.lookup_id(&head) {
                for seg in &segments[split..] {
                    t = self.member_type(&t, seg)?;
                }
                return Some(t);
            }
        }
        None
    }

    fn qualified_type(&self, name: &str) -> Option<String> {
        self.qualified_type_target(name).map(|t| self.target_id(&t))
    }

    fn type_name(&self, ctx: &Ctx<'_>, segments: &[String]) -> String {
        let (first, rest) = segments.split_first().expect("non-empty name");
        if let Some(id) = self.simple_type(ctx, first) {
            if rest.is_empty() {
                return id;
            }
            let mut target = self.lookup_id(&id);
            let mut current = id;
            for (k, seg) in rest.iter().enumerate() {
                match target.as_ref().and_then(|t| self.member_type(t, seg)) {
                    Some(t) => {
                        current = self.target_id(&t);
                        target = Some(t);
                    }
                    None => {
                        let mut out = current;
                        for s in &rest[k..] {
                            out.push('.');
                            out.push_str(s);
                        }
                        return out;
                    }
                }
            }
            return current;
        }
        if rest.is_empty() {
            return self.fallback(ctx, first);
        }
        let joined = segments.join(".");
        self.qualified_type(&joined).unwrap_or(joined)
    }

    fn annotation_name(&self, ctx: &Ctx<'_>, written: &str) -> String {
        let segments: Vec<String> = written.split('.').map(str::to_owned).collect();
        self.type_name(ctx, &segments)
    }

    fn type_ref(&self, ctx: &Ctx<'_>, expr: &TypeExpr) -> TypeRef {
        match expr {
            TypeExpr::Primitive(p) => TypeRef::Primitive(*p),
            TypeExpr::Named { segments, args } => {
                if segments.len() == 1 && args.is_empty() && ctx.type_vars.contains(&segments[0].as_str()) {
                    return TypeRef::TypeVar(segments[0].clone());
                }
                let name = self.type_name(ctx, segments);
                let args = args.iter().map(|a| self.type_ref(ctx, a)).collect();
                TypeRef::parameterized(name, args)
            }
            TypeExpr::Array { component, dims } => TypeRef::array_of(self.type_ref(ctx, component), *dims),
            TypeExpr::Wildcard(None) => TypeRef::Wildcard(None),
            TypeExpr::Wildcard(Some((extends, bound))) => {
                let b = Box::new(self.type_ref(ctx, bound));
                TypeRef::Wildcard(Some(if *extends {
                    WildcardBound::Extends(b)
                } else {
                    WildcardBound::Super(b)
                }))
            }
        }
    }

    fn type_params(&self, ctx: &Ctx<'_>, params: &[RawTypeParam]) -> Vec<TypeParam> {
        params
            .iter()
            .map(|p| {
                let mut bounds: Vec<TypeRef> = p.bounds.iter().map(|b| self.type_ref(ctx, b)).collect();
                if bounds.len() == 1 && bounds[0].is_object() {
                    bounds.clear();
                }
                TypeParam::new(p.name.clone(), bounds)
            })
            .collect()
    }

    fn annotations(&self, ctx: &Ctx<'_>, written: &[Annotation]) -> Vec<QualifiedName> {
        let mut out: Vec<QualifiedName> = written
            .iter()
            .map(|a| self.annotation_name(ctx, &a.name))
            .filter(|n| {
                !matches!(n.as_str(), OVERRIDE | SUPPRESS_WARNINGS | NATIVE)
                    && !self.source_retention.contains(n)
            })
            .map(QualifiedName::new)
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Builds declarations for every type in every unit.
    pub fn declarations(&self) -> Vec<TypeDecl> {
        (0..self.entries.len()).map(|i| self.declaration(i)).collect()
    }

    fn declaration(&self, index: usize) -> TypeDecl {
        let e = &self.entries[index];
        let raw = e.raw;
        let unit = &self.units[e.unit];
        let vars = self.type_var_scope(index);
        let ctx = self.member_ctx(index, &vars);
        let id = QualifiedName::new(e.id.as_str());
        let location = |line: u32| SourceLocation::new(unit.file.as_str(), Some(line));
        let nested = e.enclosing.is_some();

        let visibility = if e.in_interface && !raw.mods.has(flags::PRIVATE) {
            Visibility::Public
        } else {
            visibility_of(&raw.mods)
        };
        let mut modifiers = Modifiers::new();
        if e.is_static() {
            modifiers.insert(Modifier::Static);
        }
        if raw.kind == TypeKind::Class && raw.mods.has(flags::ABSTRACT) {
            modifiers.insert(Modifier::Abstract);
        }
        match raw.kind {
            TypeKind::Record => {
                modifiers.insert(Modifier::Final);
            }
            TypeKind::Enum => {
                modifiers.insert(if raw.constants.iter().any(|c| c.has_body) {
                    Modifier::Sealed
                } else {
                    Modifier::Final
                });
            }
            _ => {
                if raw.mods.has(flags::FINAL) {
                    modifiers.insert(Modifier::Final);
                } else if raw.mods.has(flags::SEALED) {
                    modifiers.insert(Modifier::Sealed);
                }
            }
        }

        let (super_class, interfaces) = {
            let all = self.supertypes(index);
            if raw.kind.is_interface_like() {
                (None, all)
            } else {
                let mut it = all.into_iter();
                (it.next(), it.collect())
            }
        };
        let type_params = self.type_params(&ctx, &raw.type_params);

        // Type parameters of this type and of enclosing instances, for erasure.
        let mut scope_params: Vec<Vec<TypeParam>> = Vec::new();
        let mut current = Some(index);
        while let Some(i) = current {
            let ei = &self.entries[i];
            let vars_i = self.type_var_scope(i);
            let ctx_i = self.member_ctx(i, &vars_i);
            scope_params.push(self.type_params(&ctx_i, &ei.raw.type_params));
            if ei.is_static() {
                break;
            }
            current = ei.enclosing;
        }
        let owner_scopes: Vec<&[TypeParam]> = scope_params.iter().map(Vec::as_slice).collect();

        let mut decl = TypeDecl {
            id: id.clone(),
            package: unit.package.clone(),
            kind: raw.kind,
            visibility,
            modifiers,
            annotations: self.annotations(&ctx, &raw.mods.annotations),
            type_params,
            super_class,
            interfaces,
            fields: Vec::new(),
            methods: Vec::new(),
            constructors: Vec::new(),
            enclosing_type: e.enclosing.map(|p| QualifiedName::new(self.entries[p].id.as_str())),
            nested,
            location: location(raw.line),
        };
        let interface = raw.kind.is_interface_like();

        for c in &raw.constants {
            decl.fields.push(FieldDecl {
                id: id.member(&c.name),
                name: c.name.clone(),
                visibility: Visibility::Public,
                modifiers: [Modifier::Static, Modifier::Final].into_iter().collect(),
                annotations: self.annotations(&ctx, &c.annotations),
                ty: TypeRef::declared(id.as_str()),
                location: location(c.line),
            });
        }
        for f in &raw.fields {
            let vis = if interface { Visibility::Public } else { visibility_of(&f.mods) };
            if !vis.is_visible_outside_package() {
                continue;
            }
            let mut modifiers = Modifiers::new();
            if interface {
                modifiers.extend([Modifier::Static, Modifier::Final]);
            }
            for (flag, m) in [
                (flags::STATIC, Modifier::Static),
                (flags::FINAL, Modifier::Final),
                (flags::TRANSIENT, Modifier::Transient),
                (flags::VOLATILE, Modifier::Volatile),
            ] {
                if f.mods.has(flag) {
                    modifiers.insert(m);
                }
            }
            decl.fields.push(FieldDecl {
                id: id.member(&f.name),
                name: f.name.clone(),
                visibility: vis,
                modifiers,
                annotations: self.annotations(&ctx, &f.mods.annotations),
                ty: self.type_ref(&ctx, &f.ty),
                location: location(f.line),
            });
        }

        let mut has_constructor = false;
        for m in &raw.methods {
            if m.constructor {
                has_constructor = true;
            }
            let vis = if interface && !m.mods.has(flags::PRIVATE) {
                Visibility::Public
            } else if raw.kind == TypeKind::Enum && m.constructor {
                Visibility::Private
            } else {
                visibility_of(&m.mods)
            };
            if !vis.is_visible_outside_package() {
                continue;
            }
            let mut method_vars: Vec<&str> = m.type_params.iter().map(|p| p.name.as_str()).collect();
            method_vars.extend_from_slice(&vars);
            let mctx = Ctx {
                type_vars: &method_vars,
                ..ctx
            };
            let mut modifiers = Modifiers::new();
            for (flag, modifier) in [
                (flags::STATIC, Modifier::Static),
                (flags::FINAL, Modifier::Final),
                (flags::SYNCHRONIZED, Modifier::Synchronized),
                (flags::NATIVE, Modifier::Native),
                (flags::ABSTRACT, Modifier::Abstract),
            ] {
                if m.mods.has(flag) {
                    modifiers.insert(modifier);
                }
            }
            if interface && !m.constructor {
                if m.mods.has(flags::DEFAULT) {
                    modifiers.insert(Modifier::Default);
                } else if !m.mods.has(flags::STATIC) && !m.has_body {
                    modifiers.insert(Modifier::Abstract);
                }
            }
            let params: Vec<Param> = m
                .params
                .iter()
                .map(|p| Param {
                    name: p.name.clone(),
                    ty: self.type_ref(&mctx, &p.ty),
                    varargs: p.varargs,
                })
                .collect();
            let exec = Executable {
                id: id.clone(),
                kind: if m.constructor {
                    ExecutableKind::Constructor
                } else {
                    ExecutableKind::Method
                },
                name: m.name.clone(),
                visibility: vis,
                modifiers,
                annotations: self.annotations(&mctx, &m.mods.annotations),
                type_params: self.type_params(&mctx, &m.type_params),
                params,
                return_type: m.return_type.as_ref().map(|t| self.type_ref(&mctx, t)),
                thrown: m.throws.iter().map(|t| self.type_ref(&mctx, t)).collect(),
                location: location(m.line),
            };
            push_executable(&mut decl, exec, &owner_scopes);
        }

        // Implicit members.
        let line = raw.line;
        let implicit = |name: &str, kind, vis, modifiers: &[Modifier], params: Vec<Param>, ret| Executable {
            id: id.clone(),
            kind,
            name: name.to_owned(),
            visibility: vis,
            modifiers: modifiers.iter().copied().collect(),
            annotations: Vec::new(),
            type_params: Vec::new(),
            params,
            return_type: ret,
            thrown: Vec::new(),
            location: location(line),
        };
        let param = |name: &str, ty: TypeRef| Param {
            name: name.to_owned(),
            ty,
            varargs: false,
        };
        match raw.kind {
            TypeKind::Class if !has_constructor && visibility.is_visible_outside_package() => {
                let ctor = implicit(&raw.name, ExecutableKind::Constructor, visibility, &[], vec![], None);
                push_executable(&mut decl, ctor, &owner_scopes);
            }
            TypeKind::Enum => {
                let values = implicit(
                    "values",
                    ExecutableKind::Method,
                    Visibility::Public,
                    &[Modifier::Static],
                    vec![],
                    Some(TypeRef::array_of(TypeRef::declared(id.as_str()), 1)),
                );
                let value_of = implicit(
                    "valueOf",
                    ExecutableKind::Method,
                    Visibility::Public,
                    &[Modifier::Static],
                    vec![param("name", TypeRef::declared("java.lang.String"))],
                    Some(TypeRef::declared(id.as_str())),
                );
                push_implicit(&mut decl, values, &owner_scopes);
                push_implicit(&mut decl, value_of, &owner_scopes);
            }
            TypeKind::Record => {
                let components: Vec<Param> = raw
                    .record_components
                    .iter()
                    .map(|p| Param {
                        name: p.name.clone(),
                        ty: self.type_ref(&ctx, &p.ty),
                        varargs: p.varargs,
                    })
                    .collect();
                if visibility.is_visible_outside_package() {
                    let canonical = implicit(
                        &raw.name,
                        ExecutableKind::Constructor,
                        visibility,
                        &[],
                        components.clone(),
                        None,
                    );
                    push_implicit(&mut decl, canonical, &owner_scopes);
                }
                for c in &components {
                    let accessor = implicit(
                        &c.name,
                        ExecutableKind::Method,
                        Visibility::Public,
                        &[],
                        vec![],
                        Some(c.ty.clone()),
                    );
                    push_implicit(&mut decl, accessor, &owner_scopes);
                }
                let object_methods = [
                    ("equals", vec![param("arg0", TypeRef::object())], TypeRef::Primitive(crate::model::Primitive::Boolean)),
                    ("hashCode", vec![], TypeRef::Primitive(crate::model::Primitive::Int)),
                    ("toString", vec![], TypeRef::declared("java.lang.String")),
                ];
                for (name, params, ret) in object_methods {
                    let m = implicit(
                        name,
                        ExecutableKind::Method,
                        Visibility::Public,
                        &[Modifier::Final],
                        params,
                        Some(ret),
                    );
                    push_implicit(&mut decl, m, &owner_scopes);
                }
            }
            _ => {}
        }
        decl.fields.sort_by(|a, b| a.id.cmp(&b.id));
        decl.methods.sort_by(|a, b| a.id.cmp(&b.id));
        decl.constructors.sort_by(|a, b| a.id.cmp(&b.id));
        decl
    }
}

fn qualify(package: &str, name: &str) -> String {
    if package.is_empty() {
        name.to_owned()
    } else {
        format!("{package}.{name}")
    }
}

fn visibility_of(mods: &Mods) -> Visibility {
    if mods.has(flags::PUBLIC) {
        Visibility::Public
    } else if mods.has(flags::PROTECTED) {
        Visibility::Protected
    } else if mods.has(flags::PRIVATE) {
        Visibility::Private
    } else {
        Visibility::PackagePrivate
    }
}

fn with_id(mut exec: Executable, owner_scopes: &[&[TypeParam]]) -> Executable {
    exec.id = erasure::erased_signature(&exec.id, &exec, owner_scopes);
    exec
}

fn push_executable(decl: &mut TypeDecl, exec: Executable, owner_scopes: &[&[TypeParam]]) {
    let exec = with_id(exec, owner_scopes);
    if exec.is_constructor() {
        decl.constructors.push(exec);
    } else {
        decl.methods.push(exec);
    }
}

/// Adds an implicit member unless one with the same identity was declared.
fn push_implicit(decl: &mut TypeDecl, exec: Executable, owner_scopes: &[&[TypeParam]]) {
    let exec = with_id(exec, owner_scopes);
    let list = if exec.is_constructor() {
        &mut decl.constructors
    } else {
        &mut decl.methods
    };
    if !list.iter().any(|e| e.id == exec.id) {
        list.push(exec);
    }
}
