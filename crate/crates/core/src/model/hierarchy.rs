//! Derived hierarchy properties: supertypes, subtyping, inherited members.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use super::decl::{Executable, FieldDecl, Modifiers, SourceLocation, TypeDecl, TypeParam, Visibility};
use super::erasure;
use super::name::QualifiedName;
use super::typeref::{TypeRef, OBJECT};
use super::ApiModel;

const THROWABLE: &str = "java.lang.Throwable";
const RUNTIME_EXCEPTION: &str = "java.lang.RuntimeException";
const ERROR: &str = "java.lang.Error";

/// One entry of a transitive supertype closure.
#[derive(Clone, Debug)]
pub struct SuperType {
    pub name: QualifiedName,
    /// `None` for dangling references.
    pub decl: Option<Arc<TypeDecl>>,
    /// The supertype as seen from the subtype: type arguments are expressed
    /// in terms of the subtype's own type variables.
    pub ty: TypeRef,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionKind {
    Checked,
    Unchecked,
    NotThrowable,
    /// The hierarchy reaches a dangling type before any throwable root.
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MemberKind {
    Method,
    Constructor,
    Field,
}

/// A member as seen through some type: possibly inherited from a supertype.
#[derive(Clone, Debug)]
pub struct Member {
    pub owner: Arc<TypeDecl>,
    pub kind: MemberKind,
    index: usize,
    /// Identity suffix in the viewing type's context: `name(erased,params)`
    /// for executables, the simple name for fields.
    pub key: String,
}

impl Member {
    pub fn executable(&self) -> Option<&Executable> {
        match self.kind {
            MemberKind::Method => Some(&self.owner.methods[self.index]),
            MemberKind::Constructor => Some(&self.owner.constructors[self.index]),
            MemberKind::Field => None,
        }
    }

    pub fn field(&self) -> Option<&FieldDecl> {
        match self.kind {
            MemberKind::Field => Some(&self.owner.fields[self.index]),
            _ => None,
        }
    }

    pub fn declared_id(&self) -> &QualifiedName {
        match self.kind {
            MemberKind::Field => &self.owner.fields[self.index].id,
            _ => &self.executable().expect("executable").id,
        }
    }

    pub fn visibility(&self) -> Visibility {
        match (self.executable(), self.field()) {
            (Some(e), _) => e.visibility,
            (_, Some(f)) => f.visibility,
            _ => unreachable!(),
        }
    }

    pub fn modifiers(&self) -> &Modifiers {
        match (self.executable(), self.field()) {
            (Some(e), _) => &e.modifiers,
            (_, Some(f)) => &f.modifiers,
            _ => unreachable!(),
        }
    }

    pub fn annotations(&self) -> &[QualifiedName] {
        match (self.executable(), self.field()) {
            (Some(e), _) => &e.annotations,
            (_, Some(f)) => &f.annotations,
            _ => unreachable!(),
        }
    }

    pub fn location(&self) -> &SourceLocation {
        match (self.executable(), self.field()) {
            (Some(e), _) => &e.location,
            (_, Some(f)) => &f.location,
            _ => unreachable!(),
        }
    }

    /// Identity of this member when viewed through `context`.
    pub fn id(&self, context: &TypeDecl) -> QualifiedName {
        context.id.member(&self.key)
    }

    pub fn is_declared_in(&self, decl: &TypeDecl) -> bool {
        self.owner.id == decl.id
    }
}

/// Members of a type, grouped by kind, each sorted by key.
#[derive(Clone, Debug, Default)]
pub struct Members {
    pub methods: Vec<Member>,
    pub constructors: Vec<Member>,
    pub fields: Vec<Member>,
}

impl Members {
    pub fn all(&self) -> impl Iterator<Item = &Member> {
        self.constructors
            .iter()
            .chain(self.methods.iter())
            .chain(self.fields.iter())
    }

    pub fn len(&self) -> usize {
        self.methods.len() + self.constructors.len() + self.fields.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn find(&self, kind: MemberKind, key: &str) -> Option<&Member> {
        let list = match kind {
            MemberKind::Method => &self.methods,
            MemberKind::Constructor => &self.constructors,
            MemberKind::Field => &self.fields,
        };
        list.binary_search_by(|m| m.key.as_str().cmp(key))
            .ok()
            .map(|i| &list[i])
    }
}

type Subst = HashMap<String, TypeRef>;

/// Maps `params` to `args`; raw uses map each variable to its erased bound.
fn bind(params: &[TypeParam], args: &[TypeRef]) -> Subst {
    if args.len() == params.len() {
        params
            .iter()
            .zip(args)
            .map(|(p, a)| (p.name.clone(), a.clone()))
            .collect()
    } else {
        params
            .iter()
            .map(|p| {
                let erased = erasure::erase(&TypeRef::TypeVar(p.name.clone()), &[params]);
                (p.name.clone(), TypeRef::declared(erased))
            })
            .collect()
    }
}

fn apply(ty: &TypeRef, subst: &Subst, shadowed: &[TypeParam]) -> TypeRef {
    if subst.is_empty() {
        return ty.clone();
    }
    ty.substitute(&|v| {
        if shadowed.iter().any(|p| p.name == v) {
            None
        } else {
            subst.get(v).cloned()
        }
    })
}

impl ApiModel {
    /// Transitive supertypes in breadth-first, declaration order, without
    /// `decl` itself. The object root comes last and only for classes (or
    /// when some interface path names it explicitly).
    pub fn all_supertypes(&self, decl: &TypeDecl) -> Vec<SuperType> {
        let mut out = Vec::new();
        let mut seen: HashSet<QualifiedName> = HashSet::new();
        seen.insert(decl.id.clone());
        let mut queue: VecDeque<TypeRef> = decl.direct_supertypes().cloned().collect();
        let mut object: Option<TypeRef> = None;
        while let Some(ty) = queue.pop_front() {
            let Some(handle) = ty.declared_name() else {
                continue;
            };
            let name = handle.qualified_name();
            if name == OBJECT {
                object.get_or_insert(ty);
                continue;
            }
            if !seen.insert(name.clone()) {
                continue;
            }
            let resolved = self.resolve(handle);
            if let Some(sup) = &resolved {
                let subst = bind(&sup.type_params, ty.type_args());
                queue.extend(sup.direct_supertypes().map(|s| apply(s, &subst, &[])));
            }
            out.push(SuperType {
                name: name.clone(),
                decl: resolved,
                ty,
            });
        }
        if decl.id != OBJECT && (object.is_some() || decl.is_class()) {
            let ty = object.unwrap_or_else(TypeRef::object);
            let decl = self.resolve_ref(&ty);
            out.push(SuperType {
                name: QualifiedName::new(OBJECT),
                decl,
                ty,
            });
        }
        out
    }

    /// `a ⊑ b` on type names: equal, or `b` is a transitive supertype of `a`.
    /// Dangling `a` is a subtype only of itself (and of the object root).
    pub fn is_subtype_name(&self, a: &QualifiedName, b: &QualifiedName) -> bool {
        if a == b || b == OBJECT {
            return true;
        }
        match self.lookup(a) {
            Some(decl) => self.all_supertypes(&decl).iter().any(|s| &s.name == b),
            None => false,
        }
    }

    /// `a ⊑ b` on references; type arguments are ignored.
    pub fn is_subtype(&self, a: &TypeRef, b: &TypeRef) -> bool {
        match (a, b) {
            (TypeRef::Declared { name: x, .. }, TypeRef::Declared { name: y, .. }) => {
                self.is_subtype_name(x.qualified_name(), y.qualified_name())
            }
            (TypeRef::Array { .. }, TypeRef::Declared { name, .. }) => matches!(
                name.as_str(),
                OBJECT | "java.lang.Cloneable" | "java.io.Serializable"
            ),
            (
                TypeRef::Array {
                    component: ca,
                    dims: da,
                },
                TypeRef::Array {
                    component: cb,
                    dims: db,
                },
            ) => {
                if da == db {
                    match (&**ca, &**cb) {
                        (TypeRef::Primitive(p), TypeRef::Primitive(q)) => p == q,
                        _ => self.is_subtype(ca, cb),
                    }
                } else if da > db {
                    // T[][] ⊑ Object[]
                    cb.is_object()
                } else {
                    false
                }
            }
            (TypeRef::TypeVar(_), TypeRef::Declared { name, .. }) if name.as_str() == OBJECT => {
                true
            }
            _ => a == b,
        }
    }

    pub fn exception_kind(&self, name: &QualifiedName) -> ExceptionKind {
        if name == RUNTIME_EXCEPTION || name == ERROR {
            return ExceptionKind::Unchecked;
        }
        if name == THROWABLE {
            return ExceptionKind::Checked;
        }
        let Some(decl) = self.lookup(name) else {
            return ExceptionKind::Unknown;
        };
        let supers = self.all_supertypes(&decl);
        if supers.iter().any(|s| s.name == RUNTIME_EXCEPTION || s.name == ERROR) {
            ExceptionKind::Unchecked
        } else if supers.iter().any(|s| s.name == THROWABLE) {
            ExceptionKind::Checked
        } else if supers.iter().any(|s| s.decl.is_none()) {
            ExceptionKind::Unknown
        } else {
            ExceptionKind::NotThrowable
        }
    }

    pub fn is_checked_exception(&self, decl: &TypeDecl) -> bool {
        self.exception_kind(&decl.id) == ExceptionKind::Checked
    }

    /// Type parameters visible inside `decl`: its own, then those of
    /// enclosing types as long as the nesting is non-static.
    pub fn type_scope(&self, decl: &TypeDecl) -> Vec<TypeParam> {
        let mut params = decl.type_params.clone();
        let mut inner = decl.nested && !decl.is_static();
        let mut outer = decl.enclosing_type.clone();
        while inner {
            let Some(enclosing) = outer.and_then(|n| self.lookup(&n)) else {
                break;
            };
            params.extend(enclosing.type_params.iter().cloned());
            inner = enclosing.nested && !enclosing.is_static();
            outer = enclosing.enclosing_type.clone();
        }
        params
    }

    /// Declared and inherited methods as seen through `decl`, after
    /// overriding and hiding. Class methods win over interface methods;
    /// among interfaces the most specific declaration wins. Static interface
    /// methods are not inherited.
    pub fn all_methods(&self, decl: &Arc<TypeDecl>) -> Vec<Member> {
        let scope = self.type_scope(decl);
        let supers = self.all_supertypes(decl);
        let mut selected: Vec<Member> = Vec::new();
        let mut by_key: HashMap<String, usize> = HashMap::new();

        for (index, m) in decl.methods.iter().enumerate() {
            let key = m.signature_suffix().to_owned();
            by_key.insert(key.clone(), selected.len());
            selected.push(Member {
                owner: decl.clone(),
                kind: MemberKind::Method,
                index,
                key,
            });
        }

        let classes = supers.iter().filter(|s| s.decl.as_ref().is_some_and(|d| d.is_class()));
        let interfaces = supers.iter().filter(|s| s.decl.as_ref().is_some_and(|d| d.is_interface()));
        for sup in classes.chain(interfaces) {
            let owner = sup.decl.as_ref().expect("filtered to resolved");
            let subst = bind(&owner.type_params, sup.ty.type_args());
            for (index, m) in owner.methods.iter().enumerate() {
                if owner.is_interface() && m.is_static() {
                    continue;
                }
                if m.visibility == Visibility::Private {
                    continue;
                }
                let key = if subst.is_empty() {
                    m.signature_suffix().to_owned()
                } else {
                    let params: Vec<_> = m
                        .params
                        .iter()
                        .map(|p| super::decl::Param {
                            ty: apply(&p.ty, &subst, &m.type_params),
                            ..p.clone()
                        })
                        .collect();
                    erasure::erased_suffix(&m.name, &params, &[&m.type_params, &scope])
                };
                let candidate = Member {
                    owner: owner.clone(),
                    kind: MemberKind::Method,
                    index,
                    key,
                };
                match by_key.get(&candidate.key) {
                    None => {
                        by_key.insert(candidate.key.clone(), selected.len());
                        selected.push(candidate);
                    }
                    Some(&slot) => {
                        let existing = &selected[slot];
                        let more_specific = existing.owner.is_interface()
                            && owner.is_interface()
                            && self.is_subtype_name(&owner.id, &existing.owner.id);
                        if more_specific {
                            selected[slot] = candidate;
                        }
                    }
                }
            }
        }
        selected.sort_by(|a, b| a.key.cmp(&b.key));
        selected
    }

    /// Declared and inherited fields as seen through `decl`; a field hides
    /// any same-named field further up the hierarchy.
    pub fn all_fields(&self, decl: &Arc<TypeDecl>) -> Vec<Member> {
        let supers = self.all_supertypes(decl);
        let mut seen: HashSet<String> = HashSet::new();
        let mut out = Vec::new();
        let mut push = |owner: &Arc<TypeDecl>, out: &mut Vec<Member>| {
            for (index, f) in owner.fields.iter().enumerate() {
                if f.visibility == Visibility::Private || !seen.insert(f.name.clone()) {
                    continue;
                }
                out.push(Member {
                    owner: owner.clone(),
                    kind: MemberKind::Field,
                    index,
                    key: f.name.clone(),
                });
            }
        };
        push(decl, &mut out);
        let classes = supers.iter().filter(|s| s.decl.as_ref().is_some_and(|d| d.is_class()));
        let interfaces = supers.iter().filter(|s| s.decl.as_ref().is_some_and(|d| d.is_interface()));
        for sup in classes.chain(interfaces) {
            push(sup.decl.as_ref().expect("resolved"), &mut out);
        }
        out.sort_by(|a, b| a.key.cmp(&b.key));
        out
    }

    pub fn declared_constructors(&self, decl: &Arc<TypeDecl>) -> Vec<Member> {
        let mut out: Vec<Member> = decl
            .constructors
            .iter()
            .enumerate()
            .map(|(index, c)| Member {
                owner: decl.clone(),
                kind: MemberKind::Constructor,
                index,
                key: c.signature_suffix().to_owned(),
            })
            .collect();
        out.sort_by(|a, b| a.key.cmp(&b.key));
        out
    }

    /// Every member reachable through `decl`, regardless of accessibility.
    pub fn members(&self, decl: &Arc<TypeDecl>) -> Members {
        Members {
            methods: self.all_methods(decl),
            constructors: self.declared_constructors(decl),
            fields: self.all_fields(decl),
        }
    }

    /// Members of `decl` that belong to the API: accessible to clients
    /// through `decl` and not excluded by the filter.
    pub fn api_members(&self, decl: &Arc<TypeDecl>) -> Members {
        let keep = |m: &Member| self.is_member_api(m, decl);
        let mut all = self.members(decl);
        all.methods.retain(keep);
        all.constructors.retain(keep);
        all.fields.retain(keep);
        all
    }

    pub fn is_member_api(&self, member: &Member, context: &TypeDecl) -> bool {
        self.is_member_accessible(member.visibility(), context)
            && !self.is_member_filtered(member.annotations())
    }
}
