//! Rule evaluation for one matched (or removed) type and its members.

use std::collections::HashSet;
use std::sync::Arc;

use super::kind::{BcKind, BreakingChange};
use crate::model::{
    erasure, ApiModel, ExceptionKind, Executable, Member, MemberKind, Members, Modifier,
    QualifiedName, TypeDecl, TypeParam, TypeRef,
};

fn change(kind: BcKind, symbol: QualifiedName, decl_or_member: &crate::model::SourceLocation) -> BreakingChange {
    BreakingChange::new(kind, symbol, decl_or_member.clone())
}

/// Every change attributed to old API type `t`.
pub(super) fn type_changes(
    old: &ApiModel,
    new: &ApiModel,
    t: &Arc<TypeDecl>,
    gone: &HashSet<QualifiedName>,
) -> Vec<BreakingChange> {
    let mut out = Vec::new();
    if gone.contains(&t.id) {
        // Nested types of a removed type go with their container.
        let container_gone = t.enclosing_type.as_ref().is_some_and(|e| gone.contains(e));
        if !container_gone {
            out.push(change(BcKind::TypeRemoved, t.id.clone(), &t.location));
        }
        return out;
    }
    let Some(n) = new.get(&t.id).cloned() else {
        return out;
    };
    if new.is_filtered(&n) {
        return out;
    }
    type_rules(old, new, t, &n, &mut out);
    let old_members = old.members(t);
    let new_members = new.members(&n);
    abstract_method_added(old, new, t, &n, &old_members, &new_members, &mut out);
    member_rules(old, new, t, &n, &old_members, &new_members, &mut out);
    out
}

/// Type variables renamed to their position so that `<T>` and `<U>` compare equal.
struct Positional {
    names: Vec<(String, String)>,
}

impl Positional {
    fn new(method: &[TypeParam], owner: &[TypeParam]) -> Self {
        let mut names = Vec::with_capacity(method.len() + owner.len());
        names.extend(method.iter().enumerate().map(|(i, p)| (p.name.clone(), format!("#m{i}"))));
        names.extend(owner.iter().enumerate().map(|(i, p)| (p.name.clone(), format!("#t{i}"))));
        Positional { names }
    }

    fn apply(&self, ty: &TypeRef) -> TypeRef {
        ty.substitute(&|v| {
            self.names
                .iter()
                .find(|(name, _)| name == v)
                .map(|(_, token)| TypeRef::TypeVar(token.clone()))
        })
    }
}

fn bounds_strengthened(
    new: &ApiModel,
    old_param: &TypeParam,
    new_param: &TypeParam,
    old_pos: &Positional,
    new_pos: &Positional,
) -> bool {
    let old_bounds: Vec<TypeRef> = old_param.effective_bounds().iter().map(|b| old_pos.apply(b)).collect();
    new_param.effective_bounds().iter().any(|b_new| {
        let b_new = new_pos.apply(b_new);
        !old_bounds.iter().any(|b_old| new.is_subtype(b_old, &b_new))
    })
}

fn is_exported_supertype(old: &ApiModel, decl: Option<&Arc<TypeDecl>>) -> bool {
    match decl {
        // Dangling supertypes cannot be checked; assume clients can see them.
        None => true,
        Some(d) => old.is_exported(d) && !(old.get(&d.id).is_some() && old.is_filtered(d)),
    }
}

fn type_rules(old: &ApiModel, new: &ApiModel, t: &TypeDecl, n: &TypeDecl, out: &mut Vec<BreakingChange>) {
    let emit = |out: &mut Vec<BreakingChange>, kind| out.push(change(kind, t.id.clone(), &t.location));
    if t.kind != n.kind {
        emit(out, BcKind::TypeKindChanged);
    }
    if t.visibility.is_public() && n.visibility.is_protected() {
        emit(out, BcKind::TypeNowProtected);
    }
    let supertype_removed = old.all_supertypes(t).iter().any(|s| {
        is_exported_supertype(old, s.decl.as_ref()) && !new.is_subtype_name(&n.id, &s.name)
    });
    if supertype_removed {
        emit(out, BcKind::SupertypeRemoved);
    }
    let (tv, tv_new) = (t.type_params.len(), n.type_params.len());
    if tv > tv_new {
        emit(out, BcKind::TypeVariableRemoved);
    }
    if tv_new > tv && tv > 0 {
        emit(out, BcKind::TypeVariableAdded);
    }
    let old_pos = Positional::new(&[], &t.type_params);
    let new_pos = Positional::new(&[], &n.type_params);
    if t
        .type_params
        .iter()
        .zip(&n.type_params)
        .any(|(a, b)| bounds_strengthened(new, a, b, &old_pos, &new_pos))
    {
        emit(out, BcKind::TypeVariableChanged);
    }
    if !old.is_effectively_final(t) && new.is_effectively_final(n) {
        emit(out, BcKind::TypeNowFinal);
    }
    if !old.is_effectively_abstract(t) && new.is_effectively_abstract(n) {
        emit(out, BcKind::TypeNowAbstract);
    }
    if t.nested && n.nested {
        if !t.is_static() && n.is_static() {
            emit(out, BcKind::NestedTypeNowStatic);
        }
        if t.is_static() && !n.is_static() {
            emit(out, BcKind::NestedTypeNoLongerStatic);
        }
    }
    if old.exception_kind(&t.id) == ExceptionKind::Unchecked
        && new.exception_kind(&n.id) == ExceptionKind::Checked
    {
        emit(out, BcKind::ClassNowCheckedException);
    }
}

/// Public `java.lang.Object` methods: an interface re-declaring one of them
/// abstractly does not oblige implementors to do anything.
fn is_object_method(model: &ApiModel, key: &str) -> bool {
    model
        .lookup_str(crate::model::OBJECT)
        .is_some_and(|o| o.methods.iter().any(|m| m.visibility.is_public() && m.signature_suffix() == key))
        || matches!(key, "equals(java.lang.Object)" | "hashCode()" | "toString()")
}

fn abstract_method_added(
    old: &ApiModel,
    new: &ApiModel,
    t: &TypeDecl,
    n: &TypeDecl,
    old_members: &Members,
    new_members: &Members,
    out: &mut Vec<BreakingChange>,
) {
    // Nobody can implement or extend an effectively final type.
    if old.is_effectively_final(t) || new.is_effectively_final(n) {
        return;
    }
    let added = new_members.methods.iter().any(|m| {
        m.modifiers().contains(&Modifier::Abstract)
            && !new.is_member_filtered(m.annotations())
            && old_members.find(MemberKind::Method, &m.key).is_none()
            && !(m.owner.is_interface() && is_object_method(new, &m.key))
    });
    if added {
        out.push(change(BcKind::AbstractMethodAddedToType, t.id.clone(), &t.location));
    }
}

fn member_rules(
    old: &ApiModel,
    new: &ApiModel,
    t: &TypeDecl,
    n: &TypeDecl,
    old_members: &Members,
    new_members: &Members,
    out: &mut Vec<BreakingChange>,
) {
    for m in old_members.all() {
        if !old.is_member_api(m, t) {
            continue;
        }
        // Inherited from another API type: reported there.
        if !m.is_declared_in(t) && old.is_api_type(&m.owner.id) {
            continue;
        }
        // Every reference type keeps Object's members.
        if m.owner.id.as_str() == "java.lang.Object" {
            continue;
        }
        let symbol = m.id(t);
        let Some(m_new) = new_members.find(m.kind, &m.key) else {
            let kind = match m.kind {
                MemberKind::Field => BcKind::FieldRemoved,
                _ => BcKind::ExecutableRemoved,
            };
            out.push(change(kind, symbol, m.location()));
            continue;
        };
        if new.is_member_filtered(m_new.annotations()) {
            continue;
        }
        let emit = |out: &mut Vec<BreakingChange>, kind| out.push(change(kind, symbol.clone(), m.location()));
        if m.visibility().is_public() && m_new.visibility().is_protected() {
            emit(
                out,
                if m.kind == MemberKind::Field {
                    BcKind::FieldNowProtected
                } else {
                    BcKind::ExecutableNowProtected
                },
            );
        }
        match m.kind {
            MemberKind::Field => field_rules(old, new, m, m_new, out, &emit),
            _ => {
                let (e, e_new) = (m.executable().expect("executable"), m_new.executable().expect("executable"));
                let old_scope = old.type_scope(&m.owner);
                let new_scope = new.type_scope(&m_new.owner);
                let old_pos = Positional::new(&e.type_params, &old_scope);
                let new_pos = Positional::new(&e_new.type_params, &new_scope);
                executable_rules(old, new, e, e_new, (&old_scope, &new_scope), (&old_pos, &new_pos), out, &emit);
                if m.kind == MemberKind::Method {
                    method_rules(old, new, t, n, e, e_new, (&old_pos, &new_pos), out, &emit);
                }
            }
        }
    }
}

/// Names of checked (or undecidable) exceptions in a `throws` clause.
fn checked_thrown(model: &ApiModel, e: &Executable, scope: &[TypeParam]) -> Vec<QualifiedName> {
    e.thrown
        .iter()
        .map(|t| QualifiedName::new(erasure::erase(t, &[&e.type_params, scope])))
        .filter(|name| {
            matches!(
                model.exception_kind(name),
                ExceptionKind::Checked | ExceptionKind::Unknown
            )
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn executable_rules(
    old: &ApiModel,
    new: &ApiModel,
    e: &Executable,
    e_new: &Executable,
    scopes: (&[TypeParam], &[TypeParam]),
    positional: (&Positional, &Positional),
    out: &mut Vec<BreakingChange>,
    emit: &impl Fn(&mut Vec<BreakingChange>, BcKind),
) {
    let thrown = checked_thrown(old, e, scopes.0);
    let thrown_new = checked_thrown(new, e_new, scopes.1);
    if thrown
        .iter()
        .any(|t| !thrown_new.iter().any(|t_new| new.is_subtype_name(t_new, t)))
    {
        emit(out, BcKind::ExecutableCheckedExceptionRemoved);
    }
    if thrown_new
        .iter()
        .any(|t_new| !thrown.iter().any(|t| new.is_subtype_name(t_new, t)))
    {
        emit(out, BcKind::ExecutableCheckedExceptionAdded);
    }
    if e
        .params
        .iter()
        .zip(&e_new.params)
        .any(|(p, q)| p.ty.type_args().len() != q.ty.type_args().len())
    {
        emit(out, BcKind::ExecutableParameterGenericsChanged);
    }
    let (tv, tv_new) = (e.type_params.len(), e_new.type_params.len());
    if tv > tv_new && (e.is_method() || tv > 1) {
        emit(out, BcKind::ExecutableTypeVariableRemoved);
    }
    if tv_new > tv && tv > 0 {
        emit(out, BcKind::ExecutableTypeVariableAdded);
    }
    if e
        .type_params
        .iter()
        .zip(&e_new.type_params)
        .any(|(a, b)| bounds_strengthened(new, a, b, positional.0, positional.1))
    {
        emit(out, BcKind::ExecutableTypeVariableChanged);
    }
}

#[allow(clippy::too_many_arguments)]
fn method_rules(
    old: &ApiModel,
    new: &ApiModel,
    t: &TypeDecl,
    n: &TypeDecl,
    m: &Executable,
    m_new: &Executable,
    positional: (&Positional, &Positional),
    out: &mut Vec<BreakingChange>,
    emit: &impl Fn(&mut Vec<BreakingChange>, BcKind),
) {
    let type_now_final = !old.is_effectively_final(t) && new.is_effectively_final(n);
    let final_old = m.has(Modifier::Final) || old.is_effectively_final(t);
    let final_new = m_new.has(Modifier::Final) || new.is_effectively_final(n);
    // A type turning final already accounts for all its methods.
    if !final_old && final_new && !type_now_final {
        emit(out, BcKind::MethodNowFinal);
    }
    if !m.is_static() && m_new.is_static() {
        emit(out, BcKind::MethodNowStatic);
    }
    if m.is_static() && !m_new.is_static() {
        emit(out, BcKind::MethodNoLongerStatic);
    }
    if !m.is_abstract() && m_new.is_abstract() {
        emit(out, BcKind::MethodNowAbstract);
    }
    let ret = m.return_type.as_ref().map(|r| positional.0.apply(r));
    let ret_new = m_new.return_type.as_ref().map(|r| positional.1.apply(r));
    if ret != ret_new {
        emit(out, BcKind::MethodReturnTypeChanged);
    }
}

fn field_rules(
    old: &ApiModel,
    new: &ApiModel,
    f: &Member,
    f_new: &Member,
    out: &mut Vec<BreakingChange>,
    emit: &impl Fn(&mut Vec<BreakingChange>, BcKind),
) {
    let (a, b) = (f.field().expect("field"), f_new.field().expect("field"));
    if !a.has(Modifier::Final) && b.has(Modifier::Final) {
        emit(out, BcKind::FieldNowFinal);
    }
    if !a.is_static() && b.is_static() {
        emit(out, BcKind::FieldNowStatic);
    }
    if a.is_static() && !b.is_static() {
        emit(out, BcKind::FieldNoLongerStatic);
    }
    let pa = Positional::new(&[], &old.type_scope(&f.owner));
    let pb = Positional::new(&[], &new.type_scope(&f_new.owner));
    if pa.apply(&a.ty) != pb.apply(&b.ty) {
        emit(out, BcKind::FieldTypeChanged);
    }
}
