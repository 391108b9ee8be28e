use super::decl::{Executable, Param, TypeParam};
use super::name::QualifiedName;
use super::typeref::{TypeRef, WildcardBound, OBJECT};

/// Type-parameter scopes, innermost first (method, then its type, then
/// enclosing types for inner classes).
pub type Scopes<'a> = [&'a [TypeParam]];

/// Erasure of a type reference as written in identities.
///
/// Declared types lose their arguments, type variables erase to the erasure
/// of their leftmost bound, arrays keep their `[]` suffixes.
pub fn erase(ty: &TypeRef, scopes: &Scopes<'_>) -> String {
    let mut out = String::new();
    erase_into(ty, scopes, &mut out, 0);
    out
}

fn erase_into(ty: &TypeRef, scopes: &Scopes<'_>, out: &mut String, depth: usize) {
    match ty {
        TypeRef::Primitive(p) => out.push_str(p.keyword()),
        TypeRef::Declared { name, .. } => out.push_str(name.as_str()),
        TypeRef::Array { component, dims } => {
            erase_into(component, scopes, out, depth);
            for _ in 0..*dims {
                out.push_str("[]");
            }
        }
        TypeRef::TypeVar(var) => match lookup(var, scopes) {
            // Guard against `<T extends U, U extends T>` style nonsense.
            Some(bound) if depth < 16 => erase_into(&bound, scopes, out, depth + 1),
            _ => out.push_str(OBJECT),
        },
        TypeRef::Wildcard(Some(WildcardBound::Extends(t))) => erase_into(t, scopes, out, depth),
        TypeRef::Wildcard(_) => out.push_str(OBJECT),
    }
}

fn lookup(var: &str, scopes: &Scopes<'_>) -> Option<TypeRef> {
    scopes
        .iter()
        .flat_map(|scope| scope.iter())
        .find(|p| p.name == var)
        .map(|p| p.bounds.first().cloned().unwrap_or_else(TypeRef::object))
}

/// `name(erased,params)`.
pub fn erased_suffix(name: &str, params: &[Param], scopes: &Scopes<'_>) -> String {
    let mut out = String::with_capacity(name.len() + 2 + params.len() * 16);
    out.push_str(name);
    out.push('(');
    for (i, p) in params.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        erase_into(&p.ty, scopes, &mut out, 0);
    }
    out.push(')');
    out
}

/// Fully qualified erased identity of an executable declared in `owner`.
///
/// `owner_scopes` holds the type parameters visible from the owner (its own,
/// then those of enclosing types when it is an inner class).
pub fn erased_signature(
    owner: &QualifiedName,
    executable: &Executable,
    owner_scopes: &Scopes<'_>,
) -> QualifiedName {
    let mut scopes: Vec<&[TypeParam]> = Vec::with_capacity(owner_scopes.len() + 1);
    scopes.push(&executable.type_params);
    scopes.extend_from_slice(owner_scopes);
    owner.member(&erased_suffix(&executable.name, &executable.params, &scopes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::decl::{ExecutableKind, SourceLocation, Visibility};
    use crate::model::typeref::Primitive;

    fn method(name: &str, type_params: Vec<TypeParam>, params: Vec<TypeRef>) -> Executable {
        Executable {
            id: QualifiedName::new("unused"),
            kind: ExecutableKind::Method,
            name: name.into(),
            visibility: Visibility::Public,
            modifiers: Default::default(),
            annotations: vec![],
            type_params,
            params: params
                .into_iter()
                .enumerate()
                .map(|(i, ty)| Param {
                    name: format!("arg{i}"),
                    ty,
                    varargs: false,
                })
                .collect(),
            return_type: Some(TypeRef::Primitive(Primitive::Void)),
            thrown: vec![],
            location: SourceLocation::new("C.java", None),
        }
    }

    #[test]
    fn string_char_at() {
        let m = method("charAt", vec![], vec![TypeRef::Primitive(Primitive::Int)]);
        let id = erased_signature(&"java.lang.String".into(), &m, &[]);
        assert_eq!(id, "java.lang.String.charAt(int)");
    }

    #[test]
    fn bounded_type_variable_erases_to_bound() {
        let t = TypeParam::new("T", vec![TypeRef::declared("java.lang.Number")]);
        let m = method("m", vec![t], vec![TypeRef::TypeVar("T".into())]);
        assert_eq!(
            erased_signature(&"pkg.C".into(), &m, &[]),
            "pkg.C.m(java.lang.Number)"
        );
    }

    #[test]
    fn generic_varargs_erase_to_raw_array() {
        let list = TypeRef::parameterized("java.util.List", vec![TypeRef::declared("java.lang.String")]);
        let m = method("m", vec![], vec![TypeRef::array_of(list, 1)]);
        assert_eq!(
            erased_signature(&"pkg.C".into(), &m, &[]),
            "pkg.C.m(java.util.List[])"
        );
    }

    #[test]
    fn class_type_variable_and_chained_bounds() {
        let class_params = vec![
            TypeParam::new("E", vec![]),
            TypeParam::new("K", vec![TypeRef::TypeVar("V".into())]),
            TypeParam::new(
                "V",
                vec![
                    TypeRef::declared("java.lang.CharSequence"),
                    TypeRef::declared("java.lang.Comparable"),
                ],
            ),
        ];
        let m = method(
            "put",
            vec![],
            vec![
                TypeRef::TypeVar("E".into()),
                TypeRef::array_of(TypeRef::TypeVar("K".into()), 2),
            ],
        );
        assert_eq!(
            erased_signature(&"p.Map".into(), &m, &[&class_params]),
            "p.Map.put(java.lang.Object,java.lang.CharSequence[][])"
        );
    }

    #[test]
    fn method_type_parameter_shadows_class_parameter() {
        let class_params = vec![TypeParam::new("T", vec![TypeRef::declared("java.lang.Number")])];
        let m = method("m", vec![TypeParam::new("T", vec![])], vec![TypeRef::TypeVar("T".into())]);
        assert_eq!(
            erased_signature(&"p.C".into(), &m, &[&class_params]),
            "p.C.m(java.lang.Object)"
        );
    }
}
