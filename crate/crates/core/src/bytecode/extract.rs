use std::collections::HashMap;

use super::reader::*;
use super::signature::{
    parse_class_signature, parse_field_descriptor, parse_field_signature, parse_method_descriptor,
    parse_method_signature,
};
use crate::error::ClassFileError;
use crate::model::{
    erasure, Executable, ExecutableKind, FieldDecl, Modifier, Modifiers, Param, QualifiedName,
    SourceLocation, TypeDecl, TypeKind, TypeRef, Visibility,
};

/// Maps internal names to canonical names using the class file's own
/// inner-class table (every nested class a file mentions must be listed).
struct Names<'a> {
    inner: HashMap<&'a str, (&'a str, &'a str)>,
}

impl<'a> Names<'a> {
    fn new(summary: &'a ClassFileSummary) -> Self {
        let inner = summary
            .inner_classes
            .iter()
            .filter_map(|r| match (&r.outer, &r.inner_name) {
                (Some(outer), Some(name)) => Some((r.inner.as_str(), (outer.as_str(), name.as_str()))),
                _ => None,
            })
            .collect();
        Names { inner }
    }

    fn canonical(&self, internal: &str) -> String {
        let mut out = String::with_capacity(internal.len());
        self.write(internal, &mut out, 0);
        out
    }

    fn write(&self, internal: &str, out: &mut String, depth: usize) {
        match self.inner.get(internal) {
            Some((outer, name)) if depth < 32 => {
                self.write(outer, out, depth + 1);
                out.push('.');
                out.push_str(name);
            }
            _ => out.extend(internal.chars().map(|c| if c == '/' { '.' } else { c })),
        }
    }
}

fn visibility(flags: u16) -> Visibility {
    if flags & ACC_PUBLIC != 0 {
        Visibility::Public
    } else if flags & ACC_PROTECTED != 0 {
        Visibility::Protected
    } else if flags & ACC_PRIVATE != 0 {
        Visibility::Private
    } else {
        Visibility::PackagePrivate
    }
}

fn annotation_names(descriptors: &[String], names: &Names<'_>) -> Vec<QualifiedName> {
    let mut out: Vec<QualifiedName> = descriptors
        .iter()
        .filter_map(|d| d.strip_prefix('L').and_then(|d| d.strip_suffix(';')))
        .map(|internal| QualifiedName::new(names.canonical(internal)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Turns a class-file summary into a declaration.
///
/// Returns `None` for files that never declare API types: local and
/// anonymous classes, synthetic classes, `module-info` and `package-info`.
/// Private and package-private members are dropped here; the type itself is
/// kept whatever its visibility so that hierarchies stay complete.
pub fn summary_to_decl(
    summary: &ClassFileSummary,
    file: &str,
) -> Result<Option<TypeDecl>, ClassFileError> {
    let binary = summary.binary_name.as_str();
    if binary.ends_with("module-info")
        || binary.ends_with("package-info")
        || summary.access_flags & ACC_SYNTHETIC != 0
        || summary.enclosing_method
    {
        return Ok(None);
    }
    let names = Names::new(summary);
    let own = summary.inner_classes.iter().find(|r| r.inner == binary);
    if let Some(record) = own {
        if record.outer.is_none() || record.inner_name.is_none() {
            return Ok(None);
        }
    }
    let canonical = |s: &str| names.canonical(s);
    let id = QualifiedName::new(names.canonical(binary));
    let package = binary
        .rfind('/')
        .map(|i| binary[..i].replace('/', "."))
        .unwrap_or_default();

    let class_flags = summary.access_flags;
    let kind = if class_flags & ACC_ANNOTATION != 0 {
        TypeKind::Annotation
    } else if class_flags & ACC_INTERFACE != 0 {
        TypeKind::Interface
    } else if class_flags & ACC_ENUM != 0 && summary.super_name.as_deref() == Some("java/lang/Enum")
    {
        TypeKind::Enum
    } else if summary.super_name.as_deref() == Some("java/lang/Record") {
        TypeKind::Record
    } else {
        TypeKind::Class
    };

    let (flags, nested, enclosing_type) = match own {
        Some(record) => (
            record.access_flags,
            true,
            record.outer.as_deref().map(|o| QualifiedName::new(names.canonical(o))),
        ),
        None => (class_flags, false, None),
    };
    let mut modifiers = Modifiers::new();
    if flags & ACC_ABSTRACT != 0 && kind == TypeKind::Class {
        modifiers.insert(Modifier::Abstract);
    }
    if nested && (flags & ACC_STATIC != 0 || kind != TypeKind::Class) {
        modifiers.insert(Modifier::Static);
    }
    match kind {
        TypeKind::Record => {
            modifiers.insert(Modifier::Final);
        }
        TypeKind::Enum => {
            // Enums with constant bodies are not final; they are closed all the same.
            modifiers.insert(if class_flags & ACC_FINAL != 0 {
                Modifier::Final
            } else {
                Modifier::Sealed
            });
        }
        _ => {
            if flags & ACC_FINAL != 0 {
                modifiers.insert(Modifier::Final);
            } else if summary.permitted_subclasses {
                modifiers.insert(Modifier::Sealed);
            }
        }
    }
    let visibility = if nested {
        visibility(flags)
    } else if class_flags & ACC_PUBLIC != 0 {
        Visibility::Public
    } else {
        Visibility::PackagePrivate
    };

    let (type_params, mut super_class, interfaces) = match &summary.signature {
        Some(sig) => {
            let s = parse_class_signature(sig, &canonical)?;
            (s.type_params, Some(s.super_class), s.interfaces)
        }
        None => (
            Vec::new(),
            summary
                .super_name
                .as_deref()
                .map(|s| TypeRef::declared(names.canonical(s))),
            summary
                .interfaces
                .iter()
                .map(|i| TypeRef::declared(names.canonical(i)))
                .collect(),
        ),
    };
    if kind.is_interface_like() {
        super_class = None;
    }

    let location = SourceLocation::new(file, None);
    let mut decl = TypeDecl {
        id: id.clone(),
        package,
        kind,
        visibility,
        modifiers,
        annotations: annotation_names(&summary.annotations, &names),
        type_params,
        super_class,
        interfaces,
        fields: Vec::new(),
        methods: Vec::new(),
        constructors: Vec::new(),
        enclosing_type,
        nested,
        location: location.clone(),
    };

    for f in &summary.fields {
        if f.access_flags & ACC_SYNTHETIC != 0 || !visibility_of(f.access_flags).is_visible_outside_package() {
            continue;
        }
        let ty = match &f.signature {
            Some(sig) => parse_field_signature(sig, &canonical)?,
            None => parse_field_descriptor(&f.descriptor, &canonical)?,
        };
        let mut modifiers = Modifiers::new();
        for (flag, m) in [
            (ACC_STATIC, Modifier::Static),
            (ACC_FINAL, Modifier::Final),
            (ACC_TRANSIENT, Modifier::Transient),
            (ACC_VOLATILE, Modifier::Volatile),
        ] {
            if f.access_flags & flag != 0 {
                modifiers.insert(m);
            }
        }
        decl.fields.push(FieldDecl {
            id: id.member(&f.name),
            name: f.name.clone(),
            visibility: visibility_of(f.access_flags),
            modifiers,
            annotations: annotation_names(&f.annotations, &names),
            ty,
            location: location.clone(),
        });
    }

    // Inner (non-static member) classes get the outer instance as an extra
    // leading constructor parameter in the descriptor.
    let inner_instance = nested && !decl.is_static() && kind == TypeKind::Class;
    let scope = [decl.type_params.as_slice()];
    for m in &summary.methods {
        let flags = m.access_flags;
        if flags & (ACC_SYNTHETIC | ACC_BRIDGE) != 0
            || m.name == "<clinit>"
            || !visibility_of(flags).is_visible_outside_package()
        {
            continue;
        }
        let constructor = m.name == "<init>";
        let (mut erased_params, erased_return) = parse_method_descriptor(&m.descriptor, &canonical)?;
        let mut names_from_attr: Option<Vec<Option<String>>> = m
            .parameters
            .as_ref()
            .map(|ps| ps.iter().map(|(n, _)| n.clone()).collect());
        if constructor && inner_instance && !erased_params.is_empty() {
            erased_params.remove(0);
            if let Some(names) = names_from_attr.as_mut() {
                if names.len() == erased_params.len() + 1 {
                    names.remove(0);
                }
            }
        }
        let (type_params, mut params, return_type, thrown) = match &m.signature {
            Some(sig) => {
                let s = parse_method_signature(sig, &canonical)?;
                let thrown = if s.thrown.is_empty() {
                    exceptions(m, &names)
                } else {
                    s.thrown
                };
                (s.type_params, s.params, s.return_type, thrown)
            }
            None => (Vec::new(), erased_params.clone(), erased_return, exceptions(m, &names)),
        };
        if params.len() != erased_params.len() {
            params = erased_params.clone();
        }
        let count = params.len();
        let varargs = flags & ACC_VARARGS != 0;
        let params: Vec<Param> = params
            .into_iter()
            .enumerate()
            .map(|(i, ty)| Param {
                name: names_from_attr
                    .as_ref()
                    .filter(|n| n.len() == count)
                    .and_then(|n| n[i].clone())
                    .unwrap_or_else(|| format!("arg{i}")),
                ty,
                varargs: varargs && i + 1 == count,
            })
            .collect();

        let mut modifiers = Modifiers::new();
        for (flag, modifier) in [
            (ACC_STATIC, Modifier::Static),
            (ACC_FINAL, Modifier::Final),
            (ACC_SYNCHRONIZED, Modifier::Synchronized),
            (ACC_NATIVE, Modifier::Native),
            (ACC_ABSTRACT, Modifier::Abstract),
        ] {
            if flags & flag != 0 {
                modifiers.insert(modifier);
            }
        }
        if kind.is_interface_like() && flags & (ACC_ABSTRACT | ACC_STATIC) == 0 {
            modifiers.insert(Modifier::Default);
        }
        let name = if constructor {
            id.simple_name().to_owned()
        } else {
            m.name.clone()
        };
        let erased: Vec<Param> = erased_params
            .into_iter()
            .map(|ty| Param {
                name: String::new(),
                ty,
                varargs: false,
            })
            .collect();
        let exec_id = id.member(&erasure::erased_suffix(&name, &erased, &scope));
        let exec = Executable {
            id: exec_id,
            kind: if constructor {
                ExecutableKind::Constructor
            } else {
                ExecutableKind::Method
            },
            name,
            visibility: visibility_of(flags),
            modifiers,
            annotations: annotation_names(&m.annotations, &names),
            type_params,
            params,
            return_type: if constructor { None } else { Some(return_type) },
            thrown,
            location: location.clone(),
        };
        if constructor {
            decl.constructors.push(exec);
        } else {
            decl.methods.push(exec);
        }
    }
    decl.fields.sort_by(|a, b| a.id.cmp(&b.id));
    decl.methods.sort_by(|a, b| a.id.cmp(&b.id));
    decl.constructors.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Some(decl))
}

fn visibility_of(flags: u16) -> Visibility {
    visibility(flags)
}

fn exceptions(m: &MemberInfo, names: &Names<'_>) -> Vec<TypeRef> {
    m.exceptions
        .iter()
        .map(|e| TypeRef::declared(names.canonical(e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_follow_inner_class_records() {
        let summary = ClassFileSummary {
            binary_name: "p/Outer$Mid$In".into(),
            inner_classes: vec![
                InnerClassRecord {
                    inner: "p/Outer$Mid$In".into(),
                    outer: Some("p/Outer$Mid".into()),
                    inner_name: Some("In".into()),
                    access_flags: ACC_PUBLIC | ACC_STATIC,
                },
                InnerClassRecord {
                    inner: "p/Outer$Mid".into(),
                    outer: Some("p/Outer".into()),
                    inner_name: Some("Mid".into()),
                    access_flags: ACC_PUBLIC,
                },
            ],
            ..ClassFileSummary::default()
        };
        let names = Names::new(&summary);
        assert_eq!(names.canonical("p/Outer$Mid$In"), "p.Outer.Mid.In");
        // A `$` that is not a nesting boundary is kept.
        assert_eq!(names.canonical("p/Weird$Name"), "p.Weird$Name");
    }

    #[test]
    fn anonymous_classes_are_skipped() {
        let summary = ClassFileSummary {
            major_version: 61,
            binary_name: "p/A$1".into(),
            super_name: Some("java/lang/Object".into()),
            inner_classes: vec![InnerClassRecord {
                inner: "p/A$1".into(),
                outer: None,
                inner_name: None,
                access_flags: 0,
            }],
            ..ClassFileSummary::default()
        };
        assert_eq!(summary_to_decl(&summary, "p/A$1.class").unwrap(), None);
    }
}
